#pragma once

#include "gpm/rational.hpp"

#include <vector>

namespace gpm {

enum class Rel { Le, Eq, Ge };
enum class Sense { Maximize, Minimize };

struct Constraint {
  RatVec coeffs;
  Rel rel = Rel::Le;
  Rat rhs;
};

struct LinearProgram {
  std::size_t num_vars = 0;
  RatVec objective;  // length num_vars
  std::vector<Constraint> constraints;
  Sense sense = Sense::Maximize;

  Constraint& add(RatVec coeffs, Rel rel, Rat rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
    return constraints.back();
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Exact outcome of a solve. The certificate has one entry per constraint:
///
///  Optimal:    sum_i y_i a_i = c and sum_i y_i b_i = optimum, with
///              y_i >= 0 on Le rows and y_i <= 0 on Ge rows when maximizing
///              (signs flipped when minimizing); Eq rows are free.
///  Infeasible: sum_i y_i a_i = 0 and sum_i y_i b_i < 0, with y_i >= 0 on Le
///              rows and y_i <= 0 on Ge rows (sense-independent Farkas
///              refutation of the constraint system).
///  Unbounded:  certificate empty.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rat optimum;      // valid iff Optimal
  RatVec point;     // valid iff Optimal
  RatVec certificate;
};

/// Two-phase exact rational simplex with Bland's pivot rule. Deterministic:
/// identical inputs yield identical outcomes bit for bit. Every returned
/// certificate is re-verified before the call returns.
LpOutcome solve_lp(const LinearProgram& lp);

/// Recomputes the certificate conditions documented on LpOutcome.
bool certificate_valid(const LinearProgram& lp, const LpOutcome& out);

}  // namespace gpm
