#include "gpm/linprog.hpp"

#include <limits>
#include <stdexcept>

namespace gpm {

namespace {

// Equality standard form: rows A x~ = b with b >= 0 over nonnegative
// variables x~ = (u, v, slacks, artificials), original x = u - v.
struct Standard {
  std::size_t n = 0;        // original variable count
  std::size_t m = 0;        // rows (one per original constraint)
  std::size_t num_slack = 0;
  RatMat a;                 // m x ncols
  RatVec b;                 // m, all >= 0
  std::vector<int> row_sign;  // +1/-1: sign applied to make b nonnegative
  std::size_t ncols = 0;
  std::size_t art0 = 0;     // first artificial column

  std::size_t ucol(std::size_t j) const { return j; }
  std::size_t vcol(std::size_t j) const { return n + j; }
  bool is_artificial(std::size_t col) const { return col >= art0; }
};

Standard build_standard(const LinearProgram& lp) {
  Standard s;
  s.n = lp.num_vars;
  s.m = lp.constraints.size();
  for (const auto& c : lp.constraints)
    if (c.coeffs.size() != lp.num_vars)
      throw std::invalid_argument("solve_lp: constraint dimension mismatch");
  if (lp.objective.size() != lp.num_vars)
    throw std::invalid_argument("solve_lp: objective dimension mismatch");

  for (const auto& c : lp.constraints)
    if (c.rel != Rel::Eq) ++s.num_slack;
  s.ncols = 2 * s.n + s.num_slack + s.m;
  s.art0 = 2 * s.n + s.num_slack;
  s.a.assign(s.m, RatVec(s.ncols, Rat(0)));
  s.b.assign(s.m, Rat(0));
  s.row_sign.assign(s.m, 1);

  std::size_t slack = 2 * s.n;
  for (std::size_t i = 0; i < s.m; ++i) {
    const auto& c = lp.constraints[i];
    // Le-form: Ge rows are negated so every inequality reads <=.
    int le_sign = (c.rel == Rel::Ge) ? -1 : 1;
    Rat rhs = le_sign * c.rhs;
    for (std::size_t j = 0; j < s.n; ++j) {
      Rat val = le_sign * c.coeffs[j];
      s.a[i][s.ucol(j)] = val;
      s.a[i][s.vcol(j)] = -val;
    }
    if (c.rel != Rel::Eq) s.a[i][slack++] = 1;  // x + slack = rhs
    if (rhs < 0) {
      s.row_sign[i] = -1;
      for (std::size_t j = 0; j < s.ncols; ++j) s.a[i][j] = -s.a[i][j];
      rhs = -rhs;
    }
    s.b[i] = rhs;
    s.a[i][s.art0 + i] = 1;
  }
  return s;
}

class Simplex {
 public:
  explicit Simplex(Standard std_form) : s_(std::move(std_form)) {
    basis_.resize(s_.m);
    for (std::size_t i = 0; i < s_.m; ++i) basis_[i] = s_.art0 + i;
  }

  // Runs one simplex phase to optimality on the given column costs.
  // Returns false when the phase detected an unbounded objective.
  // evict_artificials is the phase-2 rule that pivots level-zero basic
  // artificials out before the regular ratio test, so they can never take
  // a positive value again. Bland's rule everywhere else.
  bool optimize(const RatVec& cost, bool allow_artificial_entering,
                bool evict_artificials) {
    reprice(cost);
    for (;;) {
      std::size_t enter = s_.ncols;
      for (std::size_t j = 0; j < s_.ncols; ++j) {
        if (!allow_artificial_entering && s_.is_artificial(j)) continue;
        if (red_[j] > 0) { enter = j; break; }  // Bland: smallest index
      }
      if (enter == s_.ncols) return true;

      std::size_t leave = s_.m;
      if (evict_artificials) {
        for (std::size_t i = 0; i < s_.m; ++i) {
          if (s_.is_artificial(basis_[i]) && s_.b[i] == 0 && s_.a[i][enter] != 0) {
            leave = i;
            break;
          }
        }
      }
      if (leave == s_.m) {
        bool found = false;
        Rat best_ratio;
        for (std::size_t i = 0; i < s_.m; ++i) {
          if (s_.a[i][enter] <= 0) continue;
          Rat ratio = s_.b[i] / s_.a[i][enter];
          if (!found || ratio < best_ratio ||
              (ratio == best_ratio && basis_[i] < basis_[leave])) {
            found = true;
            best_ratio = ratio;
            leave = i;
          }
        }
        if (!found) return false;  // unbounded direction
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rat piv = s_.a[row][col];
    for (std::size_t j = 0; j < s_.ncols; ++j) s_.a[row][j] /= piv;
    s_.b[row] /= piv;
    for (std::size_t i = 0; i < s_.m; ++i) {
      if (i == row || s_.a[i][col] == 0) continue;
      Rat factor = s_.a[i][col];
      for (std::size_t j = 0; j < s_.ncols; ++j)
        s_.a[i][j] -= factor * s_.a[row][j];
      s_.b[i] -= factor * s_.b[row];
    }
    if (red_[col] != 0) {
      Rat factor = red_[col];
      for (std::size_t j = 0; j < s_.ncols; ++j)
        red_[j] -= factor * s_.a[row][j];
      objval_ += factor * s_.b[row];
    }
    basis_[row] = col;
  }

  void reprice(const RatVec& cost) {
    cost_ = cost;
    red_ = cost;
    objval_ = 0;
    for (std::size_t i = 0; i < s_.m; ++i) {
      Rat cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < s_.ncols; ++j)
        red_[j] -= cb * s_.a[i][j];
      objval_ += cb * s_.b[i];
    }
  }

  // y = c_B B^{-1}, read off the artificial columns (B-inverse image of e_i).
  RatVec dual_multipliers() const {
    RatVec y(s_.m);
    for (std::size_t i = 0; i < s_.m; ++i)
      y[i] = cost_[s_.art0 + i] - red_[s_.art0 + i];
    return y;
  }

  RatVec primal_point() const {
    RatVec x(s_.n, Rat(0));
    for (std::size_t i = 0; i < s_.m; ++i) {
      if (basis_[i] < s_.n)
        x[basis_[i]] += s_.b[i];
      else if (basis_[i] < 2 * s_.n)
        x[basis_[i] - s_.n] -= s_.b[i];
    }
    return x;
  }

  const Rat& objective_value() const { return objval_; }
  const Standard& standard() const { return s_; }

 private:
  Standard s_;
  std::vector<std::size_t> basis_;
  RatVec cost_, red_;
  Rat objval_;
};

// Maps standard-row multipliers back to original-constraint multipliers.
RatVec to_original_dual(const LinearProgram& lp, const Standard& s, const RatVec& y,
                        bool negate) {
  RatVec out(lp.constraints.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rat mu = Rat(s.row_sign[i]) * y[i];
    if (lp.constraints[i].rel == Rel::Ge) mu = -mu;
    out[i] = negate ? Rat(-mu) : mu;
  }
  return out;
}

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
  const bool minimize = lp.sense == Sense::Minimize;
  Standard std_form = build_standard(lp);
  const std::size_t ncols = std_form.ncols;
  const std::size_t art0 = std_form.art0;
  const std::size_t m = std_form.m;
  Simplex simplex(std::move(std_form));

  LpOutcome out;

  // Phase 1: maximize -(sum of artificials).
  RatVec phase1(ncols, Rat(0));
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
  simplex.optimize(phase1, true, false);
  if (simplex.objective_value() < 0) {
    out.status = LpStatus::Infeasible;
    // The phase-1 multipliers y satisfy y b < 0 and y A_j >= 0 on every real
    // column, which maps straight onto the documented Farkas orientation.
    out.certificate =
        to_original_dual(lp, simplex.standard(), simplex.dual_multipliers(), false);
    if (!certificate_valid(lp, out))
      throw std::logic_error("solve_lp: invalid infeasibility certificate");
    return out;
  }

  // Phase 2 on the real objective.
  RatVec phase2(ncols, Rat(0));
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    Rat cj = minimize ? Rat(-lp.objective[j]) : lp.objective[j];
    phase2[j] = cj;
    phase2[lp.num_vars + j] = -cj;
  }
  if (!simplex.optimize(phase2, false, true)) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  out.status = LpStatus::Optimal;
  out.point = simplex.primal_point();
  out.optimum = minimize ? Rat(-simplex.objective_value()) : simplex.objective_value();
  RatVec y = simplex.dual_multipliers();
  out.certificate = to_original_dual(lp, simplex.standard(), y, minimize);
  if (!certificate_valid(lp, out))
    throw std::logic_error("solve_lp: invalid optimality certificate");
  return out;
}

bool certificate_valid(const LinearProgram& lp, const LpOutcome& out) {
  const std::size_t n = lp.num_vars;
  const std::size_t m = lp.constraints.size();
  if (out.status == LpStatus::Unbounded) return true;
  if (out.certificate.size() != m) return false;

  const bool maximize = lp.sense == Sense::Maximize;
  if (out.status == LpStatus::Optimal) {
    if (out.point.size() != n) return false;
    for (const auto& c : lp.constraints) {
      Rat lhs = dot(c.coeffs, out.point);
      if (c.rel == Rel::Le && lhs > c.rhs) return false;
      if (c.rel == Rel::Ge && lhs < c.rhs) return false;
      if (c.rel == Rel::Eq && lhs != c.rhs) return false;
    }
    if (dot(lp.objective, out.point) != out.optimum) return false;
  }

  RatVec combo(n, Rat(0));
  Rat rhs_combo = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Rat& yi = out.certificate[i];
    const auto& c = lp.constraints[i];
    bool le_nonneg = out.status == LpStatus::Infeasible ? true : maximize;
    if (c.rel == Rel::Le && (le_nonneg ? yi < 0 : yi > 0)) return false;
    if (c.rel == Rel::Ge && (le_nonneg ? yi > 0 : yi < 0)) return false;
    if (yi == 0) continue;
    for (std::size_t j = 0; j < n; ++j) combo[j] += yi * c.coeffs[j];
    rhs_combo += yi * c.rhs;
  }
  if (out.status == LpStatus::Infeasible)
    return is_zero_vec(combo) && rhs_combo < 0;
  for (std::size_t j = 0; j < n; ++j)
    if (combo[j] != lp.objective[j]) return false;
  return rhs_combo == out.optimum;
}

}  // namespace gpm
