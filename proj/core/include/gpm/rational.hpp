#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gpm {

/// Exact rational scalar. All cone/state/map verdicts on polyhedral spaces
/// are computed in this type; no rounding ever occurs.
using Rat = boost::multiprecision::mpq_rational;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

Rat rat_from_string(const std::string& s);  // accepts "3", "-1/2", "0.25"
std::string rat_to_string(const Rat& r);    // "p/q" or "p"
double rat_to_double(const Rat& r);

Rat dot(const RatVec& a, const RatVec& b);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& s, const RatVec& a);
RatVec vec_neg(const RatVec& a);
bool is_zero_vec(const RatVec& a);
int lex_compare(const RatVec& a, const RatVec& b);

RatVec zero_vec(std::size_t n);
RatVec unit_vec(std::size_t n, std::size_t k);
RatMat zero_mat(std::size_t n);
RatMat identity_mat(std::size_t n);
RatVec mat_vec(const RatMat& m, const RatVec& x);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat mat_add(const RatMat& a, const RatMat& b);
RatMat mat_sub(const RatMat& a, const RatMat& b);
RatMat mat_scale(const Rat& s, const RatMat& a);
bool mat_equal(const RatMat& a, const RatMat& b);
/// Outer product col * row^T; the matrix of x |-> row.dot(x) * col.
RatMat outer(const RatVec& col, const RatVec& row);

/// Row rank by fraction-free Gaussian elimination (input copied).
std::size_t rank_of(RatMat rows);
/// Exact solution of a square system; nullopt if singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);
/// Basis of {x : rows * x = 0} in R^dim (rows may be empty).
std::vector<RatVec> nullspace(const RatMat& rows, std::size_t dim);

/// Scales by a positive factor so the first nonzero entry is +1 or -1.
/// Canonical representative of a ray or facet normal (orientation kept).
RatVec canonical_ray(RatVec v);

}  // namespace gpm
