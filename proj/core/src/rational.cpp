#include "gpm/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpm {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    boost::multiprecision::mpz_int num(s.substr(0, slash));
    boost::multiprecision::mpz_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
  }
  auto point = s.find('.');
  if (point != std::string::npos) {
    std::string digits = s.substr(0, point) + s.substr(point + 1);
    std::size_t frac_len = s.size() - point - 1;
    boost::multiprecision::mpz_int num(digits);
    boost::multiprecision::mpz_int den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rat(num, den);
  }
  return Rat(boost::multiprecision::mpz_int(s));
}

std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_scale(const Rat& s, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

RatVec vec_neg(const RatVec& a) { return vec_scale(Rat(-1), a); }

bool is_zero_vec(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

int lex_compare(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

RatVec unit_vec(std::size_t n, std::size_t k) {
  RatVec v = zero_vec(n);
  v.at(k) = 1;
  return v;
}

RatMat zero_mat(std::size_t n) { return RatMat(n, zero_vec(n)); }

RatMat identity_mat(std::size_t n) {
  RatMat m = zero_mat(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatVec mat_vec(const RatMat& m, const RatVec& x) {
  RatVec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
  return r;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  RatMat r(n, RatVec(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  }
  return r;
}

RatMat mat_add(const RatMat& a, const RatMat& b) {
  RatMat r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = vec_add(a[i], b[i]);
  return r;
}

RatMat mat_sub(const RatMat& a, const RatMat& b) {
  RatMat r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = vec_sub(a[i], b[i]);
  return r;
}

RatMat mat_scale(const Rat& s, const RatMat& a) {
  RatMat r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = vec_scale(s, a[i]);
  return r;
}

bool mat_equal(const RatMat& a, const RatMat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

RatMat outer(const RatVec& col, const RatVec& row) {
  RatMat m(col.size(), RatVec(row.size()));
  for (std::size_t i = 0; i < col.size(); ++i)
    for (std::size_t j = 0; j < row.size(); ++j) m[i][j] = col[i] * row[j];
  return m;
}

std::size_t rank_of(RatMat rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rat factor = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    if (a[i].size() != n) throw std::invalid_argument("solve_square: not square");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat factor = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= factor * a[c][j];
      b[r] -= factor * b[c];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::vector<RatVec> nullspace(const RatMat& rows, std::size_t dim) {
  RatMat a = rows;
  for (auto& r : a)
    if (r.size() != dim) throw std::invalid_argument("nullspace: bad row length");
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < dim && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat factor = a[r][c] / a[rank][c];
      for (std::size_t j = 0; j < dim; ++j) a[r][j] -= factor * a[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t freec = 0; freec < dim; ++freec) {
    if (is_pivot[freec]) continue;
    RatVec v = zero_vec(dim);
    v[freec] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      // a[r] has its pivot at pivot_col[r]; back-substitute the free column.
      v[pivot_col[r]] = -a[r][freec] / a[r][pivot_col[r]];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVec canonical_ray(RatVec v) {
  for (const Rat& x : v) {
    if (x != 0) {
      Rat scale = abs(x);
      for (Rat& y : v) y /= scale;
      return v;
    }
  }
  return v;
}

}  // namespace gpm
