#include "gpm/polyhedra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gpm {

namespace {

struct Ray {
  RatVec v;
  std::vector<bool> tight;  // per processed constraint
};

// Reduced row echelon basis, for a deterministic lineality representation.
std::vector<RatVec> rref_basis(std::vector<RatVec> rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rat p = rows[rank][c];
    for (auto& x : rows[rank]) x /= p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rat factor = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  rows.resize(rank);
  std::sort(rows.begin(), rows.end(), [](const RatVec& a, const RatVec& b) {
    return lex_compare(a, b) < 0;
  });
  return rows;
}

class DoubleDescription {
 public:
  DoubleDescription(std::size_t dim, const std::vector<ConeConstraint>& constraints)
      : dim_(dim) {
    for (const auto& c : constraints)
      if (c.coeffs.size() != dim)
        throw std::invalid_argument("double_description: bad constraint length");
    for (std::size_t k = 0; k < dim; ++k) lineality_.push_back(unit_vec(dim, k));
    for (const auto& c : constraints) add_constraint(c);
  }

  DDPair result() {
    DDPair out;
    out.lineality = rref_basis(lineality_);
    std::set<RatVec> seen;
    for (auto& r : rays_) {
      RatVec v = canonical_ray(r.v);
      if (seen.insert(v).second) out.rays.push_back(std::move(v));
    }
    std::sort(out.rays.begin(), out.rays.end(), [](const RatVec& a, const RatVec& b) {
      return lex_compare(a, b) < 0;
    });
    return out;
  }

 private:
  void add_constraint(const ConeConstraint& c) {
    // A lineality vector with a nonzero product absorbs the constraint:
    // the rest of the representation is projected onto the hyperplane.
    std::size_t l0 = lineality_.size();
    for (std::size_t i = 0; i < lineality_.size(); ++i) {
      if (dot(c.coeffs, lineality_[i]) != 0) { l0 = i; break; }
    }
    if (l0 != lineality_.size()) {
      RatVec pivot = lineality_[l0];
      Rat pv = dot(c.coeffs, pivot);
      if (!c.equality && pv < 0) { pivot = vec_neg(pivot); pv = -pv; }
      std::vector<RatVec> new_lin;
      for (std::size_t i = 0; i < lineality_.size(); ++i) {
        if (i == l0) continue;
        Rat s = dot(c.coeffs, lineality_[i]) / pv;
        new_lin.push_back(vec_sub(lineality_[i], vec_scale(s, pivot)));
      }
      lineality_ = std::move(new_lin);
      for (auto& r : rays_) {
        Rat s = dot(c.coeffs, r.v) / pv;
        if (s != 0) r.v = vec_sub(r.v, vec_scale(s, pivot));
      }
      push_processed(c);
      for (auto& r : rays_) r.tight.push_back(true);
      if (!c.equality) {
        Ray nr{std::move(pivot), std::vector<bool>(processed_.size(), true)};
        nr.tight.back() = false;
        rays_.push_back(std::move(nr));
      }
      return;
    }

    std::vector<std::size_t> pos, zero, neg;
    std::vector<Rat> val(rays_.size());
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      val[i] = dot(c.coeffs, rays_[i].v);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] == 0)
        zero.push_back(i);
      else
        neg.push_back(i);
    }
    std::vector<Ray> next;
    auto keep = [&](std::size_t i, bool tight_here) {
      Ray r = rays_[i];
      r.tight.push_back(tight_here);
      next.push_back(std::move(r));
    };
    for (auto i : zero) keep(i, true);
    if (!c.equality)
      for (auto i : pos) keep(i, false);

    std::size_t all_rank = processed_rank_plus(c);
    std::set<RatVec> emitted;
    for (auto& r : next) emitted.insert(canonical_ray(r.v));
    for (auto p : pos) {
      for (auto n : neg) {
        if (!adjacent(p, n, all_rank)) continue;
        RatVec w = vec_sub(vec_scale(val[p], rays_[n].v), vec_scale(val[n], rays_[p].v));
        RatVec canon = canonical_ray(w);
        if (is_zero_vec(canon) || !emitted.insert(canon).second) continue;
        Ray nr;
        nr.v = std::move(w);
        nr.tight.reserve(processed_.size() + 1);
        for (const auto& pc : processed_) nr.tight.push_back(dot(pc.coeffs, nr.v) == 0);
        nr.tight.push_back(true);
        next.push_back(std::move(nr));
      }
    }
    push_processed(c);
    rays_ = std::move(next);
  }

  // Rank of all processed constraints including the incoming one.
  std::size_t processed_rank_plus(const ConeConstraint& c) const {
    RatMat rows;
    rows.reserve(processed_.size() + 1);
    for (const auto& pc : processed_) rows.push_back(pc.coeffs);
    rows.push_back(c.coeffs);
    return rank_of(std::move(rows));
  }

  // Algebraic adjacency: the face spanned by the two rays has dimension
  // lineality + 2, i.e. the constraints tight at both have rank two less
  // than the full processed system.
  bool adjacent(std::size_t p, std::size_t n, std::size_t all_rank) const {
    RatMat rows;
    for (std::size_t k = 0; k < processed_.size(); ++k) {
      if (rays_[p].tight[k] && rays_[n].tight[k]) rows.push_back(processed_[k].coeffs);
    }
    if (all_rank < 2) return true;
    return rank_of(std::move(rows)) == all_rank - 2;
  }

  void push_processed(const ConeConstraint& c) { processed_.push_back(c); }

  std::size_t dim_;
  std::vector<RatVec> lineality_;
  std::vector<Ray> rays_;
  std::vector<ConeConstraint> processed_;
};

}  // namespace

DDPair double_description(std::size_t dim, const std::vector<ConeConstraint>& constraints) {
  DoubleDescription dd(dim, constraints);
  return dd.result();
}

bool h_rep_contains(const HRep& h, const RatVec& x) {
  if (x.size() != h.dim) throw std::invalid_argument("h_rep_contains: dimension mismatch");
  for (const auto& row : h.rows)
    if (dot(row, x) < 0) return false;
  return true;
}

HRep cone_v_to_h(const VRep& rays) {
  for (const auto& r : rays.rays)
    if (r.size() != rays.dim) throw std::invalid_argument("cone_v_to_h: bad ray length");

  // Pointedness: the only nonnegative combination of rays summing to zero is
  // the trivial one.
  if (!rays.rays.empty()) {
    LinearProgram lp;
    lp.num_vars = rays.rays.size();
    lp.objective.assign(lp.num_vars, Rat(1));
    lp.sense = Sense::Maximize;
    for (std::size_t k = 0; k < rays.dim; ++k) {
      RatVec row(lp.num_vars);
      for (std::size_t j = 0; j < lp.num_vars; ++j) row[j] = rays.rays[j][k];
      lp.add(std::move(row), Rel::Eq, Rat(0));
    }
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      lp.add(unit_vec(lp.num_vars, j), Rel::Ge, Rat(0));
      lp.add(unit_vec(lp.num_vars, j), Rel::Le, Rat(1));
    }
    LpOutcome out = solve_lp(lp);
    if (out.status != LpStatus::Optimal || out.optimum != 0)
      throw std::invalid_argument("cone_v_to_h: cone is not pointed");
  }

  // The polar cone {y : y.r >= 0 for all rays} carries the facets as its
  // extreme rays; leftover lineality spans the orthogonal complement of the
  // rays and is emitted as equality (+/- row) pairs.
  std::vector<ConeConstraint> constraints;
  constraints.reserve(rays.rays.size());
  for (const auto& r : rays.rays) constraints.push_back({r, false});
  DDPair polar = double_description(rays.dim, constraints);

  HRep h;
  h.dim = rays.dim;
  for (const auto& l : polar.lineality) {
    h.rows.push_back(l);
    h.rows.push_back(vec_neg(l));
  }
  for (const auto& r : polar.rays) h.rows.push_back(r);
  return h;
}

VRep cone_h_to_v(const HRep& h) {
  std::vector<ConeConstraint> constraints;
  for (const auto& row : h.rows) constraints.push_back({row, false});
  DDPair dd = double_description(h.dim, constraints);
  if (!dd.lineality.empty())
    throw std::invalid_argument("cone_h_to_v: cone is not pointed");
  VRep v;
  v.dim = h.dim;
  v.rays = dd.rays;
  return v;
}

VertexEnumeration poly_h_to_v(std::size_t dim, const std::vector<AffineConstraint>& constraints) {
  // Homogenization: (x, t) with t >= 0; a x <= b becomes b t - a x >= 0.
  std::vector<ConeConstraint> cone;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != dim) throw std::invalid_argument("poly_h_to_v: bad row length");
    RatVec row(dim + 1);
    int sign = (c.rel == Rel::Le) ? -1 : 1;
    for (std::size_t j = 0; j < dim; ++j) row[j] = sign * c.coeffs[j];
    row[dim] = -sign * c.rhs;
    cone.push_back({std::move(row), c.rel == Rel::Eq});
  }
  {
    RatVec trow = zero_vec(dim + 1);
    trow[dim] = 1;
    cone.push_back({std::move(trow), false});
  }
  DDPair dd = double_description(dim + 1, cone);

  VertexEnumeration out;
  auto as_direction = [&](const RatVec& r) {
    RatVec x(r.begin(), r.begin() + dim);
    return x;
  };
  for (const auto& l : dd.lineality) {
    out.bounded = false;
    out.unbounded_ray = as_direction(l);
    return out;
  }
  for (const auto& r : dd.rays) {
    if (r[dim] == 0) {
      out.bounded = false;
      out.unbounded_ray = as_direction(r);
      return out;
    }
  }
  std::set<RatVec> seen;
  for (const auto& r : dd.rays) {
    RatVec x(dim);
    for (std::size_t j = 0; j < dim; ++j) x[j] = r[j] / r[dim];
    if (seen.insert(x).second) out.vertices.push_back(std::move(x));
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) < 0; });
  return out;
}

}  // namespace gpm
