#pragma once

#include "gpm/linprog.hpp"
#include "gpm/rational.hpp"

#include <vector>

namespace gpm {

/// Homogeneous inequality description of a cone: x is a member iff
/// dot(row, x) >= 0 for every row. Lower-dimensional cones are expressed
/// with +/- row pairs.
struct HRep {
  std::size_t dim = 0;
  std::vector<RatVec> rows;
};

/// Generator description of a cone: nonnegative combinations of the rays.
struct VRep {
  std::size_t dim = 0;
  std::vector<RatVec> rays;
};

/// One homogeneous constraint for the double description solver.
struct ConeConstraint {
  RatVec coeffs;
  bool equality = false;
};

/// Minimal double description pair of {x : a x >= 0 (or = 0)}:
/// the cone equals span(lineality) + cone(rays), rays canonically scaled
/// and sorted, lineality in reduced row echelon form.
struct DDPair {
  std::vector<RatVec> lineality;
  std::vector<RatVec> rays;
};

DDPair double_description(std::size_t dim, const std::vector<ConeConstraint>& constraints);

/// Facet enumeration of a pointed cone given by generators. Throws
/// std::invalid_argument with a witness description when the cone is not
/// pointed. The result is minimal: facet normals of the cone together with
/// +/- pairs spanning the orthogonal complement when the rays do not span.
HRep cone_v_to_h(const VRep& rays);

/// Membership in cone(rays) via an H-representation.
bool h_rep_contains(const HRep& h, const RatVec& x);

/// Affine constraint rows for vertex enumeration.
struct AffineConstraint {
  RatVec coeffs;
  Rel rel = Rel::Le;
  Rat rhs;
};

struct VertexEnumeration {
  bool bounded = true;
  std::vector<RatVec> vertices;  // valid iff bounded (and feasible)
  RatVec unbounded_ray;          // witness direction iff !bounded
};

/// Exact vertex enumeration of {x : constraints}. Reports unboundedness with
/// a ray witness; an infeasible system yields an empty vertex list.
VertexEnumeration poly_h_to_v(std::size_t dim, const std::vector<AffineConstraint>& constraints);

/// Extreme rays of cone{x : a x >= 0}, i.e. the minimal V-representation.
VRep cone_h_to_v(const HRep& h);

}  // namespace gpm
