#pragma once

#include <cstddef>
#include <vector>

#include "wbembed/domain.hpp"

namespace wbembed {

struct NonDoublingWitness {
  Point exterior;          ///< a point outside the closure of the domain
  Point anchor;            ///< interior point fixing the circle radius
  std::vector<Point> points;  ///< the z_i, each at distance eps/2 from the complement
  double epsilon = 0.0;
  double max_pair_error = 0.0;      ///< max |delta(z_i, z_j) - eps|
  double max_boundary_error = 0.0;  ///< max |dist(z_i) - eps/2|
};

/// Builds `count` points whose pairwise shortcut distances all equal eps.
/// Points on a circle around an exterior point are walked towards it until
/// their distance to the complement is eps/2 (bisection). Needs n >= 2 and
/// a domain whose closure is not all of R^n. Throws Error when eps is too
/// large for the geometry or the construction does not converge.
NonDoublingWitness nondoubling_witness(const Domain& domain, std::size_t count, double epsilon);

}  // namespace wbembed
