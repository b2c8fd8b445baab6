#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wbembed/transport.hpp"
#include "wbembed/whitney.hpp"

namespace wbembed {

/// Constants of the bi-Lipschitz bounds; functions of the dimension only.
struct Constants {
  double c0 = 0.0;  ///< upper bound: 2 * 9^2 * 12^n * (n + 1)
  double c1 = 0.0;  ///< close-match threshold: 1 / (48 sqrt n)
  double c2 = 0.0;  ///< boundary lower bound: 4 * 25 * n / c1^2
  double c3 = 0.0;  ///< max(c0, c2)

  static Constants for_dimension(std::size_t n);
};

/// Localization of a Whitney cube: a Lipschitz cutoff times (x - c, l(Q)).
class LocalMap {
 public:
  explicit LocalMap(DyadicCube cube);

  [[nodiscard]] const DyadicCube& cube() const { return cube_; }
  [[nodiscard]] const Point& center() const { return center_; }
  [[nodiscard]] double side() const { return side_; }

  /// Euclidean distance from x to the closed r-neighbourhood of the cube.
  [[nodiscard]] double distance_to_neighbourhood(std::span<const double> x, double r) const;
  /// 1 on B(Q, l/8), 0 outside B(Q, l/4), linear in between.
  [[nodiscard]] double eta(std::span<const double> x) const;
  /// eta(x) * (x - c, l(Q)) in R^(n+1); zero for the boundary point.
  [[nodiscard]] Point lambda(const ShortcutPoint& a) const;
  [[nodiscard]] Point lambda(std::span<const double> x) const;
  /// Pushforward of a tuple, canonically sorted.
  [[nodiscard]] PointCloud push_forward(const UnorderedTuple& p) const;

 private:
  DyadicCube cube_;
  Box box_;
  Point center_;
  double side_;
};

/// Finitely supported element of the l2-sum of tuple spaces over the
/// Whitney cubes. Absent cubes carry the all-zeros tuple.
struct SparseT {
  std::size_t tuple_size = 0;
  std::size_t vector_dimension = 0;
  std::map<DyadicCube, PointCloud> entries;
};

/// Whitney cubes whose localization can be nonzero at some point of p.
std::vector<DyadicCube> candidate_cubes(const WhitneyDecomposition& w, const UnorderedTuple& p);

/// Sum of the localized pushforwards over all Whitney cubes; only nonzero
/// tuples are stored.
SparseT phi_star(const WhitneyDecomposition& w, const UnorderedTuple& p);

/// Squared l2-sum distance: sum over cubes of W2^2 with Euclidean ground cost.
double t_distance_squared(const SparseT& a, const SparseT& b);
double t_distance(const SparseT& a, const SparseT& b);

/// Unit directions in R^dim used by the sorted-projection map.
class DirectionFamily {
 public:
  explicit DirectionFamily(std::vector<Point> directions);

  /// density 0: standard basis. density 1: also (e_i +- e_j)/sqrt 2.
  /// density d >= 2: additionally (d - 1) * dim pseudo-random unit vectors
  /// from a fixed seed.
  static DirectionFamily standard(std::size_t dim, int density = 1);

  [[nodiscard]] std::size_t size() const { return directions_.size(); }
  [[nodiscard]] std::size_t dimension() const { return directions_.front().size(); }
  [[nodiscard]] const std::vector<Point>& directions() const { return directions_; }

 private:
  std::vector<Point> directions_;
};

/// Sorted projections: for each direction, project the tuple, sort
/// descending, concatenate; scaled by h^(-1/2). 1-Lipschitz from W2 and
/// maps the zero tuple to zero.
std::vector<double> almgren_xi(const PointCloud& tuple, const DirectionFamily& family);

/// Finitely supported vector of the Hilbert-space embedding.
struct SparseEmbeddingVector {
  std::size_t tuple_size = 0;  ///< M, the padded tuple size
  std::size_t directions = 0;  ///< h
  std::map<DyadicCube, std::vector<double>> entries;
};

double embedding_distance(const SparseEmbeddingVector& a, const SparseEmbeddingVector& b);

/// Per-cube xi over an element of the l2-sum.
SparseEmbeddingVector xi_prime(const SparseT& t, const DirectionFamily& family);

/// Full embedding of a tuple of at most max_size points: pad to 2 max_size
/// with the boundary point, localize, and apply xi per cube.
SparseEmbeddingVector zeta(const WhitneyDecomposition& w, const DirectionFamily& family,
                           const UnorderedTuple& p, std::size_t max_size);

}  // namespace wbembed
