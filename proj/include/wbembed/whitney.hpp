#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "wbembed/domain.hpp"

namespace wbembed {

/// Closed dyadic cube prod_i [corner_i * 2^k, (corner_i + 1) * 2^k].
/// Boundary coordinates are exact in binary floating point.
struct DyadicCube {
  int generation = 0;
  std::vector<std::int64_t> corner;

  [[nodiscard]] std::size_t dimension() const { return corner.size(); }
  [[nodiscard]] double side() const;
  [[nodiscard]] Box box() const;
  [[nodiscard]] Point center() const;
  [[nodiscard]] DyadicCube parent() const;
  [[nodiscard]] bool contains(std::span<const double> x) const;
  [[nodiscard]] bool intersects(const DyadicCube& other) const;
  /// "k,c0,c1,...", the key used in serialized output.
  [[nodiscard]] std::string key() const;

  friend bool operator==(const DyadicCube&, const DyadicCube&) = default;
  friend auto operator<=>(const DyadicCube&, const DyadicCube&) = default;
};

/// Dyadic cube of generation k whose half-open cell contains x.
DyadicCube dyadic_cell(std::span<const double> x, int generation);

struct DyadicCubeHash {
  std::size_t operator()(const DyadicCube& q) const noexcept;
};

/// Queries walk at most this many generations before giving up.
inline constexpr int kMaxGenerationWalk = 128;

/// Lazily evaluated Whitney decomposition of a domain.
///
/// A dyadic cube Q is selected when dist(Q, complement) >= sqrt(n) l(Q) and
/// its dyadic parent fails the same test. Along any chain of dyadic ancestors
/// the test passes below a threshold generation and fails above it, so each
/// interior point has exactly one selected cube per chain. The selected
/// family covers the domain with disjoint interiors and satisfies
///   sqrt(n) l(Q) <= dist(Q, complement) < 4 sqrt(n) l(Q),
/// which in turn bounds neighbour side ratios by 4 and neighbour counts by
/// 12^n.
///
/// Selection results and neighbour lists are memoized; the caches are safe
/// for concurrent use.
class WhitneyDecomposition {
 public:
  explicit WhitneyDecomposition(std::shared_ptr<const Domain> domain);

  WhitneyDecomposition(const WhitneyDecomposition&) = delete;
  WhitneyDecomposition& operator=(const WhitneyDecomposition&) = delete;

  [[nodiscard]] const Domain& domain() const { return *domain_; }
  [[nodiscard]] const std::shared_ptr<const Domain>& domain_ptr() const { return domain_; }

  /// dist(Q, complement) >= sqrt(n) l(Q).
  [[nodiscard]] bool passes_margin(const DyadicCube& q) const;
  [[nodiscard]] bool is_whitney_cube(const DyadicCube& q) const;

  /// The selected cube containing x. On shared faces: largest side first,
  /// then lexicographically smallest corner.
  [[nodiscard]] DyadicCube cube_containing(std::span<const double> x) const;

  /// Every selected cube containing x (closed cubes).
  [[nodiscard]] std::vector<DyadicCube> cubes_containing(std::span<const double> x) const;

  /// All selected cubes intersecting q, q included, sorted.
  [[nodiscard]] const std::vector<DyadicCube>& neighbors(const DyadicCube& q) const;

  /// Selected cubes with generation >= min_generation intersecting the box.
  [[nodiscard]] std::vector<DyadicCube> cubes_in_box(const Box& region, int min_generation) const;

 private:
  [[nodiscard]] DyadicCube selected_on_chain(std::span<const double> x) const;
  [[nodiscard]] DyadicCube ascend_to_selected(DyadicCube q) const;

  std::shared_ptr<const Domain> domain_;
  double root_n_;
  mutable std::shared_mutex margin_mutex_;
  mutable std::unordered_map<DyadicCube, bool, DyadicCubeHash> margin_cache_;
  mutable std::shared_mutex neighbor_mutex_;
  mutable std::unordered_map<DyadicCube, std::vector<DyadicCube>, DyadicCubeHash> neighbor_cache_;
};

/// Quantities measured by check_delta_estimates for a pair of points.
struct DeltaEstimateReport {
  DyadicCube cube_x;
  DyadicCube cube_y;
  bool neighbors = false;
  double dist_x = 0.0;       ///< dist(x, complement)
  double dist_y = 0.0;
  double euclidean = 0.0;    ///< |x - y|
  double shortcut = 0.0;     ///< delta(x, y)
  bool boundary_bounds_ok = false;  ///< sqrt(n) l(Q) <= dist <= 5 sqrt(n) l(Q), both points
  bool pair_estimate_ok = false;    ///< equality for neighbours, two-sided bound otherwise
  [[nodiscard]] bool ok() const { return boundary_bounds_ok && pair_estimate_ok; }
};

/// Locates the cubes of x and y and checks the distance-to-boundary bounds
/// and the neighbour / non-neighbour estimates for the shortcut metric.
DeltaEstimateReport check_delta_estimates(const WhitneyDecomposition& w,
                                          std::span<const double> x,
                                          std::span<const double> y);

}  // namespace wbembed
