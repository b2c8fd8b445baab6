#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "wbembed/assignment.hpp"
#include "wbembed/domain.hpp"

namespace wbembed {

/// A finite multiset of points of the one-point completion of a domain.
/// Points are kept canonically sorted so equal multisets compare equal.
class UnorderedTuple {
 public:
  UnorderedTuple(std::shared_ptr<const Domain> domain, std::vector<ShortcutPoint> points);
  /// Interior points from coordinates plus `boundary_count` copies of the
  /// boundary point.
  static UnorderedTuple from_coords(std::shared_ptr<const Domain> domain,
                                    const std::vector<Point>& coords,
                                    std::size_t boundary_count = 0);

  [[nodiscard]] const Domain& domain() const { return *domain_; }
  [[nodiscard]] const std::shared_ptr<const Domain>& domain_ptr() const { return domain_; }
  [[nodiscard]] const std::vector<ShortcutPoint>& points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] std::size_t boundary_count() const;
  [[nodiscard]] std::size_t interior_count() const { return size() - boundary_count(); }
  [[nodiscard]] std::vector<Point> interior_coords() const;

  friend bool operator==(const UnorderedTuple& a, const UnorderedTuple& b);

 private:
  std::shared_ptr<const Domain> domain_;
  std::vector<ShortcutPoint> points_;
};

/// A multiset of vectors in R^k, canonically sorted. Used for tuples in the
/// flat target spaces of the embedding.
using PointCloud = std::vector<Point>;

void canonicalize(PointCloud& cloud);

enum class GroundMetric { Shortcut, Euclidean };

/// (min over bijections of sum d(p_i, q_s(i))^exponent)^(1/exponent) for
/// equal-size tuples. With GroundMetric::Euclidean every point must be
/// interior and the raw Euclidean distance is used.
double w2_tuples(const UnorderedTuple& p, const UnorderedTuple& q, double exponent = 2.0,
                 GroundMetric metric = GroundMetric::Shortcut);

/// Same for tuples of vectors in R^k.
double w2_tuples(const PointCloud& p, const PointCloud& q, double exponent = 2.0);

/// Square cost matrix of size |p| + |q|: rows are p followed by |q| copies of
/// the boundary point, columns are q followed by |p| copies. Entries are
/// shortcut_distance^exponent.
struct PaddedCostMatrix {
  CostMatrix costs;
  /// Index into p (rows) or q (columns); -1 marks a padded boundary slot.
  std::vector<std::ptrdiff_t> row_source;
  std::vector<std::ptrdiff_t> col_source;
};

PaddedCostMatrix padded_cost_matrix(const UnorderedTuple& p, const UnorderedTuple& q,
                                    double exponent);

/// Partial-transport distance between the unit-mass sums of p and q, via
/// the padded assignment on the shortcut metric. Sizes may differ.
double wb_tuples(const UnorderedTuple& p, const UnorderedTuple& q, double exponent = 2.0);

/// Exhaustive oracle: minimizes over all partial injections from interior
/// points of p into interior points of q, paying |p_i - q_j|^exponent for
/// matched pairs and dist_to_complement^exponent for unmatched points.
/// Uses neither the shortcut metric nor padding. Requires at most 12 points.
double wb_bruteforce(const UnorderedTuple& p, const UnorderedTuple& q, double exponent = 2.0);

inline constexpr std::size_t kBruteforceBudget = 12;

/// Appends 2*max_size - |p| boundary points. Throws if |p| > max_size.
UnorderedTuple iota_pad(const UnorderedTuple& p, std::size_t max_size);

struct CouplingEntry {
  ShortcutPoint source;
  ShortcutPoint target;
  double mass = 0.0;
};

/// A discrete coupling. Endpoints carrying coordinates may lie anywhere in
/// R^n for Euclidean couplings; for couplings over the one-point completion
/// they must lie in the domain.
using DiscreteCoupling = std::vector<CouplingEntry>;

/// sum mass * |x - y|^exponent; every endpoint must carry coordinates.
double euclidean_cost(const DiscreteCoupling& coupling, double exponent = 2.0);
/// sum mass * shortcut_distance(x, y)^exponent.
double shortcut_cost(const Domain& domain, const DiscreteCoupling& coupling,
                     double exponent = 2.0);

/// True when the source (target) marginal restricted to the domain equals
/// the unit-mass sum of the interior points of p (q), within `tol`.
bool couples(const Domain& domain, const DiscreteCoupling& coupling, const UnorderedTuple& p,
             const UnorderedTuple& q, double tol = 1e-12);

/// Replaces every endpoint outside the domain by the boundary point.
/// The shortcut cost of the result is at most the Euclidean cost of the input.
DiscreteCoupling coupling_to_shortcut(const Domain& domain, const DiscreteCoupling& coupling);

/// Keeps pairs where the shortcut metric equals the Euclidean distance and
/// splits every other pair (x, y) into x -> c(x) and c(y) -> y, c being the
/// nearest complement point. The Euclidean cost of the result is at most the
/// shortcut cost of the input.
DiscreteCoupling coupling_from_shortcut(const Domain& domain, const DiscreteCoupling& coupling);

}  // namespace wbembed
