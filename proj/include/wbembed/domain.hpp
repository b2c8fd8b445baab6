#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "wbembed/error.hpp"

namespace wbembed {

using Point = std::vector<double>;

double norm(std::span<const double> v);
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Closed axis-aligned box [low, high], used for dyadic cubes and for
/// complement-distance queries.
struct Box {
  Point low;
  Point high;

  [[nodiscard]] std::size_t dimension() const { return low.size(); }
  [[nodiscard]] bool contains(std::span<const double> x) const;
  /// Coordinatewise clamp of x into the box.
  [[nodiscard]] Point clamp(std::span<const double> x) const;
  /// Euclidean distance from x to the box (0 inside).
  [[nodiscard]] double distance_to(std::span<const double> x) const;
};

struct OpenBox {
  Point low;
  Point high;
  bool operator==(const OpenBox&) const = default;
};

/// {(x, y) : y > x} in the plane; the space of persistence diagram points.
struct UpperDiagonalHalfPlane {
  bool operator==(const UpperDiagonalHalfPlane&) const = default;
};

/// R^n with finitely many points removed.
struct PuncturedSpace {
  std::vector<Point> removed;
  bool operator==(const PuncturedSpace&) const = default;
};

/// R^n minus the closed box [low, high].
struct ComplementOfClosedBox {
  Point low;
  Point high;
  bool operator==(const ComplementOfClosedBox&) const = default;
};

/// An open, non-empty, proper subset of R^n with exact distance oracles.
///
/// Every variant admits a closed form for the distance to the complement,
/// for the distance from a closed box to the complement, and for a nearest
/// complement point. Degenerate inputs are rejected by the factories.
class Domain {
 public:
  using Variant = std::variant<OpenBox, UpperDiagonalHalfPlane, PuncturedSpace,
                               ComplementOfClosedBox>;

  static Domain open_box(Point low, Point high);
  static Domain upper_diagonal();
  static Domain punctured(std::vector<Point> removed);
  static Domain complement_box(Point low, Point high);

  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] const Variant& variant() const { return variant_; }

  [[nodiscard]] bool contains(std::span<const double> x) const;
  [[nodiscard]] double dist_to_complement(std::span<const double> x) const;
  /// inf over y in the closed box of dist_to_complement(y).
  [[nodiscard]] double dist_box_to_complement(const Box& box) const;
  /// A complement point realizing dist_to_complement(x); lexicographically
  /// smallest among the closed-form candidates on ties.
  [[nodiscard]] Point nearest_complement_point(std::span<const double> x) const;

  /// True when R^n minus the closure of the domain is non-empty.
  [[nodiscard]] bool has_exterior() const;

  bool operator==(const Domain& other) const = default;

 private:
  Domain(std::size_t dimension, Variant v)
      : dimension_(dimension), variant_(std::move(v)) {}
  void check_dimension(std::span<const double> x) const;

  std::size_t dimension_;
  Variant variant_;
};

/// A point of the one-point completion: an interior point or the glued
/// boundary point. Ordering puts interior points first, lexicographically.
class ShortcutPoint {
 public:
  static ShortcutPoint boundary() { return ShortcutPoint{}; }
  static ShortcutPoint at(Point coords) { return ShortcutPoint{std::move(coords)}; }

  [[nodiscard]] bool is_boundary() const { return !coords_.has_value(); }
  /// Precondition: !is_boundary().
  [[nodiscard]] const Point& coords() const;

  friend bool operator==(const ShortcutPoint&, const ShortcutPoint&) = default;
  friend bool operator<(const ShortcutPoint& a, const ShortcutPoint& b);

 private:
  ShortcutPoint() = default;
  explicit ShortcutPoint(Point coords) : coords_(std::move(coords)) {}
  std::optional<Point> coords_;
};

/// The shortcut metric on the one-point completion:
/// min(|x - y|, d(x) + d(y)) between interior points, d(x) to the boundary
/// point, 0 between two boundary points.
double shortcut_distance(const Domain& domain, const ShortcutPoint& a,
                         const ShortcutPoint& b);

/// dist_to_complement, with 0 for the boundary point.
double boundary_distance(const Domain& domain, const ShortcutPoint& a);

}  // namespace wbembed
