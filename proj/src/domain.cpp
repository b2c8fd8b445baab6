#include "wbembed/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace wbembed {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_corners(const Point& low, const Point& high, const char* what) {
  if (low.empty() || low.size() != high.size()) {
    throw Error(std::string(what) + ": corners must be non-empty and of equal dimension");
  }
  for (std::size_t i = 0; i < low.size(); ++i) {
    if (!std::isfinite(low[i]) || !std::isfinite(high[i]) || !(low[i] < high[i])) {
      throw Error(std::string(what) + ": need low < high in every coordinate");
    }
  }
}

}  // namespace

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

bool Box::contains(std::span<const double> x) const {
  for (std::size_t i = 0; i < low.size(); ++i) {
    if (x[i] < low[i] || x[i] > high[i]) return false;
  }
  return true;
}

Point Box::clamp(std::span<const double> x) const {
  Point out(x.begin(), x.end());
  for (std::size_t i = 0; i < low.size(); ++i) out[i] = std::clamp(out[i], low[i], high[i]);
  return out;
}

double Box::distance_to(std::span<const double> x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < low.size(); ++i) {
    double gap = 0.0;
    if (x[i] < low[i]) gap = low[i] - x[i];
    else if (x[i] > high[i]) gap = x[i] - high[i];
    s += gap * gap;
  }
  return std::sqrt(s);
}

Domain Domain::open_box(Point low, Point high) {
  check_corners(low, high, "open_box");
  const std::size_t n = low.size();
  return Domain(n, OpenBox{std::move(low), std::move(high)});
}

Domain Domain::upper_diagonal() { return Domain(2, UpperDiagonalHalfPlane{}); }

Domain Domain::punctured(std::vector<Point> removed) {
  if (removed.empty()) throw Error("punctured: at least one removed point is required");
  const std::size_t n = removed.front().size();
  if (n == 0) throw Error("punctured: points must have positive dimension");
  for (const auto& p : removed) {
    if (p.size() != n) throw Error("punctured: inconsistent point dimensions");
    for (double c : p) {
      if (!std::isfinite(c)) throw Error("punctured: non-finite coordinate");
    }
  }
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  return Domain(n, PuncturedSpace{std::move(removed)});
}

Domain Domain::complement_box(Point low, Point high) {
  check_corners(low, high, "complement_box");
  const std::size_t n = low.size();
  return Domain(n, ComplementOfClosedBox{std::move(low), std::move(high)});
}

void Domain::check_dimension(std::span<const double> x) const {
  if (x.size() != dimension_) {
    throw Error("dimension mismatch: expected " + std::to_string(dimension_) + ", got " +
                std::to_string(x.size()));
  }
}

bool Domain::contains(std::span<const double> x) const {
  check_dimension(x);
  return std::visit(
      Overloaded{
          [&](const OpenBox& b) {
            for (std::size_t i = 0; i < dimension_; ++i) {
              if (!(x[i] > b.low[i] && x[i] < b.high[i])) return false;
            }
            return true;
          },
          [&](const UpperDiagonalHalfPlane&) { return x[1] > x[0]; },
          [&](const PuncturedSpace& p) {
            return std::none_of(p.removed.begin(), p.removed.end(), [&](const Point& r) {
              return std::equal(r.begin(), r.end(), x.begin());
            });
          },
          [&](const ComplementOfClosedBox& b) {
            return !Box{b.low, b.high}.contains(x);
          },
      },
      variant_);
}

double Domain::dist_to_complement(std::span<const double> x) const {
  check_dimension(x);
  return std::visit(
      Overloaded{
          [&](const OpenBox& b) {
            double d = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < dimension_; ++i) {
              d = std::min({d, x[i] - b.low[i], b.high[i] - x[i]});
            }
            return std::max(d, 0.0);
          },
          [&](const UpperDiagonalHalfPlane&) {
            return std::max((x[1] - x[0]) / std::sqrt(2.0), 0.0);
          },
          [&](const PuncturedSpace& p) {
            double d = std::numeric_limits<double>::infinity();
            for (const auto& r : p.removed) d = std::min(d, euclidean_distance(x, r));
            return d;
          },
          [&](const ComplementOfClosedBox& b) { return Box{b.low, b.high}.distance_to(x); },
      },
      variant_);
}

double Domain::dist_box_to_complement(const Box& box) const {
  check_dimension(box.low);
  check_dimension(box.high);
  return std::visit(
      Overloaded{
          [&](const OpenBox& b) {
            double d = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < dimension_; ++i) {
              d = std::min({d, box.low[i] - b.low[i], b.high[i] - box.high[i]});
            }
            return std::max(d, 0.0);
          },
          [&](const UpperDiagonalHalfPlane&) {
            // min of (y - x) over the box is attained at (high_x, low_y).
            return std::max((box.low[1] - box.high[0]) / std::sqrt(2.0), 0.0);
          },
          [&](const PuncturedSpace& p) {
            double d = std::numeric_limits<double>::infinity();
            for (const auto& r : p.removed) d = std::min(d, box.distance_to(r));
            return d;
          },
          [&](const ComplementOfClosedBox& b) {
            double s = 0.0;
            for (std::size_t i = 0; i < dimension_; ++i) {
              const double gap = std::max({0.0, b.low[i] - box.high[i], box.low[i] - b.high[i]});
              s += gap * gap;
            }
            return std::sqrt(s);
          },
      },
      variant_);
}

Point Domain::nearest_complement_point(std::span<const double> x) const {
  if (!contains(x)) throw Error("nearest_complement_point: point is not in the domain");
  return std::visit(
      Overloaded{
          [&](const OpenBox& b) {
            const double d = dist_to_complement(x);
            std::optional<Point> best;
            for (std::size_t i = 0; i < dimension_; ++i) {
              for (double face : {b.low[i], b.high[i]}) {
                if (std::abs(x[i] - face) != d) continue;
                Point c(x.begin(), x.end());
                c[i] = face;
                if (!best || c < *best) best = std::move(c);
              }
            }
            return *best;
          },
          [&](const UpperDiagonalHalfPlane&) {
            const double mid = 0.5 * (x[0] + x[1]);
            return Point{mid, mid};
          },
          [&](const PuncturedSpace& p) {
            // removed points are stored sorted, so the first minimizer wins ties
            const Point* best = nullptr;
            double d = std::numeric_limits<double>::infinity();
            for (const auto& r : p.removed) {
              const double e = euclidean_distance(x, r);
              if (e < d) {
                d = e;
                best = &r;
              }
            }
            return *best;
          },
          [&](const ComplementOfClosedBox& b) { return Box{b.low, b.high}.clamp(x); },
      },
      variant_);
}

bool Domain::has_exterior() const {
  return !std::holds_alternative<PuncturedSpace>(variant_);
}

const Point& ShortcutPoint::coords() const {
  if (!coords_) throw Error("the boundary point has no coordinates");
  return *coords_;
}

bool operator<(const ShortcutPoint& a, const ShortcutPoint& b) {
  if (a.is_boundary() || b.is_boundary()) return !a.is_boundary() && b.is_boundary();
  return *a.coords_ < *b.coords_;
}

double boundary_distance(const Domain& domain, const ShortcutPoint& a) {
  if (a.is_boundary()) return 0.0;
  if (!domain.contains(a.coords())) throw Error("interior point lies outside the domain");
  return domain.dist_to_complement(a.coords());
}

double shortcut_distance(const Domain& domain, const ShortcutPoint& a, const ShortcutPoint& b) {
  const double da = boundary_distance(domain, a);
  const double db = boundary_distance(domain, b);
  if (a.is_boundary() || b.is_boundary()) return da + db;
  return std::min(euclidean_distance(a.coords(), b.coords()), da + db);
}

}  // namespace wbembed
