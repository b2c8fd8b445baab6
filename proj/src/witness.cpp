#include "wbembed/witness.hpp"

#include <algorithm>
#include <cmath>

namespace wbembed {

namespace {

std::pair<Point, Point> exterior_and_anchor(const Domain& domain) {
  return std::visit(
      [](const auto& v) -> std::pair<Point, Point> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, OpenBox>) {
          Point c(v.low.size());
          for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (v.low[i] + v.high[i]);
          Point x = c;
          x[0] = v.low[0] - (v.high[0] - v.low[0]);
          return {x, c};
        } else if constexpr (std::is_same_v<T, UpperDiagonalHalfPlane>) {
          return {{1.0, -1.0}, {0.0, 1.0}};
        } else if constexpr (std::is_same_v<T, ComplementOfClosedBox>) {
          Point c(v.low.size());
          for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (v.low[i] + v.high[i]);
          Point y = c;
          y[0] = v.high[0] + (v.high[0] - v.low[0]);
          return {c, y};
        } else {
          throw Error("nondoubling_witness: the closure of the domain must be a proper subset");
        }
      },
      domain.variant());
}

Point along(const Point& a, const Point& b, double t) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

}  // namespace

NonDoublingWitness nondoubling_witness(const Domain& domain, std::size_t count, double epsilon) {
  const std::size_t n = domain.dimension();
  if (n < 2) throw Error("nondoubling_witness: dimension must be at least 2");
  if (count == 0) throw Error("nondoubling_witness: need at least one point");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error("nondoubling_witness: eps must be positive");

  NonDoublingWitness out;
  out.epsilon = epsilon;
  std::tie(out.exterior, out.anchor) = exterior_and_anchor(domain);
  const Point& x = out.exterior;
  const double radius = euclidean_distance(x, out.anchor);

  // Orthonormal pair (u, v) spanning a plane through the anchor direction.
  Point u(n), v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) u[i] = (out.anchor[i] - x[i]) / radius;
  v[0] = -u[1];
  v[1] = u[0];
  if (norm(v) < 1e-12) {
    v.assign(n, 0.0);
    v[1] = 1.0;
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < n; ++i) dot += u[i] * v[i];
  for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
  const double vn = norm(v);
  for (auto& c : v) c /= vn;

  auto on_circle = [&](double theta) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = x[i] + radius * (std::cos(theta) * u[i] + std::sin(theta) * v[i]);
    }
    return p;
  };
  auto angle = [&](std::size_t i, double span) {
    return count == 1 ? 0.0 : -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(count - 1);
  };

  const double half = 0.5 * epsilon;
  double span = 0.5;
  std::vector<Point> circle;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 60) throw Error("nondoubling_witness: no arc of the circle lies in the domain");
    circle.clear();
    bool ok = true;
    for (std::size_t i = 0; i < count && ok; ++i) {
      circle.push_back(on_circle(angle(i, span)));
      ok = domain.contains(circle.back()) && domain.dist_to_complement(circle.back()) > half;
    }
    if (ok) break;
    span *= 0.5;
  }

  // Walk each circle point towards the exterior point in steps short enough
  // that the distance cannot dip to zero between samples, then bisect.
  const double step = std::min(0.25, 0.25 * epsilon / radius);
  for (const Point& start : circle) {
    auto gap = [&](double t) { return domain.dist_to_complement(along(start, x, t)) - half; };
    double lo = 0.0;
    double hi = -1.0;
    for (double t = step; t <= 1.0 + step; t += step) {
      const double tt = std::min(t, 1.0);
      if (gap(tt) <= 0.0) {
        hi = tt;
        break;
      }
      lo = tt;
    }
    if (hi < 0.0) throw Error("nondoubling_witness: segment never approaches the boundary");
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (gap(mid) > 0.0 ? lo : hi) = mid;
    }
    Point z = along(start, x, lo);
    const double err = std::abs(domain.dist_to_complement(z) - half);
    if (err > 1e-12) throw Error("nondoubling_witness: bisection did not converge");
    out.max_boundary_error = std::max(out.max_boundary_error, err);
    out.points.push_back(std::move(z));
  }

  for (std::size_t i = 0; i < out.points.size(); ++i) {
    for (std::size_t j = i + 1; j < out.points.size(); ++j) {
      if (!(euclidean_distance(out.points[i], out.points[j]) > epsilon)) {
        throw Error("nondoubling_witness: eps too large for the geometry");
      }
      const double d = shortcut_distance(domain, ShortcutPoint::at(out.points[i]),
                                         ShortcutPoint::at(out.points[j]));
      out.max_pair_error = std::max(out.max_pair_error, std::abs(d - epsilon));
    }
  }
  return out;
}

}  // namespace wbembed
