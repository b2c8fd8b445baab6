#include "wbembed/transport.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <string>

namespace wbembed {

namespace {

void check_exponent(double exponent) {
  if (!std::isfinite(exponent) || exponent < 1.0) throw Error("exponent must be finite and >= 1");
}

double power(double d, double exponent) { return exponent == 2.0 ? d * d : std::pow(d, exponent); }

double root(double c, double exponent) {
  return exponent == 2.0 ? std::sqrt(c) : std::pow(c, 1.0 / exponent);
}

void check_same_domain(const UnorderedTuple& p, const UnorderedTuple& q) {
  if (p.domain_ptr() != q.domain_ptr() && !(p.domain() == q.domain())) {
    throw Error("tuples live on different domains");
  }
}

void check_masses(const DiscreteCoupling& coupling) {
  for (const auto& e : coupling) {
    if (!std::isfinite(e.mass) || !(e.mass > 0.0)) throw Error("coupling masses must be positive");
  }
}

}  // namespace

UnorderedTuple::UnorderedTuple(std::shared_ptr<const Domain> domain,
                               std::vector<ShortcutPoint> points)
    : domain_(std::move(domain)), points_(std::move(points)) {
  if (!domain_) throw Error("tuple requires a domain");
  for (const auto& pt : points_) {
    if (!pt.is_boundary() && !domain_->contains(pt.coords())) {
      throw Error("tuple point lies outside the domain");
    }
  }
  std::sort(points_.begin(), points_.end());
}

UnorderedTuple UnorderedTuple::from_coords(std::shared_ptr<const Domain> domain,
                                           const std::vector<Point>& coords,
                                           std::size_t boundary_count) {
  std::vector<ShortcutPoint> pts;
  pts.reserve(coords.size() + boundary_count);
  for (const auto& c : coords) pts.push_back(ShortcutPoint::at(c));
  for (std::size_t i = 0; i < boundary_count; ++i) pts.push_back(ShortcutPoint::boundary());
  return UnorderedTuple(std::move(domain), std::move(pts));
}

std::size_t UnorderedTuple::boundary_count() const {
  return static_cast<std::size_t>(
      std::count_if(points_.begin(), points_.end(), [](const auto& p) { return p.is_boundary(); }));
}

std::vector<Point> UnorderedTuple::interior_coords() const {
  std::vector<Point> out;
  for (const auto& p : points_) {
    if (!p.is_boundary()) out.push_back(p.coords());
  }
  return out;
}

bool operator==(const UnorderedTuple& a, const UnorderedTuple& b) {
  return a.domain() == b.domain() && a.points_ == b.points_;
}

void canonicalize(PointCloud& cloud) { std::sort(cloud.begin(), cloud.end()); }

double w2_tuples(const UnorderedTuple& p, const UnorderedTuple& q, double exponent,
                 GroundMetric metric) {
  if (q.points() < p.points()) return w2_tuples(q, p, exponent, metric);
  check_exponent(exponent);
  check_same_domain(p, q);
  if (p.size() != q.size()) throw Error("w2_tuples: tuples must have equal size");
  const std::size_t n = p.size();
  CostMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = p.points()[i];
      const auto& b = q.points()[j];
      const double d = metric == GroundMetric::Shortcut
                           ? shortcut_distance(p.domain(), a, b)
                           : euclidean_distance(a.coords(), b.coords());
      c(i, j) = power(d, exponent);
    }
  }
  return root(assignment_solve(c).cost, exponent);
}

double w2_tuples(const PointCloud& p, const PointCloud& q, double exponent) {
  if (q < p) return w2_tuples(q, p, exponent);
  check_exponent(exponent);
  if (p.size() != q.size()) throw Error("w2_tuples: tuples must have equal size");
  const std::size_t n = p.size();
  CostMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p[i].size() != q[j].size()) throw Error("w2_tuples: dimension mismatch");
      c(i, j) = power(euclidean_distance(p[i], q[j]), exponent);
    }
  }
  return root(assignment_solve(c).cost, exponent);
}

PaddedCostMatrix padded_cost_matrix(const UnorderedTuple& p, const UnorderedTuple& q,
                                    double exponent) {
  check_exponent(exponent);
  check_same_domain(p, q);
  const std::size_t k1 = p.size();
  const std::size_t k2 = q.size();
  const std::size_t n = k1 + k2;
  PaddedCostMatrix out{CostMatrix(n), std::vector<std::ptrdiff_t>(n, -1),
                       std::vector<std::ptrdiff_t>(n, -1)};
  for (std::size_t i = 0; i < k1; ++i) out.row_source[i] = static_cast<std::ptrdiff_t>(i);
  for (std::size_t j = 0; j < k2; ++j) out.col_source[j] = static_cast<std::ptrdiff_t>(j);

  const auto boundary = ShortcutPoint::boundary();
  auto row_point = [&](std::size_t i) -> const ShortcutPoint& {
    return i < k1 ? p.points()[i] : boundary;
  };
  auto col_point = [&](std::size_t j) -> const ShortcutPoint& {
    return j < k2 ? q.points()[j] : boundary;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.costs(i, j) = power(shortcut_distance(p.domain(), row_point(i), col_point(j)), exponent);
    }
  }
  return out;
}

double wb_tuples(const UnorderedTuple& p, const UnorderedTuple& q, double exponent) {
  // Evaluate in a canonical argument order so the result is exactly symmetric.
  if (q.points() < p.points()) return wb_tuples(q, p, exponent);
  const auto padded = padded_cost_matrix(p, q, exponent);
  if (padded.costs.size() == 0) return 0.0;
  return root(assignment_solve(padded.costs).cost, exponent);
}

double wb_bruteforce(const UnorderedTuple& p, const UnorderedTuple& q, double exponent) {
  check_exponent(exponent);
  check_same_domain(p, q);
  if (p.size() + q.size() > kBruteforceBudget) {
    throw Error("wb_bruteforce: at most " + std::to_string(kBruteforceBudget) + " points");
  }
  const Domain& dom = p.domain();
  const auto ps = p.interior_coords();
  const auto qs = q.interior_coords();

  std::vector<double> p_exit(ps.size()), q_exit(qs.size());
  for (std::size_t i = 0; i < ps.size(); ++i) p_exit[i] = power(dom.dist_to_complement(ps[i]), exponent);
  for (std::size_t j = 0; j < qs.size(); ++j) q_exit[j] = power(dom.dist_to_complement(qs[j]), exponent);

  double best = std::numeric_limits<double>::infinity();
  std::vector<char> q_used(qs.size(), 0);
  std::function<void(std::size_t, double)> recurse = [&](std::size_t i, double acc) {
    if (i == ps.size()) {
      for (std::size_t j = 0; j < qs.size(); ++j) {
        if (!q_used[j]) acc += q_exit[j];
      }
      best = std::min(best, acc);
      return;
    }
    recurse(i + 1, acc + p_exit[i]);
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (q_used[j]) continue;
      q_used[j] = 1;
      recurse(i + 1, acc + power(euclidean_distance(ps[i], qs[j]), exponent));
      q_used[j] = 0;
    }
  };
  recurse(0, 0.0);
  return root(best, exponent);
}

UnorderedTuple iota_pad(const UnorderedTuple& p, std::size_t max_size) {
  if (p.size() > max_size) {
    throw Error("iota_pad: tuple has " + std::to_string(p.size()) + " points, max is " +
                std::to_string(max_size));
  }
  auto pts = p.points();
  pts.resize(2 * max_size, ShortcutPoint::boundary());
  return UnorderedTuple(p.domain_ptr(), std::move(pts));
}

double euclidean_cost(const DiscreteCoupling& coupling, double exponent) {
  check_exponent(exponent);
  double total = 0.0;
  for (const auto& e : coupling) {
    total += e.mass * power(euclidean_distance(e.source.coords(), e.target.coords()), exponent);
  }
  return total;
}

double shortcut_cost(const Domain& domain, const DiscreteCoupling& coupling, double exponent) {
  check_exponent(exponent);
  double total = 0.0;
  for (const auto& e : coupling) {
    total += e.mass * power(shortcut_distance(domain, e.source, e.target), exponent);
  }
  return total;
}

bool couples(const Domain& domain, const DiscreteCoupling& coupling, const UnorderedTuple& p,
             const UnorderedTuple& q, double tol) {
  auto marginal_matches = [&](bool use_source, const UnorderedTuple& t) {
    std::map<Point, double> mass;
    for (const auto& e : coupling) {
      const auto& pt = use_source ? e.source : e.target;
      if (!pt.is_boundary() && domain.contains(pt.coords())) mass[pt.coords()] += e.mass;
    }
    for (const auto& c : t.interior_coords()) mass[c] -= 1.0;
    return std::all_of(mass.begin(), mass.end(),
                       [&](const auto& kv) { return std::abs(kv.second) <= tol; });
  };
  return marginal_matches(true, p) && marginal_matches(false, q);
}

DiscreteCoupling coupling_to_shortcut(const Domain& domain, const DiscreteCoupling& coupling) {
  check_masses(coupling);
  auto project = [&](const ShortcutPoint& x) {
    if (x.is_boundary() || !domain.contains(x.coords())) return ShortcutPoint::boundary();
    return x;
  };
  DiscreteCoupling out;
  out.reserve(coupling.size());
  for (const auto& e : coupling) out.push_back({project(e.source), project(e.target), e.mass});
  return out;
}

DiscreteCoupling coupling_from_shortcut(const Domain& domain, const DiscreteCoupling& coupling) {
  check_masses(coupling);
  DiscreteCoupling out;
  for (const auto& e : coupling) {
    for (const auto* pt : {&e.source, &e.target}) {
      if (!pt->is_boundary() && !domain.contains(pt->coords())) {
        throw Error("coupling_from_shortcut: interior endpoint outside the domain");
      }
    }
    if (!e.source.is_boundary() && !e.target.is_boundary()) {
      const double direct = euclidean_distance(e.source.coords(), e.target.coords());
      const double via = domain.dist_to_complement(e.source.coords()) +
                         domain.dist_to_complement(e.target.coords());
      if (direct <= via) {
        out.push_back(e);
        continue;
      }
    }
    if (!e.source.is_boundary()) {
      out.push_back({e.source, ShortcutPoint::at(domain.nearest_complement_point(e.source.coords())),
                     e.mass});
    }
    if (!e.target.is_boundary()) {
      out.push_back({ShortcutPoint::at(domain.nearest_complement_point(e.target.coords())),
                     e.target, e.mass});
    }
  }
  return out;
}

}  // namespace wbembed
