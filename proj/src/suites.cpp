#include "wbembed/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "wbembed/barcode.hpp"
#include "wbembed/sampling.hpp"
#include "wbembed/witness.hpp"

namespace wbembed::suites {

namespace {

constexpr double kTol = 1e-12;

std::string str(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

ShortcutPoint random_shortcut(Sampler& s, const Domain& d, double boundary_prob = 0.2) {
  if (s.bernoulli(boundary_prob)) return ShortcutPoint::boundary();
  return ShortcutPoint::at(s.interior_point(d));
}

/// Interior point, pulled towards the complement half of the time so small
/// Whitney cubes get exercised.
Point spread_point(Sampler& s, const Domain& d) {
  Point x = s.interior_point(d);
  if (!s.bernoulli(0.5)) return x;
  const Point c = d.nearest_complement_point(x);
  const double shrink = std::pow(10.0, -s.uniform(0.0, 4.0));
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = c[i] + (x[i] - c[i]) * shrink;
  return d.contains(y) ? y : x;
}

Point random_direction(Sampler& s, std::size_t n) {
  Point v(n);
  double len = 0.0;
  while (len < 1e-6) {
    for (auto& c : v) c = s.uniform(-1.0, 1.0);
    len = norm(v);
  }
  for (auto& c : v) c /= len;
  return v;
}

bool interiors_overlap(const DyadicCube& a, const DyadicCube& b) {
  const Box x = a.box();
  const Box y = b.box();
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (std::min(x.high[i], y.high[i]) - std::max(x.low[i], y.low[i]) <= 0.0) return false;
  }
  return true;
}

std::map<Point, double> restricted_marginal(const Domain& d, const DiscreteCoupling& c,
                                            bool source) {
  std::map<Point, double> m;
  for (const auto& e : c) {
    const auto& pt = source ? e.source : e.target;
    if (!pt.is_boundary() && d.contains(pt.coords())) m[pt.coords()] += e.mass;
  }
  return m;
}

bool same_marginal(const std::map<Point, double>& a, const std::map<Point, double>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || std::abs(it->second - v) > 1e-12) return false;
  }
  return true;
}

}  // namespace

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    if (failures == 0) detail = what;
    ++failures;
  }
}

std::vector<NamedDomain> standard_domains() {
  auto make = [](Domain d) { return std::make_shared<const Domain>(std::move(d)); };
  return {
      {"open_box_1d", make(Domain::open_box({0.0}, {1.0}))},
      {"open_box_2d", make(Domain::open_box({0.0, 0.0}, {1.0, 1.0}))},
      {"upper_diagonal", make(Domain::upper_diagonal())},
      {"punctured_1d", make(Domain::punctured({{0.0}}))},
      {"punctured_2d", make(Domain::punctured({{0.0, 0.0}, {1.0, 0.5}}))},
      {"complement_box_2d", make(Domain::complement_box({0.0, 0.0}, {1.0, 1.0}))},
  };
}

std::vector<NamedDomain> whitney_domains() {
  auto all = standard_domains();
  std::vector<NamedDomain> out;
  for (auto& d : all) {
    if (d.name != "punctured_1d" && d.name != "complement_box_2d") out.push_back(std::move(d));
  }
  return out;
}

SuiteResult metric_suite(std::uint64_t seed, std::size_t triples) {
  SuiteResult r{"shortcut metric"};
  Sampler s(seed);
  for (const auto& [name, dom] : standard_domains()) {
    const Domain& d = *dom;
    for (std::size_t t = 0; t < triples; ++t) {
      const auto a = random_shortcut(s, d);
      const auto b = random_shortcut(s, d);
      const auto c = random_shortcut(s, d);
      const double ab = shortcut_distance(d, a, b);
      const double ba = shortcut_distance(d, b, a);
      const double bc = shortcut_distance(d, b, c);
      const double ac = shortcut_distance(d, a, c);
      r.check(ab == ba, name + ": asymmetric");
      r.check(ac <= ab + bc + kTol, name + ": triangle inequality " + str(ac) + " > " + str(ab + bc));
      r.check(shortcut_distance(d, a, a) == 0.0, name + ": d(a,a) != 0");
      r.check((a == b) == (ab == 0.0), name + ": distinct points at distance 0");
      if (!a.is_boundary() && !b.is_boundary()) {
        r.check(ab <= euclidean_distance(a.coords(), b.coords()), name + ": exceeds Euclidean");
      }
      if (!a.is_boundary()) {
        const Point cp = d.nearest_complement_point(a.coords());
        r.check(!d.contains(cp), name + ": nearest complement point lies in the domain");
        r.check(std::abs(euclidean_distance(a.coords(), cp) - d.dist_to_complement(a.coords())) <= kTol,
                name + ": nearest complement point misses the distance");
      }
    }
    // Box distance against a grid of samples.
    const Box sb = sampling_box(d);
    const std::size_t n = d.dimension();
    for (std::size_t t = 0; t < triples / 100; ++t) {
      Box b{s.point_in_box(sb), {}};
      b.high = b.low;
      double side = s.uniform(0.01, 0.5);
      for (std::size_t i = 0; i < n; ++i) b.high[i] += side;
      const double exact = d.dist_box_to_complement(b);
      constexpr int kGrid = 16;
      double grid_min = 1e300;
      std::vector<int> idx(n, 0);
      while (true) {
        Point x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = b.low[i] + side * idx[i] / kGrid;
        grid_min = std::min(grid_min, d.dist_to_complement(x));
        std::size_t i = 0;
        for (; i < n; ++i) {
          if (++idx[i] <= kGrid) break;
          idx[i] = 0;
        }
        if (i == n) break;
      }
      const double resolution = side / kGrid * std::sqrt(static_cast<double>(n));
      r.check(exact <= grid_min + kTol && grid_min <= exact + resolution,
              name + ": box distance " + str(exact) + " vs grid " + str(grid_min));
    }
  }
  return r;
}

SuiteResult isometry_suite(std::uint64_t seed, std::size_t pairs) {
  SuiteResult r{"isometry oracle"};
  Sampler s(seed);
  for (const auto& [name, dom] : standard_domains()) {
    for (double e : {1.0, 2.0}) {
      for (std::size_t t = 0; t < pairs; ++t) {
        const auto p = s.tuple_up_to(dom, 4);
        const auto q = s.tuple_up_to(dom, 4);
        const double fast = wb_tuples(p, q, e);
        const double oracle = wb_bruteforce(p, q, e);
        r.check(std::abs(fast - oracle) <= 1e-9,
                name + ": wb " + str(fast) + " vs oracle " + str(oracle));
        r.check(fast == wb_tuples(q, p, e), name + ": wb asymmetric");
        if (e == 2.0) {
          const double padded = w2_tuples(iota_pad(p, 4), iota_pad(q, 4), 2.0);
          r.check(std::abs(padded - oracle) <= 1e-9,
                  name + ": padded W2 " + str(padded) + " vs oracle " + str(oracle));
        }
      }
    }
  }
  return r;
}

SuiteResult coupling_suite(std::uint64_t seed, std::size_t couplings) {
  SuiteResult r{"coupling transforms"};
  Sampler s(seed);
  for (const auto& [name, dom] : standard_domains()) {
    const Domain& d = *dom;
    Box wide = sampling_box(d);
    for (std::size_t i = 0; i < wide.dimension(); ++i) {
      const double w = wide.high[i] - wide.low[i];
      wide.low[i] -= 0.5 * w;
      wide.high[i] += 0.5 * w;
    }
    for (std::size_t t = 0; t < couplings; ++t) {
      const std::size_t entries = 1 + s.uniform_index(5);
      DiscreteCoupling raw;
      DiscreteCoupling over_completion;
      for (std::size_t k = 0; k < entries; ++k) {
        const double mass = s.uniform(0.1, 2.0);
        raw.push_back({ShortcutPoint::at(s.point_in_box(wide)),
                       ShortcutPoint::at(s.point_in_box(wide)), mass});
        over_completion.push_back({random_shortcut(s, d), random_shortcut(s, d), mass});
      }
      const auto to = coupling_to_shortcut(d, raw);
      const auto from = coupling_from_shortcut(d, over_completion);
      for (double e : {1.0, 2.0}) {
        const double lhs = shortcut_cost(d, to, e);
        const double rhs = euclidean_cost(raw, e);
        r.check(lhs <= rhs + kTol, name + ": to_shortcut cost " + str(lhs) + " > " + str(rhs));
        const double lhs2 = euclidean_cost(from, e);
        const double rhs2 = shortcut_cost(d, over_completion, e);
        r.check(lhs2 <= rhs2 + kTol, name + ": from_shortcut cost " + str(lhs2) + " > " + str(rhs2));
      }
      r.check(same_marginal(restricted_marginal(d, raw, true), restricted_marginal(d, to, true)) &&
                  same_marginal(restricted_marginal(d, raw, false), restricted_marginal(d, to, false)),
              name + ": to_shortcut changed a restricted marginal");
      r.check(same_marginal(restricted_marginal(d, over_completion, true),
                            restricted_marginal(d, from, true)) &&
                  same_marginal(restricted_marginal(d, over_completion, false),
                                restricted_marginal(d, from, false)),
              name + ": from_shortcut changed a restricted marginal");
    }
  }
  return r;
}

SuiteResult whitney_suite(std::uint64_t seed, std::size_t points, std::size_t pairs) {
  SuiteResult r{"whitney decomposition"};
  Sampler s(seed);
  for (const auto& [name, dom] : whitney_domains()) {
    const Domain& d = *dom;
    WhitneyDecomposition w(dom);
    const double rn = std::sqrt(static_cast<double>(d.dimension()));
    const double max_neighbors = std::pow(12.0, static_cast<double>(d.dimension()));
    std::set<DyadicCube> checked;
    for (std::size_t t = 0; t < points; ++t) {
      const Point x = spread_point(s, d);
      const DyadicCube q = w.cube_containing(x);
      r.check(q.contains(x) && w.is_whitney_cube(q), name + ": containing cube " + q.key());
      for (const auto& cube : w.neighbors(q)) {
        if (!checked.insert(cube).second) continue;
        const double dist = d.dist_box_to_complement(cube.box());
        const double l = cube.side();
        r.check(rn * l <= dist && dist <= 4.0 * rn * l,
                name + ": boundary distance of " + cube.key() + " is " + str(dist));
        const auto& nb = w.neighbors(cube);
        r.check(static_cast<double>(nb.size()) <= max_neighbors, name + ": too many neighbours");
        for (const auto& other : nb) {
          const double ratio = l / other.side();
          r.check(ratio >= 0.25 && ratio <= 4.0, name + ": neighbour ratio " + str(ratio));
          r.check(other == cube || !interiors_overlap(cube, other),
                  name + ": overlapping cubes " + cube.key() + " and " + other.key());
        }
      }
    }
    for (std::size_t t = 0; t < pairs; ++t) {
      const Point x = spread_point(s, d);
      Point y;
      if (s.bernoulli(0.5)) {
        y = spread_point(s, d);
      } else {
        const double reach = d.dist_to_complement(x) * s.uniform(0.0, 3.0);
        const Point dir = random_direction(s, d.dimension());
        y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += reach * dir[i];
        if (!d.contains(y)) y = x;
      }
      const auto rep = check_delta_estimates(w, x, y);
      r.check(rep.ok(), name + ": delta estimate failed for cubes " + rep.cube_x.key() + " / " +
                            rep.cube_y.key());
    }
  }
  return r;
}

SuiteResult local_map_suite(std::uint64_t seed, std::size_t samples) {
  SuiteResult r{"localization maps"};
  Sampler s(seed);
  for (const auto& [name, dom] : whitney_domains()) {
    const Domain& d = *dom;
    WhitneyDecomposition w(dom);
    const std::size_t n = d.dimension();
    const double rn = std::sqrt(static_cast<double>(n));
    const double lip = 9.0 * std::sqrt(static_cast<double>(n + 1));
    for (std::size_t t = 0; t < samples; ++t) {
      const LocalMap local(w.cube_containing(spread_point(s, d)));
      const double l = local.side();
      const Box box = local.cube().box();
      auto near = [&](double reach) { return s.interior_point_near(d, box, reach); };
      auto inner = [&] {
        while (true) {
          Point x = near(l / 8.0);
          if (local.distance_to_neighbourhood(x, 0.0) <= l / 8.0) return x;
        }
      };

      const Point x = near(l / 2.0);
      const Point y = near(l / 2.0);
      const Point lx = local.lambda(x);
      const Point ly = local.lambda(y);
      r.check(euclidean_distance(lx, ly) <= lip * euclidean_distance(x, y) + kTol,
              name + ": Lipschitz bound");
      if (local.distance_to_neighbourhood(x, 0.0) >= l / 4.0) {
        r.check(norm(lx) == 0.0, name + ": nonzero outside B(Q, l/4)");
      }
      r.check(norm(lx) <= std::sqrt(static_cast<double>(n + 1)) * l, name + ": sup bound");

      const Point a = inner();
      const Point b = inner();
      r.check(std::abs(euclidean_distance(local.lambda(a), local.lambda(b)) - euclidean_distance(a, b)) <= kTol,
              name + ": not isometric on B(Q, l/8)");

      auto any_point = [&]() -> ShortcutPoint {
        const double u = s.uniform(0.0, 1.0);
        if (u < 0.2) return ShortcutPoint::boundary();
        if (u < 0.6) return ShortcutPoint::at(near(l / 2.0));
        return ShortcutPoint::at(spread_point(s, d));
      };
      const auto u = any_point();
      const auto v = any_point();
      r.check(euclidean_distance(local.lambda(u), local.lambda(v)) <= lip * shortcut_distance(d, u, v) + kTol,
              name + ": shortcut Lipschitz bound");

      const auto z = any_point();
      const Point la = local.lambda(a);
      if (z.is_boundary()) {
        r.check(norm(la) >= l - kTol, name + ": lower bound against the boundary point");
      } else {
        const double lhs = euclidean_distance(la, local.lambda(z));
        const double rhs = std::min(euclidean_distance(a, z.coords()) / (2.0 * rn), l);
        r.check(lhs >= rhs - kTol, name + ": local lower bound " + str(lhs) + " < " + str(rhs));
      }
    }
  }
  return r;
}

SuiteResult xi_suite(std::uint64_t seed, std::size_t pairs) {
  SuiteResult r{"sorted projections"};
  Sampler s(seed);
  for (std::size_t dim : {2u, 3u}) {
    for (int density : {0, 1, 2}) {
      const auto family = DirectionFamily::standard(dim, density);
      for (std::size_t m = 1; m <= 6; ++m) {
        const PointCloud zeros(m, Point(dim, 0.0));
        const auto z = almgren_xi(zeros, family);
        r.check(std::all_of(z.begin(), z.end(), [](double c) { return c == 0.0; }), "xi(0) != 0");
      }
      for (std::size_t t = 0; t < pairs; ++t) {
        const std::size_t m = 1 + s.uniform_index(6);
        PointCloud a(m, Point(dim)), b(m, Point(dim));
        for (auto& v : a) for (auto& c : v) c = s.uniform(-1.0, 1.0);
        for (auto& v : b) for (auto& c : v) c = s.uniform(-1.0, 1.0);
        const auto xa = almgren_xi(a, family);
        const auto xb = almgren_xi(b, family);
        const double lhs = euclidean_distance(xa, xb);
        const double rhs = w2_tuples(a, b, 2.0);
        r.check(lhs <= rhs + kTol, "xi not 1-Lipschitz: " + str(lhs) + " > " + str(rhs));
      }
    }
  }
  return r;
}

SuiteResult sandwich_suite(const std::vector<PairEvaluation>& rows) {
  SuiteResult r{"l2-sum sandwich"};
  for (const auto& row : rows) {
    r.check(row.lower_ok && row.upper_ok,
            "pair " + std::to_string(row.index) + ": t^2 = " + str(row.t_squared) + " outside [" +
                str(row.lower_bound) + ", " + str(row.upper_bound) + "]");
  }
  return r;
}

SuiteResult certificate_suite(const std::vector<PairEvaluation>& rows) {
  SuiteResult r{"lower-bound certificate"};
  for (const auto& row : rows) {
    r.check(row.certificate_ok, "pair " + std::to_string(row.index) + ": " + row.certificate_error);
  }
  return r;
}

SuiteResult zeta_suite(const ExperimentConfig& config, const std::vector<PairEvaluation>& rows) {
  SuiteResult r{"hilbert embedding"};
  for (const auto& row : rows) {
    r.check(row.zeta_ok, "pair " + std::to_string(row.index) + ": zeta distance " +
                             str(row.zeta_distance) + " exceeds sqrt(c0) * " + str(row.wb2));
  }
  const auto summary = summarize(config, rows);
  r.check(std::isfinite(summary.empirical_distortion) && summary.empirical_distortion >= 1.0,
          "empirical distortion is not finite");
  if (r.failures == 0) {
    r.detail = "empirical distortion " + str(summary.empirical_distortion) + " (m^(n+5/2) = " +
               str(summary.distortion_shape) + ")";
  }
  return r;
}

SuiteResult witness_suite(std::size_t count, double epsilon) {
  SuiteResult r{"non-doubling witness"};
  const Domain d = Domain::open_box({0.0, 0.0}, {1.0, 1.0});
  const auto wit = nondoubling_witness(d, count, epsilon);
  r.check(wit.points.size() == count, "wrong number of points");
  for (std::size_t i = 0; i < wit.points.size(); ++i) {
    r.check(std::abs(d.dist_to_complement(wit.points[i]) - epsilon / 2.0) <= kTol,
            "point off the eps/2 level set");
    for (std::size_t j = i + 1; j < wit.points.size(); ++j) {
      const double delta = shortcut_distance(d, ShortcutPoint::at(wit.points[i]),
                                             ShortcutPoint::at(wit.points[j]));
      r.check(std::abs(delta - epsilon) <= 1e-9, "pair at distance " + str(delta));
    }
  }
  return r;
}

SuiteResult barcode_suite(std::uint64_t seed, std::size_t pairs) {
  SuiteResult r{"barcode distances"};
  Sampler s(seed);
  auto diagram = [&](std::size_t size) {
    BarcodeDiagram d{"random", {}};
    for (std::size_t i = 0; i < size; ++i) {
      const double birth = s.uniform(0.0, 2.0);
      d.pairs.push_back({birth, birth + s.uniform(0.01, 2.0)});
    }
    return d;
  };
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::size_t na = s.uniform_index(4);
    const std::size_t nb = s.uniform_index(7 - na);
    const std::vector<BarcodeDiagram> ds{diagram(na), diagram(nb)};
    const auto matrix = barcode_distance_matrix(ds, 2.0);
    const double oracle = wb_bruteforce(barcode_tuple(ds[0]), barcode_tuple(ds[1]), 2.0);
    r.check(std::abs(matrix[0][1] - oracle) <= 1e-9,
            "barcode distance " + str(matrix[0][1]) + " vs oracle " + str(oracle));
    r.check(matrix[0][0] == 0.0 && matrix[1][1] == 0.0, "diagram not at distance 0 from itself");
  }
  const std::vector<BarcodeDiagram> single{{"a", {{0.0, 1.0}}}, {"empty", {}}};
  const double d = barcode_distance_matrix(single, 2.0)[0][1];
  r.check(std::abs(d - 1.0 / std::sqrt(2.0)) <= kTol, "{(0,1)} vs {} gave " + str(d));
  return r;
}

ExperimentConfig default_experiment(std::uint64_t seed) {
  ExperimentConfig c;
  c.domain = std::make_shared<const Domain>(Domain::open_box({0.0, 0.0}, {1.0, 1.0}));
  c.m = 3;
  c.samples = 500;
  c.seed = seed;
  c.direction_density = 1;
  return c;
}

std::vector<SuiteResult> run_all(std::uint64_t seed, const Constants& constants) {
  std::vector<SuiteResult> out;
  out.push_back(metric_suite(seed));
  out.push_back(isometry_suite(seed + 1));
  out.push_back(coupling_suite(seed + 2));
  out.push_back(whitney_suite(seed + 3));
  out.push_back(local_map_suite(seed + 4));
  out.push_back(xi_suite(seed + 5));
  const auto config = default_experiment(seed + 6);
  const auto rows = run_embedding_experiment(config, constants);
  out.push_back(sandwich_suite(rows));
  out.push_back(certificate_suite(rows));
  out.push_back(zeta_suite(config, rows));
  out.push_back(witness_suite());
  out.push_back(barcode_suite(seed + 7));
  return out;
}

}  // namespace wbembed::suites
