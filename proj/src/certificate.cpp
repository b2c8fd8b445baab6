#include "wbembed/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace wbembed {

namespace {

constexpr double kRelTol = 1e-12;

bool leq(double a, double b) { return a <= b + kRelTol * std::max({1.0, std::abs(a), std::abs(b)}); }

void require(bool ok, const std::string& what) {
  if (!ok) throw CertificateError("lower_bound_certificate: " + what);
}

double squared(double x) { return x * x; }

}  // namespace

LowerBoundCertificate lower_bound_certificate(const WhitneyDecomposition& w,
                                              const UnorderedTuple& p, const UnorderedTuple& q,
                                              const Constants& constants) {
  if (p.size() != q.size()) throw Error("lower_bound_certificate: tuples must have equal size");
  if (!(p.domain() == w.domain()) || !(q.domain() == w.domain())) {
    throw Error("lower_bound_certificate: tuples and decomposition use different domains");
  }
  const Domain& dom = w.domain();
  const std::size_t m = p.size();
  const double md = static_cast<double>(m);
  const auto& ps = p.points();
  const auto& qs = q.points();

  LowerBoundCertificate cert;
  cert.tuple_size = m;
  if (m == 0) return cert;

  std::set<DyadicCube> support;
  for (const auto& c : candidate_cubes(w, p)) support.insert(c);
  for (const auto& c : candidate_cubes(w, q)) support.insert(c);

  auto dist_to_cube = [](const LocalMap& local, const ShortcutPoint& x) {
    return x.is_boundary() ? -1.0 : local.distance_to_neighbourhood(x.coords(), 0.0);
  };

  for (const auto& cube : support) {
    LocalMap local(cube);
    std::vector<Point> lp(m), lq(m);
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i) {
      lp[i] = local.lambda(ps[i]);
      lq[i] = local.lambda(qs[i]);
      nonzero = nonzero || norm(lp[i]) > 0.0 || norm(lq[i]) > 0.0;
    }
    if (!nonzero) continue;

    CubeCertificate cc;
    cc.cube = cube;
    CostMatrix costs(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) costs(i, j) = squared(euclidean_distance(lp[i], lq[j]));
    }
    const auto a = assignment_solve(costs);
    cc.sigma = a.row_to_col;
    cc.w2_squared = a.cost;

    // Annuli of width l / (24 M) around Q; 2M points cannot fill 2M + 1 of them.
    const double width = local.side() / (24.0 * md);
    auto in_annulus = [&](const ShortcutPoint& x, int r) {
      const double d = dist_to_cube(local, x);
      return d > r * width && d <= (r + 1) * width;
    };
    int found = -1;
    for (int r = 0; r <= static_cast<int>(2 * m) && found < 0; ++r) {
      bool empty = true;
      for (std::size_t k = 0; k < m && empty; ++k) {
        empty = !in_annulus(ps[k], r) && !in_annulus(qs[cc.sigma[k]], r);
      }
      if (empty) found = r;
    }
    require(found >= 0, "no empty annulus around cube " + cube.key());
    cc.annulus = found;
    cc.inflated_radius = found * width;

    cc.close_match = std::sqrt(cc.w2_squared) < constants.c1 * local.side() / md;
    auto in_inflated = [&](const ShortcutPoint& x) {
      const double d = dist_to_cube(local, x);
      return d >= 0.0 && d <= cc.inflated_radius;
    };
    for (std::size_t k = 0; k < m; ++k) {
      if (in_inflated(ps[k])) cc.p_in_inflated.push_back(k);
    }

    if (cc.close_match) {
      for (std::size_t k = 0; k < m; ++k) {
        require(in_inflated(ps[k]) == in_inflated(qs[cc.sigma[k]]),
                "index sets differ on the inflated cube " + cube.key());
      }
      for (std::size_t k : cc.p_in_inflated) {
        const double direct = euclidean_distance(ps[k].coords(), qs[cc.sigma[k]].coords());
        const double local_d = euclidean_distance(lp[k], lq[cc.sigma[k]]);
        require(std::abs(direct - local_d) <= kRelTol * std::max(1.0, direct),
                "localization is not isometric on the inflated cube " + cube.key());
      }
      cert.sum_close += cc.w2_squared;
    } else {
      cert.sum_far += cc.w2_squared;
    }
    cert.cubes.push_back(std::move(cc));
  }
  cert.sum_all = cert.sum_close + cert.sum_far;

  // Close-matched cubes that see a point of p, largest first.
  for (std::size_t i = 0; i < cert.cubes.size(); ++i) {
    if (cert.cubes[i].close_match && !cert.cubes[i].p_in_inflated.empty()) {
      cert.ordered_matched.push_back(i);
    }
  }
  std::stable_sort(cert.ordered_matched.begin(), cert.ordered_matched.end(),
                   [&](std::size_t a, std::size_t b) {
                     return cert.cubes[a].cube.generation > cert.cubes[b].cube.generation;
                   });

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  cert.tau.assign(m, kUnset);
  std::vector<char> p_covered(m, 0), q_used(m, 0);
  for (std::size_t idx : cert.ordered_matched) {
    const auto& cc = cert.cubes[idx];
    for (std::size_t k : cc.p_in_inflated) {
      if (p_covered[k]) continue;  // already in an earlier, larger inflated cube
      p_covered[k] = 1;
      const std::size_t j = cc.sigma[k];
      require(!q_used[j], "tau is not injective on the region");
      q_used[j] = 1;
      cert.tau[k] = j;
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (p_covered[k]) cert.p_in_region.push_back(k);
  }

  // tau must land exactly on q^{-1}(E).
  for (std::size_t j = 0; j < m; ++j) {
    bool in_region = false;
    for (std::size_t idx : cert.ordered_matched) {
      const auto& cc = cert.cubes[idx];
      LocalMap local(cc.cube);
      const double d = dist_to_cube(local, qs[j]);
      if (d >= 0.0 && d <= cc.inflated_radius) in_region = true;
    }
    // Cubes with no p point inside Q-hat have no q point inside either,
    // so C'' suffices for membership in E.
    require(in_region == static_cast<bool>(q_used[j]), "tau does not map onto q^{-1}(E)");
  }

  std::size_t next = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (cert.tau[k] != kUnset) continue;
    while (q_used[next]) ++next;
    cert.tau[k] = next;
    q_used[next] = 1;
  }

  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = ps[k];
    const auto& b = qs[cert.tau[k]];
    if (p_covered[k]) {
      cert.region_cost += squared(euclidean_distance(a.coords(), b.coords()));
    } else {
      cert.boundary_cost += squared(boundary_distance(dom, a) + boundary_distance(dom, b));
    }
    cert.tau_shortcut_cost += squared(shortcut_distance(dom, a, b));
  }
  const double w2 = w2_tuples(p, q, 2.0);
  cert.w2_squared = w2 * w2;
  const double scale = constants.c2 * md * md * md;
  cert.lower_bound = cert.w2_squared / scale;

  require(leq(cert.region_cost, cert.sum_close), "region cost exceeds the close-cube sum");
  require(leq(cert.boundary_cost, scale * cert.sum_far), "boundary cost exceeds the far-cube bound");
  const double combined = cert.region_cost + cert.boundary_cost / scale;
  require(leq(combined, cert.sum_all), "combined lower estimate exceeds the cube sum");
  require(leq(cert.tau_shortcut_cost / scale, combined), "tau shortcut cost is not dominated");
  require(leq(cert.w2_squared, cert.tau_shortcut_cost), "tau beats the optimal matching");
  require(leq(cert.lower_bound, cert.sum_all), "final lower bound fails");
  return cert;
}

}  // namespace wbembed
