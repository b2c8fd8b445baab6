#include "wbembed/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <set>

namespace wbembed {

namespace {

std::int64_t floor_shift(std::int64_t a, int s) { return a >> s; }
std::int64_t ceil_shift(std::int64_t a, int s) { return -((-a) >> s); }

double sqrt_dim(std::size_t n) { return std::sqrt(static_cast<double>(n)); }

}  // namespace

double DyadicCube::side() const { return std::ldexp(1.0, generation); }

Box DyadicCube::box() const {
  Box b{Point(corner.size()), Point(corner.size())};
  for (std::size_t i = 0; i < corner.size(); ++i) {
    b.low[i] = std::ldexp(static_cast<double>(corner[i]), generation);
    b.high[i] = std::ldexp(static_cast<double>(corner[i] + 1), generation);
  }
  return b;
}

Point DyadicCube::center() const {
  Point c(corner.size());
  for (std::size_t i = 0; i < corner.size(); ++i) {
    c[i] = std::ldexp(static_cast<double>(corner[i]) + 0.5, generation);
  }
  return c;
}

DyadicCube DyadicCube::parent() const {
  DyadicCube p{generation + 1, corner};
  for (auto& c : p.corner) c = floor_shift(c, 1);
  return p;
}

bool DyadicCube::contains(std::span<const double> x) const { return box().contains(x); }

bool DyadicCube::intersects(const DyadicCube& other) const {
  const Box a = box();
  const Box b = other.box();
  for (std::size_t i = 0; i < corner.size(); ++i) {
    if (a.high[i] < b.low[i] || b.high[i] < a.low[i]) return false;
  }
  return true;
}

std::string DyadicCube::key() const {
  std::string s = std::to_string(generation);
  for (auto c : corner) {
    s += ',';
    s += std::to_string(c);
  }
  return s;
}

DyadicCube dyadic_cell(std::span<const double> x, int generation) {
  DyadicCube q{generation, std::vector<std::int64_t>(x.size())};
  constexpr double kLimit = 9.0e15;  // keep corners exactly representable
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double scaled = std::floor(std::ldexp(x[i], -generation));
    if (!(std::abs(scaled) < kLimit)) throw Error("dyadic_cell: coordinate out of range");
    q.corner[i] = static_cast<std::int64_t>(scaled);
  }
  return q;
}

std::size_t DyadicCubeHash::operator()(const DyadicCube& q) const noexcept {
  std::size_t h = std::hash<int>{}(q.generation);
  for (auto c : q.corner) h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

WhitneyDecomposition::WhitneyDecomposition(std::shared_ptr<const Domain> domain)
    : domain_(std::move(domain)) {
  if (!domain_) throw Error("WhitneyDecomposition requires a domain");
  root_n_ = sqrt_dim(domain_->dimension());
}

bool WhitneyDecomposition::passes_margin(const DyadicCube& q) const {
  if (q.dimension() != domain_->dimension()) throw Error("cube dimension mismatch");
  {
    std::shared_lock lock(margin_mutex_);
    if (auto it = margin_cache_.find(q); it != margin_cache_.end()) return it->second;
  }
  const bool ok = domain_->dist_box_to_complement(q.box()) >= root_n_ * q.side();
  std::unique_lock lock(margin_mutex_);
  margin_cache_.emplace(q, ok);
  return ok;
}

bool WhitneyDecomposition::is_whitney_cube(const DyadicCube& q) const {
  return passes_margin(q) && !passes_margin(q.parent());
}

DyadicCube WhitneyDecomposition::ascend_to_selected(DyadicCube q) const {
  for (int step = 0; step < kMaxGenerationWalk; ++step) {
    DyadicCube up = q.parent();
    if (!passes_margin(up)) return q;
    q = std::move(up);
  }
  throw Error("no Whitney cube found within the generation bound; is the domain proper?");
}

DyadicCube WhitneyDecomposition::selected_on_chain(std::span<const double> x) const {
  if (!domain_->contains(x)) throw Error("cube_containing: point is not in the domain");
  const double d = domain_->dist_to_complement(x);
  // a cube of side <= d / (4 sqrt n) containing x keeps >= 3/4 d from the complement
  int k = static_cast<int>(std::floor(std::log2(d / (4.0 * root_n_))));
  for (int step = 0;; ++step) {
    if (step >= kMaxGenerationWalk) throw Error("cube_containing: generation bound exceeded");
    DyadicCube q = dyadic_cell(x, k);
    if (passes_margin(q)) return ascend_to_selected(std::move(q));
    --k;
  }
}

std::vector<DyadicCube> WhitneyDecomposition::cubes_containing(std::span<const double> x) const {
  const DyadicCube q0 = selected_on_chain(x);
  std::vector<DyadicCube> out;
  for (const auto& q : neighbors(q0)) {
    if (q.contains(x)) out.push_back(q);
  }
  return out;
}

DyadicCube WhitneyDecomposition::cube_containing(std::span<const double> x) const {
  auto all = cubes_containing(x);
  return *std::min_element(all.begin(), all.end(), [](const DyadicCube& a, const DyadicCube& b) {
    if (a.generation != b.generation) return a.generation > b.generation;
    return a.corner < b.corner;
  });
}

const std::vector<DyadicCube>& WhitneyDecomposition::neighbors(const DyadicCube& q) const {
  {
    std::shared_lock lock(neighbor_mutex_);
    if (auto it = neighbor_cache_.find(q); it != neighbor_cache_.end()) return it->second;
  }
  if (!is_whitney_cube(q)) throw Error("neighbors: cube " + q.key() + " is not a Whitney cube");

  const std::size_t n = q.dimension();
  std::vector<DyadicCube> found;
  for (int g = q.generation - 2; g <= q.generation + 2; ++g) {
    std::vector<std::int64_t> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t c = q.corner[i];
      if (g <= q.generation) {
        const int s = q.generation - g;
        lo[i] = c * (std::int64_t{1} << s) - 1;
        hi[i] = (c + 1) * (std::int64_t{1} << s);
      } else {
        const int s = g - q.generation;
        lo[i] = ceil_shift(c, s) - 1;
        hi[i] = floor_shift(c + 1, s);
      }
    }
    DyadicCube probe{g, lo};
    while (true) {
      if (probe.intersects(q) && is_whitney_cube(probe)) found.push_back(probe);
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (++probe.corner[i] <= hi[i]) break;
        probe.corner[i] = lo[i];
      }
      if (i == n) break;
    }
  }
  std::sort(found.begin(), found.end());
  std::unique_lock lock(neighbor_mutex_);
  return neighbor_cache_.emplace(q, std::move(found)).first->second;
}

std::vector<DyadicCube> WhitneyDecomposition::cubes_in_box(const Box& region,
                                                           int min_generation) const {
  const std::size_t n = domain_->dimension();
  if (region.dimension() != n) throw Error("cubes_in_box: dimension mismatch");
  double extent = 0.0;
  for (std::size_t i = 0; i < n; ++i) extent = std::max(extent, region.high[i] - region.low[i]);
  int top = static_cast<int>(std::ceil(std::log2(std::max(extent, 1e-300))));
  top = std::max(top, min_generation);

  std::set<DyadicCube> out;
  std::function<void(const DyadicCube&)> visit = [&](const DyadicCube& d) {
    const Box b = d.box();
    for (std::size_t i = 0; i < n; ++i) {
      if (b.high[i] < region.low[i] || b.low[i] > region.high[i]) return;
    }
    if (passes_margin(d)) {
      out.insert(ascend_to_selected(d));
      return;
    }
    if (d.generation <= min_generation) return;
    DyadicCube child{d.generation - 1, std::vector<std::int64_t>(n)};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) child.corner[i] = 2 * d.corner[i] + ((mask >> i) & 1);
      visit(child);
    }
  };

  const DyadicCube first = dyadic_cell(region.low, top);
  const DyadicCube last = dyadic_cell(region.high, top);
  DyadicCube probe = first;
  while (true) {
    visit(probe);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++probe.corner[i] <= last.corner[i]) break;
      probe.corner[i] = first.corner[i];
    }
    if (i == n) break;
  }
  std::vector<DyadicCube> result;
  for (const auto& q : out) {
    if (q.generation >= min_generation) result.push_back(q);
  }
  return result;
}

DeltaEstimateReport check_delta_estimates(const WhitneyDecomposition& w,
                                          std::span<const double> x,
                                          std::span<const double> y) {
  const Domain& dom = w.domain();
  const double rn = sqrt_dim(dom.dimension());
  DeltaEstimateReport r;
  r.cube_x = w.cube_containing(x);
  r.cube_y = w.cube_containing(y);
  r.neighbors = r.cube_x.intersects(r.cube_y);
  r.dist_x = dom.dist_to_complement(x);
  r.dist_y = dom.dist_to_complement(y);
  r.euclidean = euclidean_distance(x, y);
  r.shortcut = shortcut_distance(dom, ShortcutPoint::at(Point(x.begin(), x.end())),
                                 ShortcutPoint::at(Point(y.begin(), y.end())));
  const double lx = r.cube_x.side();
  const double ly = r.cube_y.side();
  r.boundary_bounds_ok = rn * lx <= r.dist_x && r.dist_x <= 5.0 * rn * lx &&
                         rn * ly <= r.dist_y && r.dist_y <= 5.0 * rn * ly;
  if (r.neighbors) {
    r.pair_estimate_ok = r.shortcut == r.euclidean;
  } else {
    r.pair_estimate_ok = (lx + ly) / 8.0 <= r.shortcut && r.shortcut <= 5.0 * rn * (lx + ly);
  }
  return r;
}

}  // namespace wbembed
