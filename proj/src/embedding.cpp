#include "wbembed/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>

namespace wbembed {

Constants Constants::for_dimension(std::size_t n) {
  if (n == 0) throw Error("constants: dimension must be positive");
  const double nd = static_cast<double>(n);
  Constants c;
  c.c0 = 2.0 * 81.0 * std::pow(12.0, nd) * (nd + 1.0);
  c.c1 = 1.0 / (48.0 * std::sqrt(nd));
  c.c2 = 4.0 * 25.0 * nd / (c.c1 * c.c1);
  c.c3 = std::max(c.c0, c.c2);
  return c;
}

LocalMap::LocalMap(DyadicCube cube)
    : cube_(std::move(cube)), box_(cube_.box()), center_(cube_.center()), side_(cube_.side()) {}

double LocalMap::distance_to_neighbourhood(std::span<const double> x, double r) const {
  return std::max(0.0, box_.distance_to(x) - r);
}

double LocalMap::eta(std::span<const double> x) const {
  const double d = distance_to_neighbourhood(x, side_ / 8.0);
  return std::max(1.0 - d * 8.0 / side_, 0.0);
}

Point LocalMap::lambda(std::span<const double> x) const {
  const std::size_t n = center_.size();
  if (x.size() != n) throw Error("lambda: dimension mismatch");
  Point out(n + 1, 0.0);
  const double e = eta(x);
  if (e == 0.0) return out;
  for (std::size_t i = 0; i < n; ++i) out[i] = e * (x[i] - center_[i]);
  out[n] = e * side_;
  return out;
}

Point LocalMap::lambda(const ShortcutPoint& a) const {
  if (a.is_boundary()) return Point(center_.size() + 1, 0.0);
  return lambda(a.coords());
}

PointCloud LocalMap::push_forward(const UnorderedTuple& p) const {
  PointCloud out;
  out.reserve(p.size());
  for (const auto& pt : p.points()) out.push_back(lambda(pt));
  canonicalize(out);
  return out;
}

std::vector<DyadicCube> candidate_cubes(const WhitneyDecomposition& w, const UnorderedTuple& p) {
  // The support of each localization lies inside the union of the cube's
  // neighbours, so a point can only be seen by neighbours of cubes that
  // contain it.
  std::set<DyadicCube> cubes;
  for (const auto& pt : p.points()) {
    if (pt.is_boundary()) continue;
    for (const auto& home : w.cubes_containing(pt.coords())) {
      for (const auto& q : w.neighbors(home)) cubes.insert(q);
    }
  }
  return {cubes.begin(), cubes.end()};
}

SparseT phi_star(const WhitneyDecomposition& w, const UnorderedTuple& p) {
  SparseT t;
  t.tuple_size = p.size();
  t.vector_dimension = w.domain().dimension() + 1;
  for (const auto& q : candidate_cubes(w, p)) {
    LocalMap local(q);
    PointCloud image = local.push_forward(p);
    const bool nonzero = std::any_of(image.begin(), image.end(), [](const Point& v) {
      return std::any_of(v.begin(), v.end(), [](double c) { return c != 0.0; });
    });
    if (nonzero) t.entries.emplace(q, std::move(image));
  }
  return t;
}

double t_distance_squared(const SparseT& a, const SparseT& b) {
  if (a.tuple_size != b.tuple_size) throw Error("t_distance: tuple sizes differ");
  const std::size_t dim = std::max(a.vector_dimension, b.vector_dimension);
  const PointCloud zeros(a.tuple_size, Point(dim, 0.0));
  double total = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    const PointCloud* lhs = &zeros;
    const PointCloud* rhs = &zeros;
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
      lhs = &(ia++)->second;
    } else if (ia == a.entries.end() || ib->first < ia->first) {
      rhs = &(ib++)->second;
    } else {
      lhs = &(ia++)->second;
      rhs = &(ib++)->second;
    }
    const double w = w2_tuples(*lhs, *rhs, 2.0);
    total += w * w;
  }
  return total;
}

double t_distance(const SparseT& a, const SparseT& b) { return std::sqrt(t_distance_squared(a, b)); }

DirectionFamily::DirectionFamily(std::vector<Point> directions)
    : directions_(std::move(directions)) {
  if (directions_.empty()) throw Error("direction family must be non-empty");
  const std::size_t dim = directions_.front().size();
  for (const auto& d : directions_) {
    if (d.size() != dim) throw Error("direction family: inconsistent dimensions");
    if (std::abs(norm(d) - 1.0) > 1e-12) throw Error("direction family: non-unit direction");
  }
}

DirectionFamily DirectionFamily::standard(std::size_t dim, int density) {
  if (dim == 0) throw Error("direction family: dimension must be positive");
  if (density < 0) throw Error("direction family: density must be >= 0");
  std::vector<Point> dirs;
  for (std::size_t i = 0; i < dim; ++i) {
    Point e(dim, 0.0);
    e[i] = 1.0;
    dirs.push_back(std::move(e));
  }
  if (density >= 1) {
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i + 1; j < dim; ++j) {
        for (double sign : {1.0, -1.0}) {
          Point e(dim, 0.0);
          e[i] = s;
          e[j] = sign * s;
          dirs.push_back(std::move(e));
        }
      }
    }
  }
  if (density >= 2) {
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> gauss;
    const std::size_t extra = static_cast<std::size_t>(density - 1) * dim;
    for (std::size_t k = 0; k < extra; ++k) {
      Point e(dim);
      double len = 0.0;
      while (len < 1e-3) {
        for (auto& c : e) c = gauss(rng);
        len = norm(e);
      }
      for (auto& c : e) c /= len;
      dirs.push_back(std::move(e));
    }
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return DirectionFamily(std::move(dirs));
}

std::vector<double> almgren_xi(const PointCloud& tuple, const DirectionFamily& family) {
  const std::size_t m = tuple.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(family.size()));
  std::vector<double> out;
  out.reserve(family.size() * m);
  std::vector<double> proj(m);
  for (const auto& e : family.directions()) {
    for (std::size_t i = 0; i < m; ++i) {
      if (tuple[i].size() != e.size()) throw Error("almgren_xi: dimension mismatch");
      double s = 0.0;
      for (std::size_t k = 0; k < e.size(); ++k) s += tuple[i][k] * e[k];
      proj[i] = s;
    }
    std::sort(proj.begin(), proj.end(), std::greater<>());
    for (double v : proj) out.push_back(scale * v);
  }
  return out;
}

double embedding_distance(const SparseEmbeddingVector& a, const SparseEmbeddingVector& b) {
  if (a.tuple_size != b.tuple_size || a.directions != b.directions) {
    throw Error("embedding_distance: incompatible embeddings");
  }
  double total = 0.0;
  auto add = [&](const std::vector<double>& u, const std::vector<double>* v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double d = u[i] - (v ? (*v)[i] : 0.0);
      total += d * d;
    }
  };
  for (const auto& [q, u] : a.entries) {
    auto it = b.entries.find(q);
    add(u, it == b.entries.end() ? nullptr : &it->second);
  }
  for (const auto& [q, v] : b.entries) {
    if (!a.entries.contains(q)) add(v, nullptr);
  }
  return std::sqrt(total);
}

SparseEmbeddingVector xi_prime(const SparseT& t, const DirectionFamily& family) {
  SparseEmbeddingVector out{t.tuple_size, family.size(), {}};
  for (const auto& [q, tuple] : t.entries) out.entries.emplace(q, almgren_xi(tuple, family));
  return out;
}

SparseEmbeddingVector zeta(const WhitneyDecomposition& w, const DirectionFamily& family,
                           const UnorderedTuple& p, std::size_t max_size) {
  if (family.dimension() != w.domain().dimension() + 1) {
    throw Error("zeta: direction family must live in R^(n+1)");
  }
  return xi_prime(phi_star(w, iota_pad(p, max_size)), family);
}

}  // namespace wbembed
