#include "wbembed/sampling.hpp"

#include <algorithm>

namespace wbembed {

Box sampling_box(const Domain& domain) {
  const std::size_t n = domain.dimension();
  return std::visit(
      [n](const auto& v) -> Box {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, OpenBox>) {
          return {v.low, v.high};
        } else if constexpr (std::is_same_v<T, UpperDiagonalHalfPlane>) {
          return {{0.0, 0.0}, {2.0, 2.0}};
        } else if constexpr (std::is_same_v<T, PuncturedSpace>) {
          Box b{v.removed.front(), v.removed.front()};
          for (const auto& p : v.removed) {
            for (std::size_t i = 0; i < n; ++i) {
              b.low[i] = std::min(b.low[i], p[i]);
              b.high[i] = std::max(b.high[i], p[i]);
            }
          }
          for (std::size_t i = 0; i < n; ++i) {
            b.low[i] -= 1.0;
            b.high[i] += 1.0;
          }
          return b;
        } else {
          Box b{v.low, v.high};
          for (std::size_t i = 0; i < n; ++i) {
            const double w = v.high[i] - v.low[i];
            b.low[i] -= w;
            b.high[i] += w;
          }
          return b;
        }
      },
      domain.variant());
}

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

std::size_t Sampler::uniform_index(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

bool Sampler::bernoulli(double prob) { return std::bernoulli_distribution(prob)(rng_); }

Point Sampler::point_in_box(const Box& box) {
  Point p(box.dimension());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = uniform(box.low[i], box.high[i]);
  return p;
}

Point Sampler::interior_point(const Domain& domain) {
  const Box box = sampling_box(domain);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Point p = point_in_box(box);
    if (domain.contains(p)) return p;
  }
  throw Error("sampler: rejection sampling failed");
}

Point Sampler::interior_point_near(const Domain& domain, const Box& box, double r) {
  Box grown = box;
  for (std::size_t i = 0; i < grown.dimension(); ++i) {
    grown.low[i] -= r;
    grown.high[i] += r;
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Point p = point_in_box(grown);
    if (domain.contains(p)) return p;
  }
  throw Error("sampler: rejection sampling failed");
}

UnorderedTuple Sampler::tuple(const std::shared_ptr<const Domain>& domain, std::size_t slots,
                              double boundary_prob) {
  std::vector<ShortcutPoint> pts;
  for (std::size_t i = 0; i < slots; ++i) {
    if (bernoulli(boundary_prob)) pts.push_back(ShortcutPoint::boundary());
    else pts.push_back(ShortcutPoint::at(interior_point(*domain)));
  }
  return UnorderedTuple(domain, std::move(pts));
}

UnorderedTuple Sampler::tuple_up_to(const std::shared_ptr<const Domain>& domain,
                                    std::size_t max_size, double boundary_prob) {
  return tuple(domain, uniform_index(max_size + 1), boundary_prob);
}

}  // namespace wbembed
