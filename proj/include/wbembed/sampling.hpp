#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "wbembed/transport.hpp"

namespace wbembed {

/// Box from which points of a domain are drawn by rejection.
Box sampling_box(const Domain& domain);

/// Seeded generator of points, tuples and couplings. Same seed, same stream.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  std::size_t uniform_index(std::size_t n);  ///< in [0, n)
  bool bernoulli(double prob);

  Point point_in_box(const Box& box);
  /// Uniform on sampling_box(domain) intersected with the domain.
  Point interior_point(const Domain& domain);
  /// Uniform on the closed r-neighbourhood box of `box`, clipped to the domain.
  Point interior_point_near(const Domain& domain, const Box& box, double r);

  /// `slots` slots, each the boundary point with probability `boundary_prob`,
  /// otherwise an interior point.
  UnorderedTuple tuple(const std::shared_ptr<const Domain>& domain, std::size_t slots,
                       double boundary_prob = 0.2);
  /// Size uniform in [0, max_size].
  UnorderedTuple tuple_up_to(const std::shared_ptr<const Domain>& domain, std::size_t max_size,
                             double boundary_prob = 0.2);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace wbembed
