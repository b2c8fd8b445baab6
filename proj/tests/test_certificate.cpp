#include <gtest/gtest.h>

#include <algorithm>

#include "wbembed/certificate.hpp"
#include "wbembed/sampling.hpp"

using namespace wbembed;

namespace {

std::shared_ptr<const Domain> square() {
  return std::make_shared<const Domain>(Domain::open_box({0.0, 0.0}, {1.0, 1.0}));
}

bool is_permutation(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != i) return false;
  return true;
}

}  // namespace

TEST(Certificate, IdenticalTuples) {
  auto d = square();
  WhitneyDecomposition w(d);
  const auto p = iota_pad(UnorderedTuple::from_coords(d, {{0.3, 0.4}, {0.8, 0.2}}, 0), 2);
  const auto cert = lower_bound_certificate(w, p, p, Constants::for_dimension(2));
  EXPECT_EQ(cert.sum_all, 0.0);
  EXPECT_EQ(cert.tau_shortcut_cost, 0.0);
  EXPECT_EQ(cert.lower_bound, 0.0);
  EXPECT_TRUE(is_permutation(cert.tau));
}

TEST(Certificate, NearbyPointsInOneCube) {
  auto d = square();
  WhitneyDecomposition w(d);
  const LocalMap m(w.cube_containing(Point{0.5, 0.5}));
  const Point c = m.center();
  const double l = m.side();
  const auto p = UnorderedTuple::from_coords(d, {c}, 0);
  const auto q = UnorderedTuple::from_coords(d, {{c[0] + l / 100, c[1]}}, 0);
  const auto cert = lower_bound_certificate(w, p, q, Constants::for_dimension(2));
  const auto it = std::find_if(cert.cubes.begin(), cert.cubes.end(),
                               [&](const CubeCertificate& cc) { return cc.cube == m.cube(); });
  ASSERT_NE(it, cert.cubes.end());
  EXPECT_TRUE(it->close_match);
  EXPECT_EQ(cert.tau, it->sigma);
  EXPECT_GE(cert.sum_all, cert.region_cost * (1.0 - 1e-12));
}

TEST(Certificate, RandomPairsMeetTheLowerBound) {
  auto d = square();
  WhitneyDecomposition w(d);
  const auto constants = Constants::for_dimension(2);
  Sampler s(10);
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = 1 + s.uniform_index(2);
    const auto p = iota_pad(s.tuple_up_to(d, m), m);
    const auto q = iota_pad(s.tuple_up_to(d, m), m);
    const auto cert = lower_bound_certificate(w, p, q, constants);
    EXPECT_TRUE(is_permutation(cert.tau));
    EXPECT_GE(cert.sum_all * (1.0 + 1e-12), cert.lower_bound);
    EXPECT_GE(cert.tau_shortcut_cost * (1.0 + 1e-12), cert.w2_squared);
    const double direct = t_distance_squared(phi_star(w, p), phi_star(w, q));
    EXPECT_NEAR(cert.sum_all, direct, 1e-12 * std::max(1.0, direct));
  }
}
