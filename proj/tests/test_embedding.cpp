#include <gtest/gtest.h>

#include <cmath>

#include "wbembed/embedding.hpp"
#include "wbembed/error.hpp"
#include "wbembed/sampling.hpp"

using namespace wbembed;

namespace {

std::shared_ptr<const Domain> interval() {
  return std::make_shared<const Domain>(Domain::open_box({0.0}, {1.0}));
}

std::shared_ptr<const Domain> square() {
  return std::make_shared<const Domain>(Domain::open_box({0.0, 0.0}, {1.0, 1.0}));
}

}  // namespace

TEST(Constants, DimensionTwo) {
  const auto c = Constants::for_dimension(2);
  EXPECT_EQ(c.c0, 69984.0);
  EXPECT_NEAR(c.c1, 1.0 / (48.0 * std::sqrt(2.0)), 1e-18);
  EXPECT_NEAR(c.c2, 921600.0, 1e-6);
  EXPECT_EQ(c.c3, c.c2);
}

TEST(LocalMap, CutoffAndValues) {
  const LocalMap m(DyadicCube{-2, {1, 1}});  // [1/4,1/2]^2
  const Point c = m.center();
  EXPECT_EQ(m.eta(c), 1.0);
  EXPECT_EQ(m.lambda(c), (Point{0.0, 0.0, 0.25}));
  EXPECT_EQ(m.lambda(ShortcutPoint::boundary()), (Point{0.0, 0.0, 0.0}));
  // dist to the cube is l/8 + l/8 = l/4: the ramp is exhausted.
  EXPECT_EQ(m.eta(Point{0.5 + 0.0625, 0.4}), 0.0);
  // Halfway down the ramp.
  EXPECT_NEAR(m.eta(Point{0.5 + 0.03125 + 0.015625, 0.4}), 0.5, 1e-15);
}

TEST(LocalMap, IsometricNearTheCube) {
  const LocalMap m(DyadicCube{-3, {2, 3}});
  Sampler s(8);
  const double l = m.side();
  for (int i = 0; i < 1000; ++i) {
    Point x = s.point_in_box(Box{{0.25 - l / 8, 0.375 - l / 8}, {0.375 + l / 8, 0.5 + l / 8}});
    Point y = s.point_in_box(Box{{0.25, 0.375}, {0.375, 0.5}});
    if (m.distance_to_neighbourhood(x, 0.0) > l / 8) continue;
    EXPECT_NEAR(euclidean_distance(m.lambda(x), m.lambda(y)), euclidean_distance(x, y), 1e-12);
  }
}

TEST(LocalMap, PushForwardOfCenters) {
  auto d = square();
  const LocalMap m(DyadicCube{-2, {1, 1}});
  const auto p = UnorderedTuple::from_coords(d, {m.center(), m.center()}, 1);
  const auto cloud = m.push_forward(p);
  ASSERT_EQ(cloud.size(), 3u);
  EXPECT_EQ(std::count(cloud.begin(), cloud.end(), (Point{0.0, 0.0, 0.25})), 2);
  EXPECT_EQ(std::count(cloud.begin(), cloud.end(), (Point{0.0, 0.0, 0.0})), 1);
}

TEST(PhiStar, SinglePoint) {
  auto d = interval();
  WhitneyDecomposition w(d);
  const auto t = phi_star(w, UnorderedTuple::from_coords(d, {{0.375}}, 0));
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_EQ(t.entries.begin()->first, (DyadicCube{-2, {1}}));
  EXPECT_EQ(t.entries.begin()->second, (PointCloud{{0.0, 0.25}}));
}

TEST(PhiStar, BoundaryOnlyIsEmpty) {
  auto d = interval();
  WhitneyDecomposition w(d);
  EXPECT_TRUE(phi_star(w, UnorderedTuple::from_coords(d, {}, 3)).entries.empty());
}

TEST(TDistance, Definition) {
  auto d = interval();
  WhitneyDecomposition w(d);
  const auto a = phi_star(w, UnorderedTuple::from_coords(d, {{0.375}}, 0));
  const auto b = phi_star(w, UnorderedTuple::from_coords(d, {{0.6}}, 0));
  EXPECT_EQ(t_distance(a, a), 0.0);
  double expected = 0.0;
  for (const auto& [q, cloud] : a.entries) {
    if (!b.entries.contains(q)) expected += std::pow(w2_tuples(cloud, PointCloud{{0.0, 0.0}}), 2);
  }
  for (const auto& [q, cloud] : b.entries) {
    if (!a.entries.contains(q)) expected += std::pow(w2_tuples(cloud, PointCloud{{0.0, 0.0}}), 2);
    else expected += std::pow(w2_tuples(cloud, a.entries.at(q)), 2);
  }
  EXPECT_NEAR(t_distance_squared(a, b), expected, 1e-15);
  SparseT mismatched = b;
  mismatched.tuple_size = 2;
  EXPECT_THROW(t_distance(a, mismatched), Error);
}

TEST(Xi, ZeroTupleMapsToZero) {
  const auto f = DirectionFamily::standard(3);
  for (double v : almgren_xi(PointCloud(4, Point(3, 0.0)), f)) EXPECT_EQ(v, 0.0);
}

TEST(Xi, OrthonormalBasisSinglePoint) {
  const auto f = DirectionFamily::standard(3, 0);
  ASSERT_EQ(f.size(), 3u);
  const PointCloud t{{0.1, -0.4, 0.7}};
  const PointCloud s{{0.3, 0.2, -0.1}};
  EXPECT_NEAR(euclidean_distance(almgren_xi(t, f), almgren_xi(s, f)),
              euclidean_distance(t[0], s[0]) / std::sqrt(3.0), 1e-15);
}

TEST(Xi, PermutationInvariant) {
  const auto f = DirectionFamily::standard(2, 2);
  EXPECT_EQ(almgren_xi({{0.1, 0.2}, {0.5, -0.3}}, f), almgren_xi({{0.5, -0.3}, {0.1, 0.2}}, f));
}

TEST(Xi, RejectsNonUnitDirections) {
  EXPECT_THROW(DirectionFamily({{1.0, 1.0}}), Error);
}

TEST(Zeta, UpperBound) {
  auto d = square();
  WhitneyDecomposition w(d);
  const auto family = DirectionFamily::standard(3);
  const auto c0 = Constants::for_dimension(2).c0;
  Sampler s(9);
  for (int i = 0; i < 100; ++i) {
    const auto p = s.tuple_up_to(d, 2);
    const auto q = s.tuple_up_to(d, 2);
    const double z = embedding_distance(zeta(w, family, p, 2), zeta(w, family, q, 2));
    EXPECT_LE(z, std::sqrt(c0) * wb_tuples(p, q) + 1e-12);
  }
  const auto p = s.tuple_up_to(d, 2);
  EXPECT_EQ(embedding_distance(zeta(w, family, p, 2), zeta(w, family, p, 2)), 0.0);
  EXPECT_THROW(zeta(w, DirectionFamily::standard(2), p, 2), Error);
}
