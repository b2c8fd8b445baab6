#include <gtest/gtest.h>

#include <cmath>

#include "wbembed/error.hpp"
#include "wbembed/sampling.hpp"
#include "wbembed/transport.hpp"

using namespace wbembed;

namespace {

auto interval() { return std::make_shared<const Domain>(Domain::open_box({0.0}, {1.0})); }
auto square() { return std::make_shared<const Domain>(Domain::open_box({0.0, 0.0}, {1.0, 1.0})); }

UnorderedTuple tuple(const std::shared_ptr<const Domain>& d, std::vector<Point> pts,
                     std::size_t boundary = 0) {
  return UnorderedTuple::from_coords(d, pts, boundary);
}

}  // namespace

TEST(Transport, W2Examples) {
  const auto line = std::make_shared<const Domain>(Domain::punctured({{-100.0}}));
  EXPECT_NEAR(w2_tuples(tuple(line, {{0.0}, {1.0}}), tuple(line, {{0.5}, {1.5}}), 2.0, GroundMetric::Euclidean),
              std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(w2_tuples(PointCloud{{0.0}, {1.0}}, PointCloud{{0.5}, {1.5}}), std::sqrt(0.5), 1e-15);
  const auto sq = square();
  EXPECT_NEAR(w2_tuples(tuple(sq, {{0.1, 0.5}}), tuple(sq, {{0.9, 0.5}})), 0.2, 1e-15);
  EXPECT_THROW(w2_tuples(tuple(sq, {{0.1, 0.5}}), tuple(sq, {})), Error);
}

TEST(Transport, WbExamples) {
  const auto d = interval();
  EXPECT_NEAR(wb_tuples(tuple(d, {{0.5}}), tuple(d, {})), 0.5, 1e-15);
  EXPECT_NEAR(wb_tuples(tuple(d, {{0.1}}), tuple(d, {{0.9}}), 1.0), 0.2, 1e-15);
  // Each point leaves through its own face: 0.1^2 + 0.1^2.
  EXPECT_NEAR(wb_tuples(tuple(d, {{0.1}}), tuple(d, {{0.9}}), 2.0), std::sqrt(0.02), 1e-15);
  EXPECT_NEAR(wb_bruteforce(tuple(d, {{0.1}}), tuple(d, {{0.9}}), 2.0), std::sqrt(0.02), 1e-15);
  EXPECT_NEAR(wb_tuples(tuple(d, {{0.2}, {0.8}}), tuple(d, {{0.5}})), std::sqrt(0.13), 1e-12);
  EXPECT_NEAR(wb_bruteforce(tuple(d, {{0.2}, {0.8}}), tuple(d, {{0.5}})), std::sqrt(0.13), 1e-12);
  const auto p = tuple(d, {{0.3}, {0.7}}, 1);
  EXPECT_EQ(wb_tuples(p, p), 0.0);
  EXPECT_EQ(wb_bruteforce(p, p), 0.0);
}

TEST(Transport, DomainMismatchThrows) {
  EXPECT_THROW(wb_tuples(tuple(interval(), {{0.5}}), tuple(square(), {{0.5, 0.5}})), Error);
}

TEST(Transport, ExponentValidated) {
  const auto d = interval();
  EXPECT_THROW(wb_tuples(tuple(d, {{0.5}}), tuple(d, {}), 0.5), Error);
}

TEST(Transport, IotaPad) {
  const auto d = interval();
  const auto padded = iota_pad(tuple(d, {}), 2);
  EXPECT_EQ(padded.size(), 4u);
  EXPECT_EQ(padded.boundary_count(), 4u);
  EXPECT_THROW(iota_pad(tuple(d, {{0.1}, {0.2}, {0.3}}), 1), Error);
}

TEST(Transport, PaddingInvariance) {
  Sampler s(11);
  const auto d = square();
  for (int t = 0; t < 100; ++t) {
    const auto p = s.tuple_up_to(d, 4);
    const auto q = s.tuple_up_to(d, 4);
    const std::size_t extra = s.uniform_index(3);
    auto pad = [&](const UnorderedTuple& x) {
      auto pts = x.points();
      for (std::size_t i = 0; i < extra; ++i) pts.push_back(ShortcutPoint::boundary());
      return UnorderedTuple(d, pts);
    };
    EXPECT_NEAR(wb_tuples(p, q), wb_tuples(pad(p), pad(q)), 1e-12);
  }
}

TEST(Transport, PermutationInvariance) {
  const auto d = square();
  const UnorderedTuple a(d, {ShortcutPoint::at({0.2, 0.3}), ShortcutPoint::boundary(), ShortcutPoint::at({0.7, 0.1})});
  const UnorderedTuple b(d, {ShortcutPoint::at({0.7, 0.1}), ShortcutPoint::at({0.2, 0.3}), ShortcutPoint::boundary()});
  EXPECT_EQ(a, b);
  const auto q = tuple(d, {{0.5, 0.5}});
  EXPECT_EQ(wb_tuples(a, q), wb_tuples(b, q));
}

TEST(Transport, TriangleInequality) {
  Sampler s(12);
  const auto d = square();
  for (int t = 0; t < 300; ++t) {
    const auto p = s.tuple_up_to(d, 3);
    const auto q = s.tuple_up_to(d, 3);
    const auto r = s.tuple_up_to(d, 3);
    EXPECT_EQ(wb_tuples(p, q), wb_tuples(q, p));
    EXPECT_LE(wb_tuples(p, r), wb_tuples(p, q) + wb_tuples(q, r) + 1e-12);
  }
}

TEST(Coupling, ToShortcutExample) {
  const Domain d = Domain::open_box({0.0, 0.0}, {1.0, 1.0});
  const DiscreteCoupling g{{ShortcutPoint::at({0.1, 0.5}), ShortcutPoint::at({-1.0, 0.5}), 1.0}};
  const auto out = coupling_to_shortcut(d, g);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].source, ShortcutPoint::at({0.1, 0.5}));
  EXPECT_TRUE(out[0].target.is_boundary());
  EXPECT_NEAR(shortcut_cost(d, out, 1.0), 0.1, 1e-15);
  EXPECT_NEAR(euclidean_cost(g, 1.0), 1.1, 1e-15);
}

TEST(Coupling, InteriorUnchanged) {
  const Domain d = Domain::open_box({0.0, 0.0}, {1.0, 1.0});
  const DiscreteCoupling g{{ShortcutPoint::at({0.1, 0.5}), ShortcutPoint::at({0.2, 0.5}), 1.0}};
  const auto to = coupling_to_shortcut(d, g);
  const auto from = coupling_from_shortcut(d, g);
  ASSERT_EQ(to.size(), 1u);
  ASSERT_EQ(from.size(), 1u);
  EXPECT_EQ(to[0].target, g[0].target);
  EXPECT_EQ(from[0].target, g[0].target);
}

TEST(Coupling, FromShortcutExample) {
  const Domain d = Domain::open_box({0.0, 0.0}, {1.0, 1.0});
  const DiscreteCoupling g{{ShortcutPoint::at({0.1, 0.5}), ShortcutPoint::at({0.9, 0.5}), 1.0}};
  const auto out = coupling_from_shortcut(d, g);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].source, ShortcutPoint::at({0.1, 0.5}));
  EXPECT_EQ(out[0].target, ShortcutPoint::at({0.0, 0.5}));
  EXPECT_EQ(out[1].source, ShortcutPoint::at({1.0, 0.5}));
  EXPECT_EQ(out[1].target, ShortcutPoint::at({0.9, 0.5}));
  EXPECT_NEAR(euclidean_cost(out, 1.0), shortcut_cost(d, g, 1.0), 1e-15);
  EXPECT_NEAR(euclidean_cost(out, 2.0), 0.02, 1e-15);
  EXPECT_NEAR(shortcut_cost(d, g, 2.0), 0.04, 1e-15);
}

TEST(Coupling, FromShortcutRejectsExteriorInterior) {
  const Domain d = Domain::open_box({0.0, 0.0}, {1.0, 1.0});
  const DiscreteCoupling g{{ShortcutPoint::at({1.5, 0.5}), ShortcutPoint::at({0.9, 0.5}), 1.0}};
  EXPECT_THROW(coupling_from_shortcut(d, g), Error);
}

TEST(Coupling, OptimalCouplingMarginals) {
  const auto d = square();
  const auto p = tuple(d, {{0.1, 0.5}, {0.5, 0.5}});
  const auto q = tuple(d, {{0.52, 0.5}});
  DiscreteCoupling g{{ShortcutPoint::at({0.1, 0.5}), ShortcutPoint::boundary(), 1.0},
                     {ShortcutPoint::at({0.5, 0.5}), ShortcutPoint::at({0.52, 0.5}), 1.0}};
  EXPECT_TRUE(couples(*d, g, p, q));
  g.pop_back();
  EXPECT_FALSE(couples(*d, g, p, q));
}
