#include "eulersum/polytope.hpp"
#include "eulersum/special_numbers.hpp"
#include "eulersum/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace eulersum;

namespace {
constexpr double kPi = std::numbers::pi;
using Rel = PartialOrder::Relation;
}  // namespace

TEST(PartialOrder, RejectsCyclesAndBadIndices) {
  EXPECT_THROW(PartialOrder(3, {Rel{1, 2}, Rel{2, 3}, Rel{3, 1}}), std::invalid_argument);
  EXPECT_THROW(PartialOrder(2, {Rel{1, 3}}), std::invalid_argument);
  EXPECT_THROW(PartialOrder(2, {Rel{1, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(PartialOrder(3, {Rel{1, 2}, Rel{2, 3}}));
}

TEST(PartialOrder, Constructors) {
  EXPECT_EQ(chain_poset(3).relations(), (std::set<Rel>{{1, 2}, {3, 2}}));
  EXPECT_EQ(cyclic_poset(2).relations(), (std::set<Rel>{{1, 2}}));
  EXPECT_EQ(cyclic_poset(4).relations(), (std::set<Rel>{{1, 2}, {3, 2}, {3, 4}, {1, 4}}));
  EXPECT_THROW(cyclic_poset(3), std::domain_error);
}

TEST(LinearExtensions, Examples) {
  EXPECT_EQ(linear_extension_count(chain_poset(3)), 2);
  EXPECT_EQ(linear_extension_count(cyclic_poset(4)), 4);
  EXPECT_EQ(linear_extension_count(PartialOrder::antichain(3)), 6);
  EXPECT_EQ(order_polytope_volume(chain_poset(2)), BigRational(1, 2));
  EXPECT_EQ(order_polytope_volume(cyclic_poset(6)), BigRational(1, 15));
  EXPECT_EQ(order_polytope_volume(PartialOrder::antichain(2)), BigRational(1));
  EXPECT_THROW(linear_extension_count(PartialOrder::antichain(11)), std::domain_error);
}

TEST(VolumeFormula, ExamplesAndRouteAgreement) {
  EXPECT_EQ(volume_formula({PolytopeKind::cyclic, 2, PolytopeScale::half_pi}).to_compact_string(),
            "pi^2/8");
  EXPECT_EQ(volume_formula({PolytopeKind::cyclic, 4, PolytopeScale::unit}).coeff, BigRational(1, 6));
  EXPECT_EQ(volume_formula({PolytopeKind::chain, 3, PolytopeScale::unit}).coeff, BigRational(1, 3));
  EXPECT_EQ(volume_formula({PolytopeKind::chain, 3, PolytopeScale::half_pi}),
            PiMultiple(BigRational(1, 24), 3));
  EXPECT_THROW(volume_formula({PolytopeKind::cyclic, 1, PolytopeScale::unit}), std::domain_error);
  for (int n = 2; n <= 10; n += 2)
    EXPECT_EQ(order_polytope_volume(cyclic_poset(n)),
              volume_formula({PolytopeKind::cyclic, n, PolytopeScale::unit}).coeff);
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(order_polytope_volume(chain_poset(n)),
              BigRational(zigzag(static_cast<unsigned>(n)), factorial(static_cast<unsigned>(n))));
}

// At n = 2 the closing constraint repeats the single chain constraint, so
// the two volumes coincide; from n = 4 on the chain region is strictly larger.
TEST(VolumeFormula, ChainExceedsCyclicForEvenN) {
  EXPECT_EQ(volume_formula({PolytopeKind::chain, 2, PolytopeScale::unit}).coeff,
            volume_formula({PolytopeKind::cyclic, 2, PolytopeScale::unit}).coeff);
  for (int n = 4; n <= 10; n += 2)
    EXPECT_GT(volume_formula({PolytopeKind::chain, n, PolytopeScale::unit}).coeff,
              volume_formula({PolytopeKind::cyclic, n, PolytopeScale::unit}).coeff);
}

TEST(PolytopeSpec, ContainmentIsOpen) {
  const PolytopeSpec c{PolytopeKind::cyclic, 2, PolytopeScale::unit};
  EXPECT_TRUE(c.contains(Point{0.2, 0.3}));
  EXPECT_FALSE(c.contains(Point{0.5, 0.5}));
  EXPECT_FALSE(c.contains(Point{0.0, 0.3}));
  const PolytopeSpec chain{PolytopeKind::chain, 3, PolytopeScale::unit};
  const PolytopeSpec cyc{PolytopeKind::cyclic, 3, PolytopeScale::unit};
  EXPECT_TRUE(chain.contains(Point{0.7, 0.2, 0.7}));
  EXPECT_FALSE(cyc.contains(Point{0.7, 0.2, 0.7}));
}

TEST(PolytopeSpec, CyclicPointsSatisfyChainConstraints) {
  std::mt19937_64 rng(9);
  for (int n : {2, 3, 4, 6}) {
    const PolytopeSpec cyc{PolytopeKind::cyclic, n, PolytopeScale::unit};
    const PolytopeSpec chain{PolytopeKind::chain, n, PolytopeScale::unit};
    int hits = 0;
    for (int i = 0; i < 20000; ++i) {
      Point v(n);
      for (double& x : v) x = uniform01(rng);
      if (cyc.contains(v)) {
        ++hits;
        EXPECT_TRUE(chain.contains(v));
      }
    }
    EXPECT_GT(hits, 0);
  }
}

TEST(TToV, InvolutionAndExamples) {
  EXPECT_EQ(t_to_v_transform(Point{0.2, 0.9})[1], 1.0 - 0.9);
  const Point t{0.1, 0.8, 0.3};
  const Point v = t_to_v_transform(t);
  EXPECT_DOUBLE_EQ(v[1], 0.2);
  EXPECT_LT(v[0] + v[1], 1.0);
  EXPECT_LT(v[1] + v[2], 1.0);
  EXPECT_EQ(t_to_v_transform(t_to_v_transform(t)), t);
}

TEST(TToV, MapsLinearExtensionsToPolytopeMembership) {
  std::mt19937_64 rng(21);
  for (int n : {3, 4, 5}) {
    const PolytopeSpec chain{PolytopeKind::chain, n, PolytopeScale::unit};
    const PartialOrder order = chain_poset(n);
    for (int i = 0; i < 5000; ++i) {
      Point t(n);
      for (double& x : t) x = uniform01(rng);
      // Ranks of t give the permutation whose extension test mirrors the coordinate order.
      std::vector<int> rank(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rank[a] += t[b] <= t[a];
      EXPECT_EQ(order.extended_by(rank), chain.contains(t_to_v_transform(t)));
    }
  }
}

TEST(ForwardMap, Examples) {
  const Point x = forward_map(Point{kPi / 6, kPi / 6});
  EXPECT_NEAR(x[0], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(x[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(forward_map(Point{kPi / 8})[0], std::tan(kPi / 8), 1e-15);
  EXPECT_THROW(forward_map(Point{kPi / 4, kPi / 4}), std::domain_error);
  EXPECT_THROW(forward_map(Point{0.0, 0.3}), std::domain_error);
}

TEST(ForwardMap, LandsInUnitCube) {
  std::mt19937_64 rng(4);
  for (int n : {1, 2, 3, 5, 8})
    for (int i = 0; i < 200; ++i)
      for (double xi : forward_map(random_interior_point(n, 1e-3, rng))) {
        EXPECT_GT(xi, 0.0);
        EXPECT_LT(xi, 1.0);
      }
}

TEST(Jacobian, FormulaExamples) {
  const double s = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(jacobian_formula(Point{s, s}), 8.0 / 9.0, 1e-15);
  EXPECT_NEAR(jacobian_formula(Point{1e-9, 1e-9, 1e-9}), 1.0, 1e-15);
  EXPECT_NEAR(jacobian_formula(Point{0.5}), 1.25, 1e-15);
}

TEST(Jacobian, FiniteDifferenceAgreesWithFormula) {
  for (int n : {1, 2, 3, 5, 8}) EXPECT_LT(cube_map_jacobian_error(n, 100, 0), 1e-5) << n;
}

TEST(InverseMap, Examples) {
  const double s = 1.0 / std::sqrt(3.0);
  const Point u = inverse_map(Point{s, s});
  EXPECT_NEAR(u[0], kPi / 6, 1e-12);
  EXPECT_NEAR(u[1], kPi / 6, 1e-12);
  EXPECT_NEAR(inverse_map(Point{std::tan(kPi / 8)})[0], kPi / 8, 1e-12);
  EXPECT_THROW(inverse_map(Point{1.0}), std::domain_error);
  EXPECT_THROW(inverse_map(Point{0.5, 0.0}), std::domain_error);
}

TEST(InverseMap, RoundTripBothMethods) {
  for (int n : {1, 2, 3, 5, 8}) EXPECT_LT(cube_map_roundtrip_error(n, 100, 0), 1e-10) << n;
  InverseOptions plain;
  plain.method = InverseMethod::plain;
  plain.max_iter = 100000;
  for (int n : {2, 3, 5, 8}) EXPECT_LT(cube_map_roundtrip_error(n, 100, 1, plain), 1e-10) << n;
}

TEST(InverseMap, StartingPointDoesNotMatter) {
  const Point x{0.3, 0.9, 0.6};
  InverseOptions a, b;
  a.start = 0.1;
  b.start = 1.5;
  const Point ua = inverse_map(x, a), ub = inverse_map(x, b);
  EXPECT_LT(max_abs_diff(ua, ub), 1e-12);
  EXPECT_TRUE(in_cyclic_polytope(ua));
}

// Near the corner (1, ..., 1) the plain iteration contracts at rate
// (prod x)^2 and needs far more than 200 steps; it must report failure.
TEST(InverseMap, PlainIterationReportsNonConvergence) {
  InverseOptions plain;
  plain.method = InverseMethod::plain;
  EXPECT_THROW(inverse_map(Point{0.999}, plain), std::runtime_error);
  EXPECT_NO_THROW(inverse_map(Point{0.999}));
}
