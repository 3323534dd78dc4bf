#include "oracles/oracles.hpp"

#include "tsurf/errors.hpp"
#include "tsurf/jump.hpp"
#include "tsurf/series.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace tsurf;

namespace {

Rational random_nonzero(std::mt19937_64 &rng)
{
  std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
  long p = 0;
  while (p == 0)
    p = num(rng);
  return rat(p, den(rng));
}

LeadingSeries random_series(std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> coin(0, 1);
  LeadingSeries f(5);
  for (long a = -1; a < 5; ++a)
    for (int b = 0; b < 2; ++b)
      if (coin(rng))
        f.set(a, b, random_nonzero(rng));
  return f;
}

void expect_agree(const LeadingSeries &f, const LeadingSeries &g)
{
  long top = std::min(f.order(), g.order());
  for (long a = -4; a < top; ++a)
    for (int b = 0; b < 4; ++b) {
      auto x = f.coefficient(a, b), y = g.coefficient(a, b);
      if (x && y) {
        EXPECT_EQ(*x, *y) << "s^" << a << " ln^" << b << " in " << f.to_string() << " vs " << g.to_string();
      }
    }
}

} // namespace

TEST(Series, ArithmeticAndDerivative)
{
  LeadingSeries f(3);
  f.set(0, 1, rat(2)).set(0, 0, rat(1)).set(1, 0, rat(3));
  EXPECT_EQ(f.c_log(), rat(2));
  EXPECT_EQ(f.k(), 1);
  EXPECT_EQ(f.c_k(), rat(3));
  auto d = f.derivative();
  EXPECT_EQ(d.coefficient(-1, 0), rat(2));
  EXPECT_EQ(d.coefficient(0, 0), rat(3));
  EXPECT_EQ(d.order(), 2);
  auto sq = f * f;
  EXPECT_EQ(sq.coefficient(0, 2), rat(4));
  EXPECT_EQ(sq.coefficient(1, 0), rat(6));
  EXPECT_FALSE(LeadingSeries::opaque_constant(2).c0());
  EXPECT_EQ(LeadingSeries::zero().k(), LeadingSeries::kInfinite);
}

TEST(Series, LeibnizRuleAtTrackedOrder)
{
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    auto f = random_series(rng), g = random_series(rng);
    expect_agree((f * g).derivative(), f.derivative() * g + f * g.derivative());
  }
}

TEST(Series, DeterminantOfDiagonal)
{
  auto a = LeadingSeries::constant(rat(2)), b = LeadingSeries::constant(rat(3));
  auto z = LeadingSeries::zero();
  auto det = determinant({{a, z}, {z, b}});
  EXPECT_EQ(det.c0(), rat(6));
}

TEST(SCoordinate, Values)
{
  EXPECT_DOUBLE_EQ(s_coordinate(0, rat(1, 4), 1), 1.0);
  EXPECT_NEAR(s_coordinate(2 * std::log(2.0) / std::numbers::pi, rat(1, 4), 1), 0.5, 1e-12);
  for (double t = 0; t < 5; t += 0.25)
    EXPECT_DOUBLE_EQ(s_coordinate(t, rat(1, 4), 1), s_coordinate(t, rat(1, 2), 2));
}

namespace {

WeightedDualGraph path_graph(long n1, long n2)
{
  WeightedDualGraph g;
  g.graph.vertices = {{1}, {0}, {1}};
  g.graph.edges = {{0, 1, 0}, {1, 2, 1}};
  g.n = {n1, n2};
  g.a = {1, 1};
  g.node_points[{0, false}] = rat(0);
  g.node_points[{1, true}] = rat(1);
  return g;
}

} // namespace

TEST(JumpDistance, Examples)
{
  auto g = path_graph(2, 3);
  DifferentialSymbol left{0, {0}, {}, {}}, right{1, {2}, {}, {}}, both{2, {0, 2}, {}, {}};
  EXPECT_EQ(jump_distance(g, left, right), 5);
  EXPECT_EQ(jump_distance(g, left, both), 0);
  EXPECT_EQ(jump_distance(g, right, left), 5);

  Case6Input in;
  in.r1 = 1;
  in.r2 = 2;
  auto c6 = case6_graph(in);
  DifferentialSymbol t1{0, {0}, {}, {}}, t2{1, {1}, {}, {}};
  EXPECT_EQ(jump_distance(c6, t1, t2), 1);
  EXPECT_EQ(minimal_paths(c6, t1, t2).size(), 1u);
}

TEST(JumpDistance, TriangleInequality)
{
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> w(1, 6);
  for (int i = 0; i < 100; ++i) {
    auto g = path_graph(w(rng), w(rng));
    std::vector<DifferentialSymbol> s{{0, {0}, {}, {}}, {1, {1}, {}, {}}, {2, {2}, {}, {}}};
    for (const auto &a : s)
      for (const auto &b : s)
        for (const auto &c : s)
          EXPECT_LE(jump_distance(g, a, c), jump_distance(g, a, b) + jump_distance(g, b, c));
    for (const auto &a : s)
      EXPECT_EQ(jump_distance(g, a, a), 0);
  }
}

TEST(PathCoefficient, SingleEdge)
{
  WeightedDualGraph g;
  g.graph.vertices = {{1}, {1}};
  g.graph.edges = {{0, 1, 0}};
  g.n = {1};
  g.a = {rat(2)};
  DifferentialSymbol ti{0, {0}, {}, {{{0, true}, rat(3)}}}, tj{1, {1}, {}, {{{0, false}, rat(5)}}};
  OrientedPath p{{{0, true}}};
  EXPECT_EQ(path_coefficient(g, p, ti, tj), rat(-30));
}

TEST(PathCoefficient, BackAndForthIntoGenusZeroVanishes)
{
  auto g = path_graph(1, 1);
  DifferentialSymbol t{0, {0}, {}, {{{0, true}, rat(7)}}};
  OrientedPath p{{{0, true}, {0, false}}};
  EXPECT_EQ(path_coefficient(g, p, t, t), rat(0));
}

TEST(PathCoefficient, TwoEdgesThroughGenusZero)
{
  // nodes at 0 and 1 on the sphere: the kernel value is -1/(1-0)^2
  auto g = path_graph(1, 1);
  DifferentialSymbol ti{0, {0}, {}, {{{0, true}, rat(1)}}}, tj{1, {2}, {}, {{{1, false}, rat(1)}}};
  OrientedPath p{{{0, true}, {1, true}}};
  EXPECT_EQ(path_coefficient(g, p, ti, tj), rat(-1));
}

TEST(PathCoefficient, LongerPathsUnsupported)
{
  WeightedDualGraph g;
  g.graph.vertices = {{1}, {0}, {0}, {1}};
  g.graph.edges = {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}};
  g.n = {1, 1, 1};
  g.a = {1, 1, 1};
  g.node_points[{0, false}] = rat(0);
  g.node_points[{1, true}] = rat(1);
  g.node_points[{1, false}] = rat(0);
  g.node_points[{2, true}] = rat(1);
  DifferentialSymbol ti{0, {0}, {}, {}}, tj{1, {3}, {}, {}};
  OrientedPath p{{{0, true}, {1, true}, {2, true}}};
  EXPECT_THROW(path_coefficient(g, p, ti, tj), UnsupportedLength);
  EXPECT_THROW(period_leading(g, {{0, 0}, {0, 0}, {0, 0}}, ti, tj), UnsupportedLength);
}

TEST(PeriodLeading, DisconnectedSupportsGiveAConstant)
{
  WeightedDualGraph g;
  g.graph.vertices = {{1}, {1}};
  g.n = {};
  g.a = {};
  DifferentialSymbol ti{0, {0}, {}, {}}, tj{1, {1}, {}, {}};
  auto f = period_leading(g, {}, ti, tj);
  EXPECT_EQ(f.k(), LeadingSeries::kInfinite);
  EXPECT_EQ(f.c_log(), rat(0));
}

TEST(PeriodLeading, Case6OffDiagonalEntry)
{
  std::mt19937_64 rng(33);
  for (int i = 0; i < 50; ++i) {
    Case6Input in;
    in.r1 = 1 + static_cast<long>(rng() % 4);
    in.r2 = in.r1 + 1 + static_cast<long>(rng() % 4);
    in.theta1_p1 = random_nonzero(rng);
    in.theta2_p2 = random_nonzero(rng);
    auto r = case6_moduli_forcing(in);
    // derivative of the s^{r1} term of Pi_12, coefficient -a1 Theta1(p1) Theta2(p2)
    EXPECT_EQ(r.pi12_coefficient, -Rational(in.r1) * in.theta1_p1 * in.theta2_p2);
  }
}

TEST(PeriodLeading, Case6LogTerm)
{
  Case6Input in;
  in.r1 = 2;
  in.r2 = 5;
  auto g = case6_graph(in);
  DifferentialSymbol t3{2, {0, 1}, {0, 1}, {}};
  auto f = period_leading(g, {{0, 0, 1}, {0, 0, 1}}, t3, t3);
  EXPECT_EQ(f.c_log(), rat(in.r1 + in.r2));
}

TEST(LogCoefficient, Symmetric)
{
  std::vector<IntVec> crossing{{1, 0, 1}, {0, 2, -1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(log_coefficient(crossing, i, j), log_coefficient(crossing, j, i));
  EXPECT_EQ(log_coefficient(crossing, 0, 1), (std::vector<long>{0, 0}));
  EXPECT_EQ(log_coefficient(crossing, 2, 2), (std::vector<long>{1, 1}));
}

TEST(Case3, BranchA)
{
  Case3Input in;
  in.n1 = 1;
  in.n2 = 2;
  auto r = case3_verdict(in);
  EXPECT_EQ(r.branch, 'a');
  EXPECT_EQ(r.order, 1);
  EXPECT_EQ(r.coefficient, rat(-1));
  EXPECT_EQ(r.verdict, "Forni impossible");
}

TEST(Case3, BranchBMatchesPrintedMagnitude)
{
  Case3Input in;
  auto r = case3_verdict(in);
  EXPECT_EQ(r.branch, 'b');
  EXPECT_EQ(r.order, 2);
  EXPECT_EQ(r.printed_coefficient, rat(2));
  // the sphere kernel -1/(z-w)^2 flips the printed sign
  EXPECT_EQ(r.coefficient, rat(-2));
  EXPECT_EQ(r.verdict, "Forni impossible");
}

TEST(Case3, Errors)
{
  Case3Input in;
  in.omega_p = 0;
  EXPECT_THROW(case3_verdict(in), ZeroNodeValue);
  EXPECT_THROW(case3_verdict(reference_graph(CaseLabel::Case6), Case3Input{}), ShapeMismatch);
  EXPECT_NO_THROW(case3_verdict(reference_graph(CaseLabel::Case3), Case3Input{}));
}

TEST(Case6, Examples)
{
  Case6Input in;
  in.r1 = 1;
  in.r2 = 2;
  auto r = case6_moduli_forcing(in);
  EXPECT_TRUE(r.forced);
  EXPECT_EQ(r.order, -1);
  EXPECT_EQ(r.printed_coefficient, rat(3));
  EXPECT_EQ(r.coefficient, rat(-3));
  EXPECT_EQ(r.verdict, "r1 = r2 forced");

  in.r2 = 1;
  auto same = case6_moduli_forcing(in);
  EXPECT_FALSE(same.forced);
  EXPECT_EQ(same.verdict, "consistent");
}

TEST(Case6, OrderUsesTheSmallerExponent)
{
  Case6Input in;
  in.r1 = 5;
  in.r2 = 3;
  auto r = case6_moduli_forcing(in);
  EXPECT_TRUE(r.forced);
  EXPECT_EQ(r.order, 3);
  EXPECT_EQ(r.coefficient, rat(-72));
}

TEST(Case6, Errors)
{
  Case6Input in;
  in.theta2_q2 = 0;
  EXPECT_THROW(case6_moduli_forcing(in), ZeroNodeValue);
  EXPECT_THROW(case6_moduli_forcing(reference_graph(CaseLabel::Case1), Case6Input{}), ShapeMismatch);
}

TEST(Case6, LeadingCoefficientVanishesNowhere)
{
  std::mt19937_64 rng(34);
  for (int i = 0; i < 300; ++i) {
    Case6Input in;
    in.r1 = 1 + static_cast<long>(rng() % 5);
    in.r2 = 1 + static_cast<long>(rng() % 5);
    in.theta1_p1 = random_nonzero(rng);
    in.theta1_q1 = random_nonzero(rng);
    in.theta2_p2 = random_nonzero(rng);
    in.theta2_q2 = random_nonzero(rng);
    auto r = case6_moduli_forcing(in);
    EXPECT_EQ(r.forced, in.r1 != in.r2);
    if (r.forced) {
      long m = std::min(in.r1, in.r2);
      // the shorter node carries the minimal path
      Rational x = in.r1 < in.r2 ? in.theta1_p1 * in.theta2_p2 : in.theta1_q1 * in.theta2_q2;
      EXPECT_EQ(r.coefficient, -Rational(in.r1 + in.r2) * Rational(m * m) * x * x);
    }
  }
}
