#include "oracles/oracles.hpp"

#include "tsurf/homology.hpp"

#include <gtest/gtest.h>

using namespace tsurf;

TEST(Homology, TorusBasis)
{
  auto b = homology_basis(torus());
  EXPECT_EQ(b.genus, 1);
  EXPECT_EQ(b.omega, standard_symplectic(1));
}

TEST(Homology, RanksAndUnimodularForms)
{
  for (const auto &o : oracle::corpus(30, 10, 21)) {
    auto b = homology_basis(o);
    int g = oracle::euler_genus(o);
    EXPECT_EQ(b.genus, g);
    ASSERT_EQ(b.cycles.size(), static_cast<std::size_t>(2 * g));
    EXPECT_EQ(b.omega.transpose(), [&] {
      IntMat m = b.omega;
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          m(i, j) = -b.omega(i, j);
      return m;
    }());
    EXPECT_EQ(determinant(b.omega), 1);
    EXPECT_EQ(b.omega * b.omega_inv, IntMat::identity(2 * g));
    for (const auto &c : b.cycles)
      EXPECT_TRUE(is_cycle(o, c));
  }
}

TEST(Homology, CoordinatesOfBasisCyclesAreUnitVectors)
{
  for (const auto &o : oracle::corpus(10, 9, 22)) {
    auto b = homology_basis(o);
    for (std::size_t k = 0; k < b.cycles.size(); ++k) {
      IntVec e(b.cycles.size(), 0);
      e[k] = 1;
      EXPECT_EQ(coordinates(b, b.cycles[k]), e);
    }
  }
}

TEST(Homology, SquareBoundariesAreNullHomologous)
{
  for (const auto &o : oracle::corpus(10, 9, 23)) {
    auto b = homology_basis(o);
    for (int i = 0; i < o.n; ++i)
      EXPECT_TRUE(is_zero(coordinates(b, square_relation(o, i))));
  }
}

TEST(Homology, HolonomyOfSquareRelationsVanishes)
{
  for (const auto &o : oracle::corpus(10, 9, 24)) {
    auto b = homology_basis(o);
    auto hol = holonomy(b);
    for (int i = 0; i < o.n; ++i) {
      auto c = coordinates(b, square_relation(o, i));
      EXPECT_EQ(dot(hol.x, c), 0);
      EXPECT_EQ(dot(hol.y, c), 0);
    }
  }
}

TEST(CoreCurves, WollmilchsauCoresAreHomologous)
{
  auto d = horizontal_decomposition(wollmilchsau());
  auto cores = core_classes(d, decomposition_homology(d));
  ASSERT_EQ(cores.size(), 2u);
  EXPECT_EQ(cores[0], cores[1]);
  EXPECT_EQ(core_span_rank(d), 1);
}

TEST(CoreCurves, LShapeCoresAreIndependent)
{
  auto d = horizontal_decomposition(l_origami());
  EXPECT_EQ(core_span_rank(d), 2);
  EXPECT_EQ(core_span_rank(horizontal_decomposition(torus())), 1);
}

TEST(CoreCurves, HolonomyEqualsCircumference)
{
  for (const auto &o : oracle::corpus(10, 9, 25)) {
    auto d = horizontal_decomposition(o);
    auto dh = decomposition_homology(d);
    auto hol = holonomy(dh.source);
    auto cores = core_classes(d, dh);
    for (std::size_t c = 0; c < cores.size(); ++c) {
      EXPECT_EQ(Rational(dot(hol.x, cores[c])), d.cylinders[c].w);
      EXPECT_EQ(dot(hol.y, cores[c]), 0);
    }
  }
}

TEST(DualGraph, Examples)
{
  auto torus_graph = dual_graph(horizontal_decomposition(torus()).diagram);
  ASSERT_EQ(torus_graph.vertices.size(), 1u);
  EXPECT_EQ(torus_graph.vertices[0].genus, 0);
  ASSERT_EQ(torus_graph.edges.size(), 1u);
  EXPECT_EQ(torus_graph.edges[0].a, torus_graph.edges[0].b);

  auto l_graph = dual_graph(horizontal_decomposition(l_origami()).diagram);
  ASSERT_EQ(l_graph.vertices.size(), 1u);
  EXPECT_EQ(l_graph.vertices[0].genus, 0);
  EXPECT_EQ(l_graph.edges.size(), 2u);

  auto w_graph = dual_graph(horizontal_decomposition(wollmilchsau()).diagram);
  ASSERT_EQ(w_graph.vertices.size(), 2u);
  EXPECT_EQ(w_graph.vertices[0].genus, 1);
  EXPECT_EQ(w_graph.vertices[1].genus, 1);
  EXPECT_EQ(w_graph.edges.size(), 2u);
  EXPECT_EQ(w_graph.total_genus(), 3);
}

TEST(AdaptedBasis, Examples)
{
  auto t = adapted_basis(horizontal_decomposition(torus()));
  EXPECT_EQ(t.g_prime, 0);
  EXPECT_TRUE(t.core_flags[0]);

  auto w = adapted_basis(horizontal_decomposition(wollmilchsau()));
  EXPECT_EQ(w.g_prime, 2);
  EXPECT_EQ(w.genus, 3);
  EXPECT_TRUE(w.core_flags[2]);
  EXPECT_EQ(w.alphas[2], w.cores[0]);
  // beta_3 crosses both cylinders
  EXPECT_NE(w.crossing[0][2], 0);
  EXPECT_NE(w.crossing[1][2], 0);

  auto l = adapted_basis(horizontal_decomposition(l_origami()));
  EXPECT_EQ(l.g_prime, 0);
  EXPECT_TRUE(l.core_flags[0] && l.core_flags[1]);
}

TEST(Transport, FunctorialOnWords)
{
  for (const auto &o : oracle::corpus(8, 8, 26)) {
    auto b = homology_basis(o);
    Word w1 = parse_word("T,S"), w2 = parse_word("S,Ti");
    auto o2 = act_sl2z(o, w2);
    auto b2 = homology_basis(o2);
    auto b12 = homology_basis(act_sl2z(o2, w1));
    Word w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    EXPECT_EQ(transport_matrix(b, w12, b12), transport_matrix(b2, w1, b12) * transport_matrix(b, w2, b2));
  }
}
