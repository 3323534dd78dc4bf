#include "oracles/oracles.hpp"

#include "tsurf/cylinders.hpp"
#include "tsurf/errors.hpp"
#include "tsurf/diagram.hpp"
#include "tsurf/homology.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace tsurf;

namespace {

std::vector<std::pair<Rational, Rational>> shapes(const CylinderDecomposition &d)
{
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto &c : d.cylinders)
    out.push_back({c.w, c.ht});
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST(Decomposition, Torus)
{
  auto d = horizontal_decomposition(torus());
  EXPECT_EQ(shapes(d), (std::vector<std::pair<Rational, Rational>>{{1, 1}}));
  EXPECT_EQ(moduli_exponents(d), std::vector<long>{1});
  auto diag = periodic_decomposition(torus(), {1, 1});
  EXPECT_EQ(shapes(diag), (std::vector<std::pair<Rational, Rational>>{{1, 1}}));
}

TEST(Decomposition, Wollmilchsau)
{
  auto d = horizontal_decomposition(wollmilchsau());
  EXPECT_EQ(shapes(d), (std::vector<std::pair<Rational, Rational>>{{4, 1}, {4, 1}}));
  EXPECT_EQ(moduli_exponents(d), (std::vector<long>{1, 1}));
  EXPECT_EQ(case_label(d), CaseLabel::Case6);
  auto vertical = periodic_decomposition(wollmilchsau(), {1, 0});
  EXPECT_EQ(shapes(vertical), (std::vector<std::pair<Rational, Rational>>{{4, 1}, {4, 1}}));
  EXPECT_EQ(case_label(periodic_decomposition(wollmilchsau(), {1, 1})), CaseLabel::Case6);
}

TEST(Decomposition, LShape)
{
  auto d = horizontal_decomposition(l_origami());
  EXPECT_EQ(shapes(d), (std::vector<std::pair<Rational, Rational>>{{1, 1}, {2, 1}}));
}

TEST(Decomposition, HorizontalizingWordSendsDirectionToHorizontal)
{
  for (const auto &dir : enumerate_directions(8)) {
    Mat2 m = word_matrix(horizontalizing_word(dir));
    long x = m[0][0] * dir.q + m[0][1] * dir.p;
    long y = m[1][0] * dir.q + m[1][1] * dir.p;
    EXPECT_EQ(y, 0) << to_string(dir);
    EXPECT_EQ(std::abs(x), 1) << to_string(dir);
  }
}

TEST(Decomposition, DirectionEnumeration)
{
  auto dirs = enumerate_directions(8);
  EXPECT_EQ(dirs.front(), (Direction{0, 1}));
  EXPECT_NE(std::find(dirs.begin(), dirs.end(), Direction{1, 0}), dirs.end());
  std::set<Direction> unique(dirs.begin(), dirs.end());
  EXPECT_EQ(unique.size(), dirs.size());
  for (const auto &d : dirs) {
    if (d.q != 0 && d.p != 0) {
      EXPECT_EQ(std::gcd(d.p, d.q), 1);
    }
  }
}

TEST(Moduli, Exponents)
{
  EXPECT_EQ(moduli_exponents(std::vector<Rational>{rat(1, 2), rat(1, 3)}), (std::vector<long>{3, 2}));
  EXPECT_EQ(moduli_exponents(std::vector<Rational>{rat(1, 4), rat(1, 4)}), (std::vector<long>{1, 1}));
  EXPECT_EQ(moduli_exponents(std::vector<Rational>{rat(7, 3)}), std::vector<long>{1});
  EXPECT_THROW(moduli_exponents(std::vector<Rational>{rat(0)}), ValidationError);
}

TEST(Moduli, InvariantUnderUniformRescaling)
{
  std::vector<Rational> m{rat(2, 3), rat(5, 7), rat(1, 2)};
  auto base = moduli_exponents(m);
  for (auto k : {rat(3), rat(1, 5), rat(22, 7)}) {
    auto scaled = m;
    for (auto &x : scaled)
      x *= k;
    EXPECT_EQ(moduli_exponents(scaled), base);
  }
}

TEST(Cases, ReferenceGraphs)
{
  for (auto c : {CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3, CaseLabel::Case4, CaseLabel::Case5,
                 CaseLabel::Case6})
    EXPECT_EQ(classify_case(reference_graph(c)), c);
  DualGraph case6{{{1}, {1}}, {{0, 1, 0}, {1, 0, 1}}};
  EXPECT_EQ(classify_case(case6), CaseLabel::Case6);
  DualGraph case1{{{1}}, {{0, 0, 0}, {0, 0, 1}}};
  EXPECT_EQ(classify_case(case1), CaseLabel::Case1);
  DualGraph case5{{{2}}, {{0, 0, 0}}};
  EXPECT_EQ(classify_case(case5), CaseLabel::Case5);
  DualGraph genus2{{{1}}, {{0, 0, 0}}};
  EXPECT_EQ(classify_case(genus2), CaseLabel::None);
}

TEST(Cases, InvariantUnderGraphRelabeling)
{
  for (auto c : {CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3, CaseLabel::Case4, CaseLabel::Case5,
                 CaseLabel::Case6}) {
    DualGraph g = reference_graph(c);
    int nv = static_cast<int>(g.vertices.size());
    std::vector<int> p(nv);
    std::iota(p.begin(), p.end(), 0);
    do {
      DualGraph r;
      r.vertices.resize(nv);
      for (int i = 0; i < nv; ++i)
        r.vertices[p[i]] = g.vertices[i];
      for (auto it = g.edges.rbegin(); it != g.edges.rend(); ++it)
        r.edges.push_back({p[it->a], p[it->b], it->cylinder});
      EXPECT_EQ(classify_case(r), c);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(Diagrams, KnownShapes)
{
  EXPECT_EQ(classify_case(dual_graph(diagram_case6())), CaseLabel::Case6);
  EXPECT_EQ(classify_case(dual_graph(diagram_4a())), CaseLabel::Case4);
  EXPECT_EQ(classify_case(dual_graph(diagram_4b())), CaseLabel::Case4);
  EXPECT_FALSE(diagrams_isomorphic(diagram_4a(), diagram_4b()));
  EXPECT_EQ(diagram_kappa(diagram_case6()), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(diagram_kappa(diagram_4a()), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_TRUE(diagrams_isomorphic(horizontal_decomposition(wollmilchsau()).diagram, diagram_case6()));
}

TEST(Diagrams, CanonicalFormIgnoresLabels)
{
  CylinderDiagram d = diagram_4a();
  CylinderDiagram r;
  // rename saddle k to 7 - k and list cylinders in reverse
  for (int c = d.cylinders() - 1; c >= 0; --c) {
    std::vector<int> b, t;
    for (int s : d.bottom[c])
      b.push_back(7 - s);
    for (int s : d.top[c])
      t.push_back(7 - s);
    std::rotate(b.begin(), b.begin() + b.size() / 2, b.end());
    r.bottom.push_back(b);
    r.top.push_back(t);
  }
  EXPECT_EQ(canonical_diagram(r), canonical_diagram(d));
}
