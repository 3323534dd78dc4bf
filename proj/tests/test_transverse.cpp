#include "oracles/oracles.hpp"

#include "tsurf/cylinders.hpp"
#include "tsurf/errors.hpp"
#include "tsurf/interval_map.hpp"
#include "tsurf/transverse.hpp"

#include <gtest/gtest.h>

using namespace tsurf;

TEST(IntervalMap, IdentityAndRotation)
{
  auto id = make_interval_map(1, {{0, 1, 0}});
  EXPECT_TRUE(id.measure_preserving());
  EXPECT_EQ(id(rat(1, 3)), rat(1, 3));

  auto rot = make_interval_map(1, {{0, 1, rat(1, 3)}});
  EXPECT_EQ(rot(rat(1, 2)), rat(5, 6));
  EXPECT_EQ(rot(rat(5, 6)), rat(1, 6));
  EXPECT_EQ(rot.preimage(rat(1, 6)), rat(5, 6));
  EXPECT_EQ(rot.normalized().pieces.size(), 2u);
}

TEST(IntervalMap, Rejections)
{
  EXPECT_THROW(make_interval_map(0, {}), LengthMismatch);
  EXPECT_THROW(make_interval_map(1, {{0, rat(1, 2), 0}}), LengthMismatch);
  EXPECT_THROW(make_interval_map(1, {{0, rat(1, 2), 0}, {rat(1, 2), 1, rat(-1, 4)}}), ValidationError);
}

TEST(IntervalMap, SwapHasNoWindowHit)
{
  auto swap = make_interval_map(1, {{0, rat(1, 2), rat(1, 2)}, {rat(1, 2), 1, rat(-1, 2)}});
  Interval J{0, rat(1, 2)};
  EXPECT_FALSE(find_window_hit(swap, J, J));
  EXPECT_EQ(overlap_measure(swap, J), 0);
}

TEST(IntervalMap, WindowHitIsMaximal)
{
  auto rot = make_interval_map(1, {{0, 1, rat(1, 10)}});
  Interval J{0, rat(1, 2)}, W{rat(1, 4), rat(3, 4)};
  auto hit = find_window_hit(rot, J, W);
  ASSERT_TRUE(hit);
  EXPECT_EQ(*hit, (Interval{rat(3, 20), rat(1, 2)}));
  for (const Rational &x : std::vector<Rational>{hit->lo + rat(1, 1000), (hit->lo + hit->hi) / 2, hit->hi - rat(1, 1000)}) {
    EXPECT_GT(rot(x), W.lo);
    EXPECT_LT(rot(x), W.hi);
  }
  // just outside either end the point leaves J or its image leaves W
  EXPECT_LE(rot(hit->lo - rat(1, 1000)), W.lo);
}

TEST(IntervalMap, RotationsCompose)
{
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    auto net = sample_case4a_net(rng, 12);
    auto fr = case4a_frame(net);
    EXPECT_TRUE(fr.f.measure_preserving());
    Rational c = rat(static_cast<long>(rng() % 12), 12);
    auto g = fr.f.pre_rotate(c), h = fr.f.post_rotate(c);
    for (long k = 0; k < 24; ++k) {
      Rational x = rat(2 * k + 1, 48);
      EXPECT_EQ(g(x), fr.f(mod(x + c, 1)));
      EXPECT_EQ(h(x), mod(fr.f(x) + c, 1));
    }
  }
}

TEST(IntervalMap, WollmilchsauGluing)
{
  auto net = wollmilchsau_net();
  auto f = build_interval_map(net, {0, Side::Bottom}, {1, Side::Top});
  EXPECT_EQ(f.pieces.size(), 4u);
  EXPECT_TRUE(f.measure_preserving());
  EXPECT_EQ(f(rat(1, 2)), rat(5, 2));
  EXPECT_EQ(f(rat(3, 2)), rat(3, 2));
  EXPECT_EQ(f(rat(5, 2)), rat(1, 2));
  EXPECT_EQ(f(rat(7, 2)), rat(7, 2));

  auto flow = build_interval_map(net, {0, Side::Bottom}, {0, Side::Top});
  EXPECT_EQ(flow.pieces.size(), 1u);
  EXPECT_THROW(build_interval_map(net, {0, Side::Bottom}, {0, Side::Bottom}), ValidationError);
}

TEST(Trace, TorusLines)
{
  auto net = torus_net();
  auto t = trace_trajectory(net, 0, rat(1, 2), 0);
  EXPECT_TRUE(t.closed);
  EXPECT_EQ(t.steps.size(), 1u);
  EXPECT_TRUE(trace_trajectory(net, 0, rat(0), 0).singular);
  auto slope = trace_trajectory(net, 0, rat(1, 2), rat(3));
  EXPECT_TRUE(slope.closed);
  EXPECT_EQ(slope.steps.front().winding, 3);
}

TEST(Witness, Case1OnRandomSurfaces)
{
  int seen1 = 0;
  for (const auto &o : oracle::corpus(150, 12, 42))
    for (const auto &dir : enumerate_directions(2)) {
    auto d = periodic_decomposition(o, dir);
    auto label = case_label(d);
    if (label != CaseLabel::Case1)
      continue;
    auto w = find_crossing_cylinder(d.net, TransverseCase::Case1);
    ASSERT_TRUE(w) << to_line(o);
    EXPECT_TRUE(verify_witness(d.net, *w)) << to_string(*w);
    EXPECT_EQ(w->route.size(), 1u);
    ++seen1;
    }
  EXPECT_GT(seen1, 10);
}

TEST(Witness, Case2Examples)
{
  for (const char *line : {R"x(origami h="(0 4 1 5)(2 6 3)" v="(0 7 1 2 4 6 5 3)")x",
                           R"x(origami h="(0 2)(1 6)(3 7 4 5)" v="(0 5 3 7 6 2)(1 4)")x",
                           R"x(origami h="(0 4 5 1 6 2)(3 7)" v="(0 2 6 4 3 7 5 1)")x"}) {
    auto o = parse_origami_line(line);
    bool any = false;
    for (const auto &dir : enumerate_directions(3)) {
      auto d = periodic_decomposition(o, dir);
      if (case_label(d) != CaseLabel::Case2)
        continue;
      any = true;
      auto w = find_crossing_cylinder(d.net, TransverseCase::Case2);
      ASSERT_TRUE(w) << line << " " << to_string(dir);
      EXPECT_TRUE(verify_witness(d.net, *w));
      EXPECT_EQ(w->route.size(), 2u);
    }
    EXPECT_TRUE(any) << line;
  }
}

TEST(Witness, ShapeIsChecked)
{
  EXPECT_THROW(find_crossing_cylinder(wollmilchsau_net(), TransverseCase::Case4A), CaseMismatch);
  EXPECT_THROW(find_crossing_cylinder(wollmilchsau_net(), TransverseCase::Case1), CaseMismatch);
}

TEST(Witness, Case4AAgreesWithBruteForce)
{
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    auto net = sample_case4a_net(rng, 20);
    auto w = find_crossing_cylinder(net, TransverseCase::Case4A);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_witness(net, *w)) << to_string(*w);
    EXPECT_EQ(w->route.size(), 3u);

    auto hit = oracle::scan_case4a(net, 20, 5);
    ASSERT_TRUE(hit);
    // the oracle's integer trajectory closes under the library tracer as well
    Rational lambda = rat(hit->dx_num, hit->dx_den) / net.cylinders.front().ht;
    auto t = trace_trajectory(net, hit->route.front(), rat(hit->start, hit->scale), lambda, 5);
    EXPECT_TRUE(t.closed);
    EXPECT_FALSE(t.singular);
    EXPECT_EQ(t.steps.size(), hit->route.size());
  }
}

TEST(Witness, BandIsStable)
{
  std::mt19937_64 rng(44);
  for (int i = 0; i < 40; ++i) {
    auto net = sample_case4a_net(rng, 16);
    auto w = find_crossing_cylinder(net, TransverseCase::Case4A);
    ASSERT_TRUE(w);
    for (int k = 1; k < 8; ++k) {
      Rational x = w->band.lo + (w->band.hi - w->band.lo) * rat(k, 8);
      auto t = trace_trajectory(net, w->route.front(), x, w->lambda, 4);
      ASSERT_TRUE(t.closed);
      ASSERT_EQ(t.steps.size(), w->route.size());
      for (std::size_t j = 0; j < t.steps.size(); ++j)
        EXPECT_EQ(t.steps[j].exit_saddle, w->saddles[j]);
    }
  }
}

TEST(Witness, HalfCircumferenceBoundary)
{
  std::mt19937_64 rng(45);
  for (int i = 0; i < 40; ++i) {
    auto net = sample_case4a_net(rng, 20, true);
    auto fr = case4a_frame(net);
    EXPECT_EQ(fr.s, rat(1, 2));
    auto w = find_crossing_cylinder(net, TransverseCase::Case4A);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_witness(net, *w));
  }
}

TEST(Witness, OverlapWhenTheMiddleIsLong)
{
  std::mt19937_64 rng(46);
  for (int i = 0; i < 100; ++i) {
    auto fr = case4a_frame(sample_case4a_net(rng, 20));
    ASSERT_GE(fr.s, rat(1, 2));
    // two arcs of length s on a circle of length 1 overlap in at least 2s - 1
    EXPECT_GE(overlap_measure(fr.f, {0, fr.s}), 2 * fr.s - 1);
  }
}

TEST(Witness, Case4BFromTheDiagram)
{
  auto q = rat(1, 4), h = rat(1, 2);
  auto net = build_net({{1, 1, 0}, {rat(3, 2), 1, 0}, {h, 1, 0}, {1, 1, 0}}, diagram_4b(), {h, q, q, q, q, 1, h, 1});
  auto w = find_crossing_cylinder(net, TransverseCase::Case4B);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(net, *w));
}

TEST(Witness, TamperedWitnessFails)
{
  std::mt19937_64 rng(47);
  auto net = sample_case4a_net(rng, 20);
  auto w = find_crossing_cylinder(net, TransverseCase::Case4A);
  ASSERT_TRUE(w);
  auto bad = *w;
  bad.dy += 1;
  EXPECT_FALSE(verify_witness(net, bad));
  bad = *w;
  bad.route.push_back(bad.route.front());
  EXPECT_FALSE(verify_witness(net, bad));
  bad = *w;
  bad.band = {bad.band.hi, bad.band.lo};
  EXPECT_FALSE(verify_witness(net, bad));
}

TEST(Window, Examples)
{
  auto boundary = window_feasible({rat(1, 4), rat(1, 4), 0, rat(1, 4)});
  EXPECT_TRUE(boundary.feasible);
  EXPECT_TRUE(boundary.boundary);
  EXPECT_EQ(boundary.slack, 0);

  auto over = window_feasible({rat(1, 3), rat(1, 4), 0, rat(1, 4)});
  EXPECT_FALSE(over.feasible);
  EXPECT_EQ(over.slack, rat(-1, 6));
  EXPECT_EQ(over.violated.size(), 1u);

  auto waived = window_feasible({rat(1, 5), rat(1, 5), rat(1, 10), 0});
  EXPECT_TRUE(waived.feasible);
  EXPECT_FALSE(waived.boundary);
  EXPECT_EQ(waived.slack, rat(1, 10));

  EXPECT_FALSE(window_feasible({rat(1, 8), rat(1, 5), 0, 0}).feasible);
  EXPECT_FALSE(window_feasible({rat(1, 5), rat(1, 5), rat(-1, 10), 0}).feasible);
}

TEST(Window, AgreesWithTheDirectReading)
{
  auto grid = oracle::farey_interior(12);
  grid.insert(grid.begin(), Rational(0));
  for (const auto &t0 : grid)
    for (const auto &s0 : grid)
      for (const auto &ts : {Rational(0), rat(1, 12), rat(-1, 12)})
        for (const auto &m : {Rational(0), rat(1, 4)})
          EXPECT_EQ(window_feasible({t0, s0, ts, m}).feasible, oracle::window_inequality(t0, s0, ts, m));
}

TEST(Window, WollmilchsauMeasurement)
{
  auto wc = measure_window(wollmilchsau_net());
  EXPECT_EQ(wc.t0, rat(1, 4));
  EXPECT_EQ(wc.s0, rat(1, 4));
  EXPECT_EQ(wc.t_start, 0);
  EXPECT_EQ(wc.min_saddle, rat(1, 4));
  EXPECT_TRUE(window_feasible(wc).boundary);
  EXPECT_THROW(measure_window(torus_net()), CaseMismatch);
}
