#include "tsurf/net.hpp"
#include "tsurf/errors.hpp"

#include <map>

namespace tsurf {

Rational FlatSurfaceNet::bottom_start(int c, int index) const
{
  Rational x = 0;
  for (int i = 0; i < index; ++i)
    x += saddle_lengths[diagram.bottom[c][i]];
  return x;
}

Rational FlatSurfaceNet::top_start(int c, int index) const
{
  Rational x = 0;
  for (int i = 0; i < index; ++i)
    x += saddle_lengths[diagram.top[c][i]];
  return x;
}

Rational FlatSurfaceNet::area() const
{
  Rational a = 0;
  for (const auto &c : cylinders)
    a += c.w * c.ht;
  return a;
}

FlatSurfaceNet build_net(std::vector<CylinderMetric> cylinders, CylinderDiagram diagram,
                         std::vector<Rational> saddle_lengths, NetMode mode)
{
  validate_diagram(diagram);
  if (static_cast<int>(cylinders.size()) != diagram.cylinders())
    throw ShapeMismatch("one metric record per cylinder is required");
  if (static_cast<int>(saddle_lengths.size()) != diagram.saddles())
    throw ShapeMismatch("one length per saddle connection is required");
  int zeros = 0;
  for (const auto &l : saddle_lengths) {
    if (l < 0)
      throw NegativeLength("saddle length " + to_string(l));
    if (l == 0)
      ++zeros;
  }
  if (zeros > 0 && (mode != NetMode::Degenerate || zeros > 1))
    throw NegativeLength(mode == NetMode::Degenerate ? "at most one saddle may have length 0"
                                                     : "zero saddle length outside degenerate mode");
  for (std::size_t c = 0; c < cylinders.size(); ++c) {
    const auto &m = cylinders[c];
    if (m.w <= 0 || m.ht <= 0)
      throw NegativeLength("cylinder " + std::to_string(c) + " needs positive circumference and height");
    if (m.tw < 0 || m.tw >= m.w)
      throw ValidationError("cylinder " + std::to_string(c) + " twist must lie in [0, w)");
    Rational bottom = 0, top = 0;
    for (int s : diagram.bottom[c])
      bottom += saddle_lengths[s];
    for (int s : diagram.top[c])
      top += saddle_lengths[s];
    if (bottom != m.w || top != m.w)
      throw SumMismatch("cylinder " + std::to_string(c) + ": boundary lengths " + to_string(bottom) + ", " +
                        to_string(top) + " vs circumference " + to_string(m.w));
  }
  return FlatSurfaceNet{std::move(cylinders), std::move(diagram), std::move(saddle_lengths),
                        mode == NetMode::Degenerate};
}

namespace {

mpz_class common_denominator(const FlatSurfaceNet &net)
{
  mpz_class d = 1;
  auto take = [&](const Rational &x) { mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t()); };
  for (const auto &c : net.cylinders) {
    take(c.w);
    take(c.ht);
    take(c.tw);
  }
  for (const auto &l : net.saddle_lengths)
    take(l);
  return d;
}

} // namespace

Origami net_to_origami(const FlatSurfaceNet &net, long scale)
{
  for (const auto &l : net.saddle_lengths)
    if (l == 0)
      throw ValidationError("a net with a zero-length saddle has no square tiling");
  Rational f = Rational(common_denominator(net)) * scale;
  FlatSurfaceNet s = rescale(net, f, f);
  auto loc = locate_saddles(s.diagram);
  int m = s.diagram.cylinders();
  std::vector<long> w(m), ht(m), tw(m), base(m);
  long n = 0;
  for (int c = 0; c < m; ++c) {
    w[c] = to_int64(s.cylinders[c].w);
    ht[c] = to_int64(s.cylinders[c].ht);
    tw[c] = to_int64(s.cylinders[c].tw);
    base[c] = n;
    n += w[c] * ht[c];
  }
  if (n > 2000000)
    throw ValidationError("net is too large to tile");
  auto square = [&](int c, long row, long x) { return static_cast<int>(base[c] + row * w[c] + x); };
  Perm h(n), v(n);
  for (int c = 0; c < m; ++c) {
    // saddle occupying each unit of the top boundary
    std::vector<std::pair<int, long>> top_unit(w[c]);
    long pos = 0;
    for (std::size_t i = 0; i < s.diagram.top[c].size(); ++i) {
      int sad = s.diagram.top[c][i];
      long len = to_int64(s.saddle_lengths[sad]);
      for (long u = 0; u < len; ++u)
        top_unit[pos + u] = {sad, u};
      pos += len;
    }
    for (long r = 0; r < ht[c]; ++r)
      for (long x = 0; x < w[c]; ++x) {
        h[square(c, r, x)] = square(c, r, (x + 1) % w[c]);
        if (r + 1 < ht[c]) {
          v[square(c, r, x)] = square(c, r + 1, x);
          continue;
        }
        auto [sad, u] = top_unit[(x + tw[c]) % w[c]];
        auto site = loc[sad].on_bottom;
        long bx = to_int64(s.bottom_start(site.cylinder, site.index)) + u;
        v[square(c, r, x)] = square(site.cylinder, 0, bx);
      }
  }
  return build_origami(h, v);
}

FlatSurfaceNet rescale(const FlatSurfaceNet &net, const Rational &a, const Rational &b)
{
  FlatSurfaceNet r = net;
  for (auto &c : r.cylinders) {
    c.w *= a;
    c.tw *= a;
    c.ht *= b;
  }
  for (auto &l : r.saddle_lengths)
    l *= a;
  return r;
}

FlatSurfaceNet torus_net()
{
  return build_net({{1, 1, 0}}, CylinderDiagram{{{0}}, {{0}}}, {Rational(1)});
}

FlatSurfaceNet wollmilchsau_net()
{
  return build_net({{4, 1, 0}, {4, 1, 0}}, diagram_case6(), std::vector<Rational>(8, Rational(1)));
}

} // namespace tsurf
