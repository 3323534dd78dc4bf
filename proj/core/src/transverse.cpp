#include "tsurf/transverse.hpp"

#include "tsurf/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tsurf {

namespace {

// Index i of the top saddle of cylinder c containing coordinate y in its interior, -1 at an endpoint.
int top_index_at(const FlatSurfaceNet &net, int c, const Rational &y, Rational &start)
{
  Rational at = 0;
  const auto &top = net.diagram.top[c];
  for (std::size_t i = 0; i < top.size(); ++i) {
    const Rational &len = net.saddle_lengths[top[i]];
    if (len == 0)
      continue;
    if (y == at)
      return -1;
    if (y < at + len) {
      start = at;
      return static_cast<int>(i);
    }
    at += len;
  }
  return -1;
}

struct Case4Roles {
  int first = -1, last = -1;
  std::vector<int> middles;
};

Case4Roles case4_roles(const FlatSurfaceNet &net)
{
  const auto &d = net.diagram;
  Case4Roles r;
  for (int c = 0; c < d.cylinders(); ++c) {
    if (d.bottom[c].size() == 4)
      r.first = c;
    else if (d.top[c].size() == 4)
      r.last = c;
    else
      r.middles.push_back(c);
  }
  return r;
}

TransverseWitness witness_from_trace(const FlatSurfaceNet &net, const Trace &t, std::string construction)
{
  TransverseWitness w;
  w.lambda = t.lambda;
  Rational height = 0;
  for (const auto &s : t.steps) {
    w.route.push_back(s.cylinder);
    w.saddles.push_back(s.exit_saddle);
    height += net.cylinders[s.cylinder].ht;
  }
  w.dy = height;
  w.dx = t.lambda * height;
  w.band = trace_band(net, t);
  w.construction = std::move(construction);
  return w;
}

bool crosses_each_once(const std::vector<int> &route)
{
  std::vector<int> r = route;
  std::sort(r.begin(), r.end());
  return std::adjacent_find(r.begin(), r.end()) == r.end();
}

void require_shape(const FlatSurfaceNet &net, TransverseCase c)
{
  bool ok = false;
  switch (c) {
  case TransverseCase::Case1:
    ok = classify_case(dual_graph(net.diagram)) == CaseLabel::Case1;
    break;
  case TransverseCase::Case2:
    ok = classify_case(dual_graph(net.diagram)) == CaseLabel::Case2;
    break;
  case TransverseCase::Case4A:
    ok = diagrams_isomorphic(net.diagram, diagram_4a());
    break;
  case TransverseCase::Case4B:
    ok = diagrams_isomorphic(net.diagram, diagram_4b());
    break;
  }
  if (!ok)
    throw CaseMismatch("net diagram " + to_string(net.diagram) + " is not " + to_string(c));
}

std::optional<TransverseWitness> best_of(std::vector<TransverseWitness> found)
{
  if (found.empty())
    return std::nullopt;
  return found.front();
}

} // namespace

std::string to_string(TransverseCase c)
{
  switch (c) {
  case TransverseCase::Case1:
    return "Case1";
  case TransverseCase::Case2:
    return "Case2";
  case TransverseCase::Case4A:
    return "Case4A";
  case TransverseCase::Case4B:
    return "Case4B";
  }
  return "?";
}

Trace trace_trajectory(const FlatSurfaceNet &net, int cylinder, const Rational &start, const Rational &lambda,
                       int max_steps)
{
  Trace t;
  t.start = start;
  t.lambda = lambda;
  auto sites = locate_saddles(net.diagram);
  int c = cylinder;
  Rational x = start;
  for (int step = 0; step < max_steps; ++step) {
    const auto &m = net.cylinders[c];
    Rational raw = x + m.tw + lambda * m.ht;
    mpz_class wind = floor_of(raw / m.w);
    Rational y = raw - Rational(wind) * m.w;
    Rational tstart;
    int i = top_index_at(net, c, y, tstart);
    if (i < 0) {
      t.singular = true;
      return t;
    }
    int s = net.diagram.top[c][i];
    t.steps.push_back({c, x, y, s, wind.get_si()});
    const auto &bottom_site = sites[s].on_bottom;
    c = bottom_site.cylinder;
    x = net.bottom_start(c, bottom_site.index) + (y - tstart);
    if (c == cylinder) {
      t.closed = x == start;
      return t;
    }
  }
  return t;
}

Interval trace_band(const FlatSurfaceNet &net, const Trace &t)
{
  auto sites = locate_saddles(net.diagram);
  Rational lo = 0, hi = 0;
  bool first = true;
  for (const auto &s : t.steps) {
    const auto &site = sites[s.exit_saddle].on_top;
    Rational ts = net.top_start(s.cylinder, site.index);
    Rational l = ts - s.exit;
    Rational h = ts + net.saddle_lengths[s.exit_saddle] - s.exit;
    if (first || l > lo)
      lo = l;
    if (first || h < hi)
      hi = h;
    first = false;
  }
  return {t.start + lo, t.start + hi};
}

std::string to_string(const TransverseWitness &w)
{
  std::ostringstream os;
  os << w.construction << ": holonomy (" << to_string(w.dx) << ", " << to_string(w.dy) << ") route";
  for (std::size_t i = 0; i < w.route.size(); ++i)
    os << " C" << w.route[i] + 1 << "/" << w.saddles[i];
  os << " band (" << to_string(w.band.lo) << ", " << to_string(w.band.hi) << ")";
  return os.str();
}

bool verify_witness(const FlatSurfaceNet &net, const TransverseWitness &w)
{
  if (w.route.empty() || w.band.hi <= w.band.lo || !crosses_each_once(w.route))
    return false;
  Rational mid = (w.band.lo + w.band.hi) / 2;
  Trace t = trace_trajectory(net, w.route.front(), mid, w.lambda, static_cast<int>(w.route.size()) + 1);
  if (!t.closed || t.steps.size() != w.route.size())
    return false;
  Rational height = 0;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    if (t.steps[i].cylinder != w.route[i] || t.steps[i].exit_saddle != w.saddles[i])
      return false;
    height += net.cylinders[t.steps[i].cylinder].ht;
  }
  return w.dy == height && w.dx == w.lambda * height;
}

Rational default_lambda_bound(const FlatSurfaceNet &net)
{
  Rational maxw = 0, minh = net.cylinders.front().ht;
  for (const auto &c : net.cylinders) {
    maxw = std::max(maxw, c.w);
    minh = std::min(minh, c.ht);
  }
  return 2 * maxw / minh + 1;
}

std::vector<TransverseWitness> route_search(const FlatSurfaceNet &net, const std::vector<int> &route,
                                            const Rational &lambda_bound)
{
  std::vector<TransverseWitness> found;
  std::size_t K = route.size();
  if (K == 0 || !crosses_each_once(route))
    return found;
  auto sites = locate_saddles(net.diagram);

  // saddle choices: sigma_k on the top of route[k] and the bottom of route[k + 1]
  std::vector<std::vector<int>> choices(K);
  for (std::size_t k = 0; k < K; ++k) {
    int next = route[(k + 1) % K];
    for (int s : net.diagram.top[route[k]])
      if (sites[s].on_bottom.cylinder == next && net.saddle_lengths[s] > 0)
        choices[k].push_back(s);
    if (choices[k].empty())
      return found;
  }

  Rational H = 0;
  for (int c : route)
    H += net.cylinders[c].ht;

  std::vector<int> sigma(K);
  std::vector<long> wind(K);
  auto evaluate = [&]() {
    // lambda from closure: sum (tw - T + B) + lambda H - sum m w = 0
    Rational C = 0, mw = 0;
    for (std::size_t k = 0; k < K; ++k) {
      int s = sigma[k];
      C += net.cylinders[route[k]].tw - net.top_start(route[k], sites[s].on_top.index) +
           net.bottom_start(sites[s].on_bottom.cylinder, sites[s].on_bottom.index);
      mw += Rational(wind[k]) * net.cylinders[route[k]].w;
    }
    Rational lambda = (mw - C) / H;
    if (abs(lambda) > lambda_bound)
      return;
    // start point u enters the first cylinder at bottom offset 0 relative to u
    Rational offset = 0, lo = 0, hi = 0;
    bool first = true;
    for (std::size_t k = 0; k < K; ++k) {
      const auto &m = net.cylinders[route[k]];
      int s = sigma[k];
      Rational T = net.top_start(route[k], sites[s].on_top.index);
      Rational y = offset + m.tw + lambda * m.ht - Rational(wind[k]) * m.w; // y_k - u
      Rational l = T - y, h = T + net.saddle_lengths[s] - y;
      if (first || l > lo)
        lo = l;
      if (first || h < hi)
        hi = h;
      first = false;
      offset = y - T + net.bottom_start(sites[s].on_bottom.cylinder, sites[s].on_bottom.index);
    }
    const auto &start_cyl = net.cylinders[route[0]];
    lo = std::max(lo, Rational(0));
    hi = std::min(hi, start_cyl.w);
    if (lo >= hi)
      return;
    TransverseWitness w;
    w.lambda = lambda;
    w.dy = H;
    w.dx = lambda * H;
    w.route = route;
    w.saddles = sigma;
    w.band = {lo, hi};
    w.construction = "route search";
    found.push_back(std::move(w));
  };

  auto rec_wind = [&](auto &&self, std::size_t k) -> void {
    if (k == K) {
      evaluate();
      return;
    }
    const auto &m = net.cylinders[route[k]];
    Rational reach = lambda_bound * m.ht;
    long lo = floor_of((-reach) / m.w).get_si() - 1;
    long hi = floor_of((2 * m.w + reach) / m.w).get_si() + 1;
    for (long x = lo; x <= hi; ++x) {
      wind[k] = x;
      self(self, k + 1);
    }
  };
  auto rec_sigma = [&](auto &&self, std::size_t k) -> void {
    if (k == K) {
      rec_wind(rec_wind, 0);
      return;
    }
    for (int s : choices[k]) {
      sigma[k] = s;
      self(self, k + 1);
    }
  };
  rec_sigma(rec_sigma, 0);

  std::stable_sort(found.begin(), found.end(), [](const TransverseWitness &a, const TransverseWitness &b) {
    if (abs(a.lambda) != abs(b.lambda))
      return abs(a.lambda) < abs(b.lambda);
    if (a.lambda != b.lambda)
      return a.lambda < b.lambda;
    return a.band.lo < b.band.lo;
  });
  return found;
}

Case4AFrame case4a_frame(const FlatSurfaceNet &net)
{
  require_shape(net, TransverseCase::Case4A);
  auto roles = case4_roles(net);
  const auto &d = net.diagram;
  Case4AFrame fr;
  fr.first = roles.first;
  fr.last = roles.last;
  int m0 = roles.middles[0], m1 = roles.middles[1];
  fr.middle = net.cylinders[m1].w > net.cylinders[m0].w ? m1 : m0;
  fr.other_middle = fr.middle == m0 ? m1 : m0;
  const auto &M = net.cylinders[fr.middle];
  const auto &C1 = net.cylinders[fr.first];
  const auto &C4 = net.cylinders[fr.last];
  fr.s = M.w;
  fr.shear = -M.tw / M.ht;

  auto sites = locate_saddles(d);
  int b_mid = d.bottom[fr.middle].front();
  int t_mid = d.top[fr.middle].front();
  Rational xb = net.top_start(fr.first, sites[b_mid].on_top.index);
  Rational xt = net.bottom_start(fr.last, sites[t_mid].on_bottom.index);
  Rational tw1 = C1.tw + fr.shear * C1.ht;
  Rational tw4 = C4.tw + fr.shear * C4.ht;
  fr.bottom_shift = xb - tw1;
  IntervalMap g = build_interval_map(net, {fr.first, Side::Bottom}, {fr.last, Side::Top});
  fr.f = g.pre_rotate(fr.bottom_shift).post_rotate(-xt - tw4);
  return fr;
}

std::optional<TransverseWitness> find_crossing_cylinder(const FlatSurfaceNet &net, TransverseCase c)
{
  require_shape(net, c);
  const auto &d = net.diagram;
  Rational bound = default_lambda_bound(net);

  switch (c) {
  case TransverseCase::Case1: {
    for (int cyl = 0; cyl < d.cylinders(); ++cyl) {
      bool shared = false;
      for (int s : d.top[cyl])
        shared = shared || std::find(d.bottom[cyl].begin(), d.bottom[cyl].end(), s) != d.bottom[cyl].end();
      if (!shared)
        continue;
      if (auto w = best_of(route_search(net, {cyl}, bound))) {
        w->construction = "simple cylinder over a saddle connection on both sides";
        return w;
      }
    }
    return std::nullopt;
  }
  case TransverseCase::Case2: {
    for (int a = 0; a < d.cylinders(); ++a)
      for (int b = 0; b < d.cylinders(); ++b)
        if (a != b)
          if (auto w = best_of(route_search(net, {a, b}, bound))) {
            w->construction = "two-cylinder crossing";
            return w;
          }
    return std::nullopt;
  }
  case TransverseCase::Case4B: {
    auto roles = case4_roles(net);
    auto sites = locate_saddles(d);
    int second = sites[d.top[roles.first].front()].on_bottom.cylinder;
    if (auto w = best_of(route_search(net, {roles.first, second, roles.last}, bound))) {
      w->construction = "crossing of the first, second and last cylinders";
      return w;
    }
    return std::nullopt;
  }
  case TransverseCase::Case4A:
    break;
  }

  Case4AFrame fr = case4a_frame(net);
  const auto &C1 = net.cylinders[fr.first];
  Rational H = C1.ht + net.cylinders[fr.middle].ht + net.cylinders[fr.last].ht;
  Interval J{0, fr.s};
  Rational X, delta;
  std::string how;
  if (auto hit = find_window_hit(fr.f, J, J)) {
    const auto &p = fr.f.piece_at(hit->lo);
    Rational b = std::min(hit->hi, p.b);
    X = (hit->lo + b) / 2;
    delta = p.offset;
    how = "window hit";
  } else {
    Rational x = fr.f.preimage(fr.s);
    if (x >= fr.s)
      throw std::logic_error("boundary preimage outside the window");
    delta = fr.s - x;
    Rational eps = std::min<Rational>(fr.f.piece_at(x).b - x, delta * net.cylinders[fr.last].ht / H);
    X = x + eps / 2;
    how = "boundary preimage";
  }
  Rational lambda = delta / H + fr.shear;
  Rational u = mod(X + fr.bottom_shift, C1.w);
  Trace t = trace_trajectory(net, fr.first, u, lambda, 4);
  if (t.closed) {
    auto w = witness_from_trace(net, t, how);
    if (verify_witness(net, w))
      return w;
  }
  if (auto w = best_of(route_search(net, {fr.first, fr.middle, fr.last}, bound))) {
    w->construction = "route search fallback";
    return w;
  }
  return std::nullopt;
}

WindowFeasibility window_feasible(const WindowConstraint &c)
{
  WindowFeasibility r;
  // in place: 1 - 2 (t0 + s0) - t_start
  r.slack = c.t0;
  r.slack += c.s0;
  mpq_mul_2exp(r.slack.get_mpq_t(), r.slack.get_mpq_t(), 1);
  r.slack += c.t_start;
  mpq_neg(r.slack.get_mpq_t(), r.slack.get_mpq_t());
  r.slack += 1;
  if (c.t0 < c.s0)
    r.violated.emplace_back("t0 >= s0");
  if (c.s0 < c.min_saddle)
    r.violated.emplace_back("s0 >= min");
  if (c.t_start < 0)
    r.violated.emplace_back("t_start >= 0");
  if (sgn(r.slack) < 0)
    r.violated.emplace_back("slack >= 0");
  r.feasible = r.violated.empty();
  r.boundary = r.feasible && sgn(r.slack) == 0 && sgn(c.t_start) == 0;
  return r;
}

WindowConstraint measure_window(const FlatSurfaceNet &net)
{
  const auto &d = net.diagram;
  if (d.cylinders() != 2 || classify_case(dual_graph(d)) != CaseLabel::Case6)
    throw CaseMismatch("window constraints need a Case-6 two-cylinder net, got " + to_string(d));
  if (net.cylinders[0].w != net.cylinders[1].w)
    throw LengthMismatch("Case-6 cylinders must have equal circumference");
  auto sites = locate_saddles(d);

  auto longest_bottom = [&](int c) {
    int best = 0;
    for (std::size_t i = 1; i < d.bottom[c].size(); ++i)
      if (net.saddle_lengths[d.bottom[c][i]] > net.saddle_lengths[d.bottom[c][best]])
        best = static_cast<int>(i);
    return best;
  };
  int c1 = 0, c2 = 1;
  int ti = longest_bottom(c1), si = longest_bottom(c2);
  if (net.saddle_lengths[d.bottom[c2][si]] > net.saddle_lengths[d.bottom[c1][ti]]) {
    std::swap(c1, c2);
    std::swap(ti, si);
  }
  const auto &m1 = net.cylinders[c1];
  const auto &m2 = net.cylinders[c2];
  Rational W = m1.w;
  int tau = d.bottom[c1][ti], sigma = d.bottom[c2][si];
  if (sites[sigma].on_top.cylinder != c1 || sites[tau].on_top.cylinder != c2)
    throw CaseMismatch("Case-6 cylinders must be glued to each other along every saddle connection");

  Rational b_tau = net.bottom_start(c1, ti);
  Rational t_sigma = net.top_start(c1, sites[sigma].on_top.index);
  // shear so the start of sigma sits directly above the start of tau
  Rational shift1 = mod(t_sigma - b_tau - m1.tw, W);
  Rational kappa = shift1 / m1.ht;
  Rational b_sigma = net.bottom_start(c2, si);
  Rational origin = b_sigma + m2.tw + kappa * m2.ht;
  Rational t_tau = net.top_start(c2, sites[tau].on_top.index);
  Rational P = mod(t_tau - origin, W);

  WindowConstraint wc;
  wc.t0 = net.saddle_lengths[tau] / W;
  wc.s0 = net.saddle_lengths[sigma] / W;
  wc.t_start = P / W - 2 * wc.s0;
  std::size_t most = std::max(d.bottom[c1].size(), d.bottom[c2].size());
  wc.min_saddle = Rational(1, static_cast<unsigned long>(most));
  return wc;
}

FlatSurfaceNet sample_case4a_net(std::mt19937_64 &rng, long den, bool half)
{
  if (den < 4 || (half && den % 2 != 0))
    throw ValidationError("denominator too small for a Case-4A sample");
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  // composition of den into four positive parts
  std::vector<long> cuts = {0, den};
  while (cuts.size() < 5) {
    long c = uniform(1, den - 1);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end())
      cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> len(8);
  for (int i = 0; i < 4; ++i)
    len[i + 1] = Rational(cuts[i + 1] - cuts[i], den);
  long big = half ? den / 2 : uniform((den + 1) / 2, den - 1);
  bool second_larger = uniform(0, 1) == 1;
  Rational s(big, den), r = 1 - s;
  len[5] = second_larger ? s : r;
  len[6] = second_larger ? r : s;
  len[7] = len[5];
  len[0] = len[6];
  for (auto &x : len)
    x.canonicalize();

  Rational h(uniform(1, 3));
  auto twist = [&](const Rational &w) {
    long steps = to_int64(w * den);
    return Rational(uniform(0, steps - 1), den);
  };
  std::vector<CylinderMetric> cyl = {
      {1, h, twist(1)}, {len[5], h, twist(len[5])}, {len[6], h, twist(len[6])}, {1, h, twist(1)}};
  for (auto &c : cyl)
    c.tw.canonicalize();
  return build_net(std::move(cyl), diagram_4a(), std::move(len));
}

} // namespace tsurf
