#include "tsurf/jump.hpp"

#include "tsurf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace tsurf {

namespace {

constexpr long kInf = LeadingSeries::kInfinite;

std::vector<long> distances_to(const WeightedDualGraph &g, const std::set<int> &targets)
{
  std::size_t nv = g.graph.vertices.size();
  std::vector<long> dist(nv, kInf);
  using Item = std::pair<long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (int t : targets) {
    dist[t] = 0;
    pq.push({0, t});
  }
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v])
      continue;
    for (std::size_t e = 0; e < g.graph.edges.size(); ++e) {
      const auto &edge = g.graph.edges[e];
      for (auto [x, y] : {std::pair{edge.a, edge.b}, std::pair{edge.b, edge.a}})
        if (x == v && d + g.n[e] < dist[y]) {
          dist[y] = d + g.n[e];
          pq.push({dist[y], y});
        }
    }
  }
  return dist;
}

std::optional<Rational> value_at(const DifferentialSymbol &t, Endpoint p)
{
  auto it = t.node_values.find(p);
  if (it == t.node_values.end())
    return std::nullopt;
  return it->second;
}

std::optional<Rational> mul(std::optional<Rational> x, const std::optional<Rational> &y)
{
  if (x && *x == 0)
    return Rational(0);
  if (y && *y == 0)
    return Rational(0);
  if (!x || !y)
    return std::nullopt;
  return *x * *y;
}

void require_nonzero(const Rational &x, const char *what)
{
  if (x == 0)
    throw ZeroNodeValue(std::string(what) + " must be nonzero");
}

} // namespace

int WeightedDualGraph::vertex_of(Endpoint p) const
{
  const auto &e = graph.edges.at(p.edge);
  return p.plus ? e.a : e.b;
}

void WeightedDualGraph::validate() const
{
  if (n.size() != graph.edges.size() || a.size() != graph.edges.size())
    throw ShapeMismatch("edge weights do not match the dual graph");
  for (long x : n)
    if (x < 1)
      throw ValidationError("node exponents must be positive");
  for (const auto &x : a)
    if (x == 0)
      throw ZeroNodeValue("node scale a_e must be nonzero");
}

long OrientedPath::weight(const WeightedDualGraph &g) const
{
  long w = 0;
  for (const auto &o : edges)
    w += g.n.at(o.edge);
  return w;
}

double s_coordinate(double t, const Rational &modulus, long r)
{
  if (t < 0)
    throw ValidationError("s_coordinate needs t >= 0");
  if (r < 1)
    throw ValidationError("s_coordinate needs r >= 1");
  return std::exp(-2.0 * std::numbers::pi * (modulus.get_d() / static_cast<double>(r)) * t);
}

long jump_distance(const WeightedDualGraph &g, const DifferentialSymbol &ti, const DifferentialSymbol &tj)
{
  if (ti.support.empty() || tj.support.empty())
    throw ValidationError("differential supports must be nonempty");
  auto dist = distances_to(g, tj.support);
  long best = kInf;
  for (int v : ti.support)
    best = std::min(best, dist.at(v));
  return best;
}

std::vector<long> log_coefficient(const std::vector<IntVec> &crossing, int i, int j)
{
  std::vector<long> r;
  r.reserve(crossing.size());
  for (const auto &row : crossing)
    r.push_back(static_cast<long>(row.at(i)) * static_cast<long>(row.at(j)));
  return r;
}

std::vector<long> log_coefficient(const AdaptedBasis &basis, int i, int j)
{
  return log_coefficient(basis.crossing, i, j);
}

std::optional<Rational> path_coefficient(const WeightedDualGraph &g, const OrientedPath &path,
                                         const DifferentialSymbol &ti, const DifferentialSymbol &tj)
{
  const auto &es = path.edges;
  if (es.empty())
    throw ValidationError("empty path");
  if (es.size() > 2)
    throw UnsupportedLength("paths of length " + std::to_string(es.size()) + " are not tracked");
  for (std::size_t k = 0; k + 1 < es.size(); ++k)
    if (g.vertex_of(es[k].end()) != g.vertex_of(es[k + 1].start()))
      throw ValidationError("consecutive path edges do not share a component");

  if (es.size() == 1) {
    const auto &o = es[0];
    return mul(mul(Rational(-g.a[o.edge]), value_at(ti, o.start())), value_at(tj, o.end()));
  }

  const auto &o1 = es[0];
  const auto &o2 = es[1];
  int middle = g.vertex_of(o1.end());
  bool genus0 = g.graph.vertices.at(middle).genus == 0;
  std::optional<Rational> omega;
  if (o2 == o1.reversed()) {
    if (genus0)
      return Rational(0);
  } else if (genus0) {
    auto z = g.node_points.find(o1.end());
    auto w = g.node_points.find(o2.start());
    if (z != g.node_points.end() && w != g.node_points.end() && z->second && w->second) {
      Rational d = *z->second - *w->second;
      if (d == 0)
        throw ValidationError("distinct nodes share a point on a genus-0 component");
      omega = Rational(-1) / (d * d);
    }
  } else {
    auto it = g.bidifferential.find({o1.end(), o2.start()});
    if (it != g.bidifferential.end())
      omega = it->second;
  }
  std::optional<Rational> c = Rational(g.a[o1.edge] * g.a[o2.edge]);
  c = mul(c, value_at(ti, o1.start()));
  c = mul(c, value_at(tj, o2.end()));
  return mul(c, omega);
}

std::vector<OrientedPath> minimal_paths(const WeightedDualGraph &g, const DifferentialSymbol &ti,
                                        const DifferentialSymbol &tj)
{
  auto dist = distances_to(g, tj.support);
  std::vector<OrientedEdge> oriented;
  for (std::size_t e = 0; e < g.graph.edges.size(); ++e) {
    oriented.push_back({static_cast<int>(e), true});
    oriented.push_back({static_cast<int>(e), false});
  }
  long best = kInf;
  for (const auto &o : oriented)
    if (ti.support.count(g.vertex_of(o.start())) && dist[g.vertex_of(o.end())] < kInf)
      best = std::min(best, g.n[o.edge] + dist[g.vertex_of(o.end())]);
  std::vector<OrientedPath> out;
  if (best >= kInf)
    return out;

  OrientedPath cur;
  auto dfs = [&](auto &&self, int v, long w) -> void {
    if (!cur.edges.empty() && w == best && tj.support.count(v)) {
      out.push_back(cur);
      return;
    }
    for (const auto &o : oriented) {
      if (g.vertex_of(o.start()) != v)
        continue;
      int u = g.vertex_of(o.end());
      long w2 = w + g.n[o.edge];
      if (dist[u] >= kInf || w2 + dist[u] > best)
        continue;
      cur.edges.push_back(o);
      self(self, u, w2);
      cur.edges.pop_back();
    }
  };
  for (int v : ti.support)
    dfs(dfs, v, 0);
  return out;
}

LeadingSeries period_leading(const WeightedDualGraph &g, const std::vector<IntVec> &crossing,
                             const DifferentialSymbol &ti, const DifferentialSymbol &tj)
{
  g.validate();
  if (crossing.size() != g.graph.edges.size())
    throw ShapeMismatch("crossing data does not match the dual graph");
  auto paths = minimal_paths(g, ti, tj);
  long k = paths.empty() ? kInf : paths.front().weight(g);
  LeadingSeries f = LeadingSeries::opaque_constant(k >= kInf ? kInf : k + 1);

  auto logs = log_coefficient(crossing, ti.index, tj.index);
  Rational c_log = 0;
  for (std::size_t e = 0; e < logs.size(); ++e)
    c_log += Rational(logs[e] * g.n[e]);
  f.set(0, 1, c_log);

  if (!paths.empty()) {
    std::optional<Rational> ck = Rational(0);
    for (const auto &p : paths) {
      if (p.edges.size() > 2)
        throw UnsupportedLength("a minimal path has " + std::to_string(p.edges.size()) + " edges");
      auto c = path_coefficient(g, p, ti, tj);
      ck = (ck && c) ? std::optional<Rational>(*ck + *c) : std::nullopt;
    }
    f.set(k, 0, ck);
  }
  return f;
}

WeightedDualGraph case3_graph(const Case3Input &in)
{
  WeightedDualGraph g;
  g.graph.vertices = {{0}, {1}};
  g.graph.edges = {{1, 0, 0}, {1, 0, 1}, {0, 0, 2}};
  g.n = {in.n1, in.n2, 1};
  g.a = {in.a1, in.a2, 1};
  g.node_points[{0, false}] = Rational(0);
  g.node_points[{1, false}] = Rational(1);
  g.node_points[{2, true}] = Rational(-1); // lambda; its value never enters a tracked path
  g.node_points[{2, false}] = std::nullopt;
  return g;
}

Case3Verdict case3_verdict(const DualGraph &shape, const Case3Input &in)
{
  if (classify_case(shape) != CaseLabel::Case3)
    throw ShapeMismatch("dual graph is not of Case-3 shape: " + to_string(shape));
  return case3_verdict(in);
}

Case3Verdict case3_verdict(const Case3Input &in)
{
  for (const auto &[x, name] : {std::pair{&in.a1, "a1"}, {&in.a2, "a2"}, {&in.omega_p, "omega(p)"},
                                {&in.omega_q, "omega(q)"}, {&in.theta3_0, "theta3(0)"},
                                {&in.theta3_1, "theta3(1)"}})
    require_nonzero(*x, name);
  WeightedDualGraph g = case3_graph(in);
  g.validate();

  DifferentialSymbol elliptic{0, {1}, {}, {{{0, true}, in.omega_q}, {{1, true}, in.omega_p}}};
  DifferentialSymbol third{2, {0}, {2}, {{{0, false}, in.theta3_0}, {{1, false}, in.theta3_1}}};
  std::vector<IntVec> crossing = {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}};

  Case3Verdict r;
  if (in.n1 != in.n2) {
    r.branch = 'a';
    auto f = period_leading(g, crossing, third, elliptic);
    r.order = f.k();
    r.coefficient = f.c_k().value();
    r.printed_coefficient = -r.coefficient;
  } else {
    r.branch = 'b';
    auto f = period_leading(g, crossing, elliptic, elliptic);
    r.order = f.k();
    r.coefficient = f.c_k().value();
    r.printed_coefficient = 2 * in.a1 * in.a2 * in.omega_p * in.omega_q;
  }
  r.verdict = r.coefficient != 0 ? "Forni impossible" : "inconclusive";
  return r;
}

WeightedDualGraph case6_graph(const Case6Input &in)
{
  WeightedDualGraph g;
  g.graph.vertices = {{1}, {1}};
  g.graph.edges = {{0, 1, 0}, {0, 1, 1}};
  g.n = {in.r1, in.r2};
  g.a = {1, 1};
  return g;
}

Case6Verdict case6_moduli_forcing(const DualGraph &shape, const Case6Input &in)
{
  if (classify_case(shape) != CaseLabel::Case6)
    throw ShapeMismatch("dual graph is not of Case-6 shape: " + to_string(shape));
  return case6_moduli_forcing(in);
}

Case6Verdict case6_moduli_forcing(const Case6Input &in)
{
  if (in.r1 < 1 || in.r2 < 1)
    throw ValidationError("moduli exponents must be positive");
  for (const auto &[x, name] : {std::pair{&in.theta1_p1, "theta1(p1)"}, {&in.theta1_q1, "theta1(q1)"},
                                {&in.theta2_p2, "theta2(p2)"}, {&in.theta2_q2, "theta2(q2)"}})
    require_nonzero(*x, name);
  WeightedDualGraph g = case6_graph(in);

  std::vector<DifferentialSymbol> theta = {
      {0, {0}, {}, {{{0, true}, in.theta1_p1}, {{1, true}, in.theta1_q1}}},
      {1, {1}, {}, {{{0, false}, in.theta2_p2}, {{1, false}, in.theta2_q2}}},
      {2, {0, 1}, {0, 1}, {}},
  };
  std::vector<IntVec> crossing = {{0, 0, 1}, {0, 0, 1}};

  std::vector<std::vector<LeadingSeries>> dpi(3, std::vector<LeadingSeries>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      dpi[i][j] = period_leading(g, crossing, theta[i], theta[j]).derivative();

  Case6Verdict r;
  r.determinant = determinant(dpi);
  long m = std::min(in.r1, in.r2);
  r.order = 2 * m - 3;
  r.pi12_coefficient = dpi[0][1].coefficient(m - 1, 0).value();
  r.printed_coefficient = Rational(in.r1 + in.r2) * r.pi12_coefficient * r.pi12_coefficient;
  if (in.r1 == in.r2) {
    r.forced = false;
    r.verdict = "consistent";
    return r;
  }
  auto lead = r.determinant.leading();
  if (!lead || lead->first != LeadingSeries::Key{r.order, 0} || !lead->second)
    throw std::logic_error("determinant leading term is not where the expansion predicts");
  r.coefficient = *lead->second;
  r.forced = r.coefficient != 0;
  r.verdict = r.forced ? "r1 = r2 forced" : "consistent";
  return r;
}

} // namespace tsurf
