#include "tsurf/homology.hpp"
#include "tsurf/errors.hpp"

#include <deque>
#include <stdexcept>

namespace tsurf {

IntVec h_edge(const Origami &o, int i)
{
  IntVec c(2 * o.n, 0);
  c[i] = 1;
  return c;
}

IntVec v_edge(const Origami &o, int i)
{
  IntVec c(2 * o.n, 0);
  c[o.n + i] = 1;
  return c;
}

IntVec square_relation(const Origami &o, int i)
{
  IntVec c(2 * o.n, 0);
  c[i] += 1;
  c[o.n + o.h[i]] += 1;
  c[o.v[i]] -= 1;
  c[o.n + i] -= 1;
  return c;
}

IntVec chain_boundary(const Origami &o, const IntVec &chain)
{
  auto vd = vertex_data(o);
  IntVec b(vd.cycles.size(), 0);
  for (int i = 0; i < o.n; ++i) {
    b[vd.vertex_of[o.h[i]]] += chain[i];
    b[vd.vertex_of[i]] -= chain[i];
    b[vd.vertex_of[o.v[i]]] += chain[o.n + i];
    b[vd.vertex_of[i]] -= chain[o.n + i];
  }
  return b;
}

bool is_cycle(const Origami &o, const IntVec &chain)
{
  return is_zero(chain_boundary(o, chain));
}

HomologyBasis homology_basis(const Origami &o)
{
  HomologyBasis b;
  b.origami = o;
  b.vertices = vertex_data(o);
  const auto &vd = b.vertices;
  int n = o.n;
  int nv = static_cast<int>(vd.cycles.size());
  b.genus = (2 - (nv - n)) / 2;

  // primal spanning tree by BFS over vertices
  auto edge_from = [&](int e) { return vd.vertex_of[e % n]; };
  auto edge_to = [&](int e) { return e < n ? vd.vertex_of[o.h[e]] : vd.vertex_of[o.v[e - n]]; };
  std::vector<std::vector<int>> incident(nv);
  for (int e = 0; e < 2 * n; ++e) {
    incident[edge_from(e)].push_back(e);
    incident[edge_to(e)].push_back(e);
  }
  std::vector<bool> in_tree(2 * n, false), seen(nv, false);
  std::vector<IntVec> root_path(nv, IntVec(2 * n, 0));
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int e : incident[x]) {
      int a = edge_from(e), c = edge_to(e);
      int y = a == x ? c : a;
      if (seen[y])
        continue;
      seen[y] = true;
      in_tree[e] = true;
      root_path[y] = root_path[x];
      root_path[y][e] += a == x ? 1 : -1;
      queue.push_back(y);
    }
  }

  // dual spanning tree over squares avoiding duals of tree edges
  auto hinv = o.h_inv(), vinv = o.v_inv();
  std::vector<std::vector<int>> dual_incident(n);
  for (int e = 0; e < 2 * n; ++e) {
    if (in_tree[e])
      continue;
    int a = e < n ? vinv[e] : hinv[e - n];
    int c = e < n ? e : e - n;
    dual_incident[a].push_back(e);
    dual_incident[c].push_back(e);
  }
  std::vector<bool> in_cotree(2 * n, false), seen_sq(n, false);
  queue = {0};
  seen_sq[0] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int e : dual_incident[x]) {
      int a = e < n ? vinv[e] : hinv[e - n];
      int c = e < n ? e : e - n;
      int y = a == x ? c : a;
      if (seen_sq[y])
        continue;
      seen_sq[y] = true;
      in_cotree[e] = true;
      queue.push_back(y);
    }
  }

  for (int e = 0; e < 2 * n; ++e) {
    if (in_tree[e] || in_cotree[e])
      continue;
    IntVec c(2 * n, 0);
    c[e] += 1;
    for (int k = 0; k < 2 * n; ++k)
      c[k] += root_path[edge_from(e)][k] - root_path[edge_to(e)][k];
    b.cycles.push_back(c);
  }
  if (static_cast<int>(b.cycles.size()) != 2 * b.genus)
    throw std::logic_error("tree-cotree produced the wrong number of cycles");

  int m = 2 * b.genus;
  b.omega = IntMat(m, m);
  std::vector<IntVec> pushed;
  for (const auto &c : b.cycles)
    pushed.push_back(push_to_dual(b, c));
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      b.omega(k, l) = primal_dual_intersection(o, b.cycles[k], pushed[l]);
  auto inv = inverse_unimodular(b.omega);
  if (!inv)
    throw std::logic_error("intersection form is not unimodular");
  b.omega_inv = *inv;
  return b;
}

namespace {

// Dual path from the center of square a to the center of square target, circling the
// shared bottom-left vertex clockwise one full turn per step.
void add_rotation(const Origami &o, const Perm &hinv, const Perm &vinv, int a, int target, std::int64_t t,
                  IntVec &dual)
{
  int n = o.n;
  int guard = 0;
  while (a != target) {
    int below = vinv[a];
    int diag = hinv[below];
    int up = o.v[diag];
    dual[n + below] -= t;
    dual[diag] -= t;
    dual[n + diag] += t;
    dual[up] += t;
    a = o.h[up];
    if (++guard > n)
      throw std::logic_error("rotation did not reach its target sector");
  }
}

} // namespace

IntVec push_to_dual(const HomologyBasis &b, const IntVec &cycle)
{
  const auto &o = b.origami;
  int n = o.n;
  auto hinv = o.h_inv(), vinv = o.v_inv();
  auto rep = [&](int square) { return b.vertices.cycles[b.vertices.vertex_of[square]].front(); };
  IntVec dual(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    if (auto t = cycle[i]) {
      add_rotation(o, hinv, vinv, rep(i), i, t, dual);
      dual[i] += t;
      add_rotation(o, hinv, vinv, o.h[i], rep(o.h[i]), t, dual);
    }
    if (auto t = cycle[n + i]) {
      add_rotation(o, hinv, vinv, rep(i), i, t, dual);
      dual[n + i] += t;
      add_rotation(o, hinv, vinv, o.v[i], rep(o.v[i]), t, dual);
    }
  }
  return dual;
}

std::int64_t primal_dual_intersection(const Origami &o, const IntVec &primal, const IntVec &dual)
{
  int n = o.n;
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    // u_i crosses h_{v(i)} upward; r_i crosses v_{h(i)} to the right
    s = checked_add(s, checked_mul(primal[o.v[i]], dual[n + i]));
    s = checked_add(s, -checked_mul(primal[n + o.h[i]], dual[i]));
  }
  return s;
}

std::int64_t chain_intersection(const HomologyBasis &b, const IntVec &x, const IntVec &y)
{
  return primal_dual_intersection(b.origami, x, push_to_dual(b, y));
}

HomologyClass coordinates(const HomologyBasis &b, const IntVec &cycle)
{
  auto pushed = push_to_dual(b, cycle);
  IntVec w;
  for (const auto &c : b.cycles)
    w.push_back(primal_dual_intersection(b.origami, c, pushed));
  return b.omega_inv * w;
}

IntVec chain_of(const HomologyBasis &b, const HomologyClass &c)
{
  IntVec z(2 * b.origami.n, 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    z = add_scaled(z, c[k], b.cycles[k]);
  return z;
}

std::int64_t intersect(const HomologyBasis &b, const HomologyClass &x, const HomologyClass &y)
{
  return pair(x, b.omega, y);
}

HolonomyCovector holonomy(const HomologyBasis &b)
{
  HolonomyCovector hc;
  int n = b.origami.n;
  for (const auto &c : b.cycles) {
    std::int64_t x = 0, y = 0;
    for (int i = 0; i < n; ++i) {
      x += c[i];
      y += c[n + i];
    }
    hc.x.push_back(x);
    hc.y.push_back(y);
  }
  return hc;
}

IntVec chain_map(const Origami &o, Gen g, const IntVec &chain)
{
  int n = o.n;
  auto hinv = o.h_inv();
  IntVec out(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    auto a = chain[i], b = chain[n + i];
    switch (g) {
    case Gen::T:
      out[i] += a;
      out[i] += b;
      out[n + o.h[i]] += b;
      break;
    case Gen::Tinv:
      out[i] += a;
      out[hinv[i]] -= b;
      out[n + hinv[i]] += b;
      break;
    case Gen::S:
      out[n + i] -= a;
      out[hinv[i]] += b;
      break;
    }
  }
  return out;
}

IntVec chain_map(const Origami &o, const Word &w, const IntVec &chain)
{
  Origami cur = o;
  IntVec c = chain;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    c = chain_map(cur, *it, c);
    cur = act_generator(cur, *it);
  }
  return c;
}

IntVec relabel_chain(const Perm &sigma, const IntVec &chain)
{
  int n = static_cast<int>(sigma.size());
  IntVec out(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    out[sigma[i]] = chain[i];
    out[n + sigma[i]] = chain[n + i];
  }
  return out;
}

IntMat transport_matrix(const HomologyBasis &from, const Word &w, const HomologyBasis &to)
{
  std::vector<IntVec> cols;
  for (const auto &c : from.cycles)
    cols.push_back(coordinates(to, chain_map(from.origami, w, c)));
  return IntMat::from_columns(cols, 2 * to.genus);
}

DecompositionHomology decomposition_homology(const CylinderDecomposition &d)
{
  DecompositionHomology dh;
  dh.source = homology_basis(d.source);
  dh.frame = d.word.empty() ? dh.source : homology_basis(d.frame);
  dh.to_frame = transport_matrix(dh.source, d.word, dh.frame);
  auto inv = inverse_unimodular(dh.to_frame);
  if (!inv)
    throw std::logic_error("frame transport is not invertible");
  dh.from_frame = *inv;
  return dh;
}

std::vector<HomologyClass> core_classes(const CylinderDecomposition &d, const DecompositionHomology &dh)
{
  std::vector<HomologyClass> out;
  for (const auto &c : d.cylinders) {
    IntVec chain(2 * d.frame.n, 0);
    for (int sq : c.rows.front())
      chain[sq] += 1;
    out.push_back(dh.from_frame * coordinates(dh.frame, chain));
  }
  return out;
}

HomologyClass core_curve_class(const CylinderDecomposition &d, int cylinder)
{
  auto dh = decomposition_homology(d);
  return core_classes(d, dh).at(cylinder);
}

int core_span_rank(const CylinderDecomposition &d)
{
  auto dh = decomposition_homology(d);
  auto cores = core_classes(d, dh);
  return static_cast<int>(rank(IntMat::from_rows(cores, 2 * dh.source.genus)));
}

std::vector<std::vector<HomologyClass>> component_cycles(const CylinderDecomposition &d,
                                                         const DecompositionHomology &dh, const Pinch &p)
{
  const auto &o = d.frame;
  auto vd = vertex_data(o);
  int k = d.diagram.saddles();
  std::vector<IntVec> saddle_chain(k, IntVec(2 * o.n, 0));
  std::vector<int> left(k), right(k);
  for (std::size_t c = 0; c < d.cylinders.size(); ++c) {
    const auto &row = d.cylinders[c].rows.front();
    long pos = 0;
    for (int s : d.diagram.bottom[c]) {
      long len = to_int64(d.net.saddle_lengths[s]);
      for (long x = pos; x < pos + len; ++x)
        saddle_chain[s][row[x]] += 1;
      left[s] = vd.vertex_of[row[pos]];
      right[s] = vd.vertex_of[o.h[row[pos + len - 1]]];
      pos += len;
    }
  }
  int ncomp = static_cast<int>(p.graph.vertices.size());
  int nv = static_cast<int>(vd.cycles.size());
  std::vector<std::vector<HomologyClass>> out(ncomp);
  for (int comp = 0; comp < ncomp; ++comp) {
    std::vector<int> sads;
    for (int s = 0; s < k; ++s)
      if (p.saddle_component[s] == comp)
        sads.push_back(s);
    IntMat inc(nv, sads.size());
    for (std::size_t j = 0; j < sads.size(); ++j) {
      inc(right[sads[j]], j) += 1;
      inc(left[sads[j]], j) -= 1;
    }
    for (const auto &ker : integer_kernel(inc)) {
      IntVec chain(2 * o.n, 0);
      for (std::size_t j = 0; j < sads.size(); ++j)
        chain = add_scaled(chain, ker[j], saddle_chain[sads[j]]);
      out[comp].push_back(dh.from_frame * coordinates(dh.frame, chain));
    }
  }
  return out;
}

IntMat standard_symplectic(int g)
{
  IntMat m(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    m(i, g + i) = 1;
    m(g + i, i) = -1;
  }
  return m;
}

IntMat gram_matrix(const AdaptedBasis &a)
{
  std::vector<IntVec> cols = a.alphas;
  cols.insert(cols.end(), a.betas.begin(), a.betas.end());
  IntMat j = IntMat::from_columns(cols, 2 * a.genus);
  return j.transpose() * a.omega * j;
}

AdaptedBasis adapted_basis(const CylinderDecomposition &d)
{
  auto dh = decomposition_homology(d);
  const IntMat &omega = dh.source.omega;
  int g = dh.source.genus;
  AdaptedBasis ab;
  ab.genus = g;
  ab.omega = omega;
  ab.pinch = pinch(d.diagram);
  ab.cores = core_classes(d, dh);

  auto comps = component_cycles(d, dh, ab.pinch);
  for (std::size_t v = 0; v < comps.size(); ++v) {
    auto red = symplectic_reduce(comps[v], omega);
    if (static_cast<int>(red.pairs.size()) != ab.pinch.graph.vertices[v].genus)
      throw std::logic_error("component genus disagrees with its homology");
    for (std::size_t k = 0; k < red.pairs.size(); ++k) {
      if (red.divisors[k] != 1)
        throw std::logic_error("component homology is not unimodular");
      ab.alphas.push_back(red.pairs[k].first);
      ab.betas.push_back(red.pairs[k].second);
      ab.component.push_back(static_cast<int>(v));
      ab.core_flags.push_back(false);
      ab.alpha_cylinder.push_back(-1);
    }
  }
  ab.g_prime = static_cast<int>(ab.alphas.size());

  // independent cores, lowest cylinder id first
  std::vector<IntVec> chosen;
  for (std::size_t c = 0; c < ab.cores.size(); ++c) {
    auto trial = chosen;
    trial.push_back(ab.cores[c]);
    if (rank(IntMat::from_rows(trial, 2 * g)) == trial.size()) {
      chosen = trial;
      ab.alphas.push_back(ab.cores[c]);
      ab.core_flags.push_back(true);
      ab.alpha_cylinder.push_back(static_cast<int>(c));
      ab.component.push_back(-1);
    }
  }
  if (static_cast<int>(ab.alphas.size()) != g)
    throw std::logic_error("genus of the pinch plus core rank differs from the genus");

  // duals of the core alphas: <alpha_i, y> = delta, <beta_k, y> = 0 for component pairs
  std::vector<IntVec> rows;
  for (const auto &a : ab.alphas)
    rows.push_back(omega.transpose() * a);
  for (int k = 0; k < ab.g_prime; ++k)
    rows.push_back(omega.transpose() * ab.betas[k]);
  IntMat sys = IntMat::from_rows(rows, 2 * g);
  std::vector<IntVec> ys;
  for (int j = ab.g_prime; j < g; ++j) {
    IntVec rhs(rows.size(), 0);
    rhs[j] = 1;
    auto y = solve_integer(sys, rhs);
    if (!y)
      throw std::logic_error("core classes do not extend to a symplectic basis");
    ys.push_back(*y);
  }
  for (std::size_t j = 0; j < ys.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      ys[j] = add_scaled(ys[j], pair(ys[i], omega, ys[j]), ab.alphas[ab.g_prime + i]);
  for (auto &y : ys)
    ab.betas.push_back(y);

  for (const auto &core : ab.cores) {
    IntVec row;
    for (const auto &b : ab.betas)
      row.push_back(pair(core, omega, b));
    ab.crossing.push_back(row);
  }
  return ab;
}

} // namespace tsurf
