#include "tsurf/diagram.hpp"
#include "tsurf/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tsurf {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  // Dense class ids in order of first appearance.
  std::vector<int> classes()
  {
    std::vector<int> id(parent.size(), -1), out(parent.size());
    int next = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) {
      int r = find(static_cast<int>(i));
      if (id[r] < 0)
        id[r] = next++;
      out[i] = id[r];
    }
    return out;
  }
};

template <class T> std::vector<T> rotated(const std::vector<T> &v, std::size_t k)
{
  std::vector<T> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = v[(i + k) % v.size()];
  return r;
}

} // namespace

int CylinderDiagram::saddles() const
{
  int m = 0;
  for (const auto &b : bottom)
    m += static_cast<int>(b.size());
  return m;
}

void validate_diagram(const CylinderDiagram &d)
{
  if (d.bottom.size() != d.top.size() || d.bottom.empty())
    throw ShapeMismatch("diagram needs matching nonempty bottom and top lists");
  int k = d.saddles();
  std::vector<int> tops(k, 0), bottoms(k, 0);
  for (std::size_t c = 0; c < d.bottom.size(); ++c) {
    if (d.bottom[c].empty() || d.top[c].empty())
      throw ShapeMismatch("every cylinder boundary needs a saddle connection");
    for (int s : d.bottom[c]) {
      if (s < 0 || s >= k)
        throw ShapeMismatch("saddle id out of range");
      ++bottoms[s];
    }
    for (int s : d.top[c]) {
      if (s < 0 || s >= k)
        throw ShapeMismatch("saddle id out of range");
      ++tops[s];
    }
  }
  for (int s = 0; s < k; ++s)
    if (tops[s] != 1 || bottoms[s] != 1)
      throw ShapeMismatch("saddle " + std::to_string(s) + " must occur once on a top and once on a bottom");
}

std::vector<SaddleLocation> locate_saddles(const CylinderDiagram &d)
{
  std::vector<SaddleLocation> loc(d.saddles());
  for (int c = 0; c < d.cylinders(); ++c) {
    for (std::size_t i = 0; i < d.bottom[c].size(); ++i)
      loc[d.bottom[c][i]].on_bottom = {c, static_cast<int>(i)};
    for (std::size_t i = 0; i < d.top[c].size(); ++i)
      loc[d.top[c][i]].on_top = {c, static_cast<int>(i)};
  }
  return loc;
}

DiagramVertices diagram_vertices(const CylinderDiagram &d)
{
  int k = d.saddles();
  UnionFind uf(2 * k);
  auto join_boundary = [&](const std::vector<int> &seq) {
    for (std::size_t i = 0; i < seq.size(); ++i)
      uf.unite(2 * seq[i] + 1, 2 * seq[(i + 1) % seq.size()]);
  };
  for (int c = 0; c < d.cylinders(); ++c) {
    join_boundary(d.bottom[c]);
    join_boundary(d.top[c]);
  }
  auto cls = uf.classes();
  DiagramVertices out;
  int nv = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> junctions(nv, 0);
  for (int s = 0; s < k; ++s) {
    out.left.push_back(cls[2 * s]);
    out.right.push_back(cls[2 * s + 1]);
  }
  for (int c = 0; c < d.cylinders(); ++c) {
    for (int s : d.bottom[c])
      ++junctions[cls[2 * s + 1]];
    for (int s : d.top[c])
      ++junctions[cls[2 * s + 1]];
  }
  for (int j : junctions)
    out.order.push_back(j / 2 - 1);
  return out;
}

std::vector<int> diagram_kappa(const CylinderDiagram &d)
{
  std::vector<int> kappa;
  for (int o : diagram_vertices(d).order)
    if (o > 0)
      kappa.push_back(o);
  std::sort(kappa.rbegin(), kappa.rend());
  return kappa;
}

int diagram_genus(const CylinderDiagram &d)
{
  auto v = diagram_vertices(d);
  // chi = V - E (open annuli contribute nothing)
  int chi = static_cast<int>(v.order.size()) - d.saddles();
  return (2 - chi) / 2;
}

CylinderDiagram canonical_diagram(const CylinderDiagram &d)
{
  int m = d.cylinders();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::optional<CylinderDiagram> best;
  std::vector<int> relabel(d.saddles(), -1);
  do {
    // rotation counters: 2m boundaries
    std::vector<std::size_t> rot(2 * m, 0);
    while (true) {
      CylinderDiagram cand;
      std::fill(relabel.begin(), relabel.end(), -1);
      int next = 0;
      auto take = [&](const std::vector<int> &seq, std::size_t r) {
        std::vector<int> out;
        out.reserve(seq.size());
        for (std::size_t k = 0; k < seq.size(); ++k) {
          int s = seq[(k + r) % seq.size()];
          if (relabel[s] < 0)
            relabel[s] = next++;
          out.push_back(relabel[s]);
        }
        return out;
      };
      for (int i = 0; i < m; ++i) {
        cand.bottom.push_back(take(d.bottom[order[i]], rot[2 * i]));
        cand.top.push_back(take(d.top[order[i]], rot[2 * i + 1]));
      }
      if (!best || cand < *best)
        best = cand;
      int j = 0;
      for (; j < 2 * m; ++j) {
        const auto &seq = j % 2 == 0 ? d.bottom[order[j / 2]] : d.top[order[j / 2]];
        if (++rot[j] < seq.size())
          break;
        rot[j] = 0;
      }
      if (j == 2 * m)
        break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

bool diagrams_isomorphic(const CylinderDiagram &a, const CylinderDiagram &b)
{
  if (a.cylinders() != b.cylinders() || a.saddles() != b.saddles())
    return false;
  auto shape = [](const CylinderDiagram &d) {
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    for (int c = 0; c < d.cylinders(); ++c)
      sizes.emplace_back(d.bottom[c].size(), d.top[c].size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (shape(a) != shape(b))
    return false;
  return canonical_diagram(a) == canonical_diagram(b);
}

std::string to_string(const CylinderDiagram &d)
{
  std::ostringstream os;
  auto seq = [&](const std::vector<int> &s) {
    os << '(';
    for (std::size_t i = 0; i < s.size(); ++i)
      os << (i ? " " : "") << s[i];
    os << ')';
  };
  for (int c = 0; c < d.cylinders(); ++c) {
    if (c)
      os << ' ';
    os << 'C' << c + 1 << ':';
    seq(d.bottom[c]);
    os << '-';
    seq(d.top[c]);
  }
  return os.str();
}

int DualGraph::total_genus() const
{
  int g = 0;
  for (const auto &v : vertices)
    g += v.genus;
  // b1 of a connected graph
  return g + static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
}

int DualGraph::geometric_genus() const
{
  int g = 0;
  for (const auto &v : vertices)
    g += v.genus;
  return g;
}

Pinch pinch(const CylinderDiagram &d)
{
  validate_diagram(d);
  int m = d.cylinders();
  int k = d.saddles();
  auto loc = locate_saddles(d);
  UnionFind uf(2 * m);
  for (int s = 0; s < k; ++s)
    uf.unite(2 * loc[s].on_top.cylinder + 1, 2 * loc[s].on_bottom.cylinder);
  auto cls = uf.classes();
  int nc = *std::max_element(cls.begin(), cls.end()) + 1;

  Pinch p;
  for (int c = 0; c < m; ++c) {
    p.bottom_half_component.push_back(cls[2 * c]);
    p.top_half_component.push_back(cls[2 * c + 1]);
  }
  for (int s = 0; s < k; ++s)
    p.saddle_component.push_back(cls[2 * loc[s].on_bottom.cylinder]);

  auto verts = diagram_vertices(d);
  std::vector<int> faces(nc, 0), edges(nc, 0);
  std::vector<std::vector<bool>> has_vertex(nc, std::vector<bool>(verts.order.size(), false));
  for (int h = 0; h < 2 * m; ++h)
    ++faces[cls[h]];
  for (int s = 0; s < k; ++s) {
    int c = p.saddle_component[s];
    ++edges[c];
    has_vertex[c][verts.left[s]] = true;
    has_vertex[c][verts.right[s]] = true;
  }
  for (int c = 0; c < nc; ++c) {
    int v = static_cast<int>(std::count(has_vertex[c].begin(), has_vertex[c].end(), true));
    int chi = v - edges[c] + faces[c];
    p.graph.vertices.push_back({(2 - chi) / 2});
  }
  for (int c = 0; c < m; ++c)
    p.graph.edges.push_back({p.bottom_half_component[c], p.top_half_component[c], c});
  return p;
}

DualGraph dual_graph(const CylinderDiagram &d)
{
  return pinch(d).graph;
}

std::string to_string(CaseLabel c)
{
  switch (c) {
  case CaseLabel::Case1: return "Case1";
  case CaseLabel::Case2: return "Case2";
  case CaseLabel::Case3: return "Case3";
  case CaseLabel::Case4: return "Case4";
  case CaseLabel::Case5: return "Case5";
  case CaseLabel::Case6: return "Case6";
  default: return "None";
  }
}

DualGraph reference_graph(CaseLabel c)
{
  auto make = [](std::vector<int> genera, std::vector<std::pair<int, int>> edges) {
    DualGraph g;
    for (int x : genera)
      g.vertices.push_back({x});
    for (std::size_t i = 0; i < edges.size(); ++i)
      g.edges.push_back({edges[i].first, edges[i].second, static_cast<int>(i)});
    return g;
  };
  switch (c) {
  case CaseLabel::Case1: return make({1}, {{0, 0}, {0, 0}});
  case CaseLabel::Case2: return make({0, 1}, {{0, 1}, {0, 1}, {0, 1}});
  case CaseLabel::Case3: return make({0, 1}, {{0, 0}, {0, 1}, {0, 1}});
  case CaseLabel::Case4: return make({0, 0, 1}, {{0, 1}, {0, 1}, {0, 2}, {1, 2}});
  case CaseLabel::Case5: return make({2}, {{0, 0}});
  case CaseLabel::Case6: return make({1, 1}, {{0, 1}, {0, 1}});
  default: return {};
  }
}

bool graphs_isomorphic(const DualGraph &a, const DualGraph &b)
{
  std::size_t n = a.vertices.size();
  if (n != b.vertices.size() || a.edges.size() != b.edges.size() || n > 8)
    return false;
  auto edge_set = [](const DualGraph &g, const std::vector<int> &map) {
    std::vector<std::pair<int, int>> es;
    for (const auto &e : g.edges) {
      int x = map[e.a], y = map[e.b];
      es.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(es.begin(), es.end());
    return es;
  };
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  auto target = edge_set(b, id);
  std::vector<int> perm = id;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = a.vertices[i].genus == b.vertices[perm[i]].genus;
    if (ok && edge_set(a, perm) == target)
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

CaseLabel classify_case(const DualGraph &g)
{
  for (auto c : {CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3, CaseLabel::Case4, CaseLabel::Case5,
                 CaseLabel::Case6})
    if (graphs_isomorphic(g, reference_graph(c)))
      return c;
  return CaseLabel::None;
}

std::string to_string(const DualGraph &g)
{
  std::ostringstream os;
  os << "vertices [";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << (i ? ", " : "") << 'g' << g.vertices[i].genus;
  os << "] edges [";
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    os << (i ? ", " : "") << g.edges[i].a << '-' << g.edges[i].b;
  os << ']';
  return os.str();
}

CylinderDiagram diagram_4a()
{
  // saddles 1..4 as drawn, 0 between C3 and C4, 5..7 internal
  return CylinderDiagram{{{1, 2, 3, 4}, {5}, {6}, {7, 0}}, {{5, 6}, {7}, {0}, {4, 3, 2, 1}}};
}

CylinderDiagram diagram_4b()
{
  return CylinderDiagram{{{1, 2, 3, 4}, {0, 5}, {6}, {7}}, {{5}, {6, 7}, {0}, {4, 3, 2, 1}}};
}

CylinderDiagram diagram_case6()
{
  return CylinderDiagram{{{0, 1, 2, 3}, {4, 7, 6, 5}}, {{4, 5, 6, 7}, {2, 1, 0, 3}}};
}

} // namespace tsurf
