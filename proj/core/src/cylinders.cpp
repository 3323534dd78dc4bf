#include "tsurf/cylinders.hpp"
#include "tsurf/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tsurf {

std::string to_string(const Direction &d)
{
  return d.q == 0 ? std::string("vertical") : std::to_string(d.p) + "/" + std::to_string(d.q);
}

namespace {

struct Rows {
  std::vector<int> row_of;
  std::vector<std::vector<int>> rows; // h-order, starting at the smallest label
};

Rows h_rows(const Origami &o)
{
  Rows r;
  r.row_of.assign(o.n, -1);
  for (int s = 0; s < o.n; ++s) {
    if (r.row_of[s] >= 0)
      continue;
    std::vector<int> row;
    for (int x = s; r.row_of[x] < 0; x = o.h[x]) {
      r.row_of[x] = static_cast<int>(r.rows.size());
      row.push_back(x);
    }
    r.rows.push_back(row);
  }
  return r;
}

} // namespace

CylinderDecomposition horizontal_decomposition(const Origami &o)
{
  auto vd = vertex_data(o);
  auto singular = [&](int square) { return vd.order[vd.vertex_of[square]] > 0; };
  auto rows = h_rows(o);

  // a row starts a cylinder when some bottom-left corner on it is singular
  std::vector<int> starts;
  for (std::size_t r = 0; r < rows.rows.size(); ++r)
    if (std::any_of(rows.rows[r].begin(), rows.rows[r].end(), singular))
      starts.push_back(static_cast<int>(r));
  if (starts.empty())
    starts.push_back(rows.row_of[0]);

  CylinderDecomposition d;
  d.source = o;
  d.direction = {0, 1};
  d.frame = o;

  std::vector<bool> is_start(rows.rows.size(), false);
  for (int r : starts)
    is_start[r] = true;

  for (int r0 : starts) {
    Cylinder c;
    c.id = static_cast<int>(d.cylinders.size());
    const auto &bottom = rows.rows[r0];
    int b0 = -1;
    for (int x : bottom)
      if (singular(x) && (b0 < 0 || x < b0))
        b0 = x;
    if (b0 < 0)
      b0 = *std::min_element(bottom.begin(), bottom.end());
    std::vector<int> row;
    for (std::size_t k = 0, x = b0; k < bottom.size(); ++k, x = o.h[x])
      row.push_back(static_cast<int>(x));
    while (true) {
      c.rows.push_back(row);
      int above = o.v[row[0]];
      if (is_start[rows.row_of[above]])
        break;
      for (auto &x : row)
        x = o.v[x];
    }
    c.w = static_cast<long>(bottom.size());
    c.ht = static_cast<long>(c.rows.size());
    c.modulus = c.ht / c.w;
    d.cylinders.push_back(c);
  }

  // saddles keyed by the square owning their first bottom edge
  std::map<int, int> saddle_id;
  std::vector<Rational> lengths;
  auto saddle_for = [&](int first, int len) {
    auto it = saddle_id.find(first);
    if (it == saddle_id.end()) {
      it = saddle_id.emplace(first, static_cast<int>(lengths.size())).first;
      lengths.push_back(len);
    }
    return it->second;
  };
  // boundary walk over the squares whose bottom edges form the boundary
  auto split = [&](const std::vector<int> &edges) {
    std::vector<int> seq;
    std::size_t w = edges.size();
    bool any = std::any_of(edges.begin(), edges.end(), singular);
    if (!any)
      return std::vector<int>{saddle_for(edges[0], static_cast<int>(w))};
    std::size_t k = 0;
    while (k < w) {
      std::size_t j = k + 1;
      while (j < w && !singular(edges[j]))
        ++j;
      seq.push_back(saddle_for(edges[k], static_cast<int>(j - k)));
      k = j;
    }
    return seq;
  };

  std::vector<CylinderMetric> metrics;
  for (const auto &c : d.cylinders) {
    d.diagram.bottom.push_back(split(c.rows.front()));
    const auto &top_row = c.rows.back();
    std::size_t w = top_row.size();
    // top origin: first square of the top row (from the smallest label) with a singular top-left corner
    std::size_t start = 0;
    int best = -1;
    for (std::size_t k = 0; k < w; ++k)
      if (singular(o.v[top_row[k]]) && (best < 0 || top_row[k] < best)) {
        best = top_row[k];
        start = k;
      }
    if (best < 0) {
      // no singular corner: align with the bottom origin of the cylinder above
      int target = -1;
      for (const auto &other : d.cylinders)
        if (rows.row_of[other.rows.front().front()] == rows.row_of[o.v[top_row[0]]])
          target = other.rows.front().front();
      for (std::size_t k = 0; k < w; ++k)
        if (o.v[top_row[k]] == target)
          start = k;
    }
    std::vector<int> edges;
    for (std::size_t k = 0; k < w; ++k)
      edges.push_back(o.v[top_row[(start + k) % w]]);
    d.diagram.top.push_back(split(edges));
    // column above b0 sits at top position (w - start) mod w
    long tw = static_cast<long>((w - start) % w);
    metrics.push_back({c.w, c.ht, Rational(tw)});
  }
  d.net = build_net(metrics, d.diagram, lengths);
  return d;
}

Word horizontalizing_word(Direction dir)
{
  long a = dir.q, b = dir.p;
  if (std::gcd(a, b) != 1)
    throw ValidationError("direction must be a reduced slope");
  Word w;
  auto prepend = [&](Gen g) { w.insert(w.begin(), g); };
  while (b != 0) {
    if (a != 0 && std::abs(a) >= std::abs(b)) {
      long k = -(a / b);
      for (long i = 0; i < std::abs(k); ++i)
        prepend(k > 0 ? Gen::T : Gen::Tinv);
      a += k * b;
    }
    // S (a, b) = (b, -a)
    prepend(Gen::S);
    long na = b, nb = -a;
    a = na;
    b = nb;
  }
  return w;
}

CylinderDecomposition periodic_decomposition(const Origami &o, Direction dir)
{
  Word w = horizontalizing_word(dir);
  Origami frame = act_sl2z(o, w);
  CylinderDecomposition d = horizontal_decomposition(frame);
  d.source = o;
  d.direction = dir;
  d.word = w;
  d.frame = frame;
  return d;
}

std::vector<Direction> enumerate_directions(long bound)
{
  std::vector<Direction> dirs{{0, 1}, {1, 0}};
  for (long q = 1; q <= bound; ++q)
    for (long p = -bound; p <= bound; ++p)
      if (p != 0 && std::gcd(p, q) == 1)
        dirs.push_back({p, q});
  return dirs;
}

std::vector<long> moduli_exponents(const std::vector<Rational> &moduli)
{
  if (moduli.empty())
    return {};
  mpz_class den = 1;
  for (const auto &m : moduli) {
    if (m <= 0)
      throw ValidationError("moduli must be positive");
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.get_den_mpz_t());
  }
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto &m : moduli) {
    mpz_class x = m.get_num() * (den / m.get_den());
    ints.push_back(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  std::vector<long> out;
  for (const auto &x : ints) {
    mpz_class r = x / g;
    if (!r.fits_slong_p())
      throw std::overflow_error("moduli exponent overflow");
    out.push_back(r.get_si());
  }
  return out;
}

std::vector<long> moduli_exponents(const CylinderDecomposition &d)
{
  std::vector<Rational> m;
  for (const auto &c : d.cylinders)
    m.push_back(c.modulus);
  return moduli_exponents(m);
}

CaseLabel case_label(const CylinderDecomposition &d)
{
  return classify_case(dual_graph(d.diagram));
}

bool has_simple_cylinder(const CylinderDecomposition &d)
{
  for (int c = 0; c < d.diagram.cylinders(); ++c)
    if (d.diagram.bottom[c].size() == 1 && d.diagram.top[c].size() == 1)
      return true;
  return false;
}

} // namespace tsurf
