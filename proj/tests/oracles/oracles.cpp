#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

using tsurf::Origami;
using tsurf::Rational;

namespace {

bool connected(const std::vector<int> &h, const std::vector<int> &v)
{
  std::vector<bool> seen(h.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {h[x], v[x]})
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == h.size();
}

} // namespace

Origami random_origami(std::mt19937_64 &rng, int min_n, int max_n)
{
  std::uniform_int_distribution<int> size(min_n, max_n);
  while (true) {
    int n = size(rng);
    std::vector<int> h(n), v(n);
    std::iota(h.begin(), h.end(), 0);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(h.begin(), h.end(), rng);
    std::shuffle(v.begin(), v.end(), rng);
    if (connected(h, v))
      return tsurf::build_origami(h, v);
  }
}

std::vector<Origami> corpus(int count, int max_n, std::uint64_t seed)
{
  std::vector<Origami> out{tsurf::torus(), tsurf::l_origami(), tsurf::wollmilchsau()};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i)
    out.push_back(random_origami(rng, 2, max_n));
  return out;
}

std::vector<int> corner_walk_kappa(const Origami &o)
{
  // Going counterclockwise around the bottom-left corner of square i visits the bottom-right
  // corner of h^-1(i), the top-right corner of h^-1 v^-1(i), the top-left corner of v^-1 ...
  // each full turn of 2 pi returns to a bottom-left corner at v h^-1 v^-1 ... applied to i.
  int n = o.n;
  std::vector<int> hinv(n), vinv(n);
  for (int i = 0; i < n; ++i) {
    hinv[o.h[i]] = i;
    vinv[o.v[i]] = i;
  }
  std::vector<bool> seen(n, false);
  std::vector<int> kappa;
  for (int i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    int turns = 0;
    int x = i;
    do {
      seen[x] = true;
      x = o.v[o.h[vinv[hinv[x]]]];
      ++turns;
    } while (x != i);
    if (turns > 1)
      kappa.push_back(turns - 1);
  }
  std::sort(kappa.rbegin(), kappa.rend());
  return kappa;
}

int euler_genus(const Origami &o)
{
  int vertices = static_cast<int>(tsurf::perm_cycles(o.commutator()).size());
  int chi = vertices - 2 * o.n + o.n;
  return (2 - chi) / 2;
}

std::vector<Rational> farey_interior(long n)
{
  std::vector<Rational> out;
  for (long q = 2; q <= n; ++q)
    for (long p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1)
        out.push_back(Rational(p, q));
  std::sort(out.begin(), out.end());
  return out;
}

bool window_inequality(const Rational &t0, const Rational &s0, const Rational &t_start, const Rational &min_saddle)
{
  return t0 >= s0 && s0 >= min_saddle && t_start >= 0 && 1 - 2 * t0 - 2 * s0 >= t_start;
}

namespace {

std::int64_t as_int(const Rational &x)
{
  if (x.get_den() != 1 || !x.get_num().fits_slong_p())
    throw std::logic_error("scaled net data is not integral");
  return x.get_num().get_si();
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Integer copy of the net: every horizontal length multiplied by `scale`.
struct IntNet {
  struct Cyl {
    std::int64_t w, tw;
    std::vector<int> bottom, top;
    std::vector<std::int64_t> bottom_at, top_at; // left ends of the boundary saddles
  };
  std::vector<Cyl> cyl;
  std::vector<std::int64_t> len;
  std::vector<int> bottom_owner;
  std::vector<std::size_t> bottom_index;
};

IntNet integer_net(const tsurf::FlatSurfaceNet &net, std::int64_t scale)
{
  IntNet in;
  for (const auto &l : net.saddle_lengths)
    in.len.push_back(as_int(l * scale));
  in.bottom_owner.assign(in.len.size(), -1);
  in.bottom_index.assign(in.len.size(), 0);
  for (int c = 0; c < net.diagram.cylinders(); ++c) {
    IntNet::Cyl k;
    k.w = as_int(net.cylinders[c].w * scale);
    k.tw = as_int(net.cylinders[c].tw * scale);
    k.bottom = net.diagram.bottom[c];
    k.top = net.diagram.top[c];
    std::int64_t at = 0;
    for (std::size_t i = 0; i < k.bottom.size(); ++i) {
      k.bottom_at.push_back(at);
      in.bottom_owner[k.bottom[i]] = c;
      in.bottom_index[k.bottom[i]] = i;
      at += in.len[k.bottom[i]];
    }
    at = 0;
    for (int s : k.top) {
      k.top_at.push_back(at);
      at += in.len[s];
    }
    in.cyl.push_back(k);
  }
  return in;
}

} // namespace

std::optional<ScanHit> scan_case4a(const tsurf::FlatSurfaceNet &net, long denominator, long reach)
{
  int first = -1;
  for (int c = 0; c < net.diagram.cylinders(); ++c)
    if (net.diagram.bottom[c].size() == 4)
      first = c;
  if (first < 0)
    throw std::logic_error("not a Case-4A net");

  std::int64_t data_den = 1;
  auto absorb = [&](const Rational &x) {
    data_den = std::lcm(data_den, static_cast<std::int64_t>(x.get_den().get_si()));
  };
  for (const auto &l : net.saddle_lengths)
    absorb(l);
  for (const auto &c : net.cylinders) {
    absorb(c.w);
    absorb(c.tw);
  }

  for (std::int64_t q = 1; q <= denominator; ++q) {
    // odd sample points sit strictly between consecutive breakpoints
    std::int64_t scale = 2 * std::lcm(data_den, q);
    IntNet in = integer_net(net, scale);
    for (std::int64_t p = -reach * q; p <= reach * q; ++p) {
      if (std::gcd(p, q) != 1)
        continue;
      std::int64_t dx = p * (scale / q);
      for (std::int64_t start = 1; start < in.cyl[first].w; start += 2) {
        int c = first;
        std::int64_t x = start;
        std::vector<int> route;
        bool ok = true;
        for (int step = 0; step < 4; ++step) {
          const auto &k = in.cyl[c];
          route.push_back(c);
          std::int64_t top = floor_mod(x + k.tw + dx, k.w);
          std::size_t i = 0;
          while (i + 1 < k.top.size() && k.top_at[i + 1] <= top)
            ++i;
          int s = k.top[i];
          std::int64_t offset = top - k.top_at[i];
          if (offset == 0) {
            ok = false;
            break;
          }
          c = in.bottom_owner[s];
          x = in.cyl[c].bottom_at[in.bottom_index[s]] + offset;
          if (c == first)
            break;
        }
        if (!ok || c != first || x != start)
          continue;
        std::vector<int> sorted = route;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
          continue;
        return ScanHit{p, q, start, scale, route};
      }
    }
  }
  return std::nullopt;
}

std::set<tsurf::IntMat> naive_closure(const std::vector<tsurf::IntMat> &gens, std::size_t cap)
{
  std::set<tsurf::IntMat> group(gens.begin(), gens.end());
  if (!gens.empty())
    group.insert(tsurf::IntMat::identity(gens.front().rows()));
  while (true) {
    std::set<tsurf::IntMat> next = group;
    for (const auto &a : group)
      for (const auto &b : group)
        next.insert(a * b);
    if (next.size() == group.size() || next.size() > cap)
      return next;
    group = std::move(next);
  }
}

bool symplectic(const tsurf::IntMat &m, const tsurf::IntMat &omega)
{
  std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          s += m(a, i) * omega(a, b) * m(b, j);
      if (s != omega(i, j))
        return false;
    }
  return true;
}

} // namespace oracle
