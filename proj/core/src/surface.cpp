#include "tsurf/surface.hpp"
#include "tsurf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <regex>
#include <sstream>

namespace tsurf {

Perm perm_inverse(const Perm &p)
{
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    q[p[i]] = static_cast<int>(i);
  return q;
}

Perm perm_compose(const Perm &a, const Perm &b)
{
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    c[i] = a[b[i]];
  return c;
}

std::vector<std::vector<int>> perm_cycles(const Perm &p)
{
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s])
      continue;
    std::vector<int> c;
    for (int x = static_cast<int>(s); !seen[x]; x = p[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(c);
  }
  return out;
}

std::string format_cycles(const Perm &p)
{
  std::ostringstream os;
  for (const auto &c : perm_cycles(p)) {
    if (c.size() < 2)
      continue;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i];
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

namespace {

std::vector<std::vector<int>> read_cycles(const std::string &text)
{
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(')
      throw ValidationError("malformed cycle notation: '" + text + "'");
    auto close = text.find(')', i);
    if (close == std::string::npos)
      throw ValidationError("unbalanced parenthesis in '" + text + "'");
    std::istringstream is(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    std::string tok;
    while (is >> tok) {
      std::size_t used = 0;
      int x = -1;
      try {
        x = std::stoi(tok, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != tok.size() || x < 0)
        throw ValidationError("bad square label '" + tok + "'");
      cyc.push_back(x);
    }
    cycles.push_back(cyc);
    i = close + 1;
  }
  return cycles;
}

int max_label(const std::vector<std::vector<int>> &cycles)
{
  int m = -1;
  for (const auto &c : cycles)
    for (int x : c)
      m = std::max(m, x);
  return m;
}

Perm cycles_to_perm(const std::vector<std::vector<int>> &cycles, int n)
{
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto &c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= n)
        throw ValidationError("label " + std::to_string(c[k]) + " out of range");
      if (used[c[k]])
        throw ValidationError("label " + std::to_string(c[k]) + " repeated");
      used[c[k]] = true;
      p[c[k]] = c[(k + 1) % c.size()];
    }
  return p;
}

bool is_permutation(const Perm &p)
{
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

} // namespace

Perm parse_cycles(const std::string &text, int n)
{
  return cycles_to_perm(read_cycles(text), n);
}

Perm Origami::commutator() const
{
  return perm_compose(h, perm_compose(v, perm_compose(h_inv(), v_inv())));
}

Origami build_origami(const Perm &h, const Perm &v)
{
  if (h.empty() || h.size() != v.size())
    throw ValidationError("h and v must be permutations of the same nonempty set");
  if (!is_permutation(h) || !is_permutation(v))
    throw ValidationError("h and v must be permutations");
  int n = static_cast<int>(h.size());
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
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
  if (count != n)
    throw NotTransitive("the orbit of square 0 has " + std::to_string(count) + " of " +
                        std::to_string(n) + " squares");
  return Origami{n, h, v};
}

Origami parse_origami_line(const std::string &line)
{
  static const std::regex re(R"re(^\s*origami\s+h="([^"]*)"\s+v="([^"]*)"\s*$)re");
  std::smatch m;
  if (!std::regex_match(line, m, re))
    throw ValidationError("expected origami h=\"...\" v=\"...\", got '" + line + "'");
  auto hc = read_cycles(m[1].str());
  auto vc = read_cycles(m[2].str());
  int n = std::max(max_label(hc), max_label(vc)) + 1;
  n = std::max(n, 1);
  return build_origami(cycles_to_perm(hc, n), cycles_to_perm(vc, n));
}

std::vector<Origami> parse_origami_file(const std::string &text)
{
  std::vector<Origami> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    out.push_back(parse_origami_line(line));
  }
  return out;
}

std::string to_line(const Origami &o)
{
  return "origami h=\"" + format_cycles(o.h) + "\" v=\"" + format_cycles(o.v) + "\"";
}

Stratum make_stratum(std::vector<int> kappa)
{
  int sum = 0;
  for (int k : kappa) {
    if (k <= 0)
      throw ValidationError("zero orders must be positive");
    sum += k;
  }
  if (sum % 2 != 0)
    throw SumMismatch("sum of zero orders must be even");
  std::sort(kappa.rbegin(), kappa.rend());
  return Stratum{kappa, sum / 2 + 1};
}

VertexData vertex_data(const Origami &o)
{
  VertexData d;
  d.vertex_of.assign(o.n, -1);
  d.cycles = perm_cycles(o.commutator());
  for (std::size_t k = 0; k < d.cycles.size(); ++k) {
    for (int i : d.cycles[k])
      d.vertex_of[i] = static_cast<int>(k);
    d.order.push_back(static_cast<int>(d.cycles[k].size()) - 1);
  }
  return d;
}

Stratum singularity_data(const Origami &o)
{
  auto d = vertex_data(o);
  std::vector<int> kappa;
  for (int k : d.order)
    if (k > 0)
      kappa.push_back(k);
  std::sort(kappa.rbegin(), kappa.rend());
  // V - E + F = #cycles - 2n + n
  int chi = static_cast<int>(d.cycles.size()) - o.n;
  return Stratum{kappa, (2 - chi) / 2};
}

std::string to_string(const Stratum &s)
{
  std::ostringstream os;
  os << "H(";
  for (std::size_t i = 0; i < s.kappa.size(); ++i)
    os << (i ? "," : "") << s.kappa[i];
  if (s.kappa.empty())
    os << '0';
  os << ") genus " << s.genus;
  return os.str();
}

Word parse_word(const std::string &text)
{
  Word w;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty())
      continue;
    if (tok == "T")
      w.push_back(Gen::T);
    else if (tok == "Ti" || tok == "T^-1" || tok == "t")
      w.push_back(Gen::Tinv);
    else if (tok == "S")
      w.push_back(Gen::S);
    else
      throw ValidationError("unknown generator '" + tok + "'");
  }
  return w;
}

std::string to_string(const Word &w)
{
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += ',';
    s += w[i] == Gen::T ? "T" : w[i] == Gen::Tinv ? "Ti" : "S";
  }
  return s.empty() ? "id" : s;
}

Mat2 gen_matrix(Gen g)
{
  switch (g) {
  case Gen::T:
    return {{{1, 1}, {0, 1}}};
  case Gen::Tinv:
    return {{{1, -1}, {0, 1}}};
  default:
    return {{{0, 1}, {-1, 0}}};
  }
}

Mat2 mat_mul(const Mat2 &a, const Mat2 &b)
{
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

Mat2 word_matrix(const Word &w)
{
  Mat2 m{{{1, 0}, {0, 1}}};
  for (Gen g : w)
    m = mat_mul(m, gen_matrix(g));
  return m;
}

Origami act_generator(const Origami &o, Gen g)
{
  switch (g) {
  case Gen::T:
    return Origami{o.n, o.h, perm_compose(o.v, o.h_inv())};
  case Gen::Tinv:
    return Origami{o.n, o.h, perm_compose(o.v, o.h)};
  default:
    return Origami{o.n, o.v, o.h_inv()};
  }
}

Origami act_sl2z(const Origami &o, const Word &w)
{
  Origami r = o;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r = act_generator(r, *it);
  return r;
}

Origami relabel(const Origami &o, const Perm &sigma)
{
  Origami r{o.n, Perm(o.n), Perm(o.n)};
  for (int i = 0; i < o.n; ++i) {
    r.h[sigma[i]] = sigma[o.h[i]];
    r.v[sigma[i]] = sigma[o.v[i]];
  }
  return r;
}

CanonicalForm canonical_form(const Origami &o)
{
  std::optional<CanonicalForm> best;
  for (int s = 0; s < o.n; ++s) {
    Perm label(o.n, -1);
    std::deque<int> queue{s};
    label[s] = 0;
    int next = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : {o.h[x], o.v[x]})
        if (label[y] < 0) {
          label[y] = next++;
          queue.push_back(y);
        }
    }
    Origami f = relabel(o, label);
    if (!best || std::tie(f.h, f.v) < std::tie(best->form.h, best->form.v))
      best = CanonicalForm{f, label};
  }
  return *best;
}

std::optional<Perm> isomorphism(const Origami &a, const Origami &b)
{
  if (a.n != b.n)
    return std::nullopt;
  auto ca = canonical_form(a), cb = canonical_form(b);
  if (ca.form != cb.form)
    return std::nullopt;
  // a -> canonical -> b
  return perm_compose(perm_inverse(cb.relabeling), ca.relabeling);
}

Origami torus()
{
  return build_origami({0}, {0});
}

Origami wollmilchsau()
{
  return build_origami(parse_cycles("(0 1 2 3)(4 7 6 5)", 8), parse_cycles("(0 4 2 6)(1 5 3 7)", 8));
}

Origami l_origami()
{
  return build_origami(parse_cycles("(0 1)", 3), parse_cycles("(0 2)", 3));
}

} // namespace tsurf
