#include "tsurf/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tsurf {

namespace {

std::optional<Rational> add(const std::optional<Rational> &x, const std::optional<Rational> &y)
{
  if (!x || !y)
    return std::nullopt;
  return *x + *y;
}

long sat_add(long a, long b)
{
  if (a >= LeadingSeries::kInfinite || b >= LeadingSeries::kInfinite)
    return LeadingSeries::kInfinite;
  return a + b;
}

} // namespace

LeadingSeries LeadingSeries::constant(const Rational &c)
{
  LeadingSeries f;
  f.set(0, 0, c);
  return f;
}

LeadingSeries LeadingSeries::opaque_constant(long order)
{
  LeadingSeries f(order);
  f.set(0, 0, std::nullopt);
  return f;
}

LeadingSeries &LeadingSeries::set(long a, int b, std::optional<Rational> c)
{
  if (a >= order_)
    return *this;
  if (c && *c == 0)
    terms_.erase({a, b});
  else
    terms_[{a, b}] = std::move(c);
  return *this;
}

std::optional<Rational> LeadingSeries::coefficient(long a, int b) const
{
  if (a >= order_)
    return std::nullopt;
  auto it = terms_.find({a, b});
  if (it == terms_.end())
    return Rational(0);
  return it->second;
}

long LeadingSeries::k() const
{
  for (const auto &[key, c] : terms_)
    if (key.first > 0)
      return key.first;
  return order_;
}

std::optional<Rational> LeadingSeries::c_k() const
{
  long kk = k();
  if (kk >= order_)
    return std::nullopt;
  return coefficient(kk, 0);
}

long LeadingSeries::lowest_power() const
{
  if (terms_.empty())
    return order_;
  return std::min(terms_.begin()->first.first, order_);
}

std::optional<std::pair<LeadingSeries::Key, std::optional<Rational>>> LeadingSeries::leading() const
{
  if (terms_.empty())
    return std::nullopt;
  long a = terms_.begin()->first.first;
  // among equal powers of s, the highest power of ln s dominates
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end() && it->first.first == a; ++it)
    best = it;
  return std::make_pair(best->first, best->second);
}

LeadingSeries LeadingSeries::derivative() const
{
  LeadingSeries d(order_ >= kInfinite ? kInfinite : order_ - 1);
  std::map<Key, std::optional<Rational>> acc;
  auto accumulate = [&](Key k, std::optional<Rational> c) {
    auto it = acc.find(k);
    if (it == acc.end())
      acc.emplace(k, c);
    else
      it->second = add(it->second, c);
  };
  for (const auto &[key, c] : terms_) {
    auto [a, b] = key;
    if (a != 0)
      accumulate({a - 1, b}, c ? std::optional<Rational>(*c * a) : std::nullopt);
    if (b != 0)
      accumulate({a - 1, b - 1}, c ? std::optional<Rational>(*c * b) : std::nullopt);
  }
  for (auto &[k, c] : acc)
    d.set(k.first, k.second, c);
  return d;
}

LeadingSeries operator+(const LeadingSeries &f, const LeadingSeries &g)
{
  LeadingSeries r(std::min(f.order_, g.order_));
  std::map<LeadingSeries::Key, std::optional<Rational>> acc = f.terms_;
  for (const auto &[k, c] : g.terms_) {
    auto it = acc.find(k);
    if (it == acc.end())
      acc.emplace(k, c);
    else
      it->second = add(it->second, c);
  }
  for (auto &[k, c] : acc)
    r.set(k.first, k.second, c);
  return r;
}

LeadingSeries operator-(const LeadingSeries &f)
{
  LeadingSeries r(f.order_);
  for (const auto &[k, c] : f.terms_)
    r.set(k.first, k.second, c ? std::optional<Rational>(-*c) : std::nullopt);
  return r;
}

LeadingSeries operator*(const LeadingSeries &f, const LeadingSeries &g)
{
  long order = std::min(sat_add(f.order_, g.lowest_power()), sat_add(g.order_, f.lowest_power()));
  LeadingSeries r(order);
  std::map<LeadingSeries::Key, std::optional<Rational>> acc;
  for (const auto &[kf, cf] : f.terms_)
    for (const auto &[kg, cg] : g.terms_) {
      LeadingSeries::Key k{kf.first + kg.first, kf.second + kg.second};
      if (k.first >= order)
        continue;
      std::optional<Rational> c;
      if (cf && cg)
        c = *cf * *cg;
      auto it = acc.find(k);
      if (it == acc.end())
        acc.emplace(k, c);
      else
        it->second = add(it->second, c);
    }
  for (auto &[k, c] : acc)
    r.set(k.first, k.second, c);
  return r;
}

std::string LeadingSeries::to_string() const
{
  std::ostringstream os;
  bool first = true;
  for (const auto &[k, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << (c ? "(" + tsurf::to_string(*c) + ")" : std::string("c"));
    if (k.first != 0)
      os << "*s^" << k.first;
    if (k.second == 1)
      os << "*ln(s)";
    else if (k.second > 1)
      os << "*ln(s)^" << k.second;
  }
  if (order_ < kInfinite)
    os << (first ? "" : " + ") << "O(s^" << order_ << ")";
  else if (first)
    os << "0";
  return os.str();
}

LeadingSeries determinant(const std::vector<std::vector<LeadingSeries>> &m)
{
  std::size_t n = m.size();
  for (const auto &row : m)
    if (row.size() != n)
      throw std::invalid_argument("determinant of a non-square series matrix");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LeadingSeries total = LeadingSeries::zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    LeadingSeries term = LeadingSeries::constant(1);
    for (std::size_t i = 0; i < n; ++i)
      term = term * m[i][perm[i]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

} // namespace tsurf
