#pragma once

#include "tsurf/rational.hpp"

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tsurf {

// Truncated expansion  sum c_{a,b} s^a ln(s)^b + O(s^order).
// A coefficient of nullopt is present but opaque (e.g. the symbolic constant term).
class LeadingSeries {
public:
  using Key = std::pair<long, int>; // (power of s, power of ln s)
  static constexpr long kInfinite = LONG_MAX / 4;

  LeadingSeries() = default;
  explicit LeadingSeries(long order) : order_(order) {}

  static LeadingSeries zero() { return LeadingSeries(kInfinite); }
  static LeadingSeries constant(const Rational &c);
  static LeadingSeries opaque_constant(long order);

  // Sets a coefficient; known zeros are dropped. Terms at or beyond the order are ignored.
  LeadingSeries &set(long a, int b, std::optional<Rational> c);
  std::optional<Rational> coefficient(long a, int b) const; // known zero if absent
  bool has_term(long a, int b) const { return terms_.count({a, b}) > 0; }
  long order() const { return order_; }
  const std::map<Key, std::optional<Rational>> &terms() const { return terms_; }

  // Coefficient of ln s, the constant term, and the first positive power with its coefficient.
  std::optional<Rational> c_log() const { return coefficient(0, 1); }
  std::optional<Rational> c0() const { return coefficient(0, 0); }
  long k() const;
  std::optional<Rational> c_k() const;

  // Dominant term as s -> 0: (key, coefficient) or nullopt when everything is truncated.
  std::optional<std::pair<Key, std::optional<Rational>>> leading() const;
  long lowest_power() const;

  LeadingSeries derivative() const;
  std::string to_string() const;

  friend LeadingSeries operator+(const LeadingSeries &f, const LeadingSeries &g);
  friend LeadingSeries operator-(const LeadingSeries &f);
  friend LeadingSeries operator-(const LeadingSeries &f, const LeadingSeries &g) { return f + (-g); }
  friend LeadingSeries operator*(const LeadingSeries &f, const LeadingSeries &g);

private:
  std::map<Key, std::optional<Rational>> terms_;
  long order_ = kInfinite;
};

LeadingSeries determinant(const std::vector<std::vector<LeadingSeries>> &m);

} // namespace tsurf
