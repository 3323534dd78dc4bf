#pragma once

#include "tsurf/net.hpp"
#include "tsurf/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tsurf {

// Half-open [lo, hi). Returned window hits are understood as open intervals.
struct Interval {
  Rational lo, hi;
  Rational length() const { return hi - lo; }
  bool operator==(const Interval &) const = default;
};

// Piecewise translation of [0, length): x in [a, b) goes to x + offset (mod length).
struct IntervalMap {
  struct Piece {
    Rational a, b, offset;
    bool operator==(const Piece &) const = default;
  };

  Rational length;
  std::vector<Piece> pieces;

  Rational operator()(const Rational &x) const;
  const Piece &piece_at(const Rational &x) const;
  // Image pieces split at the wrap point, sorted by image position.
  std::vector<Interval> images() const;
  bool measure_preserving() const;
  // The unique x with f(x) = y.
  Rational preimage(const Rational &y) const;
  // x -> f(x + c) and x -> f(x) + c.
  IntervalMap pre_rotate(const Rational &c) const;
  IntervalMap post_rotate(const Rational &c) const;
  // Pieces cut so that no image wraps; adjacent pieces with equal offsets merged.
  IntervalMap normalized() const;
};

enum class Side { Bottom, Top };
struct Interface {
  int cylinder = 0;
  Side side = Side::Bottom;
};

IntervalMap make_interval_map(Rational length, std::vector<IntervalMap::Piece> pieces);

// from must be a bottom and to a top. The same cylinder gives the flow across it (x -> x + tw);
// different cylinders give the identification of shared saddle connections.
IntervalMap build_interval_map(const FlatSurfaceNet &net, Interface from, Interface to);

// Maximal open (a, b) inside J with f((a, b)) inside W, leftmost among the longest.
std::optional<Interval> find_window_hit(const IntervalMap &f, const Interval &J, const Interval &W);
// All maximal hits, left to right.
std::vector<Interval> window_hits(const IntervalMap &f, const Interval &J, const Interval &W);
// Lebesgue measure of J intersected with f(J).
Rational overlap_measure(const IntervalMap &f, const Interval &J);

std::string to_string(const IntervalMap &f);

} // namespace tsurf
