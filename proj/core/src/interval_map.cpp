#include "tsurf/interval_map.hpp"

#include "tsurf/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tsurf {

namespace {

// Subpieces [a, b) whose images x + offset stay inside [0, L) with the reduced offset.
std::vector<IntervalMap::Piece> unwrapped(const IntervalMap &f)
{
  std::vector<IntervalMap::Piece> out;
  for (const auto &p : f.pieces) {
    Rational off = mod(p.offset, f.length);
    Rational cut = f.length - off; // x >= cut wraps
    if (p.b <= cut) {
      out.push_back({p.a, p.b, off});
    } else if (p.a >= cut) {
      out.push_back({p.a, p.b, off - f.length});
    } else {
      out.push_back({p.a, cut, off});
      out.push_back({cut, p.b, off - f.length});
    }
  }
  return out;
}

std::vector<Interval> merge(std::vector<Interval> v)
{
  std::sort(v.begin(), v.end(), [](const Interval &x, const Interval &y) { return x.lo < y.lo; });
  std::vector<Interval> out;
  for (const auto &i : v) {
    if (i.hi <= i.lo)
      continue;
    if (!out.empty() && i.lo <= out.back().hi)
      out.back().hi = std::max(out.back().hi, i.hi);
    else
      out.push_back(i);
  }
  return out;
}

} // namespace

IntervalMap make_interval_map(Rational length, std::vector<IntervalMap::Piece> pieces)
{
  if (length <= 0)
    throw LengthMismatch("interval map needs positive length");
  std::sort(pieces.begin(), pieces.end(), [](const auto &x, const auto &y) { return x.a < y.a; });
  std::erase_if(pieces, [](const auto &p) { return p.b <= p.a; });
  Rational at = 0;
  for (const auto &p : pieces) {
    if (p.a != at)
      throw ValidationError("interval map pieces do not partition [0, L)");
    at = p.b;
  }
  if (at != length)
    throw LengthMismatch("interval map pieces cover " + to_string(at) + " of " + to_string(length));
  IntervalMap f{std::move(length), std::move(pieces)};
  if (!f.measure_preserving())
    throw ValidationError("interval map images overlap");
  return f;
}

const IntervalMap::Piece &IntervalMap::piece_at(const Rational &x) const
{
  for (const auto &p : pieces)
    if (p.a <= x && x < p.b)
      return p;
  throw ValidationError("point " + tsurf::to_string(x) + " outside [0, " + tsurf::to_string(length) + ")");
}

Rational IntervalMap::operator()(const Rational &x) const
{
  return mod(x + piece_at(x).offset, length);
}

std::vector<Interval> IntervalMap::images() const
{
  std::vector<Interval> out;
  for (const auto &p : unwrapped(*this))
    out.push_back({p.a + p.offset, p.b + p.offset});
  std::sort(out.begin(), out.end(), [](const Interval &x, const Interval &y) { return x.lo < y.lo; });
  return out;
}

bool IntervalMap::measure_preserving() const
{
  Rational at = 0;
  for (const auto &i : images()) {
    if (i.lo != at)
      return false;
    at = i.hi;
  }
  return at == length;
}

Rational IntervalMap::preimage(const Rational &y) const
{
  Rational target = mod(y, length);
  for (const auto &p : unwrapped(*this))
    if (p.a + p.offset <= target && target < p.b + p.offset)
      return target - p.offset;
  throw ValidationError("interval map is not onto");
}

IntervalMap IntervalMap::pre_rotate(const Rational &c) const
{
  // g(x) = f(x + c): the piece [a, b) of f pulls back to [a - c, b - c) mod L.
  std::vector<Piece> out;
  for (const auto &p : pieces) {
    Rational a = mod(p.a - c, length);
    Rational b = a + (p.b - p.a);
    Rational off = p.offset + c;
    if (b <= length) {
      out.push_back({a, b, off});
    } else {
      out.push_back({a, length, off});
      out.push_back({0, b - length, off});
    }
  }
  return make_interval_map(length, std::move(out)).normalized();
}

IntervalMap IntervalMap::post_rotate(const Rational &c) const
{
  std::vector<Piece> out = pieces;
  for (auto &p : out)
    p.offset += c;
  return make_interval_map(length, std::move(out)).normalized();
}

IntervalMap IntervalMap::normalized() const
{
  std::vector<Piece> out;
  for (const auto &p : unwrapped(*this)) {
    if (!out.empty() && out.back().offset == p.offset && out.back().b == p.a)
      out.back().b = p.b;
    else
      out.push_back(p);
  }
  return IntervalMap{length, std::move(out)};
}

IntervalMap build_interval_map(const FlatSurfaceNet &net, Interface from, Interface to)
{
  if (from.side != Side::Bottom || to.side != Side::Top)
    throw ValidationError("interval maps run from a cylinder bottom to a cylinder top");
  int nc = static_cast<int>(net.cylinders.size());
  if (from.cylinder < 0 || from.cylinder >= nc || to.cylinder < 0 || to.cylinder >= nc)
    throw ValidationError("interface cylinder out of range");
  const auto &cf = net.cylinders[from.cylinder];
  const auto &ct = net.cylinders[to.cylinder];
  if (cf.w != ct.w)
    throw LengthMismatch("interfaces have lengths " + to_string(cf.w) + " and " + to_string(ct.w));

  if (from.cylinder == to.cylinder)
    return make_interval_map(cf.w, {{0, cf.w, cf.tw}}).normalized();

  auto sites = locate_saddles(net.diagram);
  std::vector<IntervalMap::Piece> pieces;
  const auto &bottom = net.diagram.bottom[from.cylinder];
  for (std::size_t i = 0; i < bottom.size(); ++i) {
    int s = bottom[i];
    const auto &top_site = sites[s].on_top;
    if (top_site.cylinder != to.cylinder)
      throw ShapeMismatch("saddle " + std::to_string(s) + " on the source does not lie on the target");
    Rational a = net.bottom_start(from.cylinder, static_cast<int>(i));
    Rational t = net.top_start(to.cylinder, top_site.index);
    pieces.push_back({a, a + net.saddle_lengths[s], t - a});
  }
  return make_interval_map(cf.w, std::move(pieces)).normalized();
}

std::vector<Interval> window_hits(const IntervalMap &f, const Interval &J, const Interval &W)
{
  std::vector<Interval> raw;
  for (const auto &p : unwrapped(f)) {
    Rational lo = std::max<Rational>({J.lo, p.a, W.lo - p.offset});
    Rational hi = std::min<Rational>({J.hi, p.b, W.hi - p.offset});
    if (lo < hi)
      raw.push_back({lo, hi});
  }
  return merge(std::move(raw));
}

std::optional<Interval> find_window_hit(const IntervalMap &f, const Interval &J, const Interval &W)
{
  auto hits = window_hits(f, J, W);
  std::optional<Interval> best;
  for (const auto &h : hits)
    if (!best || h.length() > best->length())
      best = h;
  return best;
}

Rational overlap_measure(const IntervalMap &f, const Interval &J)
{
  std::vector<Interval> image;
  for (const auto &p : unwrapped(f)) {
    Rational lo = std::max(J.lo, p.a), hi = std::min(J.hi, p.b);
    if (lo < hi)
      image.push_back({lo + p.offset, hi + p.offset});
  }
  Rational total = 0;
  for (const auto &i : merge(std::move(image))) {
    Rational lo = std::max(i.lo, J.lo), hi = std::min(i.hi, J.hi);
    if (lo < hi)
      total += hi - lo;
  }
  return total;
}

std::string to_string(const IntervalMap &f)
{
  std::ostringstream os;
  os << "L=" << to_string(f.length);
  for (const auto &p : f.pieces)
    os << " [" << to_string(p.a) << "," << to_string(p.b) << ")+" << to_string(p.offset);
  return os.str();
}

} // namespace tsurf
