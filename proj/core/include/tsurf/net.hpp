#pragma once

#include "tsurf/diagram.hpp"
#include "tsurf/rational.hpp"
#include "tsurf/surface.hpp"

#include <vector>

namespace tsurf {

// A cylinder drawn as the rectangle [0,w) x [0,ht]. Bottom saddles are laid out left to
// right from x = 0, top saddles from x = 0 in top coordinates, and the point above bottom
// coordinate x sits at top coordinate x + tw (mod w).
struct CylinderMetric {
  Rational w, ht, tw;
  bool operator==(const CylinderMetric &) const = default;
};

struct FlatSurfaceNet {
  std::vector<CylinderMetric> cylinders;
  CylinderDiagram diagram;
  std::vector<Rational> saddle_lengths;
  bool degenerate = false;

  Rational bottom_start(int c, int index) const;
  Rational top_start(int c, int index) const;
  Rational area() const;
};

enum class NetMode { Strict, Degenerate };

// Degenerate mode accepts a single zero-length saddle connection.
FlatSurfaceNet build_net(std::vector<CylinderMetric> cylinders, CylinderDiagram diagram,
                         std::vector<Rational> saddle_lengths, NetMode mode = NetMode::Strict);

// Realizes a net with rational data as an origami after scaling every length by the
// common denominator (times `scale`).
Origami net_to_origami(const FlatSurfaceNet &net, long scale = 1);
// Multiplies horizontal lengths by a and heights by b.
FlatSurfaceNet rescale(const FlatSurfaceNet &net, const Rational &a, const Rational &b);

FlatSurfaceNet torus_net();
FlatSurfaceNet wollmilchsau_net();

} // namespace tsurf
