#pragma once

#include "tsurf/diagram.hpp"
#include "tsurf/net.hpp"
#include "tsurf/rational.hpp"
#include "tsurf/surface.hpp"

#include <vector>

namespace tsurf {

struct Cylinder {
  int id = 0;
  // rows[r][k]: square in row r (from the bottom), column k
  std::vector<std::vector<int>> rows;
  Rational w, ht, modulus;
};

// Direction of holonomy vector (q, p), i.e. slope p/q.
struct Direction {
  long p = 0, q = 1;
  bool operator==(const Direction &) const = default;
  auto operator<=>(const Direction &) const = default;
};
std::string to_string(const Direction &d);

struct CylinderDecomposition {
  Origami source;
  Direction direction;
  // frame = act_sl2z(source, word) has this direction horizontal
  Word word;
  Origami frame;
  std::vector<Cylinder> cylinders;
  CylinderDiagram diagram;
  FlatSurfaceNet net;
};

CylinderDecomposition horizontal_decomposition(const Origami &o);
// Reduced slope p/q; q = 0 means vertical.
CylinderDecomposition periodic_decomposition(const Origami &o, Direction dir);
// Word whose matrix sends (q, p) to (+-1, 0).
Word horizontalizing_word(Direction dir);
std::vector<Direction> enumerate_directions(long bound);

std::vector<long> moduli_exponents(const std::vector<Rational> &moduli);
std::vector<long> moduli_exponents(const CylinderDecomposition &d);

CaseLabel case_label(const CylinderDecomposition &d);
bool has_simple_cylinder(const CylinderDecomposition &d);

} // namespace tsurf
