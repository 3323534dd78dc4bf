#pragma once

#include "tsurf/cylinders.hpp"
#include "tsurf/surface.hpp"

#include <string>
#include <vector>

namespace oracle {

// Structural invariants of one periodic direction. Each check appends a message per violation.
struct PropertyLog {
  long checks = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string &what);
};

// Adapted basis is symplectic, g' matches the pinch genus and core curves are pairwise disjoint.
void check_adapted_basis(const tsurf::CylinderDecomposition &d, PropertyLog &log);
// Log coefficients are symmetric, equal the products of crossing numbers and vanish below g'.
void check_log_coefficients(const tsurf::CylinderDecomposition &d, PropertyLog &log);
// Every flow and gluing map of the net is a bijection of [0, w) preserving length.
void check_interval_maps(const tsurf::CylinderDecomposition &d, PropertyLog &log);
// Cylinder areas add up to the number of squares.
void check_area(const tsurf::CylinderDecomposition &d, PropertyLog &log);

PropertyLog check_all(const std::vector<tsurf::Origami> &surfaces, long direction_bound);

} // namespace oracle
