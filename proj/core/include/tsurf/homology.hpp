#pragma once

#include "tsurf/cylinders.hpp"
#include "tsurf/diagram.hpp"
#include "tsurf/intmat.hpp"
#include "tsurf/surface.hpp"

#include <vector>

namespace tsurf {

// Edge chains on an origami have length 2n: h_i (bottom edge of square i) at index i,
// v_i (left edge of square i) at index n + i. Dual chains use r_i (center i to center h(i))
// at index i and u_i (center i to center v(i)) at index n + i.
struct HomologyBasis {
  Origami origami;
  int genus = 1;
  VertexData vertices;
  std::vector<IntVec> cycles; // 2g edge cycles
  IntMat omega, omega_inv;    // intersection form in this basis and its inverse
};

using HomologyClass = IntVec;

HomologyBasis homology_basis(const Origami &o);

IntVec chain_boundary(const Origami &o, const IntVec &chain);
bool is_cycle(const Origami &o, const IntVec &chain);
IntVec square_relation(const Origami &o, int i);
IntVec h_edge(const Origami &o, int i);
IntVec v_edge(const Origami &o, int i);

// Dual cycle homologous to a primal cycle, displaced into the square interiors.
IntVec push_to_dual(const HomologyBasis &b, const IntVec &cycle);
// Algebraic intersection of two primal cycles.
std::int64_t chain_intersection(const HomologyBasis &b, const IntVec &x, const IntVec &y);
// Intersection of a primal cycle with a dual cycle.
std::int64_t primal_dual_intersection(const Origami &o, const IntVec &primal, const IntVec &dual);
// Coordinates of a cycle in the basis.
HomologyClass coordinates(const HomologyBasis &b, const IntVec &cycle);
IntVec chain_of(const HomologyBasis &b, const HomologyClass &c);
std::int64_t intersect(const HomologyBasis &b, const HomologyClass &x, const HomologyClass &y);

// Horizontal and vertical holonomy as covectors on the basis.
struct HolonomyCovector {
  IntVec x, y;
};
HolonomyCovector holonomy(const HomologyBasis &b);

// Chain map induced by a generator (chains on o to chains on act_generator(o, g)).
IntVec chain_map(const Origami &o, Gen g, const IntVec &chain);
IntVec chain_map(const Origami &o, const Word &w, const IntVec &chain);
IntVec relabel_chain(const Perm &sigma, const IntVec &chain);
// Matrix taking coordinates in `from` to coordinates in `to`, where to.origami = act_sl2z(from.origami, w).
IntMat transport_matrix(const HomologyBasis &from, const Word &w, const HomologyBasis &to);

// Homology data of a decomposition, expressed in the basis of its source origami.
struct DecompositionHomology {
  HomologyBasis source, frame;
  IntMat to_frame, from_frame;
};
DecompositionHomology decomposition_homology(const CylinderDecomposition &d);

HomologyClass core_curve_class(const CylinderDecomposition &d, int cylinder);
std::vector<HomologyClass> core_classes(const CylinderDecomposition &d, const DecompositionHomology &dh);
int core_span_rank(const CylinderDecomposition &d);

struct AdaptedBasis {
  std::vector<HomologyClass> alphas, betas; // source coordinates
  int genus = 0;
  int g_prime = 0;
  std::vector<bool> core_flags;        // per alpha index
  std::vector<int> alpha_cylinder;     // cylinder of a core alpha, -1 otherwise
  std::vector<int> component;          // dual-graph vertex for indices < g_prime, -1 otherwise
  std::vector<HomologyClass> cores;    // per cylinder
  std::vector<IntVec> crossing;        // crossing[e][i] = <core_e, beta_i>
  Pinch pinch;
  IntMat omega;                        // source intersection form
};

AdaptedBasis adapted_basis(const CylinderDecomposition &d);
// Chains of the closed curves made of saddle connections inside each pinch component.
std::vector<std::vector<HomologyClass>> component_cycles(const CylinderDecomposition &d,
                                                         const DecompositionHomology &dh, const Pinch &p);
// J^T Omega J with J = [alphas | betas].
IntMat gram_matrix(const AdaptedBasis &a);
IntMat standard_symplectic(int g);

} // namespace tsurf
