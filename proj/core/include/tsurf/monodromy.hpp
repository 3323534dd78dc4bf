#pragma once

#include "tsurf/cylinders.hpp"
#include "tsurf/homology.hpp"
#include "tsurf/intmat.hpp"
#include "tsurf/rational.hpp"
#include "tsurf/surface.hpp"
#include "tsurf/transverse.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tsurf {

// An affine automorphism: act_sl2z(o, word) relabeled by `relabeling` is o again.
struct StabilizerGenerator {
  Word word;
  Perm relabeling;
};

std::vector<StabilizerGenerator> stabilizer_generators(const Origami &o, int word_bound);
// Action on H_1 in the basis of homology_basis(o); columns are images of basis vectors.
IntMat homology_action(const Origami &o, const StabilizerGenerator &g);
IntMat homology_action(const HomologyBasis &b, const StabilizerGenerator &g);
bool is_symplectic(const IntMat &m, const IntMat &omega);

// Z-basis (columns) of the kernel of both holonomy covectors.
IntMat zero_holonomy_basis(const HomologyBasis &b);
// The matrix R with M K = K R, K the zero-holonomy basis.
IntMat restrict_to(const IntMat &m, const IntMat &basis);

struct ClosureResult {
  enum class Status { Finite, Unbounded };
  Status status = Status::Finite;
  std::size_t order = 0;   // group order when finite, elements visited otherwise
  std::string witness;     // word in the generators g0, g1, ... (gi^-1 for inverses)
  std::int64_t norm = 0;   // largest entry of the witness
};
std::string to_string(const ClosureResult &r);

ClosureResult closure_classify(const std::vector<IntMat> &generators, std::int64_t norm_bound = 1000000,
                               std::size_t element_cap = 100000);

struct MonodromyReport {
  std::vector<StabilizerGenerator> generators;
  std::vector<IntMat> actions;
  std::vector<IntMat> restricted;
  bool symplectic = true;
  bool preserves_zero_holonomy = true;
  ClosureResult closure;
  std::string label = "monodromy evidence";
};
// Genus 1 has no zero-holonomy block, so the full action is classified there.
MonodromyReport monodromy_report(const Origami &o, int word_bound = 1, std::int64_t norm_bound = 1000000);

struct DirectionBound {
  Direction direction;
  CaseLabel label = CaseLabel::None;
  int core_span_rank = 0;
  int bound = 0; // 2 (g - rank)
};
struct ForniReport {
  int genus = 0;
  int upper_bound = 0;
  std::vector<DirectionBound> witnesses;
  std::optional<ClosureResult> monodromy_status;
};
ForniReport forni_upper_bound(const Origami &o, long direction_bound);

bool zero_eval_check(const std::vector<Rational> &covector, const std::vector<HomologyClass> &classes);

// Homology class (frame basis) of a closed regular trajectory in the net of a decomposition.
HomologyClass trajectory_class(const CylinderDecomposition &d, const Trace &t);
// Class of the witness core curve in the source basis.
HomologyClass witness_class(const CylinderDecomposition &d, const TransverseWitness &w);
// Source direction of the witness holonomy.
Direction witness_direction(const CylinderDecomposition &d, const TransverseWitness &w);

struct ForniCriterionVerdict {
  std::string verdict;
  int elliptic_component = -1;
  std::vector<int> arc_components; // pinch component of each arc of beta
  Direction witness_direction;
};
ForniCriterionVerdict new_forni_criterion(const CylinderDecomposition &d, const HomologyClass &beta,
                                          const TransverseWitness &witness);

} // namespace tsurf
