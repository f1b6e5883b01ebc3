#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtk/error.hpp"
#include "mtk/premodular.hpp"

namespace mtk {

/// Group of invertible labels closed under fusion. table[a][b] is the
/// position in `elements` of elements[a] x elements[b].
struct CurrentGroup {
  LabelSet elements;
  std::vector<std::vector<int>> table;
  std::vector<int> inverse;
  bool symmetric = false;  // S'_ij = 1 on K
  bool bosonic = false;    // w_i = 1 on K

  int order() const { return static_cast<int>(elements.size()); }
  /// Position of label z in `elements`, or -1.
  int index_of(Label z) const;
};

/// Invertibility, closure and commutativity only.
CurrentGroup simple_current_group(const PreModularData& d, const LabelSet& k);

/// Additionally requires K to be symmetric and bosonic.
CurrentGroup check_symmetric_subcategory(const PreModularData& d, const LabelSet& k);

/// chi_i(Z) = S'_{Zi} / d_i for Z in K, in the order of K.elements.
using Character = std::vector<RootOfUnity>;

Character monodromy_character(const PreModularData& d, const CurrentGroup& k, Label i);
bool is_trivial(const Character& c);

/// Labels with trivial monodromy character; cross-checked against relative_commutant.
LabelSet local_part(const PreModularData& d, const CurrentGroup& k);

struct Grade {
  Character character;
  LabelSet labels;
};

struct GradingDecomposition {
  std::vector<Grade> grades;  // trivial grade first, then by smallest label
  bool full = false;          // every character of K occurs
};

/// Asserts: full iff K meets the center only in the unit.
GradingDecomposition grading_decomposition(const PreModularData& d, const CurrentGroup& k);

/// Characters of the subgroup `sub` (positions into k.elements), each given
/// on sub in order. The trivial character comes first.
std::vector<Character> subgroup_characters(const CurrentGroup& k, const std::vector<int>& sub);

struct Orbit {
  LabelSet members;
  LabelSet stabilizer;            // K_X
  LabelSet untwisted_stabilizer;  // L_X
  int multiplicity = 1;           // N_X = [K_X : L_X]^(1/2)
};

struct OrbitData {
  std::vector<Orbit> orbits;  // ordered by smallest member
  /// orbit_of[label], -1 outside the analysed label set.
  std::vector<int> orbit_of;
};

/// Untwisted stabilizers keyed by any member of the orbit.
using UntwistedStabilizers = std::map<Label, LabelSet>;

/// Orbits of K acting on `scope` (all labels when empty). L_X = K_X when K_X
/// is cyclic; otherwise it must be supplied.
OrbitData orbit_analysis(const PreModularData& d, const CurrentGroup& k, const LabelSet& scope = {},
                         const UntwistedStabilizers& untwisted = {});

struct CondensedLabel {
  int orbit = 0;
  int character = 0;  // index into subgroup_characters of L_X
};

/// S^{[Z]} matrices in the normalization of the condensed S, indexed by the
/// orbits X with Z in L_X (orbit order). Keyed by the label Z.
using FixedPointMatrices = std::map<Label, CycloMatrix>;

struct CondensationResult {
  PreModularData input;
  CurrentGroup currents;
  LabelSet local;
  GradingDecomposition grading;
  OrbitData orbits;
  std::vector<CondensedLabel> labels;
  PreModularData condensed;
  /// Per input label: (condensed label, multiplicity). Empty off the local part.
  std::vector<std::vector<std::pair<int, int>>> embedding_table;
  FixedPointMatrices fixed_point_matrices;
  bool solver_used = false;
  bool fusion_from_verlinde = false;
};

/// Condensed labels, dims and twists known before fixed points are resolved.
struct PartialCondensation {
  std::vector<std::string> labels;
  std::vector<CycloNum> dims;
  std::vector<RootOfUnity> twist;
  GradingDecomposition grading;
};

class FixedPointResolutionError : public VerificationError {
 public:
  FixedPointResolutionError(const std::string& what, PartialCondensation partial)
      : VerificationError(what), partial_(std::move(partial)) {}
  const PartialCondensation& partial() const { return partial_; }

 private:
  PartialCondensation partial_;
};

struct CondenseOptions {
  std::optional<FixedPointMatrices> fixed_point_matrices;
  UntwistedStabilizers untwisted_stabilizers;
  /// Upper bound on search nodes of the S^{[Z]} solver.
  long solver_budget = 2'000'000;
};

/// (C meet K') x| K for a bosonic symmetric current group K.
CondensationResult condense(const PreModularData& d, const CurrentGroup& k, const CondenseOptions& options = {});

/// Condensation by the full center; the result is asserted modular.
CondensationResult modular_closure(const PreModularData& d, const CondenseOptions& options = {});

}  // namespace mtk
