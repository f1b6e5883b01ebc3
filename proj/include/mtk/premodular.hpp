#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtk/cyclo.hpp"
#include "mtk/fusion.hpp"
#include "mtk/matrix.hpp"

namespace mtk {

/// Fusion ring together with twists and the matrix S' of statistics
/// characters. S'_{0i} is the exact quantum dimension of label i.
struct PreModularData {
  FusionRing ring;
  std::vector<RootOfUnity> twist;
  CycloMatrix sprime;
  /// Every S' entry lives in Q(zeta_cyclotomic_order); every twist order divides it.
  std::int64_t cyclotomic_order = 1;

  int rank() const { return ring.rank(); }
  const CycloNum& dim(Label i) const {
    return sprime(0, static_cast<std::size_t>(i));
  }
  std::vector<CycloNum> dims() const;
};

bool operator==(const PreModularData& a, const PreModularData& b);

/// Checks the ring axioms, symmetry and conjugation of S', the twist rules,
/// agreement of S'_{0i} with the Perron-Frobenius dimensions, and the
/// balancing identity S'_ij = w_i^-1 w_j^-1 sum_k N_{dual(i) j}^k w_k d_k.
std::vector<Violation> validate_premodular(const PreModularData& d);

/// Throws InvariantError naming the first violated invariant.
void require_valid(const PreModularData& d);

/// Computes the common field order, embeds S' into it and validates.
PreModularData make_premodular(FusionRing ring, std::vector<RootOfUnity> twist, CycloMatrix sprime);

/// S' determined by the balancing identity from fusion, twists and exact dims.
CycloMatrix balanced_sprime(const FusionRing& ring, const std::vector<RootOfUnity>& twist,
                            const std::vector<CycloNum>& dims);

/// Full subcategory on a fusion-closed label set (unit first).
PreModularData restrict_premodular(const PreModularData& d, const LabelSet& subset);

struct GaussSums {
  CycloNum delta;  // sum_i d_i^2 w_i^-1
  CycloNum dim;    // sum_i d_i^2
};

GaussSums gauss_sums(const PreModularData& d);
CycloNum subset_dimension(const PreModularData& d, const LabelSet& subset);

/// Labels i with S'_ij = d_i d_j for every j.
LabelSet transparent_objects(const PreModularData& d);

/// Labels i with S'_ij = d_i d_j for every j in k. k must be fusion-closed.
LabelSet relative_commutant(const PreModularData& d, const LabelSet& k);

struct ModularityCertificate {
  CycloNum sprime_determinant;
  bool sprime_invertible = false;
  LabelSet center;
  bool trivial_center = false;
  CycloNum gauss_norm;  // Delta * conj(Delta)
  CycloNum dim;
  bool gauss_criterion = false;
  bool modular = false;

  int criteria_passed() const {
    return int(sprime_invertible) + int(trivial_center) + int(gauss_criterion);
  }
};

/// Evaluates the three equivalent modularity criteria exactly and throws
/// VerificationError if they disagree.
ModularityCertificate is_modular(const PreModularData& d);

/// Positive square root D of the global dimension together with the phase
/// Delta / D, provided Delta / D is a root of unity. The search enlarges the
/// field order of Delta by k in {1,2,3,4,6,8,12,24}; every candidate is
/// verified exactly.
struct GaussPhase {
  CycloNum total_dim;
  RootOfUnity phase;
};
std::optional<GaussPhase> gauss_phase(const std::vector<CycloNum>& dims, const std::vector<RootOfUnity>& twist);

struct ModularData {
  PreModularData base;
  CycloMatrix s;
  CycloMatrix t;
  CycloMatrix charge_conj;
  CycloNum total_dim;
  /// Scalar multiplying diag(w_i) in T; its cube is Delta / |Delta|.
  RootOfUnity t_phase;
};

/// S = S' / sqrt(dim), T = lambda diag(w) with lambda the principal cube root of
/// Delta/|Delta|. (ST)^3 = S^2 is checked exactly.
ModularData normalized_ST(const PreModularData& d);

/// N_ij^k = (1/dim) sum_m S'_im S'_jm conj(S'_km) / S'_0m, checked to be
/// nonnegative integers. Duals are read off N_ij^0.
FusionRing verlinde_from_sprime(const CycloMatrix& sprime, const CycloNum& dim, std::vector<std::string> labels);

/// Verlinde fusion of modular data, checked against the stored fusion ring.
FusionRing verlinde_fusion(const ModularData& m);

struct SL2ZReport {
  CycloMatrix s;
  CycloMatrix t;
  bool s_unitary = false;
  bool t_unitary = false;
  bool s2_equals_st3 = false;
  bool s2_equals_c = false;
  bool s4_identity = false;
  bool tc_equals_ct = false;
  bool c_involution = false;

  bool all() const {
    return s_unitary && t_unitary && s2_equals_st3 && s2_equals_c && s4_identity && tc_equals_ct && c_involution;
  }
};

SL2ZReport sl2z_representation(const ModularData& m);

}  // namespace mtk
