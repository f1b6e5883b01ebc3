#pragma once

#include <cstdint>

#include "mtk/groups.hpp"
#include "mtk/premodular.hpp"

namespace mtk {

/// Cocycle class p in H^3(Z/n, U(1)) = Z/n.
struct CocycleData {
  int n = 1;
  int p = 0;
};

/// Symmetric datum Rep(G): fusion from character products, S'_ij = d_i d_j,
/// all twists 1.
PreModularData rep_category(const GroupData& g);

/// D(G): labels (class, centralizer irrep), d = |class| deg, w = chi(a)/deg.
/// Checked to be modular with dim = |G|^2.
PreModularData untwisted_double(const GroupData& g);

/// D^w(Z/n) with labels (a, j): w = exp(2 pi i (aj/n + p a^2/n^2)) and
/// S' = exp(-2 pi i ((ak + bj)/n + 2 p ab/n^2)). Fusion comes from Verlinde and
/// is checked to be a Z/n-extension of Z/n; the result must be modular.
PreModularData twisted_cyclic_double(const CocycleData& c);

struct MinimalExtensionReport {
  CycloNum dim_m;
  CycloNum dim_c;
  LabelSet center;  // Z(C), within the restricted datum, in ambient labels
  CycloNum dim_center;
  bool bound_holds = false;  // dim M >= dim C * dim Z(C)
  bool minimal = false;      // equality
};

/// M must be modular, c fusion-closed.
MinimalExtensionReport minimal_extension_check(const PreModularData& m, const LabelSet& c);

/// Labels of D(G) (or D^w(Z/n)) with trivial class component: the image of Rep(G).
LabelSet rep_image_in_double(const GroupData& g);

}  // namespace mtk
