#pragma once

#include <string>
#include <vector>

#include "mtk/premodular.hpp"

namespace mtk {

enum class CatalogKind { modular, symmetric, premodular };

std::string to_string(CatalogKind k);

struct CatalogEntry {
  std::string name;
  CatalogKind kind = CatalogKind::modular;
  std::string provenance;
};

/// Fixed entries; "zn_anyons:n:p" is additionally accepted by catalog_get for
/// any admissible n, p.
std::vector<CatalogEntry> catalog_list();

/// Verified copy of the named entry. Throws UsageError listing the names.
PreModularData catalog_get(const std::string& name);

CatalogKind catalog_kind(const std::string& name);

PreModularData su2_level(int k);
/// Abelian anyons on Z/n: w_a = exp(2 pi i p a^2/(2n)), S'_ab = exp(2 pi i p ab/n).
/// Needs p n even and gcd(p, n) = 1.
PreModularData zn_anyons(int n, int p);
PreModularData ising();
PreModularData fibonacci();

}  // namespace mtk
