#pragma once

#include <optional>
#include <vector>

#include "mtk/premodular.hpp"

namespace mtk {

/// Rank bound for subcategory enumeration; MTK_MAX_RANK overrides the default 16.
int max_enumeration_rank();

/// Labels "(a,b)" at index a * rank(d2) + b; N, w and S' multiply.
PreModularData deligne_product(const PreModularData& d1, const PreModularData& d2);

/// Every fusion-closed label set containing the unit, sorted by size then
/// lexicographically.
std::vector<LabelSet> enumerate_fusion_subcategories(const PreModularData& d);

struct CommutantEntry {
  LabelSet sub;
  LabelSet commutant;
  LabelSet double_commutant;
  CycloNum dim_sub;
  CycloNum dim_commutant;
  bool double_commutant_ok = false;
  bool dimension_ok = false;
};

struct CommutantReport {
  CycloNum dim;
  std::vector<CommutantEntry> entries;

  bool all_ok() const;
};

/// K'' = K and dim K * dim K' = dim C for every fusion subcategory K.
/// Requires modular input.
CommutantReport double_commutant_report(const PreModularData& d);

struct FactorizationReport {
  std::vector<PreModularData> factors;
  /// pairing[t][f] is the label of factor f corresponding to input label t.
  std::vector<std::vector<Label>> pairing;
  bool verified = false;
};

/// Splits off the smallest proper modular subcategory K (lexicographically
/// first among equal ranks) against K', recursing until every factor is prime.
/// Each split is verified by exact multiplicativity of d, w, N and S'.
FactorizationReport factorize(const PreModularData& d);

/// Bijection p with p[0] = 0 carrying labels of a to labels of b and
/// preserving d, w, duals and fusion (and S' when requested).
std::optional<std::vector<Label>> find_relabeling(const PreModularData& a, const PreModularData& b,
                                                  bool match_sprime = false);

}  // namespace mtk
