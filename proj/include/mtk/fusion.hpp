#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mtk {

using Label = int;
/// Sorted, duplicate-free list of label indices.
using LabelSet = std::vector<Label>;

LabelSet make_label_set(std::vector<Label> labels);

/// Fusion ring on labels 0..rank-1; label 0 is the unit.
///
/// Coefficients are held densely for O(1) lookup; `nonzero()` gives the sparse
/// triple list used for serialization.
class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::vector<std::string> labels, std::vector<Label> dual);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Label i) const { return labels_.at(static_cast<std::size_t>(i)); }
  Label dual(Label i) const { return dual_.at(static_cast<std::size_t>(i)); }
  const std::vector<Label>& duals() const { return dual_; }

  int N(Label i, Label j, Label k) const { return n_[index(i, j, k)]; }
  void set(Label i, Label j, Label k, int value) { n_[index(i, j, k)] = value; }

  /// All (i, j, k, N) with N != 0, lexicographic.
  std::vector<std::array<int, 4>> nonzero() const;
  /// Labels k appearing in i (x) j.
  std::vector<Label> products(Label i, Label j) const;
  std::optional<Label> find_label(std::string_view name) const;

  /// Sub-ring on a fusion-closed label set, relabeled 0..|K|-1 in set order.
  FusionRing restrict_to(const LabelSet& subset) const;

  friend bool operator==(const FusionRing&, const FusionRing&) = default;

 private:
  std::size_t index(Label i, Label j, Label k) const {
    const auto r = static_cast<std::size_t>(rank());
    return (static_cast<std::size_t>(i) * r + static_cast<std::size_t>(j)) * r + static_cast<std::size_t>(k);
  }

  std::vector<std::string> labels_;
  std::vector<Label> dual_;
  std::vector<int> n_;
};

struct Violation {
  std::string invariant;
  std::vector<int> witness;

  std::string describe() const;
};

/// Checks unit law, associativity, duality and contragredient symmetry.
/// Empty result iff the ring is valid.
std::vector<Violation> validate_fusion_ring(const FusionRing& ring);

struct DimensionVector {
  std::vector<double> dims;
  /// Set when the entry has been matched against an exact S'_{0i}.
  std::vector<bool> exact;
};

/// Perron-Frobenius dimensions via power iteration on sum_i N_i, which is a
/// strictly positive matrix for any valid fusion ring.
DimensionVector perron_frobenius_dims(const FusionRing& ring);

double global_dimension(const DimensionVector& d);

struct QuantizationEntry {
  Label label = 0;
  double dim = 0.0;
  /// n with 2cos(pi/n) closest to dim (0 when dim >= 2).
  int nearest_n = 0;
  double deviation = 0.0;
  bool flagged = false;
};

/// Every d < 2 must equal 2cos(pi/n) for some 3 <= n <= 10^4 within 1e-6.
std::vector<QuantizationEntry> check_dimension_quantization(const DimensionVector& d);

/// Smallest fusion-closed, dual-closed set containing seed and the unit.
LabelSet fusion_subring_closure(const FusionRing& ring, const LabelSet& seed);

bool is_fusion_closed(const FusionRing& ring, const LabelSet& subset);

/// Invariant factors (largest first) when every label is invertible and the
/// fusion is a group law; nullopt otherwise. Empty for the trivial group.
std::optional<std::vector<int>> fusion_group_structure(const FusionRing& ring);
std::string group_structure_name(const std::vector<int>& factors);

}  // namespace mtk
