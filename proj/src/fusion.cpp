#include "mtk/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "mtk/error.hpp"

namespace mtk {

LabelSet make_label_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<Label> dual)
    : labels_(std::move(labels)), dual_(std::move(dual)) {
  if (labels_.size() != dual_.size()) throw InvariantError("fusion ring: labels and dual differ in length");
  const auto r = labels_.size();
  n_.assign(r * r * r, 0);
}

std::vector<std::array<int, 4>> FusionRing::nonzero() const {
  std::vector<std::array<int, 4>> out;
  const int r = rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (int v = N(i, j, k); v != 0) out.push_back({i, j, k, v});
  return out;
}

std::vector<Label> FusionRing::products(Label i, Label j) const {
  std::vector<Label> out;
  for (int k = 0; k < rank(); ++k)
    if (N(i, j, k) != 0) out.push_back(k);
  return out;
}

std::optional<Label> FusionRing::find_label(std::string_view name) const {
  for (int i = 0; i < rank(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

FusionRing FusionRing::restrict_to(const LabelSet& subset) const {
  std::vector<int> pos(static_cast<std::size_t>(rank()), -1);
  for (std::size_t a = 0; a < subset.size(); ++a) pos[static_cast<std::size_t>(subset[a])] = static_cast<int>(a);
  std::vector<std::string> names;
  std::vector<Label> dual;
  for (Label i : subset) {
    names.push_back(label(i));
    const int d = pos[static_cast<std::size_t>(this->dual(i))];
    if (d < 0) throw InvariantError("restrict_to: subset is not closed under duals");
    dual.push_back(d);
  }
  FusionRing sub(std::move(names), std::move(dual));
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = 0; b < subset.size(); ++b) {
      for (Label k : products(subset[a], subset[b])) {
        const int c = pos[static_cast<std::size_t>(k)];
        if (c < 0) throw InvariantError("restrict_to: subset is not fusion-closed");
        sub.set(static_cast<int>(a), static_cast<int>(b), c, N(subset[a], subset[b], k));
      }
    }
  }
  return sub;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << invariant;
  if (!witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ")";
  }
  return os.str();
}

std::vector<Violation> validate_fusion_ring(const FusionRing& ring) {
  std::vector<Violation> out;
  const int r = ring.rank();
  if (r == 0) {
    out.push_back({"rank must be positive", {}});
    return out;
  }
  for (int i = 0; i < r; ++i) {
    const int d = ring.dual(i);
    if (d < 0 || d >= r) {
      out.push_back({"dual index out of range", {i}});
      return out;
    }
  }
  if (ring.dual(0) != 0) out.push_back({"dual(0) must be 0", {0}});
  for (int i = 0; i < r; ++i)
    if (ring.dual(ring.dual(i)) != i) out.push_back({"dual is not an involution", {i}});

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (ring.N(i, j, k) < 0) out.push_back({"negative fusion coefficient", {i, j, k}});

  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) {
      const int delta = j == k ? 1 : 0;
      if (ring.N(0, j, k) != delta) out.push_back({"unit law N_0j^k = delta_jk", {0, j, k}});
      if (ring.N(j, 0, k) != delta) out.push_back({"unit law N_i0^k = delta_ik", {j, 0, k}});
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (ring.N(i, j, 0) != (j == ring.dual(i) ? 1 : 0)) out.push_back({"conjugates N_ij^0 = delta_j,dual(i)", {i, j}});

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (ring.N(i, j, k) != ring.N(ring.dual(j), ring.dual(i), ring.dual(k)))
          out.push_back({"contragredient symmetry", {i, j, k}});

  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) {
          long lhs = 0;
          long rhs = 0;
          for (int m = 0; m < r; ++m) {
            lhs += static_cast<long>(ring.N(i, j, m)) * ring.N(m, k, l);
            rhs += static_cast<long>(ring.N(j, k, m)) * ring.N(i, m, l);
          }
          if (lhs != rhs) out.push_back({"associativity", {i, j, k, l}});
        }
      }
    }
  }
  return out;
}

DimensionVector perron_frobenius_dims(const FusionRing& ring) {
  const int r = ring.rank();
  std::vector<std::vector<double>> m(static_cast<std::size_t>(r), std::vector<double>(static_cast<std::size_t>(r), 0.0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] += ring.N(i, j, k);

  std::vector<double> v(static_cast<std::size_t>(r), 1.0);
  bool converged = false;
  for (int it = 0; it < 100000 && !converged; ++it) {
    std::vector<double> w(static_cast<std::size_t>(r), 0.0);
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = 0; b < v.size(); ++b) w[a] += m[a][b] * v[b];
    const double scale = w[0];
    if (!(scale > 0)) throw VerificationError("Perron-Frobenius iteration degenerated");
    double change = 0.0;
    for (std::size_t a = 0; a < w.size(); ++a) {
      w[a] /= scale;
      change = std::max(change, std::abs(w[a] - v[a]) / std::max(1.0, std::abs(w[a])));
    }
    v = std::move(w);
    converged = change < 1e-12 && it > 0;
  }
  if (!converged) throw VerificationError("Perron-Frobenius iteration did not converge after 1e5 iterations");

  DimensionVector d;
  d.dims = v;
  for (int i = 0; i < r; ++i) {
    const int j = ring.dual(i);
    if (j > i) {
      const double avg = 0.5 * (d.dims[static_cast<std::size_t>(i)] + d.dims[static_cast<std::size_t>(j)]);
      d.dims[static_cast<std::size_t>(i)] = avg;
      d.dims[static_cast<std::size_t>(j)] = avg;
    }
  }
  d.dims[0] = 1.0;
  d.exact.assign(static_cast<std::size_t>(r), false);

  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      double rhs = 0.0;
      for (int k = 0; k < r; ++k) rhs += ring.N(i, j, k) * d.dims[static_cast<std::size_t>(k)];
      if (std::abs(d.dims[static_cast<std::size_t>(i)] * d.dims[static_cast<std::size_t>(j)] - rhs) > 1e-8)
        throw VerificationError("Perron-Frobenius dimensions are not multiplicative at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }
  }
  return d;
}

double global_dimension(const DimensionVector& d) {
  double s = 0.0;
  for (double x : d.dims) s += x * x;
  return s;
}

std::vector<QuantizationEntry> check_dimension_quantization(const DimensionVector& d) {
  std::vector<QuantizationEntry> out;
  constexpr int kMaxN = 10000;
  for (std::size_t i = 0; i < d.dims.size(); ++i) {
    QuantizationEntry e;
    e.label = static_cast<Label>(i);
    e.dim = d.dims[i];
    if (e.dim >= 2.0 - 1e-9) {
      out.push_back(e);
      continue;
    }
    double best = 1e300;
    int best_n = 3;
    const double guess = (e.dim > -2.0) ? std::numbers::pi / std::acos(std::clamp(e.dim / 2.0, -1.0, 1.0)) : 3.0;
    const int center = static_cast<int>(std::clamp(guess, 3.0, static_cast<double>(kMaxN)));
    for (int n = std::max(3, center - 2); n <= std::min(kMaxN, center + 2); ++n) {
      const double dev = std::abs(2.0 * std::cos(std::numbers::pi / n) - e.dim);
      if (dev < best) {
        best = dev;
        best_n = n;
      }
    }
    e.nearest_n = best_n;
    e.deviation = best;
    e.flagged = best > 1e-6;
    out.push_back(e);
  }
  return out;
}

LabelSet fusion_subring_closure(const FusionRing& ring, const LabelSet& seed) {
  std::set<Label> s(seed.begin(), seed.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Label> cur(s.begin(), s.end());
    for (Label i : cur) grew |= s.insert(ring.dual(i)).second;
    for (Label i : cur)
      for (Label j : cur)
        for (Label k : ring.products(i, j)) grew |= s.insert(k).second;
  }
  return {s.begin(), s.end()};
}

bool is_fusion_closed(const FusionRing& ring, const LabelSet& subset) {
  return fusion_subring_closure(ring, subset) == make_label_set(subset);
}

std::optional<std::vector<int>> fusion_group_structure(const FusionRing& ring) {
  const int r = ring.rank();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      auto p = ring.products(i, j);
      if (p.size() != 1 || ring.N(i, j, p[0]) != 1) return std::nullopt;
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p[0];
    }
  }
  auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  std::set<int> h{0};
  std::vector<int> factors;
  while (static_cast<int>(h.size()) < r) {
    int best_g = -1;
    int best_order = 0;
    for (int g = 0; g < r; ++g) {
      int x = g;
      int k = 1;
      while (!h.count(x)) {
        x = mul(x, g);
        ++k;
      }
      if (k > best_order) {
        best_order = k;
        best_g = g;
      }
    }
    factors.push_back(best_order);
    std::set<int> next = h;
    int x = best_g;
    for (int k = 1; k < best_order; ++k) {
      for (int y : h) next.insert(mul(x, y));
      x = mul(x, best_g);
    }
    h = std::move(next);
  }
  return factors;
}

std::string group_structure_name(const std::vector<int>& factors) {
  if (factors.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "xZ" : "Z") + std::to_string(factors[i]);
  return s;
}

}  // namespace mtk
