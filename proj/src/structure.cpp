#include "mtk/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

#include "mtk/error.hpp"

namespace mtk {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

std::string set_string(const LabelSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

struct Split {
  LabelSet k;
  LabelSet l;
  /// For every input label, its (index in k, index in l).
  std::vector<std::pair<int, int>> pairs;
};

Split verified_split(const PreModularData& d, const LabelSet& k, const LabelSet& l) {
  const int r = d.rank();
  if (k.size() * l.size() != u(r))
    throw VerificationError("factorization: |K| * |K'| = " + std::to_string(k.size() * l.size()) + " differs from rank " +
                            std::to_string(r));
  Split s{k, l, std::vector<std::pair<int, int>>(u(r), {-1, -1})};
  for (std::size_t a = 0; a < k.size(); ++a) {
    for (std::size_t x = 0; x < l.size(); ++x) {
      const auto prods = d.ring.products(k[a], l[x]);
      if (prods.size() != 1 || d.ring.N(k[a], l[x], prods[0]) != 1)
        throw VerificationError("factorization: " + d.ring.label(k[a]) + " x " + d.ring.label(l[x]) + " is not simple");
      auto& slot = s.pairs[u(prods[0])];
      if (slot.first >= 0) throw VerificationError("factorization: label " + d.ring.label(prods[0]) + " paired twice");
      slot = {static_cast<int>(a), static_cast<int>(x)};
    }
  }
  const auto a_of = [&](int t) { return k[u(s.pairs[u(t)].first)]; };
  const auto x_of = [&](int t) { return l[u(s.pairs[u(t)].second)]; };
  for (int t = 0; t < r; ++t) {
    if (!(d.dim(t) == d.dim(a_of(t)) * d.dim(x_of(t))))
      throw VerificationError("factorization: dimension not multiplicative at " + d.ring.label(t));
    if (!(d.twist[u(t)] == d.twist[u(a_of(t))] * d.twist[u(x_of(t))]))
      throw VerificationError("factorization: twist not multiplicative at " + d.ring.label(t));
  }
  for (int t = 0; t < r; ++t) {
    for (int v = 0; v < r; ++v) {
      if (!(d.sprime(u(t), u(v)) == d.sprime(u(a_of(t)), u(a_of(v))) * d.sprime(u(x_of(t)), u(x_of(v)))))
        throw VerificationError("factorization: S' not multiplicative at (" + d.ring.label(t) + "," + d.ring.label(v) + ")");
      for (int w = 0; w < r; ++w)
        if (d.ring.N(t, v, w) != d.ring.N(a_of(t), a_of(v), a_of(w)) * d.ring.N(x_of(t), x_of(v), x_of(w)))
          throw VerificationError("factorization: fusion not multiplicative at (" + d.ring.label(t) + "," +
                                  d.ring.label(v) + "," + d.ring.label(w) + ")");
    }
  }
  return s;
}

}  // namespace

int max_enumeration_rank() {
  if (const char* env = std::getenv("MTK_MAX_RANK")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 16;
}

bool CommutantReport::all_ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CommutantEntry& e) { return e.double_commutant_ok && e.dimension_ok; });
}

PreModularData deligne_product(const PreModularData& d1, const PreModularData& d2) {
  const int r1 = d1.rank();
  const int r2 = d2.rank();
  const auto idx = [r2](int a, int b) { return a * r2 + b; };
  std::vector<std::string> names;
  std::vector<Label> dual;
  std::vector<RootOfUnity> twist;
  for (int a = 0; a < r1; ++a) {
    for (int b = 0; b < r2; ++b) {
      names.push_back("(" + d1.ring.label(a) + "," + d2.ring.label(b) + ")");
      dual.push_back(idx(d1.ring.dual(a), d2.ring.dual(b)));
      twist.push_back(d1.twist[u(a)] * d2.twist[u(b)]);
    }
  }
  FusionRing ring(names, dual);
  for (const auto& [a, c, e, n1] : d1.ring.nonzero())
    for (const auto& [b, dd, f, n2] : d2.ring.nonzero()) ring.set(idx(a, b), idx(c, dd), idx(e, f), n1 * n2);
  const std::size_t r = u(r1 * r2);
  const std::int64_t order = lcm_order(d1.cyclotomic_order, d2.cyclotomic_order);
  const CycloMatrix s1 = d1.sprime.embedded(order);
  const CycloMatrix s2 = d2.sprime.embedded(order);
  CycloMatrix sprime(r, r);
  for (int a = 0; a < r1; ++a)
    for (int b = 0; b < r2; ++b)
      for (int c = 0; c < r1; ++c)
        for (int e = 0; e < r2; ++e) sprime(u(idx(a, b)), u(idx(c, e))) = s1(u(a), u(c)) * s2(u(b), u(e));
  PreModularData d = make_premodular(std::move(ring), std::move(twist), std::move(sprime));
  const bool both = is_modular(d1).modular && is_modular(d2).modular;
  if (is_modular(d).modular != both)
    throw VerificationError("Deligne product: modularity is not the conjunction of the factors' modularity");
  return d;
}

std::vector<LabelSet> enumerate_fusion_subcategories(const PreModularData& d) {
  const int r = d.rank();
  if (r > max_enumeration_rank())
    throw UsageError("rank " + std::to_string(r) + " exceeds the enumeration bound " +
                     std::to_string(max_enumeration_rank()) + "; raise MTK_MAX_RANK or pass explicit seeds");
  std::set<LabelSet> found{fusion_subring_closure(d.ring, {})};
  std::vector<LabelSet> queue(found.begin(), found.end());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const LabelSet cur = queue[q];
    for (int i = 0; i < r; ++i) {
      if (std::binary_search(cur.begin(), cur.end(), i)) continue;
      LabelSet seed = cur;
      seed.push_back(i);
      LabelSet next = fusion_subring_closure(d.ring, seed);
      if (found.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<LabelSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const LabelSet& a, const LabelSet& b) { return a.size() < b.size(); });
  return out;
}

CommutantReport double_commutant_report(const PreModularData& d) {
  if (!is_modular(d).modular) throw UsageError("double commutant theorem requires modular data");
  CommutantReport rep;
  rep.dim = gauss_sums(d).dim;
  for (const LabelSet& k : enumerate_fusion_subcategories(d)) {
    CommutantEntry e;
    e.sub = k;
    e.commutant = relative_commutant(d, k);
    e.double_commutant = relative_commutant(d, e.commutant);
    e.dim_sub = subset_dimension(d, k);
    e.dim_commutant = subset_dimension(d, e.commutant);
    e.double_commutant_ok = e.double_commutant == k;
    e.dimension_ok = e.dim_sub * e.dim_commutant == rep.dim;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

FactorizationReport factorize(const PreModularData& d) {
  if (!is_modular(d).modular) throw UsageError("factorization requires modular data");
  FactorizationReport rep;
  rep.verified = true;
  if (d.rank() == 1) {
    rep.pairing.assign(1, {});
    return rep;
  }
  std::optional<LabelSet> chosen;
  for (const LabelSet& k : enumerate_fusion_subcategories(d)) {
    if (k.size() == 1 || static_cast<int>(k.size()) == d.rank()) continue;
    if (is_modular(restrict_premodular(d, k)).modular) {
      chosen = k;
      break;
    }
  }
  if (!chosen) {
    rep.factors.push_back(d);
    for (int t = 0; t < d.rank(); ++t) rep.pairing.push_back({t});
    return rep;
  }
  const LabelSet l = relative_commutant(d, *chosen);
  const PreModularData dk = restrict_premodular(d, *chosen);
  const PreModularData dl = restrict_premodular(d, l);
  if (!is_modular(dl).modular)
    throw VerificationError("factorization: commutant " + set_string(l) + " of a modular subcategory is not modular");
  const Split split = verified_split(d, *chosen, l);
  const FactorizationReport fk = factorize(dk);
  const FactorizationReport fl = factorize(dl);
  rep.factors = fk.factors;
  rep.factors.insert(rep.factors.end(), fl.factors.begin(), fl.factors.end());
  for (int t = 0; t < d.rank(); ++t) {
    std::vector<Label> tuple = fk.pairing[u(split.pairs[u(t)].first)];
    const auto& tail = fl.pairing[u(split.pairs[u(t)].second)];
    tuple.insert(tuple.end(), tail.begin(), tail.end());
    rep.pairing.push_back(std::move(tuple));
  }
  rep.verified = fk.verified && fl.verified;
  return rep;
}

std::optional<std::vector<Label>> find_relabeling(const PreModularData& a, const PreModularData& b, bool match_sprime) {
  const int r = a.rank();
  if (b.rank() != r) return std::nullopt;
  std::vector<std::vector<Label>> candidates(u(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (a.twist[u(i)] == b.twist[u(j)] && a.dim(i) == b.dim(j)) candidates[u(i)].push_back(j);
  std::vector<Label> p(u(r), -1);
  std::vector<bool> used(u(r), false);

  const auto consistent = [&](int upto) {
    for (int i = 0; i <= upto; ++i) {
      const int di = a.ring.dual(i);
      if (di <= upto && p[u(di)] != b.ring.dual(p[u(i)])) return false;
      for (int j = 0; j <= upto; ++j) {
        if (match_sprime && !(a.sprime(u(i), u(j)) == b.sprime(u(p[u(i)]), u(p[u(j)])))) return false;
        for (int k = 0; k <= upto; ++k)
          if ((i == upto || j == upto || k == upto) && a.ring.N(i, j, k) != b.ring.N(p[u(i)], p[u(j)], p[u(k)]))
            return false;
      }
    }
    return true;
  };
  std::function<bool(int)> assign = [&](int i) {
    if (i == r) return true;
    for (Label j : candidates[u(i)]) {
      if (used[u(j)] || (i == 0 && j != 0)) continue;
      p[u(i)] = j;
      used[u(j)] = true;
      if (consistent(i) && assign(i + 1)) return true;
      used[u(j)] = false;
      p[u(i)] = -1;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return p;
}

}  // namespace mtk
