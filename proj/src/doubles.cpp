#include "mtk/doubles.hpp"

#include <numeric>

#include "mtk/error.hpp"

namespace mtk {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

std::string irrep_name(const CharacterTable& t, std::size_t r) {
  return r < t.names.size() ? t.names[r] : std::to_string(r);
}

void require_double_dim(const PreModularData& d, long expected, const std::string& what) {
  const ModularityCertificate cert = is_modular(d);
  if (!cert.modular) throw VerificationError(what + " is not modular");
  if (!(cert.dim == CycloNum(expected)))
    throw VerificationError(what + ": dim = " + cert.dim.to_string() + ", expected " + std::to_string(expected));
}

}  // namespace

PreModularData rep_category(const GroupData& g) {
  const auto& table = g.char_tables.at(0);
  const int r = static_cast<int>(table.values.size());
  const int n = g.order();
  const CycloNum inv_order(Rational(1, n));
  std::vector<std::string> names;
  std::vector<Label> dual(u(r), -1);
  for (int i = 0; i < r; ++i) {
    names.push_back(irrep_name(table, u(i)));
    for (int j = 0; j < r; ++j) {
      bool conj = true;
      for (int x = 0; x < n && conj; ++x) conj = table.values[u(j)][u(x)] == table.values[u(i)][u(x)].conj();
      if (conj) dual[u(i)] = j;
    }
    if (dual[u(i)] < 0) throw InvariantError("group " + g.name + ": conjugate of irrep " + names.back() + " missing");
  }
  FusionRing ring(names, dual);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        CycloNum ip(0);
        for (int x = 0; x < n; ++x)
          ip += table.values[u(i)][u(x)] * table.values[u(j)][u(x)] * table.values[u(k)][u(x)].conj();
        const auto q = (ip * inv_order).as_rational();
        if (!q || q->get_den() != 1 || *q < 0)
          throw InvariantError("group " + g.name + ": character product multiplicity is not a nonnegative integer");
        ring.set(i, j, k, static_cast<int>(q->get_num().get_si()));
      }
    }
  }
  std::vector<CycloNum> dims;
  for (int i = 0; i < r; ++i) dims.push_back(table.values[u(i)][0]);
  CycloMatrix sprime(u(r), u(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) sprime(u(i), u(j)) = dims[u(i)] * dims[u(j)];
  return make_premodular(std::move(ring), std::vector<RootOfUnity>(u(r), RootOfUnity(0, 1)), std::move(sprime));
}

PreModularData untwisted_double(const GroupData& g) {
  const int n = g.order();
  struct Simple {
    std::size_t cls;
    std::size_t irrep;
  };
  std::vector<Simple> simples;
  std::vector<std::string> names;
  std::vector<RootOfUnity> twist;
  std::vector<std::vector<int>> pos(g.classes.size(), std::vector<int>(u(n), -1));
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    const auto& cent = g.centralizers[c];
    for (std::size_t i = 0; i < cent.size(); ++i) pos[c][u(cent[i])] = static_cast<int>(i);
    const auto& table = g.char_tables[c];
    const int a = g.classes[c].front();
    for (std::size_t r = 0; r < table.values.size(); ++r) {
      simples.push_back({c, r});
      names.push_back(pair_label(g.class_name(c), irrep_name(table, r)));
      const CycloNum w = table.values[r][u(pos[c][u(a)])] / table.values[r][0];
      const auto root = w.as_root_of_unity();
      if (!root) throw InvariantError("double of " + g.name + ": twist of " + names.back() + " is not a root of unity");
      twist.push_back(*root);
    }
  }

  const std::size_t rank = simples.size();
  CycloMatrix sprime(rank, rank);
  for (std::size_t s = 0; s < rank; ++s) {
    for (std::size_t t = s; t < rank; ++t) {
      const auto [ca, rho] = simples[s];
      const auto [cb, sigma] = simples[t];
      const int a = g.classes[ca].front();
      const int b = g.classes[cb].front();
      CycloNum sum(0);
      for (int h = 0; h < n; ++h) {
        const int x = g.conjugate(h, b);
        if (g.mult[a][x] != g.mult[x][a]) continue;
        const int y = g.conjugate(g.inverse[h], a);
        sum += g.char_tables[ca].values[rho][u(pos[ca][u(x)])] * g.char_tables[cb].values[sigma][u(pos[cb][u(y)])];
      }
      const Rational scale(n, static_cast<long>(g.centralizers[ca].size() * g.centralizers[cb].size()));
      sprime(s, t) = CycloNum(scale) * sum.conj();
      sprime(t, s) = sprime(s, t);
    }
  }
  const long dim = static_cast<long>(n) * n;
  FusionRing ring = verlinde_from_sprime(sprime, CycloNum(dim), names);
  PreModularData d = make_premodular(std::move(ring), std::move(twist), std::move(sprime));
  require_double_dim(d, dim, "double of " + g.name);
  return d;
}

PreModularData twisted_cyclic_double(const CocycleData& c) {
  const int n = c.n;
  if (n < 1) throw UsageError("twisted double: modulus must be positive");
  if (c.p < 0 || c.p >= n) throw UsageError("twisted double: cocycle parameter must satisfy 0 <= p < n");
  const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  const std::size_t rank = u(n * n);
  std::vector<std::string> names;
  std::vector<RootOfUnity> twist;
  for (int a = 0; a < n; ++a) {
    for (int j = 0; j < n; ++j) {
      names.push_back(pair_label(std::to_string(a), std::to_string(j)));
      twist.emplace_back(static_cast<std::int64_t>(a) * j * n + static_cast<std::int64_t>(c.p) * a * a, n2);
    }
  }
  CycloMatrix sprime(rank, rank);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k) {
          const std::int64_t e = (static_cast<std::int64_t>(a) * k + static_cast<std::int64_t>(b) * j) * n +
                                 2 * static_cast<std::int64_t>(c.p) * a * b;
          sprime(u(a * n + j), u(b * n + k)) = RootOfUnity(-e, n2).to_cyclo();
        }
  FusionRing ring = verlinde_from_sprime(sprime, CycloNum(static_cast<long>(n2)), names);

  // The fusion must be a group law extending Z/n (a-coordinate) by Z/n (j-coordinate).
  if (!fusion_group_structure(ring)) throw VerificationError("twisted double: fusion is not a group law");
  for (int s = 0; s < static_cast<int>(rank); ++s)
    for (int t = 0; t < static_cast<int>(rank); ++t) {
      const int prod = ring.products(s, t).front();
      if (prod / n != (s / n + t / n) % n) throw VerificationError("twisted double: fusion does not project onto Z/n");
    }
  int x = 0;
  for (int k = 1; k <= n; ++k) {
    x = ring.products(x, std::min(1, static_cast<int>(rank) - 1)).front();
    if (x / n != 0 || (x == 0) != (k == n)) throw VerificationError("twisted double: kernel is not cyclic of order n");
  }

  PreModularData d = make_premodular(std::move(ring), std::move(twist), std::move(sprime));
  require_double_dim(d, static_cast<long>(n2), "twisted double D^" + std::to_string(c.p) + "(Z" + std::to_string(n) + ")");
  return d;
}

MinimalExtensionReport minimal_extension_check(const PreModularData& m, const LabelSet& c) {
  if (!is_modular(m).modular) throw UsageError("minimal extension check: ambient datum must be modular");
  if (c.empty() || c.front() != 0 || !is_fusion_closed(m.ring, c))
    throw UsageError("minimal extension check: label set must be fusion-closed and contain the unit");
  MinimalExtensionReport r;
  r.dim_m = gauss_sums(m).dim;
  r.dim_c = subset_dimension(m, c);
  const PreModularData sub = restrict_premodular(m, c);
  for (Label i : transparent_objects(sub)) r.center.push_back(c[u(i)]);
  r.dim_center = subset_dimension(m, r.center);
  const CycloNum slack = r.dim_m - r.dim_c * r.dim_center;
  r.minimal = slack.is_zero();
  r.bound_holds = r.minimal || slack.to_complex().real() > 0;
  return r;
}

LabelSet rep_image_in_double(const GroupData& g) {
  LabelSet out(g.char_tables.at(0).values.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace mtk
