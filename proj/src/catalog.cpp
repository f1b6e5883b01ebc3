#include "mtk/catalog.hpp"

#include <numeric>

#include "mtk/doubles.hpp"
#include "mtk/error.hpp"
#include "mtk/structure.hpp"

namespace mtk {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

std::string entry_names() {
  std::string s;
  for (const auto& e : catalog_list()) s += (s.empty() ? "" : ", ") + e.name;
  return s + ", zn_anyons:<n>:<p>";
}

bool parse_zn(const std::string& name, int& n, int& p) {
  if (name.rfind("zn_anyons:", 0) != 0) return false;
  const auto rest = name.substr(10);
  const auto colon = rest.find(':');
  if (colon == std::string::npos) return false;
  try {
    std::size_t used = 0;
    n = std::stoi(rest.substr(0, colon), &used);
    if (used != colon) return false;
    const auto tail = rest.substr(colon + 1);
    p = std::stoi(tail, &used);
    return used == tail.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::string to_string(CatalogKind k) {
  switch (k) {
    case CatalogKind::modular: return "modular";
    case CatalogKind::symmetric: return "symmetric";
    case CatalogKind::premodular: return "premodular";
  }
  return "?";
}

std::vector<CatalogEntry> catalog_list() {
  using K = CatalogKind;
  return {
      {"trivial", K::modular, "Vec, rank 1"},
      {"semion", K::modular, "zn_anyons:2:1, labels 1, s"},
      {"ising", K::modular, "d = (1,1,sqrt2), w = (1,-1,zeta16), S' from the balancing identity"},
      {"fib", K::modular, "d_tau = golden ratio, w_tau = zeta5^2"},
      {"su2_1", K::modular, "SU(2) level 1"},
      {"su2_2", K::modular, "SU(2) level 2"},
      {"su2_3", K::modular, "SU(2) level 3"},
      {"su2_4", K::modular, "SU(2) level 4"},
      {"zn_anyons:3:2", K::modular, "Z/3 anyons, w_a = zeta3^(a^2)"},
      {"rep_z2", K::symmetric, "Rep(Z2)"},
      {"rep_s3", K::symmetric, "Rep(S3)"},
      {"toric", K::modular, "D(Z2), untwisted quantum double"},
      {"d_s3", K::modular, "D(S3), untwisted quantum double"},
      {"rep_z2_ising", K::premodular, "Rep(Z2) x Ising, center Rep(Z2)"},
  };
}

CatalogKind catalog_kind(const std::string& name) {
  int n = 0;
  int p = 0;
  if (parse_zn(name, n, p)) return CatalogKind::modular;
  for (const auto& e : catalog_list())
    if (e.name == name) return e.kind;
  throw UsageError("unknown catalog entry '" + name + "'; available: " + entry_names());
}

PreModularData su2_level(int k) {
  if (k < 1) throw UsageError("su2 level must be positive");
  const int m = k + 2;
  std::vector<std::string> names;
  std::vector<Label> dual;
  std::vector<RootOfUnity> twist;
  for (int a = 0; a <= k; ++a) {
    names.push_back(std::to_string(a));
    dual.push_back(a);
    twist.emplace_back(static_cast<std::int64_t>(a) * (a + 2), 4 * m);
  }
  FusionRing ring(names, dual);
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b)
      for (int c = std::abs(a - b); c <= std::min(a + b, 2 * k - a - b); c += 2) ring.set(a, b, c, 1);
  // sin(pi x/m) / sin(pi/m) = (z^x - z^-x)/(z - z^-1) with z = zeta_{2m}.
  const auto sine = [m](int x) { return CycloNum::zeta(2 * m, x) - CycloNum::zeta(2 * m, -x); };
  const CycloNum denom_inv = sine(1).inverse();
  CycloMatrix sprime(u(k + 1), u(k + 1));
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b) sprime(u(a), u(b)) = sine((a + 1) * (b + 1)) * denom_inv;
  return make_premodular(std::move(ring), std::move(twist), std::move(sprime));
}

PreModularData zn_anyons(int n, int p) {
  if (n < 1) throw UsageError("zn_anyons: n must be positive");
  if ((static_cast<long>(p) * n) % 2 != 0 || std::gcd(p, n) != 1)
    throw UsageError("zn_anyons: need p*n even and gcd(p, n) = 1");
  std::vector<std::string> names;
  std::vector<Label> dual;
  std::vector<RootOfUnity> twist;
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    dual.push_back((n - a) % n);
    twist.emplace_back(static_cast<std::int64_t>(p) * a * a, 2 * n);
  }
  FusionRing ring(names, dual);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) ring.set(a, b, (a + b) % n, 1);
  const std::vector<CycloNum> dims(u(n), CycloNum(1));
  CycloMatrix sprime = balanced_sprime(ring, twist, dims);
  return make_premodular(std::move(ring), std::move(twist), std::move(sprime));
}

PreModularData ising() {
  FusionRing ring({"1", "psi", "sigma"}, {0, 1, 2});
  for (int j = 0; j < 3; ++j) {
    ring.set(0, j, j, 1);
    ring.set(j, 0, j, 1);
  }
  ring.set(1, 1, 0, 1);
  ring.set(1, 2, 2, 1);
  ring.set(2, 1, 2, 1);
  ring.set(2, 2, 0, 1);
  ring.set(2, 2, 1, 1);
  const std::vector<RootOfUnity> twist = {RootOfUnity(0, 1), RootOfUnity(1, 2), RootOfUnity(1, 16)};
  const std::vector<CycloNum> dims = {CycloNum(1), CycloNum(1), sqrt_rational(2)};
  CycloMatrix sprime = balanced_sprime(ring, twist, dims);
  return make_premodular(std::move(ring), twist, std::move(sprime));
}

PreModularData fibonacci() {
  FusionRing ring({"1", "tau"}, {0, 1});
  ring.set(0, 0, 0, 1);
  ring.set(0, 1, 1, 1);
  ring.set(1, 0, 1, 1);
  ring.set(1, 1, 0, 1);
  ring.set(1, 1, 1, 1);
  const std::vector<RootOfUnity> twist = {RootOfUnity(0, 1), RootOfUnity(2, 5)};
  const CycloNum phi = CycloNum(1) + CycloNum::zeta(5, 1) + CycloNum::zeta(5, 4);
  CycloMatrix sprime = balanced_sprime(ring, twist, {CycloNum(1), phi});
  return make_premodular(std::move(ring), twist, std::move(sprime));
}

PreModularData catalog_get(const std::string& name) {
  int n = 0;
  int p = 0;
  if (parse_zn(name, n, p)) return zn_anyons(n, p);
  if (name == "trivial") return zn_anyons(1, 0);
  if (name == "semion") {
    PreModularData d = zn_anyons(2, 1);
    FusionRing ring({"1", "s"}, d.ring.duals());
    for (const auto& [i, j, k, v] : d.ring.nonzero()) ring.set(i, j, k, v);
    d.ring = ring;
    return d;
  }
  if (name == "ising") return ising();
  if (name == "fib") return fibonacci();
  if (name.rfind("su2_", 0) == 0 && name.size() == 5 && name[4] >= '1' && name[4] <= '4') return su2_level(name[4] - '0');
  if (name == "rep_z2") return rep_category(cyclic_group(2));
  if (name == "rep_s3") return rep_category(symmetric_group_3());
  if (name == "toric") return untwisted_double(cyclic_group(2));
  if (name == "d_s3") return untwisted_double(symmetric_group_3());
  if (name == "rep_z2_ising") return deligne_product(rep_category(cyclic_group(2)), ising());
  throw UsageError("unknown catalog entry '" + name + "'; available: " + entry_names());
}

}  // namespace mtk
