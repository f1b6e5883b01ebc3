#include "mtk/premodular.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "mtk/error.hpp"

namespace mtk {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

bool is_diagonal(const CycloMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

CycloMatrix charge_conjugation(const FusionRing& ring) {
  CycloMatrix c(u(ring.rank()), u(ring.rank()));
  for (int i = 0; i < ring.rank(); ++i) c(u(i), u(ring.dual(i))) = CycloNum(1);
  return c;
}

}  // namespace

std::vector<CycloNum> PreModularData::dims() const {
  std::vector<CycloNum> out;
  for (int i = 0; i < rank(); ++i) out.push_back(dim(i));
  return out;
}

bool operator==(const PreModularData& a, const PreModularData& b) {
  return a.ring == b.ring && a.twist == b.twist && a.sprime == b.sprime && a.cyclotomic_order == b.cyclotomic_order;
}

std::vector<Violation> validate_premodular(const PreModularData& d) {
  std::vector<Violation> out = validate_fusion_ring(d.ring);
  if (!out.empty()) return out;
  const int r = d.rank();
  if (static_cast<int>(d.twist.size()) != r) return {{"twist vector length differs from rank", {}}};
  if (static_cast<int>(d.sprime.rows()) != r || static_cast<int>(d.sprime.cols()) != r)
    return {{"sprime shape differs from rank", {}}};

  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!(d.sprime(u(i), u(j)) == d.sprime(u(j), u(i)))) out.push_back({"sprime symmetric", {i, j}});

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!(d.sprime(u(d.ring.dual(i)), u(j)) == d.sprime(u(i), u(j)).conj()))
        out.push_back({"sprime conjugation S'_{dual(i) j} = conj(S'_ij)", {i, j}});

  if (!d.twist[0].is_one()) out.push_back({"twist[0] = 1", {0}});
  for (int i = 0; i < r; ++i)
    if (!(d.twist[u(i)] == d.twist[u(d.ring.dual(i))])) out.push_back({"twist[dual(i)] = twist[i]", {i}});

  bool dims_ok = true;
  for (int i = 0; i < r; ++i) {
    const CycloNum& di = d.dim(i);
    const auto z = di.to_complex();
    if (!di.is_real() || !(z.real() > 0)) {
      out.push_back({"S'_{0i} real positive", {0, i}});
      dims_ok = false;
    }
  }
  if (!out.empty()) return out;
  if (!(d.dim(0) == CycloNum(1))) return {{"S'_{00} = 1", {0, 0}}};

  if (dims_ok) {
    const DimensionVector pf = perron_frobenius_dims(d.ring);
    for (int i = 0; i < r; ++i)
      if (std::abs(pf.dims[u(i)] - d.dim(i).to_complex().real()) > 1e-8)
        out.push_back({"S'_{0i} equals the Perron-Frobenius dimension", {i}});
  }

  std::vector<CycloNum> w;
  std::vector<CycloNum> w_inv;
  for (const auto& t : d.twist) {
    w.push_back(t.to_cyclo());
    w_inv.push_back(t.inverse().to_cyclo());
  }
  std::vector<CycloNum> wd;
  for (int k = 0; k < r; ++k) wd.push_back(w[u(k)] * d.dim(k));
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      CycloNum sum(0);
      for (int k : d.ring.products(d.ring.dual(i), j)) sum += CycloNum(d.ring.N(d.ring.dual(i), j, k)) * wd[u(k)];
      if (!(w_inv[u(i)] * w_inv[u(j)] * sum == d.sprime(u(i), u(j))))
        out.push_back({"balancing identity", {i, j}});
    }
  }
  return out;
}

void require_valid(const PreModularData& d) {
  const auto v = validate_premodular(d);
  if (!v.empty()) throw InvariantError("invariant violated: " + v.front().describe());
}

PreModularData make_premodular(FusionRing ring, std::vector<RootOfUnity> twist, CycloMatrix sprime) {
  std::int64_t n = sprime.common_order();
  for (const auto& t : twist) n = lcm_order(n, t.den());
  PreModularData d{std::move(ring), std::move(twist), sprime.embedded(n), n};
  require_valid(d);
  return d;
}

CycloMatrix balanced_sprime(const FusionRing& ring, const std::vector<RootOfUnity>& twist,
                            const std::vector<CycloNum>& dims) {
  const std::size_t r = u(ring.rank());
  CycloMatrix s(r, r);
  for (int i = 0; i < ring.rank(); ++i) {
    for (int j = 0; j < ring.rank(); ++j) {
      CycloNum sum(0);
      for (int k : ring.products(ring.dual(i), j))
        sum += CycloNum(ring.N(ring.dual(i), j, k)) * twist[u(k)].to_cyclo() * dims[u(k)];
      s(u(i), u(j)) = (twist[u(i)] * twist[u(j)]).inverse().to_cyclo() * sum;
    }
  }
  return s;
}

PreModularData restrict_premodular(const PreModularData& d, const LabelSet& subset) {
  PreModularData r;
  r.ring = d.ring.restrict_to(subset);
  r.cyclotomic_order = d.cyclotomic_order;
  r.sprime = CycloMatrix(subset.size(), subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) {
    r.twist.push_back(d.twist[u(subset[a])]);
    for (std::size_t b = 0; b < subset.size(); ++b) r.sprime(a, b) = d.sprime(u(subset[a]), u(subset[b]));
  }
  return r;
}

GaussSums gauss_sums(const PreModularData& d) {
  CycloNum delta(0);
  CycloNum dim(0);
  for (int i = 0; i < d.rank(); ++i) {
    const CycloNum d2 = d.dim(i) * d.dim(i);
    dim += d2;
    delta += d2 * d.twist[u(i)].inverse().to_cyclo();
  }
  return {delta, dim};
}

CycloNum subset_dimension(const PreModularData& d, const LabelSet& subset) {
  CycloNum dim(0);
  for (Label i : subset) dim += d.dim(i) * d.dim(i);
  return dim;
}

LabelSet transparent_objects(const PreModularData& d) {
  LabelSet all;
  for (int i = 0; i < d.rank(); ++i) all.push_back(i);
  return relative_commutant(d, all);
}

LabelSet relative_commutant(const PreModularData& d, const LabelSet& k) {
  const LabelSet ks = make_label_set(k);
  if (ks.empty() || ks.front() != 0 || !is_fusion_closed(d.ring, ks))
    throw UsageError("relative_commutant: the subcategory must be fusion-closed and contain the unit");
  LabelSet out;
  for (int i = 0; i < d.rank(); ++i) {
    bool commutes = true;
    for (Label j : ks) {
      if (!(d.sprime(u(i), u(j)) == d.dim(i) * d.dim(j))) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(i);
  }
  if (!is_fusion_closed(d.ring, out))
    throw VerificationError("relative commutant is not fusion-closed; the datum is inconsistent");
  return out;
}

ModularityCertificate is_modular(const PreModularData& d) {
  ModularityCertificate c;
  c.sprime_determinant = determinant(d.sprime);
  c.sprime_invertible = !c.sprime_determinant.is_zero();
  c.center = transparent_objects(d);
  c.trivial_center = c.center == LabelSet{0};
  const GaussSums g = gauss_sums(d);
  c.gauss_norm = g.delta * g.delta.conj();
  c.dim = g.dim;
  c.gauss_criterion = c.gauss_norm == c.dim;
  const int passed = c.criteria_passed();
  if (passed != 0 && passed != 3) {
    throw VerificationError("modularity criteria disagree (" + std::to_string(passed) +
                            "/3 hold); the premodular datum is internally inconsistent");
  }
  c.modular = passed == 3;
  return c;
}

std::optional<GaussPhase> gauss_phase(const std::vector<CycloNum>& dims, const std::vector<RootOfUnity>& twist) {
  CycloNum delta(0);
  CycloNum dim(0);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const CycloNum d2 = dims[i] * dims[i];
    dim += d2;
    delta += d2 * twist[i].inverse().to_cyclo();
  }
  if (delta.is_zero()) return std::nullopt;
  const double turns = std::arg(delta.to_complex()) / (2.0 * std::numbers::pi);
  for (std::int64_t k : {1, 2, 3, 4, 6, 8, 12, 24}) {
    const std::int64_t m = k * std::lcm<std::int64_t>(delta.order(), 1);
    if (m > max_cyclotomic_order()) break;
    const auto j = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(m)));
    const RootOfUnity phase(j, m);
    const CycloNum candidate = delta * phase.inverse().to_cyclo();
    if (!candidate.is_real() || !(candidate.to_complex().real() > 0)) continue;
    if (candidate * candidate == dim) return GaussPhase{candidate, phase};
  }
  return std::nullopt;
}

ModularData normalized_ST(const PreModularData& d) {
  const ModularityCertificate cert = is_modular(d);
  if (!cert.modular) throw UsageError("normalized_ST requires modular data (S' is singular)");
  const auto gp = gauss_phase(d.dims(), d.twist);
  if (!gp) {
    throw VerificationError(
        "sqrt(dim) is not representable: Delta/|Delta| is not a root of unity within field orders k*n, "
        "k in {1,2,3,4,6,8,12,24}");
  }
  ModularData m;
  m.base = d;
  m.total_dim = gp->total_dim;
  m.s = (gp->total_dim / cert.dim) * d.sprime;
  m.s = m.s.embedded(m.s.common_order());
  m.charge_conj = charge_conjugation(d.ring);
  const CycloMatrix s2 = m.s * m.s;
  const std::size_t r = u(d.rank());

  // (ST)^3 only sees lambda^3, so the principal cube root is taken.
  const RootOfUnity lambda(gp->phase.num(), 3 * gp->phase.den());
  m.t = CycloMatrix(r, r);
  CycloMatrix st(r, r);
  for (std::size_t i = 0; i < r; ++i) m.t(i, i) = (lambda * d.twist[i]).to_cyclo();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) st(i, j) = m.s(i, j) * m.t(j, j);
  if (!(st * st * st == s2)) throw VerificationError("(ST)^3 != S^2 for lambda^3 = Delta/|Delta|");
  m.t_phase = lambda;
  const SL2ZReport rep = sl2z_representation(m);
  if (!rep.all()) throw VerificationError("normalized S, T violate the modular relations");
  return m;
}

FusionRing verlinde_from_sprime(const CycloMatrix& sprime, const CycloNum& dim, std::vector<std::string> labels) {
  const std::size_t r = sprime.rows();
  const std::int64_t n = lcm_order(sprime.common_order(), dim.order());
  const CycloMatrix sp = sprime.embedded(n);
  const CycloNum dim_inv = dim.embed(n).inverse();
  CycloMatrix a(r, r);
  CycloMatrix c(r, r);
  for (std::size_t m = 0; m < r; ++m) {
    const CycloNum f = sp(0, m).inverse() * dim_inv;
    for (std::size_t i = 0; i < r; ++i) {
      a(i, m) = sp(i, m) * f;
      c(i, m) = sp(i, m).conj();
    }
  }
  std::vector<int> table(r * r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      std::vector<CycloNum> b(r);
      for (std::size_t m = 0; m < r; ++m) b[m] = a(i, m) * sp(j, m);
      for (std::size_t k = 0; k < r; ++k) {
        CycloNum acc(0);
        for (std::size_t m = 0; m < r; ++m) acc += b[m] * c(k, m);
        const auto q = acc.as_rational();
        if (!q || q->get_den() != 1 || *q < 0) {
          throw VerificationError("Verlinde coefficient N_" + std::to_string(i) + "," + std::to_string(j) + "^" +
                                  std::to_string(k) + " = " + acc.to_string() + " is not a nonnegative integer");
        }
        const int v = static_cast<int>(q->get_num().get_si());
        table[(i * r + j) * r + k] = v;
        table[(j * r + i) * r + k] = v;
      }
    }
  }
  std::vector<Label> dual(r, -1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (table[(i * r + j) * r] == 0) continue;
      if (dual[i] != -1 || table[(i * r + j) * r] != 1)
        throw VerificationError("Verlinde fusion has no unique dual for label " + std::to_string(i));
      dual[i] = static_cast<Label>(j);
    }
    if (dual[i] == -1) throw VerificationError("Verlinde fusion has no dual for label " + std::to_string(i));
  }
  FusionRing ring(std::move(labels), dual);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (int v = table[(i * r + j) * r + k]) ring.set(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k), v);
  return ring;
}

FusionRing verlinde_fusion(const ModularData& m) {
  const GaussSums g = gauss_sums(m.base);
  FusionRing ring = verlinde_from_sprime(m.base.sprime, g.dim, m.base.ring.labels());
  if (!(ring == m.base.ring)) {
    for (const auto& [i, j, k, v] : ring.nonzero()) {
      if (m.base.ring.N(i, j, k) != v)
        throw VerificationError("Verlinde fusion N_" + std::to_string(i) + "," + std::to_string(j) + "^" +
                                std::to_string(k) + " = " + std::to_string(v) + " differs from the stored value " +
                                std::to_string(m.base.ring.N(i, j, k)));
    }
    throw VerificationError("Verlinde fusion differs from the stored fusion ring");
  }
  return ring;
}

SL2ZReport sl2z_representation(const ModularData& m) {
  SL2ZReport rep;
  rep.s = m.s;
  rep.t = m.t;
  const std::size_t r = m.s.rows();
  const CycloMatrix id = CycloMatrix::identity(r);
  const CycloMatrix& c = m.charge_conj;
  rep.s_unitary = m.s * m.s.conj_transpose() == id;
  rep.t_unitary = is_diagonal(m.t) && m.t * m.t.conj_transpose() == id;
  const CycloMatrix s2 = m.s * m.s;
  const CycloMatrix st = m.s * m.t;
  rep.s2_equals_st3 = st * st * st == s2;
  rep.s2_equals_c = s2 == c;
  rep.s4_identity = s2 * s2 == id;
  rep.tc_equals_ct = m.t * c == c * m.t;
  rep.c_involution = c * c == id;
  return rep;
}

}  // namespace mtk
