#include "mtk/galois.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>

namespace mtk {

namespace {

using Complex = std::complex<double>;

std::size_t u(int i) { return static_cast<std::size_t>(i); }

std::string set_string(const PreModularData& d, const LabelSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + d.ring.label(s[i]);
  return out + "}";
}

int element_order(const CurrentGroup& k, int a) {
  int x = a;
  int n = 1;
  while (x != 0) {
    x = k.table[u(x)][u(a)];
    ++n;
  }
  return n;
}

/// Label Z x X for an invertible Z.
Label act(const PreModularData& d, Label z, Label x) { return d.ring.products(z, x).front(); }

std::vector<int> positions(const CurrentGroup& k, const LabelSet& labels) {
  std::vector<int> out;
  for (Label z : labels) out.push_back(k.index_of(z));
  return out;
}

bool is_cyclic(const CurrentGroup& k, const std::vector<int>& sub) {
  return std::any_of(sub.begin(), sub.end(),
                     [&](int a) { return element_order(k, a) == static_cast<int>(sub.size()); });
}

std::string orbit_name(const PreModularData& d, const Orbit& o) {
  if (o.members.size() == 1) return d.ring.label(o.members.front());
  std::string s = "[";
  for (std::size_t i = 0; i < o.members.size(); ++i) s += (i ? "+" : "") + d.ring.label(o.members[i]);
  return s + "]";
}

/// Exact value of an S^{[Z]} search candidate.
struct Option {
  int m = 0;  // |value|^2 = m / f
  int k = 0;  // phase zeta_P^k
  Complex value;
};

}  // namespace

int CurrentGroup::index_of(Label z) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), z);
  return (it != elements.end() && *it == z) ? static_cast<int>(it - elements.begin()) : -1;
}

CurrentGroup simple_current_group(const PreModularData& d, const LabelSet& k_in) {
  CurrentGroup k;
  k.elements = make_label_set(k_in);
  if (k.elements.empty() || k.elements.front() != 0) k.elements.insert(k.elements.begin(), 0);
  for (Label z : k.elements) {
    if (z < 0 || z >= d.rank()) throw UsageError("current label " + std::to_string(z) + " out of range");
    if (!(d.dim(z) == CycloNum(1)))
      throw InvariantError("not a simple-current group: d(" + d.ring.label(z) + ") = " + d.dim(z).to_string() + " != 1");
  }
  const int n = k.order();
  k.table.assign(u(n), std::vector<int>(u(n), -1));
  k.inverse.assign(u(n), -1);
  for (int a = 0; a < n; ++a) {
    k.inverse[u(a)] = k.index_of(d.ring.dual(k.elements[u(a)]));
    if (k.inverse[u(a)] < 0) throw InvariantError("not a simple-current group: not closed under duals");
    for (int b = 0; b < n; ++b) {
      const int c = k.index_of(act(d, k.elements[u(a)], k.elements[u(b)]));
      if (c < 0)
        throw InvariantError("not a simple-current group: " + d.ring.label(k.elements[u(a)]) + " x " +
                             d.ring.label(k.elements[u(b)]) + " leaves the set");
      k.table[u(a)][u(b)] = c;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (k.table[u(a)][u(b)] != k.table[u(b)][u(a)]) throw InvariantError("not a simple-current group: not abelian");
  k.bosonic = std::all_of(k.elements.begin(), k.elements.end(), [&](Label z) { return d.twist[u(z)].is_one(); });
  k.symmetric = true;
  for (Label a : k.elements)
    for (Label b : k.elements)
      if (!(d.sprime(u(a), u(b)) == CycloNum(1))) k.symmetric = false;
  return k;
}

CurrentGroup check_symmetric_subcategory(const PreModularData& d, const LabelSet& labels) {
  CurrentGroup k = simple_current_group(d, labels);
  for (Label z : k.elements)
    if (!d.twist[u(z)].is_one())
      throw InvariantError("fermionic current, bosonic closure impossible: twist of " + d.ring.label(z) + " is " +
                           d.twist[u(z)].to_cyclo().to_string());
  for (Label a : k.elements)
    for (Label b : k.elements)
      if (!(d.sprime(u(a), u(b)) == CycloNum(1)))
        throw InvariantError("current group is not symmetric: S'(" + d.ring.label(a) + "," + d.ring.label(b) + ") != 1");
  return k;
}

Character monodromy_character(const PreModularData& d, const CurrentGroup& k, Label i) {
  const CycloNum inv_dim = d.dim(i).inverse();
  Character chi;
  for (Label z : k.elements) {
    const auto r = (d.sprime(u(z), u(i)) * inv_dim).as_root_of_unity();
    if (!r)
      throw VerificationError("monodromy charge of " + d.ring.label(i) + " at " + d.ring.label(z) +
                              " is not a root of unity");
    chi.push_back(*r);
  }
  for (int a = 0; a < k.order(); ++a)
    for (int b = 0; b < k.order(); ++b)
      if (!(chi[u(k.table[u(a)][u(b)])] == chi[u(a)] * chi[u(b)]))
        throw VerificationError("monodromy charge of " + d.ring.label(i) + " is not multiplicative at (" +
                                d.ring.label(k.elements[u(a)]) + "," + d.ring.label(k.elements[u(b)]) + ")");
  return chi;
}

bool is_trivial(const Character& c) {
  return std::all_of(c.begin(), c.end(), [](const RootOfUnity& r) { return r.is_one(); });
}

LabelSet local_part(const PreModularData& d, const CurrentGroup& k) {
  LabelSet out;
  for (int i = 0; i < d.rank(); ++i)
    if (is_trivial(monodromy_character(d, k, i))) out.push_back(i);
  if (out != relative_commutant(d, k.elements))
    throw VerificationError("local part from monodromy charges differs from the relative commutant");
  return out;
}

GradingDecomposition grading_decomposition(const PreModularData& d, const CurrentGroup& k) {
  GradingDecomposition g;
  for (int i = 0; i < d.rank(); ++i) {
    Character chi = monodromy_character(d, k, i);
    auto it = std::find_if(g.grades.begin(), g.grades.end(), [&](const Grade& x) { return x.character == chi; });
    if (it == g.grades.end()) g.grades.push_back({std::move(chi), {i}});
    else it->labels.push_back(i);
  }
  g.full = static_cast<int>(g.grades.size()) == k.order();
  const LabelSet center = transparent_objects(d);
  LabelSet meet;
  std::set_intersection(center.begin(), center.end(), k.elements.begin(), k.elements.end(), std::back_inserter(meet));
  if (g.full != (meet == LabelSet{0}))
    throw VerificationError("grading fullness disagrees with K meeting the center only in the unit");
  return g;
}

std::vector<Character> subgroup_characters(const CurrentGroup& k, const std::vector<int>& sub) {
  std::vector<int> gens;
  std::set<int> span{0};
  for (int x : sub) {
    if (span.count(x)) continue;
    gens.push_back(x);
    std::vector<int> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int y : frontier)
        for (int g : gens)
          if (span.insert(k.table[u(y)][u(g)]).second) next.push_back(k.table[u(y)][u(g)]);
      frontier = std::move(next);
    }
  }
  std::vector<int> orders;
  for (int g : gens) orders.push_back(element_order(k, g));

  std::vector<Character> out;
  std::vector<int> digits(gens.size(), 0);
  while (true) {
    std::vector<std::optional<RootOfUnity>> value(u(k.order()));
    value[0] = RootOfUnity(0, 1);
    std::vector<int> frontier{0};
    bool ok = true;
    while (!frontier.empty() && ok) {
      std::vector<int> next;
      for (int y : frontier) {
        for (std::size_t gi = 0; gi < gens.size() && ok; ++gi) {
          const int z = k.table[u(y)][u(gens[gi])];
          const RootOfUnity v = *value[u(y)] * RootOfUnity(digits[gi], orders[gi]);
          if (!value[u(z)]) {
            value[u(z)] = v;
            next.push_back(z);
          } else if (!(*value[u(z)] == v)) {
            ok = false;
          }
        }
      }
      frontier = std::move(next);
    }
    if (ok) {
      Character c;
      for (int x : sub) c.push_back(*value[u(x)]);
      out.push_back(std::move(c));
    }
    bool done = true;
    for (std::size_t pos = gens.size(); pos-- > 0;) {
      if (++digits[pos] < orders[pos]) {
        done = false;
        break;
      }
      digits[pos] = 0;
    }
    if (done) break;
  }
  if (out.size() != sub.size()) throw VerificationError("character count of an abelian subgroup differs from its order");
  return out;
}

OrbitData orbit_analysis(const PreModularData& d, const CurrentGroup& k, const LabelSet& scope_in,
                         const UntwistedStabilizers& untwisted) {
  LabelSet scope = scope_in;
  if (scope.empty()) {
    scope.resize(u(d.rank()));
    std::iota(scope.begin(), scope.end(), 0);
  }
  OrbitData out;
  out.orbit_of.assign(u(d.rank()), -1);
  std::vector<bool> in_scope(u(d.rank()), false);
  for (Label x : scope) in_scope[u(x)] = true;

  for (Label x : scope) {
    if (out.orbit_of[u(x)] >= 0) continue;
    Orbit o;
    std::set<Label> members;
    for (Label z : k.elements) {
      const Label y = act(d, z, x);
      if (!in_scope[u(y)])
        throw InvariantError("orbit of " + d.ring.label(x) + " leaves the analysed label set at " + d.ring.label(y));
      members.insert(y);
      if (y == x) o.stabilizer.push_back(z);
    }
    o.members.assign(members.begin(), members.end());
    if (o.members.size() * o.stabilizer.size() != u(k.order()))
      throw VerificationError("orbit-stabilizer counting fails for " + d.ring.label(x));

    std::optional<LabelSet> supplied;
    for (Label y : o.members)
      if (auto it = untwisted.find(y); it != untwisted.end()) supplied = make_label_set(it->second);
    const auto stab_pos = positions(k, o.stabilizer);
    if (supplied) {
      const auto sub = positions(k, *supplied);
      const bool inside = std::includes(o.stabilizer.begin(), o.stabilizer.end(), supplied->begin(), supplied->end());
      bool closed = !supplied->empty() && supplied->front() == 0;
      for (int a : sub)
        for (int b : sub)
          closed = closed && std::find(sub.begin(), sub.end(), k.table[u(a)][u(b)]) != sub.end();
      if (!inside || !closed)
        throw InvariantError("untwisted stabilizer of " + d.ring.label(x) + " is not a subgroup of its stabilizer " +
                             set_string(d, o.stabilizer));
      o.untwisted_stabilizer = *supplied;
    } else if (is_cyclic(k, stab_pos)) {
      o.untwisted_stabilizer = o.stabilizer;
    } else {
      throw UsageError("stabilizer " + set_string(d, o.stabilizer) + " of " + d.ring.label(x) +
                       " is not cyclic; supply its untwisted stabilizer");
    }
    const std::size_t index = o.stabilizer.size() / o.untwisted_stabilizer.size();
    const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(index))));
    if (o.stabilizer.size() % o.untwisted_stabilizer.size() != 0 || root * root != index)
      throw InvariantError("multiplicity [K_X : L_X]^(1/2) is not an integer for " + d.ring.label(x));
    o.multiplicity = static_cast<int>(root);
    for (Label y : o.members) out.orbit_of[u(y)] = static_cast<int>(out.orbits.size());
    out.orbits.push_back(std::move(o));
  }
  return out;
}

CondensationResult condense(const PreModularData& d, const CurrentGroup& k, const CondenseOptions& options) {
  if (!k.bosonic) throw InvariantError("fermionic current, bosonic closure impossible");
  if (!k.symmetric) throw InvariantError("current group is not symmetric");

  CondensationResult res;
  res.input = d;
  res.currents = k;
  res.local = local_part(d, k);
  res.grading = grading_decomposition(d, k);
  res.orbits = orbit_analysis(d, k, res.local, options.untwisted_stabilizers);
  const auto& orbits = res.orbits.orbits;
  const int nk = k.order();

  // Condensed labels, dims and twists.
  std::vector<std::vector<Character>> chars;
  std::vector<std::vector<int>> label_index(orbits.size());
  PartialCondensation partial;
  partial.grading = res.grading;
  for (std::size_t x = 0; x < orbits.size(); ++x) {
    const Orbit& o = orbits[x];
    chars.push_back(subgroup_characters(k, positions(k, o.untwisted_stabilizer)));
    const Label rep = o.members.front();
    for (Label y : o.members)
      if (!(d.twist[u(y)] == d.twist[u(rep)]))
        throw VerificationError("twist is not constant on the orbit of " + d.ring.label(rep));
    const CycloNum dim =
        d.dim(rep) * CycloNum(Rational(1, static_cast<long>(o.multiplicity) * static_cast<long>(o.untwisted_stabilizer.size())));
    CycloNum orbit_sum(0);
    for (std::size_t c = 0; c < chars.back().size(); ++c) {
      label_index[x].push_back(static_cast<int>(res.labels.size()));
      res.labels.push_back({static_cast<int>(x), static_cast<int>(c)});
      std::string name = orbit_name(d, o);
      if (chars.back().size() > 1) name += "_" + std::to_string(c);
      partial.labels.push_back(name);
      partial.dims.push_back(dim);
      partial.twist.push_back(d.twist[u(rep)]);
      orbit_sum += dim * dim;
    }
    if (!(orbit_sum == d.dim(rep) * d.dim(rep) * CycloNum(Rational(1, static_cast<long>(o.stabilizer.size())))))
      throw VerificationError("orbit dimension identity fails for " + d.ring.label(rep));
  }
  const std::size_t rank = res.labels.size();
  CycloNum dim_cond(0);
  for (const auto& x : partial.dims) dim_cond += x * x;
  if (!(dim_cond * CycloNum(nk) == subset_dimension(d, res.local)))
    throw VerificationError("condensed dimension differs from dim(local part)/|K|");

  for (int i = 0; i < d.rank(); ++i) {
    res.embedding_table.emplace_back();
    const int x = res.orbits.orbit_of[u(i)];
    if (x < 0) continue;
    for (int c : label_index[u(x)]) res.embedding_table.back().push_back({c, orbits[u(x)].multiplicity});
  }

  // Closed-form part of S'.
  const auto rep_of = [&](const CondensedLabel& l) { return orbits[u(l.orbit)].members.front(); };
  const auto kx = [&](int x) { return static_cast<long>(orbits[u(x)].stabilizer.size()); };
  const auto lx = [&](int x) { return static_cast<long>(orbits[u(x)].untwisted_stabilizer.size()); };
  CycloMatrix base(rank, rank);
  std::vector<std::vector<Rational>> coef(rank, std::vector<Rational>(rank));
  for (std::size_t a = 0; a < rank; ++a) {
    for (std::size_t b = 0; b < rank; ++b) {
      const int x = res.labels[a].orbit;
      const int y = res.labels[b].orbit;
      coef[a][b] = Rational(nk, kx(x) * lx(x) * kx(y) * lx(y));
      coef[a][b].canonicalize();
      Rational se(kx(x) * kx(y), nk);
      se.canonicalize();
      base(a, b) = CycloNum(coef[a][b] * se) * d.sprime(u(rep_of(res.labels[a])), u(rep_of(res.labels[b])));
    }
  }

  // Nontrivial Z in some untwisted stabilizer, with the orbits fixed by it.
  std::map<Label, std::vector<int>> fixed_by;
  for (std::size_t x = 0; x < orbits.size(); ++x)
    for (Label z : orbits[x].untwisted_stabilizer)
      if (z != 0) fixed_by[z].push_back(static_cast<int>(x));

  // S' from S'^{[Z]} matrices over fixed orbits (absent entries are zero).
  const auto assemble = [&](const std::map<Label, CycloMatrix>& szp) {
    CycloMatrix s = base;
    for (const auto& [z, orbs] : fixed_by) {
      const CycloMatrix& m = szp.at(z);
      for (std::size_t p = 0; p < orbs.size(); ++p) {
        for (std::size_t q = 0; q < orbs.size(); ++q) {
          const int x = orbs[p];
          const int y = orbs[q];
          const auto& lxs = orbits[u(x)].untwisted_stabilizer;
          const auto& lys = orbits[u(y)].untwisted_stabilizer;
          const auto px = std::lower_bound(lxs.begin(), lxs.end(), z) - lxs.begin();
          const auto py = std::lower_bound(lys.begin(), lys.end(), z) - lys.begin();
          for (std::size_t ci = 0; ci < chars[u(x)].size(); ++ci) {
            for (std::size_t cj = 0; cj < chars[u(y)].size(); ++cj) {
              const std::size_t a = u(label_index[u(x)][ci]);
              const std::size_t b = u(label_index[u(y)][cj]);
              const RootOfUnity phase = chars[u(x)][ci][u(static_cast<int>(px))] *
                                        chars[u(y)][cj][u(static_cast<int>(py))].inverse();
              s(a, b) += CycloNum(coef[a][b]) * phase.to_cyclo() * m(p, q);
            }
          }
        }
      }
    }
    return s;
  };

  // Accepts S' if it is unitary up to dim, has integral Verlinde fusion and
  // passes every premodular invariant.
  const auto accept = [&](const CycloMatrix& s) -> std::optional<PreModularData> {
    if (!(s * s.conj_transpose() == CycloNum(dim_cond) * CycloMatrix::identity(rank))) return std::nullopt;
    try {
      FusionRing ring = verlinde_from_sprime(s, dim_cond, partial.labels);
      return make_premodular(std::move(ring), partial.twist, s);
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  std::optional<PreModularData> condensed;
  if (fixed_by.empty()) {
    const CycloMatrix s = assemble({});
    if (!determinant(s).is_zero()) {
      FusionRing ring = verlinde_from_sprime(s, dim_cond, partial.labels);
      condensed = make_premodular(std::move(ring), partial.twist, s);
      res.fusion_from_verlinde = true;
    } else {
      if (std::any_of(orbits.begin(), orbits.end(), [](const Orbit& o) { return o.stabilizer.size() != 1; }))
        throw FixedPointResolutionError("fixed-point resolution data required: stabilizers without S' data", partial);
      std::vector<Label> dual;
      for (std::size_t a = 0; a < rank; ++a) dual.push_back(res.orbits.orbit_of[u(d.ring.dual(rep_of(res.labels[a])))]);
      FusionRing ring(partial.labels, dual);
      for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b = 0; b < rank; ++b)
          for (std::size_t c = 0; c < rank; ++c) {
            int n = 0;
            for (Label z : k.elements) n += d.ring.N(rep_of(res.labels[a]), rep_of(res.labels[b]), act(d, z, rep_of(res.labels[c])));
            ring.set(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), n);
          }
      condensed = make_premodular(std::move(ring), partial.twist, s);
    }
  } else {
    std::optional<CycloNum> root_dim;
    if (auto gp = gauss_phase(partial.dims, partial.twist)) root_dim = gp->total_dim;
    else if (auto q = dim_cond.as_rational()) root_dim = sqrt_rational(*q);
    if (!root_dim)
      throw FixedPointResolutionError("fixed-point resolution data required: sqrt of the condensed dimension is not cyclotomic",
                                      partial);
    const auto norm = [&](int x, int y) { return sqrt_rational(Rational(kx(x) * lx(x) * kx(y) * lx(y))); };

    if (options.fixed_point_matrices) {
      std::map<Label, CycloMatrix> szp;
      for (const auto& [z, orbs] : fixed_by) {
        const auto& given = *options.fixed_point_matrices;
        CycloMatrix m;
        if (auto it = given.find(z); it != given.end()) m = it->second;
        else if (auto jt = given.find(d.ring.dual(z)); jt != given.end()) m = jt->second.transpose();
        else throw UsageError("S^[Z] matrix missing for current " + d.ring.label(z));
        if (m.rows() != orbs.size() || m.cols() != orbs.size())
          throw SchemaError("S^[Z] matrix for " + d.ring.label(z) + " must be " + std::to_string(orbs.size()) + "x" +
                            std::to_string(orbs.size()));
        res.fixed_point_matrices[z] = m;
        szp[z] = *root_dim * m;
      }
      condensed = accept(assemble(szp));
      if (!condensed)
        throw VerificationError("supplied S^[Z] matrices do not yield a unitary S with integral Verlinde fusion");
      res.fusion_from_verlinde = true;
    } else {
      // Search over S^{[Z]} = sqrt(|K_X||L_X||K_Y||L_Y|) * U(X,Y) with U unitary,
      // |U(X,Y)|^2 in {0, 1/f, ..., 1} and arg U(X,Y) in (2 pi / P) Z.
      std::int64_t t_order = 1;
      for (const auto& t : d.twist) t_order = std::lcm(t_order, t.den());
      const std::int64_t period = lcm_order(nk, t_order) * 24;
      if (period > max_cyclotomic_order())
        throw FixedPointResolutionError("fixed-point resolution data required: phase search order too large", partial);

      struct Block {
        Label z;
        std::vector<int> orbs;
        bool self_inverse;
        std::vector<Option> options;
        std::vector<std::vector<int>> choice;  // option index per cell, -1 unset
      };
      std::vector<Block> blocks;
      for (const auto& [z, orbs] : fixed_by) {
        const Label zi = d.ring.dual(z);
        if (zi < z) continue;
        Block b{z, orbs, zi == z, {}, std::vector<std::vector<int>>(orbs.size(), std::vector<int>(orbs.size(), -1))};
        const int f = static_cast<int>(orbs.size());
        b.options.push_back({0, 0, Complex(0, 0)});
        for (int m = 1; m <= f; ++m)
          for (int j = 0; j < period; ++j)
            b.options.push_back({m, j, std::sqrt(double(m) / f) * std::polar(1.0, 2.0 * std::numbers::pi * j / double(period))});
        blocks.push_back(std::move(b));
      }
      struct Cell {
        std::size_t block;
        std::size_t p;
        std::size_t q;
      };
      std::vector<Cell> cells;
      for (std::size_t bi = 0; bi < blocks.size(); ++bi)
        for (std::size_t p = 0; p < blocks[bi].orbs.size(); ++p)
          for (std::size_t q = blocks[bi].self_inverse ? p : 0; q < blocks[bi].orbs.size(); ++q) cells.push_back({bi, p, q});

      // Numeric data for leaf filtering.
      const double rd = root_dim->to_complex().real();
      std::vector<std::vector<Complex>> base_num(rank, std::vector<Complex>(rank));
      for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b = 0; b < rank; ++b) base_num[a][b] = base(a, b).to_complex();

      const auto value = [&](const Block& b, std::size_t p, std::size_t q) {
        const int c = b.choice[p][q];
        return c < 0 ? Complex(0, 0) : b.options[u(c)].value;
      };
      const auto rows_ok = [&](const Block& b) {
        const std::size_t f = b.orbs.size();
        for (std::size_t p = 0; p < f; ++p) {
          int msum = 0;
          bool complete = true;
          for (std::size_t q = 0; q < f; ++q) {
            const int c = b.choice[p][q];
            if (c < 0) complete = false;
            else msum += b.options[u(c)].m;
          }
          if (msum > static_cast<int>(f) || (complete && msum != static_cast<int>(f))) return false;
          if (!complete) continue;
          for (std::size_t p2 = 0; p2 < p; ++p2) {
            bool other = true;
            Complex ip(0, 0);
            for (std::size_t q = 0; q < f; ++q) {
              if (b.choice[p2][q] < 0) other = false;
              ip += value(b, p, q) * std::conj(value(b, p2, q));
            }
            if (other && std::abs(ip) > 1e-9) return false;
          }
        }
        return true;
      };
      const auto numeric_ok = [&]() {
        std::vector<std::vector<Complex>> s = base_num;
        for (const auto& b : blocks) {
          for (int pass = 0; pass < (b.self_inverse ? 1 : 2); ++pass) {
            const Label z = pass == 0 ? b.z : d.ring.dual(b.z);
            for (std::size_t p = 0; p < b.orbs.size(); ++p) {
              for (std::size_t q = 0; q < b.orbs.size(); ++q) {
                const int x = b.orbs[p];
                const int y = b.orbs[q];
                const Complex sz = pass == 0 ? value(b, p, q) : value(b, q, p);
                const double scale = rd * std::sqrt(double(kx(x) * lx(x) * kx(y) * lx(y)));
                const auto& lxs = orbits[u(x)].untwisted_stabilizer;
                const auto& lys = orbits[u(y)].untwisted_stabilizer;
                const auto px = std::lower_bound(lxs.begin(), lxs.end(), z) - lxs.begin();
                const auto py = std::lower_bound(lys.begin(), lys.end(), z) - lys.begin();
                for (std::size_t ci = 0; ci < chars[u(x)].size(); ++ci)
                  for (std::size_t cj = 0; cj < chars[u(y)].size(); ++cj) {
                    const std::size_t a = u(label_index[u(x)][ci]);
                    const std::size_t bb = u(label_index[u(y)][cj]);
                    const Complex ph = chars[u(x)][ci][u(static_cast<int>(px))].to_complex() *
                                       std::conj(chars[u(y)][cj][u(static_cast<int>(py))].to_complex());
                    s[a][bb] += coef[a][bb].get_d() * ph * scale * sz;
                  }
              }
            }
          }
        }
        const double dn = dim_cond.to_complex().real();
        for (std::size_t a = 0; a < rank; ++a)
          for (std::size_t b = 0; b < rank; ++b) {
            Complex ip(0, 0);
            for (std::size_t c = 0; c < rank; ++c) ip += s[a][c] * std::conj(s[b][c]);
            if (std::abs(ip - (a == b ? dn : 0.0)) > 1e-8 * dn) return false;
          }
        for (std::size_t i = 0; i < rank; ++i)
          for (std::size_t j = i; j < rank; ++j)
            for (std::size_t l = 0; l < rank; ++l) {
              Complex n(0, 0);
              for (std::size_t m = 0; m < rank; ++m) n += s[i][m] * s[j][m] * std::conj(s[l][m]) / s[0][m];
              n /= dn;
              if (std::abs(n.imag()) > 1e-6 || n.real() < -1e-6 || std::abs(n.real() - std::round(n.real())) > 1e-6)
                return false;
            }
        return true;
      };
      const auto exact_candidate = [&]() {
        std::map<Label, CycloMatrix> szp;
        for (const auto& b : blocks) {
          const std::size_t f = b.orbs.size();
          CycloMatrix m(f, f);
          for (std::size_t p = 0; p < f; ++p)
            for (std::size_t q = 0; q < f; ++q) {
              const int c = b.choice[p][q];
              const Option& o = b.options[u(c)];
              if (o.m == 0) continue;
              m(p, q) = norm(b.orbs[p], b.orbs[q]) * sqrt_rational(Rational(o.m, static_cast<long>(f))) *
                        RootOfUnity(o.k, period).to_cyclo();
            }
          res.fixed_point_matrices[b.z] = m;
          szp[b.z] = *root_dim * m;
          if (!b.self_inverse) {
            res.fixed_point_matrices[d.ring.dual(b.z)] = m.transpose();
            szp[d.ring.dual(b.z)] = *root_dim * m.transpose();
          }
        }
        return accept(assemble(szp));
      };

      long budget = options.solver_budget;
      std::function<bool(std::size_t)> search = [&](std::size_t ci) -> bool {
        if (--budget < 0) return false;
        if (ci == cells.size()) {
          if (!numeric_ok()) return false;
          condensed = exact_candidate();
          return condensed.has_value();
        }
        Block& b = blocks[cells[ci].block];
        const std::size_t p = cells[ci].p;
        const std::size_t q = cells[ci].q;
        for (std::size_t o = 0; o < b.options.size(); ++o) {
          b.choice[p][q] = static_cast<int>(o);
          if (b.self_inverse) b.choice[q][p] = static_cast<int>(o);
          if (rows_ok(b) && search(ci + 1)) return true;
          if (budget < 0) break;
        }
        b.choice[p][q] = -1;
        if (b.self_inverse) b.choice[q][p] = -1;
        return false;
      };
      if (!search(0)) {
        res.fixed_point_matrices.clear();
        throw FixedPointResolutionError(
            budget < 0 ? "fixed-point resolution data required: S^[Z] search budget exhausted"
                       : "fixed-point resolution data required: no S^[Z] candidate passed exact verification",
            partial);
      }
      res.solver_used = true;
      res.fusion_from_verlinde = true;
    }
  }
  res.condensed = std::move(*condensed);

  // Modular exactly when K is the whole center of the local part.
  const LabelSet local_center_rel = transparent_objects(restrict_premodular(d, res.local));
  LabelSet local_center;
  for (Label i : local_center_rel) local_center.push_back(res.local[u(i)]);
  if (is_modular(res.condensed).modular != (local_center == k.elements))
    throw VerificationError("condensed modularity disagrees with the center of the local part");
  return res;
}

CondensationResult modular_closure(const PreModularData& d, const CondenseOptions& options) {
  const LabelSet center = transparent_objects(d);
  for (Label z : center)
    if (!(d.dim(z) == CycloNum(1)))
      throw UsageError("nonabelian center out of scope: transparent " + d.ring.label(z) + " is not invertible");
  for (Label z : center)
    if (!d.twist[u(z)].is_one())
      throw InvariantError("no bosonic modular closure: transparent " + d.ring.label(z) + " is fermionic");
  const CurrentGroup k = check_symmetric_subcategory(d, center);
  CondensationResult res = condense(d, k, options);
  if (!is_modular(res.condensed).modular) throw VerificationError("modular closure is not modular");
  return res;
}

}  // namespace mtk
