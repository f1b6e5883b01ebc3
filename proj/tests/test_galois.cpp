#include <doctest.h>

#include <algorithm>

#include "mtk/catalog.hpp"
#include "mtk/doubles.hpp"
#include "mtk/error.hpp"
#include "mtk/galois.hpp"
#include "mtk/structure.hpp"

using namespace mtk;

namespace {

std::vector<std::pair<std::string, std::string>> dim_twist_multiset(const PreModularData& d) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; i < d.rank(); ++i) {
    std::ostringstream t;
    t << d.twist[i];
    out.emplace_back(d.dim(i).minimize_order().to_string(), t.str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycloNum total_dim(const PreModularData& d, const LabelSet& labels) {
  CycloNum s(0);
  for (Label l : labels) s += d.dim(l) * d.dim(l);
  return s;
}

}  // namespace

TEST_SUITE("galois") {
  TEST_CASE("symmetric current groups") {
    const auto is = catalog_get("ising");
    CHECK_THROWS_WITH_AS(check_symmetric_subcategory(is, {0, 1}), doctest::Contains("fermionic"), InvariantError);
    const auto su = catalog_get("su2_4");
    const auto k = check_symmetric_subcategory(su, {0, 4});
    CHECK(k.order() == 2);
    CHECK(k.bosonic);
    CHECK(k.symmetric);
    CHECK(check_symmetric_subcategory(is, {0}).order() == 1);
    CHECK_THROWS(simple_current_group(is, {0, 2}));
  }

  TEST_CASE("monodromy characters") {
    const auto su = catalog_get("su2_4");
    const auto k = check_symmetric_subcategory(su, {0, 4});
    CHECK(is_trivial(monodromy_character(su, k, 0)));
    const auto c1 = monodromy_character(su, k, 1);
    CHECK(c1[1] == RootOfUnity(1, 2));
    const auto c2 = monodromy_character(su, k, 2);
    CHECK(c2[1].is_one());
  }

  TEST_CASE("local part") {
    const auto su = catalog_get("su2_4");
    CHECK(local_part(su, check_symmetric_subcategory(su, {0, 4})) == LabelSet{0, 2, 4});
    CHECK(local_part(su, check_symmetric_subcategory(su, {0})) == LabelSet{0, 1, 2, 3, 4});
    const auto ri = catalog_get("rep_z2_ising");
    CHECK(local_part(ri, check_symmetric_subcategory(ri, {0, 3})).size() == 6);
  }

  TEST_CASE("grading") {
    const auto su = catalog_get("su2_4");
    const auto g = grading_decomposition(su, check_symmetric_subcategory(su, {0, 4}));
    REQUIRE(g.grades.size() == 2);
    CHECK(g.grades[0].labels == LabelSet{0, 2, 4});
    CHECK(g.grades[1].labels == LabelSet{1, 3});
    CHECK(g.full);

    const auto rep = catalog_get("rep_z2");
    const auto gr = grading_decomposition(rep, check_symmetric_subcategory(rep, {0, 1}));
    CHECK(gr.grades.size() == 1);
    CHECK_FALSE(gr.full);

    const auto toric = catalog_get("toric");
    const auto gt = grading_decomposition(toric, check_symmetric_subcategory(toric, {0, 1}));
    CHECK(gt.grades.size() == 2);
    CHECK(gt.full);
  }

  TEST_CASE("grading is full for every current group of a modular datum") {
    for (const std::string name : {"su2_4", "toric", "d_s3", "zn_anyons:4:1"}) {
      CAPTURE(name);
      const auto d = catalog_get(name);
      for (const auto& sub : enumerate_fusion_subcategories(d)) {
        CurrentGroup k;
        try {
          k = check_symmetric_subcategory(d, sub);
        } catch (const Error&) {
          continue;
        }
        CHECK(grading_decomposition(d, k).full);
      }
    }
  }

  TEST_CASE("orbits and stabilizers") {
    const auto su = catalog_get("su2_4");
    const auto k = check_symmetric_subcategory(su, {0, 4});
    const auto o = orbit_analysis(su, k);
    REQUIRE(o.orbits.size() == 3);
    CHECK(o.orbits[0].members == LabelSet{0, 4});
    CHECK(o.orbits[1].members == LabelSet{1, 3});
    CHECK(o.orbits[2].members == LabelSet{2});
    CHECK(o.orbits[0].stabilizer == LabelSet{0});
    CHECK(o.orbits[2].stabilizer == LabelSet{0, 4});
    for (const auto& orb : o.orbits) CHECK(orb.members.size() * orb.stabilizer.size() == 2);

    const auto triv = orbit_analysis(su, check_symmetric_subcategory(su, {0}));
    CHECK(triv.orbits.size() == 5);

    // diagonal Z2 generated by (1,psi)
    const auto ri = catalog_get("rep_z2_ising");
    const auto diag = simple_current_group(ri, {0, 4});
    const auto od = orbit_analysis(ri, diag);
    CHECK(od.orbits.size() == 3);
    for (const auto& orb : od.orbits) {
      CHECK(orb.members.size() == 2);
      CHECK(orb.stabilizer == LabelSet{0});
    }
  }

  TEST_CASE("condensation examples") {
    const auto rep = catalog_get("rep_z2");
    const auto r1 = condense(rep, check_symmetric_subcategory(rep, {0, 1}));
    CHECK(r1.condensed.rank() == 1);

    const auto su = catalog_get("su2_4");
    const auto r2 = condense(su, check_symmetric_subcategory(su, {0, 4}));
    CHECK(r2.solver_used);
    CHECK(r2.condensed.rank() == 3);
    for (int i = 0; i < 3; ++i) CHECK(r2.condensed.dim(i) == CycloNum(1));
    CHECK(fusion_group_structure(r2.condensed.ring) == std::vector<int>{3});
    CHECK(gauss_sums(r2.condensed).dim == CycloNum(3));
    CHECK(find_relabeling(r2.condensed, catalog_get("zn_anyons:3:2"), true).has_value());
    CHECK(is_modular(r2.condensed).modular);

    const auto ri = catalog_get("rep_z2_ising");
    const auto r3 = condense(ri, check_symmetric_subcategory(ri, {0, 3}));
    CHECK_FALSE(r3.solver_used);
    CHECK(find_relabeling(r3.condensed, catalog_get("ising")).has_value());
  }

  TEST_CASE("condensed twists are inherited") {
    const auto su = catalog_get("su2_4");
    const auto r = condense(su, check_symmetric_subcategory(su, {0, 4}));
    for (std::size_t t = 0; t < r.embedding_table.size(); ++t)
      for (const auto& [c, m] : r.embedding_table[t]) {
        CHECK(m >= 1);
        CHECK(r.condensed.twist[c] == su.twist[t]);
      }
  }

  TEST_CASE("dimension bookkeeping") {
    struct Case {
      std::string name;
      LabelSet k;
    };
    for (const auto& c : std::vector<Case>{{"su2_4", {0, 4}}, {"rep_z2_ising", {0, 3}}, {"rep_z2", {0, 1}},
                                           {"toric", {0, 1}}, {"zn_anyons:4:1", {0, 2}}}) {
      CAPTURE(c.name);
      const auto d = catalog_get(c.name);
      CurrentGroup k;
      try {
        k = check_symmetric_subcategory(d, c.k);
      } catch (const Error&) {
        continue;
      }
      const auto r = condense(d, k);
      CHECK(gauss_sums(r.condensed).dim * CycloNum(k.order()) == total_dim(d, r.local));
      for (const auto& orb : r.orbits.orbits) {
        if (!std::includes(r.local.begin(), r.local.end(), orb.members.begin(), orb.members.end())) continue;
        CHECK(orb.members.size() * orb.stabilizer.size() == static_cast<std::size_t>(k.order()));
        // contribution of one orbit: d(X)^2 / |K_X| summed over its constituents
        const int oi = r.orbits.orbit_of[orb.members.front()];
        CycloNum contrib(0);
        for (std::size_t i = 0; i < r.labels.size(); ++i)
          if (r.labels[i].orbit == oi) contrib += r.condensed.dim(int(i)) * r.condensed.dim(int(i));
        const CycloNum dx = d.dim(orb.members.front());
        CHECK(contrib * CycloNum(long(orb.stabilizer.size())) == dx * dx);
      }
    }
  }

  TEST_CASE("modular closure") {
    const auto c = modular_closure(catalog_get("rep_z2_ising"));
    CHECK(is_modular(c.condensed).modular);
    CHECK(dim_twist_multiset(c.condensed) == dim_twist_multiset(catalog_get("ising")));
    CHECK(find_relabeling(c.condensed, catalog_get("ising")).has_value());

    const auto fib = catalog_get("fib");
    CHECK(modular_closure(fib).condensed == fib);
    CHECK(modular_closure(catalog_get("rep_z2")).condensed.rank() == 1);
    CHECK_THROWS_AS(modular_closure(catalog_get("rep_s3")), UsageError);
  }

  TEST_CASE("fixed-point resolution failures") {
    const auto su = catalog_get("su2_4");
    const auto k = check_symmetric_subcategory(su, {0, 4});
    CondenseOptions none;
    none.solver_budget = 0;
    try {
      condense(su, k, none);
      FAIL("expected a fixed-point resolution error");
    } catch (const FixedPointResolutionError& e) {
      CHECK(e.partial().labels.size() == 3);
      CHECK(e.partial().twist.size() == 3);
    }

    // four fixed orbits of D(S3) under the sign current exceed a small budget;
    // the partial result still carries the condensed labels
    const auto ds3 = catalog_get("d_s3");
    CondenseOptions small;
    small.solver_budget = 20000;
    try {
      condense(ds3, check_symmetric_subcategory(ds3, {0, 1}), small);
      FAIL("expected a fixed-point resolution error");
    } catch (const FixedPointResolutionError& e) {
      CHECK(e.partial().labels.size() == 9);
      for (const auto& x : e.partial().dims) CHECK(x == CycloNum(1));
    }

    CondenseOptions good;
    CycloMatrix m(1, 1);
    m(0, 0) = CycloNum(4) * CycloNum::zeta(4);
    good.fixed_point_matrices = FixedPointMatrices{{4, m}};
    const auto r = condense(su, k, good);
    CHECK_FALSE(r.solver_used);
    CHECK(r.condensed.rank() == 3);

    CondenseOptions bad;
    m(0, 0) = CycloNum(4);
    bad.fixed_point_matrices = FixedPointMatrices{{4, m}};
    CHECK_THROWS_AS(condense(su, k, bad), VerificationError);
  }
}
