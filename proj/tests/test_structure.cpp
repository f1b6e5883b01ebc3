#include <doctest.h>

#include <cstdlib>

#include "mtk/catalog.hpp"
#include "mtk/error.hpp"
#include "mtk/structure.hpp"

using namespace mtk;

TEST_SUITE("structure") {
  TEST_CASE("Deligne products") {
    const auto is = catalog_get("ising");
    const auto fib = catalog_get("fib");
    const auto t = deligne_product(catalog_get("trivial"), is);
    CHECK(find_relabeling(t, is, true).has_value());
    const auto p = deligne_product(is, fib);
    CHECK(p.rank() == 6);
    CHECK(gauss_sums(p).dim == CycloNum(4) * gauss_sums(fib).dim);
    CHECK(p.ring.label(3) == "(psi,tau)");
    const auto rr = deligne_product(catalog_get("rep_z2"), catalog_get("rep_z2"));
    CHECK(rr.rank() == 4);
    CHECK(transparent_objects(rr).size() == 4);
    CHECK(fusion_group_structure(rr.ring) == std::vector<int>{2, 2});
  }

  TEST_CASE("subcategory enumeration") {
    CHECK(enumerate_fusion_subcategories(catalog_get("ising")) == std::vector<LabelSet>{{0}, {0, 1}, {0, 1, 2}});
    CHECK(enumerate_fusion_subcategories(catalog_get("fib")) == std::vector<LabelSet>{{0}, {0, 1}});
    CHECK(enumerate_fusion_subcategories(catalog_get("trivial")) == std::vector<LabelSet>{{0}});
    for (const auto& k : enumerate_fusion_subcategories(catalog_get("d_s3")))
      CHECK(is_fusion_closed(catalog_get("d_s3").ring, k));
  }

  TEST_CASE("rank bound") {
    const auto big = deligne_product(catalog_get("d_s3"), catalog_get("su2_2"));
    setenv("MTK_MAX_RANK", "8", 1);
    CHECK_THROWS_AS(enumerate_fusion_subcategories(big), UsageError);
    unsetenv("MTK_MAX_RANK");
    CHECK(max_enumeration_rank() == 16);
  }

  TEST_CASE("double commutants") {
    const auto is = double_commutant_report(catalog_get("ising"));
    CHECK(is.all_ok());
    REQUIRE(is.entries.size() == 3);
    CHECK(is.entries[0].commutant == LabelSet{0, 1, 2});
    CHECK(is.entries[1].commutant == LabelSet{0, 1});
    CHECK(is.entries[1].double_commutant == LabelSet{0, 1});
    CHECK(is.entries[1].dim_sub * is.entries[1].dim_commutant == CycloNum(4));

    const auto fib = catalog_get("fib");
    const auto p = deligne_product(catalog_get("ising"), fib);
    const auto r = double_commutant_report(p);
    CHECK(r.all_ok());
    bool found = false;
    for (const auto& e : r.entries)
      if (e.sub == LabelSet{0, 2, 4}) {
        found = true;
        CHECK(e.commutant == LabelSet{0, 1});
        CHECK(e.dim_sub * e.dim_commutant == r.dim);
      }
    CHECK(found);
    CHECK_THROWS(double_commutant_report(catalog_get("rep_z2")));
  }

  TEST_CASE("commutant of a modular subcategory is modular") {
    for (const std::string name : {"toric", "d_s3", "su2_4"}) {
      const auto d = catalog_get(name);
      for (const auto& e : double_commutant_report(d).entries) {
        if (!is_modular(restrict_premodular(d, e.sub)).modular) continue;
        CHECK(is_modular(restrict_premodular(d, e.commutant)).modular);
      }
    }
  }

  TEST_CASE("factorization") {
    const auto is = catalog_get("ising");
    const auto fib = catalog_get("fib");
    const auto sem = catalog_get("semion");
    const auto triple = deligne_product(deligne_product(is, fib), sem);
    const auto f = factorize(triple);
    CHECK(f.verified);
    REQUIRE(f.factors.size() == 3);
    int matched = 0;
    for (const auto* ref : {&is, &fib, &sem})
      for (const auto& fac : f.factors)
        if (find_relabeling(fac, *ref, true)) {
          ++matched;
          break;
        }
    CHECK(matched == 3);
    CHECK(f.pairing.size() == static_cast<std::size_t>(triple.rank()));

    const auto prime = factorize(is);
    CHECK(prime.factors.size() == 1);
    CHECK(prime.factors[0] == is);
    CHECK(factorize(catalog_get("trivial")).factors.empty());
  }

  TEST_CASE("factorization of modular pairs round-trips") {
    const std::vector<std::string> names = {"semion", "ising", "fib", "zn_anyons:3:2"};
    for (const auto& a : names)
      for (const auto& b : names) {
        CAPTURE(a);
        CAPTURE(b);
        const auto da = catalog_get(a);
        const auto db = catalog_get(b);
        const auto f = factorize(deligne_product(da, db));
        REQUIRE(f.factors.size() == 2);
        const bool direct = find_relabeling(f.factors[0], da, true) && find_relabeling(f.factors[1], db, true);
        const bool swapped = find_relabeling(f.factors[0], db, true) && find_relabeling(f.factors[1], da, true);
        CHECK((direct || swapped));
      }
  }
}
