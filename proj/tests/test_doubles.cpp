#include <doctest.h>

#include <algorithm>

#include "mtk/catalog.hpp"
#include "mtk/doubles.hpp"
#include "mtk/error.hpp"
#include "mtk/structure.hpp"

using namespace mtk;

namespace {

CycloNum dim_of(const PreModularData& d) { return gauss_sums(d).dim; }

}  // namespace

TEST_SUITE("doubles") {
  TEST_CASE("representation categories") {
    const auto z2 = rep_category(cyclic_group(2));
    CHECK(z2.rank() == 2);
    CHECK(dim_of(z2) == CycloNum(2));
    const auto s3 = rep_category(symmetric_group_3());
    CHECK(s3.rank() == 3);
    CHECK(s3.dim(2) == CycloNum(2));
    CHECK(dim_of(s3) == CycloNum(6));
    CHECK(s3.ring.N(2, 2, 0) == 1);
    CHECK(s3.ring.N(2, 2, 1) == 1);
    CHECK(s3.ring.N(2, 2, 2) == 1);
    CHECK(rep_category(cyclic_group(1)).rank() == 1);
    for (const auto& d : {z2, s3}) {
      CHECK(transparent_objects(d).size() == static_cast<std::size_t>(d.rank()));
      CHECK(gauss_sums(d).delta == dim_of(d));
    }
  }

  TEST_CASE("untwisted doubles") {
    const auto toric = untwisted_double(cyclic_group(2));
    CHECK(toric.rank() == 4);
    for (int i = 0; i < 4; ++i) CHECK(toric.dim(i) == CycloNum(1));
    std::vector<RootOfUnity> w = toric.twist;
    CHECK(w == std::vector<RootOfUnity>{RootOfUnity(0, 1), RootOfUnity(0, 1), RootOfUnity(0, 1), RootOfUnity(1, 2)});
    CHECK(sl2z_representation(normalized_ST(toric)).all());
    CHECK(fusion_group_structure(verlinde_fusion(normalized_ST(toric))) == std::vector<int>{2, 2});

    const auto ds3 = untwisted_double(symmetric_group_3());
    CHECK(ds3.rank() == 8);
    CHECK(dim_of(ds3) == CycloNum(36));
    CHECK(is_modular(ds3).modular);
    CHECK(untwisted_double(cyclic_group(1)).rank() == 1);
  }

  TEST_CASE("doubles are modular with dimension |G|^2") {
    for (int n = 1; n <= 5; ++n) {
      const auto d = untwisted_double(cyclic_group(n));
      CHECK(is_modular(d).modular);
      CHECK(dim_of(d) == CycloNum(n * n));
    }
  }

  TEST_CASE("twisted cyclic doubles") {
    const auto p0 = twisted_cyclic_double({2, 0});
    CHECK(fusion_group_structure(p0.ring) == std::vector<int>{2, 2});
    CHECK(twisted_cyclic_double({1, 0}).rank() == 1);

    const auto p1 = twisted_cyclic_double({2, 1});
    CHECK(fusion_group_structure(p1.ring) == std::vector<int>{4});
    CHECK(is_modular(p1).modular);
    CHECK(dim_of(p1) == CycloNum(4));
    std::vector<RootOfUnity> tw = p1.twist;
    std::sort(tw.begin(), tw.end(), [](auto a, auto b) { return a.num() * b.den() < b.num() * a.den(); });
    CHECK(tw == std::vector<RootOfUnity>{RootOfUnity(0, 1), RootOfUnity(0, 1), RootOfUnity(1, 4), RootOfUnity(3, 4)});

    for (int n : {2, 3, 4}) {
      CAPTURE(n);
      for (int p = 0; p < n; ++p) {
        const auto d = twisted_cyclic_double({n, p});
        CHECK(is_modular(d).modular);
        CHECK(dim_of(d) == CycloNum(n * n));
        CHECK(validate_fusion_ring(verlinde_fusion(normalized_ST(d))).empty());
      }
      CHECK(find_relabeling(twisted_cyclic_double({n, 0}), untwisted_double(cyclic_group(n))).has_value());
    }
  }

  TEST_CASE("minimal extension check") {
    const auto z2 = cyclic_group(2);
    const auto toric = untwisted_double(z2);
    const auto r = minimal_extension_check(toric, rep_image_in_double(z2));
    CHECK(r.dim_m == CycloNum(4));
    CHECK(r.dim_c == CycloNum(2));
    CHECK(r.dim_center == CycloNum(2));
    CHECK(r.bound_holds);
    CHECK(r.minimal);

    const auto s3 = symmetric_group_3();
    const auto ds3 = untwisted_double(s3);
    const auto r3 = minimal_extension_check(ds3, rep_image_in_double(s3));
    CHECK(r3.dim_m == CycloNum(36));
    CHECK(r3.minimal);

    const auto triv = minimal_extension_check(catalog_get("ising"), {0});
    CHECK(triv.dim_m == CycloNum(4));
    CHECK(triv.bound_holds);
    CHECK_FALSE(triv.minimal);
  }

  TEST_CASE("group validation") {
    auto bad = cyclic_group(3).mult;
    bad[1][1] = 1;
    CHECK_THROWS_AS(make_group("bad", {}, bad, {{0}, {1}, {2}}, cyclic_group(3).char_tables), InvariantError);
    CHECK_THROWS_AS(builtin_group("A5"), UsageError);
    CHECK(builtin_group("Zn:4").order() == 4);
  }
}
