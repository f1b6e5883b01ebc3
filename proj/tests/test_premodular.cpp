#include <doctest.h>

#include <cmath>

#include "mtk/catalog.hpp"
#include "mtk/error.hpp"
#include "mtk/premodular.hpp"
#include "mtk/structure.hpp"

using namespace mtk;

namespace {

const std::vector<std::string> kModular = {"trivial", "semion", "ising", "fib", "su2_1", "su2_2",
                                           "su2_3", "su2_4", "zn_anyons:3:2", "toric", "d_s3"};

CycloNum sq(const CycloNum& x) { return x * x; }

}  // namespace

TEST_SUITE("premodular") {
  TEST_CASE("Gauss sums") {
    const auto rep = gauss_sums(catalog_get("rep_z2"));
    CHECK(rep.delta == CycloNum(2));
    CHECK(rep.dim == CycloNum(2));
    const auto is = gauss_sums(catalog_get("ising"));
    CHECK(is.dim == CycloNum(4));
    CHECK(is.delta * is.delta.conj() == CycloNum(4));
    const auto t = gauss_sums(catalog_get("trivial"));
    CHECK(t.delta == CycloNum(1));
    CHECK(t.dim == CycloNum(1));
  }

  TEST_CASE("transparent objects") {
    CHECK(transparent_objects(catalog_get("rep_z2")) == LabelSet{0, 1});
    CHECK(transparent_objects(catalog_get("ising")) == LabelSet{0});
    CHECK(transparent_objects(catalog_get("rep_z2_ising")) == LabelSet{0, 3});
  }

  TEST_CASE("relative commutant") {
    const auto is = catalog_get("ising");
    CHECK(relative_commutant(is, {0}) == LabelSet{0, 1, 2});
    CHECK(relative_commutant(is, {0, 1, 2}) == transparent_objects(is));
    CHECK(relative_commutant(is, {0, 1}) == LabelSet{0, 1});
    const auto p = deligne_product(is, catalog_get("fib"));
    // Ising factor labels are (a,0) at index 2a.
    CHECK(relative_commutant(p, {0, 2, 4}) == LabelSet{0, 1});
  }

  TEST_CASE("modularity criteria") {
    const auto is = is_modular(catalog_get("ising"));
    CHECK(is.modular);
    CHECK(is.criteria_passed() == 3);
    const auto rep = is_modular(catalog_get("rep_z2"));
    CHECK_FALSE(rep.modular);
    CHECK(rep.criteria_passed() == 0);
    CHECK(rep.gauss_norm == CycloNum(4));
    CHECK(rep.dim == CycloNum(2));
    CHECK(is_modular(catalog_get("toric")).modular);
  }

  TEST_CASE("normalized S and T") {
    const auto t = normalized_ST(catalog_get("trivial"));
    CHECK(t.s(0, 0) == CycloNum(1));
    CHECK(t.t(0, 0) == CycloNum(1));

    const auto sem = normalized_ST(catalog_get("semion"));
    const CycloNum r = sqrt_rational(Rational(1, 2));
    CHECK(sem.s(0, 0) == r);
    CHECK(sem.s(1, 1) == -r);
    CHECK(sem.t(1, 1) * sem.t(0, 0).inverse() == CycloNum::zeta(4));
    CHECK(sl2z_representation(sem).all());

    const auto z3 = normalized_ST(catalog_get("zn_anyons:3:2"));
    const CycloNum inv_sqrt3 = sqrt_rational(Rational(1, 3));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(z3.s(a, b) == CycloNum::zeta(3, a * b) * inv_sqrt3);
    CHECK(sl2z_representation(z3).all());
  }

  TEST_CASE("Verlinde fusion") {
    const auto fib = verlinde_fusion(normalized_ST(catalog_get("fib")));
    CHECK(fib.N(1, 1, 1) == 1);
    CHECK(fib.N(1, 1, 0) == 1);
    const auto z3 = verlinde_fusion(normalized_ST(catalog_get("zn_anyons:3:2")));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) CHECK(z3.N(a, b, c) == int((a + b) % 3 == c));
    CHECK(verlinde_fusion(normalized_ST(catalog_get("trivial"))).N(0, 0, 0) == 1);
  }

  TEST_CASE("SL(2,Z) relations") {
    for (const auto& name : kModular) {
      CAPTURE(name);
      CHECK(sl2z_representation(normalized_ST(catalog_get(name))).all());
    }
    const auto t = sl2z_representation(normalized_ST(catalog_get("trivial")));
    CHECK(t.s == CycloMatrix::identity(1));
    const auto is = normalized_ST(catalog_get("ising"));
    const auto s2 = is.s * is.s;
    CHECK(s2 * s2 == CycloMatrix::identity(3));
  }

  TEST_CASE("catalog-wide invariants") {
    for (const auto& e : catalog_list()) {
      CAPTURE(e.name);
      const auto d = catalog_get(e.name);
      CHECK(validate_premodular(d).empty());
      CHECK(balanced_sprime(d.ring, d.twist, d.dims()) == d.sprime);
      const auto cert = is_modular(d);
      const int passed = cert.criteria_passed();
      CHECK((passed == 0 || passed == 3));
      if (cert.modular) {
        const CycloNum dim = gauss_sums(d).dim;
        for (int i = 0; i < d.rank(); ++i) {
          CycloNum row(0);
          for (int j = 0; j < d.rank(); ++j) row += d.sprime(i, j) * d.sprime(i, j).conj();
          CHECK(row == dim);
        }
      }
      if (e.kind == CatalogKind::symmetric) {
        const auto g = gauss_sums(d);
        CHECK(g.delta == g.dim);
        if (d.rank() > 1) CHECK_FALSE(cert.modular);
      }
    }
  }

  TEST_CASE("determinant") {
    CycloMatrix m(2, 2);
    m(0, 0) = CycloNum(1);
    m(0, 1) = CycloNum::zeta(3);
    m(1, 0) = CycloNum::zeta(3, 2);
    m(1, 1) = CycloNum(1);
    CHECK(determinant(m).is_zero());
    m(1, 1) = CycloNum(2);
    CHECK(determinant(m) == CycloNum(1));
    const auto fib = catalog_get("fib");
    const CycloNum phi = fib.dim(1);
    CHECK(determinant(fib.sprime) == -(CycloNum(1) + sq(phi)));
  }

  TEST_CASE("invalid data is rejected") {
    auto d = catalog_get("semion");
    d.twist[1] = RootOfUnity(1, 8);
    CHECK_FALSE(validate_premodular(d).empty());
    CHECK_THROWS_AS(require_valid(d), InvariantError);
  }
}
