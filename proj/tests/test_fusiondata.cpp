#include <doctest.h>

#include <cmath>

#include "mtk/fusion.hpp"

using namespace mtk;

namespace {

FusionRing ising_ring() {
  FusionRing r({"1", "psi", "sigma"}, {0, 1, 2});
  for (int j = 0; j < 3; ++j) {
    r.set(0, j, j, 1);
    r.set(j, 0, j, 1);
  }
  r.set(1, 1, 0, 1);
  r.set(1, 2, 2, 1);
  r.set(2, 1, 2, 1);
  r.set(2, 2, 0, 1);
  r.set(2, 2, 1, 1);
  return r;
}

FusionRing fib_ring() {
  FusionRing r({"1", "tau"}, {0, 1});
  r.set(0, 0, 0, 1);
  r.set(0, 1, 1, 1);
  r.set(1, 0, 1, 1);
  r.set(1, 1, 0, 1);
  r.set(1, 1, 1, 1);
  return r;
}

FusionRing trivial_ring() {
  FusionRing r({"1"}, {0});
  r.set(0, 0, 0, 1);
  return r;
}

int associativity_defect(const FusionRing& r, const std::vector<int>& t) {
  int a = 0;
  int b = 0;
  for (int m = 0; m < r.rank(); ++m) {
    a += r.N(t[0], t[1], m) * r.N(m, t[2], t[3]);
    b += r.N(t[1], t[2], m) * r.N(t[0], m, t[3]);
  }
  return a - b;
}

bool associative_by_brute_force(const FusionRing& r) {
  const int n = r.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          int a = 0;
          int b = 0;
          for (int m = 0; m < n; ++m) {
            a += r.N(i, j, m) * r.N(m, k, l);
            b += r.N(j, k, m) * r.N(i, m, l);
          }
          if (a != b) return false;
        }
  return true;
}

}  // namespace

TEST_SUITE("fusiondata") {
  TEST_CASE("validation") {
    CHECK(validate_fusion_ring(trivial_ring()).empty());
    CHECK(associative_by_brute_force(ising_ring()));
    CHECK(validate_fusion_ring(ising_ring()).empty());

    FusionRing bad = ising_ring();
    bad.set(2, 2, 1, 2);
    CHECK_FALSE(associative_by_brute_force(bad));
    int reported = 0;
    for (const auto& x : validate_fusion_ring(bad)) {
      if (x.invariant != "associativity") continue;
      ++reported;
      CHECK(associativity_defect(bad, x.witness) != 0);
    }
    CHECK(reported > 0);
    // (sigma sigma) sigma = sigma (sigma sigma) = 3 sigma survives the perturbation
    CHECK(associativity_defect(bad, {2, 2, 2, 2}) == 0);
    CHECK(associativity_defect(bad, {2, 2, 1, 0}) != 0);
  }

  TEST_CASE("broken unit and duality are reported with witnesses") {
    FusionRing r = fib_ring();
    r.set(0, 1, 1, 0);
    const auto v = validate_fusion_ring(r);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().witness == std::vector<int>{0, 1, 1});

    FusionRing d({"1", "a", "b"}, {0, 2, 2});
    CHECK_FALSE(validate_fusion_ring(d).empty());
  }

  TEST_CASE("Perron-Frobenius dimensions") {
    CHECK(perron_frobenius_dims(trivial_ring()).dims == std::vector<double>{1.0});
    const auto fib = perron_frobenius_dims(fib_ring());
    CHECK(fib.dims[1] == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    const auto is = perron_frobenius_dims(ising_ring());
    CHECK(is.dims[0] == 1.0);
    CHECK(is.dims[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(is.dims[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }

  TEST_CASE("global dimension") {
    CHECK(global_dimension(perron_frobenius_dims(trivial_ring())) == doctest::Approx(1.0));
    CHECK(global_dimension(perron_frobenius_dims(ising_ring())) == doctest::Approx(4.0));
    CHECK(global_dimension(perron_frobenius_dims(fib_ring())) == doctest::Approx(3.6180339887498949));
  }

  TEST_CASE("dimension quantization") {
    DimensionVector d{{1.0, std::sqrt(2.0), (1 + std::sqrt(5.0)) / 2, 1.9, 2.5}, {}};
    const auto q = check_dimension_quantization(d);
    CHECK_FALSE(q[0].flagged);
    CHECK(q[1].nearest_n == 4);
    CHECK_FALSE(q[1].flagged);
    CHECK(q[2].nearest_n == 5);
    CHECK_FALSE(q[2].flagged);
    CHECK(q[3].flagged);
    CHECK_FALSE(q[4].flagged);
  }

  TEST_CASE("subring closure") {
    const FusionRing r = ising_ring();
    CHECK(fusion_subring_closure(r, {1}) == LabelSet{0, 1});
    CHECK(fusion_subring_closure(r, {2}) == LabelSet{0, 1, 2});
    CHECK(fusion_subring_closure(r, {}) == LabelSet{0});
    for (const LabelSet& seed : {LabelSet{}, LabelSet{1}, LabelSet{2}, LabelSet{1, 2}}) {
      const LabelSet c = fusion_subring_closure(r, seed);
      CHECK(fusion_subring_closure(r, c) == c);
      for (int extra = 0; extra < 3; ++extra) {
        LabelSet bigger = seed;
        bigger.push_back(extra);
        const LabelSet cb = fusion_subring_closure(r, make_label_set(bigger));
        CHECK(std::includes(cb.begin(), cb.end(), c.begin(), c.end()));
      }
    }
  }

  TEST_CASE("dual labels have equal dimensions") {
    FusionRing z3({"0", "1", "2"}, {0, 2, 1});
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) z3.set(a, b, (a + b) % 3, 1);
    REQUIRE(validate_fusion_ring(z3).empty());
    const auto d = perron_frobenius_dims(z3);
    CHECK(d.dims[1] == d.dims[2]);
    CHECK(fusion_group_structure(z3) == std::vector<int>{3});
    CHECK_FALSE(fusion_group_structure(ising_ring()).has_value());
    CHECK(group_structure_name({2, 2}) == "Z2xZ2");
    CHECK(group_structure_name({}) == "trivial");
  }
}
