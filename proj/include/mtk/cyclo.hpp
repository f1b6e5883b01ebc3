#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mtk {

using Integer = mpz_class;
/// Arbitrary precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Upper bound on cyclotomic orders produced by arithmetic. Reads
/// MTK_MAX_CYCLO_ORDER, default 10^6.
std::int64_t max_cyclotomic_order();

std::int64_t euler_phi(std::int64_t n);
std::int64_t lcm_order(std::int64_t a, std::int64_t b);

class CycloNum;

/// exp(2*pi*i*num/den), stored with 0 <= num < den and gcd(num, den) = 1.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity inverse() const;
  RootOfUnity pow(std::int64_t e) const;
  bool is_one() const { return num_ == 0; }

  CycloNum to_cyclo() const;
  std::complex<double> to_complex() const;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const RootOfUnity& r);

/// Exact element of the cyclotomic field Q(zeta_n), stored in the power basis
/// {1, zeta, ..., zeta^(phi(n)-1)} after reduction modulo the n-th cyclotomic
/// polynomial. Coefficients share one positive denominator internally.
///
/// Binary operations on operands of different orders embed both into
/// Q(zeta_lcm) first. Two values are equal iff their canonical forms agree in
/// that common field.
class CycloNum {
 public:
  CycloNum();
  CycloNum(long value);  // NOLINT(google-explicit-constructor)
  explicit CycloNum(const Rational& q, std::int64_t order = 1);

  /// Value sum_k coeffs[k] * zeta_order^k; any length is accepted and reduced.
  static CycloNum from_coeffs(std::int64_t order, const std::vector<Rational>& coeffs);
  static CycloNum zeta(std::int64_t order, std::int64_t power = 1);

  std::int64_t order() const { return order_; }
  /// Canonical coefficient vector, length phi(order).
  std::vector<Rational> coeffs() const;
  Rational coeff(std::size_t k) const;

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  bool is_real() const { return *this == conj(); }

  CycloNum conj() const;
  CycloNum inverse() const;
  CycloNum pow(std::int64_t e) const;
  /// Image under the Galois automorphism zeta -> zeta^a, gcd(a, order) = 1.
  CycloNum galois(std::int64_t a) const;
  /// Same value viewed in Q(zeta_new_order); order() must divide new_order.
  CycloNum embed(std::int64_t new_order) const;
  /// Re-express in the smallest Q(zeta_d), d | order(), that contains the value.
  CycloNum minimize_order() const;

  std::complex<double> to_complex() const;
  /// Identify the value as a root of unity, if it is one.
  std::optional<RootOfUnity> as_root_of_unity() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& b);
  CycloNum& operator-=(const CycloNum& b);
  CycloNum& operator*=(const CycloNum& b);
  CycloNum& operator/=(const CycloNum& b);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  std::string to_string() const;

 private:
  CycloNum(std::int64_t order, std::vector<Integer> num, Integer den);
  void normalize();
  void align_with(const CycloNum& other);

  std::int64_t order_ = 1;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

/// Exact square root of a nonnegative rational, built from quadratic Gauss
/// sums (sqrt 2 = zeta_8 + zeta_8^-1, sqrt p from the Gauss sum of p).
CycloNum sqrt_rational(const Rational& q);

}  // namespace mtk
