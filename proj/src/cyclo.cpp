#include "mtk/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "mtk/error.hpp"

namespace mtk {

namespace {

using Poly = std::vector<Integer>;  // low degree first

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> ds;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Exact quotient of a by a monic divisor b.
Poly exact_div_monic(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  Poly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

// Memoized per thread, so values stay free of shared mutable state.
const Poly& cyclotomic_poly(std::int64_t n) {
  thread_local std::unordered_map<std::int64_t, Poly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Poly p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d : divisors(n)) {
    if (d == n) continue;
    p = exact_div_monic(std::move(p), cyclotomic_poly(d));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

// Reduce a polynomial in zeta_n (any length) to canonical length phi(n).
void reduce_mod_cyclotomic(std::int64_t n, Poly& a) {
  const auto un = static_cast<std::size_t>(n);
  if (a.size() > un) {
    for (std::size_t i = un; i < a.size(); ++i) a[i % un] += a[i];
    a.resize(un);
  }
  const Poly& phi = cyclotomic_poly(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0) continue;
    const Integer c = a[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) a[i - deg + j] -= c * phi[j];
    }
    a[i] = 0;
  }
  a.resize(deg);
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial division over Q; returns (quotient, remainder).
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Solve A c = b over Q (A given column-wise); nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& b) {
  const std::size_t m = b.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> M(m, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < k; ++c) M[r][c] = cols[c][r];
    M[r][k] = b[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < m; ++c) {
    std::size_t p = row;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[row]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || M[r][c] == 0) continue;
      Rational f = M[r][c] / M[row][c];
      for (std::size_t cc = c; cc <= k; ++cc) M[r][cc] -= f * M[row][cc];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (M[r][k] != 0) return std::nullopt;
  std::vector<Rational> sol(k, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = M[r][k] / M[r][pivot_col[r]];
  return sol;
}

std::int64_t positive_mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

void check_order_bound(std::int64_t n) {
  if (n < 1) throw ArithmeticError("cyclotomic order must be positive");
  if (n > max_cyclotomic_order()) {
    throw ArithmeticError("cyclotomic order " + std::to_string(n) + " exceeds the configured bound " +
                          std::to_string(max_cyclotomic_order()) + " (MTK_MAX_CYCLO_ORDER)");
  }
}

}  // namespace

std::int64_t max_cyclotomic_order() {
  if (const char* env = std::getenv("MTK_MAX_CYCLO_ORDER")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 1'000'000;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (std::int64_t p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

std::int64_t lcm_order(std::int64_t a, std::int64_t b) {
  const std::int64_t l = std::lcm(a, b);
  check_order_bound(l);
  return l;
}

// ---------------------------------------------------------------- RootOfUnity

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den < 1) throw ArithmeticError("root of unity denominator must be positive");
  num = positive_mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (num_ == 0) den_ = 1;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
}

RootOfUnity RootOfUnity::inverse() const { return {-num_, den_}; }

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
  return {static_cast<std::int64_t>((static_cast<__int128>(num_) * positive_mod(e, den_)) % den_), den_};
}

CycloNum RootOfUnity::to_cyclo() const { return CycloNum::zeta(den_, num_); }

std::complex<double> RootOfUnity::to_complex() const {
  const long double a = 2.0L * std::numbers::pi_v<long double> * num_ / den_;
  return {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
}

std::ostream& operator<<(std::ostream& os, const RootOfUnity& r) {
  return os << "e(" << r.num() << "/" << r.den() << ")";
}

// ---------------------------------------------------------------- CycloNum

CycloNum::CycloNum() : order_(1), num_(1), den_(1) {}

CycloNum::CycloNum(long value) : order_(1), num_{Integer(value)}, den_(1) {}

CycloNum::CycloNum(const Rational& q, std::int64_t order) : order_(order) {
  check_order_bound(order);
  Rational c = q;
  c.canonicalize();
  num_.assign(static_cast<std::size_t>(euler_phi(order)), Integer(0));
  num_[0] = c.get_num();
  den_ = c.get_den();
}

CycloNum::CycloNum(std::int64_t order, std::vector<Integer> num, Integer den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
  reduce_mod_cyclotomic(order_, num_);
  normalize();
}

CycloNum CycloNum::from_coeffs(std::int64_t order, const std::vector<Rational>& coeffs) {
  check_order_bound(order);
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> num(std::max<std::size_t>(coeffs.size(), 1));
  for (std::size_t k = 0; k < coeffs.size(); ++k) num[k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
  return {order, std::move(num), den};
}

CycloNum CycloNum::zeta(std::int64_t order, std::int64_t power) {
  check_order_bound(order);
  std::vector<Integer> num(static_cast<std::size_t>(order));
  num[static_cast<std::size_t>(positive_mod(power, order))] = 1;
  return {order, std::move(num), Integer(1)};
}

void CycloNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  bool all_zero = std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) c /= g;
    den_ /= g;
  }
}

std::vector<Rational> CycloNum::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    Rational q(c, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

Rational CycloNum::coeff(std::size_t k) const {
  if (k >= num_.size()) return 0;
  Rational q(num_[k], den_);
  q.canonicalize();
  return q;
}

bool CycloNum::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

std::optional<Rational> CycloNum::as_rational() const {
  for (std::size_t k = 1; k < num_.size(); ++k)
    if (num_[k] != 0) return std::nullopt;
  return coeff(0);
}

CycloNum CycloNum::embed(std::int64_t new_order) const {
  if (new_order % order_ != 0) {
    throw ArithmeticError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                          std::to_string(new_order) + "): order does not divide");
  }
  if (new_order == order_) return *this;
  check_order_bound(new_order);
  const std::int64_t t = new_order / order_;
  std::vector<Integer> num(static_cast<std::size_t>(new_order));
  for (std::size_t k = 0; k < num_.size(); ++k) num[k * static_cast<std::size_t>(t)] = num_[k];
  return {new_order, std::move(num), den_};
}

void CycloNum::align_with(const CycloNum& other) {
  if (order_ == other.order_) return;
  *this = embed(lcm_order(order_, other.order_));
}

CycloNum CycloNum::galois(std::int64_t a) const {
  a = positive_mod(a, order_);
  if (std::gcd(a, order_) != 1) throw ArithmeticError("galois exponent must be coprime to the order");
  std::vector<Integer> num(static_cast<std::size_t>(order_));
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    num[static_cast<std::size_t>((static_cast<std::int64_t>(k) * a) % order_)] += num_[k];
  }
  return {order_, std::move(num), den_};
}

CycloNum CycloNum::conj() const { return galois(-1); }

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& b) {
  if (order_ != b.order_) {
    align_with(b);
    if (b.order_ != order_) return *this += b.embed(order_);
  }
  if (den_ == b.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += b.num_[k];
  } else {
    const Integer l = lcm(den_, b.den_);
    const Integer fa = l / den_;
    const Integer fb = l / b.den_;
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] = num_[k] * fa + b.num_[k] * fb;
    den_ = l;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& b) { return *this += -b; }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.order_ != b.order_) {
    const std::int64_t l = lcm_order(a.order_, b.order_);
    return a.embed(l) * b.embed(l);
  }
  const std::size_t n = a.num_.size();
  if (n == 1) {
    CycloNum r = a;
    r.num_[0] = a.num_[0] * b.num_[0];
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }
  std::vector<Integer> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  return {a.order_, std::move(prod), a.den_ * b.den_};
}

CycloNum& CycloNum::operator*=(const CycloNum& b) { return *this = *this * b; }

CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

CycloNum& CycloNum::operator/=(const CycloNum& b) { return *this = *this / b; }

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
  const std::int64_t l = std::lcm(a.order_, b.order_);
  return a.embed(l) == b.embed(l);
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(zeta_" + std::to_string(order_) + ")");
  if (num_.size() == 1) {
    Rational q(den_, num_[0]);
    q.canonicalize();
    return CycloNum(q, order_);
  }
  // Extended Euclid in Q[x]: track s with s*a == r (mod Phi_n).
  const Poly& phi = cyclotomic_poly(order_);
  QPoly r0(phi.begin(), phi.end());
  QPoly r1;
  for (const auto& c : num_) r1.emplace_back(c);
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(den_)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Rational c = r1.at(0);
  for (auto& x : s1) x /= c;
  return from_coeffs(order_, s1);
}

CycloNum CycloNum::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum result(Rational(1), order_);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CycloNum CycloNum::minimize_order() const {
  for (std::int64_t d : divisors(order_)) {
    if (d == order_) return *this;
    const std::int64_t phi_d = euler_phi(d);
    std::vector<std::vector<Rational>> cols;
    for (std::int64_t k = 0; k < phi_d; ++k) cols.push_back(zeta(d, k).embed(order_).coeffs());
    if (auto sol = solve_columns(cols, coeffs())) return from_coeffs(d, *sol);
  }
  return *this;
}

std::complex<double> CycloNum::to_complex() const {
  long double re = 0;
  long double im = 0;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    const long double c = mpq_class(num_[k], den_).get_d();
    const long double a = two_pi * static_cast<long double>(k) / static_cast<long double>(order_);
    re += c * std::cos(a);
    im += c * std::sin(a);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::optional<RootOfUnity> CycloNum::as_root_of_unity() const {
  const std::complex<double> z = to_complex();
  if (std::abs(std::abs(z) - 1.0) > 1e-6) return std::nullopt;
  const std::int64_t n = std::lcm<std::int64_t>(2, order_);
  const double turns = std::arg(z) / (2.0 * std::numbers::pi);
  const auto j = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(n)));
  RootOfUnity cand(j, n);
  if (cand.to_cyclo() == *this) return cand;
  return std::nullopt;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    Rational q = coeff(k);
    if (!first) os << (q < 0 ? " - " : " + ");
    else if (q < 0) os << "-";
    first = false;
    Rational aq = abs(q);
    if (k == 0) {
      os << aq;
    } else {
      if (aq != 1) os << aq << "*";
      os << "z" << order_;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.to_string(); }

namespace {

CycloNum sqrt_prime(std::int64_t p) {
  if (p == 2) return CycloNum::zeta(8, 1) + CycloNum::zeta(8, 7);
  // Quadratic Gauss sum g with g^2 = (-1)^((p-1)/2) p.
  std::vector<Rational> coeffs(static_cast<std::size_t>(p), Rational(0));
  for (std::int64_t a = 1; a < p; ++a) {
    std::int64_t e = 1;
    std::int64_t base = a % p;
    for (std::int64_t k = (p - 1) / 2; k > 0; k >>= 1) {
      if (k & 1) e = e * base % p;
      base = base * base % p;
    }
    coeffs[static_cast<std::size_t>(a)] = (e == 1) ? 1 : -1;
  }
  CycloNum g = CycloNum::from_coeffs(p, coeffs);
  if (p % 4 == 1) return g;
  return -CycloNum::zeta(4, 1) * g;
}

}  // namespace

CycloNum sqrt_rational(const Rational& q) {
  if (q < 0) throw ArithmeticError("sqrt_rational of a negative number");
  if (q == 0) return CycloNum();
  Integer m = q.get_num() * q.get_den();
  Integer outside = 1;
  CycloNum root(1);
  for (Integer p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) outside *= p;
    if (e % 2 == 1) root *= sqrt_prime(p.get_si());
  }
  if (m > 1) root *= sqrt_prime(m.get_si());
  Rational scale(outside, q.get_den());
  scale.canonicalize();
  return root * CycloNum(scale);
}

}  // namespace mtk
