#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pairscheme/rational.hpp"

namespace pairscheme {

namespace detail {

/// Dense integer polynomial, lowest-degree coefficient first.
using ZPoly = std::vector<Integer>;

inline void zpoly_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zpoly_trim(r);
  return r;
}

/// Exact division by a monic divisor; throws if the division leaves a remainder.
inline ZPoly zpoly_div_exact(ZPoly num, const ZPoly& den) {
  if (den.empty() || den.back() != 1)
    throw std::invalid_argument("zpoly_div_exact: divisor must be monic");
  zpoly_trim(num);
  if (num.size() < den.size()) {
    if (!num.empty()) throw std::invalid_argument("zpoly_div_exact: not divisible");
    return {};
  }
  ZPoly quot(num.size() - den.size() + 1, Integer(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer c = num[k + den.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  for (const Integer& c : num)
    if (c != 0) throw std::invalid_argument("zpoly_div_exact: not divisible");
  return quot;
}

}  // namespace detail

inline long euler_totient(long n) {
  if (n < 1) throw std::invalid_argument("euler_totient: n must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed by exact division of x^n - 1 by the cyclotomic polynomials of the
/// proper divisors of n.
inline std::vector<Integer> cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  if (n == 1) return {Integer(-1), Integer(1)};  // x - 1
  detail::ZPoly num(static_cast<std::size_t>(n) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;  // x^n - 1
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = detail::zpoly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

namespace detail {

/// Per-order reduction data: Phi_n and the power basis images of x^k.
struct CycTable {
  long n = 1;
  long deg = 1;
  ZPoly phi;
  // power[k] = x^k mod Phi_n for 0 <= k <= max(2*deg-2, n-1); integer coefficients
  // since Phi_n is monic.
  std::vector<std::vector<Integer>> power;
};

inline std::shared_ptr<const CycTable> cyc_table(long n) {
  static std::mutex mtx;
  static std::map<long, std::shared_ptr<const CycTable>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  auto t = std::make_shared<CycTable>();
  t->n = n;
  t->phi = cyclotomic_polynomial(n);
  t->deg = static_cast<long>(t->phi.size()) - 1;
  const long deg = t->deg;
  const long kmax = std::max(2 * deg - 2, n - 1);
  t->power.resize(static_cast<std::size_t>(kmax) + 1);
  for (long k = 0; k <= kmax; ++k) {
    std::vector<Integer> row(static_cast<std::size_t>(deg), Integer(0));
    if (k < deg) {
      row[static_cast<std::size_t>(k)] = 1;
    } else {
      // x * power[k-1], reduced by the monic Phi_n.
      const auto& prev = t->power[static_cast<std::size_t>(k) - 1];
      Integer lead = prev[static_cast<std::size_t>(deg) - 1];
      for (long i = deg - 1; i >= 1; --i) row[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i) - 1];
      if (lead != 0)
        for (long i = 0; i < deg; ++i) row[static_cast<std::size_t>(i)] -= lead * t->phi[static_cast<std::size_t>(i)];
    }
    t->power[static_cast<std::size_t>(k)] = std::move(row);
  }
  cache.emplace(n, t);
  return cache[n];
}

}  // namespace detail

/// An element of the cyclotomic field Q(zeta_n), stored on the power basis
/// {zeta^k : 0 <= k < deg(Phi_n)}. The representation is canonical, so
/// equality is plain coefficient comparison. Values are immutable in spirit:
/// every operation returns a fresh value.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}

  explicit Cyclotomic(long n) : table_(detail::cyc_table(n)), coeffs_(static_cast<std::size_t>(table_->deg)) {}

  static Cyclotomic zero(long n) { return Cyclotomic(n); }

  static Cyclotomic from_rational(long n, const Rational& r) {
    Cyclotomic c(n);
    c.coeffs_[0] = r;
    return c;
  }

  static Cyclotomic from_integer(long n, long v) { return from_rational(n, Rational(v)); }

  static Cyclotomic one(long n) { return from_integer(n, 1); }

  /// zeta_n^k, any integer k.
  static Cyclotomic root_power(long n, long k) {
    Cyclotomic c(n);
    long e = ((k % n) + n) % n;
    const auto& row = c.table_->power[static_cast<std::size_t>(e)];
    for (std::size_t i = 0; i < c.coeffs_.size(); ++i) c.coeffs_[i] = Rational(row[i]);
    return c;
  }

  /// sum_k counts[k] * zeta_n^k. The workhorse behind character sums.
  static Cyclotomic from_exponent_counts(long n, const std::vector<Integer>& counts) {
    if (static_cast<long>(counts.size()) > n)
      throw std::invalid_argument("from_exponent_counts: more exponents than the order");
    Cyclotomic c(n);
    std::vector<Integer> acc(c.coeffs_.size(), Integer(0));
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      const auto& row = c.table_->power[k];
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += counts[k] * row[i];
    }
    for (std::size_t i = 0; i < acc.size(); ++i) c.coeffs_[i] = Rational(acc[i]);
    return c;
  }

  static Cyclotomic from_coeffs(long n, std::vector<Rational> coeffs) {
    Cyclotomic c(n);
    if (coeffs.size() != c.coeffs_.size())
      throw std::invalid_argument("Cyclotomic: coefficient vector has wrong length");
    c.coeffs_ = std::move(coeffs);
    return c;
  }

  long order() const { return table_->n; }
  long degree() const { return table_->deg; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.require_same_order(b);
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    a.require_same_order(b);
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.require_same_order(b);
    const long deg = a.table_->deg;
    std::vector<Rational> conv(static_cast<std::size_t>(2 * deg - 1));
    for (long i = 0; i < deg; ++i) {
      if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
      for (long j = 0; j < deg; ++j) {
        if (b.coeffs_[static_cast<std::size_t>(j)] == 0) continue;
        conv[static_cast<std::size_t>(i + j)] +=
            a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    Cyclotomic r(a.order());
    for (long k = 0; k < 2 * deg - 1; ++k) {
      const Rational& c = conv[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      const auto& row = a.table_->power[static_cast<std::size_t>(k)];
      for (long i = 0; i < deg; ++i) r.coeffs_[static_cast<std::size_t>(i)] += c * Rational(row[static_cast<std::size_t>(i)]);
    }
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
    Cyclotomic r = a;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) { return a * s; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  bool equals_integer(long v) const { return is_rational() && coeffs_[0] == v; }

  /// Complex conjugate: the Galois map zeta |-> zeta^(n-1).
  Cyclotomic conj() const {
    const long n = order();
    Cyclotomic r(n);
    for (long k = 0; k < degree(); ++k) {
      const Rational& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      const auto& row = table_->power[static_cast<std::size_t>((n - k) % n)];
      for (long i = 0; i < degree(); ++i) r.coeffs_[static_cast<std::size_t>(i)] += c * Rational(row[static_cast<std::size_t>(i)]);
    }
    return r;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_n over Q. Phi_n is irreducible, so any nonzero element is a unit.
  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse: division by zero");
    using QPoly = std::vector<Rational>;
    auto trim = [](QPoly& p) {
      while (!p.empty() && p.back() == 0) p.pop_back();
    };
    QPoly r0(table_->phi.size());
    for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(table_->phi[i]);
    QPoly r1(coeffs_);
    trim(r1);
    QPoly s0{}, s1{Rational(1)};  // s tracks the coefficient of *this
    while (!r1.empty()) {
      // quotient of r0 by r1
      QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
      QPoly rem = r0;
      for (std::size_t k = q.size(); k-- > 0;) {
        if (rem.size() < r1.size() + k) continue;
        Rational c = rem[k + r1.size() - 1] / r1.back();
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < r1.size(); ++i) rem[k + i] -= c * r1[i];
      }
      trim(rem);
      // s_next = s0 - q * s1
      QPoly qs(q.empty() || s1.empty() ? QPoly{} : QPoly(q.size() + s1.size() - 1));
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
      QPoly s2 = s0;
      if (s2.size() < qs.size()) s2.resize(qs.size());
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is the gcd, a nonzero constant.
    if (r0.size() != 1)
      throw std::logic_error("Cyclotomic::inverse: gcd with Phi_n is not constant");
    Cyclotomic inv(order());
    for (std::size_t i = 0; i < s0.size() && i < inv.coeffs_.size(); ++i) inv.coeffs_[i] = s0[i] / r0[0];
    if (s0.size() > inv.coeffs_.size())
      throw std::logic_error("Cyclotomic::inverse: cofactor degree out of range");
    return inv;
  }

  std::complex<double> approx_complex() const {
    const double tau = 2.0 * 3.14159265358979323846 / static_cast<double>(order());
    std::complex<double> v{0.0, 0.0};
    for (long k = 0; k < degree(); ++k) {
      double c = coeffs_[static_cast<std::size_t>(k)].get_d();
      if (c == 0.0) continue;
      v += c * std::complex<double>(std::cos(tau * static_cast<double>(k)), std::sin(tau * static_cast<double>(k)));
    }
    return v;
  }

  /// Decimal approximation "a + bi" with the given number of decimals.
  /// Display only; never used in comparisons.
  std::string approx(int digits) const {
    if (digits < 1) throw std::invalid_argument("Cyclotomic::approx: digits must be positive");
    std::complex<double> v = approx_complex();
    double re = v.real() + 0.0, im = v.imag() + 0.0;
    char buf[128];
    // normalize negative zeros so the sign of the imaginary part is stable
    if (std::abs(re) < 0.5 * std::pow(10.0, -digits)) re = 0.0;
    if (std::abs(im) < 0.5 * std::pow(10.0, -digits)) im = 0.0;
    std::snprintf(buf, sizeof(buf), "%.*f %c %.*fi", digits, re, im < 0 ? '-' : '+', digits, std::abs(im));
    return buf;
  }

  /// Total order used for canonical row sorting: lexicographic on coefficients.
  friend int compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      int c = mpq_cmp(a.coeffs_[i].get_mpq_t(), b.coeffs_[i].get_mpq_t());
      if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
  }

  /// Human-readable exact form, e.g. "1 + 3*z^2" with z = zeta_n.
  std::string str() const {
    std::string out;
    for (long k = 0; k < degree(); ++k) {
      const Rational& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      Rational a = c;
      if (!out.empty()) {
        out += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      }
      std::string term;
      if (k == 0) {
        term = rational_to_string(a);
      } else {
        if (a != 1) term = rational_to_string(a) + "*";
        term += "z";
        if (k > 1) term += "^" + std::to_string(k);
      }
      out += term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void require_same_order(const Cyclotomic& b) const {
    if (order() != b.order())
      throw std::invalid_argument("Cyclotomic: mixed orders " + std::to_string(order()) + " and " +
                                  std::to_string(b.order()));
  }

  std::shared_ptr<const detail::CycTable> table_;
  std::vector<Rational> coeffs_;
};

}  // namespace pairscheme
