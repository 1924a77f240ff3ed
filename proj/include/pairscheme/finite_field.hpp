#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pairscheme/cyclotomic.hpp"

namespace pairscheme {

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Factors v as p^m with p prime, or nothing if v is not a prime power.
inline std::optional<std::pair<long, int>> is_prime_power(long v) {
  if (v < 2) return std::nullopt;
  long p = v;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) {
      p = d;
      break;
    }
  int m = 0;
  long rest = v;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, m);
}

class FieldSpec;
struct FieldElement;

/// GF(p^m) with a fixed monic irreducible modulus. Elements are handled by
/// index under the canonical enumeration: the element with coefficient vector
/// (c_0, ..., c_{m-1}) over GF(p) sits at index sum c_i p^i, so zero is index
/// 0 and, for m = 1, the index is the residue itself. A FieldSpec is immutable
/// after construction; all arithmetic reads precomputed tables.
class FieldSpec {
 public:
  /// If no modulus is given, picks the lexicographically smallest monic
  /// irreducible of degree m, coefficients compared low degree first.
  explicit FieldSpec(long p, int m = 1, std::optional<std::vector<long>> modulus = std::nullopt) : p_(p), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("FieldSpec: extension degree must be positive");
    q_ = 1;
    for (int i = 0; i < m; ++i) q_ *= p;
    if (modulus) {
      modulus_ = std::move(*modulus);
      validate_modulus();
    } else {
      modulus_ = smallest_irreducible();
    }
    build_tables();
  }

  long p() const { return p_; }
  int m() const { return m_; }
  long q() const { return q_; }
  /// Monic modulus, coefficients c_0..c_m with c_m = 1.
  const std::vector<long>& modulus() const { return modulus_; }

  long add(long a, long b) const { return add_[idx(a, b)]; }
  long sub(long a, long b) const { return add_[idx(a, neg_[check(b)])]; }
  long mul(long a, long b) const { return mul_[idx(a, b)]; }
  long neg(long a) const { return neg_[check(a)]; }
  long inv(long a) const {
    if (a == 0) throw std::domain_error("FieldSpec::inv: zero has no inverse");
    return inv_[check(a)];
  }
  long div(long a, long b) const { return mul(a, inv(b)); }

  long pow(long a, long e) const {
    check(a);
    long r = 1, base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  /// Absolute trace, landing in [0, p).
  long trace(long a) const { return trace_[check(a)]; }

  /// 0 at zero, +1 on nonzero squares, -1 otherwise. Defined for odd q only.
  int quadratic_character(long a) const {
    if (q_ % 2 == 0) throw std::domain_error("quadratic_character: undefined for even field order");
    return qchar_[check(a)];
  }

  long coeff(long a, int i) const {
    check(a);
    long v = a;
    for (int k = 0; k < i; ++k) v /= p_;
    return v % p_;
  }

  /// "0", "1", ..., or polynomial form like "z+1", "2z^2+1" for m >= 2.
  std::string label(long a) const {
    check(a);
    if (m_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::string out;
    for (int k = m_ - 1; k >= 0; --k) {
      long c = coeff(a, k);
      if (c == 0) continue;
      if (!out.empty()) out += "+";
      if (k == 0) {
        out += std::to_string(c);
      } else {
        if (c != 1) out += std::to_string(c);
        out += "z";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  FieldElement element(long a) const;
  FieldElement zero() const;
  FieldElement one() const;
  std::vector<FieldElement> elements() const;

 private:
  long check(long a) const {
    if (a < 0 || a >= q_) throw std::out_of_range("FieldSpec: element index out of range");
    return a;
  }
  std::size_t idx(long a, long b) const {
    return static_cast<std::size_t>(check(a)) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(check(b));
  }

  std::vector<long> digits(long a) const {
    std::vector<long> d(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      d[static_cast<std::size_t>(i)] = a % p_;
      a /= p_;
    }
    return d;
  }
  long from_digits(const std::vector<long>& d) const {
    long a = 0;
    for (int i = m_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<std::size_t>(i)];
    return a;
  }

  // polynomial arithmetic over GF(p), used only while building the tables
  std::vector<long> poly_mul_mod(const std::vector<long>& a, const std::vector<long>& b) const {
    std::vector<long> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    // reduce by monic modulus
    for (std::size_t k = prod.size(); k-- > static_cast<std::size_t>(m_);) {
      long c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (int i = 0; i < m_; ++i) {
        std::size_t pos = k - static_cast<std::size_t>(m_) + static_cast<std::size_t>(i);
        prod[pos] = ((prod[pos] - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
      }
    }
    prod.resize(static_cast<std::size_t>(m_), 0);
    return prod;
  }

  static bool divides(const std::vector<long>& g, std::vector<long> f, long p) {
    // g monic; returns true iff g | f over GF(p)
    while (f.size() >= g.size()) {
      long c = f.back();
      if (c != 0)
        for (std::size_t i = 0; i < g.size(); ++i) {
          std::size_t pos = f.size() - g.size() + i;
          f[pos] = ((f[pos] - c * g[i]) % p + p) % p;
        }
      f.pop_back();
    }
    for (long c : f)
      if (c != 0) return false;
    return true;
  }

  bool is_irreducible(const std::vector<long>& f) const {
    // trial division by every monic polynomial of degree 1..m/2
    for (int d = 1; 2 * d <= m_; ++d) {
      long count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (long t = 0; t < count; ++t) {
        std::vector<long> g(static_cast<std::size_t>(d) + 1, 0);
        long v = t;
        for (int i = 0; i < d; ++i) {
          g[static_cast<std::size_t>(i)] = v % p_;
          v /= p_;
        }
        g[static_cast<std::size_t>(d)] = 1;
        if (divides(g, f, p_)) return false;
      }
    }
    return true;
  }

  std::vector<long> smallest_irreducible() const {
    if (m_ == 1) return {0, 1};  // x; arithmetic is plain mod-p and never reduces
    // odometer over (c_0, ..., c_{m-1}) in lexicographic order, c_0 outermost
    std::vector<long> c(static_cast<std::size_t>(m_), 0);
    while (true) {
      std::vector<long> f = c;
      f.push_back(1);
      if (is_irreducible(f)) return f;
      int k = m_ - 1;
      while (k >= 0 && c[static_cast<std::size_t>(k)] == p_ - 1) c[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) throw std::logic_error("FieldSpec: no irreducible polynomial found");
      ++c[static_cast<std::size_t>(k)];
    }
  }

  void validate_modulus() const {
    if (static_cast<int>(modulus_.size()) != m_ + 1 || modulus_.back() != 1)
      throw std::invalid_argument("FieldSpec: modulus must be monic of degree m");
    for (long c : modulus_)
      if (c < 0 || c >= p_) throw std::invalid_argument("FieldSpec: modulus coefficients out of range");
    if (m_ > 1 && !is_irreducible(modulus_)) throw std::invalid_argument("FieldSpec: modulus is reducible");
  }

  void build_tables() {
    const std::size_t q = static_cast<std::size_t>(q_);
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (long a = 0; a < q_; ++a) {
      auto da = digits(a);
      for (long b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<long> s(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) s[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
        add_[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)] = from_digits(s);
        mul_[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)] = from_digits(poly_mul_mod(da, db));
      }
    }
    for (long a = 0; a < q_; ++a) {
      auto da = digits(a);
      for (auto& c : da) c = (p_ - c) % p_;
      neg_[static_cast<std::size_t>(a)] = from_digits(da);
    }
    for (long a = 1; a < q_; ++a)
      for (long b = 1; b < q_; ++b)
        if (mul_[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)] == 1) {
          inv_[static_cast<std::size_t>(a)] = b;
          break;
        }
    trace_.resize(q);
    for (long a = 0; a < q_; ++a) {
      long acc = a, frob = a;
      for (int i = 1; i < m_; ++i) {
        frob = pow_table(frob, p_);
        acc = add_[static_cast<std::size_t>(acc) * q + static_cast<std::size_t>(frob)];
      }
      for (int i = 1; i < m_; ++i)
        if (coeff_raw(acc, i) != 0) throw std::logic_error("FieldSpec: trace left the prime field");
      trace_[static_cast<std::size_t>(a)] = acc % p_;
    }
    if (q_ % 2 == 1) {
      qchar_.assign(q, -1);
      qchar_[0] = 0;
      for (long a = 1; a < q_; ++a) qchar_[static_cast<std::size_t>(mul_[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(a)])] = 1;
    }
  }

  long pow_table(long a, long e) const {
    long r = 1, base = a;
    while (e > 0) {
      if (e & 1) r = mul_[static_cast<std::size_t>(r) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(base)];
      base = mul_[static_cast<std::size_t>(base) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(base)];
      e >>= 1;
    }
    return r;
  }

  long coeff_raw(long a, int i) const {
    long v = a;
    for (int k = 0; k < i; ++k) v /= p_;
    return v % p_;
  }

  long p_;
  int m_;
  long q_;
  std::vector<long> modulus_;
  std::vector<long> add_, mul_, neg_, inv_, trace_;
  std::vector<int> qchar_;
};

/// A field element: a spec reference plus the canonical index.
struct FieldElement {
  const FieldSpec* spec = nullptr;
  long idx = 0;

  bool is_zero() const { return idx == 0; }
  std::string label() const { return spec->label(idx); }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    require_same(a, b);
    return {a.spec, a.spec->add(a.idx, b.idx)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    require_same(a, b);
    return {a.spec, a.spec->sub(a.idx, b.idx)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    require_same(a, b);
    return {a.spec, a.spec->mul(a.idx, b.idx)};
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    require_same(a, b);
    return {a.spec, a.spec->div(a.idx, b.idx)};
  }
  FieldElement operator-() const { return {spec, spec->neg(idx)}; }
  friend bool operator==(FieldElement a, FieldElement b) { return a.spec == b.spec && a.idx == b.idx; }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

 private:
  static void require_same(FieldElement a, FieldElement b) {
    if (a.spec != b.spec) throw std::invalid_argument("FieldElement: mixed fields");
  }
};

inline FieldElement inv(FieldElement a) { return {a.spec, a.spec->inv(a.idx)}; }
inline long trace(FieldElement a) { return a.spec->trace(a.idx); }
inline int quadratic_character(FieldElement a) { return a.spec->quadratic_character(a.idx); }

inline FieldElement FieldSpec::element(long a) const { return {this, check(a)}; }
inline FieldElement FieldSpec::zero() const { return {this, 0}; }
inline FieldElement FieldSpec::one() const { return {this, 1}; }

/// Canonical enumeration: index i holds the element with base-p digit value i.
inline std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(q_));
  for (long a = 0; a < q_; ++a) out.push_back({this, a});
  return out;
}

inline std::shared_ptr<const FieldSpec> make_field(long p, int m = 1,
                                                   std::optional<std::vector<long>> modulus = std::nullopt) {
  return std::make_shared<const FieldSpec>(p, m, std::move(modulus));
}

inline std::shared_ptr<const FieldSpec> make_field_of_order(long q) {
  auto pm = is_prime_power(q);
  if (!pm) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make_field(pm->first, pm->second);
}

/// Exponent e with chi(a) = zeta_n^e for the canonical additive character
/// chi(a) = zeta_p^{Tr(a)} embedded in Q(zeta_n). Requires p | n.
inline long additive_character_exponent(const FieldSpec& f, long a, long n) {
  if (n % f.p() != 0)
    throw std::invalid_argument("additive_character: field characteristic does not divide the ambient order");
  return (n / f.p()) * f.trace(a) % n;
}

inline Cyclotomic additive_character(FieldElement a, long n) {
  return Cyclotomic::root_power(n, additive_character_exponent(*a.spec, a.idx, n));
}

}  // namespace pairscheme
