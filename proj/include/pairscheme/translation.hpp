#pragma once

#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairscheme/finite_field.hpp"
#include "pairscheme/int_matrix.hpp"

namespace pairscheme {

/// A translation scheme presented on a product of finite-field additive
/// groups. Vertices are mixed-radix indices with the first factor most
/// significant; for factors [F_r, F_q, F_q] the vertex (b, a1, a2) has index
/// b q^2 + a1 q + a2. Relations are the difference sets N_i = R_i(0), with
/// N_0 = {0} first.
struct TranslationData {
  std::vector<std::shared_ptr<const FieldSpec>> factors;
  std::vector<std::string> labels;
  std::vector<std::vector<long>> relations;

  long vertex_count() const {
    long v = 1;
    for (const auto& f : factors) v *= f->q();
    return v;
  }

  /// Squarefree product of the distinct characteristics; every character
  /// value lives in Q(zeta_n) for this n.
  long ambient_order() const {
    long n = 1;
    for (const auto& f : factors)
      if (n % f->p() != 0) n *= f->p();
    return n;
  }

  std::vector<long> tuple_of(long v) const {
    std::vector<long> t(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      t[i] = v % factors[i]->q();
      v /= factors[i]->q();
    }
    return t;
  }

  long index_of(const std::vector<long>& t) const {
    long v = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) v = v * factors[i]->q() + t[i];
    return v;
  }

  long add(long u, long v) const {
    auto a = tuple_of(u), b = tuple_of(v);
    for (std::size_t i = 0; i < factors.size(); ++i) a[i] = factors[i]->add(a[i], b[i]);
    return index_of(a);
  }

  long sub(long u, long v) const {
    auto a = tuple_of(u), b = tuple_of(v);
    for (std::size_t i = 0; i < factors.size(); ++i) a[i] = factors[i]->sub(a[i], b[i]);
    return index_of(a);
  }

  long neg(long u) const {
    auto a = tuple_of(u);
    for (std::size_t i = 0; i < factors.size(); ++i) a[i] = factors[i]->neg(a[i]);
    return index_of(a);
  }

  /// N_0 = {0} and the relations partition the group.
  bool is_partition() const {
    if (relations.empty() || relations[0] != std::vector<long>{0}) return false;
    std::vector<int> seen(static_cast<std::size_t>(vertex_count()), 0);
    for (const auto& rel : relations)
      for (long x : rel) {
        if (x < 0 || x >= vertex_count() || seen[static_cast<std::size_t>(x)]++) return false;
      }
    for (int s : seen)
      if (!s) return false;
    return true;
  }

  /// Adjacency matrix of a relation: A[u][v] = 1 iff v - u is in N_i.
  IntMatrix adjacency(std::size_t i) const {
    const long v = vertex_count();
    IntMatrix a(v, v);
    std::vector<char> member(static_cast<std::size_t>(v), 0);
    for (long x : relations[i]) member[static_cast<std::size_t>(x)] = 1;
    for (long u = 0; u < v; ++u)
      for (long w = 0; w < v; ++w)
        if (member[static_cast<std::size_t>(sub(w, u))]) a.at(u, w) = 1;
    return a;
  }
};

/// Exponent e with chi_w(x) = zeta_n^e, where chi_w is the canonical product
/// character indexed by the group element w.
inline long char_exponent(const TranslationData& t, long w, long x) {
  const long n = t.ambient_order();
  auto wt = t.tuple_of(w), xt = t.tuple_of(x);
  long e = 0;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    const FieldSpec& f = *t.factors[i];
    e = (e + additive_character_exponent(f, f.mul(wt[i], xt[i]), n)) % n;
  }
  return e;
}

}  // namespace pairscheme
