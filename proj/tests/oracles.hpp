#pragma once

// Test-only oracles, kept independent of the library paths they check.

#include <algorithm>
#include <random>
#include <vector>

#include "pairscheme/eigen.hpp"
#include "pairscheme/scheme.hpp"

namespace pairscheme::oracles {

/// Brute-force eigenvector check: for every class matrix A_i and every
/// character chi, verify (A_i chi)[u] = p_{e(chi), i} chi(u) entrywise,
/// working on the actual 0/1 matrices rather than the difference sets.
inline bool brute_force_eigen_ok(const SchemeInstance& s, const TranslationData& t, const CharEigenData& ce) {
  const long v = s.v;
  const long n = t.ambient_order();
  std::vector<long> expo(static_cast<std::size_t>(v) * static_cast<std::size_t>(v));
  for (long w = 0; w < v; ++w)
    for (long x = 0; x < v; ++x)
      expo[static_cast<std::size_t>(w) * static_cast<std::size_t>(v) + static_cast<std::size_t>(x)] =
          char_exponent(t, w, x);
  std::vector<Integer> counts(static_cast<std::size_t>(n));
  for (long w = 0; w < v; ++w) {
    const auto& row = ce.p.rows[static_cast<std::size_t>(ce.eigenspace_of[static_cast<std::size_t>(w)])];
    const long* we = &expo[static_cast<std::size_t>(w) * static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
      const IntMatrix& a = s.classes[i];
      for (long u = 0; u < v; ++u) {
        std::fill(counts.begin(), counts.end(), Integer(0));
        for (long x = 0; x < v; ++x)
          if (a(u, x)) ++counts[static_cast<std::size_t>(we[x])];
        Cyclotomic lhs = Cyclotomic::from_exponent_counts(n, counts);
        Cyclotomic rhs = row.entries[i] * Cyclotomic::root_power(n, we[u]);
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

/// Translation invariance of the matrix-built classes: A[u][v] must equal
/// A[u+z][v+z] for every shift z.
inline bool translation_invariant(const SchemeInstance& s, const TranslationData& t, std::mt19937& rng,
                                  int samples = 2000) {
  const long v = s.v;
  std::uniform_int_distribution<long> dist(0, v - 1);
  for (int k = 0; k < samples; ++k) {
    long u = dist(rng), w = dist(rng), z = dist(rng);
    long uz = t.add(u, z), wz = t.add(w, z);
    for (const auto& a : s.classes)
      if (a(u, w) != a(uz, wz)) return false;
  }
  return true;
}

/// Structural invariants of a first eigenmatrix: multiplicities sum to the
/// vertex count, the identity-class column is all ones, and the trivial row
/// carries the stated valencies.
inline bool eigen_shape_ok(const Eigenmatrix& p, long v, const std::vector<long>& valencies) {
  long mult_total = 0;
  bool trivial_seen = false;
  for (const auto& row : p.rows) {
    mult_total += row.multiplicity;
    if (row.entries.empty() || !row.entries[0].equals_integer(1)) return false;
    if (row.trivial) {
      trivial_seen = true;
      if (row.entries.size() != valencies.size()) return false;
      for (std::size_t j = 0; j < valencies.size(); ++j)
        if (!row.entries[j].equals_integer(valencies[j])) return false;
    }
  }
  return trivial_seen && mult_total == v;
}

/// The duality map built from the character bijection x -> chi_x: all
/// characters chi_d with d in N_j must share one eigenspace sigma(j), sigma
/// must be a bijection pairing valency k_j with multiplicity m_{sigma(j)},
/// and P[sigma(i)][j] = conj(Q)[i][sigma(j)] must hold entrywise.
inline bool canonical_duality_realized(const TranslationData& t, const CharEigenData& ce, const CycMatrix& q) {
  const std::size_t nc = t.relations.size();
  std::vector<int> sigma(nc, -1);
  std::vector<int> hit(nc, 0);
  for (std::size_t j = 0; j < nc; ++j) {
    for (long d : t.relations[j]) {
      int e = ce.eigenspace_of[static_cast<std::size_t>(d)];
      if (sigma[j] == -1) sigma[j] = e;
      if (sigma[j] != e) return false;  // not constant on the relation
    }
    if (sigma[j] < 0 || hit[static_cast<std::size_t>(sigma[j])]++) return false;
  }
  auto valencies = ce.p.valencies();
  for (std::size_t j = 0; j < nc; ++j) {
    if (Rational(ce.p.rows[static_cast<std::size_t>(sigma[j])].multiplicity) != valencies[j]) return false;
  }
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      const Cyclotomic& lhs = ce.p.rows[static_cast<std::size_t>(sigma[i])].entries[j];
      Cyclotomic rhs = q[i][static_cast<std::size_t>(sigma[j])].conj();
      if (!(lhs == rhs)) return false;
    }
  return true;
}

}  // namespace pairscheme::oracles
