#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairscheme/cyclotomic.hpp"
#include "pairscheme/translation.hpp"

namespace pairscheme {

struct EigenRow {
  std::string label;
  long multiplicity = 0;
  bool trivial = false;  // the row of the all-ones character, i.e. the valencies
  std::vector<Cyclotomic> entries;
};

/// First eigenmatrix: rows are eigenspaces (with multiplicities), columns are
/// relations, entries exact elements of Q(zeta_n).
struct Eigenmatrix {
  long order = 1;
  std::vector<std::string> col_labels;
  std::vector<EigenRow> rows;

  std::size_t size() const { return rows.size(); }

  std::vector<Rational> valencies() const {
    std::vector<Rational> k;
    for (const auto& row : rows)
      if (row.trivial) {
        for (const auto& e : row.entries) k.push_back(e.as_rational().value());
        return k;
      }
    throw std::logic_error("Eigenmatrix: no valency row");
  }
};

namespace detail {

inline bool row_less(const EigenRow& a, const EigenRow& b) {
  if (a.trivial != b.trivial) return a.trivial;
  if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
  for (std::size_t i = 0; i < a.entries.size() && i < b.entries.size(); ++i) {
    int c = compare(a.entries[i], b.entries[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace detail

/// Canonical row order: valency row first, then descending multiplicity,
/// ties broken lexicographically on the entries' coefficient vectors.
inline void canonical_order(Eigenmatrix& p) {
  std::stable_sort(p.rows.begin(), p.rows.end(), detail::row_less);
}

/// Equality of the ordered content (labels are not compared).
inline bool same_up_to_labels(const Eigenmatrix& a, const Eigenmatrix& b) {
  if (a.order != b.order || a.rows.size() != b.rows.size()) return false;
  Eigenmatrix ca = a, cb = b;
  canonical_order(ca);
  canonical_order(cb);
  for (std::size_t i = 0; i < ca.rows.size(); ++i) {
    if (ca.rows[i].multiplicity != cb.rows[i].multiplicity) return false;
    if (ca.rows[i].entries != cb.rows[i].entries) return false;
  }
  return true;
}

struct CharEigenData {
  Eigenmatrix p;
  std::vector<int> eigenspace_of;  // group element w -> row index of chi_w
};

/// First eigenmatrix of a translation scheme from character sums: the row of
/// the character chi_w has entries sum over x in N_i of chi_w(x); identical
/// rows are grouped into eigenspaces whose multiplicity is the number of
/// characters they absorb.
inline CharEigenData eigenmatrix_from_characters(const TranslationData& t) {
  if (!t.is_partition()) throw std::invalid_argument("eigenmatrix_from_characters: relations do not partition the group");
  const long v = t.vertex_count();
  const long n = t.ambient_order();
  const std::size_t nc = t.relations.size();

  // Per-factor exponent tables: exponent of chi restricted to one coordinate.
  std::vector<std::vector<long>> w_tab(t.factors.size());
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    const FieldSpec& f = *t.factors[i];
    w_tab[i].resize(static_cast<std::size_t>(f.q()) * static_cast<std::size_t>(f.q()));
    for (long a = 0; a < f.q(); ++a)
      for (long b = 0; b < f.q(); ++b)
        w_tab[i][static_cast<std::size_t>(a) * static_cast<std::size_t>(f.q()) + static_cast<std::size_t>(b)] =
            additive_character_exponent(f, f.mul(a, b), n);
  }
  std::vector<std::vector<long>> tuples(static_cast<std::size_t>(v));
  for (long x = 0; x < v; ++x) tuples[static_cast<std::size_t>(x)] = t.tuple_of(x);

  struct RowKey {
    std::vector<Cyclotomic> entries;
    bool operator<(const RowKey& o) const {
      for (std::size_t i = 0; i < entries.size(); ++i) {
        int c = compare(entries[i], o.entries[i]);
        if (c != 0) return c < 0;
      }
      return false;
    }
  };
  std::map<RowKey, int> groups;
  CharEigenData out;
  out.eigenspace_of.assign(static_cast<std::size_t>(v), -1);
  std::vector<long> mult;
  std::vector<bool> trivial_flag;
  std::vector<std::vector<Cyclotomic>> reps;

  std::vector<Integer> counts(static_cast<std::size_t>(n));
  for (long w = 0; w < v; ++w) {
    const auto& wt = tuples[static_cast<std::size_t>(w)];
    std::vector<Cyclotomic> row;
    row.reserve(nc);
    for (std::size_t i = 0; i < nc; ++i) {
      std::fill(counts.begin(), counts.end(), Integer(0));
      for (long x : t.relations[i]) {
        const auto& xt = tuples[static_cast<std::size_t>(x)];
        long e = 0;
        for (std::size_t fct = 0; fct < t.factors.size(); ++fct) {
          const long q = t.factors[fct]->q();
          e += w_tab[fct][static_cast<std::size_t>(wt[fct]) * static_cast<std::size_t>(q) + static_cast<std::size_t>(xt[fct])];
        }
        ++counts[static_cast<std::size_t>(e % n)];
      }
      row.push_back(Cyclotomic::from_exponent_counts(n, counts));
    }
    auto [it, inserted] = groups.try_emplace(RowKey{row}, static_cast<int>(reps.size()));
    if (inserted) {
      reps.push_back(std::move(row));
      mult.push_back(0);
      trivial_flag.push_back(false);
    }
    int g = it->second;
    ++mult[static_cast<std::size_t>(g)];
    if (w == 0) trivial_flag[static_cast<std::size_t>(g)] = true;
    out.eigenspace_of[static_cast<std::size_t>(w)] = g;
  }

  out.p.order = n;
  out.p.col_labels = t.labels;
  out.p.rows.reserve(reps.size());
  for (std::size_t g = 0; g < reps.size(); ++g)
    out.p.rows.push_back(EigenRow{"E" + std::to_string(g), mult[g], trivial_flag[g], std::move(reps[g])});

  // canonical order, then remap the character -> row indices
  std::vector<int> order_map(out.p.rows.size());
  {
    std::vector<std::size_t> perm(out.p.rows.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return detail::row_less(out.p.rows[a], out.p.rows[b]);
    });
    std::vector<EigenRow> sorted;
    sorted.reserve(perm.size());
    for (std::size_t pos = 0; pos < perm.size(); ++pos) {
      order_map[perm[pos]] = static_cast<int>(pos);
      sorted.push_back(std::move(out.p.rows[perm[pos]]));
    }
    for (std::size_t pos = 0; pos < sorted.size(); ++pos) sorted[pos].label = "E" + std::to_string(pos);
    out.p.rows = std::move(sorted);
  }
  for (auto& g : out.eigenspace_of) g = order_map[static_cast<std::size_t>(g)];
  return out;
}

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

/// Q = v P^{-1} by exact Gaussian elimination over Q(zeta_n); the product
/// P Q = v I is re-verified before returning. Rows of Q are relations,
/// columns are eigenspaces.
inline CycMatrix second_eigenmatrix(const Eigenmatrix& p, long v) {
  const std::size_t n = p.rows.size();
  if (n == 0 || p.rows[0].entries.size() != n)
    throw std::invalid_argument("second_eigenmatrix: P must be square");
  const long order = p.order;
  CycMatrix a(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(order)));
  CycMatrix inv(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(order)));
  for (std::size_t i = 0; i < n; ++i) {
    inv[i][i] = Cyclotomic::one(order);
    for (std::size_t j = 0; j < n; ++j) a[i][j] = p.rows[i].entries[j];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("second_eigenmatrix: singular eigenmatrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Cyclotomic scale = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Cyclotomic f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  const Rational vr(v);
  CycMatrix q(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(order)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = inv[i][j] * vr;
  // verify P Q = v I exactly
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Cyclotomic s = Cyclotomic::zero(order);
      for (std::size_t k = 0; k < n; ++k) s += p.rows[i].entries[k] * q[k][j];
      if (!(i == j ? s.equals_integer(v) : s.is_zero()))
        throw std::logic_error("second_eigenmatrix: P Q != v I");
    }
  return q;
}

/// Searches for row and column rearrangements with P = conj(Q). Rows are
/// matched only when their entry multisets agree (this also pairs valencies
/// with multiplicities); each accepted row assignment narrows the feasible
/// column map, and a perfect matching on the surviving column candidates
/// completes the witness. Returns (rho, kappa) with
/// P[i][j] = conj(Q)[rho(i)][kappa(j)].
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> check_self_dual(const Eigenmatrix& p,
                                                                                    const CycMatrix& q) {
  const std::size_t n = p.rows.size();
  if (n == 0 || n > 31 || q.size() != n) return std::nullopt;
  CycMatrix qc(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(p.order)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) qc[i][j] = q[i][j].conj();

  auto sorted_row = [](const std::vector<Cyclotomic>& row) {
    std::vector<Cyclotomic> s = row;
    std::sort(s.begin(), s.end(), [](const Cyclotomic& a, const Cyclotomic& b) { return compare(a, b) < 0; });
    return s;
  };
  std::vector<std::vector<Cyclotomic>> p_sorted(n), q_sorted(n);
  for (std::size_t i = 0; i < n; ++i) {
    p_sorted[i] = sorted_row(p.rows[i].entries);
    q_sorted[i] = sorted_row(qc[i]);
  }
  std::vector<std::vector<int>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r)
      if (p_sorted[i] == q_sorted[r]) candidates[i].push_back(static_cast<int>(r));
    if (candidates[i].empty()) return std::nullopt;
  }

  std::vector<std::size_t> row_order(n);
  for (std::size_t i = 0; i < n; ++i) row_order[i] = i;
  std::sort(row_order.begin(), row_order.end(),
            [&](std::size_t a, std::size_t b) { return candidates[a].size() < candidates[b].size(); });

  // allowed[j]: bitmask of conj(Q) columns still admissible for P column j
  const std::uint32_t full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1u);
  std::vector<std::uint32_t> allowed(n, full);
  std::vector<int> rho(n, -1);
  std::vector<int> rho_used(n, 0);

  auto column_matching = [&](const std::vector<std::uint32_t>& adm, std::vector<int>& kappa) -> bool {
    kappa.assign(n, -1);
    std::vector<int> owner(n, -1);  // qc column -> P column
    std::function<bool(std::size_t, std::uint32_t&)> augment = [&](std::size_t j, std::uint32_t& visited) -> bool {
      for (std::size_t e = 0; e < n; ++e) {
        if (!(adm[j] & (1u << e)) || (visited & (1u << e))) continue;
        visited |= 1u << e;
        if (owner[e] < 0 || augment(static_cast<std::size_t>(owner[e]), visited)) {
          owner[e] = static_cast<int>(j);
          kappa[j] = static_cast<int>(e);
          return true;
        }
      }
      return false;
    };
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t visited = 0;
      if (!augment(j, visited)) return false;
    }
    return true;
  };

  std::vector<int> kappa;
  std::function<bool(std::size_t)> assign = [&](std::size_t depth) -> bool {
    if (depth == n) return column_matching(allowed, kappa);
    const std::size_t i = row_order[depth];
    for (int r : candidates[i]) {
      if (rho_used[static_cast<std::size_t>(r)]) continue;
      std::vector<std::uint32_t> saved = allowed;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        std::uint32_t mask = 0;
        for (std::size_t e = 0; e < n; ++e)
          if (qc[static_cast<std::size_t>(r)][e] == p.rows[i].entries[j]) mask |= 1u << e;
        allowed[j] &= mask;
        if (allowed[j] == 0) ok = false;
      }
      if (ok) {
        rho[i] = r;
        rho_used[static_cast<std::size_t>(r)] = 1;
        if (assign(depth + 1)) return true;
        rho[i] = -1;
        rho_used[static_cast<std::size_t>(r)] = 0;
      }
      allowed = saved;
    }
    return false;
  };

  if (!assign(0)) return std::nullopt;
  // final full verification
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(p.rows[i].entries[j] == qc[static_cast<std::size_t>(rho[i])][static_cast<std::size_t>(kappa[j])]))
        return std::nullopt;
  return std::make_pair(rho, kappa);
}

/// m_j = v / sum_i p_ji conj(p_ji) / k_i must reproduce the character-count
/// multiplicities.
inline bool multiplicities_check(const Eigenmatrix& p, long v) {
  std::vector<Rational> k = p.valencies();
  for (const auto& row : p.rows) {
    Cyclotomic s = Cyclotomic::zero(p.order);
    for (std::size_t i = 0; i < row.entries.size(); ++i)
      s += row.entries[i] * row.entries[i].conj() * (Rational(1) / k[i]);
    // m_j * s = v exactly
    Cyclotomic lhs = s * Rational(row.multiplicity);
    if (!lhs.equals_integer(v)) return false;
  }
  return true;
}

}  // namespace pairscheme
