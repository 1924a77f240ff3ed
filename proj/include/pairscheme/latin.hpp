#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairscheme/checks.hpp"
#include "pairscheme/finite_field.hpp"

namespace pairscheme {

/// A Latin square over symbols 0..order-1. Field-derived squares keep their
/// spec so cells can be read back as field elements; relabeled squares drop
/// it.
struct LatinSquare {
  long order = 0;
  std::shared_ptr<const FieldSpec> field;  // null after relabeling
  long beta = -1;                          // defining multiplier, if field-derived
  std::vector<long> cells;                 // row-major

  long cell(long r, long c) const { return cells[static_cast<std::size_t>(r * order + c)]; }
  long& cell(long r, long c) { return cells[static_cast<std::size_t>(r * order + c)]; }
};

/// L_beta(a, b) = beta(-a + b) over F_r, beta nonzero.
inline LatinSquare latin_square(std::shared_ptr<const FieldSpec> f, long beta) {
  if (beta == 0) throw std::invalid_argument("latin_square: beta must be nonzero");
  const long r = f->q();
  LatinSquare L;
  L.order = r;
  L.field = f;
  L.beta = beta;
  L.cells.resize(static_cast<std::size_t>(r * r));
  for (long a = 0; a < r; ++a)
    for (long b = 0; b < r; ++b) L.cell(a, b) = f->mul(beta, f->sub(b, a));
  return L;
}

inline bool is_latin(const LatinSquare& L) {
  const long n = L.order;
  for (long i = 0; i < n; ++i) {
    std::vector<int> row_seen(static_cast<std::size_t>(n), 0), col_seen(static_cast<std::size_t>(n), 0);
    for (long j = 0; j < n; ++j) {
      long rv = L.cell(i, j), cv = L.cell(j, i);
      if (rv < 0 || rv >= n || cv < 0 || cv >= n) return false;
      row_seen[static_cast<std::size_t>(rv)]++;
      col_seen[static_cast<std::size_t>(cv)]++;
    }
    for (long v = 0; v < n; ++v)
      if (row_seen[static_cast<std::size_t>(v)] != 1 || col_seen[static_cast<std::size_t>(v)] != 1) return false;
  }
  return true;
}

/// Suitability: superimposing any row of L1 on any row of L2 yields exactly
/// one coincident symbol. Ordered row pairs, including equal indices.
inline bool is_suitable(const LatinSquare& L1, const LatinSquare& L2) {
  if (L1.order != L2.order) throw std::invalid_argument("is_suitable: order mismatch");
  const long n = L1.order;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long coincidences = 0;
      for (long k = 0; k < n; ++k)
        if (L1.cell(i, k) == L2.cell(j, k)) ++coincidences;
      if (coincidences != 1) return false;
    }
  return true;
}

/// The disjoint permutation components of a Latin square: perm[s][a] = b
/// where L(a, b) = s. For a field-derived square this solves
/// beta(-a + b) = gamma, so the component at gamma = 0 is the identity.
struct PermComponents {
  long order = 0;
  long beta = -1;
  std::vector<std::vector<long>> perm;  // indexed by symbol
};

inline PermComponents perm_components(const LatinSquare& L) {
  PermComponents out;
  out.order = L.order;
  out.beta = L.beta;
  out.perm.assign(static_cast<std::size_t>(L.order), std::vector<long>(static_cast<std::size_t>(L.order), -1));
  for (long a = 0; a < L.order; ++a)
    for (long b = 0; b < L.order; ++b) {
      long s = L.cell(a, b);
      if (out.perm[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)] != -1)
        throw std::invalid_argument("perm_components: not a Latin square");
      out.perm[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)] = b;
    }
  return out;
}

/// perm[a] = a + gamma / beta, the component of L_beta at symbol gamma,
/// without building the square.
inline std::vector<long> latin_component(const FieldSpec& f, long beta, long gamma) {
  if (beta == 0) throw std::invalid_argument("latin_component: beta must be nonzero");
  std::vector<long> perm(static_cast<std::size_t>(f.q()));
  const long shift = f.div(gamma, beta);
  for (long a = 0; a < f.q(); ++a) perm[static_cast<std::size_t>(a)] = f.add(a, shift);
  return perm;
}

/// Cellwise application of a symbol bijection.
inline LatinSquare relabel(const LatinSquare& L, const std::vector<long>& symbol_map) {
  if (static_cast<long>(symbol_map.size()) != L.order) throw std::invalid_argument("relabel: map size mismatch");
  std::vector<int> seen(symbol_map.size(), 0);
  for (long v : symbol_map) {
    if (v < 0 || v >= L.order || seen[static_cast<std::size_t>(v)]++)
      throw std::invalid_argument("relabel: not a bijection");
  }
  LatinSquare out = L;
  out.field = nullptr;
  out.beta = -1;
  for (auto& c : out.cells) c = symbol_map[static_cast<std::size_t>(c)];
  return out;
}

inline std::string latin_csv(const LatinSquare& L) {
  std::string out;
  for (long a = 0; a < L.order; ++a) {
    for (long b = 0; b < L.order; ++b) {
      if (b) out += ",";
      out += L.field ? L.field->label(L.cell(a, b)) : std::to_string(L.cell(a, b));
    }
    out += "\n";
  }
  return out;
}

namespace detail {

inline bool perm_eq(const std::vector<long>& a, const std::vector<long>& b) { return a == b; }

}  // namespace detail

/// Exhaustive verification of the component calculus over F_r, all nonzero
/// beta, beta' and all gamma, gamma':
///   (i)   P_{b b', g b'} = P_{b, g}
///   (ii)  P_{b, g} P_{b', g'} = P_{b b', b g' + b' g}
///   (iii) sum_g P_{b b', (b + b') g} = qI when b + b' = 0, J otherwise
///   (iv)  sum over distinct nonzero g, g' of P_{b b', b g' + b' g} =
///         (q-2)(J-I) when b + b' = 0, 2I + (q-3)J otherwise
inline CheckReport check_perm_calculus(const FieldSpec& f) {
  const long q = f.q();
  CheckReport report;
  auto perm_of = [&](long beta, long gamma) { return latin_component(f, beta, gamma); };
  auto fail = [&](const std::string& name, long a, const std::string& lhs, const std::string& rhs) {
    report.clauses.push_back({name, false, CheckWitness{a, -1, lhs, rhs}});
  };

  {  // (i)
    bool ok = true;
    for (long b = 1; b < q && ok; ++b)
      for (long b2 = 1; b2 < q && ok; ++b2)
        for (long g = 0; g < q && ok; ++g)
          if (!detail::perm_eq(perm_of(f.mul(b, b2), f.mul(g, b2)), perm_of(b, g))) {
            fail("(i) rescaling", g, "P(" + std::to_string(f.mul(b, b2)) + "," + std::to_string(f.mul(g, b2)) + ")",
                 "P(" + std::to_string(b) + "," + std::to_string(g) + ")");
            ok = false;
          }
    if (ok) report.clauses.push_back({"(i) rescaling", true, std::nullopt});
  }

  {  // (ii)
    bool ok = true;
    for (long b = 1; b < q && ok; ++b)
      for (long b2 = 1; b2 < q && ok; ++b2)
        for (long g = 0; g < q && ok; ++g)
          for (long g2 = 0; g2 < q && ok; ++g2) {
            auto p1 = perm_of(b, g);
            auto p2 = perm_of(b2, g2);
            std::vector<long> prod(static_cast<std::size_t>(q));
            for (long a = 0; a < q; ++a) prod[static_cast<std::size_t>(a)] = p2[static_cast<std::size_t>(p1[static_cast<std::size_t>(a)])];
            auto rhs = perm_of(f.mul(b, b2), f.add(f.mul(b, g2), f.mul(b2, g)));
            if (!detail::perm_eq(prod, rhs)) {
              fail("(ii) composition", b, "P(" + std::to_string(b) + "," + std::to_string(g) + ")P(" + std::to_string(b2) + "," + std::to_string(g2) + ")", "composite");
              ok = false;
            }
          }
    if (ok) report.clauses.push_back({"(ii) composition", true, std::nullopt});
  }

  auto perm_count_sum = [&](long beta, const std::vector<long>& gammas) {
    // entry counts of a sum of permutation matrices, as a dense q x q grid
    std::vector<long> acc(static_cast<std::size_t>(q * q), 0);
    for (long g : gammas) {
      auto p = perm_of(beta, g);
      for (long a = 0; a < q; ++a) acc[static_cast<std::size_t>(a * q + p[static_cast<std::size_t>(a)])]++;
    }
    return acc;
  };
  auto expect = [&](const std::vector<long>& acc, long diag, long off) {
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b)
        if (acc[static_cast<std::size_t>(a * q + b)] != (a == b ? diag : off)) return std::make_pair(a, b);
    return std::make_pair(-1L, -1L);
  };

  {  // (iii)
    bool ok = true;
    for (long b = 1; b < q && ok; ++b)
      for (long b2 = 1; b2 < q && ok; ++b2) {
        std::vector<long> gammas;
        const long s = f.add(b, b2);
        for (long g = 0; g < q; ++g) gammas.push_back(f.mul(s, g));
        auto acc = perm_count_sum(f.mul(b, b2), gammas);
        auto [diag, off] = (s == 0) ? std::make_pair(q, 0L) : std::make_pair(1L, 1L);
        auto bad = expect(acc, diag, off);
        if (bad.first >= 0) {
          fail("(iii) diagonal sum", bad.first, std::to_string(acc[static_cast<std::size_t>(bad.first * q + bad.second)]),
               std::to_string(bad.first == bad.second ? diag : off));
          ok = false;
        }
      }
    if (ok) report.clauses.push_back({"(iii) diagonal sum", true, std::nullopt});
  }

  {  // (iv)
    bool ok = true;
    for (long b = 1; b < q && ok; ++b)
      for (long b2 = 1; b2 < q && ok; ++b2) {
        std::vector<long> gammas;
        for (long g = 1; g < q; ++g)
          for (long g2 = 1; g2 < q; ++g2) {
            if (g == g2) continue;
            gammas.push_back(f.add(f.mul(b, g2), f.mul(b2, g)));
          }
        auto acc = perm_count_sum(f.mul(b, b2), gammas);
        const bool zero_sum = f.add(b, b2) == 0;
        long diag = zero_sum ? 0 : 2 + (q - 3);
        long off = zero_sum ? q - 2 : q - 3;
        auto bad = expect(acc, diag, off);
        if (bad.first >= 0) {
          fail("(iv) off-diagonal sum", bad.first, std::to_string(acc[static_cast<std::size_t>(bad.first * q + bad.second)]),
               std::to_string(bad.first == bad.second ? diag : off));
          ok = false;
        }
      }
    if (ok) report.clauses.push_back({"(iv) off-diagonal sum", true, std::nullopt});
  }

  return report;
}

}  // namespace pairscheme
