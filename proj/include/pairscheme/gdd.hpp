#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairscheme/eigen.hpp"
#include "pairscheme/pair_context.hpp"
#include "pairscheme/scheme.hpp"
#include "pairscheme/twin.hpp"

namespace pairscheme {

/// Construction from a pair q, q+1 of prime powers: auxiliary matrices over
/// F_q, Latin squares over F_{q+1}, varphi onto F_q plus the single symbol x.
struct GddContext : PairContext {};

inline GddContext make_gdd_context(long q, std::optional<std::vector<AuxLabel>> varphi = std::nullopt) {
  auto pq = is_prime_power(q);
  auto pr = is_prime_power(q + 1);
  if (!pq) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (!pr) throw std::invalid_argument(std::to_string(q + 1) + " is not a prime power");
  GddContext ctx;
  ctx.fq = make_field(pq->first, pq->second);
  ctx.fr = make_field(pr->first, pr->second);
  if (varphi) {
    ctx.varphi = std::move(*varphi);
  } else {
    ctx.varphi.push_back(AuxLabel::x());
    for (long a = 0; a < q; ++a) ctx.varphi.push_back(AuxLabel::element(a));
  }
  detail::validate_varphi(ctx, /*with_y=*/false);
  ctx.aux = build_aux_family(ctx.fq);
  return ctx;
}

/// Exact verification of the incidence-matrix identities of the family:
///   (i)    N_beta^T = N_{-beta}
///   (ii)   N_beta N_{-beta} = q^2 I - q I_{(q+1)q} (x) J_q
///                             + I_{q+1} (x) J_{q^2} + (q-1) J
///   (iii)  N_beta N_beta' = q N_{beta beta'/(beta+beta')}
///                             + 2 I (x) J_{q^2} + (q-2) J  when beta+beta' != 0
///   (iv)   N_beta (I_{(q+1)q} (x) J_q) = (I_{(q+1)q} (x) J_q) N_beta
///                             = J - I_{q+1} (x) J_{q^2}
///   (v)    N_beta (I (x) J_{q^2}) = (I (x) J_{q^2}) N_beta
///                             = q (J - I (x) J_{q^2})
///   (vi)   sum of all N_beta = (J - I) (x) (q I + (J_q - I_q) (x) J_q)
/// plus pairwise commutation.
inline CheckReport check_incidence_identities(const GddContext& ctx) {
  const long q = ctx.q(), r = ctx.r(), d = ctx.dimension();
  const IntMatrix I = IntMatrix::identity(d);
  const IntMatrix J = IntMatrix::all_ones(d);
  const IntMatrix block_proj = IntMatrix::kronecker(IntMatrix::identity(r), IntMatrix::all_ones(q * q));
  const IntMatrix row_proj = IntMatrix::kronecker(IntMatrix::identity(r * q), IntMatrix::all_ones(q));
  auto n_of = all_incidence_matrices(ctx);
  auto N = [&](long beta) -> const IntMatrix& { return n_of[static_cast<std::size_t>(beta - 1)]; };

  CheckReport report;

  {
    ClauseResult res{"(i) transpose", true, std::nullopt};
    for (long beta = 1; beta < r && res.ok; ++beta) {
      auto diff = N(beta).transposed().first_mismatch(N(ctx.fr->neg(beta)));
      if (diff) {
        auto [row, col, a, b] = *diff;
        res.ok = false;
        res.witness = CheckWitness{row, col, std::to_string(a), std::to_string(b)};
        res.name += " at beta=" + ctx.fr->label(beta);
      }
    }
    report.clauses.push_back(std::move(res));
  }

  ClauseResult opposite{"(ii) opposite product", true, std::nullopt};
  ClauseResult cross{"(iii) cross product", true, std::nullopt};
  ClauseResult commute{"commuting", true, std::nullopt};
  const IntMatrix opposite_rhs = q * q * I - q * row_proj + block_proj + (q - 1) * J;
  for (long b1 = 1; b1 < r && opposite.ok && cross.ok && commute.ok; ++b1)
    for (long b2 = b1; b2 < r && opposite.ok && cross.ok && commute.ok; ++b2) {
      IntMatrix p12 = N(b1) * N(b2);
      if (b1 != b2) {
        IntMatrix p21 = N(b2) * N(b1);
        if (auto diff = p12.first_mismatch(p21)) {
          auto [row, col, a, b] = *diff;
          commute.ok = false;
          commute.witness = CheckWitness{row, col, std::to_string(a), std::to_string(b)};
          commute.name += " at (" + ctx.fr->label(b1) + "," + ctx.fr->label(b2) + ")";
          break;
        }
      }
      const long s = ctx.fr->add(b1, b2);
      if (s == 0) {
        auto diff = p12.first_mismatch(opposite_rhs);
        if (diff) {
          auto [row, col, a, b] = *diff;
          opposite.ok = false;
          opposite.witness = CheckWitness{row, col, std::to_string(a), std::to_string(b)};
          opposite.name += " at beta=" + ctx.fr->label(b1);
        }
      } else {
        long target = ctx.fr->div(ctx.fr->mul(b1, b2), s);
        IntMatrix rhs = q * N(target) + 2 * block_proj + (q - 2) * J;
        auto diff = p12.first_mismatch(rhs);
        if (diff) {
          auto [row, col, a, b] = *diff;
          cross.ok = false;
          cross.witness = CheckWitness{row, col, std::to_string(a), std::to_string(b)};
          cross.name += " at (" + ctx.fr->label(b1) + "," + ctx.fr->label(b2) + ")";
        }
      }
    }
  report.clauses.push_back(std::move(opposite));
  report.clauses.push_back(std::move(cross));

  {
    ClauseResult res{"(iv) row projector", true, std::nullopt};
    IntMatrix rhs = J - block_proj;
    for (long beta = 1; beta < r && res.ok; ++beta) {
      auto d1 = (N(beta) * row_proj).first_mismatch(rhs);
      auto d2 = (row_proj * N(beta)).first_mismatch(rhs);
      if (d1 || d2) {
        auto [row, col, a, b] = d1 ? *d1 : *d2;
        res.ok = false;
        res.witness = CheckWitness{row, col, std::to_string(a), std::to_string(b)};
        res.name += " at beta=" + ctx.fr->label(beta);
      }
    }
    report.clauses.push_back(std::move(res));
  }

  {
    ClauseResult res{"(v) block projector", true, std::nullopt};
    IntMatrix rhs = q * (J - block_proj);
    for (long beta = 1; beta < r && res.ok; ++beta) {
      auto d1 = (N(beta) * block_proj).first_mismatch(rhs);
      auto d2 = (block_proj * N(beta)).first_mismatch(rhs);
      if (d1 || d2) {
        auto [row, col, a, b] = d1 ? *d1 : *d2;
        res.ok = false;
        res.witness = CheckWitness{row, col, std::to_string(a), std::to_string(b)};
        res.name += " at beta=" + ctx.fr->label(beta);
      }
    }
    report.clauses.push_back(std::move(res));
  }

  {
    ClauseResult res{"(vi) total sum", true, std::nullopt};
    IntMatrix total(d, d);
    for (long beta = 1; beta < r; ++beta) total = total + N(beta);
    IntMatrix inner = q * IntMatrix::identity(q * q) +
                      IntMatrix::kronecker(IntMatrix::all_ones(q) - IntMatrix::identity(q), IntMatrix::all_ones(q));
    IntMatrix rhs = IntMatrix::kronecker(IntMatrix::all_ones(r) - IntMatrix::identity(r), inner);
    auto diff = total.first_mismatch(rhs);
    if (diff) {
      auto [row, col, a, b] = *diff;
      res.ok = false;
      res.witness = CheckWitness{row, col, std::to_string(a), std::to_string(b)};
    }
    report.clauses.push_back(std::move(res));
  }

  report.clauses.push_back(std::move(commute));
  return report;
}

/// The augmented incidence matrices M = N_beta + I (x) (J_{q^2} - I_q (x) J_q)
/// must satisfy M M^T = q^2 I + (q-1)(q-3) I (x) J_{q^2} + 3(q-1) J and form
/// symmetric group divisible designs with parameters
/// ((q+1)q^2, 2q^2-q, q+1, q^2, q(q-1), 3(q-1)).
inline CheckReport check_augmented_design(const GddContext& ctx) {
  const long q = ctx.q(), r = ctx.r(), d = ctx.dimension();
  const IntMatrix I = IntMatrix::identity(d);
  const IntMatrix J = IntMatrix::all_ones(d);
  const IntMatrix block_proj = IntMatrix::kronecker(IntMatrix::identity(r), IntMatrix::all_ones(q * q));
  IntMatrix complement = IntMatrix::kronecker(
      IntMatrix::identity(r), IntMatrix::all_ones(q * q) - IntMatrix::kronecker(IntMatrix::identity(q), IntMatrix::all_ones(q)));
  const IntMatrix product_rhs = q * q * I + ((q - 1) * (q - 3)) * block_proj + (3 * (q - 1)) * J;

  CheckReport report;
  ClauseResult prod{"augmented product identity", true, std::nullopt};
  ClauseResult sgdd{"sgdd parameters", true, std::nullopt};
  for (long beta = 1; beta < r && prod.ok && sgdd.ok; ++beta) {
    IntMatrix m = incidence_matrix(ctx, beta) + complement;
    auto diff = (m * m.transposed()).first_mismatch(product_rhs);
    if (diff) {
      auto [row, col, a, b] = *diff;
      prod.ok = false;
      prod.witness = CheckWitness{row, col, std::to_string(a), std::to_string(b)};
      prod.name += " at beta=" + ctx.fr->label(beta);
    }
    if (!verify_sgdd(m, d, 2 * q * q - q, r, q * q, q * (q - 1), 3 * (q - 1))) {
      sgdd.ok = false;
      sgdd.witness = CheckWitness{beta, -1, "sgdd equation fails",
                                  "(" + std::to_string(d) + "," + std::to_string(2 * q * q - q) + "," + std::to_string(r) +
                                      "," + std::to_string(q * q) + "," + std::to_string(q * (q - 1)) + "," +
                                      std::to_string(3 * (q - 1)) + ")"};
      sgdd.name += " at beta=" + ctx.fr->label(beta);
    }
  }
  report.clauses.push_back(std::move(prod));
  report.clauses.push_back(std::move(sgdd));
  return report;
}

/// The q+4 classes: identity, the two within-block classes, the two
/// across-block diagonal classes, and N_beta minus the shared class for each
/// nonzero beta. Matrix and relation-set routes must coincide.
inline SchemeBuild build_gdd_scheme(const GddContext& ctx) {
  const long q = ctx.q(), r = ctx.r(), d = ctx.dimension();
  SchemeBuild out;
  out.incidence = all_incidence_matrices(ctx);

  const IntMatrix iq = IntMatrix::identity(q);
  const IntMatrix jq = IntMatrix::all_ones(q);
  const IntMatrix ir = IntMatrix::identity(r);
  const IntMatrix jr = IntMatrix::all_ones(r);

  out.scheme.v = d;
  out.scheme.labels = {"R0", "R1", "R2", "R3", "R4"};
  out.scheme.classes.push_back(IntMatrix::identity(d));
  out.scheme.classes.push_back(IntMatrix::kronecker(ir, IntMatrix::kronecker(iq, jq - iq)));
  out.scheme.classes.push_back(IntMatrix::kronecker(ir, IntMatrix::kronecker(jq - iq, jq)));
  out.scheme.classes.push_back(IntMatrix::kronecker(jr - ir, IntMatrix::identity(q * q)));
  out.scheme.classes.push_back(IntMatrix::kronecker(jr - ir, IntMatrix::kronecker(iq, jq - iq)));
  for (long beta = 1; beta < r; ++beta) {
    out.scheme.labels.push_back("R5(" + ctx.fr->label(beta) + ")");
    out.scheme.classes.push_back(out.incidence[static_cast<std::size_t>(beta - 1)] - out.scheme.classes[3]);
  }

  out.data.factors = {ctx.fr, ctx.fq, ctx.fq};
  out.data.labels = out.scheme.labels;
  out.data.relations.resize(out.scheme.labels.size());
  out.data.relations[0] = {0};
  auto idx = [&](long b, long a1, long a2) { return (b * q + a1) * q + a2; };
  for (long a2 = 1; a2 < q; ++a2) out.data.relations[1].push_back(idx(0, 0, a2));
  for (long a1 = 1; a1 < q; ++a1)
    for (long a2 = 0; a2 < q; ++a2) out.data.relations[2].push_back(idx(0, a1, a2));
  for (long b = 1; b < r; ++b) out.data.relations[3].push_back(idx(b, 0, 0));
  for (long b = 1; b < r; ++b)
    for (long a2 = 1; a2 < q; ++a2) out.data.relations[4].push_back(idx(b, 0, a2));
  for (long beta = 1; beta < r; ++beta) {
    auto& rel = out.data.relations[static_cast<std::size_t>(4 + beta)];
    for (long db = 1; db < r; ++db) {
      const AuxLabel& lab = ctx.varphi[static_cast<std::size_t>(ctx.fr->mul(beta, db))];
      for (long d1 = 1; d1 < q; ++d1) rel.push_back(idx(db, d1, ctx.fq->mul(lab.elem, d1)));
    }
    std::sort(rel.begin(), rel.end());
  }

  for (std::size_t i = 0; i < out.scheme.classes.size(); ++i) {
    IntMatrix from_sets = out.data.adjacency(i);
    if (auto diff = from_sets.first_mismatch(out.scheme.classes[i])) {
      auto [row, col, a, b] = *diff;
      throw ConstructionError("gdd scheme: class " + out.scheme.labels[i] + " matrix and set forms disagree at (" +
                              std::to_string(row) + "," + std::to_string(col) + ")");
    }
  }
  out.scheme.translation = out.data;
  return out;
}

/// Closed-form first eigenmatrix; family entries are q chi(beta~/beta) + 1
/// with chi the canonical additive character of F_{q+1}.
inline Eigenmatrix closed_form_eigenmatrix_gdd(const GddContext& ctx) {
  const long q = ctx.q(), r = ctx.r();
  TranslationData t;
  t.factors = {ctx.fr, ctx.fq, ctx.fq};
  const long n = t.ambient_order();

  Eigenmatrix p;
  p.order = n;
  p.col_labels = {"R0", "R1", "R2", "R3", "R4"};
  for (long beta = 1; beta < r; ++beta) p.col_labels.push_back("R5(" + ctx.fr->label(beta) + ")");

  auto c = [&](long v) { return Cyclotomic::from_integer(n, v); };
  auto row = [&](long e0, long e1, long e2, long e3, long e4, std::vector<Cyclotomic> tail) {
    std::vector<Cyclotomic> out{c(e0), c(e1), c(e2), c(e3), c(e4)};
    for (auto& e : tail) out.push_back(std::move(e));
    return out;
  };
  auto tail_const = [&](long v) { return std::vector<Cyclotomic>(static_cast<std::size_t>(r - 1), c(v)); };

  p.rows.push_back(EigenRow{"V0", 1, true, row(1, q - 1, q * (q - 1), q, q * (q - 1), tail_const(q * (q - 1)))});
  p.rows.push_back(EigenRow{"V1", q - 1, false, row(1, q - 1, -q, q, q * (q - 1), tail_const(-q))});
  p.rows.push_back(EigenRow{"V2", q * (q - 1), false, row(1, -1, 0, q, -q, tail_const(0))});
  p.rows.push_back(EigenRow{"V3", q, false, row(1, q - 1, q * (q - 1), -1, -q + 1, tail_const(-q + 1))});
  p.rows.push_back(EigenRow{"V4", q * (q - 1), false, row(1, q - 1, -q, -1, -q + 1, tail_const(1))});
  for (long bt = 1; bt < r; ++bt) {
    std::vector<Cyclotomic> tail;
    tail.reserve(static_cast<std::size_t>(r - 1));
    for (long beta = 1; beta < r; ++beta) {
      long u = ctx.fr->div(bt, beta);
      Cyclotomic chi = additive_character(ctx.fr->element(u), n);
      tail.push_back(chi * Rational(q) + Cyclotomic::from_integer(n, 1));
    }
    p.rows.push_back(EigenRow{"V5(" + ctx.fr->label(bt) + ")", q * (q - 1), false, row(1, -1, 0, -1, 1, std::move(tail))});
  }
  return p;
}

}  // namespace pairscheme
