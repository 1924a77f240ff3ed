#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairscheme/eigen.hpp"
#include "pairscheme/pair_context.hpp"
#include "pairscheme/scheme.hpp"

namespace pairscheme {

/// Construction from a pair q, q+2 of prime powers. The auxiliary matrices
/// live over F_q, the Latin squares over F_{q+2}, and varphi maps F_{q+2}
/// onto F_q together with both formal symbols x and y.
struct TwinContext : PairContext {};

/// Default varphi: 0 -> x, the first nonzero element -> y, the remaining
/// nonzero elements onto F_q in canonical order.
inline TwinContext make_twin_context(long q, std::optional<std::vector<AuxLabel>> varphi = std::nullopt) {
  auto pq = is_prime_power(q);
  auto pr = is_prime_power(q + 2);
  if (!pq) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (!pr) throw std::invalid_argument(std::to_string(q + 2) + " is not a prime power");
  TwinContext ctx;
  ctx.fq = make_field(pq->first, pq->second);
  ctx.fr = make_field(pr->first, pr->second);
  if (varphi) {
    ctx.varphi = std::move(*varphi);
  } else {
    ctx.varphi.push_back(AuxLabel::x());
    ctx.varphi.push_back(AuxLabel::y());
    for (long a = 0; a < q; ++a) ctx.varphi.push_back(AuxLabel::element(a));
  }
  detail::validate_varphi(ctx, /*with_y=*/true);
  ctx.aux = build_aux_family(ctx.fq);
  return ctx;
}

/// Exact verification of the incidence-matrix identities of the family:
///   (i)    N_beta^T = N_{-beta}
///   (ii)   N_beta N_{-beta} = q^2 I + q J
///   (iii)  N_beta N_beta' = q N_{beta beta'/(beta+beta')} + 2 I (x) J + (q-1) J
///          whenever beta + beta' != 0
///   (iv)   N_beta (I (x) J) = (I (x) J) N_beta = q (J - I (x) J)
///   (v)    sum of all N_beta = (J - I) (x) (qI + J)
/// plus pairwise commutation and the symmetric-design equation with
/// parameters (q^2(q+2), q(q+1), q).
inline CheckReport check_incidence_identities(const TwinContext& ctx) {
  const long q = ctx.q(), r = ctx.r(), d = ctx.dimension();
  const IntMatrix I = IntMatrix::identity(d);
  const IntMatrix J = IntMatrix::all_ones(d);
  const IntMatrix IJ = IntMatrix::kronecker(IntMatrix::identity(r), IntMatrix::all_ones(q * q));
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
        auto diff = p12.first_mismatch(q * q * I + q * J);
        if (diff) {
          auto [row, col, a, b] = *diff;
          opposite.ok = false;
          opposite.witness = CheckWitness{row, col, std::to_string(a), std::to_string(b)};
          opposite.name += " at beta=" + ctx.fr->label(b1);
        }
      } else {
        long target = ctx.fr->div(ctx.fr->mul(b1, b2), s);
        IntMatrix rhs = q * N(target) + 2 * IJ + (q - 1) * J;
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
    ClauseResult res{"(iv) block projector", true, std::nullopt};
    IntMatrix rhs = q * (J - IJ);
    for (long beta = 1; beta < r && res.ok; ++beta) {
      auto d1 = (N(beta) * IJ).first_mismatch(rhs);
      auto d2 = (IJ * N(beta)).first_mismatch(rhs);
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
    ClauseResult res{"(v) total sum", true, std::nullopt};
    IntMatrix total(d, d);
    for (long beta = 1; beta < r; ++beta) total = total + N(beta);
    IntMatrix rhs = IntMatrix::kronecker(IntMatrix::all_ones(r) - IntMatrix::identity(r),
                                         q * IntMatrix::identity(q * q) + IntMatrix::all_ones(q * q));
    auto diff = total.first_mismatch(rhs);
    if (diff) {
      auto [row, col, a, b] = *diff;
      res.ok = false;
      res.witness = CheckWitness{row, col, std::to_string(a), std::to_string(b)};
    }
    report.clauses.push_back(std::move(res));
  }

  report.clauses.push_back(std::move(commute));

  {
    ClauseResult res{"design equations", true, std::nullopt};
    for (long beta = 1; beta < r && res.ok; ++beta)
      if (!verify_symmetric_design(N(beta), d, q * (q + 1), q)) {
        res.ok = false;
        res.witness = CheckWitness{beta, -1, "design equation fails", "(v,k,lambda) = (" + std::to_string(d) + "," +
                                                                          std::to_string(q * (q + 1)) + "," +
                                                                          std::to_string(q) + ")"};
        res.name += " at beta=" + ctx.fr->label(beta);
      }
    report.clauses.push_back(std::move(res));
  }

  return report;
}

struct SchemeBuild {
  SchemeInstance scheme;
  TranslationData data;
  std::vector<IntMatrix> incidence;
};

/// The q+3 classes: identity, the two block classes, and N_beta minus the
/// shared block class for each nonzero beta. The matrix route and the
/// relation-set route are both built and must coincide.
inline SchemeBuild build_twin_scheme(const TwinContext& ctx) {
  const long q = ctx.q(), r = ctx.r(), d = ctx.dimension();
  SchemeBuild out;
  out.incidence = all_incidence_matrices(ctx);

  IntMatrix a1 = IntMatrix::kronecker(IntMatrix::all_ones(r) - IntMatrix::identity(r), IntMatrix::identity(q * q));
  IntMatrix a2 = IntMatrix::kronecker(IntMatrix::identity(r),
                                      IntMatrix::all_ones(q * q) - IntMatrix::identity(q * q));

  out.scheme.v = d;
  out.scheme.labels = {"R0", "R1", "R2"};
  out.scheme.classes.push_back(IntMatrix::identity(d));
  out.scheme.classes.push_back(a1);
  out.scheme.classes.push_back(std::move(a2));
  for (long beta = 1; beta < r; ++beta) {
    out.scheme.labels.push_back("R3(" + ctx.fr->label(beta) + ")");
    out.scheme.classes.push_back(out.incidence[static_cast<std::size_t>(beta - 1)] - out.scheme.classes[1]);
  }

  // relation sets
  out.data.factors = {ctx.fr, ctx.fq, ctx.fq};
  out.data.labels = out.scheme.labels;
  out.data.relations.resize(out.scheme.labels.size());
  out.data.relations[0] = {0};
  auto idx = [&](long b, long a1_, long a2_) { return (b * q + a1_) * q + a2_; };
  for (long b = 1; b < r; ++b) out.data.relations[1].push_back(idx(b, 0, 0));
  for (long a1_ = 0; a1_ < q; ++a1_)
    for (long a2_ = 0; a2_ < q; ++a2_)
      if (a1_ || a2_) out.data.relations[2].push_back(idx(0, a1_, a2_));
  for (long beta = 1; beta < r; ++beta) {
    auto& rel = out.data.relations[static_cast<std::size_t>(2 + beta)];
    for (long db = 1; db < r; ++db) {
      const AuxLabel& lab = ctx.varphi[static_cast<std::size_t>(ctx.fr->mul(beta, db))];
      if (lab.kind == AuxLabel::Kind::Y) {
        for (long d2 = 1; d2 < q; ++d2) rel.push_back(idx(db, 0, d2));
      } else {  // a field label; x is impossible since beta*db != 0
        for (long d1 = 1; d1 < q; ++d1) rel.push_back(idx(db, d1, ctx.fq->mul(lab.elem, d1)));
      }
    }
    std::sort(rel.begin(), rel.end());
  }

  for (std::size_t i = 0; i < out.scheme.classes.size(); ++i) {
    IntMatrix from_sets = out.data.adjacency(i);
    if (auto diff = from_sets.first_mismatch(out.scheme.classes[i])) {
      auto [row, col, a, b] = *diff;
      throw ConstructionError("twin scheme: class " + out.scheme.labels[i] + " matrix and set forms disagree at (" +
                              std::to_string(row) + "," + std::to_string(col) + ")");
    }
  }
  out.scheme.translation = out.data;
  return out;
}

/// The closed-form first eigenmatrix. Entries on the beta-family columns are
/// q chi(beta~/beta) + 1 with chi the canonical additive character of
/// F_{q+2}; the remaining rows and columns are integer-valued.
inline Eigenmatrix closed_form_eigenmatrix_twin(const TwinContext& ctx) {
  const long q = ctx.q(), r = ctx.r();
  TranslationData t;
  t.factors = {ctx.fr, ctx.fq, ctx.fq};
  const long n = t.ambient_order();
  const long qq = q * q;

  Eigenmatrix p;
  p.order = n;
  p.col_labels = {"R0", "R1", "R2"};
  for (long beta = 1; beta < r; ++beta) p.col_labels.push_back("R3(" + ctx.fr->label(beta) + ")");

  auto c = [&](long v) { return Cyclotomic::from_integer(n, v); };
  auto konst = [&](long head0, long head1, long head2, std::vector<Cyclotomic> tail) {
    std::vector<Cyclotomic> row{c(head0), c(head1), c(head2)};
    for (auto& e : tail) row.push_back(std::move(e));
    return row;
  };

  EigenRow v0{"V0", 1, true, konst(1, q + 1, qq - 1, std::vector<Cyclotomic>(static_cast<std::size_t>(r - 1), c(qq - 1)))};
  EigenRow v1{"V1", q + 1, false,
              konst(1, -1, qq - 1, std::vector<Cyclotomic>(static_cast<std::size_t>(r - 1), c(-q + 1)))};
  EigenRow v2{"V2", qq - 1, false, konst(1, q + 1, -1, std::vector<Cyclotomic>(static_cast<std::size_t>(r - 1), c(-1)))};
  p.rows.push_back(std::move(v0));
  p.rows.push_back(std::move(v1));
  p.rows.push_back(std::move(v2));

  for (long bt = 1; bt < r; ++bt) {  // beta~ rows
    std::vector<Cyclotomic> tail;
    tail.reserve(static_cast<std::size_t>(r - 1));
    for (long beta = 1; beta < r; ++beta) {
      long u = ctx.fr->div(bt, beta);
      Cyclotomic chi = additive_character(ctx.fr->element(u), n);
      tail.push_back(chi * Rational(q) + Cyclotomic::from_integer(n, 1));
    }
    p.rows.push_back(EigenRow{"V3(" + ctx.fr->label(bt) + ")", qq - 1, false, konst(1, -1, -1, std::move(tail))});
  }
  return p;
}

/// Matches theoretical rows to computed rows by exact content; returns the
/// map theoretical index -> computed index when it is a bijection.
inline std::optional<std::vector<int>> match_eigen_rows(const Eigenmatrix& theory, const Eigenmatrix& computed) {
  if (theory.rows.size() != computed.rows.size()) return std::nullopt;
  std::vector<int> map(theory.rows.size(), -1);
  std::vector<int> used(computed.rows.size(), 0);
  for (std::size_t i = 0; i < theory.rows.size(); ++i) {
    for (std::size_t j = 0; j < computed.rows.size(); ++j) {
      if (used[j] || theory.rows[i].multiplicity != computed.rows[j].multiplicity) continue;
      if (theory.rows[i].entries == computed.rows[j].entries) {
        map[i] = static_cast<int>(j);
        used[j] = 1;
        break;
      }
    }
    if (map[i] < 0) return std::nullopt;
  }
  return map;
}

}  // namespace pairscheme
