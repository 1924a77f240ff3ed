#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pairscheme/aux_matrices.hpp"
#include "pairscheme/int_matrix.hpp"
#include "pairscheme/latin.hpp"

namespace pairscheme {

class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// Shared state of the two incidence constructions: the auxiliary field F_q
/// with its C_a family, the Latin-square field F_r (r = q+1 or q+2), and the
/// label bijection varphi from F_r onto F_q plus the formal symbols, with
/// varphi(0) = x always.
struct PairContext {
  std::shared_ptr<const FieldSpec> fq;
  std::shared_ptr<const FieldSpec> fr;
  std::vector<AuxLabel> varphi;  // indexed by F_r element
  AuxFamily aux;

  long q() const { return fq->q(); }
  long r() const { return fr->q(); }
  long dimension() const { return r() * q() * q(); }

  long phi_preimage(const AuxLabel& label) const {
    for (long b = 0; b < r(); ++b)
      if (varphi[static_cast<std::size_t>(b)] == label) return b;
    throw std::invalid_argument("PairContext: label has no preimage");
  }

  std::string phi_str(long b) const { return varphi[static_cast<std::size_t>(b)].str(*fq); }
};

namespace detail {

inline void validate_varphi(const PairContext& ctx, bool with_y) {
  const long q = ctx.q(), r = ctx.r();
  if (static_cast<long>(ctx.varphi.size()) != r)
    throw std::invalid_argument("varphi: must assign every element of the Latin-square field");
  if (!(ctx.varphi[0] == AuxLabel::x())) throw std::invalid_argument("varphi: varphi(0) must be x");
  std::vector<int> elem_seen(static_cast<std::size_t>(q), 0);
  int x_seen = 0, y_seen = 0;
  for (const auto& l : ctx.varphi) {
    switch (l.kind) {
      case AuxLabel::Kind::X: ++x_seen; break;
      case AuxLabel::Kind::Y:
        if (!with_y) throw std::invalid_argument("varphi: label y is not part of this family");
        ++y_seen;
        break;
      default:
        if (l.elem < 0 || l.elem >= q) throw std::invalid_argument("varphi: field label out of range");
        ++elem_seen[static_cast<std::size_t>(l.elem)];
    }
  }
  bool ok = x_seen == 1 && y_seen == (with_y ? 1 : 0);
  for (int s : elem_seen) ok = ok && s == 1;
  if (!ok) throw std::invalid_argument("varphi: not a bijection onto the label set");
}

}  // namespace detail

/// N_beta as the Kronecker sum over gamma of P_{beta,gamma} (x) C_{varphi(gamma)}.
inline IntMatrix incidence_kron_form(const PairContext& ctx, long beta) {
  if (beta == 0) throw std::invalid_argument("incidence matrix: beta must be nonzero");
  const long d = ctx.dimension();
  IntMatrix n(d, d);
  for (long gamma = 0; gamma < ctx.r(); ++gamma) {
    const IntMatrix& c = ctx.aux.matrix(ctx.varphi[static_cast<std::size_t>(gamma)]);
    IntMatrix p = IntMatrix::permutation(latin_component(*ctx.fr, beta, gamma));
    n = n + IntMatrix::kronecker(p, c);
  }
  return n;
}

/// N_beta as the block matrix with (b', b'')-block C_{varphi(L_beta(b', b''))}.
inline IntMatrix incidence_block_form(const PairContext& ctx, long beta) {
  if (beta == 0) throw std::invalid_argument("incidence matrix: beta must be nonzero");
  const long r = ctx.r();
  std::vector<std::vector<IntMatrix>> grid(static_cast<std::size_t>(r));
  for (long b1 = 0; b1 < r; ++b1) {
    grid[static_cast<std::size_t>(b1)].reserve(static_cast<std::size_t>(r));
    for (long b2 = 0; b2 < r; ++b2) {
      long symbol = ctx.fr->mul(beta, ctx.fr->sub(b2, b1));
      grid[static_cast<std::size_t>(b1)].push_back(ctx.aux.matrix(ctx.varphi[static_cast<std::size_t>(symbol)]));
    }
  }
  return IntMatrix::block_assemble(grid);
}

/// Both construction routes must agree; a mismatch means the construction is
/// broken, not the input.
inline IntMatrix incidence_matrix(const PairContext& ctx, long beta) {
  IntMatrix kron = incidence_kron_form(ctx, beta);
  IntMatrix block = incidence_block_form(ctx, beta);
  if (auto diff = kron.first_mismatch(block)) {
    auto [r, c, a, b] = *diff;
    throw ConstructionError("incidence matrix forms disagree at (" + std::to_string(r) + "," + std::to_string(c) +
                            "): " + std::to_string(a) + " vs " + std::to_string(b));
  }
  return kron;
}

inline std::vector<IntMatrix> all_incidence_matrices(const PairContext& ctx) {
  std::vector<IntMatrix> out;
  out.reserve(static_cast<std::size_t>(ctx.r()) - 1);
  for (long beta = 1; beta < ctx.r(); ++beta) out.push_back(incidence_matrix(ctx, beta));
  return out;
}

}  // namespace pairscheme
