#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairscheme/checks.hpp"
#include "pairscheme/int_matrix.hpp"
#include "pairscheme/translation.hpp"

namespace pairscheme {

/// A candidate association scheme: labeled 0/1 adjacency matrices with the
/// identity class first, plus the group presentation when the scheme is a
/// translation scheme.
struct SchemeInstance {
  long v = 0;
  std::vector<std::string> labels;
  std::vector<IntMatrix> classes;
  std::optional<TranslationData> translation;

  std::size_t class_count() const { return classes.size(); }

  std::vector<long> valencies() const {
    std::vector<long> k;
    k.reserve(classes.size());
    for (const auto& a : classes) k.push_back(a.row_sum(0));
    return k;
  }
};

/// p[i][j][k] with A_i A_j = sum_k p[i][j][k] A_k.
struct IntersectionTensor {
  long n = 0;
  std::vector<long> data;

  explicit IntersectionTensor(long classes = 0)
      : n(classes), data(static_cast<std::size_t>(classes * classes * classes), 0) {}

  long& at(long i, long j, long k) { return data[static_cast<std::size_t>((i * n + j) * n + k)]; }
  long at(long i, long j, long k) const { return data[static_cast<std::size_t>((i * n + j) * n + k)]; }
};

struct AxiomReport {
  CheckReport checks;
  std::optional<IntersectionTensor> tensor;

  bool all_ok() const { return checks.all_ok(); }
};

/// Verifies the defining conditions of a commutative association scheme:
///   AS1  the first class is the identity matrix
///   AS2  the classes sum to the all-ones matrix
///   AS3  the transpose of every class is again a class
///   AS4  every product A_i A_j is constant on the support of each class
///        (checked coordinatewise; emits the intersection numbers on success)
///   AS5  all products commute
inline AxiomReport verify_axioms(const SchemeInstance& s) {
  AxiomReport report;
  const long v = s.v;
  const long nc = static_cast<long>(s.classes.size());

  {
    ClauseResult r{"AS1 identity class", true, std::nullopt};
    auto diff = s.classes.empty() ? std::make_optional(std::make_tuple(-1L, -1L, std::int64_t(0), std::int64_t(0)))
                                  : s.classes[0].first_mismatch(IntMatrix::identity(v));
    if (diff) {
      auto [row, col, a, b] = *diff;
      r.ok = false;
      r.witness = CheckWitness{row, col, std::to_string(a), std::to_string(b)};
    }
    report.checks.clauses.push_back(std::move(r));
  }

  // class map: which class covers each cell; doubles as the AS2 check
  std::vector<int> cell_class(static_cast<std::size_t>(v) * static_cast<std::size_t>(v), -1);
  {
    ClauseResult r{"AS2 partition", true, std::nullopt};
    for (long c = 0; c < nc && r.ok; ++c) {
      const IntMatrix& a = s.classes[static_cast<std::size_t>(c)];
      if (a.rows() != v || a.cols() != v) {
        r.ok = false;
        r.witness = CheckWitness{-1, -1, "class " + std::to_string(c) + " shape", std::to_string(v) + "x" + std::to_string(v)};
        break;
      }
      for (long i = 0; i < v && r.ok; ++i)
        for (long j = 0; j < v; ++j) {
          std::int64_t e = a(i, j);
          if (e == 0) continue;
          auto& slot = cell_class[static_cast<std::size_t>(i) * static_cast<std::size_t>(v) + static_cast<std::size_t>(j)];
          if (e != 1 || slot != -1) {
            r.ok = false;
            r.witness = CheckWitness{i, j, "overlap or non-binary entry", "exactly one class per cell"};
            break;
          }
          slot = static_cast<int>(c);
        }
    }
    if (r.ok)
      for (long i = 0; i < v && r.ok; ++i)
        for (long j = 0; j < v; ++j)
          if (cell_class[static_cast<std::size_t>(i) * static_cast<std::size_t>(v) + static_cast<std::size_t>(j)] == -1) {
            r.ok = false;
            r.witness = CheckWitness{i, j, "0", "cell covered by some class"};
            break;
          }
    report.checks.clauses.push_back(std::move(r));
  }
  const bool partition_ok = report.checks.clauses.back().ok;

  {
    ClauseResult r{"AS3 transpose closure", true, std::nullopt};
    for (long c = 0; c < nc && r.ok; ++c) {
      IntMatrix t = s.classes[static_cast<std::size_t>(c)].transposed();
      bool found = false;
      for (long d = 0; d < nc; ++d)
        if (t == s.classes[static_cast<std::size_t>(d)]) {
          found = true;
          break;
        }
      if (!found) {
        r.ok = false;
        r.witness = CheckWitness{c, -1, "transpose of class " + std::to_string(c), "some class"};
      }
    }
    report.checks.clauses.push_back(std::move(r));
  }

  ClauseResult as4{"AS4 closed products", true, std::nullopt};
  ClauseResult as5{"AS5 commutativity", true, std::nullopt};
  if (partition_ok) {
    IntersectionTensor tensor(nc);
    auto extract = [&](const IntMatrix& prod, long i, long j) {
      std::vector<std::int64_t> value(static_cast<std::size_t>(nc), -1);
      for (long r = 0; r < v; ++r)
        for (long c = 0; c < v; ++c) {
          int k = cell_class[static_cast<std::size_t>(r) * static_cast<std::size_t>(v) + static_cast<std::size_t>(c)];
          std::int64_t e = prod(r, c);
          auto& slot = value[static_cast<std::size_t>(k)];
          if (slot == -1) slot = e;
          if (slot != e) {
            as4.ok = false;
            as4.witness = CheckWitness{r, c,
                                       "A" + std::to_string(i) + "*A" + std::to_string(j) + " = " + std::to_string(e),
                                       "constant " + std::to_string(slot) + " on class " + std::to_string(k)};
            return;
          }
        }
      for (long k = 0; k < nc; ++k) tensor.at(i, j, k) = value[static_cast<std::size_t>(k)] < 0 ? 0 : value[static_cast<std::size_t>(k)];
    };
    // Pairs are streamed so at most two products are alive at a time.
    for (long i = 0; i < nc && as4.ok && as5.ok; ++i)
      for (long j = i; j < nc && as4.ok && as5.ok; ++j) {
        IntMatrix pij = s.classes[static_cast<std::size_t>(i)] * s.classes[static_cast<std::size_t>(j)];
        extract(pij, i, j);
        if (!as4.ok || i == j) continue;
        IntMatrix pji = s.classes[static_cast<std::size_t>(j)] * s.classes[static_cast<std::size_t>(i)];
        extract(pji, j, i);
        if (!as4.ok) continue;
        auto diff = pij.first_mismatch(pji);
        if (diff) {
          auto [r, c, a, b] = *diff;
          as5.ok = false;
          as5.witness = CheckWitness{r, c, "A" + std::to_string(i) + "A" + std::to_string(j) + " = " + std::to_string(a),
                                     "A" + std::to_string(j) + "A" + std::to_string(i) + " = " + std::to_string(b)};
        }
      }
    if (as4.ok) {
      report.tensor = std::move(tensor);
    } else {
      as5.ok = false;
      as5.witness = CheckWitness{-1, -1, "skipped", "AS4 failed"};
    }
  } else {
    as4.ok = false;
    as4.witness = CheckWitness{-1, -1, "skipped", "AS2 failed"};
    as5.ok = false;
    as5.witness = CheckWitness{-1, -1, "skipped", "AS2 failed"};
  }
  report.checks.clauses.push_back(std::move(as4));
  report.checks.clauses.push_back(std::move(as5));
  return report;
}

inline bool is_symmetric_scheme(const SchemeInstance& s) {
  for (const auto& a : s.classes)
    if (!a.is_symmetric()) return false;
  return true;
}

/// N N^T = N^T N = kI + lambda(J - I), N a v x v 0/1 matrix.
inline bool verify_symmetric_design(const IntMatrix& n, long v, long k, long lambda) {
  if (n.rows() != v || n.cols() != v || !n.is_zero_one()) return false;
  IntMatrix rhs = k * IntMatrix::identity(v) + lambda * (IntMatrix::all_ones(v) - IntMatrix::identity(v));
  IntMatrix nt = n.transposed();
  return n * nt == rhs && nt * n == rhs;
}

/// N N^T = N^T N = kI + l1 (I_m (x) J_n - I) + l2 (J - I_m (x) J_n), with
/// point classes the m consecutive blocks of size n.
inline bool verify_sgdd(const IntMatrix& mat, long v, long k, long m, long n, long l1, long l2) {
  if (v != m * n || mat.rows() != v || mat.cols() != v || !mat.is_zero_one()) return false;
  IntMatrix imjn = IntMatrix::kronecker(IntMatrix::identity(m), IntMatrix::all_ones(n));
  IntMatrix I = IntMatrix::identity(v);
  IntMatrix rhs = k * I + l1 * (imjn - I) + l2 * (IntMatrix::all_ones(v) - imjn);
  IntMatrix t = mat.transposed();
  return mat * t == rhs && t * mat == rhs;
}

}  // namespace pairscheme
