#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace pairscheme {

class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer matrix: addition overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer matrix: multiplication overflow");
  return r;
}

}  // namespace detail

/// Dense matrix with exact 64-bit integer entries. Every arithmetic path is
/// overflow-checked; silent wraparound cannot happen. Products of 0/1
/// matrices take a bit-packed popcount path that is bit-identical to the
/// straightforward triple loop.
class IntMatrix {
 public:
  IntMatrix() = default;

  IntMatrix(long rows, long cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
  }

  IntMatrix(long rows, long cols, std::initializer_list<std::int64_t> entries) : IntMatrix(rows, cols) {
    if (static_cast<long>(entries.size()) != rows * cols)
      throw std::invalid_argument("IntMatrix: initializer size mismatch");
    std::copy(entries.begin(), entries.end(), data_.begin());
  }

  static IntMatrix identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix all_ones(long n) { return filled(n, n, 1); }

  static IntMatrix zero(long rows, long cols) { return IntMatrix(rows, cols); }

  static IntMatrix filled(long rows, long cols, std::int64_t v) {
    IntMatrix m(rows, cols);
    std::fill(m.data_.begin(), m.data_.end(), v);
    return m;
  }

  /// P[i, perm[i]] = 1. perm must be a bijection on {0..n-1}.
  static IntMatrix permutation(const std::vector<long>& perm) {
    const long n = static_cast<long>(perm.size());
    IntMatrix m(n, n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (long i = 0; i < n; ++i) {
      long j = perm[static_cast<std::size_t>(i)];
      if (j < 0 || j >= n || seen[static_cast<std::size_t>(j)])
        throw std::invalid_argument("IntMatrix::permutation: not a bijection");
      seen[static_cast<std::size_t>(j)] = true;
      m.at(i, j) = 1;
    }
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  std::int64_t operator()(long r, long c) const { return data_[index(r, c)]; }
  std::int64_t& at(long r, long c) { return data_[index(r, c)]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    a.require_same_shape(b, "+");
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = detail::checked_add(r.data_[i], b.data_[i]);
    return r;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    a.require_same_shape(b, "-");
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i)
      r.data_[i] = detail::checked_add(r.data_[i], detail::checked_mul(-1, b.data_[i]));
    return r;
  }

  friend IntMatrix operator*(std::int64_t s, const IntMatrix& a) {
    IntMatrix r = a;
    for (auto& v : r.data_) v = detail::checked_mul(s, v);
    return r;
  }
  friend IntMatrix operator*(const IntMatrix& a, std::int64_t s) { return s * a; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("IntMatrix: product shape mismatch " + a.shape_str() + " * " + b.shape_str());
    if (a.is_zero_one() && b.is_zero_one()) return a.mul_packed(b);
    IntMatrix r(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i) {
      for (long k = 0; k < a.cols_; ++k) {
        std::int64_t v = a(i, k);
        if (v == 0) continue;
        const std::size_t boff = static_cast<std::size_t>(k) * static_cast<std::size_t>(b.cols_);
        const std::size_t roff = static_cast<std::size_t>(i) * static_cast<std::size_t>(b.cols_);
        for (long j = 0; j < b.cols_; ++j)
          r.data_[roff + static_cast<std::size_t>(j)] = detail::checked_add(
              r.data_[roff + static_cast<std::size_t>(j)], detail::checked_mul(v, b.data_[boff + static_cast<std::size_t>(j)]));
      }
    }
    return r;
  }

  IntMatrix transposed() const {
    IntMatrix r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) r.at(j, i) = (*this)(i, j);
    return r;
  }

  bool is_symmetric() const { return rows_ == cols_ && *this == transposed(); }

  static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long j = 0; j < a.cols_; ++j) {
        std::int64_t v = a(i, j);
        if (v == 0) continue;
        for (long k = 0; k < b.rows_; ++k)
          for (long l = 0; l < b.cols_; ++l)
            r.at(i * b.rows_ + k, j * b.cols_ + l) = detail::checked_mul(v, b(k, l));
      }
    return r;
  }

  /// Assemble a matrix from a rectangular grid of blocks. Blocks in one grid
  /// row must share heights; blocks in one grid column must share widths.
  static IntMatrix block_assemble(const std::vector<std::vector<IntMatrix>>& grid) {
    if (grid.empty() || grid.front().empty()) throw std::invalid_argument("block_assemble: empty grid");
    const std::size_t gcols = grid.front().size();
    std::vector<long> heights(grid.size()), widths(gcols, -1);
    long total_rows = 0, total_cols = 0;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
      if (grid[gi].size() != gcols) throw std::invalid_argument("block_assemble: ragged grid");
      heights[gi] = grid[gi][0].rows();
      total_rows += heights[gi];
      for (std::size_t gj = 0; gj < gcols; ++gj) {
        const IntMatrix& blk = grid[gi][gj];
        if (blk.rows() != heights[gi]) throw std::invalid_argument("block_assemble: block height mismatch");
        if (widths[gj] == -1) widths[gj] = blk.cols();
        if (blk.cols() != widths[gj]) throw std::invalid_argument("block_assemble: block width mismatch");
      }
    }
    for (long w : widths) total_cols += w;
    IntMatrix r(total_rows, total_cols);
    long roff = 0;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
      long coff = 0;
      for (std::size_t gj = 0; gj < gcols; ++gj) {
        const IntMatrix& blk = grid[gi][gj];
        for (long i = 0; i < blk.rows(); ++i)
          for (long j = 0; j < blk.cols(); ++j) r.at(roff + i, coff + j) = blk(i, j);
        coff += widths[gj];
      }
      roff += heights[gi];
    }
    return r;
  }

  static IntMatrix lin_comb(const std::vector<std::pair<std::int64_t, const IntMatrix*>>& terms) {
    if (terms.empty()) throw std::invalid_argument("lin_comb: no terms");
    IntMatrix r = *terms.front().second * terms.front().first;
    for (std::size_t t = 1; t < terms.size(); ++t) r = r + *terms[t].second * terms[t].first;
    return r;
  }

  IntMatrix hadamard(const IntMatrix& b) const {
    require_same_shape(b, "hadamard");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = detail::checked_mul(r.data_[i], b.data_[i]);
    return r;
  }

  bool is_zero_one() const {
    for (std::int64_t v : data_)
      if (v != 0 && v != 1) return false;
    return true;
  }

  std::int64_t row_sum(long r) const {
    std::int64_t s = 0;
    for (long j = 0; j < cols_; ++j) s = detail::checked_add(s, (*this)(r, j));
    return s;
  }

  std::optional<std::tuple<long, long, std::int64_t, std::int64_t>> first_mismatch(const IntMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) return std::make_tuple(-1L, -1L, std::int64_t(rows_), std::int64_t(b.rows_));
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j)
        if ((*this)(i, j) != b(i, j)) return std::make_tuple(i, j, (*this)(i, j), b(i, j));
    return std::nullopt;
  }

  /// Text form: first line "rows cols", then the entries row by row.
  std::string to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (long i = 0; i < rows_; ++i) {
      for (long j = 0; j < cols_; ++j) {
        if (j) os << ' ';
        os << (*this)(i, j);
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  std::size_t index(long r, long c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("IntMatrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  void require_same_shape(const IntMatrix& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw std::invalid_argument(std::string("IntMatrix: shape mismatch for ") + op + " " + shape_str() + " vs " +
                                  b.shape_str());
  }

  std::string shape_str() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  IntMatrix mul_packed(const IntMatrix& b) const {
    const long n = cols_;  // == b.rows_
    const long words = (n + 63) / 64;
    std::vector<std::uint64_t> pa(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(words), 0);
    std::vector<std::uint64_t> pbt(static_cast<std::size_t>(b.cols_) * static_cast<std::size_t>(words), 0);
    for (long i = 0; i < rows_; ++i)
      for (long k = 0; k < n; ++k)
        if ((*this)(i, k))
          pa[static_cast<std::size_t>(i) * words + static_cast<std::size_t>(k >> 6)] |= 1ULL << (k & 63);
    for (long k = 0; k < n; ++k)
      for (long j = 0; j < b.cols_; ++j)
        if (b(k, j)) pbt[static_cast<std::size_t>(j) * words + static_cast<std::size_t>(k >> 6)] |= 1ULL << (k & 63);
    IntMatrix r(rows_, b.cols_);
    for (long i = 0; i < rows_; ++i) {
      const std::uint64_t* ra = &pa[static_cast<std::size_t>(i) * words];
      for (long j = 0; j < b.cols_; ++j) {
        const std::uint64_t* rb = &pbt[static_cast<std::size_t>(j) * words];
        std::int64_t dot = 0;
        for (long w = 0; w < words; ++w) dot += __builtin_popcountll(ra[w] & rb[w]);
        r.at(i, j) = dot;
      }
    }
    return r;
  }

  long rows_ = 0;
  long cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace pairscheme
