#pragma once

// Bit-packed matrices over GF(2) and Gaussian elimination.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conjspace {

/// Dense vector over GF(2), one byte per entry (0 or 1).
using F2Vector = std::vector<std::uint8_t>;

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}
  F2Matrix(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows.begin()->size() : 0;
    *this = F2Matrix(nr, nc);
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != nc) throw std::invalid_argument("F2Matrix: ragged initializer");
      std::size_t c = 0;
      for (int x : row) set(r, c++, (x & 1) != 0);
      ++r;
    }
  }

  static F2Matrix identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static F2Matrix from_rows(const std::vector<F2Vector>& rows, std::size_t cols) {
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("F2Matrix: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c] & 1);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = v ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  F2Vector row(std::size_t r) const {
    F2Vector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = get(r, c);
    return v;
  }
  F2Vector col(std::size_t c) const {
    F2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = get(r, c);
    return v;
  }

  // row[dst] ^= row[src]
  void add_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] ^= bits_[src * words_ + w];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_; ++w) std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
  }

  F2Matrix transpose() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r, true);
    return t;
  }

  bool is_zero() const {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if (get(r, c) != get(c, r)) return false;
    return true;
  }

  friend bool operator==(const F2Matrix& a, const F2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const F2Matrix& a, const F2Matrix& b) { return !(a == b); }

  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("F2Matrix: product shape mismatch");
    F2Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (a.get(i, k))
          for (std::size_t w = 0; w < p.words_; ++w) p.bits_[i * p.words_ + w] ^= b.bits_[k * b.words_ + w];
    return p;
  }
  friend F2Vector operator*(const F2Matrix& a, const F2Vector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("F2Matrix: vector shape mismatch");
    F2Vector out(a.rows_, 0);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::uint8_t s = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) s ^= static_cast<std::uint8_t>(a.get(i, k) & (v[k] & 1));
      out[i] = s;
    }
    return out;
  }
  friend F2Matrix operator+(F2Matrix a, const F2Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("F2Matrix: sum shape mismatch");
    for (std::size_t i = 0; i < a.bits_.size(); ++i) a.bits_[i] ^= b.bits_[i];
    return a;
  }

  std::string str() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) s += '\n';
      for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    }
    return s;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

namespace detail {

struct F2Echelon {
  F2Matrix R;  // reduced row echelon form
  std::vector<std::size_t> pivots;
};

inline F2Echelon f2_rref(F2Matrix A) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    std::size_t p = r;
    while (p < A.rows() && !A.get(p, c)) ++p;
    if (p == A.rows()) continue;
    A.swap_rows(r, p);
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (i != r && A.get(i, c)) A.add_row(i, r);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(A), std::move(pivots)};
}

}  // namespace detail

inline std::size_t f2_rank(const F2Matrix& A) { return detail::f2_rref(A).pivots.size(); }

/// Basis of {x : A x = 0}, one vector per free column.
inline std::vector<F2Vector> f2_kernel(const F2Matrix& A) {
  auto [R, pivots] = detail::f2_rref(A);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<F2Vector> basis;
  for (std::size_t f = 0; f < A.cols(); ++f) {
    if (is_pivot[f]) continue;
    F2Vector v(A.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (R.get(i, f)) v[pivots[i]] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with A x = b, or nothing when the system is inconsistent.
inline std::optional<F2Vector> f2_solve(const F2Matrix& A, const F2Vector& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("f2_solve: right-hand side length mismatch");
  F2Matrix aug(A.rows(), A.cols() + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) aug.set(r, c, A.get(r, c));
    aug.set(r, A.cols(), b[r] & 1);
  }
  auto [R, pivots] = detail::f2_rref(aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  F2Vector x(A.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = R.get(i, A.cols());
  return x;
}

inline std::optional<F2Matrix> f2_inverse(const F2Matrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("f2_inverse: matrix not square");
  const std::size_t n = A.rows();
  F2Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, A.get(r, c));
    aug.set(r, n + r, true);
  }
  auto [R, pivots] = detail::f2_rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  F2Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, R.get(r, n + c));
  return inv;
}

/// True iff the column spans of A and B coincide (same number of rows).
inline bool f2_same_column_span(const F2Matrix& A, const F2Matrix& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("f2_same_column_span: row mismatch");
  F2Matrix both(A.rows(), A.cols() + B.cols());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) both.set(r, c, A.get(r, c));
    for (std::size_t c = 0; c < B.cols(); ++c) both.set(r, A.cols() + c, B.get(r, c));
  }
  const std::size_t rb = f2_rank(both);
  return rb == f2_rank(A) && rb == f2_rank(B);
}

/// Matrix whose columns are the given vectors.
inline F2Matrix f2_from_columns(const std::vector<F2Vector>& cols, std::size_t rows) {
  F2Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("f2_from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r] & 1);
  }
  return m;
}

}  // namespace conjspace
