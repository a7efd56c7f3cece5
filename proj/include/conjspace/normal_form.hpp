#pragma once

// Hermite and Smith normal forms over Z, with unimodular transforms.

#include "conjspace/int_matrix.hpp"

#include <optional>
#include <vector>

namespace conjspace {

struct HnfResult {
  /// Canonical row-HNF of the row span; one row per pivot, zero rows dropped.
  IntMatrix H;
  /// Square unimodular transform: the first rank rows of U*A are H, the rest vanish.
  IntMatrix U;
  /// Pivot column of each row of H.
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Row Hermite normal form: pivots positive, entries above a pivot in [0, pivot).
inline HnfResult hnf(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  IntMatrix M = A;
  IntMatrix U = IntMatrix::identity(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (M(i, c) == 0) continue;
      if (M(r, c) == 0) {
        M.swap_rows(r, i);
        U.swap_rows(r, i);
        continue;
      }
      Int x, y;
      const Int a = M(r, c), b = M(i, c);
      const Int g = xgcd(a, b, x, y);
      const Int ag = a / g, bg = b / g;
      // [x y; -b/g a/g] has determinant 1
      for (std::size_t k = 0; k < n; ++k) {
        Int top = x * M(r, k) + y * M(i, k);
        Int bot = ag * M(i, k) - bg * M(r, k);
        M(r, k) = std::move(top);
        M(i, k) = std::move(bot);
      }
      for (std::size_t k = 0; k < m; ++k) {
        Int top = x * U(r, k) + y * U(i, k);
        Int bot = ag * U(i, k) - bg * U(r, k);
        U(r, k) = std::move(top);
        U(i, k) = std::move(bot);
      }
    }
    if (M(r, c) == 0) continue;
    if (M(r, c) < 0) {
      M.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(M(i, c), M(r, c));
      if (q != 0) {
        M.add_row(i, r, -q);
        U.add_row(i, r, -q);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {M.row_block(0, r), std::move(U), std::move(pivots)};
}

struct SnfResult {
  /// Same shape as the input; diagonal d_1 | d_2 | ... with d_i >= 0.
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  IntVector diagonal() const {
    IntVector d;
    for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i) d.push_back(D(i, i));
    return d;
  }
};

/// Smith normal form: U*A*V = D with U, V unimodular.
inline SnfResult snf(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (!best || abs(D(i, j)) < abs(D(best->first, best->second))))
            best = std::make_pair(i, j);
      if (!best) break;
      D.swap_rows(t, best->first);
      U.swap_rows(t, best->first);
      D.swap_cols(t, best->second);
      V.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);
        D.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        D.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pull an offending row into row t and retry
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row(t, i, 1);
            U.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return {std::move(D), std::move(U), std::move(V)};
}

/// Basis (as rows, in HNF) of the integer kernel {x : A x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& A) {
  const std::size_t n = A.cols();
  if (A.rows() == 0) return IntMatrix::identity(n);
  HnfResult h = hnf(A.transpose());
  IntMatrix K = h.U.row_block(h.rank(), n);
  if (K.rows() == 0) return IntMatrix(0, n);
  return hnf(K).H;
}

/// Inverse of a unimodular matrix; throws if A is not unimodular.
inline IntMatrix inverse_unimodular(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse_unimodular: matrix not square");
  HnfResult h = hnf(A);
  if (h.H != IntMatrix::identity(A.rows()))
    throw std::domain_error("inverse_unimodular: matrix is not unimodular");
  return h.U;
}

}  // namespace conjspace
