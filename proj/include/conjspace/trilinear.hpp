#pragma once

// Symmetric trilinear forms over Z and GF(2).
//
// A form of rank n is stored by its values on sorted index triples
// i <= j <= k (0-based), listed in lexicographic order. Full symmetry holds by
// construction: t(e_a, e_b, e_c) reads the coefficient of the sorted triple.

#include "conjspace/f2_matrix.hpp"
#include "conjspace/gl2.hpp"
#include "conjspace/int_matrix.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace conjspace {

using Triple = std::array<std::size_t, 3>;

inline Triple sorted_triple(std::size_t i, std::size_t j, std::size_t k) {
  Triple t{i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

/// Number of sorted triples over n indices: C(n+2, 3).
constexpr std::size_t triple_count(std::size_t n) { return n * (n + 1) * (n + 2) / 6; }

/// Position of a sorted triple in the lexicographic listing.
inline std::size_t triple_index(std::size_t n, Triple t) {
  std::sort(t.begin(), t.end());
  const auto [i, j, k] = t;
  if (k >= n) throw std::out_of_range("triple index out of range");
  std::size_t idx = 0;
  for (std::size_t a = 0; a < i; ++a) idx += (n - a) * (n - a + 1) / 2;
  for (std::size_t b = i; b < j; ++b) idx += n - b;
  return idx + (k - j);
}

inline std::vector<Triple> sorted_triples(std::size_t n) {
  std::vector<Triple> out;
  out.reserve(triple_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) out.push_back({i, j, k});
  return out;
}

/// Coefficient arithmetic: exact integers, or bits with XOR/AND.
template <class C>
struct CoeffRing;

template <>
struct CoeffRing<Int> {
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static bool is_zero(const Int& a) { return a == 0; }
};

template <>
struct CoeffRing<std::uint8_t> {
  static std::uint8_t add(std::uint8_t a, std::uint8_t b) { return (a ^ b) & 1u; }
  static std::uint8_t mul(std::uint8_t a, std::uint8_t b) { return a & b & 1u; }
  static bool is_zero(std::uint8_t a) { return (a & 1u) == 0; }
};

template <class C>
class TrilinearForm {
 public:
  explicit TrilinearForm(std::size_t n = 0) : n_(n), coeffs_(triple_count(n), C{0}) {}

  static TrilinearForm from_coefficients(std::size_t n, std::vector<C> coeffs) {
    if (coeffs.size() != triple_count(n)) throw std::invalid_argument("TrilinearForm: coefficient count mismatch");
    TrilinearForm t(n);
    t.coeffs_ = std::move(coeffs);
    return t;
  }

  std::size_t rank() const { return n_; }

  const C& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return coeffs_[triple_index(n_, {i, j, k})];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, C v) { coeffs_[triple_index(n_, {i, j, k})] = std::move(v); }
  void add(std::size_t i, std::size_t j, std::size_t k, const C& v) {
    C& slot = coeffs_[triple_index(n_, {i, j, k})];
    slot = CoeffRing<C>::add(slot, v);
  }

  /// Coefficients in sorted-triple order.
  const std::vector<C>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return CoeffRing<C>::is_zero(c); });
  }

  friend bool operator==(const TrilinearForm& a, const TrilinearForm& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TrilinearForm& a, const TrilinearForm& b) { return !(a == b); }

 private:
  std::size_t n_;
  std::vector<C> coeffs_;
};

using TriFormZ = TrilinearForm<Int>;
using TriFormF2 = TrilinearForm<std::uint8_t>;

inline TriFormZ operator+(const TriFormZ& a, const TriFormZ& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("TriFormZ: rank mismatch");
  std::vector<Int> c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coefficients()[i];
  return TriFormZ::from_coefficients(a.rank(), std::move(c));
}
inline TriFormZ operator-(const TriFormZ& a, const TriFormZ& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("TriFormZ: rank mismatch");
  std::vector<Int> c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coefficients()[i];
  return TriFormZ::from_coefficients(a.rank(), std::move(c));
}
inline TriFormZ operator*(const Int& s, const TriFormZ& a) {
  std::vector<Int> c = a.coefficients();
  for (auto& x : c) x *= s;
  return TriFormZ::from_coefficients(a.rank(), std::move(c));
}

/// Multilinear expansion sum_{i,j,k} a_i b_j c_k t(e_i, e_j, e_k).
template <class C>
C eval(const TrilinearForm<C>& t, const std::vector<C>& a, const std::vector<C>& b, const std::vector<C>& c) {
  const std::size_t n = t.rank();
  if (a.size() != n || b.size() != n || c.size() != n) throw std::invalid_argument("eval: vector length mismatch");
  using R = CoeffRing<C>;
  C total{0};
  for (std::size_t i = 0; i < n; ++i) {
    if (R::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (R::is_zero(b[j])) continue;
      const C ab = R::mul(a[i], b[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (R::is_zero(c[k])) continue;
        total = R::add(total, R::mul(R::mul(ab, c[k]), t(i, j, k)));
      }
    }
  }
  return total;
}

/// Base change: columns of S are the images of the new basis vectors in the
/// old basis, so t'(e_a, e_b, e_c) = t(S e_a, S e_b, S e_c).
inline TriFormZ substitute(const TriFormZ& t, const IntMatrix& S) {
  if (S.rows() != t.rank()) throw std::invalid_argument("substitute: S must have rank(t) rows");
  const std::size_t n_new = S.cols();
  std::vector<IntVector> cols;
  for (std::size_t a = 0; a < n_new; ++a) cols.push_back(S.col(a));
  TriFormZ out(n_new);
  for (const auto& [a, b, c] : sorted_triples(n_new)) out.set(a, b, c, eval(t, cols[a], cols[b], cols[c]));
  return out;
}

inline TriFormF2 substitute(const TriFormF2& t, const F2Matrix& S) {
  if (S.rows() != t.rank()) throw std::invalid_argument("substitute: S must have rank(t) rows");
  const std::size_t n_new = S.cols();
  std::vector<F2Vector> cols;
  for (std::size_t a = 0; a < n_new; ++a) cols.push_back(S.col(a));
  TriFormF2 out(n_new);
  for (const auto& [a, b, c] : sorted_triples(n_new)) out.set(a, b, c, eval(t, cols[a], cols[b], cols[c]));
  return out;
}

inline TriFormF2 reduce_mod2(const TriFormZ& t) {
  std::vector<std::uint8_t> bits;
  bits.reserve(t.coefficients().size());
  for (const auto& c : t.coefficients()) bits.push_back(is_odd(c) ? 1 : 0);
  return TriFormF2::from_coefficients(t.rank(), std::move(bits));
}

/// First pair (i, j) with t_iij and t_ijj of different parity.
inline std::optional<std::pair<std::size_t, std::size_t>> wall_parity_witness(const TriFormZ& t) {
  // t(x,x,y) - t(x,y,y) = sum_{i,j} x_i y_j (t_iij - t_ijj) mod 2, since the
  // cross terms of each square come in pairs
  for (std::size_t i = 0; i < t.rank(); ++i)
    for (std::size_t j = 0; j < t.rank(); ++j)
      if (i != j && is_odd(t(i, i, j) - t(i, j, j))) return std::make_pair(i, j);
  return std::nullopt;
}

/// t(x,x,y) = t(x,y,y) mod 2 for all integral x, y.
inline bool wall_parity_ok(const TriFormZ& t) { return !wall_parity_witness(t).has_value(); }

/// t(x,x,y) even for all integral x, y; only the t_iij coefficients matter.
inline bool even_squares(const TriFormZ& t) {
  for (std::size_t i = 0; i < t.rank(); ++i)
    for (std::size_t j = 0; j < t.rank(); ++j)
      if (is_odd(t(i, i, j))) return false;
  return true;
}

namespace detail {

// Form of rank <= 6 as a cube of bit masks: cube[i][j] has bit k set iff t_ijk = 1.
struct PackedCube {
  std::size_t n = 0;
  std::array<std::array<std::uint32_t, kMaxGlDimension>, kMaxGlDimension> cube{};

  explicit PackedCube(const TriFormF2& t) : n(t.rank()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (t(i, j, k)) cube[i][j] |= std::uint32_t{1} << k;
  }
};

// Does substitute(src, g) equal dst? g is given by column masks (bit i of cols[a] = g_ia).
inline bool substitution_matches(const PackedCube& src, const PackedCube& dst,
                                 const std::array<std::uint32_t, kMaxGlDimension>& cols) {
  const std::size_t n = src.n;
  std::array<std::uint32_t, kMaxGlDimension> m1{};
  for (std::size_t a = 0; a < n; ++a) {
    // m1[j] = sum_i g_ia t(i, j, .)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t acc = 0;
      for (std::uint32_t s = cols[a]; s; s &= s - 1) acc ^= src.cube[std::countr_zero(s)][j];
      m1[j] = acc;
    }
    for (std::size_t b = a; b < n; ++b) {
      std::uint32_t m2 = 0;
      for (std::uint32_t s = cols[b]; s; s &= s - 1) m2 ^= m1[std::countr_zero(s)];
      std::uint32_t row = 0;
      for (std::size_t c = b; c < n; ++c) row |= static_cast<std::uint32_t>(std::popcount(m2 & cols[c]) & 1) << c;
      const std::uint32_t upper = ~((std::uint32_t{1} << b) - 1);
      if (row != (dst.cube[a][b] & upper)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Some g in GL(n,2) with substitute(t1, g) = t2, by exhaustive search. Equal
/// forms give the identity; otherwise the first match in the enumeration order.
inline std::optional<F2Matrix> equivalent_f2(const TriFormF2& t1, const TriFormF2& t2,
                                             std::size_t cap = kDefaultGlCap) {
  if (t1.rank() != t2.rank()) throw std::invalid_argument("equivalent_f2: rank mismatch");
  const std::size_t n = t1.rank();
  check_gl_cap(n, cap);
  if (t1 == t2) return F2Matrix::identity(n);
  const detail::PackedCube src(t1), dst(t2);
  std::optional<F2Matrix> found;
  for_each_gl2(
      n,
      [&](const PackedRows& rows) {
        std::array<std::uint32_t, kMaxGlDimension> cols{};
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if ((rows[r] >> (n - 1 - c)) & 1u) cols[c] |= std::uint32_t{1} << r;
        if (!detail::substitution_matches(src, dst, cols)) return true;
        found = unpack_rows(rows);
        return false;
      },
      cap);
  return found;
}

}  // namespace conjspace
