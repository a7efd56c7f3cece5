#pragma once

// The group ring Lambda = Z[T]/(T^2 - 1) with involution a + bT -> a - bT,
// Z-free Lambda-modules, and (-1)-hermitian forms with their mod 2 shadow.

#include "conjspace/f2_matrix.hpp"
#include "conjspace/integer.hpp"
#include "conjspace/int_matrix.hpp"
#include "conjspace/lattice.hpp"
#include "conjspace/normal_form.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conjspace {

/// a + bT.
struct LambdaElem {
  Int a = 0;
  Int b = 0;

  friend LambdaElem operator+(const LambdaElem& x, const LambdaElem& y) { return {x.a + y.a, x.b + y.b}; }
  friend LambdaElem operator-(const LambdaElem& x, const LambdaElem& y) { return {x.a - y.a, x.b - y.b}; }
  friend LambdaElem operator-(const LambdaElem& x) { return {-x.a, -x.b}; }
  friend LambdaElem operator*(const LambdaElem& x, const LambdaElem& y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const LambdaElem& x, const LambdaElem& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const LambdaElem& x, const LambdaElem& y) { return !(x == y); }

  std::string str() const { return a.str() + (b < 0 ? "-" : "+") + Int(abs(b)).str() + "T"; }
};

inline LambdaElem lambda_mul(const LambdaElem& x, const LambdaElem& y) { return x * y; }
inline LambdaElem lambda_conj(const LambdaElem& x) { return {x.a, -x.b}; }
/// The augmentation mod 2: a + bT -> a + b.
inline std::uint8_t eps(const LambdaElem& x) { return is_odd(x.a + x.b) ? 1 : 0; }

/// Z^n with an involution T (acting on column vectors).
class LambdaModule {
 public:
  static LambdaModule make(IntMatrix T) {
    if (T.rows() != T.cols()) throw std::invalid_argument("LambdaModule: T must be square");
    if (T * T != IntMatrix::identity(T.rows())) throw std::domain_error("LambdaModule: T is not an involution (T^2 != 1)");
    return LambdaModule(std::move(T));
  }
  std::size_t rank() const { return T_.rows(); }
  const IntMatrix& T() const { return T_; }

 private:
  explicit LambdaModule(IntMatrix T) : T_(std::move(T)) {}
  IntMatrix T_;
};

/// M = Z_-^a + Z_+^b + Lambda^c.
struct LambdaDecomposition {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  /// Columns: a vectors with Tx = -x, b with Tx = x, then c pairs (w, Tw).
  IntMatrix certificate;
};

/// blockdiag(-I_a, I_b, [[0,1],[1,0]] x c).
inline IntMatrix lambda_block_model(std::size_t a, std::size_t b, std::size_t c) {
  IntMatrix m(a + b + 2 * c, a + b + 2 * c);
  for (std::size_t i = 0; i < a; ++i) m(i, i) = -1;
  for (std::size_t i = a; i < a + b; ++i) m(i, i) = 1;
  for (std::size_t p = 0; p < c; ++p) {
    const std::size_t i = a + b + 2 * p;
    m(i, i + 1) = 1;
    m(i + 1, i) = 1;
  }
  return m;
}

namespace detail {

// Columns of a matrix whose rows are a kernel basis.
inline IntMatrix kernel_columns(const IntMatrix& A) { return integer_kernel(A).transpose(); }

// dim over Z/2 of ker(X) / im(Y), where im(Y) is contained in ker(X) and the quotient is killed by 2.
inline std::size_t tate_rank(const IntMatrix& X, const IntMatrix& Y) {
  const IntMatrix K = integer_kernel(X);  // rows
  if (K.rows() == 0) return 0;
  const IntLattice ker = IntLattice::from_generators(K);
  IntMatrix coords(Y.cols(), ker.rank());
  for (std::size_t j = 0; j < Y.cols(); ++j) {
    const auto c = ker.coordinates(Y.col(j));
    if (!c) throw std::logic_error("tate_rank: image not inside kernel");
    coords.set_row(j, *c);
  }
  const IntVector d = snf(coords).diagonal();
  std::size_t count = ker.rank() - std::min(ker.rank(), d.size());
  for (const auto& x : d) {
    if (x == 1) continue;
    if (x != 2 && x != 0) throw std::logic_error("tate_rank: quotient not elementary abelian");
    ++count;
  }
  for (const auto& x : d)
    if (x == 0) throw std::logic_error("tate_rank: quotient not finite");
  return count;
}

}  // namespace detail

/// (dim ker(1+T)/im(1-T), dim ker(1-T)/im(1+T)) over Z/2.
inline std::pair<std::size_t, std::size_t> tate_ranks(const LambdaModule& M) {
  const IntMatrix I = IntMatrix::identity(M.rank());
  const IntMatrix plus = I + M.T(), minus = I - M.T();
  return {detail::tate_rank(plus, minus), detail::tate_rank(minus, plus)};
}

/// Splits M into Z_-, Z_+ and Lambda summands with an explicit basis.
inline LambdaDecomposition decompose(const LambdaModule& M) {
  const std::size_t n = M.rank();
  const IntMatrix& T = M.T();
  if (n == 0) return {0, 0, 0, IntMatrix(0, 0)};

  // K = ker(1 - T) is pure; extend a basis of it to a basis of Z^n.
  const IntMatrix Kcols = detail::kernel_columns(IntMatrix::identity(n) - T);
  const std::size_t k = Kcols.cols();
  IntMatrix B = IntMatrix::identity(n);
  if (k > 0) B = inverse_unimodular(snf(Kcols).U);
  IntMatrix Kb = B.col_block(0, k), Nb = B.col_block(k, n);

  // T = [[I, E], [0, -I]] in the basis (Kb, Nb); T acts as -1 modulo K.
  const IntMatrix Binv = inverse_unimodular(B);
  const IntMatrix E = (Binv * T * Nb).row_block(0, k);

  // E -> P^{-1} E Q with P = U^{-1}, Q = V puts E in Smith form;
  // then n -> n + k F changes E by 2F, leaving a 0/1 diagonal.
  std::vector<int> eps_diag(std::min(k, n - k), 0);
  if (k > 0 && n > k) {
    const SnfResult s = snf(E);
    Kb = Kb * inverse_unimodular(s.U);
    Nb = Nb * s.V;
    for (std::size_t j = 0; j < eps_diag.size(); ++j) {
      const Int d = s.D(j, j);
      const Int f = -floor_div(d, 2);
      for (std::size_t r = 0; r < n; ++r) Nb(r, j) += f * Kb(r, j);
      eps_diag[j] = is_odd(d) ? 1 : 0;
    }
  }

  std::vector<IntVector> minus_cols, plus_cols, pair_cols;
  std::vector<bool> k_used(k, false);
  for (std::size_t j = 0; j < n - k; ++j) {
    const IntVector w = Nb.col(j);
    if (j < eps_diag.size() && eps_diag[j] == 1) {
      pair_cols.push_back(w);
      pair_cols.push_back(T * w);
      k_used[j] = true;
    } else {
      minus_cols.push_back(w);
    }
  }
  for (std::size_t j = 0; j < k; ++j)
    if (!k_used[j]) plus_cols.push_back(Kb.col(j));

  LambdaDecomposition out{minus_cols.size(), plus_cols.size(), pair_cols.size() / 2, IntMatrix(n, n)};
  std::size_t col = 0;
  for (const auto* group : {&minus_cols, &plus_cols, &pair_cols})
    for (const auto& v : *group) {
      for (std::size_t r = 0; r < n; ++r) out.certificate(r, col) = v[r];
      ++col;
    }

  const IntMatrix Pinv = inverse_unimodular(out.certificate);
  if (Pinv * T * out.certificate != lambda_block_model(out.a, out.b, out.c))
    throw std::logic_error("decompose: certificate does not reproduce the block model");
  const auto [ta, tb] = tate_ranks(M);
  if (ta != out.a || tb != out.b) throw std::logic_error("decompose: summand counts disagree with Tate ranks");
  return out;
}

/// Square matrix over Lambda, pairing conjugate-linear in the first variable.
class LambdaForm {
 public:
  LambdaForm() = default;
  explicit LambdaForm(std::vector<std::vector<LambdaElem>> gram) : gram_(std::move(gram)) {
    for (const auto& row : gram_)
      if (row.size() != gram_.size()) throw std::invalid_argument("LambdaForm: gram matrix must be square");
  }
  static LambdaForm zero(std::size_t n) { return LambdaForm(std::vector<std::vector<LambdaElem>>(n, std::vector<LambdaElem>(n))); }

  std::size_t rank() const { return gram_.size(); }
  const LambdaElem& operator()(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  LambdaElem& operator()(std::size_t i, std::size_t j) { return gram_[i][j]; }

 private:
  std::vector<std::vector<LambdaElem>> gram_;
};

/// conj(gram)^T = -gram.
inline bool check_skew_hermitian(const LambdaForm& F) {
  for (std::size_t i = 0; i < F.rank(); ++i)
    for (std::size_t j = 0; j < F.rank(); ++j)
      if (lambda_conj(F(j, i)) != -F(i, j)) return false;
  return true;
}

/// lambda(x, y) = sum_ij conj(x_i) F_ij y_j for x, y in Lambda^n.
inline LambdaElem form_value(const LambdaForm& F, const std::vector<LambdaElem>& x, const std::vector<LambdaElem>& y) {
  if (x.size() != F.rank() || y.size() != F.rank()) throw std::invalid_argument("form_value: vector length mismatch");
  LambdaElem s;
  for (std::size_t i = 0; i < F.rank(); ++i)
    for (std::size_t j = 0; j < F.rank(); ++j) s = s + lambda_conj(x[i]) * F(i, j) * y[j];
  return s;
}

inline F2Matrix eps_reduce(const LambdaForm& F) {
  if (!check_skew_hermitian(F)) throw std::domain_error("eps_reduce: form is not (-1)-hermitian");
  F2Matrix out(F.rank(), F.rank());
  for (std::size_t i = 0; i < F.rank(); ++i)
    for (std::size_t j = 0; j < F.rank(); ++j) out.set(i, j, eps(F(i, j)));
  return out;
}

/// Diagonal entries of a (-1)-hermitian form are bT; eps vanishes on them iff every b is even.
inline bool eps_diagonal_vanishes(const LambdaForm& F) {
  for (std::size_t i = 0; i < F.rank(); ++i)
    if (eps(F(i, i))) return false;
  return true;
}

inline std::vector<F2Vector> radical_f2(const F2Matrix& B) {
  if (!B.is_symmetric()) throw std::domain_error("radical_f2: form is not symmetric");
  return f2_kernel(B);
}

namespace detail {

inline std::uint8_t bilinear(const F2Matrix& B, const F2Vector& u, const F2Vector& v) {
  std::uint8_t s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i]) continue;
    for (std::size_t j = 0; j < v.size(); ++j) s ^= static_cast<std::uint8_t>(v[j] & B.get(i, j));
  }
  return s;
}

inline void axpy(F2Vector& w, const F2Vector& v) {
  for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= v[i];
}

}  // namespace detail

inline std::uint8_t f2_form(const F2Matrix& B, const F2Vector& u, const F2Vector& v) { return detail::bilinear(B, u, v); }

struct HyperbolicBasis {
  std::vector<std::pair<F2Vector, F2Vector>> pairs;
  std::vector<F2Vector> radical;
};

/// Symplectic Gram-Schmidt for an alternating form over Z/2.
inline HyperbolicBasis hyperbolic_basis(const F2Matrix& B) {
  if (!B.is_symmetric()) throw std::domain_error("hyperbolic_basis: form is not symmetric");
  const std::size_t n = B.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (B.get(i, i)) throw std::domain_error("hyperbolic_basis: nonzero diagonal at " + std::to_string(i + 1));
  std::vector<F2Vector> pool;
  for (std::size_t i = 0; i < n; ++i) {
    F2Vector v(n, 0);
    v[i] = 1;
    pool.push_back(std::move(v));
  }
  HyperbolicBasis out;
  while (!pool.empty()) {
    F2Vector e = std::move(pool.front());
    pool.erase(pool.begin());
    std::size_t fi = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (detail::bilinear(B, e, pool[i])) {
        fi = i;
        break;
      }
    if (fi == pool.size()) {
      out.radical.push_back(std::move(e));
      continue;
    }
    F2Vector f = std::move(pool[fi]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(fi));
    for (auto& w : pool) {
      const std::uint8_t we = detail::bilinear(B, w, e), wf = detail::bilinear(B, w, f);
      if (wf) detail::axpy(w, e);
      if (we) detail::axpy(w, f);
    }
    out.pairs.emplace_back(std::move(e), std::move(f));
  }
  return out;
}

/// q(x) = sum_i x_i q(e_i) + sum_{i<j} x_i x_j B_ij, the quadratic refinement of B
/// with the given values on the standard basis.
inline std::uint8_t quadratic_value(const std::vector<std::uint8_t>& q_basis, const F2Matrix& B, const F2Vector& x) {
  if (q_basis.size() != B.rows() || x.size() != B.rows()) throw std::invalid_argument("quadratic_value: length mismatch");
  std::uint8_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    s ^= q_basis[i] & 1u;
    for (std::size_t j = i + 1; j < x.size(); ++j) s ^= static_cast<std::uint8_t>(x[j] & B.get(i, j));
  }
  return s;
}

/// Arf invariant sum_i q(e_i) q(f_i) over a hyperbolic basis. q must vanish on
/// the radical for the invariant to be defined.
inline std::uint8_t arf(const std::vector<std::uint8_t>& q_basis, const F2Matrix& B, const HyperbolicBasis& hb) {
  for (const auto& r : hb.radical)
    if (quadratic_value(q_basis, B, r)) throw std::domain_error("arf: q is nonzero on the radical");
  std::uint8_t s = 0;
  for (const auto& [e, f] : hb.pairs) s ^= quadratic_value(q_basis, B, e) & quadratic_value(q_basis, B, f);
  return s;
}

inline std::uint8_t arf(const std::vector<std::uint8_t>& q_basis, const F2Matrix& B) {
  return arf(q_basis, B, hyperbolic_basis(B));
}

/// Arf invariant from a full value table (q[x] for x read as a bit mask, bit i
/// = coordinate i). Checks q(u+v) = q(u) + q(v) + B(u,v) on all pairs of basis
/// vectors and that the table is the refinement those values determine.
inline std::uint8_t arf_from_table(const std::vector<std::uint8_t>& table, const F2Matrix& B) {
  const std::size_t n = B.rows();
  if (n > 20 || table.size() != (std::size_t{1} << n)) throw std::invalid_argument("arf_from_table: table size must be 2^n");
  if (table[0] & 1u) throw std::domain_error("arf_from_table: q(0) must be 0");
  std::vector<std::uint8_t> qb(n);
  for (std::size_t i = 0; i < n; ++i) qb[i] = table[std::size_t{1} << i] & 1u;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint8_t lhs = table[(std::size_t{1} << i) | (std::size_t{1} << j)] & 1u;
      if (lhs != ((qb[i] ^ qb[j] ^ static_cast<std::uint8_t>(B.get(i, j))) & 1u))
        throw std::domain_error("arf_from_table: refinement identity fails on basis pair (" + std::to_string(i + 1) +
                                "," + std::to_string(j + 1) + ")");
    }
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    F2Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
    if ((table[mask] & 1u) != quadratic_value(qb, B, x)) throw std::domain_error("arf_from_table: table is not quadratic");
  }
  return arf(qb, B);
}

}  // namespace conjspace
