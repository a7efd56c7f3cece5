#pragma once

#include "conjspace/normal_form.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace conjspace {

/// Sublattice of Z^n, stored by the canonical row-HNF of its generators.
class IntLattice {
 public:
  IntLattice() = default;
  explicit IntLattice(std::size_t ambient_dim) : dim_(ambient_dim), basis_(0, ambient_dim) {}

  /// Lattice spanned by the rows of `generators`.
  static IntLattice from_generators(const IntMatrix& generators) {
    IntLattice l(generators.cols());
    if (generators.rows() == 0) return l;
    HnfResult h = hnf(generators);
    l.basis_ = std::move(h.H);
    l.pivots_ = std::move(h.pivots);
    return l;
  }
  static IntLattice from_generators(const std::vector<IntVector>& rows, std::size_t dim) {
    return from_generators(IntMatrix::from_rows(rows, dim));
  }

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  /// Membership by back-substitution along the HNF pivots.
  bool contains(const IntVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("IntLattice::contains: dimension mismatch");
    IntVector r = v;
    std::size_t col = 0;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      const std::size_t p = pivots_[i];
      for (; col < p; ++col)
        if (r[col] != 0) return false;
      if (r[p] % basis_(i, p) != 0) return false;
      const Int q = r[p] / basis_(i, p);
      for (std::size_t c = p; c < dim_; ++c) r[c] -= q * basis_(i, c);
      col = p + 1;
    }
    for (; col < dim_; ++col)
      if (r[col] != 0) return false;
    return true;
  }

  /// Coefficients of v in the HNF basis; empty optional when v is not a member.
  std::optional<IntVector> coordinates(const IntVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("IntLattice::coordinates: dimension mismatch");
    IntVector r = v, coeffs(basis_.rows(), 0);
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      const std::size_t p = pivots_[i];
      if (r[p] % basis_(i, p) != 0) return std::nullopt;
      coeffs[i] = r[p] / basis_(i, p);
      for (std::size_t c = p; c < dim_; ++c) r[c] -= coeffs[i] * basis_(i, c);
    }
    for (const auto& x : r)
      if (x != 0) return std::nullopt;
    return coeffs;
  }

  bool contains_lattice(const IntLattice& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("IntLattice: dimension mismatch");
    for (std::size_t i = 0; i < other.rank(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Index in Z^n for full-rank lattices (product of pivots); 0 otherwise.
  Int index() const {
    if (rank() != dim_) return 0;
    Int d = 1;
    for (std::size_t i = 0; i < rank(); ++i) d *= basis_(i, i);
    return d;
  }

  friend bool operator==(const IntLattice& a, const IntLattice& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("IntLattice: dimension mismatch");
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const IntLattice& a, const IntLattice& b) { return !(a == b); }

 private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

inline bool lattice_contains(const IntLattice& l, const IntVector& v) { return l.contains(v); }
inline bool lattice_equal(const IntLattice& a, const IntLattice& b) { return a == b; }

/// Solutions of a system of congruences: {x in Z^n : rows_i . x = 0 mod moduli_i}.
inline IntLattice congruence_lattice(const IntMatrix& rows, const IntVector& moduli) {
  if (rows.rows() != moduli.size()) throw std::invalid_argument("congruence_lattice: modulus count mismatch");
  const std::size_t n = rows.cols(), k = rows.rows();
  if (k == 0) return IntLattice::from_generators(IntMatrix::identity(n));
  // kernel of [A | -diag(N)], projected onto the first n coordinates
  IntMatrix aug = rows.hstack((-1) * IntMatrix::diagonal(moduli));
  IntMatrix ker = integer_kernel(aug);
  return IntLattice::from_generators(ker.col_block(0, n));
}

}  // namespace conjspace
