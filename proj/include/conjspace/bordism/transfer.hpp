#pragma once

// Mod 2 homology transfer tr: H_d(Q_m; Z/2) -> H_d(K(Z^m,2); Z/2) in degrees
// 2, 4, 6, and the pushforward pi_* obtained by dualizing pi^*.
//
// Homology bases are the duals of qm_basis / k_basis. A matrix with rows
// indexed by a basis B and columns by a basis C sends the dual of C[j] to the
// sum of duals of B[i] with entry (i, j) set.

#include "conjspace/bordism/qm_ring.hpp"
#include "conjspace/f2_matrix.hpp"
#include "conjspace/integer.hpp"
#include "conjspace/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace conjspace {

struct UnsupportedDegree : std::domain_error {
  using std::domain_error::domain_error;
};

/// Matrix of pi^*: H^d(Q_m) -> H^d(K), columns indexed by qm_basis(m, d).
inline F2Matrix pi_pullback_matrix(std::size_t m, unsigned d) {
  const auto qb = qm_basis(m, d);
  const auto kb = k_basis(m, d);
  std::map<KMonomial, std::size_t> row;
  for (std::size_t r = 0; r < kb.size(); ++r) row[kb[r]] = r;
  const auto pi = pi_pullback(m);
  F2Matrix out(kb.size(), qb.size());
  for (std::size_t c = 0; c < qb.size(); ++c) {
    const KPoly image = pi(qb[c]);
    for (const auto& u : image.terms()) out.set(row.at(u), c, true);
  }
  return out;
}

/// pi_*: H_d(K) -> H_d(Q_m), the transpose of pi^*.
inline F2Matrix pi_push_matrix(std::size_t m, unsigned d) { return pi_pullback_matrix(m, d).transpose(); }

namespace detail {

inline std::size_t k_row(const std::vector<KMonomial>& kb, KMonomial u) {
  std::sort(u.begin(), u.end());
  auto it = std::lower_bound(kb.begin(), kb.end(), u);
  if (it == kb.end() || *it != u) throw std::logic_error("transfer: monomial missing from basis");
  return static_cast<std::size_t>(it - kb.begin());
}

}  // namespace detail

/// The transfer table, rows k_basis(m, d), columns qm_basis(m, d).
inline F2Matrix transfer_matrix(std::size_t m, unsigned d) {
  if (d != 2 && d != 4 && d != 6)
    throw UnsupportedDegree("transfer: no table for degree " + std::to_string(d) + " (only 2, 4, 6)");
  const auto qb = qm_basis(m, d);
  const auto kb = k_basis(m, d);
  F2Matrix out(kb.size(), qb.size());
  for (std::size_t c = 0; c < qb.size(); ++c) {
    const QmMonomial& u = qb[c];
    if (u.b != 2) continue;  // every class without t^2 transfers to 0
    std::vector<std::size_t> xs;
    for (std::size_t i = 0; i < u.alpha.size(); ++i)
      for (unsigned e = 0; e < u.alpha[i]; ++e) xs.push_back(i);
    auto put = [&](KMonomial k) { out.flip(detail::k_row(kb, std::move(k)), c); };
    if (d == 2) {
      // (t^2)^* -> sum_j e_j
      for (std::size_t j = 0; j < m; ++j) put({j});
    } else if (d == 4) {
      // (t^2 x_i)^* -> sum_{j != i} e_ij
      const std::size_t i = xs.at(0);
      for (std::size_t j = 0; j < m; ++j)
        if (j != i) put({i, j});
    } else if (u.a == 1) {
      // (t^2 q)^* -> sum_{i<=j<=k} e_ijk
      for (const auto& k : kb) put(k);
    } else if (xs[0] == xs[1]) {
      // (t^2 x_i^2)^* -> sum_j e_iij
      const std::size_t i = xs[0];
      for (std::size_t j = 0; j < m; ++j) put({i, i, j});
    } else {
      // (t^2 x_i x_j)^* -> sum_{k != i,j} e_ijk
      const std::size_t i = xs[0], j = xs[1];
      for (std::size_t k = 0; k < m; ++k)
        if (k != i && k != j) put({i, j, k});
    }
  }
  return out;
}

/// Im(tr) = Ker(pi_*) as subspaces of H_d(K; Z/2).
inline bool transfer_exact(std::size_t m, unsigned d) {
  const F2Matrix tr = transfer_matrix(m, d);
  const auto ker = f2_kernel(pi_push_matrix(m, d));
  return f2_same_column_span(tr, f2_from_columns(ker, tr.rows()));
}

/// Integral classes F in H_d(K; Z) whose reduction lies in Ker(pi_*); this is
/// the lattice generated by lifts of the transfer image together with 2 H_d,
/// since tr(pi_*(F)) = 2F.
inline IntLattice transfer_image_lattice(std::size_t m, unsigned d) {
  const F2Matrix push = pi_push_matrix(m, d);
  IntMatrix rows(push.rows(), push.cols());
  for (std::size_t r = 0; r < push.rows(); ++r)
    for (std::size_t c = 0; c < push.cols(); ++c) rows(r, c) = push.get(r, c) ? 1 : 0;
  return congruence_lattice(rows, IntVector(push.rows(), 2));
}

/// Lattice spanned by integral lifts of the columns of tr plus 2 Z^N.
inline IntLattice transfer_lift_lattice(std::size_t m, unsigned d) {
  const F2Matrix tr = transfer_matrix(m, d);
  std::vector<IntVector> gens;
  for (std::size_t c = 0; c < tr.cols(); ++c) {
    IntVector v(tr.rows(), 0);
    for (std::size_t r = 0; r < tr.rows(); ++r) v[r] = tr.get(r, c) ? 1 : 0;
    gens.push_back(std::move(v));
  }
  for (std::size_t r = 0; r < tr.rows(); ++r) gens.push_back(unit_vector(tr.rows(), r, 2));
  return IntLattice::from_generators(gens, tr.rows());
}

}  // namespace conjspace
