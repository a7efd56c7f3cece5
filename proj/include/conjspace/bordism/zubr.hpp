#pragma once

// Spin bordism over K(Z^m, 2) in Zubr coordinates (lambda, mu): the image of
// the transfer from the quotient Q_m, the pushforward p_* along
// Z^m -> Z^{m-1} (e_m -> -sum e_i), and the lattice of reachable differences.

#include "conjspace/integer.hpp"
#include "conjspace/lattice.hpp"
#include "conjspace/trilinear.hpp"
#include "conjspace/wall.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace conjspace {

/// Largest rank accepted by the lattice constructions below.
inline constexpr std::size_t kMaxBordismRank = 12;

inline void check_bordism_rank(std::size_t m, std::size_t lo) {
  if (m < lo) throw std::invalid_argument("bordism: rank must be at least " + std::to_string(lo));
  if (m > kMaxBordismRank)
    throw std::length_error("bordism: rank " + std::to_string(m) + " exceeds the cap " + std::to_string(kMaxBordismRank));
}

/// A-hat(M, w) from Zubr coordinates. With P1(e_i) = 4 mu_iii - 24 lambda_i,
/// A-hat(w) = sum_i w_i lambda_i + (mu(w,w,w) - sum_i w_i mu_iii) / 6.
inline Int zubr_ahat(const ZubrClass& z, const IntVector& w) {
  if (w.size() != z.m()) throw std::invalid_argument("zubr_ahat: vector length mismatch");
  Int linear = 0, diag = 0;
  for (std::size_t i = 0; i < z.m(); ++i) {
    linear += w[i] * z.lambda[i];
    diag += w[i] * z.mu(i, i, i);
  }
  return linear + exact_div(eval(z.mu, w, w, w) - diag, 6);
}

/// Columns e_i - e_m (i < m): the pullback of v_i along p.
inline IntMatrix p_substitution(std::size_t m) {
  IntMatrix S(m, m - 1);
  for (std::size_t a = 0; a + 1 < m; ++a) {
    S(a, a) = 1;
    S(m - 1, a) = -1;
  }
  return S;
}

/// p_*: classes over K(Z^m,2) -> classes over K(Z^{m-1},2).
/// mu' = mu(p^* -, p^* -, p^* -) and lambda'_i = lambda_i - lambda_m + (mu_imm - mu_iim) / 2.
/// Only the pairs (i, m) enter the halving; an odd difference throws std::domain_error.
inline ZubrClass p_star(const ZubrClass& z) {
  const std::size_t m = z.m();
  if (m == 0) throw std::invalid_argument("p_star: rank must be at least 1");
  const std::size_t last = m - 1;
  IntVector lambda(m - 1);
  for (std::size_t i = 0; i < last; ++i) {
    const Int diff = z.mu(i, last, last) - z.mu(i, i, last);
    if (is_odd(diff))
      throw std::domain_error("p_star: mu_imm - mu_iim is odd for i = " + std::to_string(i + 1) +
                              "; the class violates the image condition");
    lambda[i] = z.lambda[i] - z.lambda[last] + diff / 2;
  }
  return {std::move(lambda), substitute(z.mu, p_substitution(m))};
}

namespace detail {

inline bool is_repeated(const Triple& t) { return t[0] == t[1] || t[1] == t[2]; }

}  // namespace detail

/// Congruences cutting out E^3_{6,0} inside H_6(K(Z^m,2)) = Z^{C(m+2,3)}:
/// all mu with a repeated index share one parity, and for i<j<k
/// 2 mu_ijk = mu_iij + mu_ijj + mu_iik + mu_ikk + mu_jjk + mu_jkk mod 4.
inline std::pair<IntMatrix, IntVector> e3_congruences(std::size_t m) {
  const auto triples = sorted_triples(m);
  const std::size_t n = triples.size();
  std::vector<IntVector> rows;
  IntVector moduli;
  std::optional<std::size_t> first_repeated;
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (!detail::is_repeated(triples[idx])) continue;
    if (!first_repeated) {
      first_repeated = idx;
      continue;
    }
    IntVector r(n, 0);
    r[idx] = 1;
    r[*first_repeated] = -1;
    rows.push_back(std::move(r));
    moduli.push_back(2);
  }
  for (std::size_t idx = 0; idx < n; ++idx) {
    const auto [i, j, k] = triples[idx];
    if (detail::is_repeated(triples[idx])) continue;
    IntVector r(n, 0);
    r[idx] = 2;
    for (const Triple& t : {Triple{i, i, j}, Triple{i, j, j}, Triple{i, i, k}, Triple{i, k, k}, Triple{j, j, k},
                            Triple{j, k, k}})
      r[triple_index(m, t)] -= 1;
    rows.push_back(std::move(r));
    moduli.push_back(4);
  }
  return {IntMatrix::from_rows(rows, n), moduli};
}

inline IntLattice e3_lattice(std::size_t m) {
  check_bordism_rank(m, 1);
  const auto [rows, moduli] = e3_congruences(m);
  return congruence_lattice(rows, moduli);
}

/// The displayed generators of E^3_{6,0}, as mu-vectors (0-based, last = m-1):
///   sum_{i<=j<=k} e_ijk; 2e_iii (i<m); sum_j 2e_iij (i<m);
///   2e_imm + sum_{k != i,m} e_imk (i<m); 2e_ijj + sum_{k != i,j} e_ijk (i != j, i,j < m);
///   2e_ijk (i<j<k).
inline std::vector<IntVector> e3_listed_generators(std::size_t m) {
  const std::size_t n = triple_count(m), last = m - 1;
  std::vector<IntVector> gens;
  auto e = [&](std::size_t i, std::size_t j, std::size_t k) { return triple_index(m, {i, j, k}); };
  gens.emplace_back(n, 1);
  for (std::size_t i = 0; i < last; ++i) gens.push_back(unit_vector(n, e(i, i, i), 2));
  for (std::size_t i = 0; i < last; ++i) {
    IntVector v(n, 0);
    for (std::size_t j = 0; j < m; ++j) v[e(i, i, j)] += 2;
    gens.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < last; ++i) {
    IntVector v(n, 0);
    v[e(i, last, last)] += 2;
    for (std::size_t k = 0; k < m; ++k)
      if (k != i && k != last) v[e(i, last, k)] += 1;
    gens.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < last; ++i)
    for (std::size_t j = 0; j < last; ++j) {
      if (i == j) continue;
      IntVector v(n, 0);
      v[e(i, j, j)] += 2;
      for (std::size_t k = 0; k < m; ++k)
        if (k != i && k != j) v[e(i, j, k)] += 1;
      gens.push_back(std::move(v));
    }
  for (const auto& [i, j, k] : sorted_triples(m))
    if (i < j && j < k) gens.push_back(unit_vector(n, e(i, j, k), 2));
  return gens;
}

/// Membership in the image of the transfer Omega_6^B -> Omega_6^Spin(K(Z^m,2)):
/// all lambda_i even and mu in E^3_{6,0}.
inline bool trans_image_member(const ZubrClass& z) {
  for (const auto& l : z.lambda)
    if (is_odd(l)) return false;
  const std::size_t m = z.m();
  std::optional<bool> parity;
  for (const auto& t : sorted_triples(m)) {
    if (!detail::is_repeated(t)) continue;
    const bool odd = is_odd(z.mu(t[0], t[1], t[2]));
    if (parity && *parity != odd) return false;
    parity = odd;
  }
  for (const auto& [i, j, k] : sorted_triples(m)) {
    if (!(i < j && j < k)) continue;
    const Int s = z.mu(i, i, j) + z.mu(i, j, j) + z.mu(i, i, k) + z.mu(i, k, k) + z.mu(j, j, k) + z.mu(j, k, k);
    if (pmod(2 * z.mu(i, j, k) - s, 4) != 0) return false;
  }
  return true;
}

/// The transfer image in Zubr coordinates: 2 Z^m for lambda, E^3 for mu.
inline IntLattice trans_image_lattice(std::size_t m) {
  const IntLattice e3 = e3_lattice(m);
  const std::size_t n = triple_count(m);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < m; ++i) gens.push_back(unit_vector(m + n, i, 2));
  for (std::size_t r = 0; r < e3.rank(); ++r) {
    IntVector v(m, 0);
    const IntVector row = e3.basis().row(r);
    v.insert(v.end(), row.begin(), row.end());
    gens.push_back(std::move(v));
  }
  return IntLattice::from_generators(gens, m + n);
}

/// Listed transfer-image generators as classes: 2 d_i for every i, then e3_listed_generators.
inline std::vector<ZubrClass> trans_image_listed_classes(std::size_t m) {
  std::vector<ZubrClass> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(ZubrClass::d(m, i, 2));
  for (auto& mu : e3_listed_generators(m)) out.emplace_back(IntVector(m, 0), TriFormZ::from_coefficients(m, std::move(mu)));
  return out;
}

/// span{d_i} + span{2 e_ijk} in Z^{m-1} + Z^{C(m+1,3)}, the expected image of
/// Omega_6^B -> Omega_6^Spin(K(Z^{m-1},2)).
inline IntLattice composite_image_lattice(std::size_t m) {
  check_bordism_rank(m, 2);
  const std::size_t r = m - 1, n = triple_count(r);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < r; ++i) gens.push_back(unit_vector(r + n, i));
  for (std::size_t t = 0; t < n; ++t) gens.push_back(unit_vector(r + n, r + t, 2));
  return IntLattice::from_generators(gens, r + n);
}

/// Lattice spanned by p_* of the given classes.
inline IntLattice p_star_image(const std::vector<ZubrClass>& classes, std::size_t m) {
  const std::size_t dim = (m - 1) + triple_count(m - 1);
  std::vector<IntVector> rows;
  for (const auto& z : classes) rows.push_back(p_star(z).coords());
  return IntLattice::from_generators(rows, dim);
}

/// Whether target can be reached from base by the available modifications
/// (differences in span{d_i, 2 e_ijk}). Classes live over K(Z^r, 2), r = rank.
inline bool reachable(const ZubrClass& target, const ZubrClass& base) {
  if (target.m() != base.m()) throw std::invalid_argument("reachable: rank mismatch");
  const std::size_t r = target.m();
  if (r == 0) return true;
  check_bordism_rank(r + 1, 2);
  return composite_image_lattice(r + 1).contains((target - base).coords());
}

}  // namespace conjspace
