#pragma once

// The algebraic data of a closed oriented 3-manifold M that the conjugation
// results consume: b1 over Z/2, the torsion of H_1(M; Z), and the Z/2 triple
// cup product form on H^1.

#include "conjspace/integer.hpp"
#include "conjspace/trilinear.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace conjspace {

/// t(v,v,w) = t(v,w,w) for all v, w in F_2^n. Over Z/2 the map v -> t(v,v,w)
/// is additive, so basis vectors suffice.
inline bool postnikov_realizable(const TriFormF2& t) {
  for (std::size_t i = 0; i < t.rank(); ++i)
    for (std::size_t j = 0; j < t.rank(); ++j)
      if (t(i, i, j) != t(i, j, j)) return false;
  return true;
}

/// t(v,v,w) = 0 for all v, w.
inline bool sullivan_realizable_free(const TriFormF2& t) {
  for (std::size_t i = 0; i < t.rank(); ++i)
    for (std::size_t j = 0; j < t.rank(); ++j)
      if (t(i, i, j)) return false;
  return true;
}

class M3Data {
 public:
  /// Throws std::invalid_argument on shape errors and std::domain_error when
  /// odd torsion is combined with a form having t(v,v,w) != 0 (then v^2 = Sq^1 v = 0).
  static M3Data make(std::size_t b1, IntVector torsion, TriFormF2 t) {
    if (t.rank() != b1)
      throw std::invalid_argument("M3Data: t has rank " + std::to_string(t.rank()) + ", expected b1 = " + std::to_string(b1));
    for (const auto& f : torsion)
      if (f <= 1) throw std::invalid_argument("M3Data: torsion invariant factors must exceed 1, got " + f.str());
    M3Data d(std::move(torsion), std::move(t));
    if (d.no_two_torsion() && !sullivan_realizable_free(d.t_))
      throw std::domain_error("M3Data: without 2-torsion every square v^2 vanishes, but t(v,v,w) != 0");
    return d;
  }

  std::size_t b1() const { return t_.rank(); }
  const IntVector& torsion() const { return torsion_; }
  const TriFormF2& t() const { return t_; }

  bool no_two_torsion() const {
    for (const auto& f : torsion_)
      if (is_even(f)) return false;
    return true;
  }

  bool is_z2_homology_sphere() const { return b1() == 0 && no_two_torsion(); }

 private:
  M3Data(IntVector torsion, TriFormF2 t) : torsion_(std::move(torsion)), t_(std::move(t)) {}
  IntVector torsion_;
  TriFormF2 t_;
};

inline bool no_two_torsion(const M3Data& M) { return M.no_two_torsion(); }
inline bool is_z2_homology_sphere(const M3Data& M) { return M.is_z2_homology_sphere(); }

}  // namespace conjspace
