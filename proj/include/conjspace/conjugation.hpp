#pragma once

// Applicability of the conjugation-existence theorem to a pair (X, M).
//
// The theorem needs H_1(M; Z) free of 2-primary torsion and a ring isomorphism
// H^*(X; Z/2) -> H^*(M; Z/2) halving degrees. Both rings are generated in their
// lowest positive degree with relations fixed by the triple product form and
// Poincare duality, so the isomorphism exists iff the ranks agree and the forms
// mu mod 2 and t are GL(m, 2)-equivalent.

#include "conjspace/threefold.hpp"
#include "conjspace/trilinear.hpp"
#include "conjspace/wall.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conjspace {

enum class Outcome { AdmitsByTheorem, NoRingIso, HypothesisFailed };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::AdmitsByTheorem: return "AdmitsByTheorem";
    case Outcome::NoRingIso: return "NoRingIso";
    case Outcome::HypothesisFailed: return "HypothesisFailed";
  }
  return "?";
}

struct Verdict {
  Outcome outcome = Outcome::NoRingIso;
  /// Present exactly for AdmitsByTheorem: g with substitute(mu mod 2, g) = t.
  std::optional<F2Matrix> certificate;
  std::vector<std::string> reasons;
};

inline Verdict decide(const WallData& X, const M3Data& M, std::size_t gl_cap = kDefaultGlCap) {
  if (!M.no_two_torsion()) return {Outcome::HypothesisFailed, std::nullopt, {"2-primary torsion"}};
  if (X.m() != M.b1())
    return {Outcome::NoRingIso, std::nullopt,
            {"rank mismatch: m = " + std::to_string(X.m()) + ", b1 = " + std::to_string(M.b1())}};
  auto g = equivalent_f2(mod2_ring(X), M.t(), gl_cap);
  if (!g) return {Outcome::NoRingIso, std::nullopt, {"mu mod 2 and t are not GL(m,2)-equivalent"}};
  return {Outcome::AdmitsByTheorem, std::move(g), {}};
}

/// When every square x^2 is divisible by 2, the 3-manifold with free homology
/// and cup form mu mod 2 exists, and X admits a conjugation onto it.
inline std::optional<std::pair<M3Data, Verdict>> mcor_admits(const WallData& X, std::size_t gl_cap = kDefaultGlCap) {
  if (!even_squares(X.mu())) return std::nullopt;
  M3Data M = M3Data::make(X.m(), {}, mod2_ring(X));
  Verdict v = decide(X, M, gl_cap);
  return std::make_pair(std::move(M), std::move(v));
}

inline WallData s6_data() { return *WallData::validate(0, TriFormZ(0), {}).data; }

/// Decision against X = S^6.
inline Verdict smith_converse(const M3Data& M) { return decide(s6_data(), M); }

}  // namespace conjspace
