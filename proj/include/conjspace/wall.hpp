#pragma once

// Wall invariants (m, mu, P1) of simply-connected spin 6-manifolds with free
// cohomology, and Zubr bordism coordinates.

#include "conjspace/integer.hpp"
#include "conjspace/trilinear.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conjspace {

struct WallViolation {
  enum class Kind { Parity, Pontryagin };
  Kind kind;
  /// Witness x; for a parity violation also y with mu(x,x,y) != mu(x,y,y) mod 2.
  IntVector x;
  IntVector y;
  std::string message;
};

inline std::string to_string(WallViolation::Kind k) {
  return k == WallViolation::Kind::Parity ? "parity" : "pontryagin";
}

struct WallOptions {
  /// When positive, additionally scan every x in [-box, box]^m for the mod-24
  /// congruence. The finite-difference check is already complete; this is a
  /// cross-check only.
  long long exhaustive_box = 0;
};

namespace detail {

inline Int cubic(const TriFormZ& mu, const IntVector& x) { return eval(mu, x, x, x); }

// P1(x) - 4 mu(x,x,x)
inline Int pontryagin_defect(const TriFormZ& mu, const IntVector& p1, const IntVector& x) {
  return dot(p1, x) - 4 * cubic(mu, x);
}

// f(x) = P1(x) - 4 mu(x,x,x) is an integer cubic, so
// f(x) = sum_{|b| <= 3} (Delta^b f)(0) * prod_i binom(x_i, b_i)
// and f = 0 mod 24 on all of Z^m iff it vanishes at every b in N^m with |b| <= 3.
// Points are visited by degree and then by sorted index tuple, so a failure on
// a basis vector is reported as e_i.
inline std::optional<IntVector> pontryagin_witness(const TriFormZ& mu, const IntVector& p1) {
  const std::size_t m = mu.rank();
  auto check = [&](const IntVector& x) { return pmod(pontryagin_defect(mu, p1, x), 24) != 0; };
  IntVector x(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    x[i] += 1;
    if (check(x)) return x;
    x[i] -= 1;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      x[i] += 1, x[j] += 1;
      if (check(x)) return x;
      x[i] -= 1, x[j] -= 1;
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = j; k < m; ++k) {
        x[i] += 1, x[j] += 1, x[k] += 1;
        if (check(x)) return x;
        x[i] -= 1, x[j] -= 1, x[k] -= 1;
      }
  return std::nullopt;
}

inline std::optional<IntVector> pontryagin_witness_box(const TriFormZ& mu, const IntVector& p1, long long box) {
  const std::size_t m = mu.rank();
  IntVector x(m, -box);
  for (;;) {
    if (pmod(pontryagin_defect(mu, p1, x), 24) != 0) return x;
    std::size_t i = 0;
    while (i < m && x[i] == box) x[i++] = -box;
    if (i == m) return std::nullopt;
    x[i] += 1;
  }
}

}  // namespace detail

struct WallValidation;

class WallData {
 public:
  /// Checks both congruences; never throws for well-shaped input.
  static WallValidation validate(std::size_t m, TriFormZ mu, IntVector p1, const WallOptions& opts = {});

  std::size_t m() const { return mu_.rank(); }
  const TriFormZ& mu() const { return mu_; }
  const IntVector& p1() const { return p1_; }

  friend bool operator==(const WallData& a, const WallData& b) { return a.mu_ == b.mu_ && a.p1_ == b.p1_; }

 private:
  WallData(TriFormZ mu, IntVector p1) : mu_(std::move(mu)), p1_(std::move(p1)) {}
  TriFormZ mu_;
  IntVector p1_;
};

struct WallValidation {
  std::optional<WallData> data;
  std::vector<WallViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline WallValidation WallData::validate(std::size_t m, TriFormZ mu, IntVector p1, const WallOptions& opts) {
  if (mu.rank() != m) throw std::invalid_argument("wall: mu has rank " + std::to_string(mu.rank()) + ", expected " + std::to_string(m));
  if (p1.size() != m) throw std::invalid_argument("wall: p1 has length " + std::to_string(p1.size()) + ", expected " + std::to_string(m));
  WallValidation out;
  if (auto w = wall_parity_witness(mu)) {
    const auto [i, j] = *w;
    out.violations.push_back({WallViolation::Kind::Parity, unit_vector(m, i), unit_vector(m, j),
                              "mu(x,x,y) != mu(x,y,y) mod 2"});
  }
  auto witness = detail::pontryagin_witness(mu, p1);
  if (opts.exhaustive_box > 0) {
    auto boxed = detail::pontryagin_witness_box(mu, p1, opts.exhaustive_box);
    if (boxed && !witness) throw std::logic_error("wall: box scan found a mod 24 violation missed by the finite check");
  }
  if (witness) {
    const Int lhs = dot(p1, *witness), rhs = 4 * detail::cubic(mu, *witness);
    out.violations.push_back({WallViolation::Kind::Pontryagin, *witness, {},
                              "P1(x) = " + lhs.str() + " but 4 mu(x,x,x) = " + rhs.str() + " mod 24"});
  }
  if (out.violations.empty()) out.data = WallData(std::move(mu), std::move(p1));
  return out;
}

/// A-hat(M, w) = (4 mu(w,w,w) - P1(w)) / 24; throws std::domain_error when the
/// division is not exact.
inline Int ahat(const TriFormZ& mu, const IntVector& p1, const IntVector& w) {
  if (w.size() != mu.rank()) throw std::invalid_argument("ahat: vector length mismatch");
  return exact_div(-detail::pontryagin_defect(mu, p1, w), 24);
}
inline Int ahat(const WallData& W, const IntVector& w) { return ahat(W.mu(), W.p1(), w); }

/// Spin bordism class over K(Z^m, 2) in Zubr coordinates.
struct ZubrClass {
  IntVector lambda;
  TriFormZ mu;

  ZubrClass() = default;
  ZubrClass(IntVector l, TriFormZ t) : lambda(std::move(l)), mu(std::move(t)) {
    if (lambda.size() != mu.rank()) throw std::invalid_argument("ZubrClass: lambda and mu ranks differ");
  }
  explicit ZubrClass(std::size_t m) : lambda(m, 0), mu(m) {}

  std::size_t m() const { return lambda.size(); }

  /// Image condition mu_iij = mu_ijj mod 2.
  bool is_valid() const { return wall_parity_ok(mu); }

  /// Lambda followed by mu in sorted-triple order.
  IntVector coords() const {
    IntVector v = lambda;
    v.insert(v.end(), mu.coefficients().begin(), mu.coefficients().end());
    return v;
  }
  static ZubrClass from_coords(std::size_t m, const IntVector& v) {
    if (v.size() != m + triple_count(m)) throw std::invalid_argument("ZubrClass: coordinate length mismatch");
    return {IntVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m)),
            TriFormZ::from_coefficients(m, IntVector(v.begin() + static_cast<std::ptrdiff_t>(m), v.end()))};
  }

  /// Basis classes: d_i (lambda = e_i) and e_ijk (mu_ijk = 1), 0-based indices.
  static ZubrClass d(std::size_t m, std::size_t i, const Int& scale = 1) {
    ZubrClass z(m);
    z.lambda[i] = scale;
    return z;
  }
  static ZubrClass e(std::size_t m, std::size_t i, std::size_t j, std::size_t k, const Int& scale = 1) {
    ZubrClass z(m);
    z.mu.set(i, j, k, scale);
    return z;
  }

  friend ZubrClass operator+(const ZubrClass& a, const ZubrClass& b) { return {a.lambda + b.lambda, a.mu + b.mu}; }
  friend ZubrClass operator-(const ZubrClass& a, const ZubrClass& b) { return {a.lambda - b.lambda, a.mu - b.mu}; }
  friend ZubrClass operator*(const Int& s, const ZubrClass& a) { return {s * a.lambda, s * a.mu}; }
  friend bool operator==(const ZubrClass& a, const ZubrClass& b) { return a.lambda == b.lambda && a.mu == b.mu; }
};

inline ZubrClass zubr_coords(const WallData& W) {
  IntVector lambda;
  for (std::size_t i = 0; i < W.m(); ++i) lambda.push_back(ahat(W, unit_vector(W.m(), i)));
  return {std::move(lambda), W.mu()};
}

inline TriFormF2 mod2_ring(const WallData& W) { return reduce_mod2(W.mu()); }

}  // namespace conjspace
