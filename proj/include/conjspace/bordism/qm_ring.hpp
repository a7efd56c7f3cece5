#pragma once

// Mod 2 cohomology rings used by the transfer computation:
//   H^*(Q_m; Z/2) = Z/2[q, t, x_1, ..., x_{m-1}] / (t^3),  |q| = 4, |t| = 1, |x_i| = 2
//   H^*(K(Z^m, 2); Z/2) = Z/2[v_1, ..., v_m],               |v_i| = 2
// and the pullbacks along pi: K(Z^m,2) -> Q_m and the projections Q_m -> Q_n.
// All indices are 0-based.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace conjspace {

struct QmMonomial {
  std::size_t m = 1;
  unsigned a = 0;  // exponent of q
  unsigned b = 0;  // exponent of t, at most 2
  std::vector<unsigned> alpha;  // exponents of x_1 .. x_{m-1}

  static QmMonomial one(std::size_t m) { return {m, 0, 0, std::vector<unsigned>(m - 1, 0)}; }
  static QmMonomial q(std::size_t m) { return {m, 1, 0, std::vector<unsigned>(m - 1, 0)}; }
  static QmMonomial t(std::size_t m) { return {m, 0, 1, std::vector<unsigned>(m - 1, 0)}; }
  static QmMonomial x(std::size_t m, std::size_t i) {
    if (i + 1 >= m) throw std::out_of_range("QmMonomial::x: index out of range");
    QmMonomial u = one(m);
    u.alpha[i] = 1;
    return u;
  }

  unsigned degree() const {
    unsigned d = 4 * a + b;
    for (auto e : alpha) d += 2 * e;
    return d;
  }

  /// Lexicographic on (a, b, alpha).
  auto operator<=>(const QmMonomial& o) const {
    return std::tie(a, b, alpha) <=> std::tie(o.a, o.b, o.alpha);
  }
  bool operator==(const QmMonomial& o) const = default;

  std::string str() const {
    std::string s;
    auto factor = [&s](const std::string& g, unsigned e) {
      if (e == 0) return;
      if (!s.empty()) s += ' ';
      s += g;
      if (e > 1) s += '^' + std::to_string(e);
    };
    factor("q", a);
    factor("t", b);
    for (std::size_t i = 0; i < alpha.size(); ++i) factor("x" + std::to_string(i + 1), alpha[i]);
    return s.empty() ? "1" : s;
  }
};

/// Product in the truncated ring; empty when the t-exponent reaches 3.
inline std::optional<QmMonomial> qm_mult(const QmMonomial& u, const QmMonomial& v) {
  if (u.m != v.m) throw std::invalid_argument("qm_mult: rank mismatch");
  if (u.b + v.b >= 3) return std::nullopt;
  QmMonomial w{u.m, u.a + v.a, u.b + v.b, u.alpha};
  for (std::size_t i = 0; i < w.alpha.size(); ++i) w.alpha[i] += v.alpha[i];
  return w;
}

namespace detail {

inline void exponent_vectors(std::size_t len, unsigned total, std::vector<unsigned>& cur, std::size_t pos,
                             std::vector<std::vector<unsigned>>& out) {
  if (pos == len) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= total; ++e) {
    cur[pos] = e;
    exponent_vectors(len, total - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

// All exponent vectors of length len summing to total, lexicographically ascending.
inline std::vector<std::vector<unsigned>> exponent_vectors(std::size_t len, unsigned total) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(len, 0);
  if (len == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  exponent_vectors(len, total, cur, 0, out);
  return out;
}

}  // namespace detail

/// Monomials of degree d, ordered lexicographically by (a, b, alpha).
inline std::vector<QmMonomial> qm_basis(std::size_t m, unsigned d) {
  if (m == 0) throw std::invalid_argument("qm_basis: m must be positive");
  std::vector<QmMonomial> out;
  for (unsigned a = 0; 4 * a <= d; ++a)
    for (unsigned b = 0; b <= 2 && 4 * a + b <= d; ++b) {
      const unsigned rest = d - 4 * a - b;
      if (rest % 2) continue;
      for (auto& alpha : detail::exponent_vectors(m - 1, rest / 2)) out.push_back({m, a, b, std::move(alpha)});
    }
  return out;
}

/// Monomial in v_1..v_m, stored as its sorted index tuple (v_1^2 v_3 -> {0,0,2}).
using KMonomial = std::vector<std::size_t>;

/// Monomials of degree d (= 2 * length) in lexicographic order of index tuples.
inline std::vector<KMonomial> k_basis(std::size_t m, unsigned d) {
  if (d % 2) return {};
  const std::size_t len = d / 2;
  std::vector<KMonomial> out;
  KMonomial cur(len);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      cur[pos] = i;
      self(self, pos + 1, i);
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline std::string k_label(const KMonomial& u) {
  std::string s = "e";
  for (auto i : u) s += std::to_string(i + 1);
  return s;
}

/// Polynomials over Z/2 as sets of monomials; addition is symmetric difference.
template <class Mono>
class F2Poly {
 public:
  F2Poly() = default;
  explicit F2Poly(Mono u) { terms_.insert(std::move(u)); }

  const std::set<Mono>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool contains(const Mono& u) const { return terms_.count(u) != 0; }

  F2Poly& operator+=(const Mono& u) {
    auto [it, inserted] = terms_.insert(u);
    if (!inserted) terms_.erase(it);
    return *this;
  }
  F2Poly& operator+=(const F2Poly& p) {
    for (const auto& u : p.terms_) *this += u;
    return *this;
  }
  friend F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }
  bool operator==(const F2Poly& o) const = default;

 private:
  std::set<Mono> terms_;
};

using QPoly = F2Poly<QmMonomial>;
using KPoly = F2Poly<KMonomial>;

inline QPoly operator*(const QPoly& p, const QPoly& r) {
  QPoly out;
  for (const auto& u : p.terms())
    for (const auto& v : r.terms())
      if (auto w = qm_mult(u, v)) out += *w;
  return out;
}

inline KPoly operator*(const KPoly& p, const KPoly& r) {
  KPoly out;
  for (const auto& u : p.terms())
    for (const auto& v : r.terms()) {
      KMonomial w = u;
      w.insert(w.end(), v.begin(), v.end());
      std::sort(w.begin(), w.end());
      out += w;
    }
  return out;
}

namespace detail {

template <class Poly>
Poly power(const Poly& p, unsigned e, Poly one) {
  Poly r = std::move(one);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace detail

/// A ring map out of H^*(Q_n; Z/2), fixed by the images of q, t, x_1..x_{n-1}.
template <class Poly>
struct QPullback {
  std::size_t source_m;  // n
  Poly one;
  Poly q, t;
  std::vector<Poly> x;

  Poly operator()(const QmMonomial& u) const {
    if (u.m != source_m) throw std::invalid_argument("pullback: monomial from the wrong ring");
    Poly r = detail::power(q, u.a, one) * detail::power(t, u.b, one);
    for (std::size_t i = 0; i < u.alpha.size(); ++i) r = r * detail::power(x[i], u.alpha[i], one);
    return r;
  }
  Poly operator()(const QPoly& p) const {
    Poly r;
    for (const auto& u : p.terms()) r += (*this)(u);
    return r;
  }
};

namespace detail {

inline QPoly qsq(std::size_t m, std::size_t i) { return QPoly(*qm_mult(QmMonomial::x(m, i), QmMonomial::x(m, i))); }

}  // namespace detail

/// pi^*: H^*(Q_m) -> H^*(K(Z^m,2)): t -> 0, x_i -> v_i + v_m, q -> v_m^2.
inline QPullback<KPoly> pi_pullback(std::size_t m) {
  if (m == 0) throw std::invalid_argument("pi_pullback: m must be positive");
  const std::size_t last = m - 1;
  QPullback<KPoly> f{m, KPoly(KMonomial{}), KPoly(KMonomial{last, last}), KPoly(), {}};
  for (std::size_t i = 0; i + 1 < m; ++i) f.x.push_back(KPoly(KMonomial{i}) + KPoly(KMonomial{last}));
  return f;
}

/// pr_i^*: H^*(Q_1) -> H^*(Q_m). For i < m-1 (0-based): t -> t, q -> q + x_i^2;
/// for the last index the classes q and t are both fixed.
inline QPullback<QPoly> pr_pullback(std::size_t m, std::size_t i) {
  if (i >= m) throw std::out_of_range("pr_i: index out of range");
  QPoly q(QmMonomial::q(m));
  if (i + 1 < m) q += detail::qsq(m, i);
  return {1, QPoly(QmMonomial::one(m)), q, QPoly(QmMonomial::t(m)), {}};
}

/// pr_{ij}^*: H^*(Q_2) -> H^*(Q_m) for i < j.
/// j < m-1: q -> q + x_j^2, x_1 -> x_i + x_j; j = m-1: q -> q, x_1 -> x_i; t -> t.
inline QPullback<QPoly> pr_pullback(std::size_t m, std::size_t i, std::size_t j) {
  if (!(i < j && j < m)) throw std::out_of_range("pr_ij: need i < j < m");
  QPoly q(QmMonomial::q(m)), x1(QmMonomial::x(m, i));
  if (j + 1 < m) {
    q += detail::qsq(m, j);
    x1 += QmMonomial::x(m, j);
  }
  return {2, QPoly(QmMonomial::one(m)), q, QPoly(QmMonomial::t(m)), {x1}};
}

/// pr_{ijk}^*: H^*(Q_3) -> H^*(Q_m) for i < j < k.
/// k < m-1: q -> q + x_k^2, x_1 -> x_i + x_k, x_2 -> x_j + x_k; k = m-1: q -> q, x_1 -> x_i, x_2 -> x_j; t -> t.
inline QPullback<QPoly> pr_pullback(std::size_t m, std::size_t i, std::size_t j, std::size_t k) {
  if (!(i < j && j < k && k < m)) throw std::out_of_range("pr_ijk: need i < j < k < m");
  QPoly q(QmMonomial::q(m)), x1(QmMonomial::x(m, i)), x2(QmMonomial::x(m, j));
  if (k + 1 < m) {
    q += detail::qsq(m, k);
    x1 += QmMonomial::x(m, k);
    x2 += QmMonomial::x(m, k);
  }
  return {3, QPoly(QmMonomial::one(m)), q, QPoly(QmMonomial::t(m)), {x1, x2}};
}

}  // namespace conjspace
