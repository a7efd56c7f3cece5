#include "conjspace/gl2.hpp"
#include "conjspace/lattice.hpp"
#include "conjspace/normal_form.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace conjspace;
using namespace conjspace::testing;

namespace {

// Cofactor expansion; independent of the Bareiss routine in the library.
Int laplace_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = a(i, j);
    Int term = a(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> s(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) return f(s);
    for (std::size_t i = start; i < n; ++i) {
      s[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// d_1 ... d_k = gcd of the k x k minors.
IntVector determinantal_divisors(const IntMatrix& a) {
  IntVector out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Int g = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rs[i], cs[j]);
        g = boost::multiprecision::gcd(g, laplace_det(m));
      });
    });
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(prev == 0 ? Int(0) : Int(g / prev));
    prev = g;
  }
  return out;
}

// Canonical basis [[a, b], [0, d]] of a full-rank lattice in Z^2 from lattice points alone.
IntMatrix brute_hnf_2d(const IntMatrix& gens, long long bound) {
  Int a = 0, d = 0;
  std::vector<IntVector> pts;
  for_each_box_vector(gens.rows(), bound, [&](const IntVector& c) { pts.push_back(combine_rows(gens, c)); });
  for (const auto& p : pts) {
    if (p[0] > 0 && (a == 0 || p[0] < a)) a = p[0];
    if (p[0] == 0 && p[1] > 0 && (d == 0 || p[1] < d)) d = p[1];
  }
  Int b = -1;
  for (const auto& p : pts)
    if (p[0] == a) {
      b = pmod(p[1], d);
      break;
    }
  return IntMatrix::from_rows({{a, b}, {0, d}}, 2);
}

}  // namespace

TEST_CASE("hnf of the reference 2x2 matrix", "[hnf]") {
  const IntMatrix a{{2, 4}, {0, 3}};
  const IntMatrix expected = brute_hnf_2d(a, 6);
  CHECK(expected == IntMatrix{{2, 1}, {0, 3}});
  const HnfResult h = hnf(a);
  CHECK(h.H == expected);
  CHECK(is_unimodular(h.U));
  CHECK((h.U * a).row_block(0, h.rank()) == h.H);
}

TEST_CASE("hnf agrees with lattice-point oracle on random full-rank 2d lattices", "[hnf][property]") {
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix g = random_matrix(2, 2, 3);
    if (laplace_det(g) == 0) continue;
    const HnfResult h = hnf(g);
    REQUIRE(h.rank() == 2);
    // coordinates of the canonical basis vectors are bounded by |det| * 3
    CHECK(h.H == brute_hnf_2d(g, 30));
  }
}

TEST_CASE("hnf invariants on random matrices", "[hnf][property]") {
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = static_cast<std::size_t>(rand_int(1, 5));
    const auto c = static_cast<std::size_t>(rand_int(1, 5));
    const IntMatrix a = random_matrix(r, c, 6);
    const HnfResult h = hnf(a);
    CHECK(laplace_det(h.U) * laplace_det(h.U) == 1);
    const IntMatrix ua = h.U * a;
    CHECK(ua.row_block(0, h.rank()) == h.H);
    for (std::size_t i = h.rank(); i < r; ++i) CHECK(ua.is_zero_row(i));
    for (std::size_t i = 0; i < h.rank(); ++i) {
      const std::size_t p = h.pivots[i];
      CHECK(h.H(i, p) > 0);
      for (std::size_t j = 0; j < p; ++j) CHECK(h.H(i, j) == 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.H(k, p) >= 0);
        CHECK(h.H(k, p) < h.H(i, p));
      }
    }
    // canonical: the HNF depends only on the row lattice
    const IntMatrix w = random_unimodular(r) * a;
    CHECK(hnf(w).H == h.H);
    CHECK(hnf(h.H).H == h.H);
  }
}

TEST_CASE("snf of diag(2,3)", "[snf]") {
  const IntMatrix a{{2, 0}, {0, 3}};
  CHECK(determinantal_divisors(a) == IntVector{1, 6});
  const SnfResult s = snf(a);
  CHECK(s.diagonal() == IntVector{1, 6});
  CHECK(s.U * a * s.V == s.D);
}

TEST_CASE("snf matches determinantal divisors", "[snf][property]") {
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = static_cast<std::size_t>(rand_int(1, 4));
    const auto c = static_cast<std::size_t>(rand_int(1, 4));
    const IntMatrix a = random_matrix(r, c, 8);
    const SnfResult s = snf(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(laplace_det(s.U) * laplace_det(s.U) == 1);
    CHECK(laplace_det(s.V) * laplace_det(s.V) == 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    const IntVector d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    CHECK(d == determinantal_divisors(a));
  }
}

TEST_CASE("lattice membership", "[lattice]") {
  const IntLattice l = IntLattice::from_generators(IntMatrix{{2, 1}, {0, 3}});
  CHECK(brute_member(IntMatrix{{2, 1}, {0, 3}}, {2, 4}, 3));
  CHECK(l.contains({2, 4}));
  CHECK_FALSE(brute_member(IntMatrix{{2, 1}, {0, 3}}, {1, 0}, 6));
  CHECK_FALSE(l.contains({1, 0}));
  CHECK(l.index() == 6);
  CHECK(l == IntLattice::from_generators(IntMatrix{{2, 4}, {0, 3}}));
}

TEST_CASE("lattice membership matches a bounded search", "[lattice][property]") {
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix g = random_matrix(2, 3, 3);
    const IntLattice l = IntLattice::from_generators(g);
    for_each_box_vector(2, 3, [&](const IntVector& c) { CHECK(l.contains(combine_rows(g, c))); });
    const IntVector v = random_vector(3, 4);
    if (l.contains(v)) {
      const auto coords = l.coordinates(v);
      REQUIRE(coords);
      CHECK(combine_rows(l.basis(), *coords) == v);
    } else {
      CHECK_FALSE(l.coordinates(v).has_value());
    }
  }
}

TEST_CASE("integer kernel", "[kernel][property]") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto r = static_cast<std::size_t>(rand_int(1, 4));
    const auto c = static_cast<std::size_t>(rand_int(1, 5));
    const IntMatrix a = random_matrix(r, c, 5);
    const IntMatrix k = integer_kernel(a);
    CHECK(k.rows() == c - hnf(a).rank());
    for (std::size_t i = 0; i < k.rows(); ++i) CHECK(a * k.row(i) == IntVector(r, 0));
    // saturation: any small kernel vector is an integral combination
    const IntLattice kl = IntLattice::from_generators(k);
    for_each_box_vector(c, 2, [&](const IntVector& v) {
      if (a * v == IntVector(r, 0)) CHECK(kl.contains(v));
    });
  }
}

TEST_CASE("congruence lattice", "[lattice]") {
  // x + y = 0 mod 2 in Z^2
  const IntLattice l = congruence_lattice(IntMatrix{{1, 1}}, {2});
  CHECK(l.index() == 2);
  for_each_box_vector(2, 3, [&](const IntVector& v) { CHECK(l.contains(v) == is_even(v[0] + v[1])); });
}

TEST_CASE("unimodular inverse", "[hnf]") {
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix u = random_unimodular(4);
    CHECK(inverse_unimodular(u) * u == IntMatrix::identity(4));
  }
  CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), std::domain_error);
}

TEST_CASE("GF(2) solve, kernel and inverse", "[f2][property]") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = static_cast<std::size_t>(rand_int(1, 6));
    const auto c = static_cast<std::size_t>(rand_int(1, 6));
    const F2Matrix a = random_f2(r, c);
    const auto ker = f2_kernel(a);
    CHECK(ker.size() + f2_rank(a) == c);
    for (const auto& v : ker) CHECK(a * v == F2Vector(r, 0));
    // brute force over all x
    std::size_t kernel_size = 0;
    for (std::uint32_t bits = 0; bits < (1u << c); ++bits) {
      F2Vector x(c);
      for (std::size_t i = 0; i < c; ++i) x[i] = (bits >> i) & 1u;
      if (a * x == F2Vector(r, 0)) ++kernel_size;
      const auto sol = f2_solve(a, a * x);
      REQUIRE(sol);
      CHECK(a * *sol == a * x);
    }
    CHECK(kernel_size == (std::size_t{1} << ker.size()));
    if (r == c) {
      const auto inv = f2_inverse(a);
      CHECK(inv.has_value() == (f2_rank(a) == r));
      if (inv) CHECK(*inv * a == F2Matrix::identity(r));
    }
  }
}

TEST_CASE("GL(n,2) enumeration", "[gl2]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    std::string prev;
    std::size_t count = 0;
    for (const auto& g : gl2_enumerate(n)) {
      REQUIRE(f2_rank(g) == n);
      std::string key;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) key += g.get(r, c) ? '1' : '0';
      CHECK(key > prev);
      prev = key;
      seen.insert(key);
      ++count;
    }
    // brute force count of invertible matrices
    std::size_t brute = 0;
    for (std::uint32_t bits = 0; bits < (1u << (n * n)); ++bits) {
      F2Matrix g(n, n);
      for (std::size_t e = 0; e < n * n; ++e) g.set(e / n, e % n, (bits >> e) & 1u);
      if (f2_rank(g) == n) ++brute;
    }
    CHECK(count == brute);
    CHECK(seen.size() == count);
    CHECK(count == gl2_order(n));
  }
  CHECK(gl2_enumerate(1).size() == 1);
  CHECK(gl2_enumerate(2).size() == 6);
  CHECK(gl2_enumerate(3).size() == 168);
  CHECK_THROWS_AS(gl2_enumerate(6), GlCapExceeded);
}
