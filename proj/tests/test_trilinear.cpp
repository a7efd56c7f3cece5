#include "conjspace/trilinear.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <array>

using namespace conjspace;
using namespace conjspace::testing;

namespace {

// t(x, y, z) summed over every ordered index triple.
Int brute_eval(const TriFormZ& t, const IntVector& a, const IntVector& b, const IntVector& c) {
  Int s = 0;
  const std::size_t n = t.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s += a[i] * b[j] * c[k] * t.coefficients()[triple_index(n, {i, j, k})];
  return s;
}

IntMatrix random_int_matrix_small(std::size_t r, std::size_t c) { return random_matrix(r, c, 2); }

}  // namespace

TEST_CASE("triple indexing", "[trilinear]") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto triples = sorted_triples(n);
    CHECK(triples.size() == triple_count(n));
    for (std::size_t idx = 0; idx < triples.size(); ++idx) {
      const auto [i, j, k] = triples[idx];
      CHECK(triple_index(n, {k, i, j}) == idx);
      CHECK(triple_index(n, {j, k, i}) == idx);
    }
  }
}

TEST_CASE("eval examples", "[trilinear]") {
  TriFormZ t(3);
  t.set(0, 1, 2, 1);
  CHECK(eval(t, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}) == 1);
  CHECK(eval(t, {0, 0, 0}, {1, 2, 3}, {4, 5, 6}) == 0);
  TriFormZ c(1);
  c.set(0, 0, 0, 1);
  CHECK(eval(c, {2}, {2}, {2}) == 8);
  CHECK_THROWS_AS(eval(c, {1, 1}, {1}, {1}), std::invalid_argument);
}

TEST_CASE("eval is symmetric and matches the ordered expansion", "[trilinear][property]") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(rand_int(1, 4));
    const TriFormZ t = random_form(n, 5);
    std::array<IntVector, 3> v{random_vector(n, 3), random_vector(n, 3), random_vector(n, 3)};
    const Int ref = brute_eval(t, v[0], v[1], v[2]);
    std::array<int, 3> p{0, 1, 2};
    do {
      CHECK(eval(t, v[p[0]], v[p[1]], v[p[2]]) == ref);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("substitute examples", "[trilinear]") {
  const TriFormZ t = random_form(3, 4);
  CHECK(substitute(t, IntMatrix::identity(3)) == t);
  TriFormZ c(1);
  c.set(0, 0, 0, 1);
  CHECK(substitute(c, IntMatrix{{2}})(0, 0, 0) == 8);
  // one new basis vector with image v1 - v2; only t_122 = 1, and the three
  // orderings of (v1, v2, v2) each contribute (+1)(-1)(-1)
  TriFormZ u(2);
  u.set(0, 1, 1, 1);
  const TriFormZ r = substitute(u, IntMatrix{{1}, {-1}});
  CHECK(r.rank() == 1);
  CHECK(r(0, 0, 0) == brute_eval(u, {1, -1}, {1, -1}, {1, -1}));
  CHECK(r(0, 0, 0) == 3);
}

TEST_CASE("substitute composes", "[trilinear][property]") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto n0 = static_cast<std::size_t>(rand_int(1, 4));
    const auto n1 = static_cast<std::size_t>(rand_int(1, 4));
    const auto n2 = static_cast<std::size_t>(rand_int(1, 4));
    const TriFormZ t = random_form(n0, 4);
    const IntMatrix S = random_int_matrix_small(n0, n1), S2 = random_int_matrix_small(n1, n2);
    CHECK(substitute(substitute(t, S), S2) == substitute(t, S * S2));
    const TriFormZ r = substitute(t, S);
    const IntVector a = random_vector(n1, 2), b = random_vector(n1, 2), c = random_vector(n1, 2);
    CHECK(eval(r, a, b, c) == eval(t, S * a, S * b, S * c));
    CHECK(reduce_mod2(r) == substitute(reduce_mod2(t), [&] {
            F2Matrix g(n0, n1);
            for (std::size_t i = 0; i < n0; ++i)
              for (std::size_t j = 0; j < n1; ++j) g.set(i, j, is_odd(S(i, j)));
            return g;
          }()));
  }
}

TEST_CASE("parity predicates", "[trilinear]") {
  CHECK(wall_parity_ok(TriFormZ(3)));
  TriFormZ v(2);
  v.set(0, 0, 1, 1);
  CHECK_FALSE(wall_parity_ok(v));
  TriFormZ c(1);
  c.set(0, 0, 0, 7);
  CHECK(wall_parity_ok(c));
  TriFormZ t3(3);
  t3.set(0, 1, 2, 1);
  CHECK(even_squares(t3));
  CHECK_FALSE(even_squares(c));
  CHECK(even_squares(TriFormZ(2)));
  CHECK(wall_parity_ok(TriFormZ(0)));
  CHECK(even_squares(TriFormZ(0)));
}

TEST_CASE("parity predicates agree with brute force over {0,1,2}^n", "[trilinear][property]") {
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rand_int(1, 3));
    TriFormZ t = random_form(n, 3);
    // bias towards forms that pass
    if (trial % 2 == 0)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && is_odd(t(i, i, j) - t(i, j, j))) t.add(i, i, j, 1);
    bool parity = true, squares = true;
    for_each_box_vector(n, 1, [&](const IntVector& xs) {
      IntVector x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = xs[i] + 1;
      for_each_box_vector(n, 1, [&](const IntVector& ys) {
        IntVector y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = ys[i] + 1;
        if (is_odd(eval(t, x, x, y) - eval(t, x, y, y))) parity = false;
        if (is_odd(eval(t, x, x, y))) squares = false;
      });
    });
    CHECK(wall_parity_ok(t) == parity);
    CHECK(even_squares(t) == squares);
  }
}

TEST_CASE("equivalent_f2 examples", "[trilinear][gl2]") {
  const TriFormF2 t = random_form_f2(3);
  const auto id = equivalent_f2(t, t);
  REQUIRE(id);
  CHECK(*id == F2Matrix::identity(3));
  TriFormF2 a(1), z(1);
  a.set(0, 0, 0, 1);
  CHECK_FALSE(equivalent_f2(a, z).has_value());
  TriFormF2 p(2), q(2);
  p.set(0, 0, 0, 1);
  q.set(1, 1, 1, 1);
  const auto g = equivalent_f2(p, q);
  REQUIRE(g);
  CHECK(*g == (F2Matrix{{0, 1}, {1, 0}}));
  CHECK(equivalent_f2(TriFormF2(0), TriFormF2(0))->rows() == 0);
  CHECK_THROWS_AS(equivalent_f2(TriFormF2(2), TriFormF2(3)), std::invalid_argument);
  CHECK_THROWS_AS(equivalent_f2(TriFormF2(6), TriFormF2(6)), GlCapExceeded);
}

TEST_CASE("equivalent_f2 finds the first certificate of a random orbit", "[trilinear][gl2][property]") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(rand_int(1, 4));
    const TriFormF2 t1 = random_form_f2(n);
    const F2Matrix h = random_gl2(n);
    const TriFormF2 t2 = substitute(t1, h);
    const auto g = equivalent_f2(t1, t2);
    REQUIRE(g);
    CHECK(substitute(t1, *g) == t2);
    // independent oracle: scan the materialized enumeration
    if (t1 == t2) {
      CHECK(*g == F2Matrix::identity(n));
      continue;
    }
    for (const auto& cand : gl2_enumerate(n)) {
      if (substitute(t1, cand) == t2) {
        CHECK(cand == *g);
        break;
      }
    }
    // symmetry: the inverse is a certificate in the other direction
    const auto inv = f2_inverse(*g);
    REQUIRE(inv);
    CHECK(substitute(t2, *inv) == t1);
    CHECK(equivalent_f2(t2, t1).has_value());
  }
}

TEST_CASE("inequivalent forms are reported as such", "[trilinear][gl2]") {
  // number of nonzero entries of the associated cubic differs: x^3 vs 0
  TriFormF2 a(3), b(3);
  a.set(0, 0, 0, 1);
  CHECK_FALSE(equivalent_f2(a, b).has_value());
  // t_123 (alternating-type) is not equivalent to x1^3
  TriFormF2 c(3);
  c.set(0, 1, 2, 1);
  CHECK_FALSE(equivalent_f2(a, c).has_value());
}
