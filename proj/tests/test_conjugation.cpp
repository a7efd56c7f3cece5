#include "conjspace/conjugation.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

using namespace conjspace;
using namespace conjspace::testing;

namespace {

WallData s2cubed() {
  TriFormZ t(3);
  t.set(0, 1, 2, 1);
  return *WallData::validate(3, t, {0, 0, 0}).data;
}

WallData cp3() {
  TriFormZ t(1);
  t.set(0, 0, 0, 1);
  return *WallData::validate(1, t, {4}).data;
}

M3Data t3() {
  TriFormF2 t(3);
  t.set(0, 1, 2, 1);
  return M3Data::make(3, {}, t);
}

}  // namespace

TEST_CASE("S2xS2xS2 against T3", "[conjugation]") {
  const Verdict v = decide(s2cubed(), t3());
  CHECK(v.outcome == Outcome::AdmitsByTheorem);
  REQUIRE(v.certificate);
  CHECK(*v.certificate == F2Matrix::identity(3));
}

TEST_CASE("S6 against S3", "[conjugation]") {
  const Verdict v = decide(s6_data(), M3Data::make(0, {}, TriFormF2(0)));
  CHECK(v.outcome == Outcome::AdmitsByTheorem);
  REQUIRE(v.certificate);
  CHECK(v.certificate->rows() == 0);
}

TEST_CASE("RP3 data fails the torsion hypothesis", "[conjugation]") {
  TriFormF2 t(1);
  t.set(0, 0, 0, 1);
  const M3Data rp3 = M3Data::make(0, {2}, TriFormF2(0));
  for (const auto& X : {cp3(), s2cubed(), s6_data()}) {
    const Verdict v = decide(X, rp3);
    CHECK(v.outcome == Outcome::HypothesisFailed);
    CHECK(v.reasons == std::vector<std::string>{"2-primary torsion"});
  }
}

TEST_CASE("CP3 against S1xS2", "[conjugation]") {
  const Verdict v = decide(cp3(), M3Data::make(1, {}, TriFormF2(1)));
  CHECK(v.outcome == Outcome::NoRingIso);
  CHECK_FALSE(v.certificate.has_value());
}

TEST_CASE("rank mismatch", "[conjugation]") {
  CHECK(decide(cp3(), t3()).outcome == Outcome::NoRingIso);
}

TEST_CASE("mcor_admits", "[conjugation]") {
  const auto r = mcor_admits(s2cubed());
  REQUIRE(r);
  CHECK(r->first.b1() == 3);
  CHECK(r->first.t() == t3().t());
  CHECK(r->second.outcome == Outcome::AdmitsByTheorem);
  CHECK_FALSE(mcor_admits(cp3()).has_value());
  const auto s = mcor_admits(s6_data());
  REQUIRE(s);
  CHECK(s->first.is_z2_homology_sphere());
  CHECK(s->second.outcome == Outcome::AdmitsByTheorem);
}

TEST_CASE("smith converse", "[conjugation]") {
  CHECK(smith_converse(M3Data::make(0, {}, TriFormF2(0))).outcome == Outcome::AdmitsByTheorem);
  CHECK(smith_converse(M3Data::make(0, {5}, TriFormF2(0))).outcome == Outcome::AdmitsByTheorem);
  CHECK(smith_converse(M3Data::make(2, {}, TriFormF2(2))).outcome == Outcome::NoRingIso);
  CHECK(smith_converse(M3Data::make(0, {6}, TriFormF2(0))).outcome == Outcome::HypothesisFailed);
}

TEST_CASE("mcor round trip on random even-squares data", "[conjugation][property]") {
  for (int trial = 0; trial < 30; ++trial) {
    const WallData X = random_even_squares(static_cast<std::size_t>(rand_int(0, 4)));
    const auto r = mcor_admits(X);
    REQUIRE(r);
    CHECK(r->second.outcome == Outcome::AdmitsByTheorem);
    CHECK(decide(X, r->first).outcome == Outcome::AdmitsByTheorem);
    REQUIRE(r->second.certificate);
    CHECK(substitute(mod2_ring(X), *r->second.certificate) == r->first.t());
  }
}

TEST_CASE("decisions are invariant under base change of t", "[conjugation][property]") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = static_cast<std::size_t>(rand_int(1, 4));
    const WallData X = random_even_squares(m);
    const F2Matrix h = random_gl2(m);
    const M3Data M = M3Data::make(m, {}, substitute(mod2_ring(X), h));
    const Verdict v = decide(X, M);
    CHECK(v.outcome == Outcome::AdmitsByTheorem);
    REQUIRE(v.certificate);
    CHECK(substitute(mod2_ring(X), *v.certificate) == M.t());
    const M3Data M2 = M3Data::make(m, {3}, substitute(M.t(), random_gl2(m)));
    CHECK(decide(X, M2).outcome == Outcome::AdmitsByTheorem);
  }
}
