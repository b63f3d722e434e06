#include "doctest.h"

#include "fixtures.hpp"
#include "langfilter/boolmat.hpp"
#include "langfilter/errors.hpp"
#include "properties.hpp"

using namespace langfilter;
namespace fx = langfilter::fixtures;

namespace {

BoolMatrix from_rows(const std::vector<std::string>& rows) {
  BoolMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] == '1') m.set(i, j);
  return m;
}

BoolMatrix swap2() { return from_rows({"01", "10"}); }

}  // namespace

TEST_CASE("incidence matrices of (ab)*") {
  const auto im = incidence_matrices(fx::ab_star());
  REQUIRE(im.letters.size() == 2);
  for (const auto& mc : im.letters)
    for (std::size_t q = 0; q < 3; ++q) CHECK(mc.row(q).count() == 1);
  for (std::size_t q = 0; q < 3; ++q) CHECK(im.any.row(q).count() >= 1);
  CHECK(im.letters[0] == from_rows({"010", "001", "001"}));
  CHECK(im.letters[1] == from_rows({"001", "100", "001"}));
}

TEST_CASE("incidence matrices of the universal dfa") {
  const auto im = incidence_matrices(universal_dfa(Alphabet::from_chars("abc")));
  for (const auto& mc : im.letters) CHECK(mc == from_rows({"1"}));
  CHECK(im.any == from_rows({"1"}));
}

TEST_CASE("both letters into the same state") {
  const Dfa d(Alphabet::from_chars("ab"), 3, 0, {1}, {1, 1, 2, 2, 2, 2});
  CHECK(incidence_matrices(d).any.row(0).to_string() == "010");
}

TEST_CASE("mat_mul basics") {
  const BoolMatrix a = from_rows({"110", "001", "100"});
  CHECK(mat_mul(a, BoolMatrix::identity(3)) == a);
  CHECK(mat_mul(BoolMatrix::identity(3), a) == a);
  const BoolMatrix p = from_rows({"010", "001", "100"});
  const BoolMatrix p_inv = from_rows({"001", "100", "010"});
  CHECK(mat_mul(p, p_inv) == BoolMatrix::identity(3));
  const BoolMatrix n = from_rows({"010", "001", "000"});
  CHECK(mat_mul(n, n) == from_rows({"001", "000", "000"}));
  CHECK_THROWS_AS(mat_mul(a, BoolMatrix::identity(2)), InputError);
}

TEST_CASE("wide matrices cross word boundaries") {
  const std::size_t n = 130;
  BoolMatrix shift(n);
  for (std::size_t i = 0; i + 1 < n; ++i) shift.set(i, i + 1);
  const BoolMatrix far = mat_pow(shift, 129);
  CHECK(far.test(0, 129));
  CHECK(far.row(0).count() == 1);
  CHECK(mat_pow(shift, 130) == BoolMatrix(n));
  const PowerOrbit orbit = power_orbit(shift);
  CHECK(orbit.index() == 130);
  CHECK(orbit.period() == 1);
}

TEST_CASE("vector products") {
  const Dfa d = fx::ab_star();
  const auto im = incidence_matrices(d);
  const BoolVector e0 = BoolVector::unit(3, 0);
  CHECK(vec_mat_mul(e0, im.any) == im.any.row(0));
  CHECK_FALSE(dot(e0, BoolVector(3)));
  CHECK(vec_mat_mul(vec_mat_mul(e0, im.letters[0]), im.letters[1]) == e0);
  CHECK(dot(start_vector(d), final_vector(d)));
  CHECK(final_vector(d).to_string() == "100");
  // Column product: states from which one letter reaches acceptance.
  CHECK(mat_vec_mul(im.letters[1], final_vector(d)).to_string() == "010");
  CHECK_THROWS_AS(vec_mat_mul(BoolVector(2), im.any), InputError);
  CHECK_THROWS_AS(dot(BoolVector(2), BoolVector(3)), InputError);
}

TEST_CASE("mat_pow examples") {
  const BoolMatrix a = from_rows({"110", "001", "100"});
  CHECK(mat_pow(a, 0) == BoolMatrix::identity(3));
  CHECK(mat_pow(swap2(), 2) == BoolMatrix::identity(2));
  CHECK(mat_pow(swap2(), 3) == swap2());
  const PowerOrbit orbit = power_orbit(a);
  const std::size_t i = orbit.index(), p = orbit.period();
  CHECK(mat_pow(a, i + p + 3) == mat_pow(a, i + 3));
  // Exponents far beyond 64 bits reduce through the orbit.
  const Natural huge = Natural(1) << 200;
  CHECK(mat_pow(swap2(), huge) == BoolMatrix::identity(2));
  CHECK(mat_pow(swap2(), huge + 1) == swap2());
}

TEST_CASE("power_orbit examples") {
  const PowerOrbit id = power_orbit(BoolMatrix::identity(3));
  CHECK(id.index() == 0);
  CHECK(id.period() == 1);
  const PowerOrbit two_cycle = power_orbit(swap2());
  CHECK(two_cycle.index() == 0);
  CHECK(two_cycle.period() == 2);
  const PowerOrbit nil = power_orbit(from_rows({"01", "00"}));
  CHECK(nil.index() == 2);
  CHECK(nil.period() == 1);
  CHECK(nil.powers().size() == 3);
  CHECK(nil.reduce(1000) == 2);
  CHECK(two_cycle.reduce(1001) == 1);
}

TEST_CASE("boolmat properties") {
  using namespace langfilter::props;
  for (auto check : {path_algebra_sound, letter_matrices_one_hot, orbit_matches_brute_force,
                     mat_pow_matches_repeated_product}) {
    const CheckResult r = check(kDefaultSeed);
    INFO(r.witness);
    CHECK(r.ok);
  }
}
