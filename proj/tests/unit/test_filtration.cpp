#include "doctest.h"

#include "fixtures.hpp"
#include "langfilter/errors.hpp"
#include "langfilter/filtration.hpp"
#include "properties.hpp"

using namespace langfilter;
namespace fx = langfilter::fixtures;

namespace {

const Alphabet kLetters = Alphabet::from_chars("abcdehmort");

std::string filtered(const std::string& w, unsigned a, unsigned b) {
  return kLetters.render(filter_word(kLetters.parse(w), ArithFilter(a, b)));
}

std::string filtered_general(const std::string& w, std::vector<std::uint64_t> s) {
  return kLetters.render(filter_word_general(kLetters.parse(w), s));
}

WordSet words(const Alphabet& alphabet, std::initializer_list<const char*> list) {
  WordSet out;
  for (const char* w : list) out.insert(alphabet.parse(w));
  return out;
}

// Brute-force filtered language from sources up to a fixed length.
WordSet brute(const Dfa& d, unsigned a, unsigned b, std::size_t source_len, std::size_t max_len) {
  WordSet out;
  for (const Word& w : enumerate_accepted(d, source_len)) {
    Word f = filter_word(w, ArithFilter(a, b));
    if (f.size() <= max_len) out.insert(std::move(f));
  }
  return out;
}

WordSet accepted_set(const Dfa& d, std::size_t max_len) {
  const auto listed = enumerate_accepted(d, max_len);
  return WordSet(listed.begin(), listed.end());
}

}  // namespace

TEST_CASE("filter_word examples") {
  CHECK(filtered("theorem", 2, 0) == "term");
  CHECK(filtered("theorem", 2, 1) == "hoe");
  CHECK(filtered("theorem", 1, 0) == "theorem");
  CHECK(filtered("ab", 3, 5).empty());
  CHECK(filtered("", 2, 0).empty());
  CHECK(filtered("theorem", 3, 0) == "tom");
  // Offsets and steps beyond 64 bits.
  CHECK(kLetters.render(filter_word(kLetters.parse("theorem"),
                                    ArithFilter(Natural(1) << 70, 1))) == "h");
}

TEST_CASE("filter_word_general") {
  CHECK(filtered_general("theorem", {0, 2, 4, 6, 8}) == "term");
  CHECK(filtered_general("theorem", {0, 1, 2, 3, 4, 5, 6, 7}) == "theorem");
  CHECK(filtered_general("abcde", {1, 4, 9}) == "be");
  CHECK_THROWS_AS(filtered_general("abcde", {1, 1, 9}), InputError);
  CHECK_THROWS_AS(filtered_general("abcde", {3, 2, 9}), InputError);
  CHECK_THROWS_AS(filtered_general("abcde", {0, 2}), InputError);
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b) {
      std::vector<std::uint64_t> s;
      for (std::uint64_t i = 0; a * i + b <= 7; ++i) s.push_back(a * i + b);
      s.push_back(s.empty() ? 8 : s.back() + a);
      CHECK(filtered_general("theorem", s) == filtered("theorem", a, b));
    }
}

TEST_CASE("filter parameters and families") {
  CHECK_THROWS_AS(ArithFilter(0, 0), InputError);
  CHECK_THROWS_AS(ArithFilter(1, -1), InputError);
  CHECK(admits(FilterFamily::weak, ArithFilter(3, 0)));
  CHECK_FALSE(admits(FilterFamily::weak, ArithFilter(3, 1)));
  CHECK(admits(FilterFamily::ordinary, ArithFilter(3, 2)));
  CHECK_FALSE(admits(FilterFamily::ordinary, ArithFilter(3, 3)));
  CHECK(admits(FilterFamily::strong, ArithFilter(3, 7)));
  CHECK(admits(FilterFamily::shift, ArithFilter(1, 7)));
  CHECK_FALSE(admits(FilterFamily::shift, ArithFilter(2, 0)));
  CHECK(parse_family("ordinary") == FilterFamily::ordinary);
  CHECK(to_string(FilterFamily::shift) == "shift");
  CHECK_THROWS_AS(parse_family("medium"), InputError);
}

TEST_CASE("filtered dfa examples over (ab)*") {
  const Dfa d = fx::ab_star();
  CHECK(equivalent(minimize(build_filtered_dfa(d, ArithFilter(1, 0))), minimize(d)));
  const Dfa evens = build_filtered_dfa(d, ArithFilter(2, 0));
  CHECK(equivalent(evens, fx::a_star()));
  CHECK(accepted_set(evens, 6) == brute(d, 2, 0, 14, 6));
  const Dfa odds = build_filtered_dfa(d, ArithFilter(2, 1));
  CHECK(accepted_set(odds, 6) == brute(d, 2, 1, 14, 6));
  CHECK(accepted_set(odds, 3) == words(d.alphabet(), {"", "b", "bb", "bbb"}));
}

TEST_CASE("filtered dfa for 0*1 with offset 2") {
  const Dfa d = fx::zeros_then_one();
  const Dfa f = build_filtered_dfa(d, ArithFilter(1, 2));
  CHECK(dfa_accepts(f, {}));
  CHECK(dfa_accepts(f, d.alphabet().parse("1")));
  CHECK(dfa_accepts(f, d.alphabet().parse("01")));
  CHECK_FALSE(dfa_accepts(f, d.alphabet().parse("10")));
  CHECK(accepted_set(f, 6) == brute(d, 1, 2, 8, 6));
}

TEST_CASE("mutated start state drops short sources") {
  // 0*1 filtered by (1,2): epsilon comes only from the sources "1" and "01".
  FilteredDfaOptions mutated;
  mutated.start_accepts_short_words = false;
  CHECK_FALSE(dfa_accepts(build_filtered_dfa(fx::zeros_then_one(), ArithFilter(1, 2), mutated), {}));
}

TEST_CASE("filtered_language_oracle examples") {
  const Dfa d = fx::ab_star();
  CHECK(filtered_language_oracle(d, ArithFilter(2, 0), 3) ==
        words(d.alphabet(), {"", "a", "aa", "aaa"}));
  CHECK(filtered_language_oracle(d, ArithFilter(1, 0), 4) == accepted_set(d, 4));
  CHECK(filtered_language_oracle(empty_dfa(d.alphabet()), ArithFilter(3, 2), 5).empty());
  CHECK(filtered_language_literal(d, ArithFilter(2, 0), 3) ==
        filtered_language_oracle(d, ArithFilter(2, 0), 3));
  CHECK_THROWS_AS(filtered_language_literal(universal_dfa(d.alphabet()), ArithFilter(4, 4), 7, 1000),
                  BudgetError);
}

TEST_CASE("signatures") {
  const Dfa d = fx::ab_star();
  const FiltrationSignature id = signature(d, ArithFilter(1, 0));
  CHECK(id.step_matrix == BoolMatrix::identity(3));
  CHECK(id.accept_or == BoolMatrix::identity(3));
  CHECK(id.start_row == BoolVector::unit(3, 0));
  CHECK(id.eps_in);
  // M^1 = M^3 for this DFA, so steps 2 and 4 cannot be told apart; both give a*.
  const auto im = incidence_matrices(d);
  CHECK(im.orbit.power(1) == im.orbit.power(3));
  CHECK(signature(d, ArithFilter(2, 0)) == signature(d, ArithFilter(4, 0)));
  CHECK(equivalent(build_filtered_dfa(d, ArithFilter(4, 0)), fx::a_star()));
  CHECK_FALSE(signature(d, ArithFilter(2, 0)) == signature(d, ArithFilter(3, 0)));
  CHECK_FALSE(equivalent(build_filtered_dfa(d, ArithFilter(2, 0)),
                         build_filtered_dfa(d, ArithFilter(3, 0))));
  // Past the orbit index, shifting both parameters by the period is invisible.
  const std::size_t i = im.orbit.index(), p = im.orbit.period();
  const Natural a = i + p + 2, b = i + 3;
  CHECK(signature(d, ArithFilter(a, b)) == signature(d, ArithFilter(a + p, b + p)));
  CHECK(signature(d, ArithFilter(a, b)) ==
        signature(d, ArithFilter(a + p * (Natural(1) << 80), b + p * (Natural(1) << 90))));
}

TEST_CASE("atlas examples") {
  const Alphabet ab = Alphabet::from_chars("ab");
  for (auto family : {FilterFamily::weak, FilterFamily::ordinary, FilterFamily::strong,
                      FilterFamily::shift}) {
    CHECK(enumerate_distinct_filtrations(universal_dfa(ab), family).entries.size() == 1);
    CHECK(enumerate_distinct_filtrations(empty_dfa(ab), family).entries.size() == 1);
  }
  const Dfa d = fx::ab_star();
  const auto shift = enumerate_distinct_filtrations(d, FilterFamily::shift);
  const auto b0 = shift.find(minimize(build_filtered_dfa(d, ArithFilter(1, 0))));
  const auto b1 = shift.find(minimize(build_filtered_dfa(d, ArithFilter(1, 1))));
  REQUIRE(b0);
  REQUIRE(b1);
  CHECK(*b0 != *b1);
  CHECK(dfa_accepts(shift.entries[*b1].language, ab.parse("bab")));
  CHECK(dfa_accepts(shift.entries[*b1].language, {}));
  // Count from a brute-force sweep of b <= 2(iota+pi) + l_min.
  const auto im = incidence_matrices(d);
  std::vector<Dfa> distinct;
  for (std::size_t b = 0; b <= 2 * (im.orbit.index() + im.orbit.period()); ++b) {
    Dfa m = minimize(build_filtered_dfa(d, ArithFilter(1, b)));
    if (std::find(distinct.begin(), distinct.end(), m) == distinct.end()) distinct.push_back(m);
  }
  CHECK(shift.entries.size() == distinct.size());
}

TEST_CASE("filtration properties") {
  using namespace langfilter::props;
  auto expect = [](const CheckResult& r) {
    INFO(r.witness);
    CHECK(r.ok);
  };
  expect(filtered_construction_matches_oracle(kDefaultSeed, 20, 7));
  expect(identity_filter_preserves_language(kDefaultSeed));
  expect(equal_signatures_equal_languages(kDefaultSeed));
  expect(filtered_state_bound(kDefaultSeed, 20));
  expect(atlas_complete(kDefaultSeed, 6));
  expect(atlas_family_inclusions(kDefaultSeed));
  expect(oracle_matches_literal_oracle(kDefaultSeed));
}

TEST_CASE("dropping the short-word start acceptance is detected") {
  FilteredDfaOptions mutated;
  mutated.start_accepts_short_words = false;
  CHECK_FALSE(props::filtered_construction_matches_oracle(props::kDefaultSeed, 20, 7, mutated).ok);
}
