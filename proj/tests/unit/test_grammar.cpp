#include "doctest.h"

#include <set>

#include "langfilter/errors.hpp"
#include "langfilter/grammar.hpp"
#include "properties.hpp"

using namespace langfilter;

namespace {

std::set<std::string> rendered(const Cfg& g, std::size_t max_len) {
  std::set<std::string> out;
  for (const Word& w : enumerate_cfg_words(g, max_len)) out.insert(g.terminals().render(w));
  return out;
}

bool thm2_cyk(const std::string& w) { return cyk_accepts(thm2_grammar(), thm2_alphabet().parse(w)); }

std::string thm5_minimal() {
  const std::string z10(10, '0');
  return "a" + z10 + "b0c0d" + z10 + "e0f0g" + z10 + "h0i0j";
}

}  // namespace

TEST_CASE("grammar declarations are validated") {
  const Alphabet ab = Alphabet::from_chars("ab");
  CHECK_THROWS_AS(Cfg(ab, {"S"}, "T", {}), InputError);
  CHECK_THROWS_AS(Cfg(ab, {"S"}, "S", {{"S", {{"a", "X"}}}}), InputError);
  CHECK_THROWS_AS(Cfg(ab, {"S", "S"}, "S", {}), InputError);
  CHECK_THROWS_AS(Cfg(ab, {"a"}, "a", {}), InputError);
  CHECK_THROWS_AS(Cfg(ab, {"S"}, "S", {{"T", {{"a"}}}}), InputError);
  const Cfg dup(ab, {"S"}, "S", {{"S", {{"a"}, {"a"}}}});
  CHECK(dup.rules(0).size() == 1);
}

TEST_CASE("to_cnf") {
  const Cfg thm2 = thm2_grammar();
  CHECK_FALSE(is_cnf(thm2));
  const Cfg cnf = to_cnf(thm2);
  CHECK(is_cnf(cnf));
  CHECK(to_cnf(cnf) == cnf);
  CHECK(cyk_accepts(cnf, thm2_alphabet().parse("10203")));

  const Alphabet ab = Alphabet::from_chars("ab");
  const Cfg only_eps(ab, {"S"}, "S", {{"S", {{}}}});
  const Cfg eps_cnf = to_cnf(only_eps);
  CHECK(is_cnf(eps_cnf));
  CHECK(cyk_accepts(only_eps, {}));
  CHECK_FALSE(cyk_accepts(only_eps, ab.parse("a")));

  const Cfg empty(ab, {"S"}, "S", {{"S", {{"S", "a"}}}});
  CHECK(enumerate_cfg_words(empty, 6).empty());
  CHECK_FALSE(cyk_accepts(empty, ab.parse("a")));
}

TEST_CASE("cyk examples") {
  CHECK(thm2_cyk("10203"));
  CHECK_FALSE(thm2_cyk("1023"));
  CHECK(thm2_cyk("1002003003"));
  CHECK(thm2_cyk("100200303"));
  CHECK(thm2_cyk("10020303"));
  CHECK_FALSE(thm2_cyk("100203"));
  const Cfg zo = zero_one_grammar();
  const Alphabet& a = zo.terminals();
  CHECK(cyk_accepts(zo, a.parse("0011")));
  CHECK_FALSE(cyk_accepts(zo, a.parse("011")));
  CHECK(cyk_accepts(zo, {}));
  CHECK_THROWS_AS(cyk_accepts(zo, Word{5}), InputError);
}

TEST_CASE("enumerate_cfg_words examples") {
  CHECK(rendered(zero_one_grammar(), 4) == std::set<std::string>{"", "01", "0011"});
  CHECK(rendered(thm2_grammar(), 5) == std::set<std::string>{"10203"});
  CHECK(rendered(thm2_grammar(), 4).empty());
  CHECK(rendered(thm2_grammar(), 7) == std::set<std::string>{"10203", "102003", "1020003"});
}

TEST_CASE("structural predicates") {
  CHECK(in_thm2("10203"));
  CHECK_FALSE(in_thm2("1203"));
  CHECK_FALSE(in_thm2("102033"));
  CHECK(in_thm2("1002030003"));
  CHECK_FALSE(in_thm2(""));
  CHECK(in_0n1n(""));
  CHECK(in_0n1n("000111"));
  CHECK_FALSE(in_0n1n("0101"));
  CHECK_FALSE(in_0n1n("001"));
  CHECK(in_thm5(thm5_minimal()));
  CHECK(thm5_minimal().size() == 46);
  CHECK_FALSE(in_thm5(thm5_minimal() + "0"));
  CHECK_FALSE(in_thm5("0" + thm5_minimal()));
  // Inner run of 3m+1 = 11 would need m = 10/3.
  std::string off = thm5_minimal();
  off.insert(1, "0");
  CHECK_FALSE(in_thm5(off));
  const std::string z10(10, '0');
  CHECK(in_thm5_first("a" + z10 + "b0c0"));
  CHECK_FALSE(in_thm5_first("a" + z10 + "b0c"));
  CHECK(in_thm5_second("d" + z10 + "e00f0"));
  CHECK(in_thm5_third("g" + z10 + "h0i0j"));
}

TEST_CASE("square-diagonal language enumerator") {
  Thm5Enumerator minimal(46);
  const auto first = minimal.next();
  REQUIRE(first);
  CHECK(*first == thm5_minimal());
  CHECK_FALSE(minimal.next());

  // Any length from 46 on is reachable by lengthening free zero-runs.
  const auto odd = Thm5Enumerator(99).next();
  REQUIRE(odd);
  CHECK(odd->size() == 99);
  CHECK(in_thm5(*odd));
  CHECK_FALSE(Thm5Enumerator(45).next());

  std::size_t count = 0;
  Thm5Enumerator hundred(100);
  while (auto y = hundred.next()) {
    CHECK(y->size() == 100);
    CHECK(in_thm5(*y));
    if (++count == 2000) break;
  }
  CHECK(count == 2000);

  CHECK_THROWS_AS(Thm5Enumerator(99, DiagPrefilter::from_pattern("abcdefghij")), InputError);
  CHECK_THROWS_AS(Thm5Enumerator(100, DiagPrefilter::from_pattern("abc")), InputError);
  CHECK_THROWS_AS(DiagPrefilter::from_pattern("abz"), InputError);

  Thm5Enumerator budgeted(100, DiagPrefilter::from_pattern("ab?de?gh?j"));
  budgeted.set_node_budget(10);
  CHECK_THROWS_AS(while (budgeted.next()) {}, BudgetError);
}

TEST_CASE("diagonal prefilter at length 100 keeps the t = 1 witness") {
  const std::string z10(10, '0');
  std::string witness = "a" + z10 + "b" + z10 + "c";
  witness += z10 + "d" + z10 + "e" + z10 + "f" + z10 + "g" + z10 + "h" + z10 + "i" + z10 + "j";
  REQUIRE(witness.size() == 100);
  REQUIRE(in_thm5(witness));
  Thm5Enumerator pruned(100, DiagPrefilter::from_pattern("abcdefghij"));
  bool found = false;
  while (auto y = pruned.next()) {
    CHECK(in_thm5(*y));
    found = found || *y == witness;
  }
  CHECK(found);
}

TEST_CASE("grammar properties") {
  using namespace langfilter::props;
  auto expect = [](const CheckResult& r) {
    INFO(r.witness);
    CHECK(r.ok);
  };
  expect(grammar_matches_patterns());
  expect(cfg_enumeration_matches_cyk());
  expect(thm5_enumerator_sound_and_complete());
  expect(thm5_concatenation_split());
}
