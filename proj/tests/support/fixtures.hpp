#pragma once

#include <string>
#include <vector>

#include "langfilter/automata.hpp"

namespace langfilter::fixtures {

// (ab)* over {a,b}: 0 -a-> 1 -b-> 0, everything else to dead state 2.
inline Dfa ab_star() {
  return Dfa(Alphabet::from_chars("ab"), 3, 0, {0}, {1, 2, 2, 0, 2, 2});
}

// (ab)* again, with redundant states and a different numbering.
inline Dfa ab_star_redundant() {
  // 0 start/accept, 0 -a-> 3, 3 -b-> 4 (accept), 4 -a-> 1, 1 -b-> 0; dead 2.
  return Dfa(Alphabet::from_chars("ab"), 5, 0, {0, 4},
             {3, 2, 2, 0, 2, 2, 2, 4, 1, 2});
}

// (ab)*ab over {a,b}.
inline Dfa ab_star_ab() {
  // 0 -a-> 1 -b-> 2 (accept), 2 -a-> 1; dead 3.
  return Dfa(Alphabet::from_chars("ab"), 4, 0, {2}, {1, 3, 3, 2, 1, 3, 3, 3});
}

// 0*1 over {0,1}.
inline Dfa zeros_then_one() {
  return Dfa(Alphabet::from_chars("01"), 3, 0, {1}, {0, 1, 2, 2, 2, 2});
}

// a* over {a,b}.
inline Dfa a_star() { return Dfa(Alphabet::from_chars("ab"), 2, 0, {0}, {0, 1, 1, 1}); }

// 1*2* and 2*3* over {1,2,3}.
inline Dfa ones_then_twos() {
  return Dfa(Alphabet::from_chars("123"), 3, 0, {0, 1}, {0, 1, 2, 2, 1, 2, 2, 2, 2});
}
inline Dfa twos_then_threes() {
  return Dfa(Alphabet::from_chars("123"), 3, 0, {0, 1}, {2, 0, 1, 2, 2, 1, 2, 2, 2});
}
inline Dfa twos_star() {
  return Dfa(Alphabet::from_chars("123"), 2, 0, {0}, {1, 0, 1, 1, 1, 1});
}

// Nondeterministic Sigma* a over {a,b}.
inline Nfa sigma_star_a() {
  return Nfa(Alphabet::from_chars("ab"), 2, {0}, {1}, {{0, 1}, {0}, {}, {}});
}

inline Word word(const Dfa& d, const std::string& text) { return d.alphabet().parse(text); }

}  // namespace langfilter::fixtures
