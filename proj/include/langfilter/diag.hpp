#pragma once

#include <cstddef>
#include <cstdint>

#include "langfilter/alphabet.hpp"
#include "langfilter/automata.hpp"

namespace langfilter {

// Letters on the main diagonal of w laid out row-major in a square.
// Throws InputError unless |w| = n^2 with n >= 1.
Word diag_word(const Word& w);

enum class DiagStepOrder {
  // v <- v * W * M_a: the gap block sits between consecutive diagonal letters.
  gap_then_letter,
  // v <- v * M_a * W: the gap block trails each letter. It accepts a
  // different language and is kept for comparison.
  letter_then_gap,
};

// NFA over triples [v, V, W] for diag(L(d)). State 0 is the initial state.
Nfa build_diag_nfa(const Dfa& d,
                   DiagStepOrder order = DiagStepOrder::gap_then_letter);

// Decides w in diag(L(d)) directly from the incidence matrices.
bool diag_oracle_accepts(const Dfa& d, const Word& w);

inline constexpr std::uint64_t kDefaultDiagBudget = 1ULL << 20;

// diag of every accepted word of length t^2, by literal enumeration.
WordSet diag_oracle_exhaustive(const Dfa& d, std::size_t t,
                               std::uint64_t budget = kDefaultDiagBudget);

}  // namespace langfilter
