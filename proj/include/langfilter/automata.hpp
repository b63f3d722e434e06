#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "langfilter/alphabet.hpp"

namespace langfilter {

using State = std::uint32_t;

// Complete deterministic automaton. The transition table is stored row-major,
// one row of |alphabet| targets per state.
class Dfa {
 public:
  Dfa(Alphabet alphabet, State num_states, State start,
      const std::vector<State>& accepting, std::vector<State> delta);

  const Alphabet& alphabet() const { return alphabet_; }
  State num_states() const { return num_states_; }
  State start() const { return start_; }
  bool is_accepting(State q) const { return accepting_[q] != 0; }
  std::vector<State> accepting_states() const;
  State next(State q, Symbol c) const {
    return delta_[static_cast<std::size_t>(q) * alphabet_.size() + c];
  }
  std::span<const State> row(State q) const {
    return {delta_.data() + static_cast<std::size_t>(q) * alphabet_.size(),
            alphabet_.size()};
  }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Alphabet alphabet_;
  State num_states_;
  State start_;
  std::vector<std::uint8_t> accepting_;
  std::vector<State> delta_;
};

// Epsilon-free nondeterministic automaton.
class Nfa {
 public:
  // `delta` holds num_states * |alphabet| target lists, row-major.
  Nfa(Alphabet alphabet, State num_states, std::vector<State> initial,
      const std::vector<State>& accepting,
      std::vector<std::vector<State>> delta);

  const Alphabet& alphabet() const { return alphabet_; }
  State num_states() const { return num_states_; }
  const std::vector<State>& initial() const { return initial_; }
  bool is_accepting(State q) const { return accepting_[q] != 0; }
  std::vector<State> accepting_states() const;
  const std::vector<State>& next(State q, Symbol c) const {
    return delta_[static_cast<std::size_t>(q) * alphabet_.size() + c];
  }

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  Alphabet alphabet_;
  State num_states_;
  std::vector<State> initial_;
  std::vector<std::uint8_t> accepting_;
  std::vector<std::vector<State>> delta_;
};

bool dfa_accepts(const Dfa& d, const Word& w);
bool nfa_accepts(const Nfa& n, const Word& w);

Nfa nfa_of(const Dfa& d);

// Subset construction over the subsets reachable from the initial set.
// Throws BudgetError if more than `max_states` subsets are materialized.
Dfa determinize(const Nfa& n,
                std::size_t max_states = std::numeric_limits<std::size_t>::max());

// Minimal complete DFA with states numbered in breadth-first discovery order
// from the start state, scanning symbols in alphabet order. Two DFAs accept
// the same language iff their minimized forms compare equal.
Dfa minimize(const Dfa& d);

Dfa complement(const Dfa& d);
Dfa intersect(const Dfa& d1, const Dfa& d2);

Dfa universal_dfa(const Alphabet& alphabet);
Dfa empty_dfa(const Alphabet& alphabet);

bool is_empty(const Dfa& d);
bool equivalent(const Dfa& d1, const Dfa& d2);

// Shortest word (short-lex first) accepted by exactly one of the two DFAs.
std::optional<Word> find_disagreement(const Dfa& d1, const Dfa& d2);

// Accepted words of length <= max_len in short-lex order.
std::vector<Word> enumerate_accepted(const Dfa& d, std::size_t max_len);

std::optional<std::size_t> shortest_word_length(const Dfa& d);

}  // namespace langfilter
