#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "langfilter/alphabet.hpp"
#include "langfilter/automata.hpp"
#include "langfilter/boolmat.hpp"
#include "langfilter/natural.hpp"

namespace langfilter {

// The progression s(i) = step * i + offset.
struct ArithFilter {
  ArithFilter(Natural step, Natural offset);

  Natural step;
  Natural offset;

  friend bool operator==(const ArithFilter&, const ArithFilter&) = default;
};

enum class FilterFamily { weak, ordinary, strong, shift };

// weak: offset 0; ordinary: offset < step; strong: any; shift: step 1.
bool admits(FilterFamily family, const ArithFilter& f);
std::string_view to_string(FilterFamily family);
FilterFamily parse_family(std::string_view tag);

Word filter_word(const Word& w, const ArithFilter& f);

// `indices` is a strictly increasing prefix of the filter sequence that must
// reach past the end of `w`.
Word filter_word_general(const Word& w, std::span<const std::uint64_t> indices);

struct FiltrationSignature {
  BoolMatrix step_matrix;  // M^(a-1)
  BoolMatrix accept_or;    // OR of M^i for 0 <= i < a
  BoolVector start_row;    // row of M^b at the start state
  bool eps_in = false;     // some accepted word has length <= b

  friend bool operator==(const FiltrationSignature&,
                         const FiltrationSignature&) = default;
  std::size_t hash() const;
};

struct FiltrationSignatureHash {
  std::size_t operator()(const FiltrationSignature& s) const { return s.hash(); }
};

FiltrationSignature signature(const Dfa& d, const ArithFilter& f);
FiltrationSignature signature(const Dfa& d, const IncidenceMatrices& im,
                              std::optional<std::size_t> shortest,
                              const ArithFilter& f);

struct FilteredDfaOptions {
  // Mutation switch for test-suite sensitivity checks: when false the start
  // state never accepts, dropping the short-word term.
  bool start_accepts_short_words = true;
};

// Reachable part of the boolean-vector automaton for the filtered language.
// State 0 is the dedicated start state; every other state is a vector.
Dfa build_filtered_dfa(const Dfa& d, const ArithFilter& f,
                       const FilteredDfaOptions& options = {});
Dfa build_filtered_dfa(const Dfa& d, const IncidenceMatrices& im,
                       const FiltrationSignature& sig,
                       const FilteredDfaOptions& options = {});

// Filtered words of length <= max_len, decided by simulating the source
// automaton position by position. Independent of the matrix construction.
WordSet filtered_language_oracle(const Dfa& d, const ArithFilter& f,
                                 std::size_t max_len);

// Literal version: applies filter_word to every accepted source of length
// <= step * max_len + offset. Throws BudgetError past `max_sources`.
WordSet filtered_language_literal(const Dfa& d, const ArithFilter& f,
                                  std::size_t max_len,
                                  std::size_t max_sources = 1U << 22);

struct AtlasEntry {
  ArithFilter representative;
  Dfa language;  // canonical minimized
};

struct FiltrationAtlas {
  FilterFamily family;
  std::vector<AtlasEntry> entries;
  // Cells swept: step - 1 in [0, step_window), offset in [0, offset_window).
  std::size_t step_window = 0;
  std::size_t offset_window = 0;

  // Entry whose language equals `canonical`, if any.
  std::optional<std::size_t> find(const Dfa& canonical) const;
};

FiltrationAtlas enumerate_distinct_filtrations(const Dfa& d,
                                               FilterFamily family);

}  // namespace langfilter
