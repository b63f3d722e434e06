#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "langfilter/automata.hpp"

namespace langfilter {

// Seeded source for test pools. Only the raw engine output is used so the
// sequence is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish value in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin() { return (engine_() >> 17) & 1U; }

 private:
  std::mt19937_64 engine_;
};

struct RandomDfaShape {
  std::size_t min_states = 1;
  std::size_t max_states = 5;
  std::size_t min_letters = 1;
  std::size_t max_letters = 3;
};

// Complete DFA over the letters "a", "b", "c", ...
Dfa random_dfa(Rng& rng, const RandomDfaShape& shape);

}  // namespace langfilter
