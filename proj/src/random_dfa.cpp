#include "langfilter/random_dfa.hpp"

#include <string>

namespace langfilter {

Dfa random_dfa(Rng& rng, const RandomDfaShape& shape) {
  const std::size_t n =
      shape.min_states + rng.below(shape.max_states - shape.min_states + 1);
  const std::size_t k =
      shape.min_letters + rng.below(shape.max_letters - shape.min_letters + 1);
  std::vector<std::string> names;
  for (std::size_t c = 0; c < k; ++c) names.emplace_back(1, static_cast<char>('a' + c));
  std::vector<State> delta(n * k);
  for (auto& t : delta) t = static_cast<State>(rng.below(n));
  std::vector<State> accepting;
  for (State q = 0; q < n; ++q)
    if (rng.coin()) accepting.push_back(q);
  return Dfa(Alphabet(std::move(names)), static_cast<State>(n), 0, accepting,
             std::move(delta));
}

}  // namespace langfilter
