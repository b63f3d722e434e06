#include "langfilter/diag.hpp"

#include <unordered_map>

#include "langfilter/boolmat.hpp"
#include "langfilter/errors.hpp"

namespace langfilter {

namespace {

std::size_t exact_sqrt(std::size_t value) {
  std::size_t root = 0;
  while ((root + 1) * (root + 1) <= value) ++root;
  return root * root == value ? root : 0;
}

// [v, V, W] with V and W stored as positions in the power orbit of M, which
// lists pairwise distinct matrices, so V == W iff the positions agree.
struct DiagState {
  BoolVector v;
  std::size_t power;
  std::size_t guess;

  friend bool operator==(const DiagState&, const DiagState&) = default;
};

struct DiagStateHash {
  std::size_t operator()(const DiagState& s) const {
    return s.v.hash() ^ (s.power * 0x9E3779B97F4A7C15ULL) ^ (s.guess << 20);
  }
};

}  // namespace

Word diag_word(const Word& w) {
  const std::size_t side = exact_sqrt(w.size());
  if (side == 0) throw InputError("length is not a perfect square");
  Word out;
  out.reserve(side);
  for (std::size_t k = 0; k < side; ++k) out.push_back(w[k * (side + 1)]);
  return out;
}

Nfa build_diag_nfa(const Dfa& d, DiagStepOrder order) {
  const std::size_t k = d.alphabet().size();
  const auto im = incidence_matrices(d);
  const auto& powers = im.orbit.powers();
  const BoolVector f = final_vector(d);
  auto next_power = [&](std::size_t position) {
    return position + 1 < powers.size() ? position + 1 : im.orbit.index();
  };

  std::unordered_map<DiagState, State, DiagStateHash> ids;
  std::vector<DiagState> states;  // states[i] is NFA state i + 1
  auto intern = [&](DiagState s) -> State {
    auto [it, inserted] = ids.try_emplace(s, static_cast<State>(states.size() + 1));
    if (inserted) states.push_back(std::move(s));
    return it->second;
  };

  // Targets per (state, letter); row 0 belongs to the initial state.
  std::vector<std::vector<State>> delta(k);
  for (Symbol c = 0; c < k; ++c) {
    BoolVector v = vec_mat_mul(start_vector(d), im.letters[c]);
    if (!v.any()) continue;
    for (std::size_t guess = 0; guess < powers.size(); ++guess)
      delta[c].push_back(intern({v, next_power(0), guess}));
  }

  std::vector<State> accepting;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const DiagState current = states[i];
    if (current.power == current.guess && dot(current.v, f))
      accepting.push_back(static_cast<State>(i + 1));
    const BoolMatrix& gap = powers[current.guess];
    for (Symbol c = 0; c < k; ++c) {
      BoolVector v = order == DiagStepOrder::gap_then_letter
                         ? vec_mat_mul(vec_mat_mul(current.v, gap), im.letters[c])
                         : vec_mat_mul(vec_mat_mul(current.v, im.letters[c]), gap);
      std::vector<State> targets;
      // A zero vector never reaches acceptance again.
      if (v.any()) targets.push_back(intern({std::move(v), next_power(current.power), current.guess}));
      delta.push_back(std::move(targets));
    }
  }
  return Nfa(d.alphabet(), static_cast<State>(states.size() + 1), {0}, accepting,
             std::move(delta));
}

bool diag_oracle_accepts(const Dfa& d, const Word& w) {
  if (w.empty()) throw InputError("diag words have length at least 1");
  require_word(d.alphabet(), w);
  const auto im = incidence_matrices(d);
  const BoolMatrix& gap = im.orbit.power(w.size());
  BoolVector v = start_vector(d);
  for (std::size_t j = 0; j < w.size(); ++j) {
    v = vec_mat_mul(v, im.letters[w[j]]);
    if (j + 1 < w.size()) v = vec_mat_mul(v, gap);
  }
  return dot(v, final_vector(d));
}

WordSet diag_oracle_exhaustive(const Dfa& d, std::size_t t, std::uint64_t budget) {
  if (t == 0) throw InputError("diag words have length at least 1");
  const std::size_t length = t * t;
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < length; ++i) {
    candidates *= d.alphabet().size();
    if (candidates > budget)
      throw BudgetError("exhaustive diag oracle needs more than " +
                        std::to_string(budget) + " candidate words");
  }
  const std::size_t k = d.alphabet().size();
  WordSet out;
  Word x(length, 0);
  for (std::uint64_t n = 0; n < candidates; ++n) {
    if (dfa_accepts(d, x)) out.insert(diag_word(x));
    for (std::size_t i = length; i-- > 0;) {
      if (++x[i] < k) break;
      x[i] = 0;
    }
  }
  return out;
}

}  // namespace langfilter
