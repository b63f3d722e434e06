#include "langfilter/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "langfilter/boolmat.hpp"
#include "langfilter/errors.hpp"

namespace langfilter {

namespace {

std::vector<std::uint8_t> flags_of(const std::vector<State>& states, State n,
                                   const char* what) {
  std::vector<std::uint8_t> flags(n, 0);
  for (State q : states) {
    if (q >= n)
      throw InputError(std::string(what) + " state " + std::to_string(q) +
                       " out of range");
    flags[q] = 1;
  }
  return flags;
}

std::vector<State> states_of(const std::vector<std::uint8_t>& flags) {
  std::vector<State> out;
  for (State q = 0; q < flags.size(); ++q)
    if (flags[q]) out.push_back(q);
  return out;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw InputError("automata are over different alphabets");
}

}  // namespace

Dfa::Dfa(Alphabet alphabet, State num_states, State start,
         const std::vector<State>& accepting, std::vector<State> delta)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      start_(start),
      accepting_(flags_of(accepting, num_states, "accepting")),
      delta_(std::move(delta)) {
  if (num_states_ == 0) throw InputError("a DFA needs at least one state");
  if (start_ >= num_states_) throw InputError("start state out of range");
  if (delta_.size() != static_cast<std::size_t>(num_states_) * alphabet_.size())
    throw InputError("DFA transition table is not complete");
  for (State t : delta_)
    if (t >= num_states_) throw InputError("DFA transition target out of range");
}

std::vector<State> Dfa::accepting_states() const { return states_of(accepting_); }

Nfa::Nfa(Alphabet alphabet, State num_states, std::vector<State> initial,
         const std::vector<State>& accepting,
         std::vector<std::vector<State>> delta)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(std::move(initial)),
      accepting_(flags_of(accepting, num_states, "accepting")),
      delta_(std::move(delta)) {
  if (delta_.size() != static_cast<std::size_t>(num_states_) * alphabet_.size())
    throw InputError("NFA transition table has the wrong shape");
  auto normalize = [&](std::vector<State>& set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (State q : set)
      if (q >= num_states_) throw InputError("NFA state out of range");
  };
  normalize(initial_);
  for (auto& targets : delta_) normalize(targets);
}

std::vector<State> Nfa::accepting_states() const { return states_of(accepting_); }

bool dfa_accepts(const Dfa& d, const Word& w) {
  require_word(d.alphabet(), w);
  State q = d.start();
  for (Symbol c : w) q = d.next(q, c);
  return d.is_accepting(q);
}

bool nfa_accepts(const Nfa& n, const Word& w) {
  require_word(n.alphabet(), w);
  BoolVector current(n.num_states());
  for (State q : n.initial()) current.set(q);
  for (Symbol c : w) {
    BoolVector following(n.num_states());
    for (State q = 0; q < n.num_states(); ++q)
      if (current.test(q))
        for (State t : n.next(q, c)) following.set(t);
    current = std::move(following);
    if (!current.any()) return false;
  }
  for (State q = 0; q < n.num_states(); ++q)
    if (current.test(q) && n.is_accepting(q)) return true;
  return false;
}

Nfa nfa_of(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  std::vector<std::vector<State>> delta(static_cast<std::size_t>(d.num_states()) * k);
  for (State q = 0; q < d.num_states(); ++q)
    for (Symbol c = 0; c < k; ++c) delta[q * k + c] = {d.next(q, c)};
  return Nfa(d.alphabet(), d.num_states(), {d.start()}, d.accepting_states(),
             std::move(delta));
}

Dfa determinize(const Nfa& n, std::size_t max_states) {
  const std::size_t k = n.alphabet().size();
  std::unordered_map<BoolVector, State, BoolVectorHash> ids;
  std::vector<BoolVector> subsets;
  std::vector<State> delta;
  std::vector<State> accepting;

  auto intern = [&](BoolVector set) -> State {
    auto [it, inserted] = ids.try_emplace(set, static_cast<State>(subsets.size()));
    if (inserted) {
      if (subsets.size() >= max_states)
        throw BudgetError("subset construction exceeded " +
                          std::to_string(max_states) + " states");
      subsets.push_back(std::move(set));
    }
    return it->second;
  };

  BoolVector initial(n.num_states());
  for (State q : n.initial()) initial.set(q);
  intern(std::move(initial));

  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const BoolVector current = subsets[i];
    bool accepting_subset = false;
    for (State q = 0; q < n.num_states(); ++q)
      if (current.test(q) && n.is_accepting(q)) accepting_subset = true;
    if (accepting_subset) accepting.push_back(static_cast<State>(i));
    for (Symbol c = 0; c < k; ++c) {
      BoolVector target(n.num_states());
      for (State q = 0; q < n.num_states(); ++q)
        if (current.test(q))
          for (State t : n.next(q, c)) target.set(t);
      delta.push_back(intern(std::move(target)));
    }
  }
  return Dfa(n.alphabet(), static_cast<State>(subsets.size()), 0, accepting,
             std::move(delta));
}

Dfa minimize(const Dfa& d) {
  const std::size_t k = d.alphabet().size();

  // Reachable states.
  std::vector<State> reachable;
  std::vector<std::uint8_t> seen(d.num_states(), 0);
  reachable.push_back(d.start());
  seen[d.start()] = 1;
  for (std::size_t i = 0; i < reachable.size(); ++i)
    for (State t : d.row(reachable[i]))
      if (!seen[t]) {
        seen[t] = 1;
        reachable.push_back(t);
      }

  // Moore refinement on reachable states until the block count is stable.
  std::vector<State> block(d.num_states(), 0);
  for (State q : reachable) block[q] = d.is_accepting(q) ? 1 : 0;
  std::size_t blocks = 0;
  while (true) {
    std::map<std::vector<State>, State> keys;
    std::vector<State> refined(d.num_states(), 0);
    for (State q : reachable) {
      std::vector<State> key;
      key.reserve(k + 1);
      key.push_back(block[q]);
      for (State t : d.row(q)) key.push_back(block[t]);
      auto [it, inserted] = keys.try_emplace(std::move(key),
                                             static_cast<State>(keys.size()));
      refined[q] = it->second;
    }
    block = std::move(refined);
    if (keys.size() == blocks) break;
    blocks = keys.size();
  }

  // Renumber blocks breadth-first from the start block.
  std::vector<State> representative(blocks, 0);
  for (State q : reachable) representative[block[q]] = q;
  constexpr State kUnset = std::numeric_limits<State>::max();
  std::vector<State> order(blocks, kUnset);
  std::vector<State> queue{block[d.start()]};
  order[block[d.start()]] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (State t : d.row(representative[queue[i]]))
      if (order[block[t]] == kUnset) {
        order[block[t]] = static_cast<State>(queue.size());
        queue.push_back(block[t]);
      }

  std::vector<State> delta(blocks * k);
  std::vector<State> accepting;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const State rep = representative[queue[i]];
    if (d.is_accepting(rep)) accepting.push_back(static_cast<State>(i));
    for (Symbol c = 0; c < k; ++c) delta[i * k + c] = order[block[d.next(rep, c)]];
  }
  return Dfa(d.alphabet(), static_cast<State>(blocks), 0, accepting,
             std::move(delta));
}

Dfa complement(const Dfa& d) {
  std::vector<State> accepting;
  for (State q = 0; q < d.num_states(); ++q)
    if (!d.is_accepting(q)) accepting.push_back(q);
  std::vector<State> delta;
  for (State q = 0; q < d.num_states(); ++q)
    for (State t : d.row(q)) delta.push_back(t);
  return Dfa(d.alphabet(), d.num_states(), d.start(), accepting, std::move(delta));
}

Dfa intersect(const Dfa& d1, const Dfa& d2) {
  require_same_alphabet(d1.alphabet(), d2.alphabet());
  const std::size_t k = d1.alphabet().size();
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    const std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | q;
    auto [it, inserted] = ids.try_emplace(key, static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(p, q);
    return it->second;
  };
  intern(d1.start(), d2.start());
  std::vector<State> delta;
  std::vector<State> accepting;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    if (d1.is_accepting(p) && d2.is_accepting(q))
      accepting.push_back(static_cast<State>(i));
    for (Symbol c = 0; c < k; ++c) delta.push_back(intern(d1.next(p, c), d2.next(q, c)));
  }
  return Dfa(d1.alphabet(), static_cast<State>(pairs.size()), 0, accepting,
             std::move(delta));
}

Dfa universal_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {0}, std::vector<State>(alphabet.size(), 0));
}

Dfa empty_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {}, std::vector<State>(alphabet.size(), 0));
}

bool is_empty(const Dfa& d) { return !shortest_word_length(d).has_value(); }

bool equivalent(const Dfa& d1, const Dfa& d2) {
  require_same_alphabet(d1.alphabet(), d2.alphabet());
  return minimize(d1) == minimize(d2);
}

std::optional<Word> find_disagreement(const Dfa& d1, const Dfa& d2) {
  require_same_alphabet(d1.alphabet(), d2.alphabet());
  const std::size_t k = d1.alphabet().size();
  struct Node {
    State p, q;
    std::size_t parent;
    Symbol via;
  };
  std::vector<Node> nodes{{d1.start(), d2.start(), 0, 0}};
  std::unordered_map<std::uint64_t, std::size_t> seen{
      {(static_cast<std::uint64_t>(d1.start()) << 32) | d2.start(), 0}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node node = nodes[i];
    if (d1.is_accepting(node.p) != d2.is_accepting(node.q)) {
      Word w;
      for (std::size_t j = i; j != 0; j = nodes[j].parent) w.push_back(nodes[j].via);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Symbol c = 0; c < k; ++c) {
      const State p = d1.next(node.p, c);
      const State q = d2.next(node.q, c);
      const std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | q;
      if (seen.try_emplace(key, nodes.size()).second) nodes.push_back({p, q, i, c});
    }
  }
  return std::nullopt;
}

std::vector<Word> enumerate_accepted(const Dfa& d, std::size_t max_len) {
  const State n = d.num_states();
  const std::size_t k = d.alphabet().size();
  // live[r][q]: some word of length exactly r leads from q to acceptance.
  std::vector<std::vector<std::uint8_t>> live(max_len + 1,
                                              std::vector<std::uint8_t>(n, 0));
  for (State q = 0; q < n; ++q) live[0][q] = d.is_accepting(q);
  for (std::size_t r = 1; r <= max_len; ++r)
    for (State q = 0; q < n; ++q)
      for (State t : d.row(q))
        if (live[r - 1][t]) {
          live[r][q] = 1;
          break;
        }

  std::vector<Word> out;
  Word prefix;
  auto extend = [&](auto&& self, State q, std::size_t remaining) -> void {
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    for (Symbol c = 0; c < k; ++c) {
      const State t = d.next(q, c);
      if (!live[remaining - 1][t]) continue;
      prefix.push_back(c);
      self(self, t, remaining - 1);
      prefix.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_len; ++len)
    if (live[len][d.start()]) extend(extend, d.start(), len);
  return out;
}

std::optional<std::size_t> shortest_word_length(const Dfa& d) {
  std::vector<std::size_t> dist(d.num_states(), std::numeric_limits<std::size_t>::max());
  std::deque<State> queue{d.start()};
  dist[d.start()] = 0;
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    if (d.is_accepting(q)) return dist[q];
    for (State t : d.row(q))
      if (dist[t] == std::numeric_limits<std::size_t>::max()) {
        dist[t] = dist[q] + 1;
        queue.push_back(t);
      }
  }
  return std::nullopt;
}

}  // namespace langfilter
