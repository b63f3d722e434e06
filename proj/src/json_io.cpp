#include "langfilter/json_io.hpp"

#include <fstream>
#include <sstream>

#include "langfilter/errors.hpp"

namespace langfilter {

using nlohmann::json;

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

Alphabet read_alphabet(const json& j) {
  return Alphabet(j.get<std::vector<std::string>>());
}

State read_state(const json& j, State limit, const char* what) {
  const auto value = j.get<std::int64_t>();
  if (value < 0 || value >= static_cast<std::int64_t>(limit))
    throw InputError(std::string(what) + " " + std::to_string(value) + " out of range");
  return static_cast<State>(value);
}

State read_state_key(const std::string& key, State limit) {
  std::size_t used = 0;
  long long value = -1;
  try {
    value = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || value < 0 || value >= static_cast<long long>(limit))
    throw InputError("delta key '" + key + "' is not a state index");
  return static_cast<State>(value);
}

State read_state_count(const json& j) {
  const auto states = j.at("states").get<std::int64_t>();
  if (states < 1) throw InputError("automaton needs at least one state");
  return static_cast<State>(states);
}

}  // namespace

Dfa dfa_from_json(const json& j) {
  return guarded("DFA", [&] {
    Alphabet alphabet = read_alphabet(j.at("alphabet"));
    const State n = read_state_count(j);
    const State start = read_state(j.at("start"), n, "start state");
    std::vector<State> accepting;
    for (const auto& q : j.at("accepting")) accepting.push_back(read_state(q, n, "accepting state"));

    const std::size_t k = alphabet.size();
    constexpr State kMissing = std::numeric_limits<State>::max();
    std::vector<State> delta(static_cast<std::size_t>(n) * k, kMissing);
    if (j.contains("delta")) {
      for (const auto& [key, row] : j.at("delta").items()) {
        const State q = read_state_key(key, n);
        for (const auto& [token, target] : row.items())
          delta[q * k + alphabet.symbol(token)] = read_state(target, n, "transition target");
      }
    }
    State total = n;
    if (std::find(delta.begin(), delta.end(), kMissing) != delta.end()) {
      // Complete with a dead state at index n.
      total = n + 1;
      for (auto& t : delta)
        if (t == kMissing) t = n;
      delta.resize(static_cast<std::size_t>(total) * k, n);
    }
    return Dfa(std::move(alphabet), total, start, accepting, std::move(delta));
  });
}

json dfa_to_json(const Dfa& d) {
  json delta = json::object();
  for (State q = 0; q < d.num_states(); ++q) {
    json row = json::object();
    for (Symbol c = 0; c < d.alphabet().size(); ++c) row[d.alphabet().name(c)] = d.next(q, c);
    delta[std::to_string(q)] = std::move(row);
  }
  return {{"alphabet", d.alphabet().names()},
          {"states", d.num_states()},
          {"start", d.start()},
          {"accepting", d.accepting_states()},
          {"delta", std::move(delta)}};
}

Nfa nfa_from_json(const json& j) {
  return guarded("NFA", [&] {
    Alphabet alphabet = read_alphabet(j.at("alphabet"));
    const State n = read_state_count(j);
    std::vector<State> initial;
    for (const auto& q : j.at("initial")) initial.push_back(read_state(q, n, "initial state"));
    std::vector<State> accepting;
    for (const auto& q : j.at("accepting")) accepting.push_back(read_state(q, n, "accepting state"));
    const std::size_t k = alphabet.size();
    std::vector<std::vector<State>> delta(static_cast<std::size_t>(n) * k);
    if (j.contains("delta")) {
      for (const auto& [key, row] : j.at("delta").items()) {
        const State q = read_state_key(key, n);
        for (const auto& [token, targets] : row.items()) {
          auto& slot = delta[q * k + alphabet.symbol(token)];
          for (const auto& t : targets) slot.push_back(read_state(t, n, "transition target"));
        }
      }
    }
    return Nfa(std::move(alphabet), n, std::move(initial), accepting, std::move(delta));
  });
}

json nfa_to_json(const Nfa& n) {
  json delta = json::object();
  for (State q = 0; q < n.num_states(); ++q) {
    json row = json::object();
    for (Symbol c = 0; c < n.alphabet().size(); ++c)
      if (!n.next(q, c).empty()) row[n.alphabet().name(c)] = n.next(q, c);
    if (!row.empty()) delta[std::to_string(q)] = std::move(row);
  }
  return {{"alphabet", n.alphabet().names()},
          {"states", n.num_states()},
          {"initial", n.initial()},
          {"accepting", n.accepting_states()},
          {"delta", std::move(delta)}};
}

Cfg cfg_from_json(const json& j) {
  return guarded("grammar", [&] {
    Cfg::NamedRules rules;
    for (const auto& [head, bodies] : j.at("rules").items())
      rules[head] = bodies.get<std::vector<std::vector<std::string>>>();
    return Cfg(read_alphabet(j.at("terminals")),
               j.at("nonterminals").get<std::vector<std::string>>(),
               j.at("start").get<std::string>(), rules);
  });
}

json cfg_to_json(const Cfg& g) {
  json rules = json::object();
  for (const auto& [head, bodies] : g.named_rules()) rules[head] = bodies;
  return {{"terminals", g.terminals().names()},
          {"nonterminals", g.nonterminals()},
          {"start", g.nonterminals()[g.start()]},
          {"rules", std::move(rules)}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

Dfa load_dfa(const std::filesystem::path& path) {
  return dfa_from_json(parse_json(read_text_file(path)));
}

Nfa load_nfa(const std::filesystem::path& path) {
  return nfa_from_json(parse_json(read_text_file(path)));
}

Cfg load_cfg(const std::filesystem::path& path) {
  return cfg_from_json(parse_json(read_text_file(path)));
}

}  // namespace langfilter
