#include "langfilter/grammar.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

#include "langfilter/errors.hpp"

namespace langfilter {

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

void dedupe_keep_order(std::vector<Rhs>& rules) {
  std::set<Rhs> seen;
  std::vector<Rhs> out;
  for (auto& rhs : rules)
    if (seen.insert(rhs).second) out.push_back(std::move(rhs));
  rules = std::move(out);
}

std::string fresh_name(const std::vector<std::string>& taken, const Alphabet& terminals,
                       std::string base) {
  auto used = [&](const std::string& name) {
    return std::find(taken.begin(), taken.end(), name) != taken.end() ||
           terminals.find(name).has_value();
  };
  if (!used(base)) return base;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!used(candidate)) return candidate;
  }
}

// Shortest terminal yield of every nonterminal, kUnbounded if none.
std::vector<std::size_t> min_yields(const Cfg& g) {
  std::vector<std::size_t> best(g.nonterminals().size(), kUnbounded);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t a = 0; a < best.size(); ++a)
      for (const Rhs& rhs : g.rules(a)) {
        std::size_t total = 0;
        for (const auto& sym : rhs) {
          const std::size_t part = sym.terminal ? 1 : best[sym.id];
          if (part == kUnbounded) {
            total = kUnbounded;
            break;
          }
          total += part;
        }
        if (total < best[a]) {
          best[a] = total;
          changed = true;
        }
      }
  }
  return best;
}

}  // namespace

Cfg::Cfg(Alphabet terminals, std::vector<std::string> nonterminals,
         const std::string& start, const NamedRules& rules)
    : terminals_(std::move(terminals)), nonterminals_(std::move(nonterminals)) {
  if (nonterminals_.empty()) throw InputError("grammar needs at least one nonterminal");
  std::unordered_set<std::string> declared;
  for (const auto& name : nonterminals_) {
    if (!declared.insert(name).second)
      throw InputError("duplicate nonterminal '" + name + "'");
    if (terminals_.find(name))
      throw InputError("'" + name + "' is declared both terminal and nonterminal");
  }
  auto index_of = [&](const std::string& name) -> std::optional<std::uint32_t> {
    auto it = std::find(nonterminals_.begin(), nonterminals_.end(), name);
    if (it == nonterminals_.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - nonterminals_.begin());
  };
  auto start_index = index_of(start);
  if (!start_index) throw InputError("start symbol '" + start + "' is not a nonterminal");
  start_ = *start_index;
  rules_.resize(nonterminals_.size());
  for (const auto& [head, bodies] : rules) {
    auto head_index = index_of(head);
    if (!head_index) throw InputError("rule for undeclared nonterminal '" + head + "'");
    for (const auto& body : bodies) {
      Rhs rhs;
      for (const auto& token : body) {
        if (auto nt = index_of(token))
          rhs.push_back({false, *nt});
        else if (auto t = terminals_.find(token))
          rhs.push_back({true, *t});
        else
          throw InputError("undeclared grammar symbol '" + token + "'");
      }
      rules_[*head_index].push_back(std::move(rhs));
    }
  }
  for (auto& list : rules_) dedupe_keep_order(list);
}

Cfg::Cfg(Alphabet terminals, std::vector<std::string> nonterminals, std::uint32_t start,
         std::vector<std::vector<Rhs>> rules)
    : terminals_(std::move(terminals)),
      nonterminals_(std::move(nonterminals)),
      start_(start),
      rules_(std::move(rules)) {
  if (start_ >= nonterminals_.size()) throw InputError("start symbol out of range");
  rules_.resize(nonterminals_.size());
  for (const auto& list : rules_)
    for (const auto& rhs : list)
      for (const auto& sym : rhs)
        if (sym.terminal ? sym.id >= terminals_.size() : sym.id >= nonterminals_.size())
          throw InputError("undeclared grammar symbol index " + std::to_string(sym.id));
  for (auto& list : rules_) dedupe_keep_order(list);
}

Cfg::NamedRules Cfg::named_rules() const {
  NamedRules out;
  for (std::uint32_t a = 0; a < nonterminals_.size(); ++a) {
    auto& bodies = out[nonterminals_[a]];
    for (const auto& rhs : rules_[a]) {
      std::vector<std::string> body;
      for (const auto& sym : rhs)
        body.push_back(sym.terminal ? terminals_.name(sym.id) : nonterminals_[sym.id]);
      bodies.push_back(std::move(body));
    }
  }
  return out;
}

bool is_cnf(const Cfg& g) {
  bool start_nullable = false;
  bool start_on_rhs = false;
  for (std::uint32_t a = 0; a < g.nonterminals().size(); ++a)
    for (const auto& rhs : g.rules(a)) {
      if (rhs.empty()) {
        if (a != g.start()) return false;
        start_nullable = true;
      } else if (rhs.size() == 1) {
        if (!rhs[0].terminal) return false;
      } else if (rhs.size() == 2) {
        if (rhs[0].terminal || rhs[1].terminal) return false;
        if (rhs[0].id == g.start() || rhs[1].id == g.start()) start_on_rhs = true;
      } else {
        return false;
      }
    }
  return !(start_nullable && start_on_rhs);
}

Cfg to_cnf(const Cfg& g) {
  if (is_cnf(g)) return g;
  const Alphabet& terminals = g.terminals();
  std::vector<std::string> names = g.nonterminals();
  std::vector<std::vector<Rhs>> rules = g.all_rules();
  auto add_nonterminal = [&](std::string base) {
    names.push_back(fresh_name(names, terminals, std::move(base)));
    rules.emplace_back();
    return static_cast<std::uint32_t>(names.size() - 1);
  };

  // Fresh start symbol that never occurs on a right-hand side.
  const std::uint32_t start = add_nonterminal(g.nonterminals()[g.start()] + "0");
  rules[start].push_back({{false, g.start()}});

  // Terminals inside long rules get their own nonterminal.
  std::vector<std::optional<std::uint32_t>> terminal_nt(terminals.size());
  for (std::uint32_t a = 0; a < rules.size(); ++a)
    for (std::size_t r = 0; r < rules[a].size(); ++r) {
      if (rules[a][r].size() < 2) continue;
      for (std::size_t s = 0; s < rules[a][r].size(); ++s) {
        const auto sym = rules[a][r][s];
        if (!sym.terminal) continue;
        if (!terminal_nt[sym.id]) {
          const auto nt = add_nonterminal("T_" + terminals.name(sym.id));
          rules[nt].push_back({sym});
          terminal_nt[sym.id] = nt;
        }
        rules[a][r][s] = {false, *terminal_nt[sym.id]};
      }
    }

  // Binarize.
  for (std::uint32_t a = 0; a < rules.size(); ++a)
    for (std::size_t r = 0; r < rules[a].size(); ++r) {
      if (rules[a][r].size() <= 2) continue;
      Rhs body = rules[a][r];
      std::uint32_t head = a;
      std::size_t slot = r;
      for (std::size_t s = 0; s + 2 < body.size(); ++s) {
        const auto tail = add_nonterminal(names[a] + "_" + std::to_string(s + 1));
        Rhs pair{body[s], {false, tail}};
        if (head == a)
          rules[a][slot] = pair;
        else
          rules[head].push_back(pair);
        head = tail;
      }
      rules[head].push_back({body[body.size() - 2], body.back()});
    }

  // Remove epsilon rules except at the fresh start.
  std::vector<std::uint8_t> nullable(names.size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t a = 0; a < rules.size(); ++a) {
      if (nullable[a]) continue;
      for (const auto& rhs : rules[a])
        if (std::all_of(rhs.begin(), rhs.end(),
                        [&](const GrammarSymbol& s) { return !s.terminal && nullable[s.id]; })) {
          nullable[a] = 1;
          changed = true;
          break;
        }
    }
  }
  for (std::uint32_t a = 0; a < rules.size(); ++a) {
    std::vector<Rhs> expanded;
    for (const auto& rhs : rules[a]) {
      const std::size_t options = std::size_t{1} << rhs.size();
      for (std::size_t mask = 0; mask < options; ++mask) {
        Rhs variant;
        bool valid = true;
        for (std::size_t s = 0; s < rhs.size(); ++s) {
          if (mask & (std::size_t{1} << s)) {
            if (rhs[s].terminal || !nullable[rhs[s].id]) valid = false;
          } else {
            variant.push_back(rhs[s]);
          }
        }
        if (valid && !variant.empty()) expanded.push_back(std::move(variant));
      }
    }
    rules[a] = std::move(expanded);
  }

  // Collapse unit chains.
  const std::size_t count = names.size();
  std::vector<std::vector<std::uint8_t>> unit(count, std::vector<std::uint8_t>(count, 0));
  for (std::uint32_t a = 0; a < count; ++a) {
    unit[a][a] = 1;
    for (const auto& rhs : rules[a])
      if (rhs.size() == 1 && !rhs[0].terminal) unit[a][rhs[0].id] = 1;
  }
  for (std::uint32_t k = 0; k < count; ++k)
    for (std::uint32_t i = 0; i < count; ++i)
      if (unit[i][k])
        for (std::uint32_t j = 0; j < count; ++j)
          if (unit[k][j]) unit[i][j] = 1;
  std::vector<std::vector<Rhs>> collapsed(count);
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b) {
      if (!unit[a][b]) continue;
      for (const auto& rhs : rules[b])
        if (!(rhs.size() == 1 && !rhs[0].terminal)) collapsed[a].push_back(rhs);
    }
  if (nullable[g.start()]) collapsed[start].push_back({});

  // Drop nonterminals that derive nothing or are unreachable from the start.
  Cfg staged(terminals, names, start, collapsed);
  const auto yields = min_yields(staged);
  std::vector<std::uint8_t> keep(count, 0);
  std::vector<std::uint32_t> stack{start};
  keep[start] = 1;
  while (!stack.empty()) {
    const auto a = stack.back();
    stack.pop_back();
    for (const auto& rhs : collapsed[a]) {
      const bool productive = std::all_of(rhs.begin(), rhs.end(), [&](const GrammarSymbol& s) {
        return s.terminal || yields[s.id] != kUnbounded;
      });
      if (!productive) continue;
      for (const auto& s : rhs)
        if (!s.terminal && !keep[s.id]) {
          keep[s.id] = 1;
          stack.push_back(s.id);
        }
    }
  }
  std::vector<std::uint32_t> remap(count, 0);
  std::vector<std::string> kept_names;
  for (std::uint32_t a = 0; a < count; ++a)
    if (keep[a]) {
      remap[a] = static_cast<std::uint32_t>(kept_names.size());
      kept_names.push_back(names[a]);
    }
  std::vector<std::vector<Rhs>> kept_rules(kept_names.size());
  for (std::uint32_t a = 0; a < count; ++a) {
    if (!keep[a]) continue;
    for (const auto& rhs : collapsed[a]) {
      bool usable = true;
      Rhs mapped;
      for (const auto& s : rhs) {
        if (!s.terminal && (!keep[s.id] || yields[s.id] == kUnbounded)) usable = false;
        mapped.push_back(s.terminal ? s : GrammarSymbol{false, remap[s.id]});
      }
      if (usable) kept_rules[remap[a]].push_back(std::move(mapped));
    }
  }
  return Cfg(terminals, std::move(kept_names), remap[start], std::move(kept_rules));
}

CykParser::CykParser(const Cfg& g)
    : cnf_(to_cnf(g)), by_terminal_(cnf_.terminals().size()) {
  for (std::uint32_t a = 0; a < cnf_.nonterminals().size(); ++a)
    for (const auto& rhs : cnf_.rules(a)) {
      if (rhs.empty())
        accepts_empty_ = accepts_empty_ || a == cnf_.start();
      else if (rhs.size() == 1)
        by_terminal_[rhs[0].id].push_back(a);
      else
        binary_.push_back({a, rhs[0].id, rhs[1].id});
    }
}

bool CykParser::accepts(const Word& w) const {
  require_word(cnf_.terminals(), w);
  const std::size_t n = w.size();
  if (n == 0) return accepts_empty_;
  const std::size_t nts = cnf_.nonterminals().size();
  const std::size_t stride = (nts + 63) / 64;
  // cell(i, len) holds the nonterminals deriving w[i, i + len).
  std::vector<std::uint64_t> table((n + 1) * (n + 1) * stride, 0);
  auto cell = [&](std::size_t i, std::size_t len) { return table.data() + (i * (n + 1) + len) * stride; };
  auto has = [](const std::uint64_t* bits, std::uint32_t a) { return (bits[a / 64] >> (a % 64)) & 1U; };
  for (std::size_t i = 0; i < n; ++i)
    for (auto a : by_terminal_[w[i]]) cell(i, 1)[a / 64] |= std::uint64_t{1} << (a % 64);
  for (std::size_t len = 2; len <= n; ++len)
    for (std::size_t i = 0; i + len <= n; ++i) {
      auto* target = cell(i, len);
      for (std::size_t split = 1; split < len; ++split) {
        const auto* left = cell(i, split);
        const auto* right = cell(i + split, len - split);
        for (const auto& rule : binary_)
          if (has(left, rule.left) && has(right, rule.right))
            target[rule.head / 64] |= std::uint64_t{1} << (rule.head % 64);
      }
    }
  return has(cell(0, n), cnf_.start());
}

bool cyk_accepts(const Cfg& g, const Word& w) { return CykParser(g).accepts(w); }

std::vector<Word> enumerate_cfg_words(const Cfg& g, std::size_t max_len) {
  const Cfg cnf = to_cnf(g);
  const auto yields = min_yields(cnf);
  WordSet found;
  Word prefix;
  std::vector<std::uint32_t> pending;  // back() is the leftmost nonterminal
  std::size_t pending_yield = 0;

  auto derive = [&](auto&& self) -> void {
    if (pending.empty()) {
      found.insert(prefix);
      return;
    }
    const std::uint32_t a = pending.back();
    pending.pop_back();
    pending_yield -= yields[a];
    for (const auto& rhs : cnf.rules(a)) {
      if (rhs.size() == 1) {
        if (prefix.size() + 1 + pending_yield > max_len) continue;
        prefix.push_back(rhs[0].id);
        self(self);
        prefix.pop_back();
      } else if (rhs.size() == 2) {
        const std::size_t extra = yields[rhs[0].id] + yields[rhs[1].id];
        if (yields[rhs[0].id] == kUnbounded || yields[rhs[1].id] == kUnbounded) continue;
        if (prefix.size() + extra + pending_yield > max_len) continue;
        pending.push_back(rhs[1].id);
        pending.push_back(rhs[0].id);
        pending_yield += extra;
        self(self);
        pending_yield -= extra;
        pending.pop_back();
        pending.pop_back();
      }
    }
    pending.push_back(a);
    pending_yield += yields[a];
  };

  for (const auto& rhs : cnf.rules(cnf.start()))
    if (rhs.empty()) found.insert(Word{});
  if (yields[cnf.start()] != kUnbounded && yields[cnf.start()] <= max_len) {
    pending.push_back(cnf.start());
    pending_yield = yields[cnf.start()];
    derive(derive);
  }
  return {found.begin(), found.end()};
}

Alphabet thm2_alphabet() { return Alphabet::from_chars("0123"); }
Alphabet zero_one_alphabet() { return Alphabet::from_chars("01"); }
Alphabet thm5_alphabet() { return Alphabet::from_chars("abcdefghij0"); }

Cfg thm2_grammar() {
  return Cfg(thm2_alphabet(), {"S", "A", "B"}, "S",
             {{"S", {{"1", "0", "A", "B"}}},
              {"A", {{"0", "A", "B"}, {"2"}}},
              {"B", {{"0", "B"}, {"0", "3"}}}});
}

Cfg zero_one_grammar() {
  return Cfg(zero_one_alphabet(), {"S"}, "S", {{"S", {{"0", "S", "1"}, {}}}});
}

bool in_thm2(std::string_view w) {
  std::size_t i = 0;
  auto zeros = [&] {
    std::size_t run = 0;
    while (i < w.size() && w[i] == '0') ++i, ++run;
    return run;
  };
  if (i >= w.size() || w[i++] != '1') return false;
  const std::size_t n = zeros();
  if (n == 0) return false;
  if (i >= w.size() || w[i++] != '2') return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (zeros() == 0) return false;
    if (i >= w.size() || w[i++] != '3') return false;
  }
  return i == w.size();
}

bool in_0n1n(std::string_view w) {
  std::size_t zeros = 0;
  while (zeros < w.size() && w[zeros] == '0') ++zeros;
  if (w.size() != 2 * zeros) return false;
  return std::all_of(w.begin() + static_cast<std::ptrdiff_t>(zeros), w.end(),
                     [](char c) { return c == '1'; });
}

namespace {

// A letter together with the zero run immediately before it.
struct Token {
  std::size_t zeros;
  char letter;
};

struct Tokens {
  std::vector<Token> letters;
  std::size_t trailing_zeros = 0;
};

std::optional<Tokens> tokenize_thm5(std::string_view w) {
  Tokens out;
  std::size_t run = 0;
  for (char c : w) {
    if (c == '0') {
      ++run;
    } else if (c >= 'a' && c <= 'j') {
      out.letters.push_back({run, c});
      run = 0;
    } else {
      return std::nullopt;
    }
  }
  out.trailing_zeros = run;
  return out;
}

enum class Lead { none, some };

// head 0^(3k+1) mid (0+ rep)^(k-2), starting at token `pos`. The run before
// `head` is empty for Lead::none and nonempty for Lead::some.
std::optional<std::size_t> match_block(const std::vector<Token>& tokens, std::size_t pos,
                                       Lead lead, char head, char mid, char rep) {
  if (pos + 1 >= tokens.size()) return std::nullopt;
  const Token& first = tokens[pos];
  if (first.letter != head) return std::nullopt;
  if ((lead == Lead::none) != (first.zeros == 0)) return std::nullopt;
  const Token& second = tokens[pos + 1];
  if (second.letter != mid || second.zeros < 10 || (second.zeros - 1) % 3 != 0)
    return std::nullopt;
  const std::size_t k = (second.zeros - 1) / 3;
  pos += 2;
  for (std::size_t r = 0; r < k - 2; ++r, ++pos)
    if (pos >= tokens.size() || tokens[pos].letter != rep || tokens[pos].zeros == 0)
      return std::nullopt;
  return pos;
}

}  // namespace

bool in_thm5(std::string_view w) {
  const auto tokens = tokenize_thm5(w);
  if (!tokens || tokens->trailing_zeros != 0) return false;
  const auto& t = tokens->letters;
  auto pos = match_block(t, 0, Lead::none, 'a', 'b', 'c');
  if (pos) pos = match_block(t, *pos, Lead::some, 'd', 'e', 'f');
  if (pos) pos = match_block(t, *pos, Lead::some, 'g', 'h', 'i');
  if (!pos || *pos + 1 != t.size()) return false;
  return t[*pos].letter == 'j' && t[*pos].zeros > 0;
}

bool in_thm5_first(std::string_view w) {
  const auto tokens = tokenize_thm5(w);
  if (!tokens || tokens->trailing_zeros == 0) return false;
  const auto pos = match_block(tokens->letters, 0, Lead::none, 'a', 'b', 'c');
  return pos && *pos == tokens->letters.size();
}

bool in_thm5_second(std::string_view w) {
  const auto tokens = tokenize_thm5(w);
  if (!tokens || tokens->trailing_zeros == 0) return false;
  const auto pos = match_block(tokens->letters, 0, Lead::none, 'd', 'e', 'f');
  return pos && *pos == tokens->letters.size();
}

bool in_thm5_third(std::string_view w) {
  const auto tokens = tokenize_thm5(w);
  if (!tokens || tokens->trailing_zeros != 0) return false;
  const auto& t = tokens->letters;
  const auto pos = match_block(t, 0, Lead::none, 'g', 'h', 'i');
  return pos && *pos + 1 == t.size() && t[*pos].letter == 'j' && t[*pos].zeros > 0;
}

DiagPrefilter DiagPrefilter::from_pattern(std::string_view pattern) {
  const Alphabet letters = thm5_alphabet();
  DiagPrefilter out;
  for (char c : pattern) {
    if (c == '?') {
      out.allowed.emplace_back("abcdefghij0");
    } else {
      letters.symbol(std::string_view(&c, 1));
      out.allowed.emplace_back(1, c);
    }
  }
  return out;
}

Thm5Enumerator::Thm5Enumerator(std::size_t total_len, std::optional<DiagPrefilter> prefilter)
    : total_len_(total_len), prefilter_(std::move(prefilter)) {
  if (!prefilter_) return;
  while ((side_ + 1) * (side_ + 1) <= total_len_) ++side_;
  if (side_ == 0 || side_ * side_ != total_len_)
    throw InputError("length is not a perfect square");
  if (prefilter_->allowed.size() != side_)
    throw InputError("diagonal prefilter needs " + std::to_string(side_) + " positions");
}

bool Thm5Enumerator::place(std::size_t pos, char letter) const {
  if (!prefilter_ || pos % (side_ + 1) != 0) return true;
  const std::size_t k = pos / (side_ + 1);
  return k >= side_ || prefilter_->allowed[k].find(letter) != std::string::npos;
}

bool Thm5Enumerator::place_zeros(std::size_t pos, std::size_t len) const {
  if (!prefilter_) return true;
  const std::size_t stride = side_ + 1;
  for (std::size_t k = (pos + stride - 1) / stride; k < side_ && k * stride < pos + len; ++k)
    if (prefilter_->allowed[k].find('0') == std::string::npos) return false;
  return true;
}

bool Thm5Enumerator::chunk_fits(std::size_t pos, const std::string& chunk) const {
  for (std::size_t i = 0; i < chunk.size(); ++i)
    if (!place(pos + i, chunk[i])) return false;
  return true;
}

bool Thm5Enumerator::next_tuple() {
  auto fits = [&] { return 5 * (m_ + n_ + p_) + 1 <= total_len_; };
  while (true) {
    ++p_;
    if (!fits()) {
      p_ = 3;
      ++n_;
      if (!fits()) {
        n_ = 3;
        ++m_;
        if (!fits()) return false;
      }
    }
    auto block = [](char head, char mid, std::size_t k) {
      return std::string(1, head) + std::string(3 * k + 1, '0') + mid;
    };
    chunks_.clear();
    chunks_.push_back(block('a', 'b', m_));
    for (std::size_t r = 0; r + 2 < m_; ++r) chunks_.emplace_back("c");
    chunks_.push_back(block('d', 'e', n_));
    for (std::size_t r = 0; r + 2 < n_; ++r) chunks_.emplace_back("f");
    chunks_.push_back(block('g', 'h', p_));
    for (std::size_t r = 0; r + 2 < p_; ++r) chunks_.emplace_back("i");
    chunks_.emplace_back("j");

    std::size_t fixed = 0;
    for (const auto& chunk : chunks_) fixed += chunk.size();
    const std::size_t runs = chunks_.size() - 1;
    if (fixed + runs > total_len_) continue;
    free_total_ = total_len_ - fixed;
    ++nodes_;
    if (!chunk_fits(0, chunks_[0])) continue;
    lens_.clear();
    ends_.assign(1, chunks_[0].size());
    used_ = 0;
    return true;
  }
}

bool Thm5Enumerator::try_run(std::size_t depth, std::size_t first_len) {
  const std::size_t runs = chunks_.size() - 1;
  const std::size_t free_left = free_total_ - used_;
  const std::size_t later = runs - depth - 1;
  if (free_left < later + 1) return false;
  const std::size_t longest = free_left - later;
  // The last run absorbs whatever is left.
  const std::size_t shortest = std::max(first_len, later == 0 ? longest : std::size_t{1});
  const std::size_t pos = ends_.back();
  for (std::size_t len = shortest; len <= longest; ++len) {
    if (++nodes_ > budget_)
      throw BudgetError("enumeration exceeded " + std::to_string(budget_) + " nodes");
    // A longer run still covers the offending diagonal cell.
    if (!place_zeros(pos, len)) return false;
    if (!chunk_fits(pos + len, chunks_[depth + 1])) continue;
    lens_.push_back(len);
    ends_.push_back(pos + len + chunks_[depth + 1].size());
    used_ += len;
    return true;
  }
  return false;
}

std::optional<std::string> Thm5Enumerator::next() {
  while (!exhausted_) {
    if (!tuple_active_) {
      if (!next_tuple()) {
        exhausted_ = true;
        break;
      }
      tuple_active_ = true;
      resume_ = false;
    }
    if (resume_) {
      if (lens_.empty()) {
        tuple_active_ = false;
        continue;
      }
      const std::size_t depth = lens_.size() - 1;
      const std::size_t retry = lens_.back() + 1;
      used_ -= lens_.back();
      lens_.pop_back();
      ends_.pop_back();
      if (!try_run(depth, retry)) continue;
      resume_ = false;
    }
    const std::size_t runs = chunks_.size() - 1;
    while (lens_.size() < runs && try_run(lens_.size(), 1)) {
    }
    resume_ = true;
    if (lens_.size() == runs) return assemble();
  }
  return std::nullopt;
}

std::string Thm5Enumerator::assemble() const {
  std::string out = chunks_[0];
  for (std::size_t r = 0; r < lens_.size(); ++r) {
    out.append(lens_[r], '0');
    out += chunks_[r + 1];
  }
  return out;
}

}  // namespace langfilter
