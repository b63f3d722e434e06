#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langfilter/alphabet.hpp"

namespace langfilter {

struct GrammarSymbol {
  bool terminal = false;
  std::uint32_t id = 0;

  friend auto operator<=>(const GrammarSymbol&, const GrammarSymbol&) = default;
};

using Rhs = std::vector<GrammarSymbol>;

class Cfg {
 public:
  using NamedRules = std::map<std::string, std::vector<std::vector<std::string>>>;

  // Right-hand-side tokens are resolved against the declared nonterminals
  // and terminals. Throws InputError on undeclared or doubly declared names.
  Cfg(Alphabet terminals, std::vector<std::string> nonterminals,
      const std::string& start, const NamedRules& rules);
  Cfg(Alphabet terminals, std::vector<std::string> nonterminals,
      std::uint32_t start, std::vector<std::vector<Rhs>> rules);

  const Alphabet& terminals() const { return terminals_; }
  const std::vector<std::string>& nonterminals() const { return nonterminals_; }
  std::uint32_t start() const { return start_; }
  const std::vector<Rhs>& rules(std::uint32_t nonterminal) const {
    return rules_[nonterminal];
  }
  const std::vector<std::vector<Rhs>>& all_rules() const { return rules_; }

  NamedRules named_rules() const;

  friend bool operator==(const Cfg&, const Cfg&) = default;

 private:
  Alphabet terminals_;
  std::vector<std::string> nonterminals_;
  std::uint32_t start_ = 0;
  std::vector<std::vector<Rhs>> rules_;
};

// Rules are A -> B C, A -> a, and start -> epsilon only when the start
// symbol appears on no right-hand side.
bool is_cnf(const Cfg& g);

// Weakly equivalent grammar in Chomsky normal form; returns `g` unchanged
// when it already is.
Cfg to_cnf(const Cfg& g);

// CYK membership over the CNF form, compiled once.
class CykParser {
 public:
  explicit CykParser(const Cfg& g);

  bool accepts(const Word& w) const;
  const Cfg& cnf() const { return cnf_; }

 private:
  struct Binary {
    std::uint32_t head;
    std::uint32_t left;
    std::uint32_t right;
  };

  Cfg cnf_;
  bool accepts_empty_ = false;
  std::vector<Binary> binary_;
  std::vector<std::vector<std::uint32_t>> by_terminal_;
};

bool cyk_accepts(const Cfg& g, const Word& w);

// L(g) restricted to words of length <= max_len, in short-lex order.
// Leftmost derivations over the CNF form, pruned by minimum yield length.
std::vector<Word> enumerate_cfg_words(const Cfg& g, std::size_t max_len);

// S -> 10AB, A -> 0AB | 2, B -> 0B | 03 over {0,1,2,3}.
Cfg thm2_grammar();
// S -> 0S1 | epsilon over {0,1}.
Cfg zero_one_grammar();

Alphabet thm2_alphabet();
Alphabet zero_one_alphabet();
Alphabet thm5_alphabet();

// Structural recognizers. Letters outside the language's alphabet make the
// predicate false.
bool in_thm2(std::string_view w);   // 1 0^n 2 (0+ 3)^n, n >= 1
bool in_0n1n(std::string_view w);   // 0^n 1^n, n >= 0
// a 0^(3m+1) b (0+ c)^(m-2) 0+ d 0^(3n+1) e (0+ f)^(n-2) 0+
//   g 0^(3p+1) h (0+ i)^(p-2) 0+ j, m, n, p >= 3
bool in_thm5(std::string_view w);
// The three concatenation factors of the language above.
bool in_thm5_first(std::string_view w);
bool in_thm5_second(std::string_view w);
bool in_thm5_third(std::string_view w);

// Allowed letters per diagonal position of a t x t layout.
struct DiagPrefilter {
  std::vector<std::string> allowed;

  // One position per character; '?' admits any letter of the alphabet.
  static DiagPrefilter from_pattern(std::string_view pattern);
};

// Every word of the in_thm5 language with the requested length, ordered by
// (m, n, p) and then by the free zero-run lengths. With a prefilter, partial
// words whose determined diagonal letters are not allowed are pruned.
class Thm5Enumerator {
 public:
  explicit Thm5Enumerator(std::size_t total_len,
                          std::optional<DiagPrefilter> prefilter = std::nullopt);

  // Throws BudgetError once more than `budget` search nodes were visited.
  void set_node_budget(std::uint64_t budget) { budget_ = budget; }

  std::optional<std::string> next();
  std::uint64_t nodes_visited() const { return nodes_; }

 private:
  bool next_tuple();
  bool try_run(std::size_t depth, std::size_t first_len);
  bool place(std::size_t pos, char letter) const;
  bool place_zeros(std::size_t pos, std::size_t len) const;
  bool chunk_fits(std::size_t pos, const std::string& chunk) const;
  std::string assemble() const;

  std::size_t total_len_;
  std::optional<DiagPrefilter> prefilter_;
  std::size_t side_ = 0;

  std::size_t m_ = 3, n_ = 3, p_ = 2;  // first next_tuple() yields (3,3,3)
  bool tuple_active_ = false;
  bool exhausted_ = false;
  bool resume_ = false;
  // chunks_[0] precedes the first free run; chunks_[k] follows free run k.
  std::vector<std::string> chunks_;
  std::size_t free_total_ = 0;
  // Chosen free-run lengths and the position after each placed chunk.
  std::vector<std::size_t> lens_;
  std::vector<std::size_t> ends_;
  std::size_t used_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = UINT64_MAX;
};

}  // namespace langfilter
