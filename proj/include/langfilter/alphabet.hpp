#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace langfilter {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

// Length first, then lexicographic by symbol index.
struct ShortLex {
  bool operator()(const Word& lhs, const Word& rhs) const {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs < rhs;
  }
};

using WordSet = std::set<Word, ShortLex>;

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  // One symbol per character of `letters`, in order.
  static Alphabet from_chars(std::string_view letters);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Symbol s) const;

  std::optional<Symbol> find(std::string_view token) const;
  Symbol symbol(std::string_view token) const;

  // Splits `text` into single-character tokens.
  Word parse(std::string_view text) const;
  std::string render(const Word& w) const;

  bool contains(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

// Throws InputError when `w` uses a symbol outside `alphabet`.
void require_word(const Alphabet& alphabet, const Word& w);

// All words over an alphabet of `alphabet_size` symbols with length exactly
// `length`, in lexicographic order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t length);

}  // namespace langfilter
