#include "langfilter/alphabet.hpp"

#include <algorithm>
#include <unordered_set>

#include "langfilter/errors.hpp"

namespace langfilter {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("alphabet must be nonempty");
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw InputError("alphabet symbol names must be nonempty");
    if (!seen.insert(name).second)
      throw InputError("duplicate alphabet symbol '" + name + "'");
  }
}

Alphabet Alphabet::from_chars(std::string_view letters) {
  std::vector<std::string> names;
  names.reserve(letters.size());
  for (char c : letters) names.emplace_back(1, c);
  return Alphabet(std::move(names));
}

const std::string& Alphabet::name(Symbol s) const {
  if (s >= names_.size())
    throw InputError("symbol index " + std::to_string(s) + " outside alphabet");
  return names_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = std::find(names_.begin(), names_.end(), token);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Symbol>(it - names_.begin());
}

Symbol Alphabet::symbol(std::string_view token) const {
  if (auto s = find(token)) return *s;
  throw InputError("symbol '" + std::string(token) + "' is not in the alphabet");
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(symbol(std::string_view(&c, 1)));
  return w;
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  for (Symbol s : w) out += name(s);
  return out;
}

bool Alphabet::contains(const Word& w) const {
  return std::all_of(w.begin(), w.end(),
                     [&](Symbol s) { return s < names_.size(); });
}

void require_word(const Alphabet& alphabet, const Word& w) {
  for (Symbol s : w) {
    if (s >= alphabet.size())
      throw InputError("symbol index " + std::to_string(s) +
                       " outside alphabet of size " +
                       std::to_string(alphabet.size()));
  }
}

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t length) {
  std::vector<Word> out;
  Word w(length, 0);
  if (alphabet_size == 0) return length == 0 ? std::vector<Word>{w} : out;
  while (true) {
    out.push_back(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] + 1 == alphabet_size) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

}  // namespace langfilter
