#include "langfilter/filtration.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "langfilter/errors.hpp"

namespace langfilter {

namespace {

std::size_t to_size(const Natural& value, std::size_t limit, const char* what) {
  if (value > limit)
    throw BudgetError(std::string(what) + " exceeds " + std::to_string(limit));
  return static_cast<std::size_t>(value);
}

// Successor set under any single letter.
std::vector<std::uint8_t> step_any(const Dfa& d, const std::vector<std::uint8_t>& set) {
  std::vector<std::uint8_t> out(d.num_states(), 0);
  for (State q = 0; q < d.num_states(); ++q)
    if (set[q])
      for (State t : d.row(q)) out[t] = 1;
  return out;
}

std::vector<std::uint8_t> step_letter(const Dfa& d, const std::vector<std::uint8_t>& set,
                                      Symbol c) {
  std::vector<std::uint8_t> out(d.num_states(), 0);
  for (State q = 0; q < d.num_states(); ++q)
    if (set[q]) out[d.next(q, c)] = 1;
  return out;
}

bool hits_final(const Dfa& d, const std::vector<std::uint8_t>& set) {
  for (State q = 0; q < d.num_states(); ++q)
    if (set[q] && d.is_accepting(q)) return true;
  return false;
}

}  // namespace

ArithFilter::ArithFilter(Natural step_, Natural offset_)
    : step(std::move(step_)), offset(std::move(offset_)) {
  if (step < 1) throw InputError("filter step must be at least 1");
  if (offset < 0) throw InputError("filter offset must be non-negative");
}

bool admits(FilterFamily family, const ArithFilter& f) {
  switch (family) {
    case FilterFamily::weak:
      return f.offset == 0;
    case FilterFamily::ordinary:
      return f.offset < f.step;
    case FilterFamily::strong:
      return true;
    case FilterFamily::shift:
      return f.step == 1;
  }
  return false;
}

std::string_view to_string(FilterFamily family) {
  switch (family) {
    case FilterFamily::weak:
      return "weak";
    case FilterFamily::ordinary:
      return "ordinary";
    case FilterFamily::strong:
      return "strong";
    case FilterFamily::shift:
      return "shift";
  }
  return "?";
}

FilterFamily parse_family(std::string_view tag) {
  for (auto family : {FilterFamily::weak, FilterFamily::ordinary,
                      FilterFamily::strong, FilterFamily::shift})
    if (to_string(family) == tag) return family;
  throw InputError("unknown filter family '" + std::string(tag) +
                   "' (expected weak, ordinary, strong or shift)");
}

Word filter_word(const Word& w, const ArithFilter& f) {
  if (f.offset >= w.size()) return {};
  const auto start = static_cast<std::size_t>(f.offset);
  const std::size_t step =
      f.step >= w.size() ? w.size() : static_cast<std::size_t>(f.step);
  Word out;
  for (std::size_t i = start; i < w.size(); i += step) out.push_back(w[i]);
  return out;
}

Word filter_word_general(const Word& w, std::span<const std::uint64_t> indices) {
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i] <= indices[i - 1])
      throw InputError("filter sequence must be strictly increasing");
  Word out;
  for (std::uint64_t index : indices) {
    if (index >= w.size()) return out;
    out.push_back(w[index]);
  }
  if (w.empty()) return out;
  throw InputError("filter sequence prefix ends before reaching past the word");
}

std::size_t FiltrationSignature::hash() const {
  std::size_t seed = step_matrix.hash();
  seed ^= accept_or.hash() + 0x9E3779B97F4A7C15ULL + (seed << 6) + (seed >> 2);
  seed ^= start_row.hash() + 0x9E3779B97F4A7C15ULL + (seed << 6) + (seed >> 2);
  return seed ^ static_cast<std::size_t>(eps_in);
}

FiltrationSignature signature(const Dfa& d, const ArithFilter& f) {
  return signature(d, incidence_matrices(d), shortest_word_length(d), f);
}

FiltrationSignature signature(const Dfa& d, const IncidenceMatrices& im,
                              std::optional<std::size_t> shortest,
                              const ArithFilter& f) {
  const auto& powers = im.orbit.powers();
  FiltrationSignature sig;
  sig.step_matrix = im.orbit.power(f.step - 1);
  sig.accept_or = BoolMatrix(d.num_states());
  const std::size_t terms =
      f.step >= powers.size() ? powers.size() : static_cast<std::size_t>(f.step);
  for (std::size_t i = 0; i < terms; ++i) sig.accept_or |= powers[i];
  sig.start_row = im.orbit.power(f.offset).row(d.start());
  sig.eps_in = shortest.has_value() && *shortest <= f.offset;
  return sig;
}

Dfa build_filtered_dfa(const Dfa& d, const ArithFilter& f,
                       const FilteredDfaOptions& options) {
  const auto im = incidence_matrices(d);
  return build_filtered_dfa(d, im, signature(d, im, shortest_word_length(d), f),
                            options);
}

Dfa build_filtered_dfa(const Dfa& d, const IncidenceMatrices& im,
                       const FiltrationSignature& sig,
                       const FilteredDfaOptions& options) {
  const std::size_t k = d.alphabet().size();
  // A vector accepts iff it reaches F within fewer than `step` further letters.
  const BoolVector accept_test = mat_vec_mul(sig.accept_or, final_vector(d));
  std::vector<BoolMatrix> advance;
  advance.reserve(k);
  for (const auto& letter : im.letters) advance.push_back(mat_mul(sig.step_matrix, letter));

  std::unordered_map<BoolVector, State, BoolVectorHash> ids;
  std::vector<BoolVector> vectors;  // vectors[i] is state i + 1
  auto intern = [&](BoolVector v) -> State {
    auto [it, inserted] = ids.try_emplace(v, static_cast<State>(vectors.size() + 1));
    if (inserted) vectors.push_back(std::move(v));
    return it->second;
  };

  std::vector<State> delta;
  std::vector<State> accepting;
  if (sig.eps_in && options.start_accepts_short_words) accepting.push_back(0);
  for (Symbol c = 0; c < k; ++c) delta.push_back(intern(vec_mat_mul(sig.start_row, im.letters[c])));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const BoolVector current = vectors[i];
    if (dot(current, accept_test)) accepting.push_back(static_cast<State>(i + 1));
    for (Symbol c = 0; c < k; ++c) delta.push_back(intern(vec_mat_mul(current, advance[c])));
  }
  return Dfa(d.alphabet(), static_cast<State>(vectors.size() + 1), 0, accepting,
             std::move(delta));
}

WordSet filtered_language_oracle(const Dfa& d, const ArithFilter& f,
                                 std::size_t max_len) {
  constexpr std::size_t kLimit = 1U << 20;
  const std::size_t step = to_size(f.step, kLimit, "filter step");
  const std::size_t offset = to_size(f.offset, kLimit, "filter offset");
  const std::size_t k = d.alphabet().size();

  WordSet out;
  // Sources of length <= offset produce the empty word.
  std::vector<std::uint8_t> set(d.num_states(), 0);
  set[d.start()] = 1;
  for (std::size_t len = 0; len <= offset; ++len) {
    if (hits_final(d, set)) {
      out.insert(Word{});
      break;
    }
    set = step_any(d, set);
  }
  if (max_len == 0) return out;

  // States reachable by exactly `offset` free letters precede the first kept one.
  set.assign(d.num_states(), 0);
  set[d.start()] = 1;
  for (std::size_t i = 0; i < offset; ++i) set = step_any(d, set);

  Word prefix;
  auto explore = [&](auto&& self, const std::vector<std::uint8_t>& before) -> void {
    for (Symbol c = 0; c < k; ++c) {
      auto after = step_letter(d, before, c);
      prefix.push_back(c);
      // The source may stop anywhere before the next kept position.
      auto tail = after;
      for (std::size_t extra = 0; extra < step; ++extra) {
        if (hits_final(d, tail)) {
          out.insert(prefix);
          break;
        }
        if (extra + 1 < step) tail = step_any(d, tail);
      }
      if (prefix.size() < max_len) {
        for (std::size_t i = 0; i + 1 < step; ++i) after = step_any(d, after);
        self(self, after);
      }
      prefix.pop_back();
    }
  };
  explore(explore, set);
  return out;
}

WordSet filtered_language_literal(const Dfa& d, const ArithFilter& f,
                                  std::size_t max_len, std::size_t max_sources) {
  constexpr std::size_t kLimit = 1U << 20;
  const std::size_t step = to_size(f.step, kLimit, "filter step");
  const std::size_t offset = to_size(f.offset, kLimit, "filter offset");
  const std::size_t source_len = step * max_len + offset;
  std::size_t candidates = 0;
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= source_len; ++len) {
    candidates += layer;
    if (candidates > max_sources)
      throw BudgetError("literal filtration oracle needs more than " +
                        std::to_string(max_sources) + " source words");
    layer *= d.alphabet().size();
  }
  WordSet out;
  for (const Word& w : enumerate_accepted(d, source_len)) {
    Word filtered = filter_word(w, f);
    if (filtered.size() <= max_len) out.insert(std::move(filtered));
  }
  return out;
}

std::optional<std::size_t> FiltrationAtlas::find(const Dfa& canonical) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].language == canonical) return i;
  return std::nullopt;
}

FiltrationAtlas enumerate_distinct_filtrations(const Dfa& d, FilterFamily family) {
  const auto im = incidence_matrices(d);
  const auto shortest = shortest_word_length(d);
  const std::size_t index = im.orbit.index();
  const std::size_t period = im.orbit.period();
  // Signatures are periodic in the offset once it passes both the orbit index
  // and the shortest accepted length, and periodic in step - 1 once the
  // accept matrix has absorbed every power. The extra period on the step
  // window leaves room for offset < step in the ordinary family.
  const std::size_t offset_window = std::max(index, shortest.value_or(0)) + period;
  const std::size_t step_window = std::max(index + period, offset_window) + period;

  FiltrationAtlas atlas{family, {}, step_window, offset_window};
  std::unordered_set<FiltrationSignature, FiltrationSignatureHash> seen;
  for (std::size_t a = 1; a <= step_window; ++a) {
    for (std::size_t b = 0; b < offset_window; ++b) {
      ArithFilter f(a, b);
      if (!admits(family, f)) continue;
      auto sig = signature(d, im, shortest, f);
      if (!seen.insert(sig).second) continue;
      Dfa canonical = minimize(build_filtered_dfa(d, im, sig));
      if (!atlas.find(canonical)) atlas.entries.push_back({f, std::move(canonical)});
    }
  }
  return atlas;
}

}  // namespace langfilter
