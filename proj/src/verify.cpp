#include "langfilter/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iomanip>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "langfilter/diag.hpp"
#include "langfilter/errors.hpp"
#include "langfilter/filtration.hpp"
#include "langfilter/grammar.hpp"
#include "langfilter/random_dfa.hpp"

namespace langfilter {

namespace {

// Stream separation so each claim's pool is independent of the others.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return seed * 0x9E3779B97F4A7C15ULL + stream;
}

std::string show(const Alphabet& alphabet, const Word& w) {
  return w.empty() ? std::string("(empty)") : alphabet.render(w);
}

template <typename Fn>
ClaimRecord timed(std::string claim, Fn&& body) {
  const auto begin = std::chrono::steady_clock::now();
  ClaimRecord record;
  record.claim = std::move(claim);
  body(record);
  record.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  return record;
}

void fail(ClaimRecord& record, std::string witness) {
  if (record.outcome == Outcome::fail) return;
  record.outcome = Outcome::fail;
  record.witness = std::move(witness);
}

std::string repeat(char c, std::size_t n) { return std::string(n, c); }

// Words of 1 0^n 2 (0+ 3)^n up to max_len, generated from run lengths.
std::set<std::string> thm2_by_runs(std::size_t max_len) {
  std::set<std::string> out;
  for (std::size_t n = 1; 2 * n + 2 + n <= max_len; ++n) {
    const std::string head = "1" + repeat('0', n) + "2";
    std::string body;
    auto fill = [&](auto&& self, std::size_t groups) -> void {
      if (groups == n) {
        out.insert(head + body);
        return;
      }
      const std::size_t remaining = n - groups - 1;
      for (std::size_t run = 1; head.size() + body.size() + run + 1 + 2 * remaining <= max_len;
           ++run) {
        const std::size_t mark = body.size();
        body += repeat('0', run) + "3";
        self(self, groups + 1);
        body.resize(mark);
      }
    };
    fill(fill, 0);
  }
  return out;
}

bool is_12_3plus(const std::string& w) {
  return w.size() >= 3 && w.compare(0, 2, "12") == 0 &&
         std::all_of(w.begin() + 2, w.end(), [](char c) { return c == '3'; });
}

// a 0^(3m+1) b (0^(3m+1) c)^(m-2) 0^(3m+1) d ... with every run 3m+1 long.
std::string thm5_witness(std::size_t t) {
  const std::size_t m = t + 2;
  const std::string zeros = repeat('0', 3 * m + 1);
  std::string y;
  auto block = [&](char head, char mid, char rep) {
    y += head;
    y += zeros;
    y += mid;
    for (std::size_t r = 0; r + 2 < m; ++r) y += zeros + rep;
    y += zeros;
  };
  block('a', 'b', 'c');
  block('d', 'e', 'f');
  block('g', 'h', 'i');
  y += 'j';
  return y;
}

std::string thm5_target(std::size_t t) {
  return "ab" + repeat('c', t) + "de" + repeat('f', t) + "gh" + repeat('i', t) + "j";
}

}  // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass:
      return "PASS";
    case Outcome::fail:
      return "FAIL";
    case Outcome::skipped:
      return "SKIPPED";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  return std::none_of(records.begin(), records.end(),
                      [](const ClaimRecord& r) { return r.outcome == Outcome::fail; });
}

ClaimRecord verify_thm1(const VerifyConfig& config) {
  return timed("thm1", [&](ClaimRecord& record) {
    std::ostringstream params;
    params << "seed=" << config.seed << " construction_pool=" << config.construction_pool
           << " a=1..4 b=0..4 max_len=" << config.max_len
           << " atlas_pool=" << config.atlas_pool;
    record.parameters = params.str();

    Rng rng(derive_seed(config.seed, 1));
    std::size_t largest = 0;
    std::size_t filters = 0;
    for (std::size_t i = 0; i < config.construction_pool; ++i) {
      const Dfa d = random_dfa(rng, {1, 5, 1, 3});
      const std::size_t bound = (std::size_t{1} << d.num_states()) + 1;
      for (unsigned a = 1; a <= 4; ++a)
        for (unsigned b = 0; b <= 4; ++b) {
          const ArithFilter f(a, b);
          const Dfa built = build_filtered_dfa(d, f);
          ++filters;
          largest = std::max<std::size_t>(largest, built.num_states());
          if (built.num_states() > bound)
            fail(record, "dfa #" + std::to_string(i) + " (a,b)=(" + std::to_string(a) + "," +
                             std::to_string(b) + ") has " + std::to_string(built.num_states()) +
                             " states > 2^n+1 = " + std::to_string(bound));
          const auto listed = enumerate_accepted(built, config.max_len);
          const WordSet got(listed.begin(), listed.end());
          const WordSet want = filtered_language_oracle(d, f, config.max_len);
          if (got != want) {
            std::vector<Word> diff;
            std::set_symmetric_difference(got.begin(), got.end(), want.begin(), want.end(),
                                          std::back_inserter(diff), ShortLex{});
            fail(record, "dfa #" + std::to_string(i) + " (a,b)=(" + std::to_string(a) + "," +
                             std::to_string(b) + ") disagrees on " +
                             show(d.alphabet(), diff.front()));
          }
        }
    }
    record.details.push_back("construction = oracle on " + std::to_string(filters) +
                             " (dfa, filter) cells; largest unminimized filtered DFA " +
                             std::to_string(largest) + " states, within 2^n+1");

    Rng atlas_rng(derive_seed(config.seed, 2));
    std::map<FilterFamily, std::pair<std::size_t, std::size_t>> sizes;
    std::size_t cells = 0;
    for (std::size_t i = 0; i < config.atlas_pool; ++i) {
      const Dfa d = random_dfa(atlas_rng, {1, 5, 1, 3});
      for (auto family : {FilterFamily::weak, FilterFamily::ordinary, FilterFamily::strong,
                          FilterFamily::shift}) {
        const auto atlas = enumerate_distinct_filtrations(d, family);
        auto& [low, high] = sizes.try_emplace(family, SIZE_MAX, 0).first->second;
        low = std::min(low, atlas.entries.size());
        high = std::max(high, atlas.entries.size());
        // Every cell of a window twice the enumeration bound is already listed.
        for (std::size_t a = 1; a <= 2 * atlas.step_window; ++a)
          for (std::size_t b = 0; b < 2 * atlas.offset_window; ++b) {
            const ArithFilter f(a, b);
            if (!admits(family, f)) continue;
            ++cells;
            if (!atlas.find(minimize(build_filtered_dfa(d, f))))
              fail(record, "dfa #" + std::to_string(i) + " family " +
                               std::string(to_string(family)) + " (a,b)=(" + std::to_string(a) +
                               "," + std::to_string(b) + ") missing from atlas");
          }
      }
    }
    std::ostringstream atlas_line;
    atlas_line << "atlas completeness over " << cells << " window cells; distinct languages";
    for (const auto& [family, range] : sizes)
      atlas_line << " " << to_string(family) << "=" << range.first << ".." << range.second;
    record.details.push_back(atlas_line.str());
  });
}

ClaimRecord verify_thm2(const VerifyConfig&) {
  return timed("thm2", [&](ClaimRecord& record) {
    record.parameters = "a=2..5 sources |w|<=a(a+1)";
    const Cfg grammar = thm2_grammar();
    const Alphabet alphabet = thm2_alphabet();
    std::vector<std::set<std::string>> languages;
    for (std::size_t a = 2; a <= 5; ++a) {
      const std::size_t bound = a * (a + 1);
      std::set<std::string> sources;
      for (const Word& w : enumerate_cfg_words(grammar, bound)) sources.insert(alphabet.render(w));
      for (const auto& w : sources)
        if (!in_thm2(w)) fail(record, "grammar yields " + w + " outside the pattern");
      if (sources != thm2_by_runs(bound))
        fail(record, "grammar enumeration and run-length enumeration differ at |w|<=" +
                         std::to_string(bound));

      std::string z = "1" + repeat('0', a - 1) + "2";
      for (std::size_t r = 0; r + 1 < a; ++r) z += repeat('0', a - 1) + "3";
      if (!sources.count(z)) fail(record, "source " + z + " missing for a=" + std::to_string(a));

      std::set<std::string> hits;
      std::string stray_source;
      const std::string expected = "12" + repeat('3', a - 1);
      const ArithFilter f(a, 0);
      for (const auto& w : sources) {
        std::string filtered = alphabet.render(filter_word(alphabet.parse(w), f));
        if (!is_12_3plus(filtered)) continue;
        if (filtered != expected && stray_source.empty())
          stray_source = w + " filters to " + filtered;
        hits.insert(std::move(filtered));
      }
      std::string listing;
      for (const auto& h : hits) listing += (listing.empty() ? "" : ",") + h;
      record.details.push_back("a=" + std::to_string(a) + ": " + std::to_string(sources.size()) +
                               " sources, L_{a,0} & 123+ = {" + listing + "}");
      if (hits != std::set<std::string>{expected})
        fail(record, "a=" + std::to_string(a) + " intersection {" + listing + "} != {" +
                         expected + "}" + (stray_source.empty() ? "" : "; source " + stray_source));
      languages.push_back(std::move(hits));
    }
    bool distinct = true;
    for (std::size_t i = 0; i < languages.size(); ++i)
      for (std::size_t j = i + 1; j < languages.size(); ++j)
        if (languages[i] == languages[j]) {
          distinct = false;
          fail(record, "a=" + std::to_string(i + 2) + " and a=" + std::to_string(j + 2) +
                           " give the same restricted language");
        }
    // Sources with fewer kept 3s also land in 123+, so the observed sets are
    // {12 3^k : 1 <= k <= a-1}; distinctness only needs the largest member.
    bool prefix_closed = true;
    for (std::size_t i = 0; i < languages.size(); ++i) {
      std::set<std::string> expected;
      for (std::size_t k = 1; k <= i + 1; ++k) expected.insert("12" + repeat('3', k));
      prefix_closed = prefix_closed && languages[i] == expected;
    }
    record.details.push_back(std::string("info: intersections ") +
                             (prefix_closed ? "equal" : "differ from") +
                             " {12 3^k : 1<=k<=a-1}; restricted languages pairwise " +
                             (distinct ? "distinct" : "NOT distinct"));
  });
}

ClaimRecord verify_thm3(const VerifyConfig&) {
  return timed("thm3", [&](ClaimRecord& record) {
    record.parameters = "b=0..6 sources 0^n1^n n<=2b+2";
    const Cfg grammar = zero_one_grammar();
    const Alphabet alphabet = zero_one_alphabet();
    std::vector<std::set<std::string>> languages;
    for (std::size_t b = 0; b <= 6; ++b) {
      const std::size_t n_max = 2 * b + 2;
      std::set<std::string> sources;
      for (const Word& w : enumerate_cfg_words(grammar, 2 * n_max))
        sources.insert(alphabet.render(w));
      if (sources.size() != n_max + 1)
        fail(record, "expected " + std::to_string(n_max + 1) + " sources for b=" +
                         std::to_string(b) + ", got " + std::to_string(sources.size()));
      for (const auto& w : sources)
        if (!in_0n1n(w)) fail(record, "grammar yields " + w + " outside 0^n1^n");

      std::set<std::string> filtered;
      for (const auto& w : sources)
        filtered.insert(alphabet.render(filter_word(alphabet.parse(w), ArithFilter(1, b))));
      std::size_t longest = 0;
      for (const auto& w : filtered)
        if (std::all_of(w.begin(), w.end(), [](char c) { return c == '1'; }))
          longest = std::max(longest, w.size());
      record.details.push_back("b=" + std::to_string(b) + ": longest 1* word has length " +
                               std::to_string(longest));
      if (longest != b)
        fail(record, "b=" + std::to_string(b) + ": longest 1* word is 1^" +
                         std::to_string(longest));
      languages.push_back(std::move(filtered));
    }
    // 1^b' lies in L_{1,b'} but not in L_{1,b} for b < b'.
    for (std::size_t b = 0; b < languages.size(); ++b)
      for (std::size_t other = b + 1; other < languages.size(); ++other) {
        const std::string witness = repeat('1', other);
        if (!languages[other].count(witness) || languages[b].count(witness))
          fail(record, "1^" + std::to_string(other) + " does not separate b=" +
                           std::to_string(b) + " from b=" + std::to_string(other));
      }
  });
}

ClaimRecord verify_thm4(const VerifyConfig& config) {
  return timed("thm4", [&](ClaimRecord& record) {
    record.parameters = "seed=" + std::to_string(config.seed) +
                        " pool=" + std::to_string(config.diag_pool) +
                        " states<=4 |alphabet|=2 t<=4";
    Rng rng(derive_seed(config.seed, 4));
    std::size_t words = 0;
    std::size_t largest_nfa = 0;
    std::size_t largest_dfa = 0;
    std::string letter_first_note;
    for (std::size_t i = 0; i < config.diag_pool; ++i) {
      const Dfa d = random_dfa(rng, {1, 4, 2, 2});
      const Nfa nfa = build_diag_nfa(d);
      largest_nfa = std::max<std::size_t>(largest_nfa, nfa.num_states());
      largest_dfa = std::max<std::size_t>(largest_dfa, determinize(nfa, 1U << 16).num_states());
      const Nfa letter_first = build_diag_nfa(d, DiagStepOrder::letter_then_gap);
      for (std::size_t t = 1; t <= 4; ++t) {
        const WordSet exhaustive = t <= 3 ? diag_oracle_exhaustive(d, t) : WordSet{};
        for (const Word& w : all_words(d.alphabet().size(), t)) {
          ++words;
          const bool by_nfa = nfa_accepts(nfa, w);
          const bool by_matrix = diag_oracle_accepts(d, w);
          if (by_nfa != by_matrix)
            fail(record, "dfa #" + std::to_string(i) + " word " + show(d.alphabet(), w) +
                             ": nfa=" + std::to_string(by_nfa) +
                             " matrix oracle=" + std::to_string(by_matrix));
          if (t <= 3 && by_matrix != (exhaustive.count(w) > 0))
            fail(record, "dfa #" + std::to_string(i) + " word " + show(d.alphabet(), w) +
                             ": matrix oracle disagrees with exhaustive enumeration");
          if (letter_first_note.empty() && nfa_accepts(letter_first, w) != by_matrix)
            letter_first_note = "letter-then-gap order v*M_a*W disagrees with the oracles at t=" +
                                 std::to_string(t) + " (dfa #" + std::to_string(i) +
                                 ", word " + show(d.alphabet(), w) + "); gap-then-letter order agrees";
        }
      }
    }
    record.details.push_back("three-way agreement t<=3, two-way t=4 over " +
                             std::to_string(words) + " words");
    record.details.push_back("largest diag NFA " + std::to_string(largest_nfa) +
                             " states; largest determinized " + std::to_string(largest_dfa));
    record.details.push_back("info: " + (letter_first_note.empty()
                                              ? std::string("letter-then-gap order agreed on this pool")
                                              : letter_first_note));
  });
}

ClaimRecord verify_thm5(const VerifyConfig& config) {
  return timed("thm5", [&](ClaimRecord& record) {
    record.parameters = std::string("witnesses t=1,2; exhaustive |y|=100") +
                        (config.deep ? " and |y|=169" : "");
    const Alphabet alphabet = thm5_alphabet();
    for (std::size_t t = 1; t <= 2; ++t) {
      const std::string y = thm5_witness(t);
      const std::size_t side = 3 * (t + 2) + 1;
      const std::string diag = alphabet.render(diag_word(alphabet.parse(y)));
      record.details.push_back("t=" + std::to_string(t) + ": |y|=" + std::to_string(y.size()) +
                               " diag=" + diag);
      if (!in_thm5(y)) fail(record, "witness for t=" + std::to_string(t) + " is not in L");
      if (y.size() != side * side || diag != thm5_target(t))
        fail(record, "witness for t=" + std::to_string(t) + " has diagonal " + diag);
    }

    const std::regex shape("ab(c+)de(f+)gh(i+)j");
    auto sweep = [&](std::size_t total, DiagPrefilter prefilter, const std::string& expected) {
      Thm5Enumerator enumerator(total, std::move(prefilter));
      enumerator.set_node_budget(config.thm5_node_budget);
      std::set<std::string> matches;
      std::size_t sources = 0;
      try {
        while (auto y = enumerator.next()) {
          ++sources;
          if (!in_thm5(*y)) fail(record, "enumerator yielded " + *y + " outside L");
          std::string diag = alphabet.render(diag_word(alphabet.parse(*y)));
          if (std::regex_match(diag, shape)) matches.insert(std::move(diag));
        }
      } catch (const BudgetError&) {
        if (record.outcome == Outcome::pass) {
          record.outcome = Outcome::skipped;
          record.witness = "node budget " + std::to_string(config.thm5_node_budget) +
                           " exhausted at |y|=" + std::to_string(total);
        }
        record.details.push_back("|y|=" + std::to_string(total) + ": SKIPPED after " +
                                 std::to_string(enumerator.nodes_visited()) + " nodes");
        return;
      }
      std::string listing;
      for (const auto& m : matches) listing += (listing.empty() ? "" : ",") + m;
      record.details.push_back("|y|=" + std::to_string(total) + ": " + std::to_string(sources) +
                               " candidate sources, " + std::to_string(enumerator.nodes_visited()) +
                               " nodes, matching diagonals {" + listing + "}");
      if (matches != std::set<std::string>{expected})
        fail(record, "|y|=" + std::to_string(total) + " diagonals {" + listing + "} != {" +
                         expected + "}");
    };
    sweep(100, DiagPrefilter::from_pattern("ab?de?gh?j"), thm5_target(1));
    if (config.deep) {
      // Any word of the target shape has only these letters off the ends.
      DiagPrefilter letters;
      letters.allowed.assign(13, "cdefghi");
      letters.allowed.front() = "a";
      letters.allowed[1] = "b";
      letters.allowed.back() = "j";
      sweep(169, std::move(letters), thm5_target(2));
    }
  });
}

VerificationReport verify(std::span<const std::string> claims, const VerifyConfig& config,
                          bool parallel) {
  std::vector<std::string> ids;
  for (const auto& claim : claims) {
    if (claim == "all") {
      ids.assign(std::begin(kClaimIds), std::end(kClaimIds));
      continue;
    }
    if (std::find(std::begin(kClaimIds), std::end(kClaimIds), claim) == std::end(kClaimIds))
      throw InputError("unknown claim '" + claim + "' (expected thm1..thm5 or all)");
    ids.push_back(claim);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto run = [&config](const std::string& id) {
    if (id == "thm1") return verify_thm1(config);
    if (id == "thm2") return verify_thm2(config);
    if (id == "thm3") return verify_thm3(config);
    if (id == "thm4") return verify_thm4(config);
    return verify_thm5(config);
  };
  VerificationReport report;
  if (parallel) {
    std::vector<std::future<ClaimRecord>> pending;
    for (const auto& id : ids) pending.push_back(std::async(std::launch::async, run, id));
    for (auto& p : pending) report.records.push_back(p.get());
  } else {
    for (const auto& id : ids) report.records.push_back(run(id));
  }
  return report;
}

std::string render_table(const VerificationReport& report, bool with_timing) {
  std::ostringstream out;
  for (const auto& r : report.records) {
    out << r.claim << "  " << to_string(r.outcome) << "  " << r.parameters;
    if (with_timing) out << "  (" << std::fixed << std::setprecision(2) << r.elapsed_seconds << " s)";
    out << '\n';
    for (const auto& line : r.details) out << "    " << line << '\n';
    if (r.outcome != Outcome::pass) out << "    witness: " << r.witness << '\n';
  }
  out << (report.all_passed() ? "ALL CLAIMS PASS" : "VERIFICATION FAILED") << '\n';
  return out.str();
}

nlohmann::json report_to_json(const VerificationReport& report, bool with_timing) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json entry{{"claim", r.claim},
                         {"outcome", to_string(r.outcome)},
                         {"parameters", r.parameters},
                         {"details", r.details}};
    if (r.outcome != Outcome::pass) entry["witness"] = r.witness;
    if (with_timing) entry["elapsed_seconds"] = r.elapsed_seconds;
    claims.push_back(std::move(entry));
  }
  return {{"claims", std::move(claims)}, {"all_passed", report.all_passed()}};
}

}  // namespace langfilter
