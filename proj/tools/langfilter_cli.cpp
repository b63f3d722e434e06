// langfilter: filter formal languages by arithmetic progressions, take
// diagonals, and check the supporting claims against brute-force oracles.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "langfilter/diag.hpp"
#include "langfilter/errors.hpp"
#include "langfilter/filtration.hpp"
#include "langfilter/json_io.hpp"
#include "langfilter/verify.hpp"

namespace {

using namespace langfilter;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Natural parse_natural(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
  return Natural(text);
}

// Alphabet of the distinct characters of `text` in order of appearance.
Alphabet implied_alphabet(const std::string& text) {
  std::string letters;
  for (char c : text)
    if (letters.find(c) == std::string::npos) letters += c;
  return Alphabet::from_chars(letters);
}

std::string show_word(const Alphabet& alphabet, const Word& w) {
  return w.empty() ? std::string("(empty)") : alphabet.render(w);
}

void emit(const std::string& out_path, const nlohmann::json& document) {
  if (out_path.empty())
    std::cout << document.dump(2) << '\n';
  else
    write_text_file(out_path, document.dump(2) + "\n");
}

// Human-readable notes go to stderr when stdout carries the JSON document.
std::ostream& notes(const std::string& out_path) { return out_path.empty() ? std::cerr : std::cout; }

int run_filter_word(const std::string& word, const std::string& a, const std::string& b) {
  const ArithFilter f(parse_natural(a, "step"), parse_natural(b, "offset"));
  if (f.step < 1) throw UsageError("step must be at least 1");
  if (word.empty()) {
    std::cout << "(empty)\n";
    return 0;
  }
  const Alphabet alphabet = implied_alphabet(word);
  std::cout << show_word(alphabet, filter_word(alphabet.parse(word), f)) << '\n';
  return 0;
}

int run_filter_lang(const std::string& file, const std::string& a, const std::string& b,
                    const std::string& out_path) {
  const Natural step = parse_natural(a, "step");
  if (step < 1) throw UsageError("step must be at least 1");
  const ArithFilter f(step, parse_natural(b, "offset"));
  const Dfa source = load_dfa(file);
  const Dfa built = build_filtered_dfa(source, f);
  const Dfa minimal = minimize(built);
  notes(out_path) << "states before minimization: " << built.num_states() << '\n'
                  << "states after minimization: " << minimal.num_states() << '\n';
  emit(out_path, dfa_to_json(minimal));
  return 0;
}

int run_enumerate(const std::string& file, const std::string& family_tag, std::size_t sample_len,
                  const std::string& format) {
  const FilterFamily family = parse_family(family_tag);
  const Dfa source = load_dfa(file);
  const auto atlas = enumerate_distinct_filtrations(source, family);
  if (format == "json") {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& entry : atlas.entries) {
      std::vector<std::string> samples;
      for (const Word& w : enumerate_accepted(entry.language, sample_len))
        samples.push_back(source.alphabet().render(w));
      entries.push_back({{"a", entry.representative.step.str()},
                         {"b", entry.representative.offset.str()},
                         {"states", entry.language.num_states()},
                         {"samples", samples}});
    }
    std::cout << nlohmann::json{{"family", to_string(family)},
                                {"step_window", atlas.step_window},
                                {"offset_window", atlas.offset_window},
                                {"entries", entries},
                                {"distinct", atlas.entries.size()}}
                     .dump(2)
              << '\n';
    return 0;
  }
  std::cout << "family " << to_string(family) << ", step-1 < " << atlas.step_window
            << ", offset < " << atlas.offset_window << '\n';
  std::cout << "a\tb\tstates\twords (length <= " << sample_len << ")\n";
  for (const auto& entry : atlas.entries) {
    std::cout << entry.representative.step << '\t' << entry.representative.offset << '\t'
              << entry.language.num_states() << '\t';
    const auto words = enumerate_accepted(entry.language, sample_len);
    if (words.empty()) std::cout << "(none)";
    for (std::size_t i = 0; i < words.size(); ++i)
      std::cout << (i ? " " : "") << show_word(source.alphabet(), words[i]);
    std::cout << '\n';
  }
  std::cout << "DISTINCT LANGUAGES: " << atlas.entries.size() << '\n';
  return 0;
}

int run_diag_nfa(const std::string& file, const std::string& out_path) {
  const Nfa nfa = build_diag_nfa(load_dfa(file));
  notes(out_path) << "diag NFA states: " << nfa.num_states() << '\n';
  emit(out_path, nfa_to_json(nfa));
  return 0;
}

int run_diag(const std::string& target, const std::string& out_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(target, ec)) return run_diag_nfa(target, out_path);
  if (target.empty()) throw UsageError("length is not a perfect square");
  const Alphabet alphabet = implied_alphabet(target);
  std::cout << alphabet.render(diag_word(alphabet.parse(target))) << '\n';
  return 0;
}

int run_verify(const std::vector<std::string>& claims, const VerifyConfig& config,
               const std::string& format, bool timing, bool parallel) {
  const auto report = verify(claims, config, parallel);
  if (format == "json")
    std::cout << report_to_json(report, timing).dump(2) << '\n';
  else
    std::cout << render_table(report, timing);
  return report.all_passed() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic-progression filtrations and diagonals of formal languages"};
  app.require_subcommand(1);

  std::string word, a, b, file, out_path, family, format = "table";
  std::size_t max_len = 5;

  auto* filter_word_cmd = app.add_subcommand("filter-word", "Filter a word by s(i) = a*i + b");
  filter_word_cmd->add_option("word", word, "Word of single-character letters")->required();
  filter_word_cmd->add_option("a", a, "Step (>= 1)")->required();
  filter_word_cmd->add_option("b", b, "Offset (>= 0)")->required();

  auto* filter_lang_cmd = app.add_subcommand("filter-lang", "Build the minimal DFA of a filtered language");
  filter_lang_cmd->add_option("dfa-file", file, "DFA JSON")->required();
  filter_lang_cmd->add_option("a", a, "Step (>= 1)")->required();
  filter_lang_cmd->add_option("b", b, "Offset (>= 0)")->required();
  filter_lang_cmd->add_option("out-file,--out", out_path, "Output DFA JSON (stdout if omitted)");

  auto* enumerate_cmd = app.add_subcommand("enumerate-filtrations",
                                           "List the distinct languages produced by a filter family");
  enumerate_cmd->add_option("dfa-file", file, "DFA JSON")->required();
  enumerate_cmd->add_option("family", family, "weak, ordinary, strong or shift")->required();
  enumerate_cmd->add_option("--max-len", max_len, "Sample word length");
  enumerate_cmd->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto* diag_cmd = app.add_subcommand("diag", "Diagonal of a square-length word, or diag NFA of a DFA file");
  diag_cmd->add_option("target", word, "Word or DFA JSON file")->required();
  diag_cmd->add_option("--out", out_path, "Output NFA JSON in file mode");

  auto* diag_nfa_cmd = app.add_subcommand("diag-nfa", "Build the NFA accepting diag(L)");
  diag_nfa_cmd->add_option("dfa-file", file, "DFA JSON")->required();
  diag_nfa_cmd->add_option("--out", out_path, "Output NFA JSON (stdout if omitted)");

  VerifyConfig config;
  std::vector<std::string> claims;
  bool timing = false;
  bool parallel = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check the claims against brute-force oracles");
  verify_cmd->add_option("claims", claims, "thm1 .. thm5 or all")->default_val(std::vector<std::string>{"all"});
  verify_cmd->add_option("--seed", config.seed, "Seed for random automaton pools");
  verify_cmd->add_option("--max-len", config.max_len, "Filtered word length bound for thm1");
  verify_cmd->add_flag("--deep", config.deep, "Include the |y| = 169 search for thm5");
  verify_cmd->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  verify_cmd->add_flag("--timing", timing, "Report elapsed time per claim");
  verify_cmd->add_flag("--parallel", parallel, "Run claims concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*filter_word_cmd) return run_filter_word(word, a, b);
    if (*filter_lang_cmd) return run_filter_lang(file, a, b, out_path);
    if (*enumerate_cmd) return run_enumerate(file, family, max_len, format);
    if (*diag_cmd) return run_diag(word, out_path);
    if (*diag_nfa_cmd) return run_diag_nfa(file, out_path);
    if (*verify_cmd) return run_verify(claims, config, format, timing, parallel);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
