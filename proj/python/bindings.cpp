#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "langfilter/automata.hpp"
#include "langfilter/diag.hpp"
#include "langfilter/errors.hpp"
#include "langfilter/filtration.hpp"
#include "langfilter/grammar.hpp"
#include "langfilter/json_io.hpp"
#include "langfilter/verify.hpp"

namespace py = pybind11;
using namespace langfilter;

namespace {

// Python ints are unbounded; go through their decimal form.
Natural to_natural(const py::int_& value) {
  const std::string text = py::str(value);
  if (text.empty() || text.front() == '-') throw InputError("expected a non-negative integer");
  return Natural(text);
}

Alphabet implied_alphabet(const std::string& text) {
  std::string letters;
  for (char c : text)
    if (letters.find(c) == std::string::npos) letters += c;
  return Alphabet::from_chars(letters);
}

std::vector<std::string> render_all(const Alphabet& alphabet, const std::vector<Word>& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(alphabet.render(w));
  return out;
}

}  // namespace

PYBIND11_MODULE(_langfilter, m) {
  m.doc() = "Arithmetic filtrations and diagonals of regular and context-free languages";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<Dfa>(m, "Dfa")
      .def_static("from_json", [](const std::string& text) { return dfa_from_json(parse_json(text)); },
                  py::arg("text"))
      .def_static("load", [](const std::string& path) { return load_dfa(path); }, py::arg("path"))
      .def("to_json", [](const Dfa& d) { return dfa_to_json(d).dump(2); })
      .def_property_readonly("alphabet", [](const Dfa& d) { return d.alphabet().names(); })
      .def_property_readonly("num_states", &Dfa::num_states)
      .def_property_readonly("start", &Dfa::start)
      .def_property_readonly("accepting", &Dfa::accepting_states)
      .def("accepts", [](const Dfa& d, const std::string& w) { return dfa_accepts(d, d.alphabet().parse(w)); },
           py::arg("word"))
      .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; })
      .def("__repr__", [](const Dfa& d) {
        return "<Dfa states=" + std::to_string(d.num_states()) + ">";
      });

  py::class_<Nfa>(m, "Nfa")
      .def_static("from_json", [](const std::string& text) { return nfa_from_json(parse_json(text)); },
                  py::arg("text"))
      .def("to_json", [](const Nfa& n) { return nfa_to_json(n).dump(2); })
      .def_property_readonly("alphabet", [](const Nfa& n) { return n.alphabet().names(); })
      .def_property_readonly("num_states", &Nfa::num_states)
      .def("accepts", [](const Nfa& n, const std::string& w) { return nfa_accepts(n, n.alphabet().parse(w)); },
           py::arg("word"))
      .def("__repr__", [](const Nfa& n) {
        return "<Nfa states=" + std::to_string(n.num_states()) + ">";
      });

  m.def("filter_word",
        [](const std::string& word, const py::int_& a, const py::int_& b) {
          const ArithFilter f(to_natural(a), to_natural(b));
          if (word.empty()) return std::string();
          const Alphabet alphabet = implied_alphabet(word);
          return alphabet.render(filter_word(alphabet.parse(word), f));
        },
        py::arg("word"), py::arg("a"), py::arg("b"),
        "Letters of `word` at positions b, a+b, 2a+b, ...");
  m.def("diag_word",
        [](const std::string& word) {
          if (word.empty()) throw InputError("length is not a perfect square");
          const Alphabet alphabet = implied_alphabet(word);
          return alphabet.render(diag_word(alphabet.parse(word)));
        },
        py::arg("word"));

  m.def("minimize", &minimize, py::arg("dfa"));
  m.def("equivalent", &equivalent, py::arg("first"), py::arg("second"));
  m.def("determinize", [](const Nfa& n) { return determinize(n); }, py::arg("nfa"));
  m.def("enumerate_accepted",
        [](const Dfa& d, std::size_t max_len) {
          return render_all(d.alphabet(), enumerate_accepted(d, max_len));
        },
        py::arg("dfa"), py::arg("max_len"));
  m.def("shortest_word_length", &shortest_word_length, py::arg("dfa"));

  m.def("build_filtered_dfa",
        [](const Dfa& d, const py::int_& a, const py::int_& b) {
          return build_filtered_dfa(d, ArithFilter(to_natural(a), to_natural(b)));
        },
        py::arg("dfa"), py::arg("a"), py::arg("b"));
  m.def("filtered_language_oracle",
        [](const Dfa& d, const py::int_& a, const py::int_& b, std::size_t max_len) {
          const WordSet words = filtered_language_oracle(d, ArithFilter(to_natural(a), to_natural(b)), max_len);
          return render_all(d.alphabet(), {words.begin(), words.end()});
        },
        py::arg("dfa"), py::arg("a"), py::arg("b"), py::arg("max_len"));
  m.def("enumerate_distinct_filtrations",
        [](const Dfa& d, const std::string& family) {
          py::list out;
          for (const auto& entry : enumerate_distinct_filtrations(d, parse_family(family)).entries)
            out.append(py::make_tuple(py::int_(py::str(entry.representative.step.str())),
                                      py::int_(py::str(entry.representative.offset.str())),
                                      entry.language));
          return out;
        },
        py::arg("dfa"), py::arg("family"),
        "List of (a, b, canonical Dfa), one per distinct filtered language.");

  m.def("build_diag_nfa", [](const Dfa& d) { return build_diag_nfa(d); }, py::arg("dfa"));
  m.def("diag_oracle_accepts",
        [](const Dfa& d, const std::string& w) { return diag_oracle_accepts(d, d.alphabet().parse(w)); },
        py::arg("dfa"), py::arg("word"));

  m.def("in_thm2", [](const std::string& w) { return in_thm2(w); }, py::arg("word"));
  m.def("in_0n1n", [](const std::string& w) { return in_0n1n(w); }, py::arg("word"));
  m.def("in_thm5", [](const std::string& w) { return in_thm5(w); }, py::arg("word"));
  m.def("thm2_words",
        [](std::size_t max_len) { return render_all(thm2_alphabet(), enumerate_cfg_words(thm2_grammar(), max_len)); },
        py::arg("max_len"), "Words of the grammar S -> 10AB, A -> 0AB | 2, B -> 0B | 03.");

  m.def("verify",
        [](const std::vector<std::string>& claims, std::uint64_t seed, bool deep) {
          VerifyConfig config;
          config.seed = seed;
          config.deep = deep;
          VerificationReport report;
          {
            py::gil_scoped_release release;
            report = verify(claims, config);
          }
          return py::module_::import("json").attr("loads")(report_to_json(report, false).dump());
        },
        py::arg("claims") = std::vector<std::string>{"all"}, py::arg("seed") = 7,
        py::arg("deep") = false);
}
