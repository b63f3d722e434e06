#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "langfilter/automata.hpp"
#include "langfilter/grammar.hpp"

namespace langfilter {

// Automaton format:
//   {"alphabet": ["a","b"], "states": 3, "start": 0, "accepting": [0],
//    "delta": {"0": {"a": 1}, "1": {"b": 0}}}
// Missing DFA transitions go to a dead state appended as index `states`.
// NFAs use "initial": [...] and list-valued delta entries.
Dfa dfa_from_json(const nlohmann::json& j);
nlohmann::json dfa_to_json(const Dfa& d);
Nfa nfa_from_json(const nlohmann::json& j);
nlohmann::json nfa_to_json(const Nfa& n);

// {"terminals": [...], "nonterminals": [...], "start": "S",
//  "rules": {"S": [["1","0","A","B"]], ...}}
Cfg cfg_from_json(const nlohmann::json& j);
nlohmann::json cfg_to_json(const Cfg& g);

// Parse failures raise InputError carrying the byte position.
nlohmann::json parse_json(const std::string& text);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Dfa load_dfa(const std::filesystem::path& path);
Nfa load_nfa(const std::filesystem::path& path);
Cfg load_cfg(const std::filesystem::path& path);

}  // namespace langfilter
