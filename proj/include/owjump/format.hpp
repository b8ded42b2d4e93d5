#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "owjump/model.hpp"

namespace owjump {

/// Line-oriented automaton description:
///
///     # comment
///     alphabet: a b c
///     start: q0
///     final: q0 q1
///     rule: q0 ab -> q1
///
/// Exactly one alphabet: and one start: line; symbols are single characters;
/// states are declared implicitly by appearance. Blank lines and lines whose
/// first non-space character is '#' are ignored. DFA inputs use the same
/// format and are additionally checked for completeness on import.
inline RawAutomaton parse_automaton_text(std::istream& in) {
    RawAutomaton raw;
    bool saw_alphabet = false;
    bool saw_start = false;
    std::string line;
    std::size_t line_no = 0;

    auto syntax_error = [&](const std::string& what) {
        fail(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string head;
        if (!(tokens >> head)) continue;  // blank
        if (head.front() == '#') continue;

        std::vector<std::string> rest;
        for (std::string tok; tokens >> tok;) rest.push_back(tok);

        if (head == "alphabet:") {
            if (saw_alphabet) syntax_error("second alphabet: line");
            saw_alphabet = true;
            if (rest.empty()) syntax_error("alphabet: needs at least one symbol");
            for (const std::string& tok : rest) {
                if (tok.size() != 1)
                    syntax_error("symbol '" + tok + "' is not a single character");
                raw.alphabet.push_back(tok[0]);
            }
        } else if (head == "start:") {
            if (saw_start) syntax_error("second start: line");
            saw_start = true;
            if (rest.size() != 1) syntax_error("start: needs exactly one state");
            raw.start = rest[0];
        } else if (head == "final:") {
            for (const std::string& tok : rest) raw.finals.push_back(tok);
        } else if (head == "rule:") {
            if (rest.size() != 4 || rest[2] != "->")
                syntax_error("rule lines have the form: rule: <src> <word> -> <dst>");
            raw.rules.push_back({rest[0], rest[1], rest[3]});
        } else {
            syntax_error("unknown directive '" + head + "'");
        }
    }

    if (!saw_alphabet) fail(ErrorKind::parse_error, "missing alphabet: line");
    if (!saw_start) fail(ErrorKind::parse_error, "missing start: line");
    return raw;
}

inline RawAutomaton parse_automaton_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_automaton_text(in);
}

inline RawAutomaton parse_automaton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::parse_error, "cannot open '" + path + "'");
    return parse_automaton_text(in);
}

/// Canonical text form; parsing it back validates to a structurally equal
/// automaton (declaration orders are preserved).
inline std::string serialize_automaton(const Automaton& a) {
    std::ostringstream out;
    out << "alphabet:";
    for (Symbol c : a.alphabet()) out << ' ' << c;
    out << '\n';
    out << "start: " << a.start() << '\n';
    out << "final:";
    for (const StateId& f : a.finals()) out << ' ' << f;
    out << '\n';
    for (const Rule& r : a.rules())
        out << "rule: " << r.source << ' ' << r.word << " -> " << r.target << '\n';
    return out.str();
}

inline Automaton load_automaton_file(const std::string& path) {
    return validate_automaton(parse_automaton_file(path));
}

}  // namespace owjump
