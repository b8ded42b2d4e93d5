#pragma once

#include <stdexcept>
#include <string>

namespace owjump {

enum class ErrorKind {
    parse_error,
    determinism_violation,
    unknown_symbol,
    unknown_state,
    empty_rule_word,
    model_mismatch,
    word_over_alphabet,
    budget_exceeded,
    unknown_oracle,
    alphabet_mismatch,
    bound_violation,
    incomplete_dfa,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse_error: return "parse error";
        case ErrorKind::determinism_violation: return "determinism violation";
        case ErrorKind::unknown_symbol: return "unknown symbol";
        case ErrorKind::unknown_state: return "unknown state";
        case ErrorKind::empty_rule_word: return "empty rule word";
        case ErrorKind::model_mismatch: return "model mismatch";
        case ErrorKind::word_over_alphabet: return "word over alphabet";
        case ErrorKind::budget_exceeded: return "budget exceeded";
        case ErrorKind::unknown_oracle: return "unknown oracle";
        case ErrorKind::alphabet_mismatch: return "alphabet mismatch";
        case ErrorKind::bound_violation: return "bound violation";
        case ErrorKind::incomplete_dfa: return "incomplete dfa";
    }
    return "unknown error";
}

/// Library-wide exception; `kind()` identifies the failed contract.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace owjump
