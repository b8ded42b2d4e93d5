#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "owjump/error.hpp"

namespace owjump {

using Symbol = char;
/// A word over the automaton's alphabet; the empty string is the empty word.
using Word = std::string;
using StateId = std::string;

/// Rules are stored in travel order for every model: the automaton leaves
/// `source`, deletes `word`, and enters `target`. Left-direction models scan
/// the input from the opposite end but travel the same rules.
struct Rule {
    StateId source;
    Word word;  // always nonempty
    StateId target;

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// The seven operational readings of one automaton.
///  - rowj/lowj: right/left one-way jumping over single letters
///  - grl/gll:   generalized linear one-way jumping (subword rules, head-return move)
///  - grc/glc:   generalized circular one-way jumping (subword rules, tape rotation)
///  - gjfa:      jumping baseline, deletes any occurrence anywhere
enum class ModelKind { rowj, lowj, grl, gll, grc, glc, gjfa };

inline constexpr std::array<ModelKind, 7> all_models = {
    ModelKind::rowj, ModelKind::lowj, ModelKind::grl, ModelKind::gll,
    ModelKind::grc,  ModelKind::glc,  ModelKind::gjfa,
};

inline const char* to_string(ModelKind m) {
    switch (m) {
        case ModelKind::rowj: return "rowj";
        case ModelKind::lowj: return "lowj";
        case ModelKind::grl: return "grl";
        case ModelKind::gll: return "gll";
        case ModelKind::grc: return "grc";
        case ModelKind::glc: return "glc";
        case ModelKind::gjfa: return "gjfa";
    }
    return "?";
}

inline std::optional<ModelKind> model_from_string(std::string_view name) {
    for (ModelKind m : all_models)
        if (name == to_string(m)) return m;
    return std::nullopt;
}

inline bool uses_linear_configuration(ModelKind m) {
    return m == ModelKind::grl || m == ModelKind::gll;
}

/// True for the models whose head travels right-to-left.
inline bool scans_from_right(ModelKind m) {
    return m == ModelKind::lowj || m == ModelKind::gll || m == ModelKind::glc;
}

inline bool requires_letter_rules(ModelKind m) {
    return m == ModelKind::rowj || m == ModelKind::lowj;
}

/// Unvalidated automaton description, as read from a file or built by hand.
struct RawRule {
    StateId source;
    Word word;
    StateId target;
};

struct RawAutomaton {
    std::vector<Symbol> alphabet;
    StateId start;
    std::vector<StateId> finals;
    std::vector<RawRule> rules;
};

namespace detail {

inline bool valid_state_id(const StateId& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

inline bool valid_symbol(Symbol c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '#' && c != '@';
}

}  // namespace detail

/// Immutable after construction through validate_automaton; safe to share
/// read-only across threads. Declaration orders (alphabet, states, finals,
/// rules) are preserved; the alphabet order is the collation used for
/// canonical word ordering.
class Automaton {
public:
    const std::vector<Symbol>& alphabet() const { return alphabet_; }
    const std::vector<StateId>& states() const { return states_; }
    const StateId& start() const { return start_; }
    const std::vector<StateId>& finals() const { return finals_; }
    const std::vector<Rule>& rules() const { return rules_; }

    bool has_state(const StateId& s) const {
        return std::find(states_.begin(), states_.end(), s) != states_.end();
    }

    bool is_final(const StateId& s) const {
        return std::find(finals_.begin(), finals_.end(), s) != finals_.end();
    }

    bool has_symbol(Symbol c) const {
        return std::find(alphabet_.begin(), alphabet_.end(), c) != alphabet_.end();
    }

    bool word_over_alphabet(std::string_view w) const {
        return std::all_of(w.begin(), w.end(), [&](char c) { return has_symbol(c); });
    }

    /// The rule words leaving `p`, sorted lexicographically. For every model
    /// the input skipped at `p` must not contain any of these as a subword.
    const std::vector<Word>& rule_words_of(const StateId& p) const {
        auto it = words_by_source_.find(p);
        if (it == words_by_source_.end())
            fail(ErrorKind::unknown_state, "no state named '" + p + "'");
        return it->second;
    }

    std::optional<StateId> target(const StateId& p, const Word& w) const {
        auto it = rule_map_.find({p, w});
        if (it == rule_map_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const Automaton&, const Automaton&) = default;

    friend Automaton validate_automaton(const RawAutomaton& raw);

private:
    Automaton() = default;

    std::vector<Symbol> alphabet_;
    std::vector<StateId> states_;  // in order of first appearance
    StateId start_;
    std::vector<StateId> finals_;
    std::vector<Rule> rules_;
    std::map<std::pair<StateId, Word>, StateId> rule_map_;
    std::map<StateId, std::vector<Word>> words_by_source_;
};

/// Checks every structural invariant: nonempty alphabet of distinct single
/// characters, well-formed state ids, nonempty rule words over the alphabet,
/// at most one target per (source, word). States are declared implicitly by
/// appearance in the start/final/rule fields. Exact duplicate rules collapse.
inline Automaton validate_automaton(const RawAutomaton& raw) {
    Automaton a;

    if (raw.alphabet.empty())
        fail(ErrorKind::parse_error, "alphabet must be non-empty");
    for (Symbol c : raw.alphabet) {
        if (!detail::valid_symbol(c))
            fail(ErrorKind::parse_error, std::string("symbol '") + c + "' is reserved or invalid");
        if (a.has_symbol(c))
            fail(ErrorKind::parse_error, std::string("duplicate symbol '") + c + "'");
        a.alphabet_.push_back(c);
    }

    auto touch_state = [&](const StateId& s) {
        if (!detail::valid_state_id(s))
            fail(ErrorKind::parse_error, "malformed state id '" + s + "'");
        if (!a.has_state(s)) a.states_.push_back(s);
    };

    touch_state(raw.start);
    a.start_ = raw.start;
    for (const StateId& f : raw.finals) {
        touch_state(f);
        if (!a.is_final(f)) a.finals_.push_back(f);
    }

    for (const RawRule& r : raw.rules) {
        touch_state(r.source);
        touch_state(r.target);
        if (r.word.empty())
            fail(ErrorKind::empty_rule_word,
                 "rule " + r.source + " -> " + r.target + " deletes the empty word");
        for (char c : r.word)
            if (!a.has_symbol(c))
                fail(ErrorKind::unknown_symbol,
                     std::string("rule word '") + r.word + "' uses '" + c + "' outside the alphabet");
        auto [it, inserted] = a.rule_map_.insert({{r.source, r.word}, r.target});
        if (!inserted) {
            if (it->second != r.target)
                fail(ErrorKind::determinism_violation,
                     "state " + r.source + " deletes '" + r.word + "' into both " + it->second +
                         " and " + r.target);
            continue;  // exact duplicate
        }
        a.rules_.push_back(Rule{r.source, r.word, r.target});
    }

    for (const StateId& s : a.states_) a.words_by_source_.emplace(s, std::vector<Word>{});
    for (const Rule& r : a.rules_) a.words_by_source_[r.source].push_back(r.word);
    for (auto& [s, words] : a.words_by_source_) std::sort(words.begin(), words.end());

    return a;
}

/// rowj/lowj admit only single-letter rules; the generalized models take any
/// nonempty rule word.
inline void check_model_compatibility(const Automaton& a, ModelKind m) {
    if (!requires_letter_rules(m)) return;
    for (const Rule& r : a.rules())
        if (r.word.size() != 1)
            fail(ErrorKind::model_mismatch,
                 std::string(to_string(m)) + " requires single-letter rules, but " + r.source +
                     " deletes '" + r.word + "'");
}

/// Configuration of a circular-tape run (also used by gjfa). The tape is kept
/// pre-rotated: for right models the head sits before position 0, for left
/// models behind the last position.
struct CircularConfig {
    StateId state;
    Word tape;

    friend bool operator==(const CircularConfig&, const CircularConfig&) = default;
    friend auto operator<=>(const CircularConfig&, const CircularConfig&) = default;
};

/// Configuration of a linear-tape run: `left` and `right` of the head, which
/// sits between them next to `state`.
struct LinearConfig {
    Word left;
    StateId state;
    Word right;

    friend bool operator==(const LinearConfig&, const LinearConfig&) = default;
    friend auto operator<=>(const LinearConfig&, const LinearConfig&) = default;
};

using Configuration = std::variant<CircularConfig, LinearConfig>;

/// An accepting run. `moves[i]` connects `configurations[i]` to
/// `configurations[i+1]`; a disengaged move is the linear models' head-return
/// step, everything else is a rule application.
struct Trace {
    std::vector<Configuration> configurations;
    std::vector<std::optional<Rule>> moves;
};

/// Length-first ordering with per-position ranks taken from the alphabet's
/// declaration order. All canonical word lists use this collation.
class CanonicalLess {
public:
    explicit CanonicalLess(const std::vector<Symbol>& alphabet) {
        rank_.fill(-1);
        int r = 0;
        for (Symbol c : alphabet) rank_[static_cast<unsigned char>(c)] = r++;
    }

    bool operator()(const Word& lhs, const Word& rhs) const {
        if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            int rl = rank_[static_cast<unsigned char>(lhs[i])];
            int rr = rank_[static_cast<unsigned char>(rhs[i])];
            if (rl != rr) return rl < rr;
        }
        return false;
    }

private:
    std::array<int, 256> rank_;
};

}  // namespace owjump
