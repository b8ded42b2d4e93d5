#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "owjump/engine.hpp"
#include "owjump/model.hpp"

namespace owjump {

/// A complete deterministic finite automaton: the transition function is
/// total over states x alphabet.
struct Dfa {
    std::vector<Symbol> alphabet;
    std::vector<StateId> states;
    StateId start;
    std::vector<StateId> finals;
    std::map<std::pair<StateId, Symbol>, StateId> delta;
};

/// Reads a DFA from the shared raw description: every rule must delete a
/// single symbol and every (state, symbol) pair must have exactly one rule.
inline Dfa validate_dfa(const RawAutomaton& raw) {
    const Automaton a = validate_automaton(raw);
    Dfa d{a.alphabet(), a.states(), a.start(), a.finals(), {}};
    for (const Rule& r : a.rules()) {
        if (r.word.size() != 1)
            fail(ErrorKind::incomplete_dfa,
                 "state " + r.source + " deletes '" + r.word + "', not a single symbol");
        d.delta[{r.source, r.word[0]}] = r.target;
    }
    for (const StateId& s : d.states)
        for (Symbol c : d.alphabet)
            if (!d.delta.count({s, c}))
                fail(ErrorKind::incomplete_dfa,
                     "state " + s + " has no transition on '" + std::string(1, c) + "'");
    return d;
}

/// Embeds a complete DFA as a letter-rule automaton: rule (p, a, delta(p, a))
/// for every state and symbol. With every symbol applicable everywhere the
/// one-way models can never skip, so each of them performs an uninterrupted
/// run in its own reading direction.
inline Automaton import_dfa(const Dfa& d) {
    RawAutomaton raw;
    raw.alphabet = d.alphabet;
    raw.start = d.start;
    raw.finals = d.finals;
    for (const StateId& s : d.states)
        for (Symbol c : d.alphabet)
            raw.rules.push_back({s, Word(1, c), d.delta.at({s, c})});
    return validate_automaton(raw);
}

/// Same states, start and finals; every rule deletes the reversed word.
/// The result is meant to run under the mirrored model, where it accepts
/// exactly the reversed language.
inline Automaton reverse_automaton(const Automaton& a) {
    RawAutomaton raw;
    raw.alphabet = a.alphabet();
    raw.start = a.start();
    raw.finals = a.finals();
    for (const Rule& r : a.rules())
        raw.rules.push_back({r.source, Word{r.word.rbegin(), r.word.rend()}, r.target});
    // reversal is injective on words, so revalidation can only fail on inputs
    // that were already invalid
    Automaton reversed = validate_automaton(raw);
    for (const StateId& s : a.states())
        if (!reversed.has_state(s)) fail(ErrorKind::unknown_state, "state set changed: " + s);
    return reversed;
}

inline ModelKind mirror(ModelKind m) {
    switch (m) {
        case ModelKind::rowj: return ModelKind::lowj;
        case ModelKind::lowj: return ModelKind::rowj;
        case ModelKind::grl: return ModelKind::gll;
        case ModelKind::gll: return ModelKind::grl;
        case ModelKind::grc: return ModelKind::glc;
        case ModelKind::glc: return ModelKind::grc;
        case ModelKind::gjfa: return ModelKind::gjfa;
    }
    return m;
}

namespace detail {

inline void canonicalize(LanguageSample& s) {
    const CanonicalLess less{s.alphabet};
    std::sort(s.words.begin(), s.words.end(), less);
    s.words.erase(std::unique(s.words.begin(), s.words.end()), s.words.end());
}

inline void require_same_alphabet(const LanguageSample& s1, const LanguageSample& s2) {
    if (s1.alphabet != s2.alphabet)
        fail(ErrorKind::alphabet_mismatch, "samples use different alphabets");
}

}  // namespace detail

/// Word-wise reversal; sound for the operand's own bound.
inline LanguageSample sample_reverse(const LanguageSample& s) {
    LanguageSample out{s.alphabet, s.max_length, {}};
    for (const Word& w : s.words) out.words.emplace_back(w.rbegin(), w.rend());
    detail::canonicalize(out);
    return out;
}

/// Set union, sound up to the smaller bound; longer words are dropped.
inline LanguageSample sample_union(const LanguageSample& s1, const LanguageSample& s2) {
    detail::require_same_alphabet(s1, s2);
    LanguageSample out{s1.alphabet, std::min(s1.max_length, s2.max_length), {}};
    for (const LanguageSample* s : {&s1, &s2})
        for (const Word& w : s->words)
            if (w.size() <= out.max_length) out.words.push_back(w);
    detail::canonicalize(out);
    return out;
}

/// Set intersection, sound up to the smaller bound.
inline LanguageSample sample_intersect(const LanguageSample& s1, const LanguageSample& s2) {
    detail::require_same_alphabet(s1, s2);
    LanguageSample out{s1.alphabet, std::min(s1.max_length, s2.max_length), {}};
    const std::set<Word> other(s2.words.begin(), s2.words.end());
    for (const Word& w : s1.words)
        if (w.size() <= out.max_length && other.count(w)) out.words.push_back(w);
    detail::canonicalize(out);
    return out;
}

/// Concatenation restricted to |uv| <= max_length. The requested bound must
/// not exceed either operand bound, otherwise factors could be missing.
inline LanguageSample sample_concat(const LanguageSample& s1, const LanguageSample& s2,
                                    std::size_t max_length) {
    detail::require_same_alphabet(s1, s2);
    if (max_length > s1.max_length || max_length > s2.max_length)
        fail(ErrorKind::bound_violation,
             "concatenation bound exceeds an operand bound; the result would not be exhaustive");
    LanguageSample out{s1.alphabet, max_length, {}};
    for (const Word& u : s1.words)
        for (const Word& v : s2.words)
            if (u.size() + v.size() <= max_length) out.words.push_back(u + v);
    detail::canonicalize(out);
    return out;
}

/// Kleene star restricted to the bound, computed by iterated concatenation
/// with the operand's nonempty words. The bound must not exceed the operand's.
inline LanguageSample sample_star(const LanguageSample& s, std::size_t max_length) {
    if (max_length > s.max_length)
        fail(ErrorKind::bound_violation,
             "star bound exceeds the operand bound; the result would not be exhaustive");
    LanguageSample out{s.alphabet, max_length, {Word{}}};
    std::set<Word> known(out.words.begin(), out.words.end());
    std::vector<Word> frontier = out.words;
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (const Word& f : s.words) {
                if (f.empty() || w.size() + f.size() > max_length) continue;
                Word joined = w + f;
                if (known.insert(joined).second) {
                    out.words.push_back(joined);
                    next.push_back(std::move(joined));
                }
            }
        frontier = std::move(next);
    }
    detail::canonicalize(out);
    return out;
}

}  // namespace owjump
