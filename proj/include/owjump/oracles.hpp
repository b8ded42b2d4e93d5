#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "owjump/engine.hpp"
#include "owjump/model.hpp"

namespace owjump {

/// A closed-form membership decision procedure standing in for a language.
/// Predicates are plain functions over words — no automata behind them — so
/// differential runs never test the engine against itself.
struct OraclePredicate {
    std::string name;
    std::vector<Symbol> alphabet;
    std::function<bool(const Word&)> membership;
};

namespace detail {

/// One maximal run of a single symbol, with an occurrence-count interval.
struct Run {
    Symbol sym;
    std::size_t min;
    std::size_t max;  // SIZE_MAX = unbounded
};

inline constexpr std::size_t many = static_cast<std::size_t>(-1);

/// Matches words shaped like c^l a c^m b c^n. Adjacent runs must use distinct
/// symbols, which holds for every pattern registered below.
inline bool matches_runs(std::string_view w, std::initializer_list<Run> runs) {
    std::size_t pos = 0;
    for (const Run& run : runs) {
        std::size_t count = 0;
        while (pos + count < w.size() && w[pos + count] == run.sym) ++count;
        if (count < run.min || count > run.max) return false;
        pos += count;
    }
    return pos == w.size();
}

inline bool dyck_membership(std::string_view w) {
    long balance = 0;
    for (char c : w) {
        balance += (c == 'a') ? 1 : -1;
        if (balance < 0) return false;
    }
    return balance == 0;
}

inline bool equal_or_no_b_membership(std::string_view w) {
    const auto as = std::count(w.begin(), w.end(), 'a');
    const auto bs = std::count(w.begin(), w.end(), 'b');
    return as == bs || bs == 0;
}

inline bool anbn_membership(std::string_view w) {
    std::size_t as = 0;
    while (as < w.size() && w[as] == 'a') ++as;
    std::size_t bs = 0;
    while (as + bs < w.size() && w[as + bs] == 'b') ++bs;
    return as + bs == w.size() && as == bs;
}

}  // namespace detail

/// The registry of named languages. Each entry is a direct decision
/// procedure over its alphabet:
///   dyck           balanced a/b strings, a opening
///   equal-or-no-b  |w|_a = |w|_b or |w|_b = 0
///   anbn           { a^n b^n : n >= 0 }
///   rowj-example   { a b^m c } u { b^l c a b^n }
///   grl-example    { c^l a b } u { c^l a c^m b c^n : m >= 1 }
///   gll-example    { a b c^n } u { c^l a c^m b c^n : m >= 1 }
///   grc-example    { c^l a b } u { c^l a c^m b c^n : m,n >= 1 } u { c^l b c^m a : m >= 1 }
///   glc-example    { a b c^n } u { c^l a c^m b c^n : l,m >= 1 } u { b c^m a c^n : m >= 1 }
///   gjfa-example   { c^l a c^m b c^n }
///   jfa-note       { b^l a b^m c b^n } u { b^l c b^m a b^n }
inline const std::vector<OraclePredicate>& oracle_registry() {
    using detail::many;
    using detail::matches_runs;
    using detail::Run;
    static const std::vector<OraclePredicate> registry = {
        {"dyck", {'a', 'b'}, [](const Word& w) { return detail::dyck_membership(w); }},
        {"equal-or-no-b",
         {'a', 'b'},
         [](const Word& w) { return detail::equal_or_no_b_membership(w); }},
        {"anbn", {'a', 'b'}, [](const Word& w) { return detail::anbn_membership(w); }},
        {"rowj-example", {'a', 'b', 'c'},
         [](const Word& w) {
             return matches_runs(w, {Run{'a', 1, 1}, Run{'b', 0, many}, Run{'c', 1, 1}}) ||
                    matches_runs(w, {Run{'b', 0, many}, Run{'c', 1, 1}, Run{'a', 1, 1},
                                     Run{'b', 0, many}});
         }},
        {"grl-example", {'a', 'b', 'c'},
         [](const Word& w) {
             return matches_runs(w, {Run{'c', 0, many}, Run{'a', 1, 1}, Run{'b', 1, 1}}) ||
                    matches_runs(w, {Run{'c', 0, many}, Run{'a', 1, 1}, Run{'c', 1, many},
                                     Run{'b', 1, 1}, Run{'c', 0, many}});
         }},
        {"gll-example", {'a', 'b', 'c'},
         [](const Word& w) {
             return matches_runs(w, {Run{'a', 1, 1}, Run{'b', 1, 1}, Run{'c', 0, many}}) ||
                    matches_runs(w, {Run{'c', 0, many}, Run{'a', 1, 1}, Run{'c', 1, many},
                                     Run{'b', 1, 1}, Run{'c', 0, many}});
         }},
        {"grc-example", {'a', 'b', 'c'},
         [](const Word& w) {
             return matches_runs(w, {Run{'c', 0, many}, Run{'a', 1, 1}, Run{'b', 1, 1}}) ||
                    matches_runs(w, {Run{'c', 0, many}, Run{'a', 1, 1}, Run{'c', 1, many},
                                     Run{'b', 1, 1}, Run{'c', 1, many}}) ||
                    matches_runs(w, {Run{'c', 0, many}, Run{'b', 1, 1}, Run{'c', 1, many},
                                     Run{'a', 1, 1}});
         }},
        {"glc-example", {'a', 'b', 'c'},
         [](const Word& w) {
             return matches_runs(w, {Run{'a', 1, 1}, Run{'b', 1, 1}, Run{'c', 0, many}}) ||
                    matches_runs(w, {Run{'c', 1, many}, Run{'a', 1, 1}, Run{'c', 1, many},
                                     Run{'b', 1, 1}, Run{'c', 0, many}}) ||
                    matches_runs(w, {Run{'b', 1, 1}, Run{'c', 1, many}, Run{'a', 1, 1},
                                     Run{'c', 0, many}});
         }},
        {"gjfa-example", {'a', 'b', 'c'},
         [](const Word& w) {
             return matches_runs(w, {Run{'c', 0, many}, Run{'a', 1, 1}, Run{'c', 0, many},
                                     Run{'b', 1, 1}, Run{'c', 0, many}});
         }},
        {"jfa-note", {'a', 'b', 'c'},
         [](const Word& w) {
             return matches_runs(w, {Run{'b', 0, many}, Run{'a', 1, 1}, Run{'b', 0, many},
                                     Run{'c', 1, 1}, Run{'b', 0, many}}) ||
                    matches_runs(w, {Run{'b', 0, many}, Run{'c', 1, 1}, Run{'b', 0, many},
                                     Run{'a', 1, 1}, Run{'b', 0, many}});
         }},
    };
    return registry;
}

inline std::vector<std::string> oracle_names() {
    std::vector<std::string> names;
    for (const OraclePredicate& p : oracle_registry()) names.push_back(p.name);
    return names;
}

inline const OraclePredicate& oracle(const std::string& name) {
    for (const OraclePredicate& p : oracle_registry())
        if (p.name == name) return p;
    fail(ErrorKind::unknown_oracle, "no oracle named '" + name + "'");
}

/// All alphabet words of length <= max_length satisfying the predicate, in
/// canonical order.
inline LanguageSample predicate_sample(const OraclePredicate& p, std::size_t max_length,
                                       std::size_t budget = default_word_budget) {
    LanguageSample sample{p.alphabet, max_length, {}};
    for_each_word(p.alphabet, max_length, budget, [&](const Word& w) {
        if (p.membership(w)) sample.words.push_back(w);
    });
    return sample;
}

/// Disagreements between an automaton's bounded language and a predicate's.
struct DiffReport {
    std::size_t max_length = 0;
    std::vector<Word> missing;  // accepted by the predicate, not by the automaton
    std::vector<Word> extra;    // accepted by the automaton, not by the predicate
    bool empty() const { return missing.empty() && extra.empty(); }
};

inline DiffReport diff_sample(const Automaton& a, ModelKind m, const OraclePredicate& p,
                              std::size_t max_length, const JumpOptions& opts = {},
                              std::size_t budget = default_word_budget) {
    if (a.alphabet() != p.alphabet)
        fail(ErrorKind::alphabet_mismatch,
             "automaton and oracle '" + p.name + "' use different alphabets");
    const LanguageSample have = enumerate_language(a, m, max_length, opts, budget);
    const LanguageSample want = predicate_sample(p, max_length, budget);
    DiffReport report;
    report.max_length = max_length;
    const CanonicalLess less{a.alphabet()};
    std::set_difference(want.words.begin(), want.words.end(), have.words.begin(),
                        have.words.end(), std::back_inserter(report.missing), less);
    std::set_difference(have.words.begin(), have.words.end(), want.words.begin(),
                        want.words.end(), std::back_inserter(report.extra), less);
    return report;
}

}  // namespace owjump
