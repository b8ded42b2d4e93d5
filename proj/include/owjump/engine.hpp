#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "owjump/model.hpp"
#include "owjump/semantics.hpp"

namespace owjump {

struct SearchStats {
    std::size_t configurations_visited = 0;
    std::size_t max_frontier = 0;
    bool accepted = false;
};

/// A finite, length-bounded slice of a language: duplicate-free words sorted
/// length-first, then lexicographically by the alphabet's declaration order.
/// `max_length` is the bound up to which the slice is exhaustive.
struct LanguageSample {
    std::vector<Symbol> alphabet;
    std::size_t max_length = 0;
    std::vector<Word> words;

    friend bool operator==(const LanguageSample&, const LanguageSample&) = default;
};

inline constexpr std::size_t default_word_budget = 2'000'000;

namespace detail {

inline std::size_t saturating_candidate_count(std::size_t alphabet_size, std::size_t max_length) {
    const std::size_t cap = std::numeric_limits<std::size_t>::max();
    std::size_t total = 0, layer = 1;
    for (std::size_t len = 0; len <= max_length; ++len) {
        if (total > cap - layer) return cap;
        total += layer;
        if (alphabet_size != 0 && layer > cap / alphabet_size) return cap;
        layer *= alphabet_size;
    }
    return total;
}

}  // namespace detail

/// Visits every word over `alphabet` of length <= max_length in canonical
/// order. Throws when the candidate count exceeds `budget`.
template <typename Fn>
void for_each_word(const std::vector<Symbol>& alphabet, std::size_t max_length, std::size_t budget,
                   Fn&& fn) {
    const std::size_t count = detail::saturating_candidate_count(alphabet.size(), max_length);
    if (count > budget)
        fail(ErrorKind::budget_exceeded, std::to_string(count) + " candidate words exceed the " +
                                             std::to_string(budget) + "-word budget");
    Word w;
    for (std::size_t len = 0; len <= max_length; ++len) {
        std::vector<std::size_t> digits(len, 0);
        while (true) {
            w.clear();
            for (std::size_t d : digits) w.push_back(alphabet[d]);
            fn(static_cast<const Word&>(w));
            std::size_t i = len;
            while (i > 0 && digits[i - 1] + 1 == alphabet.size()) digits[--i] = 0;
            if (i == 0) break;
            ++digits[i - 1];
        }
        if (alphabet.empty()) break;
    }
}

/// Breadth-first search of the configuration graph. Terminates because delete
/// moves strictly shrink the tape and the head-return move cannot fire twice
/// in a row; the visited set also cuts re-expansion.
inline SearchStats accepts_with_stats(const Automaton& a, ModelKind m, const Word& w,
                                      const JumpOptions& opts = {}) {
    check_model_compatibility(a, m);
    if (!a.word_over_alphabet(w))
        fail(ErrorKind::word_over_alphabet, "'" + w + "' uses symbols outside the alphabet");

    SearchStats stats;
    std::deque<Configuration> frontier;
    std::set<Configuration> seen;
    Configuration init = initial_configuration(a, m, w);
    frontier.push_back(init);
    seen.insert(init);
    stats.max_frontier = 1;

    while (!frontier.empty()) {
        Configuration current = frontier.front();
        frontier.pop_front();
        ++stats.configurations_visited;
        if (is_accepting(a, current)) {
            stats.accepted = true;
            break;
        }
        for (StepResult& step : successors(a, m, current, opts))
            if (seen.insert(step.successor).second) frontier.push_back(std::move(step.successor));
        stats.max_frontier = std::max(stats.max_frontier, frontier.size());
    }
    return stats;
}

inline bool accepts(const Automaton& a, ModelKind m, const Word& w, const JumpOptions& opts = {}) {
    return accepts_with_stats(a, m, w, opts).accepted;
}

/// One accepting run, chosen deterministically: depth-first, successors in
/// the order the step relations emit them (occurrence nearest the head first,
/// then rule word, head-return move last). Disengaged when `w` is rejected.
inline std::optional<Trace> trace(const Automaton& a, ModelKind m, const Word& w,
                                  const JumpOptions& opts = {}) {
    check_model_compatibility(a, m);
    if (!a.word_over_alphabet(w))
        fail(ErrorKind::word_over_alphabet, "'" + w + "' uses symbols outside the alphabet");

    Trace t;
    std::set<Configuration> dead;
    std::function<bool(const Configuration&)> dfs = [&](const Configuration& current) {
        if (is_accepting(a, current)) return true;
        if (dead.count(current)) return false;
        for (StepResult& step : successors(a, m, current, opts)) {
            t.configurations.push_back(step.successor);
            t.moves.push_back(step.rule);
            if (dfs(step.successor)) return true;
            t.configurations.pop_back();
            t.moves.pop_back();
        }
        dead.insert(current);
        return false;
    };

    Configuration init = initial_configuration(a, m, w);
    t.configurations.push_back(init);
    if (!dfs(init)) return std::nullopt;
    return t;
}

/// Exactly { w : |w| <= max_length, accepts(a, m, w) } in canonical order.
/// Candidate words are generated from the alphabet, never from the automaton,
/// so the result is trivially exhaustive for the bound.
inline LanguageSample enumerate_language(const Automaton& a, ModelKind m, std::size_t max_length,
                                         const JumpOptions& opts = {},
                                         std::size_t budget = default_word_budget) {
    check_model_compatibility(a, m);
    LanguageSample sample{a.alphabet(), max_length, {}};
    for_each_word(a.alphabet(), max_length, budget, [&](const Word& w) {
        if (accepts(a, m, w, opts)) sample.words.push_back(w);
    });
    return sample;
}

/// Every configuration reachable from the initial one. Debugging aid for
/// non-membership arguments.
inline std::set<Configuration> reachable_configurations(const Automaton& a, ModelKind m,
                                                        const Word& w,
                                                        const JumpOptions& opts = {}) {
    check_model_compatibility(a, m);
    if (!a.word_over_alphabet(w))
        fail(ErrorKind::word_over_alphabet, "'" + w + "' uses symbols outside the alphabet");

    std::set<Configuration> seen;
    std::deque<Configuration> frontier;
    frontier.push_back(initial_configuration(a, m, w));
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        Configuration current = frontier.front();
        frontier.pop_front();
        for (StepResult& step : successors(a, m, current, opts))
            if (seen.insert(step.successor).second) frontier.push_back(std::move(step.successor));
    }
    return seen;
}

}  // namespace owjump
