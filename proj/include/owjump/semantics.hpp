#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "owjump/model.hpp"

namespace owjump {

/// The side condition on the skipped part next to the deleted occurrence.
///  - rule_word_only: block only when an occurrence of the rule word itself
///    straddles the skip boundary (the definitional reading; default).
///  - any_rule_word: experimental stricter variant, block when any applicable
///    rule word straddles the boundary. Not used by the shipped reproductions.
enum class StraddleMode { rule_word_only, any_rule_word };

struct JumpOptions {
    StraddleMode straddle = StraddleMode::rule_word_only;
};

/// One successor of a configuration. A disengaged `rule` marks the linear
/// models' head-return move; every other step applies `rule`.
struct StepResult {
    Configuration successor;
    std::optional<Rule> rule;

    friend bool operator==(const StepResult&, const StepResult&) = default;
};

/// True iff no rule word of `p` occurs in `u` as a contiguous subword. The
/// part a one-way jump skips over must be clean in this sense.
inline bool is_skip_clean(const Automaton& a, const StateId& p, std::string_view u) {
    for (const Word& w : a.rule_words_of(p))
        if (u.find(w) != std::string_view::npos) return false;
    return true;
}

/// Right-hand boundary condition: no nonempty suffix u2 of `u` and nonempty
/// prefix x1 of `x` satisfy u2·x1 = x. Rules out choosing an occurrence of x
/// when another occurrence of x starts earlier, inside the skipped part.
inline bool is_straddle_free(std::string_view u, std::string_view x) {
    for (std::size_t s = 0; s < u.size(); ++s) {
        const std::size_t u2_len = u.size() - s;
        for (std::size_t x1_len = 1; x1_len <= x.size(); ++x1_len) {
            if (u2_len + x1_len != x.size()) continue;
            if (x.compare(0, u2_len, u.substr(s)) == 0 &&
                x.compare(u2_len, x1_len, x.substr(0, x1_len)) == 0)
                return false;
        }
    }
    return true;
}

/// Mirror condition for the left models: no nonempty suffix x2 of `x` and
/// nonempty prefix u1 of `u` satisfy x2·u1 = x.
inline bool is_straddle_free_left(std::string_view x, std::string_view u) {
    for (std::size_t s = 0; s < x.size(); ++s) {
        const std::size_t x2_len = x.size() - s;
        for (std::size_t u1_len = 1; u1_len <= u.size(); ++u1_len) {
            if (x2_len + u1_len != x.size()) continue;
            if (x.compare(0, x2_len, x.substr(s)) == 0 &&
                x.compare(x2_len, u1_len, u.substr(0, u1_len)) == 0)
                return false;
        }
    }
    return true;
}

namespace detail {

/// Strict-variant gate: true iff no rule word of `p` has an occurrence in
/// `region` crossing position `boundary`.
inline bool no_rule_word_crosses(const Automaton& a, const StateId& p, std::string_view region,
                                 std::size_t boundary) {
    for (const Word& w : a.rule_words_of(p)) {
        const std::size_t first = boundary >= w.size() ? boundary - w.size() + 1 : 0;
        for (std::size_t s = first; s < boundary; ++s) {
            if (s + w.size() <= boundary) continue;
            if (s + w.size() > region.size()) continue;
            if (region.compare(s, w.size(), w) == 0) return false;
        }
    }
    return true;
}

/// Gate for deleting x at [pos, pos+|x|) of `region` after skipping
/// region[0..pos) — right-scanning models.
inline bool straddle_allows_right(const Automaton& a, const StateId& p, std::string_view region,
                                  std::size_t pos, const Word& x, const JumpOptions& opts) {
    if (opts.straddle == StraddleMode::rule_word_only)
        return is_straddle_free(region.substr(0, pos), x);
    return no_rule_word_crosses(a, p, region, pos);
}

/// Gate for deleting x at [pos, pos+|x|) of `region` after skipping
/// region[pos+|x|..) — left-scanning models.
inline bool straddle_allows_left(const Automaton& a, const StateId& p, std::string_view region,
                                 std::size_t pos, const Word& x, const JumpOptions& opts) {
    if (opts.straddle == StraddleMode::rule_word_only)
        return is_straddle_free_left(x, region.substr(pos + x.size()));
    return no_rule_word_crosses(a, p, region, pos + x.size());
}

}  // namespace detail

/// Successors under the right circular jump: from tape u·x·v with rule
/// (p,x,q), provided u is skip-clean and no x-occurrence straddles the u/x
/// boundary, the tape rotates to v·u. Serves grc, and rowj through the
/// letter-rule restriction. Results are ordered by occurrence position, then
/// rule word.
inline std::vector<StepResult> circular_right_successors(const Automaton& a,
                                                         const CircularConfig& c,
                                                         const JumpOptions& opts = {}) {
    std::vector<StepResult> out;
    const std::string_view tape{c.tape};
    for (std::size_t pos = 0; pos <= tape.size(); ++pos) {
        if (!is_skip_clean(a, c.state, tape.substr(0, pos))) break;  // skipped part only grows
        for (const Word& x : a.rule_words_of(c.state)) {
            if (pos + x.size() > tape.size()) continue;
            if (tape.compare(pos, x.size(), x) != 0) continue;
            if (!detail::straddle_allows_right(a, c.state, tape, pos, x, opts)) continue;
            Word next{tape.substr(pos + x.size())};
            next += tape.substr(0, pos);  // v·u
            out.push_back({CircularConfig{*a.target(c.state, x), std::move(next)},
                           Rule{c.state, x, *a.target(c.state, x)}});
        }
    }
    return out;
}

/// Mirror image of circular_right_successors: the head sits at the right end,
/// the skipped part u is a suffix, and tape v·x·u becomes u·v. Serves glc, and
/// lowj through the letter-rule restriction. Results ordered head-nearest
/// occurrence first.
inline std::vector<StepResult> circular_left_successors(const Automaton& a,
                                                        const CircularConfig& c,
                                                        const JumpOptions& opts = {}) {
    std::vector<StepResult> out;
    const std::string_view tape{c.tape};
    for (std::size_t end = tape.size(); /* end >= 0 */; --end) {
        if (!is_skip_clean(a, c.state, tape.substr(end))) break;
        for (const Word& x : a.rule_words_of(c.state)) {
            if (x.size() > end) continue;
            const std::size_t pos = end - x.size();
            if (tape.compare(pos, x.size(), x) != 0) continue;
            if (!detail::straddle_allows_left(a, c.state, tape, pos, x, opts)) continue;
            Word next{tape.substr(end)};
            next += tape.substr(0, pos);  // u·v
            out.push_back({CircularConfig{*a.target(c.state, x), std::move(next)},
                           Rule{c.state, x, *a.target(c.state, x)}});
        }
        if (end == 0) break;
    }
    return out;
}

/// Successors under the right linear jump. Delete moves consume x from the
/// right part, appending the skipped prefix to the consumed left part; the
/// head-return move (emitted last, with no rule) rewinds the head when the
/// right part holds no applicable word and the left part is nonempty.
inline std::vector<StepResult> linear_right_successors(const Automaton& a, const LinearConfig& c,
                                                       const JumpOptions& opts = {}) {
    std::vector<StepResult> out;
    const std::string_view right{c.right};
    for (std::size_t pos = 0; pos <= right.size(); ++pos) {
        if (!is_skip_clean(a, c.state, right.substr(0, pos))) break;
        for (const Word& x : a.rule_words_of(c.state)) {
            if (pos + x.size() > right.size()) continue;
            if (right.compare(pos, x.size(), x) != 0) continue;
            if (!detail::straddle_allows_right(a, c.state, right, pos, x, opts)) continue;
            Word left = c.left;
            left += right.substr(0, pos);  // t·u
            out.push_back({LinearConfig{std::move(left), *a.target(c.state, x),
                                        Word{right.substr(pos + x.size())}},
                           Rule{c.state, x, *a.target(c.state, x)}});
        }
    }
    if (!c.left.empty() && is_skip_clean(a, c.state, c.right))
        out.push_back({LinearConfig{Word{}, c.state, c.left + c.right}, std::nullopt});
    return out;
}

/// Mirror image of linear_right_successors: delete moves consume x from the
/// left part scanning right-to-left; the head-return move sends the head back
/// to the rightmost end.
inline std::vector<StepResult> linear_left_successors(const Automaton& a, const LinearConfig& c,
                                                      const JumpOptions& opts = {}) {
    std::vector<StepResult> out;
    const std::string_view left{c.left};
    for (std::size_t end = left.size(); /* end >= 0 */; --end) {
        if (!is_skip_clean(a, c.state, left.substr(end))) break;
        for (const Word& x : a.rule_words_of(c.state)) {
            if (x.size() > end) continue;
            const std::size_t pos = end - x.size();
            if (left.compare(pos, x.size(), x) != 0) continue;
            if (!detail::straddle_allows_left(a, c.state, left, pos, x, opts)) continue;
            Word next_right{left.substr(end)};
            next_right += c.right;  // u·t
            out.push_back({LinearConfig{Word{left.substr(0, pos)}, *a.target(c.state, x),
                                        std::move(next_right)},
                           Rule{c.state, x, *a.target(c.state, x)}});
        }
        if (end == 0) break;
    }
    if (!c.right.empty() && is_skip_clean(a, c.state, c.left))
        out.push_back({LinearConfig{c.left + c.right, c.state, Word{}}, std::nullopt});
    return out;
}

/// Jumping baseline: delete any occurrence of any rule word anywhere; no
/// skip-cleanliness, no straddle condition, no rotation. Duplicate
/// (successor, rule) pairs from distinct occurrences collapse.
inline std::vector<StepResult> gjfa_successors(const Automaton& a, const CircularConfig& c,
                                               const JumpOptions& = {}) {
    std::vector<StepResult> out;
    const std::string_view tape{c.tape};
    for (std::size_t pos = 0; pos <= tape.size(); ++pos) {
        for (const Word& x : a.rule_words_of(c.state)) {
            if (pos + x.size() > tape.size()) continue;
            if (tape.compare(pos, x.size(), x) != 0) continue;
            Word next{tape.substr(0, pos)};
            next += tape.substr(pos + x.size());  // u·v
            StepResult step{CircularConfig{*a.target(c.state, x), std::move(next)},
                            Rule{c.state, x, *a.target(c.state, x)}};
            if (std::find(out.begin(), out.end(), step) == out.end()) out.push_back(step);
        }
    }
    return out;
}

inline Configuration initial_configuration(const Automaton& a, ModelKind m, const Word& w) {
    if (m == ModelKind::grl) return LinearConfig{Word{}, a.start(), w};
    if (m == ModelKind::gll) return LinearConfig{w, a.start(), Word{}};
    return CircularConfig{a.start(), w};
}

/// Accepting means: all tape parts consumed and the state is final.
inline bool is_accepting(const Automaton& a, const Configuration& c) {
    if (const auto* cc = std::get_if<CircularConfig>(&c))
        return cc->tape.empty() && a.is_final(cc->state);
    const auto& lc = std::get<LinearConfig>(c);
    return lc.left.empty() && lc.right.empty() && a.is_final(lc.state);
}

/// Dispatches to the step relation of `m`. The configuration kind must match
/// the model (circular for rowj/lowj/grc/glc/gjfa, linear for grl/gll).
inline std::vector<StepResult> successors(const Automaton& a, ModelKind m, const Configuration& c,
                                          const JumpOptions& opts = {}) {
    switch (m) {
        case ModelKind::rowj:
        case ModelKind::grc:
            return circular_right_successors(a, std::get<CircularConfig>(c), opts);
        case ModelKind::lowj:
        case ModelKind::glc:
            return circular_left_successors(a, std::get<CircularConfig>(c), opts);
        case ModelKind::grl:
            return linear_right_successors(a, std::get<LinearConfig>(c), opts);
        case ModelKind::gll:
            return linear_left_successors(a, std::get<LinearConfig>(c), opts);
        case ModelKind::gjfa:
            return gjfa_successors(a, std::get<CircularConfig>(c), opts);
    }
    return {};
}

}  // namespace owjump
