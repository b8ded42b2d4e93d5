// Command-line front end for the one-way jumping automata library.
//
// Subcommands: check, enum, trace, diff, reverse, import-dfa.
// Exit codes: 0 success (ACCEPT / empty diff), 1 REJECT / nonempty diff,
// 2 any error (parse, validation, compatibility, io).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "owjump/owjump.hpp"

namespace {

using namespace owjump;

// The empty word is spelled @ on the command line and in every output.
std::string display(const Word& w) { return w.empty() ? "@" : w; }

Word parse_word(const std::string& arg) { return arg == "@" ? Word{} : arg; }

std::string render(const Configuration& c) {
    if (const auto* cc = std::get_if<CircularConfig>(&c))
        return cc->state + "|" + display(cc->tape);
    const auto& lc = std::get<LinearConfig>(c);
    return display(lc.left) + "|" + lc.state + "|" + display(lc.right);
}

std::string render(const std::optional<Rule>& move) {
    if (!move) return "RETURN";
    return "(" + move->source + "," + move->word + "," + move->target + ")";
}

struct CommonArgs {
    std::string model;
    std::string file;
    bool strict_straddle = false;

    ModelKind model_kind() const {
        auto m = model_from_string(model);
        if (!m) fail(ErrorKind::parse_error, "unknown model '" + model + "'");
        return *m;
    }

    JumpOptions options() const {
        JumpOptions opts;
        if (strict_straddle) opts.straddle = StraddleMode::any_rule_word;
        return opts;
    }

    Automaton automaton() const { return load_automaton_file(file); }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_model = true) {
    if (with_model)
        cmd->add_option("-m,--model", args.model, "model: rowj lowj grl gll grc glc gjfa")
            ->required();
    cmd->add_option("-f,--file", args.file, "automaton file")->required();
    if (with_model)
        cmd->add_flag("--strict-straddle", args.strict_straddle,
                      "experimental: also block jumps when another applicable rule word "
                      "straddles the skip boundary");
}

int run_check(const CommonArgs& args, const std::string& word) {
    const Automaton a = args.automaton();
    const SearchStats stats =
        accepts_with_stats(a, args.model_kind(), parse_word(word), args.options());
    std::cout << (stats.accepted ? "ACCEPT" : "REJECT") << "\n"
              << "visited=" << stats.configurations_visited
              << " max-frontier=" << stats.max_frontier << "\n";
    return stats.accepted ? 0 : 1;
}

int run_enum(const CommonArgs& args, std::size_t max_len, const std::string& format,
             std::size_t budget) {
    const Automaton a = args.automaton();
    const LanguageSample sample =
        enumerate_language(a, args.model_kind(), max_len, args.options(), budget);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["max_length"] = sample.max_length;
        auto words = nlohmann::ordered_json::array();
        for (const Word& w : sample.words) words.push_back(display(w));
        j["words"] = std::move(words);
        std::cout << j.dump() << "\n";
    } else {
        for (const Word& w : sample.words) std::cout << display(w) << "\n";
    }
    return 0;
}

int run_trace(const CommonArgs& args, const std::string& word) {
    const Automaton a = args.automaton();
    const ModelKind m = args.model_kind();
    const auto t = trace(a, m, parse_word(word), args.options());
    if (!t) {
        std::cout << "REJECT\n";
        return 1;
    }
    if (t->moves.empty()) {
        std::cout << render(t->configurations.front()) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < t->moves.size(); ++i)
        std::cout << render(t->configurations[i]) << " --" << render(t->moves[i]) << "--> "
                  << render(t->configurations[i + 1]) << "\n";
    return 0;
}

int run_diff(const CommonArgs& args, const std::string& oracle_name, std::size_t max_len,
             std::size_t budget) {
    const Automaton a = args.automaton();
    const DiffReport report =
        diff_sample(a, args.model_kind(), oracle(oracle_name), max_len, args.options(), budget);
    std::cout << "max-length: " << report.max_length << "\n";
    std::cout << "missing (" << report.missing.size() << "):\n";
    for (const Word& w : report.missing) std::cout << "  " << display(w) << "\n";
    std::cout << "extra (" << report.extra.size() << "):\n";
    for (const Word& w : report.extra) std::cout << "  " << display(w) << "\n";
    return report.empty() ? 0 : 1;
}

void write_automaton(const Automaton& a, const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) fail(ErrorKind::parse_error, "cannot write '" + out_path + "'");
    out << serialize_automaton(a);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-way jumping finite automata: membership, traces, enumeration, diffing"};
    app.require_subcommand(1);

    CommonArgs check_args, enum_args, trace_args, diff_args, reverse_args, import_args;
    std::string check_word, trace_word, diff_oracle, enum_format = "lines";
    std::size_t enum_len = 0, diff_len = 0;
    std::size_t enum_budget = owjump::default_word_budget;
    std::size_t diff_budget = owjump::default_word_budget;
    std::string out_path;

    CLI::App* check = app.add_subcommand("check", "decide membership of one word");
    add_common(check, check_args);
    check->add_option("-w,--word", check_word, "input word (@ for the empty word)")->required();

    CLI::App* enumerate = app.add_subcommand("enum", "list all accepted words up to a length");
    add_common(enumerate, enum_args);
    enumerate->add_option("-n,--max-len", enum_len, "length bound")->required();
    enumerate->add_option("--format", enum_format, "lines (default) or json")
        ->check(CLI::IsMember({"lines", "json"}));
    enumerate->add_option("--budget", enum_budget, "candidate word guard");

    CLI::App* tr = app.add_subcommand("trace", "print one accepting run");
    add_common(tr, trace_args);
    tr->add_option("-w,--word", trace_word, "input word (@ for the empty word)")->required();

    CLI::App* diff = app.add_subcommand("diff", "compare against a named oracle language");
    add_common(diff, diff_args);
    diff->add_option("-o,--oracle", diff_oracle, "oracle name (see README)")->required();
    diff->add_option("-n,--max-len", diff_len, "length bound")->required();
    diff->add_option("--budget", diff_budget, "candidate word guard");

    CLI::App* reverse = app.add_subcommand("reverse", "write the rule-word-reversed automaton");
    add_common(reverse, reverse_args, /*with_model=*/false);
    reverse->add_option("-o,--output", out_path, "output automaton file")->required();

    CLI::App* import =
        app.add_subcommand("import-dfa", "embed a complete DFA as a letter-rule automaton");
    add_common(import, import_args, /*with_model=*/false);
    import->add_option("-o,--output", out_path, "output automaton file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(check)) return run_check(check_args, check_word);
        if (app.got_subcommand(enumerate))
            return run_enum(enum_args, enum_len, enum_format, enum_budget);
        if (app.got_subcommand(tr)) return run_trace(trace_args, trace_word);
        if (app.got_subcommand(diff)) return run_diff(diff_args, diff_oracle, diff_len, diff_budget);
        if (app.got_subcommand(reverse)) {
            write_automaton(owjump::reverse_automaton(reverse_args.automaton()), out_path);
            return 0;
        }
        if (app.got_subcommand(import)) {
            const owjump::RawAutomaton raw = owjump::parse_automaton_file(import_args.file);
            write_automaton(owjump::import_dfa(owjump::validate_dfa(raw)), out_path);
            return 0;
        }
    } catch (const owjump::Error& e) {
        std::cerr << "owjump: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "owjump: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
