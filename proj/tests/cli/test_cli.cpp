// Command-level harness: runs the built binary and checks stdout bytes and
// exit codes against the documented contract.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "owjump/format.hpp"
#include "support/corpus.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(OWJUMP_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string corpus(const std::string& name) { return testsupport::corpus_path(name); }

}  // namespace

TEST_CASE("check: ACCEPT exits 0, REJECT exits 1, errors exit 2") {
    auto accept = run_cli("check -m grc -f " + corpus("lab.owja") + " -w aabb");
    CHECK(accept.exit_code == 0);
    CHECK(accept.output.rfind("ACCEPT\n", 0) == 0);
    CHECK(accept.output.find("visited=") != std::string::npos);

    auto reject = run_cli("check -m grc -f " + corpus("dyck_rule.owja") + " -w aabb");
    CHECK(reject.exit_code == 1);
    CHECK(reject.output.rfind("REJECT\n", 0) == 0);

    auto empty_word = run_cli("check -m grc -f " + corpus("dyck_rule.owja") + " -w @");
    CHECK(empty_word.exit_code == 0);

    CHECK(run_cli("check -m rowj -f " + corpus("lab.owja") + " -w ab").exit_code == 2);
    CHECK(run_cli("check -m grc -f /nonexistent.owja -w ab").exit_code == 2);
    CHECK(run_cli("check -m bogus -f " + corpus("lab.owja") + " -w ab").exit_code == 2);
    CHECK(run_cli("check -m grc -f " + corpus("lab.owja") + " -w abc").exit_code == 2);
}

TEST_CASE("errors are diagnosed on standard error") {
    auto quiet = run_cli("check -m rowj -f " + corpus("lab.owja") + " -w ab");
    CHECK(quiet.output.empty());
    auto loud = run_cli("check -m rowj -f " + corpus("lab.owja") + " -w ab", true);
    CHECK(loud.output.find("model mismatch") != std::string::npos);
}

TEST_CASE("enum: canonical lines, byte-stable across runs") {
    const std::string cmd = "enum -m grc -f " + corpus("shared_example.owja") + " -n 3";
    auto first = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.output == "ab\nbca\ncab\n");
    CHECK(run_cli(cmd).output == first.output);

    auto glc = run_cli("enum -m glc -f " + corpus("shared_example.owja") + " -n 3");
    CHECK(glc.output == "ab\nabc\nbca\n");

    auto equal_counts = run_cli("enum -m grc -f " + corpus("equal_counts.owja") + " -n 2");
    CHECK(equal_counts.output == "@\na\naa\nab\nba\n");
}

TEST_CASE("enum: empty language yields empty output, exit 0") {
    auto out = run_cli("enum -m glc -f " + corpus("lc.owja") + " -n 0");
    CHECK(out.exit_code == 0);
    CHECK(out.output.empty());
}

TEST_CASE("enum: json format is compact with fixed key order") {
    auto out = run_cli("enum -m grc -f " + corpus("shared_example.owja") + " -n 3 --format json");
    CHECK(out.exit_code == 0);
    CHECK(out.output == "{\"max_length\":3,\"words\":[\"ab\",\"bca\",\"cab\"]}\n");

    auto with_lambda =
        run_cli("enum -m grc -f " + corpus("equal_counts.owja") + " -n 1 --format json");
    CHECK(with_lambda.output == "{\"max_length\":1,\"words\":[\"@\",\"a\"]}\n");
}

TEST_CASE("enum: budget guard trips with exit 2") {
    CHECK(run_cli("enum -m grc -f " + corpus("shared_example.owja") + " -n 13").exit_code == 2);
    CHECK(run_cli("enum -m grc -f " + corpus("shared_example.owja") + " -n 2 --budget 3")
              .exit_code == 2);
}

TEST_CASE("trace: rendered steps and exit codes") {
    auto t = run_cli("trace -m grc -f " + corpus("lab.owja") + " -w ab");
    CHECK(t.exit_code == 0);
    CHECK(t.output == "q0|ab --(q0,ab,q1)--> q1|@\n");

    auto linear = run_cli("trace -m grl -f " + corpus("shared_example.owja") + " -w acb");
    CHECK(linear.exit_code == 0);
    CHECK(linear.output ==
          "@|q0|acb --(q0,c,q0)--> a|q0|b\n"
          "a|q0|b --RETURN--> @|q0|ab\n"
          "@|q0|ab --(q0,ab,q1)--> @|q1|@\n");

    auto rejected = run_cli("trace -m grc -f " + corpus("dyck_rule.owja") + " -w aabb");
    CHECK(rejected.exit_code == 1);
    CHECK(rejected.output == "REJECT\n");

    auto lambda = run_cli("trace -m grc -f " + corpus("lab.owja") + " -w @");
    CHECK(lambda.exit_code == 0);
    CHECK(lambda.output == "q0|@\n");
}

TEST_CASE("diff: exit 0 on empty, 1 on nonempty, sections in canonical order") {
    auto clean = run_cli("diff -m grl -f " + corpus("dyck_rule.owja") + " -o dyck -n 8");
    CHECK(clean.exit_code == 0);
    CHECK(clean.output == "max-length: 8\nmissing (0):\nextra (0):\n");

    auto broken = run_cli("diff -m grc -f " + corpus("dyck_rule.owja") + " -o dyck -n 6");
    CHECK(broken.exit_code == 1);
    CHECK(broken.output.find("missing (4):\n  aabb\n") != std::string::npos);

    auto equal_counts =
        run_cli("diff -m grc -f " + corpus("equal_counts.owja") + " -o equal-or-no-b -n 8");
    CHECK(equal_counts.exit_code == 0);

    CHECK(run_cli("diff -m grc -f " + corpus("lab.owja") + " -o nope -n 4").exit_code == 2);
    CHECK(run_cli("diff -m grc -f " + corpus("shared_example.owja") + " -o dyck -n 4")
              .exit_code == 2);
}

TEST_CASE("reverse and import-dfa write loadable automaton files") {
    const std::string rev_path = "/tmp/owjump_test_rev.owja";
    auto rev = run_cli("reverse -f " + corpus("lab.owja") + " -o " + rev_path);
    CHECK(rev.exit_code == 0);
    const owjump::Automaton reversed = owjump::load_automaton_file(rev_path);
    CHECK(reversed.target("q0", "ba") == owjump::StateId{"q1"});

    const std::string imp_path = "/tmp/owjump_test_parity.owja";
    auto imp = run_cli("import-dfa -f " + corpus("parity.dfa") + " -o " + imp_path);
    CHECK(imp.exit_code == 0);
    const owjump::Automaton imported = owjump::load_automaton_file(imp_path);
    CHECK(imported.rules().size() == 4);

    // the same automaton file is not a complete DFA
    CHECK(run_cli("import-dfa -f " + corpus("lab.owja") + " -o /tmp/owjump_bad.owja").exit_code ==
          2);
    std::remove(rev_path.c_str());
    std::remove(imp_path.c_str());
}

TEST_CASE("strict straddle flag can change acceptance") {
    // on bab the default reading may skip the leading b and delete ab; in
    // strict mode the ba occurrence crossing the skip boundary blocks that,
    // leaving only the dead ba branch
    std::ofstream f("/tmp/owjump_strict.owja");
    f << "alphabet: a b\nstart: q0\nfinal: q1\nrule: q0 ab -> q1\nrule: q0 ba -> q2\n"
      << "rule: q1 b -> q1\n";
    f.close();
    auto literal = run_cli("check -m grc -f /tmp/owjump_strict.owja -w bab");
    CHECK(literal.exit_code == 0);
    auto strict = run_cli("check -m grc -f /tmp/owjump_strict.owja -w bab --strict-straddle");
    CHECK(strict.exit_code == 1);
    std::remove("/tmp/owjump_strict.owja");
}
