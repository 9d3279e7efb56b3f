// End-to-end tests that spawn the actual command line binary and check
// bytes and exit codes. PERMKIT_CLI_PATH is injected by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const std::filesystem::path err_path =
        std::filesystem::temp_directory_path() /
        ("permkit_cli_err_" + std::to_string(::getpid()) + ".txt");
    const std::string command =
        std::string(PERMKIT_CLI_PATH) + " " + args + " 2>" + err_path.string();

    RunResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.out.append(buffer, got);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    std::ifstream err_file(err_path);
    std::stringstream err_text;
    err_text << err_file.rdbuf();
    result.err = err_text.str();
    std::filesystem::remove(err_path);
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

// Expect success and return stdout with the trailing newline removed.
std::string ok(const std::string& args) {
    const RunResult result = run_cli(args);
    CAPTURE(args);
    CAPTURE(result.err);
    REQUIRE(result.exit_code == 0);
    REQUIRE(!result.out.empty());
    REQUIRE(result.out.back() == '\n');
    return result.out.substr(0, result.out.size() - 1);
}

const std::string kSquare =
    "--gen '(0 2)(3 5)(6 8)' --gen '(0 6)(1 7)(2 8)' --gen '(1 3)(2 6)(5 7)'";
const std::string kS4 = "--gen '(0 1 2 3)' --gen '(0 1)'";

}  // namespace

TEST_CASE("perm compose applies the right factor first") {
    CHECK(ok("perm compose '(0 1)' '(1 2)'") == "(0 1 2)");
    CHECK(ok("perm compose '(1 2)' '(0 1)'") == "(0 2 1)");
    CHECK(ok("perm compose '(0 1)' '(1 2)' '(2 3)'") == "(0 1 2 3)");
    CHECK(ok("perm compose '()' '()'") == "()");
}

TEST_CASE("perm inverse, power, order") {
    CHECK(ok("perm inverse '(0 1 2)'") == "(0 2 1)");
    CHECK(ok("perm power '(0 1 2 3)' 1234567890") == "(0 2)(1 3)");
    CHECK(ok("perm power '(0 1 2 3)' -1") == "(0 3 2 1)");
    CHECK(ok("perm power '(0 1 2)' 0") == "()");
    CHECK(ok("perm order '(0 1 2)(3 4)'") == "6");
    CHECK(ok("perm order '()'") == "1");
}

TEST_CASE("perm parity, sign, cycles, array, commutator") {
    CHECK(ok("perm parity '(0 1)'") == "1");
    CHECK(ok("perm parity '(0 1 2)'") == "0");
    CHECK(ok("perm sign '(0 1)'") == "-1");
    CHECK(ok("perm sign '()'") == "1");
    CHECK(ok("perm cycles '(2 0 1)(7)'") == "(0 1 2)");
    CHECK(ok("perm array '(1 2)' --size 4") == "0 2 1 3");
    CHECK(ok("perm array '(1 2)'") == "0 2 1");
    CHECK(ok("perm commutator '(0 1)' '(1 2)'") == "(0 2 1)");
}

TEST_CASE("perm random is reproducible and reports its seed") {
    const std::string first = ok("perm random --size 8 --seed 31415");
    const std::string second = ok("perm random --size 8 --seed 31415");
    CHECK(first == second);
    CHECK(first.front() == '(');

    // Without a seed the perm goes to stdout and the seed to stderr, so
    // the run can be replayed.
    const RunResult fresh = run_cli("perm random --size 8");
    REQUIRE(fresh.exit_code == 0);
    REQUIRE(fresh.err.rfind("seed: ", 0) == 0);
    const std::string seed = fresh.err.substr(6, fresh.err.find('\n') - 6);
    CHECK(ok("perm random --size 8 --seed " + seed) + "\n" == fresh.out);

    const json replay = json::parse(ok("perm random --size 8 --seed " + seed + " --output json"));
    CHECK(replay["seed"] == std::stoull(seed));
    CHECK(replay["cycles"] == fresh.out.substr(0, fresh.out.size() - 1));
}

TEST_CASE("rank and unrank golden values") {
    CHECK(ok("rank '(1 2)' --algo lex --size 4") == "2");
    CHECK(ok("rank '(1 2)' --algo lex --size 5") == "6");
    CHECK(ok("rank '(1 2)' --algo mr --size 5") == "99");
    CHECK(ok("unrank 20 --algo lex --size 4") == "(0 3 2)");
    CHECK(ok("unrank 20 --algo lex --size 5") == "(1 4 3)");
    CHECK(ok("unrank 20 --algo mr --size 5") == "(0 2 1 3 4)");
    CHECK(ok("invvec '(1 2)' --size 4") == "0 1 0 0");
}

TEST_CASE("ranks beyond 64 bits round trip through text") {
    // 20! - 1 is the largest valid rank for size 20.
    const std::string top = "2432902008176639999";
    const std::string perm = ok("unrank " + top + " --algo lex --size 20");
    CHECK(ok("rank '" + perm + "' --algo lex --size 20") == top);

    // 25! needs 84 bits; make sure nothing truncates on the way through.
    const std::string huge = "15511210043330985983999999";  // 25! - 1
    const std::string mr_perm = ok("unrank " + huge + " --algo mr --size 25");
    CHECK(ok("rank '" + mr_perm + "' --algo mr --size 25") == huge);
    const json payload = json::parse(ok("rank '" + mr_perm + "' --algo mr --size 25 --output json"));
    CHECK(payload["rank"] == huge);
}

TEST_CASE("group order, elements, is-abelian") {
    CHECK(ok("group order " + kS4) == "24");
    CHECK(ok("group order --gen '(0 1 2)'") == "3");

    const auto elements = lines_of(ok("group elements --gen '(0 1 2)'"));
    CHECK(elements == std::vector<std::string>{"()", "(0 1 2)", "(0 2 1)"});

    CHECK(ok("group is-abelian --gen '(0 1)(2 3)' --gen '(0 2)(1 3)'") == "true");
    CHECK(ok("group is-abelian " + kS4) == "false");
}

TEST_CASE("group center and derived series") {
    CHECK(ok("group derived-series " + kS4) == "24 12 4 1");
    CHECK(ok("group derived-series --gen '(0 1)'") == "2 1");
    CHECK(ok("group derived-series --gen '()'") == "1");

    // A5 equals its own commutator subgroup, so the series stops immediately
    // and the group is flagged perfect; S5 is not perfect even though its
    // series stabilizes at the nontrivial A5.
    const std::string a5 = "--gen '(0 1 2)' --gen '(0 1 2 3 4)'";
    const std::string s5 = "--gen '(0 1)' --gen '(0 1 2 3 4)'";
    CHECK(json::parse(ok("group derived-series " + a5 + " --output json")) ==
          json{{"orders", {60}}, {"perfect", true}});
    CHECK(json::parse(ok("group derived-series " + s5 + " --output json")) ==
          json{{"orders", {120, 60}}, {"perfect", false}});

    const auto center = lines_of(ok("group center " + kSquare));
    CHECK(center == std::vector<std::string>{"()", "(0 8)(1 7)(2 6)(3 5)"});
    CHECK(ok("group center " + kS4) == "()");
}

TEST_CASE("group orbits and transitivity") {
    CHECK(ok("group orbits " + kSquare + " --points 0..9") == "[0 2 6 8] [1 3 5 7] [4]");
    CHECK(ok("group orbits --gen '(0 1)' --points 0..4") == "[0 1] [2] [3]");
    CHECK(ok("group is-transitive " + kS4 + " --points 0..4") == "true");
    CHECK(ok("group is-transitive " + kSquare + " --points 0..9") == "false");
    CHECK(ok("group is-transitive --gen '(0 1)' --points 0..3") == "false");
    CHECK(ok("group is-transitive --gen '(0 1)' --points 0..3 --lax") == "true");
}

TEST_CASE("group stabilizer, normalizer, centralizer") {
    const auto stab = lines_of(ok("group stabilizer " + kS4 + " --point 3"));
    CHECK(std::set<std::string>(stab.begin(), stab.end()) ==
          std::set<std::string>{"()", "(0 1)", "(0 1 2)", "(0 2 1)", "(0 2)", "(1 2)"});

    const std::string v4 = "--sub '(0 1)(2 3)' --sub '(0 2)(1 3)'";
    CHECK(lines_of(ok("group normalizer " + kS4 + " " + v4)).size() == 24);
    CHECK(lines_of(ok("group centralizer " + kS4 + " " + v4)) ==
          std::vector<std::string>{"()", "(0 1)(2 3)", "(0 2)(1 3)", "(0 3)(1 2)"});
}

TEST_CASE("json output carries the same values under stable keys") {
    CHECK(json::parse(ok("perm compose '(0 1)' '(1 2)' --output json")) ==
          json{{"cycles", "(0 1 2)"}});
    CHECK(json::parse(ok("perm order '(0 1 2)(3 4)' --output json")) == json{{"order", "6"}});
    CHECK(json::parse(ok("perm parity '(0 1)' --output json")) == json{{"parity", 1}});
    CHECK(json::parse(ok("perm sign '(0 1)' --output json")) == json{{"sign", -1}});
    CHECK(json::parse(ok("perm array '(1 2)' --size 4 --output json")) ==
          json{{"array", {0, 2, 1, 3}}});
    CHECK(json::parse(ok("invvec '(1 2)' --size 4 --output json")) ==
          json{{"inversion_vector", {0, 1, 0, 0}}});
    CHECK(json::parse(ok("rank '(1 2)' --algo mr --size 5 --output json")) ==
          json{{"rank", "99"}});
    CHECK(json::parse(ok("unrank 20 --algo lex --size 4 --output json")) ==
          json{{"cycles", "(0 3 2)"}});
    CHECK(json::parse(ok("group order " + kS4 + " --output json")) == json{{"order", 24}});
    CHECK(json::parse(ok("group is-abelian " + kS4 + " --output json")) ==
          json{{"is_abelian", false}});
    CHECK(json::parse(ok("group is-transitive " + kS4 + " --points 0..4 --output json")) ==
          json{{"is_transitive", true}});
    CHECK(json::parse(ok("group derived-series " + kS4 + " --output json")) ==
          json{{"orders", {24, 12, 4, 1}}, {"perfect", false}});
    CHECK(json::parse(ok("group orbits " + kSquare + " --points 0..9 --output json")) ==
          json{{"orbits", {{0, 2, 6, 8}, {1, 3, 5, 7}, {4}}}});

    const json elements = json::parse(ok("group elements --gen '(0 1 2)' --output json"));
    CHECK(elements["order"] == 3);
    CHECK(elements["elements"] == json{"()", "(0 1 2)", "(0 2 1)"});

    // The global flag may sit anywhere on the line.
    CHECK(json::parse(ok("--output json perm parity '(0 1)'")) == json{{"parity", 1}});
}

TEST_CASE("usage and parse problems exit with 2") {
    for (const std::string args : {
             "",                                  // no subcommand
             "bogus",                             // unknown subcommand
             "perm",                              // missing sub-subcommand
             "perm compose '(0 1)'",              // not enough factors
             "perm cycles '(0 1'",                // unbalanced paren
             "perm cycles '( )'",                 // empty cycle with space
             "perm cycles '(1 1)'",               // repeated point
             "perm cycles '(0 -1)'",              // negative point
             "perm power '(0 1)' twelve",         // non-integer exponent
             "perm order '(0 1)' extra",          // stray argument
             "rank '(1 2)' --algo bogus --size 4",// unknown scheme
             "rank '(1 2)' --size 4",             // missing --algo
             "unrank twenty --algo lex --size 4", // non-integer rank
             "group order",                       // missing --gen
             "group orbits --gen '(0 1)' --points 4..2",  // backwards range
             "group orbits --gen '(0 1)' --points nope",  // not a range
         }) {
        CAPTURE(args);
        const RunResult result = run_cli(args);
        CHECK(result.exit_code == 2);
        CHECK(result.out.empty());
    }
}

TEST_CASE("domain problems exit with 3") {
    for (const std::string args : {
             "unrank 24 --algo lex --size 4",     // rank == 4!
             "unrank 24 --algo mr --size 4",
             "unrank -1 --algo lex --size 4",     // negative rank
             "perm array '(0 5)' --size 3",       // size misses the support
             "rank '(0 5)' --algo lex --size 3",
             "invvec '(0 5)' --size 3",
         }) {
        CAPTURE(args);
        const RunResult result = run_cli(args);
        CHECK(result.exit_code == 3);
        CHECK(result.out.empty());
        CHECK(!result.err.empty());
    }

    const RunResult result = run_cli("unrank 24 --algo lex --size 4");
    CHECK(result.err.find("size is too small") != std::string::npos);
}

TEST_CASE("group size limit reports the attained order and exits with 3") {
    const RunResult result =
        run_cli("group order --gen '(0 1 2 3 4 5 6 7 8)' --gen '(0 1)' --max-group-order 100");
    CHECK(result.exit_code == 3);
    CHECK(result.err.find("101") != std::string::npos);
    CHECK(result.err.find("100") != std::string::npos);

    // The default limit admits S7 (5040 elements).
    CHECK(ok("group order --gen '(0 1 2 3 4 5 6)' --gen '(0 1)'") == "5040");
}

TEST_CASE("help is available at every level and exits with 0") {
    for (const std::string args :
         {"--help", "perm --help", "perm compose --help", "rank --help", "group --help",
          "group orbits --help"}) {
        CAPTURE(args);
        const RunResult result = run_cli(args);
        CHECK(result.exit_code == 0);
        CHECK(result.out.find("Usage") != std::string::npos);
    }
}
