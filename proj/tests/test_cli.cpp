#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cuniform/appendix.hpp"
#include "cuniform/cli.hpp"

using namespace cuniform;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("table emits the n = 3 extremal row") {
    const auto r = run({"table", "--kind", "bct", "--n", "3", "--c", "2", "--function",
                        "swapped-inverse", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("a,b,count\n"));
    CHECK(r.out.find("\n5,0,4\n") != std::string::npos);
}

TEST_CASE("solutions for n = 2") {
    const auto r = run({"solutions", "--kind", "bct", "--n", "2", "--c", "2", "--a", "2", "--b", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "x,y\n2,0\n");
}

TEST_CASE("uniformity for n = 2") {
    const auto r = run({"uniformity", "--kind", "ddt", "--n", "2", "--c", "all", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["reports"].size() == 2);
    for (const auto& rep : j["reports"]) CHECK(rep["delta_or_beta"] == 1);
}

TEST_CASE("verify subcommands") {
    auto r = run({"verify", "--theorem", "bct", "--n", "4"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["predicted"] == 5);
    CHECK(j["metrics"]["max_entry"] == 5);

    r = run({"verify", "--theorem", "c1-boomerang", "--n", "6"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["metrics"]["observed_beta"] == 10);

    r = run({"verify", "--theorem", "gcd-lemma", "--n", "30"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    for (const char* key : {"kind", "n", "modulus", "witnesses", "predicted", "pass"}) {
        CHECK(j.contains(key));
    }
}

TEST_CASE("appendix subcommand") {
    for (const char* n : {"2", "3", "4", "5"}) {
        const auto r = run({"appendix", "--n", n});
        CHECK(r.code == 0);
    }
    CHECK(run({"appendix", "--n", "2"}).out.find("24 triples") != std::string::npos);
    const auto bad = run({"appendix", "--n", "4", "--modulus", "19"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("--modulus") != std::string::npos);
    CHECK(run({"appendix", "--n", "6"}).code == 2);
}

TEST_CASE("configuration errors name the flag") {
    auto r = run({"table", "--kind", "xyz", "--n", "3", "--c", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--kind") != std::string::npos);
    r = run({"table", "--n", "3", "--c", "9"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--c") != std::string::npos);
    r = run({"table", "--n", "4", "--modulus", "15", "--c", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--modulus") != std::string::npos);
    r = run({"table", "--n", "30"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--n") != std::string::npos);
    r = run({"table", "--n", "3", "--function", "file:/nonexistent/sbox"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--function") != std::string::npos);
    r = run({"table", "--n", "3", "--format", "xml"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--format") != std::string::npos);
    r = run({"verify", "--theorem", "nope", "--n", "4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--theorem") != std::string::npos);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("s-box file input and file output") {
    const std::string sbox = "cuniform_test_sbox.txt";
    const std::string out = "cuniform_test_out.json";
    {
        std::ofstream f(sbox);
        f << "1\n0\n3\n2\n";
    }
    const auto from_file = run({"table", "--n", "2", "--kind", "bct", "--c", "2", "--function",
                                "file:" + sbox, "--format", "json", "--output", out});
    CHECK(from_file.code == 0);
    CHECK(from_file.out.empty());
    std::ifstream in(out);
    std::stringstream written;
    written << in.rdbuf();
    const auto builtin = run({"table", "--n", "2", "--kind", "bct", "--c", "2", "--format", "json"});
    CHECK(written.str() == builtin.out);
    std::remove(sbox.c_str());
    std::remove(out.c_str());
}

TEST_CASE("output is independent of worker count") {
    const std::vector<std::string> base{"table", "--kind", "bct", "--n", "5", "--c", "all", "--format", "json"};
    auto one = base, many = base;
    one.insert(one.end(), {"--workers", "1"});
    many.insert(many.end(), {"--workers", "4"});
    CHECK(run(one).out == run(many).out);
}

TEST_CASE("pretty rendering") {
    const auto r = run({"solutions", "--kind", "bct", "--n", "3", "--c", "2", "--a", "5", "--b", "0", "--pretty"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0,a^2+1\n") != std::string::npos);
}

TEST_CASE("appendix parsing, rendering and diff") {
    const auto entries = parse_appendix("# comment\n\n3 3 0: 7,4 0,6\n2 5 0: 0,5\n");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].solutions.size() == 2);
    CHECK(render_appendix(entries) == "2 5 0: 0,5\n3 3 0: 0,6 7,4\n");
    CHECK_THROWS_AS(parse_appendix("2 5 0 0,5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_appendix("2 5 0: 0;5\n"), std::invalid_argument);
    CHECK(parse_appendix(appendix_fixture(4)).size() == 8);
    CHECK_THROWS_AS(appendix_fixture(6), std::invalid_argument);
    CHECK(unified_diff("a\nb\nc\n", "a\nx\nc\n", "old", "new") ==
          "--- old\n+++ new\n@@ -1,3 +1,3 @@\n a\n-b\n+x\n c\n");
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
