#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "chatelet/cli.hpp"

#include "test_support.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("chatelet");
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.code = chatelet::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help text lists the subcommands and the expression grammar") {
    CliResult r = run({"--help"});
    CHECK(r.code == 0);
    for (const char* word : {"analyze", "symbol", "galois", "evimage", "norms", "squares",
                             "corpus", "Multiplication is always explicit"})
        CHECK(contains(r.out, word));
}

TEST_CASE("analyze: text report for a surface where the obstruction vanishes") {
    CliResult r = run({"analyze", "--a", "17", "--P", "3*(x^2-7)*(17*x^2-43)"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "holds"));
    CHECK(contains(r.out, "y^2 - (17) z^2"));
}

TEST_CASE("analyze: JSON report, positive verdict") {
    CliResult r = run({"analyze", "--a", "17", "--P", "3*(x^2-7)*(17*x^2-43)", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(chatelet::testsupport::report_schema_error(j).empty());
    CHECK(j["verdict"] == "holds");
    CHECK(j["brauer"] == "Z2");
    CHECK(j["witnesses"].empty());
    REQUIRE(j["places"].size() == 5);
    std::map<std::string, std::vector<std::string>> images;
    for (const auto& e : j["places"])
        images[e["place"].get<std::string>()] =
            e["image"].get<std::vector<std::string>>();
    CHECK(images["2"] == std::vector<std::string>{"0"});
    CHECK(images["3"] == std::vector<std::string>{"1/2"});
    CHECK(images["7"] == std::vector<std::string>{"0"});
    CHECK(images["17"] == std::vector<std::string>{"1/2"});
    CHECK(images["43"] == std::vector<std::string>{"0"});
    CHECK(j["surface"]["a"] == "17");
    CHECK(j.contains("perpetual"));
    CHECK(j["perpetual"]["classification"] == "reduces_to_quadratic_case");
}

TEST_CASE("analyze: JSON report, failure with witness place") {
    CliResult r = run({"analyze", "--a", "17", "--P", "3*(x^2-7)*(17*x^2-301)", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(chatelet::testsupport::report_schema_error(j).empty());
    CHECK(j["verdict"] == "fails");
    REQUIRE(j["witnesses"].size() == 1);
    CHECK(j["witnesses"][0] == "7");
    std::string w7;
    for (const auto& e : j["places"])
        if (e["place"] == "7") w7 = e["witness"].get<std::string>();
    CHECK(contains(w7, "(17, -7)_7 = 1/2"));
}

TEST_CASE("symbol: prints the invariant") {
    CliResult a = run({"symbol", "17", "-7", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == "1/2\n");
    CliResult b = run({"symbol", "2", "7", "7"});
    CHECK(b.code == 0);
    CHECK(b.out == "0\n");
    CliResult c = run({"symbol", "-1", "-1", "Real"});
    CHECK(c.code == 0);
    CHECK(c.out == "1/2\n");
}

TEST_CASE("galois: group over Q and over a quadratic base field") {
    CliResult r = run({"galois", "--P", "x^4-2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Galois group over Q: D8"));

    CliResult rb = run({"galois", "--P", "x^4-2", "--base", "2", "--json"});
    REQUIRE(rb.code == 0);
    json j = json::parse(rb.out);
    CHECK(j["galois"] == "D8");
    CHECK(j["base"] == "Q(sqrt 2)");
    CHECK(j["galois_over_base"] == "V4");
    CHECK(j["sqrt_a_in_splitting_field"] == true);
}

TEST_CASE("evimage: both invariant values at the obstruction place") {
    CliResult r = run({"evimage", "--a", "17", "--P", "3*(x^2-7)*(17*x^2-301)", "--place", "7",
                       "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["place"] == "7");
    CHECK(j["brauer"] == "Z2");
    REQUIRE(j["generators"].size() == 1);
    const json& g = j["generators"][0];
    CHECK(g["determined"] == true);
    CHECK(g["image"] == json::array({"0", "1/2"}));
    CHECK(g["witnesses"].size() == 2);

    CliResult t = run({"evimage", "--a", "17", "--P", "3*(x^2-7)*(17*x^2-301)", "--place", "7"});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "{0, 1/2}"));
}

TEST_CASE("norms: density bracket output") {
    CliResult r = run({"norms", "--a", "-1", "--r", "0", "--n", "12", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["total"] == 2048);
    CHECK(j["lo"].get<double>() <= 0.5);
    CHECK(j["hi"].get<double>() >= 0.5);
    CHECK(j["hi"].get<double>() - j["lo"].get<double>() <= 1.0 / 256 + 1e-12);

    CliResult t = run({"norms", "--a", "-1", "--r", "1", "--n", "10"});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "classes: 512"));
    CHECK(contains(t.out, "norms: 256"));
}

TEST_CASE("squares: counts match the closed form") {
    CliResult r = run({"squares", "--q", "7", "--R", "x^2+1", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 3);
    CHECK(j["expected"] == 3);
    CliResult t = run({"squares", "--q", "3", "--R", "x^2+1"});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "= 1"));
}

TEST_CASE("corpus: batch analysis in input order") {
    std::ifstream check("data/corpus.json");
    REQUIRE_MESSAGE(check.good(), "data/corpus.json must be reachable from the test directory");

    CliResult r = run({"corpus", "data/corpus.json"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    json doc;
    std::ifstream("data/corpus.json") >> doc;
    REQUIRE(rows.size() == doc.size());
    // input order is preserved and every row is definitive
    CHECK(contains(rows[0], "3*(x^2-7)*(17*x^2-43)"));
    CHECK(contains(rows[0], "holds"));
    for (const std::string& row : rows) {
        bool definitive = contains(row, "holds") || contains(row, "fails") ||
                          contains(row, "no adelic points");
        CHECK_MESSAGE(definitive, row);
        CHECK_FALSE(contains(row, "error:"));
    }

    CliResult rj = run({"corpus", "data/corpus.json", "--json"});
    CHECK(rj.code == 0);
    std::istringstream jlines(rj.out);
    size_t n = 0;
    for (std::string line; std::getline(jlines, line); ++n) {
        json j = json::parse(line);
        CHECK(chatelet::testsupport::report_schema_error(j).empty());
    }
    CHECK(n == doc.size());
}

TEST_CASE("input errors exit with code 1 and a diagnostic") {
    {
        CliResult r = run({"analyze", "--a", "4", "--P", "x^3-2"});
        CHECK(r.code == 1);
        CHECK(contains(r.err, "error:"));
    }
    {
        CliResult r = run({"analyze", "--a", "17", "--P", "x**2"});
        CHECK(r.code == 1);
        CHECK(contains(r.err, "at position"));
    }
    {
        CliResult r = run({"analyze", "--a", "17"});  // missing --P
        CHECK(r.code == 1);
    }
    {
        CliResult r = run({"analyze", "--a", "17", "--P", "x^4-2", "--depth", "0"});
        CHECK(r.code == 1);
    }
    {
        CliResult r = run({"symbol", "17", "-7", "6"});  // 6 is not a prime
        CHECK(r.code == 1);
        CHECK(contains(r.err, "prime"));
    }
    {
        CliResult r = run({"corpus", "data/no-such-file.json"});
        CHECK(r.code == 1);
        CHECK(contains(r.err, "cannot open"));
    }
    {
        CliResult r = run({"squares", "--q", "5", "--R", "x^2-1"});  // reducible
        CHECK(r.code == 1);
        CHECK(contains(r.err, "error:"));
    }
}
