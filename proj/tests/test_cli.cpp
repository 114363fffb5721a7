#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tropdesc/rational.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = tropdesc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute") {
    auto r = run({"compute", "psiL(d=3,k=1)"});
    CHECK(r.code == 0);
    CHECK(r.out == "psiL(d=3,k=1) = 60  [computed]\n");
    r = run({"compute", "psiLL(d=3)", "--format", "csv"});
    CHECK(r.out == "key,value,provenance\npsiLL(d=3),302,computed\n");
    r = run({"--format", "json", "compute", "special(Box,d=3)"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"] == "10");
    CHECK(j["provenance"] == "table");
    CHECK_FALSE(j.contains("elapsed_ms"));
}

TEST_CASE("compute errors") {
    auto r = run({"compute", "psiL(d=0,k=1)"});
    CHECK(r.code == 1);
    CHECK(r.err.find("d must be >= 1") != std::string::npos);
    CHECK(r.out.empty());
    r = run({"compute", "psiL(d=3"});
    CHECK(r.code == 1);
    r = run({"--no-oracle", "compute", "special(Box,d=7)"});
    CHECK(r.code == 1);
    CHECK(r.err.find("special(Box,d=7)") != std::string::npos);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"compute", "N(d=1)", "--format", "xml"}).code == 1);
}

TEST_CASE("tables") {
    auto r = run({"table", "--kind", "psiL", "--k", "1", "--range", "1..3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "d,value\n1,2\n2,4\n3,60\n");
    r = run({"table", "--kind", "psiL", "--k", "2", "--range", "1..3", "--format", "csv"});
    CHECK(r.out == "d,value\n1,0\n2,9/2\n3,54\n");
    r = run({"table", "--kind", "psiLL", "--range", "1..2", "--format", "csv"});
    CHECK(r.out == "d,value\n1,2\n2,17\n");
    r = run({"table", "--kind", "N", "--range", "1..4", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 4);
    CHECK(j[3]["value"] == "620");
    CHECK(j[3]["d"] == 4);
    for (const auto& row : j) CHECK(tropdesc::Rational::parse(row["value"].get<std::string>()).to_string() == row["value"]);
    CHECK(run({"table", "--range", "3..1"}).code == 1);
    CHECK(run({"table", "--range", "x..2"}).code == 1);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"table", "--kind", "psiL", "--k", "3", "--range", "1..4"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("validate") {
    auto r = run({"validate", "--suite", "paper"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("NOTE  N_w(d=3,w=2)") != std::string::npos);
    CHECK(r.out.find("22") != std::string::npos);

    r = run({"--seed-psiL1", "3", "validate", "--suite", "paper"});
    CHECK(r.code == 2);
    CHECK(r.out.find("FAIL  psiL(d=2,k=1) by general recursion  expected 4, got 5") != std::string::npos);

    r = run({"--no-oracle", "validate", "--suite", "cross"});
    CHECK(r.code == 0);
    CHECK(r.out.find("SKIP  oracle checks") != std::string::npos);
    CHECK(run({"validate", "--suite", "nonsense"}).code == 1);
}

TEST_CASE("cache file") {
    const auto path = (std::filesystem::temp_directory_path() / "tropdesc_cli_cache.json").string();
    std::filesystem::remove(path);
    CHECK(run({"--cache", path, "compute", "psiL(d=3,k=2)"}).code == 0);
    CHECK(std::filesystem::exists(path));
    auto stats = run({"--cache", path, "cache", "stats"});
    CHECK(stats.code == 0);
    CHECK(stats.out.find("entries: ") != std::string::npos);
    CHECK(stats.out.find("psiL: ") != std::string::npos);
    CHECK(run({"--cache", path, "compute", "psiL(d=3,k=2)"}).out == "psiL(d=3,k=2) = 54  [computed]\n");
    CHECK(run({"--cache", path, "cache", "clear"}).code == 0);
    CHECK(run({"--cache", path, "cache", "stats"}).out.rfind("entries: 0", 0) == 0);

    {
        std::ofstream(path) << R"j({"version":1,"entries":{"N(d=3)":"12//5"}})j";
    }
    auto bad = run({"--cache", path, "compute", "N(d=3)"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("at byte") != std::string::npos);
    CHECK(run({"--cache", path, "--no-cache", "compute", "N(d=3)"}).code == 0);
    std::filesystem::remove(path);
    CHECK(run({"cache", "stats"}).code == 1);
}
