#include "cli.hpp"
#include "cli_io.hpp"
#include "report.hpp"

#include "homx/canonical.hpp"
#include "homx/error.hpp"
#include "homx/families.hpp"
#include "homx/hom.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace homx;
using namespace homx::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& input = {}, unsigned jobs = 1,
              const std::atomic<bool>* stop = nullptr) {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, {in, out, err, jobs, stop});
    return {code, out.str(), err.str()};
}

// True when no value anywhere in the document is a JSON number.
bool numbers_are_strings(const nlohmann::json& j) {
    if (j.is_number())
        return false;
    if (j.is_structured())
        for (const auto& child : j)
            if (!numbers_are_strings(child))
                return false;
    return true;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST_CASE("count example") {
    auto r = invoke({"count", "--target", "01/11", "--graph", "cycle:4"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["results"][0]["value"] == "7");
    CHECK(invoke({"count", "--target", "01/11", "--graph", "cycle:4", "--output", "plain"}).out == "7\n");
}

TEST_CASE("classify example") {
    auto r = invoke({"classify", "--target", "wr"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    const auto& report = doc["report"];
    CHECK(report["sum_d"] == "7");
    CHECK(report["max_degree"] == "3");
    CHECK(report["flags"]["looped_dominating_vertex"] == true);
    bool condition = false;
    for (const auto& v : report["verdicts"])
        if (v["name"] == "looped_dominating_or_unique_max")
            condition = v["tag"] == "complete_bipartite";
    CHECK(condition);
    REQUIRE(!report["comparisons"].empty());
    for (const auto& c : report["comparisons"]) {
        CHECK(c.contains("lhs"));
        CHECK(c.contains("rhs"));
        CHECK(c.contains("op"));
        CHECK(c["exact"].is_boolean());
    }
}

TEST_CASE("verify example") {
    auto r = invoke({"verify", "--delta", "2", "--n", "8", "--target", "01/11", "--source", "emc"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["verdict"]["conjecture_holds"] == true);
    REQUIRE(doc["verdict"]["equality_graphs"].size() == 1);
    CHECK(doc["verdict"]["equality_graphs"][0] == canonical_form(complete_bipartite(2, 6)).bytes);
    CHECK(doc["verdict"]["max_value"] == "67");
}

TEST_CASE("every numeric JSON field is a decimal string") {
    const std::vector<std::vector<std::string>> commands{
        {"count", "--target", "hc:2", "--graph", "cbip:3,4"},
        {"classify", "--target", "ind"},
        {"classify", "--target", "kq:3", "--delta", "3"},
        {"generate", "--n", "7", "--delta", "2"},
        {"decompose", "--graph", "cbip:2,4"},
        {"search", "--target", "wr", "--n", "8"},
        {"search", "--target", "ind", "--n", "8", "--empirical-threshold"},
        {"verify", "--target", "kq:3", "--n", "12"},
        {"verify", "--target", "ind", "--n", "7", "--delta", "1", "--source", "all"},
        {"verify", "--target", "kqloop:2", "--n", "9", "--two-regular"}};
    for (const auto& args : commands) {
        auto r = invoke(args);
        REQUIRE_MESSAGE(r.code == 0, r.err);
        CHECK(numbers_are_strings(nlohmann::json::parse(r.out)));
    }
}

TEST_CASE("output is byte-stable across job counts") {
    for (const std::string output : {"json", "csv", "plain"}) {
        const std::vector<std::string> search{"search", "--target", "wr", "--n", "10", "--output", output};
        const std::vector<std::string> verify{"verify", "--target", "01/11", "--n", "10", "--output", output};
        for (const auto& args : {search, verify}) {
            const auto one = invoke(args, {}, 1);
            REQUIRE(one.code == 0);
            for (unsigned jobs : {2U, 3U, 8U})
                CHECK(invoke(args, {}, jobs).out == one.out);
            auto explicit_jobs = args;
            explicit_jobs.insert(explicit_jobs.end(), {"--jobs", "5"});
            CHECK(invoke(explicit_jobs).out == one.out);
        }
    }
}

TEST_CASE("generate lists the edge-min-critical family") {
    auto r = invoke({"generate", "--n", "5", "--delta", "2", "--output", "plain"});
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    auto regular = invoke({"generate", "--n", "6", "--delta", "2", "--source", "all", "--regular", "2", "--output", "plain"});
    CHECK(std::count(regular.out.begin(), regular.out.end(), '\n') == 2);
}

TEST_CASE("graph6 on standard input") {
    auto r = invoke({"search", "--target", "ind", "--n", "4", "--delta", "2", "--source", "g6-stdin", "--output", "csv"},
                    "C]\nC~\nC^\n");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("canonical_form,hom_value,is_maximizer\r\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
    CHECK(r.out.find(",7,true") != std::string::npos);

    auto bad = invoke({"search", "--target", "ind", "--n", "4", "--source", "g6-stdin"}, "C]\nC\n");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("homx:") == 0);
}

TEST_CASE("interrupted searches keep a truncated footer") {
    std::atomic<bool> stop{true};
    auto r = invoke({"search", "--target", "ind", "--n", "9", "--output", "csv"}, {}, 2, &stop);
    CHECK(r.code == 0);
    CHECK(r.out == "canonical_form,hom_value,is_maximizer\r\ntruncated,,\r\n");
}

TEST_CASE("exit statuses") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"count", "--target", "01/1x", "--graph", "cycle:4"}).code == 2);
    CHECK(invoke({"count", "--target", "00/01", "--graph", "cycle:4"}).code == 2);
    CHECK(invoke({"count", "--graph", "cycle:4"}).code == 2);
    CHECK(invoke({"count", "--target", "ind", "--graph", "wheel:4"}).code == 2);
    CHECK(invoke({"verify", "--target", "ind", "--n", "5", "--delta", "3"}).code == 2);
    CHECK(invoke({"search", "--target", "ind", "--n", "6", "--jobs", "0"}).code == 2);
    CHECK(invoke({"count", "--target", "ind", "--graph", "cycle:4", "--output", "xml"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("HOMX_JOBS parsing") {
    CHECK(jobs_from_environment(nullptr) == 1);
    CHECK(jobs_from_environment("") == 1);
    CHECK(jobs_from_environment("6") == 6);
    CHECK_THROWS_AS(jobs_from_environment("0"), ParameterError);
    CHECK_THROWS_AS(jobs_from_environment("two"), ParameterError);
}

TEST_CASE("target aliases and inline rows") {
    CHECK(parse_target("ind") == h_ind());
    CHECK(parse_target("01/11") == h_ind());
    CHECK(parse_target("wr") == h_wr());
    CHECK(parse_target("hc:3") == hard_core(3));
    CHECK(parse_target("kq:4") == complete_target(4));
    CHECK(parse_target("kqloop:2") == looped_complete(2));
    CHECK_THROWS_AS(parse_target("011/11"), FormatError);
    CHECK_THROWS_AS(parse_target("01/10/"), FormatError);
    CHECK_THROWS_AS(parse_target("zz:3"), ParameterError);
    CHECK_THROWS_AS(parse_target("hc:x"), ParameterError);
}

TEST_CASE("target files") {
    const auto json = temp_file("homx_target.json", R"({"q": 2, "adj": ["01", [1, 1]], "weights": ["3/2", 2]})");
    const auto h = load_target(json);
    CHECK(h.rows() == h_ind().rows());
    CHECK(h.weights() == std::vector<Rational>{Rational(3, 2), Rational(2)});
    CHECK(load_target(temp_file("homx_target.txt", "111/111/111\n")) == looped_complete(3));
    CHECK_THROWS_AS(load_target(temp_file("homx_bad.json", R"({"q": 3, "adj": ["01", "11"]})")), ParameterError);
    CHECK_THROWS_AS(load_target(temp_file("homx_broken.json", "{\"adj\": [")), FormatError);
    auto r = invoke({"count", "--target-file", json.string(), "--graph", "path:2", "--output", "plain"});
    CHECK(r.code == 0);
    CHECK(r.out == "10\n");
}

TEST_CASE("graph arguments") {
    CHECK(is_isomorphic(parse_graph("cycle:5"), cycle(5)));
    CHECK(is_isomorphic(parse_graph("path:4"), path(4)));
    CHECK(is_isomorphic(parse_graph("star:5"), complete_bipartite(1, 4)));
    CHECK(is_isomorphic(parse_graph("complete:4"), complete(4)));
    CHECK(is_isomorphic(parse_graph("cbip:2,3"), complete_bipartite(2, 3)));
    CHECK(is_isomorphic(parse_graph("g6:C~"), complete(4)));
    CHECK_THROWS_AS(parse_graph("cbip:2"), ParameterError);
    CHECK_THROWS_AS(parse_graph("cycle"), ParameterError);
    CHECK_THROWS_AS(parse_graph("g6:C"), FormatError);
}

TEST_CASE("CSV quoting") {
    std::ostringstream out;
    write_csv_row(out, {"plain", "a,b", "say \"hi\"", "two\nlines"});
    CHECK(out.str() == "plain,\"a,b\",\"say \"\"hi\"\"\",\"two\nlines\"\r\n");
}

TEST_CASE("weighted targets are counted exactly") {
    const auto file = temp_file("homx_weighted.json", R"({"adj": ["01", "11"], "weights": ["1", "1/2"]})");
    auto r = invoke({"count", "--target-file", file.string(), "--graph", "path:2", "--output", "plain"});
    REQUIRE(r.code == 0);
    // looped vertex weight 1/2: 1*(1/2) + (1/2)*1 + (1/2)(1/2) = 5/4
    CHECK(r.out == "5/4\n");
}
