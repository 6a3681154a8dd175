#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "submultiset/cli.hpp"

using namespace submultiset::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("count") {
    CHECK(invoke({"count", "-m", "2,3,3", "-n", "5"}).out == "9\n");
    CHECK(invoke({"count", "-m", "5,5", "-n", "5"}).out == "6\n");
    CHECK(invoke({"count", "--multiplicities", "5,9,14", "--n", "12", "--method", "incexc"}).out == "57\n");
    CHECK(invoke({"count", "-m", "5,9,14", "-n", "12", "--method", "brute"}).out == "57\n");

    const auto r = invoke({"count", "-m", "2,3,3", "-n", "5", "--format", "json"});
    CHECK(r.code == kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("count") == "9");
}

TEST_CASE("count: big values are exact decimal strings") {
    const auto r = invoke({"count", "-m", "100,100,100,100,100,100,100,100", "-n", "400", "--format", "json"});
    REQUIRE(r.code == kOk);
    const std::string c = nlohmann::json::parse(r.out).at("count");
    CHECK(c.size() > 10);
    CHECK(invoke({"count", "-m", "100,100,100,100,100,100,100,100", "-n", "400", "--method", "incexc"}).out == c + "\n");
}

TEST_CASE("usage errors exit 2") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"count", "-m", "3,4", "-n", "-1"},
             {"count", "-m", "3,4"},
             {"count", "-m", "3,-4", "-n", "1"},
             {"count", "-m", "3, 4", "-n", "1"},
             {"count", "-m", "3,,4", "-n", "1"},
             {"count", "-m", "3,4", "-n", "x"},
             {"count", "-m", "3,4", "-n", "99999999999999999999999"},
             {"count", "-m", "3,4", "-n", "1", "--method", "fast"},
             {"count", "-m", "3,4", "-n", "1", "--format", "xml"},
             {"count", "-n", "1"},
             {"table", "-m", "3,4", "-n", "2"},
             {"enumerate", "-m", "3,4", "-n", "2", "--start-rank", "99"},
             {"check", "-m", "3,4", "-n", "2", "--budget", "0"},
             {"frobnicate", "-m", "3,4"},
             {},
         }) {
        const auto r = invoke(args);
        CAPTURE(r.err);
        CHECK(r.code == kUsage);
        CHECK(r.out.empty());
    }
}

TEST_CASE("capacity errors exit 3") {
    std::string wide = "1";
    for (int i = 1; i < 64; ++i) {
        wide += ",1";
    }
    const auto ie = invoke({"count", "-m", wide, "-n", "2", "--method", "incexc"});
    CHECK(ie.code == kCapacity);
    CHECK(ie.out.empty());
    CHECK(ie.err.find("dp") != std::string::npos);
    CHECK(invoke({"count", "-m", wide, "-n", "2"}).out == "2016\n");
    CHECK(invoke({"count", "-m", "5,5", "-n", "5", "--method", "brute", "--budget", "10"}).code == kCapacity);
}

TEST_CASE("table") {
    CHECK(invoke({"table", "-m", "5,5", "--format", "csv"}).out ==
          "0,1\n1,2\n2,3\n3,4\n4,5\n5,6\n6,5\n7,4\n8,3\n9,2\n10,1\n");
    CHECK(invoke({"table", "-m", "2,3,3", "--format", "json"}).out ==
          "[\"1\",\"3\",\"6\",\"9\",\"10\",\"9\",\"6\",\"3\",\"1\"]\n");
    CHECK(invoke({"table", "-m", "2,3,3", "--method", "incexc", "--format", "json"}).out ==
          invoke({"table", "-m", "2,3,3", "--format", "json"}).out);
    CHECK(invoke({"table", "-m", "", "--format", "csv"}).out == "0,1\n");
}

TEST_CASE("enumerate") {
    CHECK(invoke({"enumerate", "-m", "2,3,3", "-n", "5"}).out ==
          "0,2,3\n0,3,2\n1,1,3\n1,2,2\n1,3,1\n2,0,3\n2,1,2\n2,2,1\n2,3,0\n");
    CHECK(invoke({"enumerate", "-m", "2,3,3", "-n", "5", "--limit", "2", "--start-rank", "3"}).out ==
          "1,2,2\n1,3,1\n");
    CHECK(invoke({"enumerate", "-m", "1,1", "-n", "1", "--format", "json"}).out == "[[0,1],[1,0]]\n");
    CHECK(invoke({"enumerate", "-m", "2,2", "-n", "5"}).out.empty());
    CHECK(invoke({"enumerate", "-m", "2,3,3", "-n", "5", "--limit", "0"}).out.empty());
}

TEST_CASE("check") {
    const auto r = invoke({"check", "-m", "5,9,14", "-n", "12"});
    CHECK(r.code == kOk);
    CHECK(r.out == "incexc: 57\ndp: 57\nbrute: 57\nAGREE\n");

    const auto skipped = invoke({"check", "-m", "5,5", "-n", "5", "--budget", "1"});
    CHECK(skipped.code == kOk);
    CHECK(skipped.out.find("brute: skipped") != std::string::npos);
    CHECK(skipped.out.find("AGREE") != std::string::npos);

    const auto j = nlohmann::json::parse(invoke({"check", "-m", "2,3,3", "-n", "5", "--format", "json"}).out);
    CHECK(j.at("agree") == true);
    CHECK(j.at("methods").size() == 3);
    CHECK(j.at("methods")[2].at("count") == "9");

    CHECK(invoke({"check", "-m", "3,4", "-n", "5", "--format", "csv"}).out ==
          "incexc,3\ndp,3\nbrute,3\nresult,AGREE\n");
}

TEST_CASE("check: colour only when requested") {
    std::ostringstream out, err;
    CHECK(main_entry({"check", "-m", "3,4", "-n", "5"}, out, err, true) == kOk);
    CHECK(out.str().find("\x1b[32mAGREE") != std::string::npos);
}

TEST_CASE("bench") {
    const auto r = invoke({"bench", "-m", "5,9,14", "-n", "12"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("incexc: ") != std::string::npos);
    CHECK(r.out.find("(count 57)") != std::string::npos);

    const auto j = nlohmann::json::parse(invoke({"bench", "-m", "5,5", "-n", "5", "--budget", "1", "--format", "json"}).out);
    REQUIRE(j.size() == 3);
    CHECK(j[0].contains("seconds"));
    CHECK(j[2].contains("skipped"));
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args = {"table", "-m", "4,7,1,3", "--format", "json"};
    CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("help exits 0") {
    const auto r = invoke({"--help"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("count") != std::string::npos);
}
