#include "doctest.h"

#include "json.hpp"
#include "qwalk/cli.hpp"
#include "qwalk/rational_function.hpp"
#include "qwalk/verify.hpp"

#include <sstream>

using qwalk::Polynomial;
using qwalk::RationalFunction;
using qwalk::Var;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = qwalk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("prob") {
    auto r = run({"prob", "--n", "4", "--j", "1", "--method", "closed", "--format", "frac"});
    CHECK(r.code == 0);
    CHECK(r.out == "7/10\n");
    CHECK(r.err.empty());

    CHECK(run({"prob", "--n", "8", "--j", "5", "--method", "residue"}).out == "119/338\n");
    CHECK(run({"prob", "--n", "8", "--j", "5", "--method", "numeric"}).out == "119/338\n");
    CHECK(run({"prob", "--n", "6", "--j", "0"}).out == "1\n");
    CHECK(run({"prob", "--n", "6", "--j", "6"}).out == "0\n");

    auto d = run({"prob", "--n", "3", "--j", "1", "--format", "dec"});
    CHECK(d.out.rfind("\xe2\x89\x88", 0) == 0);
    CHECK(d.out.find("0.666666666666666666666666666667") != std::string::npos);
    CHECK(run({"prob", "--n", "4", "--j", "1", "--format", "dec"}).out == "0.700000000000000000000000000000\n");

    auto csv = lines(run({"prob", "--n", "4", "--j", "1", "--format", "csv"}).out);
    REQUIRE(csv.size() == 2);
    CHECK(csv[0] == "n,j,p_num,p_den,q_num,q_den,method");
    CHECK(csv[1] == "4,1,7,10,3,10,closed");
}

TEST_CASE("prob --method all") {
    auto r = run({"prob", "--n", "8", "--j", "5", "--method", "all", "--format", "csv"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[1] == "8,5,119,338,219,338,closed");
    CHECK(rows[2] == "8,5,119,338,219,338,residue");
    CHECK(rows[3] == "8,5,119,338,219,338,numeric");
    CHECK(rows[4].rfind("8,5,", 0) == 0);
    CHECK(rows[4].find(",simulate") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with one line on stderr") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"prob", "--n", "99", "--j", "100"},
             {"prob", "--n", "1", "--j", "0"},
             {"prob", "--n", "4"},
             {"prob", "--n", "4", "--j", "1", "--method", "guess"},
             {"prob", "--n", "4", "--j", "1", "--format", "xml"},
             {"prob", "--n", "4", "--j", "1", "--tail-eps", "0"},
             {"verify", "--suite", "bogus"},
             {"gf", "--n", "4", "--j", "9"},
             {"frobnicate"},
             {},
         }) {
        auto r = run(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        auto e = lines(r.err);
        REQUIRE(e.size() == 1);
        CHECK(e[0].rfind("error: usage: ", 0) == 0);
    }
}

TEST_CASE("precision ceiling exits 3") {
    auto r = run({"prob", "--n", "100", "--j", "3", "--method", "numeric"});
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: precision: ", 0) == 0);
    CHECK(run({"prob", "--n", "16", "--j", "3", "--method", "numeric", "--precision-bits", "100000"}).code == 2);
}

TEST_CASE("json round-trips byte for byte") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"prob", "--n", "9", "--j", "4", "--format", "json"},
             {"prob", "--n", "5", "--j", "2", "--method", "simulate", "--format", "json"},
             {"prob", "--n", "5", "--j", "2", "--method", "all", "--format", "json"},
             {"table", "--n-max", "6", "--format", "json"},
             {"gf", "--n", "5", "--j", "4", "--format", "json"},
             {"roots", "--n", "5", "--format", "json"},
         }) {
        auto r = run(args);
        REQUIRE(r.code == 0);
        auto parsed = nlohmann::ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
    }
    auto j = nlohmann::json::parse(run({"prob", "--n", "9", "--j", "4", "--format", "json"}).out);
    CHECK(j["n"] == 9);
    CHECK(j["j"] == 4);
    CHECK(j["p"]["num"] == "205");
    CHECK(j["p"]["den"] == "577");
    CHECK(j["method"] == "closed");
    CHECK(j["decimal"].is_string());
}

TEST_CASE("gf prints the factored denominator form") {
    Polynomial num = Polynomial::monomial(qwalk::Rational(1), 4, Var::z);
    Polynomial den = Polynomial({-1, -1, 1, 2}, Var::z) * Polynomial({1, -1, -1, 2}, Var::z);
    auto r = run({"gf", "--n", "5", "--j", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find(RationalFunction(num, den).str()) != std::string::npos);
    auto s = run({"gf", "--n", "3", "--j", "1", "--terms", "7", "--format", "json"});
    auto j = nlohmann::json::parse(s.out);
    CHECK(j["numerator"] == "2z^3 - z");
    CHECK(j["denominator"] == "z^2 - 1");
}

TEST_CASE("table") {
    auto r = run({"table", "--n-max", "9", "--common-denominator"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    const auto& pub = qwalk::reference_table();
    REQUIRE(rows.size() == pub.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string want = "n=" + std::to_string(i + 2) + ":";
        for (const auto& cell : pub[i]) want += " " + cell;
        CHECK(rows[i] == want);
    }
    CHECK(rows[2] == "n=4: 7/10 4/10 3/10");
    CHECK(rows[4] == "n=6: 41/58 24/58 21/58 20/58 17/58");

    auto reduced = lines(run({"table", "--n-max", "4"}).out);
    CHECK(reduced.back() == "n=4: 7/10 2/5 3/10");

    auto csv = lines(run({"table", "--n-max", "5", "--format", "csv"}).out);
    CHECK(csv.size() == 1 + 1 + 2 + 3 + 4);
    CHECK(csv[0] == "n,j,p_num,p_den,q_num,q_den,method");
    CHECK(csv.back() == "5,4,5,17,12,17,closed");
}

TEST_CASE("verify") {
    auto r = run({"verify", "--n-max", "9", "--suite", "all"});
    CHECK(r.code == 0);
    auto out = lines(r.out);
    REQUIRE(!out.empty());
    for (std::size_t i = 0; i + 1 < out.size(); ++i) CHECK(out[i].rfind("PASS ", 0) == 0);
    CHECK(r.out.find("identities") != std::string::npos);
    CHECK(r.out.find("oeis") != std::string::npos);
    CHECK(run({"verify", "--n-max", "12", "--suite", "identities"}).code == 0);
}

TEST_CASE("roots") {
    auto r = run({"roots", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2 inside, 0 outside") != std::string::npos);
    CHECK(r.out.find("0 inside, 1 outside") != std::string::npos);
}
