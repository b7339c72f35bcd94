#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "jacobi_periods/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "jacobi-periods");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = jacobi::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("usage errors")
    {
        CHECK(run({}).code == 2);
        CHECK(run({"bogus"}).code == 2);
        CHECK(run({"classnum", "--max", "-1"}).code == 2);
        CHECK(run({"expand", "e99"}).code == 2);
        CHECK(run({"expand", "e21", "--qbound", "x"}).code == 2);
        CHECK(run({"expand", "e21", "--qbound", "0"}).code == 2);
        CHECK(run({"lift", "phi", "--D", "-12"}).code == 2);
        CHECK(run({"verify", "groupring", "--n", "2", "--frobnicate"}).code == 2);
        CHECK(run({"verify", "eigen", "--format", "csv"}).code == 2);
        CHECK(run({"--help"}).code == 0);
    }

    TEST_CASE("expand")
    {
        auto r = run({"expand", "e21", "--qbound", "2"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("terms").at(0) == nlohmann::json::array({0, 0, 1, 1}));
        auto csv = run({"expand", "e2", "--qbound", "3", "--format", "csv"});
        CHECK(csv.out == "n_scaled,numerator,denominator\n0,1,1\n1,-24,1\n2,-72,1\n");
        auto text = run({"expand", "hmu", "--mu", "1", "--qbound", "2", "--format", "text"});
        CHECK(text.code == 0);
        CHECK(text.out.find("# qseries weight 3/2") == 0);
    }

    TEST_CASE("classnum")
    {
        auto r = run({"classnum", "--max", "4", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out == "N,numerator,denominator\n0,-1,12\n3,1,3\n4,1,2\n");
        auto j = nlohmann::json::parse(run({"classnum", "--max", "4"}).out);
        CHECK(j.at("max") == 4);
    }

    TEST_CASE("hecke and lift")
    {
        auto v = nlohmann::json::parse(run({"hecke", "v", "--n", "2", "--qbound", "3"}).out);
        CHECK(v.at("index") == "2");
        CHECK(v.at("qbound") == "3");
        auto tj = run({"hecke", "tj", "--p", "2", "--qbound", "3"});
        REQUIRE(tj.code == 0);
        CHECK(nlohmann::json::parse(tj.out).at("terms").at(0) == nlohmann::json::array({0, 0, 3, 1}));
        auto t2 = nlohmann::json::parse(run({"hecke", "t2", "--p", "2", "--qbound", "3"}).out);
        CHECK(t2.at("terms").at(0) == nlohmann::json::array({0, 3, 1}));
        auto t2l = nlohmann::json::parse(run({"--literal-paper", "hecke", "t2", "--p", "2", "--qbound", "3"}).out);
        CHECK(t2l.at("terms").at(0) == nlohmann::json::array({0, 9, 4}));
        auto th = nlohmann::json::parse(run({"hecke", "thalf", "--p", "3", "--qbound", "5"}).out);
        CHECK(th.at("terms").at(0) == nlohmann::json::array({0, -1, 3}));
        auto phi = nlohmann::json::parse(run({"lift", "phi", "--D", "-4", "--qbound", "3"}).out);
        CHECK(phi.at("terms").at(1) == nlohmann::json::array({1, -24, 1}));
        auto psi = nlohmann::json::parse(run({"lift", "psi", "--qbound", "2"}).out);
        auto e21 = nlohmann::json::parse(run({"expand", "e21", "--qbound", "2"}).out);
        CHECK(psi.at("terms") == e21.at("terms"));
    }

    TEST_CASE("input files and output files")
    {
        std::string in = "cli_test_input.json", out = "cli_test_output.json";
        {
            std::ofstream f(in);
            f << run({"expand", "e21", "--qbound", "12"}).out;
        }
        auto r = run({"hecke", "tj", "--p", "2", "--input", in, "--output", out});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream f(out);
        auto j = nlohmann::json::parse(f);
        CHECK(j.at("kind") == "jacobi");
        CHECK(run({"hecke", "tj", "--p", "2", "--input", "missing.json"}).code == 2);
        std::remove(in.c_str());
        std::remove(out.c_str());
    }

    TEST_CASE("verify groupring report")
    {
        auto r = run({"verify", "groupring", "--n", "2"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("check") == "theorem_congruence");
        CHECK(j.at("n") == 2);
        CHECK(j.at("status") == "pass");
    }

    TEST_CASE("exit code follows the checks")
    {
        CHECK(run({"verify", "relations"}).code == 0);
        CHECK(run({"verify", "relations", "--literal-paper"}).code == 1);
        CHECK(run({"verify", "eigen", "--p", "2", "--qbound", "6"}).code == 0);
        CHECK(run({"verify", "eigen", "--p", "2", "--qbound", "6", "--literal-paper"}).code == 1);
        CHECK(run({"verify", "thetadecomp", "--qbound", "10"}).code == 0);
        CHECK(run({"verify", "theorem1", "--n", "2"}).code == 0);
        // A tolerance below double rounding fails the numeric suite.
        CHECK(run({"verify", "theorem1", "--n", "2", "--tol", "1e-30"}).code == 1);
    }

    TEST_CASE("identical invocations give identical bytes")
    {
        for (std::vector<std::string> args : {std::vector<std::string>{"verify", "numeric"},
                                              std::vector<std::string>{"expand", "e21", "--qbound", "9"},
                                              std::vector<std::string>{"verify", "diagram", "--qbound", "6"}}) {
            auto a = run(args), b = run(args);
            CHECK(a.code == b.code);
            CHECK(a.out == b.out);
        }
    }

    TEST_CASE("numeric suite report shape")
    {
        auto j = nlohmann::json::parse(run({"verify", "numeric"}).out);
        CHECK(j.at("suite") == "numeric");
        for (const auto& c : j.at("checks")) {
            CHECK(c.contains("check"));
            CHECK(c.contains("params"));
            CHECK(c.contains("points"));
            CHECK(c.contains("max_abs_error"));
            CHECK(c.contains("tol"));
            CHECK(c.contains("status"));
        }
    }
}
