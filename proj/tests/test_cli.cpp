#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "riordan/cli.hpp"

namespace {

struct Outcome
{
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = riordan::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}

TEST_CASE("power")
{
  const auto r = run({"power", "(1+x ; x+x^2)", "2", "--precision", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1 + 2*x + 2*x^2 + x^3 ; x + 2*x^2 + 2*x^3 + x^4)\n");
  CHECK(run({"--precision", "5", "power", "(1+x ; x+x^2)", "2"}).out == r.out);
}

TEST_CASE("genpow modes")
{
  const std::string expected = "(1 + 2*x + x^3 ; x + 2*x^2 + x^4)\n";
  CHECK(run({"genpow", "(1+x ; x+x^2)", "2", "--precision", "5", "--mode", "star"}).out == expected);
  CHECK(run({"genpow", "(1+x ; x+x^2)", "2", "--precision", "5", "--mode", "binomial"}).out ==
        expected);
  CHECK(run({"genpow", "(1+x ; x+x^2)", "2", "--precision", "5", "--mode", "rtimes"}).out ==
        "(1 + 2*x + 2*x^2 + x^3 ; x + 2*x^2 + 2*x^3 + x^4)\n");
  const auto negative = run({"genpow", "(1+x ; x+x^2)", "-1", "--precision", "5"});
  CHECK(negative.code == 0);
  CHECK(negative.out == "(1 - x + x^3 ; x - x^2 + x^4)\n");
  CHECK(run({"genpow", "(1+x ; x+x^2)", "1/2", "--mode", "rtimes"}).code == 3);
}

TEST_CASE("other algebra commands")
{
  CHECK(run({"eval", "x + x + O(x^3)"}).out == "2*x + O(x^3)\n");
  CHECK(run({"eval", "1 - x"}).out == "1 - x + O(x^16)\n");
  CHECK(run({"compose", "1 + x + x^2", "2*x", "--precision", "3"}).out == "1 + 2*x + 4*x^2 + O(x^3)\n");
  CHECK(run({"rtimes", "(x ; 0)", "(1 ; 2*x)", "--precision", "3"}).out == "(2*x ; 0)\n");
  CHECK(run({"inverse", "(1+x ; x+x^2)", "--precision", "5"}).out ==
        "(1 - x + 2*x^2 - 5*x^3 + 14*x^4 ; x - x^2 + 2*x^3 - 5*x^4)\n");
  CHECK(run({"phi", "(x ; x^2)", "1 + x", "--precision", "4"}).out == "(1 + x ; x + x^2)\n");
  CHECK(run({"star", "exp", "x", "--base", "(x ; 0)", "--precision", "4"}).out ==
        "[1, 1, 1/2, 1/6] over (x ; 0) + O(n^4)\n");
  CHECK(run({"star", "realize", "1 + x", "--base", "(x ; x^2)", "--precision", "3"}).out ==
        "(1 + x ; x + x^2)\n");
}

TEST_CASE("matrix formats")
{
  CHECK(run({"matrix", "(1 ; x)", "3", "--format", "csv"}).out == "1,0,0\n0,1,0\n0,0,1\n");
  CHECK(run({"matrix", "(1 ; x)", "2"}).out == "1 0\n0 1\n");
  const auto j = nlohmann::json::parse(run({"matrix", "(1 ; x)", "2", "--format", "json"}).out);
  CHECK(j["n"] == 2);
  CHECK(j["rows"][1][1] == "1");
}

TEST_CASE("exit codes")
{
  const auto parse = run({"eval", "x^5", "--precision", "4"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("ParseError") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "x", "--format", "csv"}).code == 2);
  CHECK(run({"check", "nope"}).code == 2);
  const auto domain = run({"inverse", "(2 ; x)"});
  CHECK(domain.code == 3);
  CHECK(domain.err.find("NotGroupElement") != std::string::npos);
  CHECK(domain.err.find("(2 ; x)") != std::string::npos);
  CHECK(run({"compose", "1", "1 + x", "--precision", "3"}).code == 3);
}

TEST_CASE("check")
{
  const auto r = run({"check", "counterexample"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS counterexample") != std::string::npos);
  const auto j = run({"check", "power", "--trials", "5", "--seed", "9", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)[0]["passed"] == true);
}
