#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "riordan/calculus.hpp"
#include "riordan/checks.hpp"

using namespace riordan;

namespace {

struct Criterion
{
  int id;
  std::string suite;
  std::string title;
  std::size_t trials;
  std::size_t precision;
  double limit_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "counterexample", "x|-square vs binomial x|-power of (1+x, x+x^2)", 1, 5, 0.001},
    {2, "valuation", "valuation laws", 500, 16, 1.0},
    {3, "near-algebra", "near-algebra axioms", 200, 12, 2.0},
    {4, "power", "closed-form x|-power", 100, 12, 2.0},
    {5, "calculus", "formal calculus Phi", 200, 12, 5.0},
    {6, "cauchy", "Cauchy algebra", 50, 10, 5.0},
    {7, "matrix", "Riordan matrices", 100, 8, 5.0},
    {8, "group", "Riordan group", 200, 12, 3.0},
    {9, "truncation", "truncation stability, N=16 to N=8", 100, 16, 5.0},
};

}

int main()
{
  using clock = std::chrono::steady_clock;
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    bool exact = true;
    double seconds = 0;
    std::string detail;
    if (c.id == 1) {
      // warm-up
      (void)counterexample_check(c.precision);
      const auto start = clock::now();
      exact = counterexample_check(c.precision);
      seconds = std::chrono::duration<double>(clock::now() - start).count();
    } else {
      const checks::SuiteReport report = checks::run_suite(c.suite, {0, c.trials, c.precision});
      seconds = report.seconds;
      exact = report.passed();
      for (const auto& p : report.properties)
        if (!p.passed)
          detail += "\n    " + p.name + ": " + p.message + " [" + p.counterexample + "]";
    }
    const bool pass = exact && seconds < c.limit_seconds;
    failures += !pass;
    std::printf("%s criterion %d: %s (N=%zu, %zu trials, tolerance exact) %.6f s < %.3f s%s\n",
                pass ? "PASS" : "FAIL", c.id, c.title.c_str(), c.precision, c.trials, seconds,
                c.limit_seconds, detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(kCriteria.size()) - failures,
              kCriteria.size());
  return failures == 0 ? 0 : 1;
}
