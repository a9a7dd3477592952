#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/checks.hpp"

using namespace riordan;
using namespace riordan::checks;

TEST_CASE("generators respect their contracts")
{
  Generator gen(7);
  for (int i = 0; i < 200; ++i) {
    CHECK(gen.series_with_valuation(8, 3).valuation() == Valuation::exact(3));
    CHECK(gen.unit_series(8).coeff(0) != Rational(0));
    CHECK(gen.unipotent_series(8).coeff(0) == Rational(1));
    CHECK(gen.m_series(8).coeff(0).is_zero());
    CHECK(is_ideal(gen.ideal(8).element()));
    CHECK(is_group(gen.group(8).element()));
    CHECK_FALSE(gen.nonzero_ideal(8).element() == zero_element(8));
  }
}

TEST_CASE("generators are reproducible from the seed")
{
  Generator a(42), b(42);
  for (int i = 0; i < 20; ++i)
    CHECK(a.pair(6) == b.pair(6));
}

TEST_CASE("a false law is reported with a shrunk counterexample")
{
  const Property commutes{
      "x| is commutative",
      [](Generator& g, std::size_t n) {
        Sample s;
        s.add("a", g.pair(n)).add("b", g.pair(n));
        return s;
      },
      [](const Sample& s) {
        return rtimes(s.pair_at(0), s.pair_at(2)) == rtimes(s.pair_at(2), s.pair_at(0));
      }};
  Generator gen(1);
  const PropertyResult r = run_property(commutes, gen, 200, 6);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.counterexample.empty());
  CHECK(r.counterexample.find("a.mu") != std::string::npos);
}

TEST_CASE("exceptions count as failures")
{
  const Property throws{"throws",
                        [](Generator&, std::size_t n) {
                          Sample s;
                          s.add("f", Series::zero(n));
                          return s;
                        },
                        [](const Sample& s) { return mul_inverse(s.at(0)).is_zero(); }};
  Generator gen(0);
  const PropertyResult r = run_property(throws, gen, 5, 4);
  CHECK_FALSE(r.passed);
  CHECK(r.message.find("NotAUnit") != std::string::npos);
}

TEST_CASE("suite registry")
{
  REQUIRE(suites().size() >= 9);
  CHECK(suites()[0].name == "counterexample");
  CHECK(find_suite("matrix").has_value());
  CHECK_FALSE(find_suite("nope").has_value());
  for (const auto& info : suites())
    CHECK_FALSE(suite_properties(info.name, info.default_precision).empty());
}

TEST_CASE("a suite runs with a small budget")
{
  const SuiteReport report = run_suite("near-algebra", {3, 10, 6});
  CHECK(report.passed());
  CHECK(report.properties.size() == suite_properties("near-algebra", 6).size());
}
