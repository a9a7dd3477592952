#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "riordan/matrix.hpp"
#include "riordan/text.hpp"

using namespace riordan;

namespace {

RiordanElement pascal(std::size_t n)
{
  const Series geometric = mul_inverse(Series::one(n) - Series::x(n));
  return RiordanElement(geometric, Series::x(n) * geometric);
}

long binomial(long n, long k)
{
  long r = 1;
  for (long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

}

TEST_CASE("Pascal's triangle")
{
  const RiordanMatrix m = to_matrix(pascal(5), 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(m(i, j) == Rational(j <= i ? binomial(i, j) : 0));
  CHECK(m.is_lower_unitriangular());
  CHECK(m.leading(2) == to_matrix(pascal(5), 2));
}

TEST_CASE("matrix size is bounded by precision")
{
  CHECK_THROWS_AS(to_matrix(identity(3), 4), Error);
}

TEST_CASE("products follow the frozen order")
{
  const RiordanElement a = parse_pair("(1 + x ; x + x^2)", 6);
  const RiordanElement b = pascal(6);
  CHECK(matmul(to_matrix(a, 6), to_matrix(b, 6)) == to_matrix(rtimes(b, a), 6));
  CHECK(matrix_correspondence(a, b, 6) == kMatrixOrder);
  CHECK(correspondence_name(kMatrixOrder) == "anti-homomorphism");
  CHECK(rtimes_matrix_check(a, b, 6));
}

TEST_CASE("exponential generating function")
{
  CHECK(egf_identity_check(pascal(6), 6));
  CHECK(egf_identity_check(parse_pair("(1 + x ; x + x^2)", 6), 6));
  // mu exp(y sigma) for (1, x): coefficient of x^i y^j is [i = j] / j!
  const std::vector<Rational> table = egf_table(identity(4), 4);
  CHECK(table[3 * 4 + 3] == Rational(1, 6));
  CHECK(table[3 * 4 + 2].is_zero());
}

TEST_CASE("csv and json")
{
  CHECK(to_csv(to_matrix(identity(3), 3)) == "1,0,0\n0,1,0\n0,0,1\n");
  const RiordanElement a = parse_pair("(1/2 ; x)", 2);
  CHECK(to_csv(to_matrix(a, 2)) == "1/2,0\n0,1/2\n");
  const auto doc = nlohmann::json::parse(to_json(to_matrix(a, 2), a));
  CHECK(doc["n"] == 2);
  CHECK(doc["rows"][0][0] == "1/2");
  CHECK(doc["mu"] == format_series(a.mu()));
}
