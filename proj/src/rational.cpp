#include "riordan/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace riordan {

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational::Rational(long num, long den)
{
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v))
{
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative)
    n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const
{
  return value_.get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
  if (o.is_zero())
    throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const
{
  return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
  return os << r.str();
}

} // namespace riordan
