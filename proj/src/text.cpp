#include "riordan/text.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

namespace riordan {

namespace {

void append_term(std::string& out, const Rational& c, std::size_t k)
{
  const bool negative = c.sign() < 0;
  const Rational magnitude = negative ? -c : c;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (k == 0) {
    out += magnitude.str();
    return;
  }
  if (!magnitude.is_one())
    out += magnitude.str() + "*";
  out += "x";
  if (k > 1)
    out += "^" + std::to_string(k);
}

} // namespace

std::string format_series_body(const Series& s)
{
  std::string out;
  for (std::size_t k = 0; k < s.precision(); ++k)
    if (!s.coeff(k).is_zero())
      append_term(out, s.coeff(k), k);
  return out.empty() ? "0" : out;
}

std::string format_series(const Series& s)
{
  return format_series_body(s) + " + O(x^" + std::to_string(s.precision()) + ")";
}

std::string format_pair(const RiordanElement& a)
{
  return "(" + format_series_body(a.mu()) + " ; " + format_series_body(a.sigma()) + ")";
}

std::string format_cauchy(const CauchyElement& e)
{
  std::string out = "[";
  for (std::size_t k = 0; k < e.precision(); ++k) {
    if (k)
      out += ", ";
    out += e.rep().coeff(k).str();
  }
  out += "] over " + format_pair(e.base().element()) + " + O(n^" +
         std::to_string(e.precision()) + ")";
  return out;
}

namespace {

struct Term
{
  Rational coeff;
  std::size_t exponent;
  std::size_t offset;
};

struct ParsedSeries
{
  std::vector<Term> terms;
  std::optional<std::size_t> precision;
  std::size_t offset;
};

/// Recursive-descent reader over the series grammar. `stops` lists the
/// characters that may legally end a series (end of input is always one).
class Reader
{
public:
  explicit Reader(std::string_view src) : src_(src) {}

  std::size_t pos() const { return pos_; }
  bool at_end() { return skip_ws(), pos_ >= src_.size(); }

  char peek()
  {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c)
  {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, std::vector<std::string> expected)
  {
    if (!accept(c))
      fail(std::move(expected), describe_here());
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail)
  {
    throw ParseError(pos_, std::move(expected), detail);
  }

  std::string describe_here()
  {
    if (at_end())
      return "unexpected end of input";
    return std::string("unexpected '") + src_[pos_] + "'";
  }

  std::optional<std::string> digits()
  {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (start == pos_)
      return std::nullopt;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::size_t natural(const char* what)
  {
    std::size_t at = (skip_ws(), pos_);
    auto d = digits();
    if (!d)
      fail({what}, describe_here());
    try {
      std::size_t idx = 0;
      unsigned long long v = std::stoull(*d, &idx);
      if (v > std::numeric_limits<std::size_t>::max() / 4)
        throw std::out_of_range("too large");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ParseError(at, {what}, "number out of range");
    }
  }

  /// coeff := int ('/' posint)?, returned unsigned.
  Rational coefficient()
  {
    std::size_t at = (skip_ws(), pos_);
    auto num = digits();
    if (!num)
      fail({"integer", "'x'"}, describe_here());
    std::string text = *num;
    if (accept('/')) {
      auto den = digits();
      if (!den)
        fail({"positive integer"}, describe_here());
      if (den->find_first_not_of('0') == std::string::npos)
        throw ParseError(at, {"positive integer"}, "zero denominator");
      text += "/" + *den;
    }
    return Rational::parse(text);
  }

  /// 'x' ('^' nat)?, with the 'x' already consumed.
  std::size_t power_suffix()
  {
    if (accept('^'))
      return natural("natural number");
    return 1;
  }

  /// O(x^N), with the 'O' already consumed.
  std::size_t big_o()
  {
    expect('(', {"'('"});
    expect('x', {"'x'"});
    std::size_t n = 1;
    if (accept('^'))
      n = natural("natural number");
    expect(')', {"')'"});
    return n;
  }

  Term term(bool negative)
  {
    std::size_t at = (skip_ws(), pos_);
    if (accept('x'))
      return {Rational(negative ? -1 : 1), power_suffix(), at};
    Rational c = coefficient();
    if (negative)
      c = -c;
    if (accept('*')) {
      expect('x', {"'x'"});
      return {c, power_suffix(), at};
    }
    if (accept('x'))
      return {c, power_suffix(), at};
    return {c, 0, at};
  }

  ParsedSeries series(std::string_view stops)
  {
    ParsedSeries out{{}, std::nullopt, (skip_ws(), pos_)};
    bool negative = false;
    if (peek() == 'O') {
      ++pos_;
      out.precision = big_o();
      return finish(out, stops);
    }
    if (!accept('+'))
      negative = accept('-');
    out.terms.push_back(term(negative));
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        if (c == '+' && accept('O')) {
          out.precision = big_o();
          return finish(out, stops);
        }
        out.terms.push_back(term(c == '-'));
        continue;
      }
      return finish(out, stops);
    }
  }

private:
  ParsedSeries finish(ParsedSeries& out, std::string_view stops)
  {
    char c = peek();
    if (c == '\0' && at_end())
      return out;
    if (stops.find(c) != std::string_view::npos)
      return out;
    std::vector<std::string> expected{"'+'", "'-'"};
    for (char s : stops)
      expected.push_back(std::string("'") + s + "'");
    if (stops.empty())
      expected.push_back("end of input");
    fail(std::move(expected), describe_here());
  }

  void skip_ws()
  {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

Series build(const ParsedSeries& parsed, std::optional<std::size_t> default_precision)
{
  const std::optional<std::size_t> n = parsed.precision ? parsed.precision : default_precision;
  if (!n)
    throw ParseError(parsed.offset, {"O(x^N) term"}, "no precision given");
  if (*n == 0)
    throw ParseError(parsed.offset, {}, "precision must be at least 1");
  std::vector<Rational> coeffs(*n);
  for (const Term& t : parsed.terms) {
    if (t.exponent >= *n)
      throw ParseError(t.offset, {},
                       "exponent " + std::to_string(t.exponent) + " is not below precision " +
                           std::to_string(*n));
    coeffs[t.exponent] += t.coeff;
  }
  return Series(std::move(coeffs));
}

} // namespace

Series parse_series(std::string_view text, std::optional<std::size_t> default_precision)
{
  Reader reader(text);
  ParsedSeries parsed = reader.series("");
  return build(parsed, default_precision);
}

RiordanElement parse_pair(std::string_view text, std::optional<std::size_t> default_precision)
{
  Reader reader(text);
  reader.expect('(', {"'('"});
  ParsedSeries mu = reader.series(";");
  reader.expect(';', {"';'"});
  ParsedSeries sigma = reader.series(")");
  reader.expect(')', {"')'"});
  if (!reader.at_end())
    reader.fail({"end of input"}, reader.describe_here());

  Series mu_series = build(mu, default_precision);
  Series sigma_series = build(sigma, default_precision);
  if (mu_series.precision() != sigma_series.precision())
    throw ParseError(sigma.offset, {},
                     "component precisions differ (" + std::to_string(mu_series.precision()) +
                         " and " + std::to_string(sigma_series.precision()) + ")");
  return RiordanElement(std::move(mu_series), std::move(sigma_series));
}

} // namespace riordan
