#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "riordan/cauchy.hpp"
#include "riordan/riordan.hpp"
#include "riordan/series.hpp"

// Text forms.
//
//   series := term (('+'|'-') term)* ['+' 'O(x^' N ')']
//   term   := coeff | coeff '*'? 'x' ('^' nat)? | 'x' ('^' nat)?
//   coeff  := int ('/' posint)?
//   pair   := '(' series ';' series ')'
//
// A leading sign is accepted on the first term. Whitespace is free between
// tokens. Repeated powers are summed.

namespace riordan {

/// "1 + 2*x + 2*x^2 + x^3 + O(x^4)"
std::string format_series(const Series& s);
/// Same without the O-term; "0" for the zero series.
std::string format_series_body(const Series& s);
/// "(1 + x ; x + x^2)"
std::string format_pair(const RiordanElement& a);
/// "[1, 1/2, 0] over (x ; x^2) + O(n^3)"
std::string format_cauchy(const CauchyElement& e);

/// Parses a series. An explicit O(x^N) term fixes the precision; otherwise
/// default_precision is used. Exponents at or beyond the precision are a
/// ParseError, never silently dropped.
Series parse_series(std::string_view text, std::optional<std::size_t> default_precision = {});

/// Parses "(mu ; sigma)". Both components must end up at the same precision.
RiordanElement parse_pair(std::string_view text,
                          std::optional<std::size_t> default_precision = {});

} // namespace riordan
