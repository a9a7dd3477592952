#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "riordan/riordan.hpp"

namespace riordan {

/// Deterministic random inputs for the property suites. Only raw 64-bit
/// draws from mt19937_64 are used, so a seed gives the same stream on every
/// platform.
class Generator
{
public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::size_t below(std::size_t n) { return n ? static_cast<std::size_t>(next() % n) : 0; }
  /// Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(hi - lo + 1)); }
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

  /// Small rational: numerator in [-6, 6], denominator in [1, 4].
  Rational rational();
  Rational nonzero_rational();

  /// Random series; with probability 1/16 it is zero. Valuations are biased
  /// toward small values so that products stay visible below x^N.
  Series series(std::size_t n, std::size_t min_valuation = 0);
  /// Series with exactly valuation v (v < n), random tail.
  Series series_with_valuation(std::size_t n, std::size_t v);
  /// Constant term nonzero.
  Series unit_series(std::size_t n);
  /// Constant term exactly 1.
  Series unipotent_series(std::size_t n);
  /// Zero constant term (element of M).
  Series m_series(std::size_t n) { return series(n, 1); }

  RiordanElement pair(std::size_t n);
  /// Mixes the degenerate points (0,0), (mu+,0), (0,sigma+) in with
  /// generic ideal elements.
  IdealElement ideal(std::size_t n);
  /// Ideal element with at least one nonzero component.
  IdealElement nonzero_ideal(std::size_t n);
  GroupElement group(std::size_t n);

private:
  std::mt19937_64 engine_;
};

} // namespace riordan
