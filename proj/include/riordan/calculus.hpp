#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "riordan/riordan.hpp"

namespace riordan {

/// Smallest n0 >= 1 such that every power base^{x|n}, n >= n0, vanishes
/// modulo x^n_precision in both components.
///
/// Uses the analytic bounds nu(first) >= nu(mu+) (2^n - 1) and
/// nu(second) >= 2^n, plus the nilpotent cases mu+ = 0 or sigma+ = 0, so it
/// stays sound when intermediate powers are exactly zero. n_precision must
/// not exceed the precision of base.
std::size_t term_bound(const IdealElement& base, std::size_t n_precision);

/// The formal calculus at a fixed ideal point: f |-> sum_n f_n base^{x|n}.
///
/// Powers base^{x|n} for n < term_bound are computed once at construction;
/// afterwards the map is immutable and may be applied concurrently.
class PhiMap
{
public:
  explicit PhiMap(IdealElement base);

  const IdealElement& base() const { return base_; }
  std::size_t precision() const { return base_.precision(); }
  std::size_t term_bound() const { return powers_.size(); }
  /// base^{x|0}, ..., base^{x|(term_bound-1)}
  std::span<const RiordanElement> powers() const { return powers_; }

  /// Throws PrecisionMismatch when f and base have different precision.
  RiordanElement operator()(const Series& f) const;

private:
  IdealElement base_;
  std::vector<RiordanElement> powers_;
};

RiordanElement phi_apply(const IdealElement& base, const Series& f);

/// phi(x^m g) == phi(g) x| base^{x|m}
bool phi_shift_identity_check(const IdealElement& base, const Series& g, std::size_t m);

/// sum_n C(lambda, n) p^{x|n} where g = (1, x) + p. Always lands in the
/// Riordan group, but for integer lambda it is NOT the x|-power of g.
GroupElement rtimes_binomial_power(const GroupElement& g, const Rational& lambda);

/// Reproduces the worked counterexample: for g = (1 + x, x + x^2),
///   g^{x|2}            = (1 + 2x + 2x^2 + x^3, x + 2x^2 + 2x^3 + x^4)
///   binomial power, 2  = (1 + 2x + x^3,        x + 2x^2 + x^4)
/// Returns true iff both values match and differ from each other. Needs n >= 5.
bool counterexample_check(std::size_t n);

} // namespace riordan
