#pragma once

#include <cstddef>
#include <string>

namespace riordan {

/// Order of vanishing of a truncated series.
///
/// A series known modulo x^N either has a first nonzero coefficient below N
/// (Exact) or all of its stored coefficients vanish, in which case its true
/// valuation is some unknown value >= N, possibly infinite (AtLeast(N)).
class Valuation
{
public:
  static Valuation exact(std::size_t k) { return Valuation(true, k); }
  static Valuation at_least(std::size_t n) { return Valuation(false, n); }

  bool is_exact() const { return exact_; }
  /// k for Exact(k), N for AtLeast(N).
  std::size_t value() const { return value_; }

  /// True when the valuation is known to be >= m.
  bool known_at_least(std::size_t m) const { return value_ >= m; }

  /// The valuation seen at the coarser precision n.
  Valuation truncate(std::size_t n) const
  {
    return exact_ && value_ < n ? exact(value_) : at_least(n);
  }

  std::string str() const
  {
    return (exact_ ? "Exact(" : "AtLeast(") + std::to_string(value_) + ")";
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;

private:
  Valuation(bool exact, std::size_t v) : exact_(exact), value_(v) {}
  bool exact_;
  std::size_t value_;
};

/// nu(f) + nu(g) at precision n, saturating at AtLeast(n). Over a field this
/// is exactly nu(fg).
inline Valuation saturating_sum(Valuation a, Valuation b, std::size_t n)
{
  if (a.is_exact() && b.is_exact() && a.value() + b.value() < n)
    return Valuation::exact(a.value() + b.value());
  return Valuation::at_least(n);
}

/// nu(f) * nu(sigma) at precision n. A unit f keeps its constant term under
/// any substitution, so Exact(0) absorbs even an AtLeast right operand.
inline Valuation saturating_product(Valuation a, Valuation b, std::size_t n)
{
  if (a.is_exact() && a.value() == 0)
    return Valuation::exact(0);
  if (a.is_exact() && b.is_exact() && a.value() * b.value() < n)
    return Valuation::exact(a.value() * b.value());
  return Valuation::at_least(n);
}

} // namespace riordan
