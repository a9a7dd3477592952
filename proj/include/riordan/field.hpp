#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>

namespace riordan {

/// Coefficient type of a series: a commutative field with exact equality.
template <class F>
concept Field = std::regular<F> && requires(F a, F b, long n) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  F(n);
};

/// Prime field Z/pZ. Only meant for exercising the series kernel over a
/// second coefficient type; exp/log need characteristic zero (or p > N).
template <std::uint32_t P>
class ModP
{
public:
  constexpr ModP() = default;
  constexpr ModP(long n)
      : v_(static_cast<std::uint32_t>(((n % static_cast<long>(P)) + P) % P))
  {}

  constexpr std::uint32_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr ModP operator+(ModP a, ModP b) { return from_raw((a.v_ + b.v_) % P); }
  friend constexpr ModP operator-(ModP a, ModP b) { return from_raw((a.v_ + P - b.v_) % P); }
  friend constexpr ModP operator*(ModP a, ModP b)
  {
    return from_raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % P));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  constexpr ModP operator-() const { return from_raw((P - v_) % P); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }
  friend constexpr bool operator==(ModP, ModP) = default;

  ModP inverse() const
  {
    if (v_ == 0)
      throw std::domain_error("division by zero in prime field");
    // Fermat: a^(p-2)
    ModP result(1), base = *this;
    for (std::uint32_t e = P - 2; e; e >>= 1) {
      if (e & 1u)
        result = result * base;
      base = base * base;
    }
    return result;
  }

private:
  static constexpr ModP from_raw(std::uint32_t v)
  {
    ModP r;
    r.v_ = v;
    return r;
  }
  std::uint32_t v_ = 0;
};

} // namespace riordan
