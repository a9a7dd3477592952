#pragma once

#include <cstddef>

#include "riordan/series.hpp"

namespace riordan {

/// A pair (mu, sigma) in K[[x]] x M, the carrier of the semi-direct
/// product. sigma must have zero constant term; this is checked once at
/// construction and assumed everywhere else.
class RiordanElement
{
public:
  RiordanElement(Series mu, Series sigma);

  const Series& mu() const { return mu_; }
  const Series& sigma() const { return sigma_; }
  std::size_t precision() const { return mu_.precision(); }

  RiordanElement truncate(std::size_t n) const;

  RiordanElement& operator+=(const RiordanElement& o);
  RiordanElement& operator-=(const RiordanElement& o);
  friend RiordanElement operator+(RiordanElement a, const RiordanElement& b) { return a += b; }
  friend RiordanElement operator-(RiordanElement a, const RiordanElement& b) { return a -= b; }
  friend RiordanElement operator*(const Rational& alpha, const RiordanElement& a)
  {
    return RiordanElement(alpha * a.mu_, alpha * a.sigma_);
  }

  friend bool operator==(const RiordanElement&, const RiordanElement&) = default;

private:
  Series mu_;
  Series sigma_;
};

inline RiordanElement add(const RiordanElement& a, const RiordanElement& b) { return a + b; }
inline RiordanElement scale(const Rational& alpha, const RiordanElement& a) { return alpha * a; }

/// (1, x)
RiordanElement identity(std::size_t n);
/// (0, 0), the two-sided zero of the product.
RiordanElement zero_element(std::size_t n);

/// (mu1, sigma1) x| (mu2, sigma2) = ((mu1 o sigma2) mu2, sigma1 o sigma2)
RiordanElement rtimes(const RiordanElement& a, const RiordanElement& b);

/// a^{x|n} through the closed form
///   (prod_{k=1..n} mu o sigma^{o(k-1)}, sigma^{on}),
/// with a^{x|0} = (1, x).
RiordanElement rtimes_power(const RiordanElement& a, std::size_t n);

/// nu(mu) >= 1 and nu(sigma) >= 2.
bool is_ideal(const RiordanElement& a);
/// mu(0) = 1 and <sigma, x> = 1.
bool is_group(const RiordanElement& a);
/// mu(0) != 0 and <sigma, x> != 0: membership in U(K[[x]]) x| U(M).
bool is_unit(const RiordanElement& a);

/// Element of the two-sided ideal K[[x]]+ x| M+.
class IdealElement
{
public:
  /// Throws NotInIdeal.
  explicit IdealElement(RiordanElement e);

  const RiordanElement& element() const { return e_; }
  const Series& mu() const { return e_.mu(); }
  const Series& sigma() const { return e_.sigma(); }
  std::size_t precision() const { return e_.precision(); }

  friend bool operator==(const IdealElement&, const IdealElement&) = default;

private:
  RiordanElement e_;
};

/// Element of the Riordan group UM x| US.
class GroupElement
{
public:
  /// Throws NotGroupElement.
  explicit GroupElement(RiordanElement e);

  const RiordanElement& element() const { return e_; }
  const Series& mu() const { return e_.mu(); }
  const Series& sigma() const { return e_.sigma(); }
  std::size_t precision() const { return e_.precision(); }

  /// The ideal part g - (1, x).
  IdealElement ideal_part() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
  RiordanElement e_;
};

/// (1 / (mu o s), s) with s the compositional inverse of sigma.
GroupElement group_inverse(const GroupElement& a);

/// Both a x| p and p x| a stay in the ideal.
bool ideal_closure_check(const RiordanElement& a, const IdealElement& p);

} // namespace riordan
