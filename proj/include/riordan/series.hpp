#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/field.hpp"
#include "riordan/rational.hpp"
#include "riordan/valuation.hpp"

namespace riordan {

/// Formal power series over F known modulo x^N.
///
/// Every series carries its own precision N >= 1 and stores exactly N dense
/// coefficients. Binary operations require equal precision and throw
/// PrecisionMismatch otherwise.
template <Field F>
class BasicSeries
{
public:
  using value_type = F;

  explicit BasicSeries(std::vector<F> coeffs) : coeffs_(std::move(coeffs))
  {
    if (coeffs_.empty())
      throw Error(ErrorKind::InvalidPrecision, "series precision must be at least 1");
  }

  /// Coefficients c_0..c_{k-1}, zero-padded up to precision n.
  BasicSeries(std::vector<F> coeffs, std::size_t n) : coeffs_(std::move(coeffs))
  {
    if (n == 0)
      throw Error(ErrorKind::InvalidPrecision, "series precision must be at least 1");
    if (coeffs_.size() > n)
      throw Error(ErrorKind::CoefficientOutOfRange,
                  std::to_string(coeffs_.size()) + " coefficients do not fit precision " +
                      std::to_string(n));
    coeffs_.resize(n, F(0));
  }

  static BasicSeries zero(std::size_t n) { return BasicSeries({}, n); }
  static BasicSeries one(std::size_t n) { return monomial(F(1), 0, n); }

  static BasicSeries x(std::size_t n)
  {
    if (n < 2)
      throw Error(ErrorKind::InvalidPrecision, "x needs precision at least 2");
    return monomial(F(1), 1, n);
  }

  static BasicSeries monomial(F c, std::size_t k, std::size_t n)
  {
    BasicSeries s = zero(n);
    if (k >= n)
      throw Error(ErrorKind::CoefficientOutOfRange,
                  "monomial degree " + std::to_string(k) + " not below precision " +
                      std::to_string(n));
    s.coeffs_[k] = std::move(c);
    return s;
  }

  std::size_t precision() const { return coeffs_.size(); }
  std::span<const F> coeffs() const { return coeffs_; }

  /// <f, x^n>; reading at or beyond the precision is an error, not zero.
  const F& coeff(std::size_t n) const
  {
    if (n >= coeffs_.size())
      throw Error(ErrorKind::CoefficientOutOfRange,
                  "coefficient " + std::to_string(n) + " requested at precision " +
                      std::to_string(coeffs_.size()));
    return coeffs_[n];
  }
  const F& operator[](std::size_t n) const { return coeff(n); }

  bool is_zero() const
  {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const F& c) { return c.is_zero(); });
  }

  Valuation valuation() const
  {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!coeffs_[k].is_zero())
        return Valuation::exact(k);
    return Valuation::at_least(coeffs_.size());
  }

  /// Same series seen modulo x^n, n <= precision.
  BasicSeries truncate(std::size_t n) const
  {
    if (n == 0 || n > precision())
      throw Error(ErrorKind::InvalidPrecision,
                  "cannot truncate precision " + std::to_string(precision()) + " to " +
                      std::to_string(n));
    return BasicSeries(std::vector<F>(coeffs_.begin(), coeffs_.begin() + n));
  }

  BasicSeries& operator+=(const BasicSeries& o)
  {
    require_same_precision(*this, o, "add");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  BasicSeries& operator-=(const BasicSeries& o)
  {
    require_same_precision(*this, o, "subtract");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  BasicSeries& operator*=(const F& alpha)
  {
    for (auto& c : coeffs_)
      c *= alpha;
    return *this;
  }

  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
  friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }
  friend BasicSeries operator*(const F& alpha, BasicSeries f) { return f *= alpha; }
  BasicSeries operator-() const
  {
    BasicSeries r = *this;
    for (auto& c : r.coeffs_)
      c = -c;
    return r;
  }

  /// Cauchy product modulo x^N.
  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b)
  {
    require_same_precision(a, b, "multiply");
    const std::size_t n = a.precision();
    std::vector<F> out(n, F(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i].is_zero())
        continue;
      for (std::size_t j = 0; i + j < n; ++j)
        if (!b.coeffs_[j].is_zero())
          out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BasicSeries(std::move(out));
  }

  friend bool operator==(const BasicSeries&, const BasicSeries&) = default;

  static void require_same_precision(const BasicSeries& a, const BasicSeries& b, const char* op)
  {
    if (a.precision() != b.precision())
      throw Error(ErrorKind::PrecisionMismatch,
                  std::string(op) + ": precisions " + std::to_string(a.precision()) + " and " +
                      std::to_string(b.precision()) + " differ");
  }

private:
  std::vector<F> coeffs_;
};

using Series = BasicSeries<Rational>;

template <Field F>
BasicSeries<F> add(const BasicSeries<F>& f, const BasicSeries<F>& g)
{
  return f + g;
}

template <Field F>
BasicSeries<F> scale(const F& alpha, const BasicSeries<F>& f)
{
  return alpha * f;
}

template <Field F>
BasicSeries<F> mul(const BasicSeries<F>& f, const BasicSeries<F>& g)
{
  return f * g;
}

template <Field F>
Valuation valuation(const BasicSeries<F>& f)
{
  return f.valuation();
}

/// f^n under the Cauchy product; f^0 = 1.
template <Field F>
BasicSeries<F> mul_power(const BasicSeries<F>& f, std::size_t n)
{
  BasicSeries<F> result = BasicSeries<F>::one(f.precision());
  BasicSeries<F> base = f;
  for (; n; n >>= 1) {
    if (n & 1u)
      result = result * base;
    if (n > 1)
      base = base * base;
  }
  return result;
}

/// f o sigma = sum f_n sigma^n, for sigma in M (zero constant term).
///
/// Horner accumulation. Since nu(sigma^n) >= n * nu(sigma), only the
/// coefficients f_n with n * nu(sigma) < N can contribute.
template <Field F>
BasicSeries<F> substitute(const BasicSeries<F>& f, const BasicSeries<F>& sigma)
{
  BasicSeries<F>::require_same_precision(f, sigma, "substitute");
  if (!sigma.coeff(0).is_zero())
    throw Error(ErrorKind::SubstitutionOutsideIdeal,
                "substitute: right operand has a nonzero constant term");
  const std::size_t n = f.precision();
  const Valuation v = sigma.valuation();
  if (!v.is_exact())
    return BasicSeries<F>::monomial(f.coeff(0), 0, n);

  std::size_t top = std::min(n - 1, (n - 1) / v.value());
  while (top > 0 && f.coeff(top).is_zero())
    --top;
  BasicSeries<F> acc = BasicSeries<F>::monomial(f.coeff(top), 0, n);
  for (std::size_t k = top; k-- > 0;) {
    acc = acc * sigma;
    acc += BasicSeries<F>::monomial(f.coeff(k), 0, n);
  }
  return acc;
}

/// sigma o ... o sigma (n times); sigma^{o0} = x.
template <Field F>
BasicSeries<F> comp_power(const BasicSeries<F>& sigma, std::size_t n)
{
  BasicSeries<F> result = BasicSeries<F>::x(sigma.precision());
  for (std::size_t k = 0; k < n; ++k)
    result = substitute(result, sigma);
  return result;
}

template <Field F>
BasicSeries<F> mul_inverse(const BasicSeries<F>& f)
{
  if (f.coeff(0).is_zero())
    throw Error(ErrorKind::NotAUnit, "mul_inverse: constant term is zero");
  const std::size_t n = f.precision();
  const F inv0 = F(1) / f.coeff(0);
  std::vector<F> g(n, F(0));
  g[0] = inv0;
  for (std::size_t m = 1; m < n; ++m) {
    F acc(0);
    for (std::size_t k = 1; k <= m; ++k)
      if (!f.coeff(k).is_zero())
        acc += f.coeff(k) * g[m - k];
    g[m] = -(acc * inv0);
  }
  return BasicSeries<F>(std::move(g));
}

/// Compositional inverse tau of sigma, with sigma o tau = tau o sigma = x.
///
/// Solves sigma o tau = x coefficient by coefficient. With P[j][m] = <tau^j, x^m>,
/// <sigma o tau, x^k> = sigma_1 tau_k + sum_{j>=2} sigma_j P[j][k], and every
/// P[j][k] with j >= 2 only involves tau_1..tau_{k-1}.
template <Field F>
BasicSeries<F> comp_inverse(const BasicSeries<F>& sigma)
{
  const std::size_t n = sigma.precision();
  if (n < 2)
    throw Error(ErrorKind::InvalidPrecision, "comp_inverse needs precision at least 2");
  if (!sigma.coeff(0).is_zero())
    throw Error(ErrorKind::SubstitutionOutsideIdeal,
                "comp_inverse: series has a nonzero constant term");
  if (sigma.coeff(1).is_zero())
    throw Error(ErrorKind::NotCompositionallyInvertible,
                "comp_inverse: coefficient of x is zero");

  const F inv1 = F(1) / sigma.coeff(1);
  std::vector<F> tau(n, F(0));
  // power[j][m] for 1 <= j < n, 0 <= m < n
  std::vector<std::vector<F>> power(n, std::vector<F>(n, F(0)));
  for (std::size_t k = 1; k < n; ++k) {
    F rest(0);
    for (std::size_t j = 2; j <= k; ++j) {
      F p(0);
      for (std::size_t i = 1; i + j - 1 <= k; ++i)
        if (!tau[i].is_zero())
          p += tau[i] * power[j - 1][k - i];
      power[j][k] = p;
      if (!sigma.coeff(j).is_zero())
        rest += sigma.coeff(j) * p;
    }
    tau[k] = ((k == 1 ? F(1) : F(0)) - rest) * inv1;
    power[1][k] = tau[k];
  }
  return BasicSeries<F>(std::move(tau));
}

/// sum_n C(lambda, n) x^n with C(lambda, n) = lambda (lambda-1)...(lambda-n+1) / n!.
template <Field F>
BasicSeries<F> binomial_series(const F& lambda, std::size_t n)
{
  std::vector<F> c(n, F(0));
  c[0] = F(1);
  for (std::size_t k = 1; k < n; ++k)
    c[k] = c[k - 1] * (lambda - F(static_cast<long>(k) - 1)) / F(static_cast<long>(k));
  return BasicSeries<F>(std::move(c));
}

/// sum_n x^n / n!
template <Field F>
BasicSeries<F> exp_coefficients(std::size_t n)
{
  std::vector<F> c(n, F(0));
  c[0] = F(1);
  for (std::size_t k = 1; k < n; ++k)
    c[k] = c[k - 1] / F(static_cast<long>(k));
  return BasicSeries<F>(std::move(c));
}

/// log(1 + x) = sum_{n>=1} (-1)^{n+1} x^n / n
template <Field F>
BasicSeries<F> log1p_coefficients(std::size_t n)
{
  std::vector<F> c(n, F(0));
  for (std::size_t k = 1; k < n; ++k)
    c[k] = F(k % 2 ? 1 : -1) / F(static_cast<long>(k));
  return BasicSeries<F>(std::move(c));
}

template <Field F>
BasicSeries<F> exp_series(const BasicSeries<F>& f)
{
  if (!f.coeff(0).is_zero())
    throw Error(ErrorKind::PreconditionViolation, "exp_series: constant term must be zero");
  return substitute(exp_coefficients<F>(f.precision()), f);
}

template <Field F>
BasicSeries<F> log_series(const BasicSeries<F>& f)
{
  if (!(f.coeff(0) == F(1)))
    throw Error(ErrorKind::PreconditionViolation, "log_series: constant term must be one");
  return substitute(log1p_coefficients<F>(f.precision()),
                    f - BasicSeries<F>::one(f.precision()));
}

} // namespace riordan
