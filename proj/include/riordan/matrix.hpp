#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/riordan.hpp"

namespace riordan {

/// Dense N x N exact matrix, row-major. For a Riordan matrix, column j holds
/// the coefficients of mu sigma^j.
class RiordanMatrix
{
public:
  RiordanMatrix(std::size_t n, std::vector<Rational> entries);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool is_lower_unitriangular() const;
  /// Top-left k x k block.
  RiordanMatrix leading(std::size_t k) const;

  friend bool operator==(const RiordanMatrix&, const RiordanMatrix&) = default;

private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

/// m_{i,j} = <mu sigma^j, x^i> for i, j < n. Throws InsufficientPrecision if
/// a.precision() < n.
RiordanMatrix to_matrix(const RiordanElement& a, std::size_t n);

RiordanMatrix matmul(const RiordanMatrix& a, const RiordanMatrix& b);

enum class Correspondence {
  Homomorphism,     // M(a) M(b) = M(a x| b)
  AntiHomomorphism, // M(a) M(b) = M(b x| a)
  Both,
  Neither,
};

std::string_view correspondence_name(Correspondence c);

/// Which product order M(a) M(b) reproduces, by exact computation.
Correspondence matrix_correspondence(const RiordanElement& a, const RiordanElement& b,
                                     std::size_t n);

/// Regression constant: the order observed on every tested pair. The
/// composition mu1 o sigma2 in x| reverses the usual Riordan-array order.
inline constexpr Correspondence kMatrixOrder = Correspondence::AntiHomomorphism;

/// True iff M(a) M(b) agrees with kMatrixOrder (or with both orders).
bool rtimes_matrix_check(const RiordanElement& a, const RiordanElement& b, std::size_t n);

/// [x^i y^j] mu(x) exp(y sigma(x)) for i, j < n, as a row-major n x n table.
/// Computed over K[y]/(y^n) with the recurrence k e_k = sum_i i F_i e_{k-i}
/// for E = exp(F), independently of the matrix columns.
std::vector<Rational> egf_table(const RiordanElement& a, std::size_t n);

/// m_{i,j} / j! == [x^i y^j] mu(x) exp(y sigma(x)) for all i, j < n.
bool egf_identity_check(const RiordanElement& a, std::size_t n);

/// n rows of comma-separated rationals ("p/q", or "p" when integral).
std::string to_csv(const RiordanMatrix& m);
/// {"n": N, "mu": ..., "sigma": ..., "rows": [[...]]}; entries are strings.
std::string to_json(const RiordanMatrix& m, const RiordanElement& source);

} // namespace riordan
