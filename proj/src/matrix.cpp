#include "riordan/matrix.hpp"

#include <sstream>

#include <json.hpp>

#include "riordan/text.hpp"

namespace riordan {

RiordanMatrix::RiordanMatrix(std::size_t n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries))
{
  if (entries_.size() != n_ * n_)
    throw Error(ErrorKind::PreconditionViolation,
                "matrix of size " + std::to_string(n_) + " needs " + std::to_string(n_ * n_) +
                    " entries");
}

bool RiordanMatrix::is_lower_unitriangular() const
{
  for (std::size_t i = 0; i < n_; ++i) {
    if (!(*this)(i, i).is_one())
      return false;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!(*this)(i, j).is_zero())
        return false;
  }
  return true;
}

RiordanMatrix RiordanMatrix::leading(std::size_t k) const
{
  if (k > n_)
    throw Error(ErrorKind::PreconditionViolation, "leading block larger than matrix");
  std::vector<Rational> out;
  out.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      out.push_back((*this)(i, j));
  return RiordanMatrix(k, std::move(out));
}

RiordanMatrix to_matrix(const RiordanElement& a, std::size_t n)
{
  if (n == 0 || a.precision() < n)
    throw Error(ErrorKind::InsufficientPrecision,
                "matrix of size " + std::to_string(n) + " needs series precision >= " +
                    std::to_string(n) + ", have " + std::to_string(a.precision()));
  const Series sigma = a.sigma().truncate(n);
  Series column = a.mu().truncate(n);
  std::vector<Rational> entries(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i)
      entries[i * n + j] = column.coeff(i);
    if (j + 1 < n)
      column = column * sigma;
  }
  return RiordanMatrix(n, std::move(entries));
}

RiordanMatrix matmul(const RiordanMatrix& a, const RiordanMatrix& b)
{
  if (a.size() != b.size())
    throw Error(ErrorKind::PrecisionMismatch, "matmul: matrix sizes differ");
  const std::size_t n = a.size();
  std::vector<Rational> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero())
        continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero())
          out[i * n + j] += a(i, k) * b(k, j);
    }
  return RiordanMatrix(n, std::move(out));
}

std::string_view correspondence_name(Correspondence c)
{
  switch (c) {
  case Correspondence::Homomorphism: return "homomorphism";
  case Correspondence::AntiHomomorphism: return "anti-homomorphism";
  case Correspondence::Both: return "both";
  case Correspondence::Neither: return "neither";
  }
  return "unknown";
}

Correspondence matrix_correspondence(const RiordanElement& a, const RiordanElement& b,
                                     std::size_t n)
{
  const RiordanMatrix product = matmul(to_matrix(a, n), to_matrix(b, n));
  const bool forward = product == to_matrix(rtimes(a, b), n);
  const bool reverse = product == to_matrix(rtimes(b, a), n);
  if (forward && reverse)
    return Correspondence::Both;
  if (forward)
    return Correspondence::Homomorphism;
  if (reverse)
    return Correspondence::AntiHomomorphism;
  return Correspondence::Neither;
}

bool rtimes_matrix_check(const RiordanElement& a, const RiordanElement& b, std::size_t n)
{
  const Correspondence c = matrix_correspondence(a, b, n);
  return c == kMatrixOrder || c == Correspondence::Both;
}

namespace {

// Polynomial in y truncated modulo y^n.
using YPoly = std::vector<Rational>;

void add_product(YPoly& out, const YPoly& p, const YPoly& q, const Rational& scale)
{
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i].is_zero())
      continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!q[j].is_zero())
        out[i + j] += scale * p[i] * q[j];
  }
}

} // namespace

std::vector<Rational> egf_table(const RiordanElement& a, std::size_t n)
{
  if (n == 0 || a.precision() < n)
    throw Error(ErrorKind::InsufficientPrecision, "egf_table: precision below table size");
  // F(x, y) = y sigma(x): x-coefficient k is the polynomial sigma_k y.
  std::vector<YPoly> f(n, YPoly(n));
  if (n > 1)
    for (std::size_t k = 0; k < n; ++k)
      f[k][1] = a.sigma().coeff(k);

  // E = exp(F) with E_0 = 1 because F_0 = 0; x E' = x F' E gives
  // k E_k = sum_{i=1..k} i F_i E_{k-i}.
  std::vector<YPoly> e(n, YPoly(n));
  e[0][0] = Rational(1);
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 1; i <= k; ++i)
      add_product(e[k], f[i], e[k - i], Rational(static_cast<long>(i)));
    for (auto& c : e[k])
      c /= Rational(static_cast<long>(k));
  }

  std::vector<Rational> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= i; ++k) {
      const Rational& mu_k = a.mu().coeff(k);
      if (mu_k.is_zero())
        continue;
      for (std::size_t j = 0; j < n; ++j)
        table[i * n + j] += mu_k * e[i - k][j];
    }
  return table;
}

bool egf_identity_check(const RiordanElement& a, std::size_t n)
{
  const RiordanMatrix m = to_matrix(a, n);
  const std::vector<Rational> table = egf_table(a, n);
  Rational factorial(1);
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0)
      factorial *= Rational(static_cast<long>(j));
    for (std::size_t i = 0; i < n; ++i)
      if (!(m(i, j) / factorial == table[i * n + j]))
        return false;
  }
  return true;
}

std::string to_csv(const RiordanMatrix& m)
{
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j)
        out << ',';
      out << m(i, j).str();
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const RiordanMatrix& m, const RiordanElement& source)
{
  nlohmann::ordered_json doc;
  doc["n"] = m.size();
  doc["mu"] = format_series(source.mu());
  doc["sigma"] = format_series(source.sigma());
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j)
      row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump();
}

} // namespace riordan
