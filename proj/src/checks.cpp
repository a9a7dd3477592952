#include "riordan/checks.hpp"

#include <algorithm>
#include <chrono>

#include "riordan/calculus.hpp"
#include "riordan/cauchy.hpp"
#include "riordan/matrix.hpp"
#include "riordan/text.hpp"

namespace riordan::checks {

Sample& Sample::add(std::string label, Series s)
{
  labels.push_back(std::move(label));
  series.push_back(std::move(s));
  return *this;
}

Sample& Sample::add(std::string label, const RiordanElement& a)
{
  add(label + ".mu", a.mu());
  return add(label + ".sigma", a.sigma());
}

Sample& Sample::add_scalar(std::string label, Rational r)
{
  scalar_labels.push_back(std::move(label));
  scalars.push_back(std::move(r));
  return *this;
}

std::size_t Sample::natural(std::size_t i) const
{
  const Rational& r = scalars.at(i);
  if (!r.is_integer() || r.sign() < 0)
    throw Error(ErrorKind::PreconditionViolation, "scalar is not a natural number");
  return static_cast<std::size_t>(r.raw().get_num().get_ui());
}

std::string Sample::describe() const
{
  std::string out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!out.empty())
      out += "; ";
    out += labels[i] + " = " + format_series(series[i]);
  }
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    if (!out.empty())
      out += "; ";
    out += scalar_labels[i] + " = " + scalars[i].str();
  }
  return out;
}

bool SuiteReport::passed() const
{
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& r) { return r.passed; });
}

namespace {

bool still_fails(const Property& p, const Sample& s)
{
  try {
    return !p.holds(s);
  } catch (const std::exception&) {
    return false;
  }
}

Series with_coefficient(const Series& s, std::size_t k, Rational c)
{
  std::vector<Rational> coeffs(s.coeffs().begin(), s.coeffs().end());
  coeffs[k] = std::move(c);
  return Series(std::move(coeffs));
}

} // namespace

Sample shrink(const Property& p, Sample failing)
{
  std::size_t budget = 2000;
  bool progress = true;
  auto attempt = [&](Sample candidate) {
    if (budget == 0)
      return false;
    --budget;
    if (!still_fails(p, candidate))
      return false;
    failing = std::move(candidate);
    return true;
  };

  while (progress && budget > 0) {
    progress = false;
    for (std::size_t i = 0; i < failing.series.size(); ++i) {
      for (std::size_t k = failing.series[i].precision(); k-- > 0;) {
        const Rational c = failing.series[i].coeff(k);
        if (c.is_zero())
          continue;
        Sample zeroed = failing;
        zeroed.series[i] = with_coefficient(failing.series[i], k, Rational(0));
        if (attempt(std::move(zeroed))) {
          progress = true;
          continue;
        }
        const Rational unit(c.sign());
        if (c != unit) {
          Sample simpler = failing;
          simpler.series[i] = with_coefficient(failing.series[i], k, unit);
          progress |= attempt(std::move(simpler));
        }
      }
    }
    for (std::size_t i = 0; i < failing.scalars.size(); ++i) {
      const Rational r = failing.scalars[i];
      const Rational integer_part(mpq_class(mpz_class(r.raw().get_num() / r.raw().get_den())));
      for (const Rational& candidate : {Rational(0), Rational(1), integer_part}) {
        if (candidate == r)
          continue;
        Sample simpler = failing;
        simpler.scalars[i] = candidate;
        if (attempt(std::move(simpler))) {
          progress = true;
          break;
        }
      }
    }
  }
  return failing;
}

PropertyResult run_property(const Property& p, Generator& gen, std::size_t trials,
                            std::size_t precision)
{
  PropertyResult result;
  result.name = p.name;
  const std::size_t runs = p.randomized ? trials : 1;
  for (std::size_t t = 0; t < runs; ++t) {
    Sample sample = p.generate(gen, precision);
    ++result.trials;
    bool ok = false;
    try {
      ok = p.holds(sample);
    } catch (const Error& e) {
      result.message = std::string(e.name()) + ": " + e.what();
    } catch (const std::exception& e) {
      result.message = e.what();
    }
    if (!ok) {
      result.passed = false;
      if (result.message.empty()) {
        sample = shrink(p, std::move(sample));
        result.message = "law violated";
      }
      result.counterexample = sample.describe();
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Suite definitions

namespace {

using Props = std::vector<Property>;

Property fixed(std::string name, std::function<bool()> body)
{
  return {std::move(name), [](Generator&, std::size_t) { return Sample{}; },
          [body = std::move(body)](const Sample&) { return body(); }, false};
}

Series poly(std::vector<Rational> c, std::size_t n)
{
  return Series(std::move(c), n);
}

RiordanElement iterated_rtimes(const RiordanElement& a, std::size_t n)
{
  RiordanElement acc = identity(a.precision());
  for (std::size_t k = 0; k < n; ++k)
    acc = rtimes(acc, a);
  return acc;
}

// --- counterexample --------------------------------------------------------

Props counterexample_suite(std::size_t n)
{
  Props props;
  props.push_back(fixed("x|-square and binomial series at lambda = 2 match the worked values "
                        "and differ",
                        [n] { return counterexample_check(std::max<std::size_t>(n, 5)); }));
  props.push_back(fixed("same counterexample at higher precision",
                        [n] { return counterexample_check(std::max<std::size_t>(n, 5) + 3); }));
  props.push_back(fixed("no counterexample at lambda = 1", [n] {
    const std::size_t prec = std::max<std::size_t>(n, 5);
    const GroupElement g(RiordanElement(poly({1, 1}, prec), poly({0, 1, 1}, prec)));
    return rtimes_binomial_power(g, Rational(1)) == g &&
           rtimes_power(g.element(), 1) == g.element();
  }));
  return props;
}

// --- valuation -------------------------------------------------------------

Props valuation_suite()
{
  Props props;
  props.push_back({"nu(f g) = nu(f) + nu(g)",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("f", gen.series(n)).add("g", gen.series(n));
                   },
                   [](const Sample& s) {
                     const std::size_t n = s.at(0).precision();
                     return (s.at(0) * s.at(1)).valuation() ==
                            saturating_sum(s.at(0).valuation(), s.at(1).valuation(), n);
                   }});
  props.push_back({"nu(f o sigma) = nu(f) nu(sigma)",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("f", gen.series(n)).add("sigma", gen.m_series(n));
                   },
                   [](const Sample& s) {
                     const std::size_t n = s.at(0).precision();
                     return substitute(s.at(0), s.at(1)).valuation() ==
                            saturating_product(s.at(0).valuation(), s.at(1).valuation(), n);
                   }});
  props.push_back({"nu(f + g) >= min(nu(f), nu(g)), equal when they differ",
                   [](Generator& gen, std::size_t n) {
                     Series f = gen.series(n);
                     const Valuation v = f.valuation();
                     Series g = v.is_exact() && gen.chance(1, 2)
                                    ? gen.series_with_valuation(n, v.value())
                                    : gen.series(n);
                     return Sample{}.add("f", f).add("g", g);
                   },
                   [](const Sample& s) {
                     const Valuation vf = s.at(0).valuation(), vg = s.at(1).valuation();
                     const Valuation vs = (s.at(0) + s.at(1)).valuation();
                     const std::size_t low = std::min(vf.value(), vg.value());
                     if (!vs.known_at_least(low))
                       return false;
                     if (vf.value() != vg.value())
                       return vs == (vf.value() < vg.value() ? vf : vg);
                     return true;
                   }});
  props.push_back({"nu(sigma^{on}) = nu(sigma)^n",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("sigma", gen.m_series(n)).add_scalar("n", gen.between(0, 3));
                   },
                   [](const Sample& s) {
                     const std::size_t n = s.at(0).precision();
                     const std::size_t k = s.natural(0);
                     Valuation expected = Valuation::exact(1);
                     for (std::size_t i = 0; i < k; ++i)
                       expected = saturating_product(expected, s.at(0).valuation(), n);
                     return comp_power(s.at(0), k).valuation() == expected;
                   }});
  return props;
}

// --- series algebra ---------------------------------------------------------

Props series_suite()
{
  Props props;
  props.push_back({"(f + g) o sigma = f o sigma + g o sigma",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("f", gen.series(n)).add("g", gen.series(n)).add(
                         "sigma", gen.m_series(n));
                   },
                   [](const Sample& s) {
                     return substitute(s.at(0) + s.at(1), s.at(2)) ==
                            substitute(s.at(0), s.at(2)) + substitute(s.at(1), s.at(2));
                   }});
  props.push_back({"(f g) o sigma = (f o sigma)(g o sigma)",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("f", gen.series(n)).add("g", gen.series(n)).add(
                         "sigma", gen.m_series(n));
                   },
                   [](const Sample& s) {
                     return substitute(s.at(0) * s.at(1), s.at(2)) ==
                            substitute(s.at(0), s.at(2)) * substitute(s.at(1), s.at(2));
                   }});
  props.push_back({"(f o sigma) o tau = f o (sigma o tau)",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("f", gen.series(n)).add("sigma", gen.m_series(n)).add(
                         "tau", gen.m_series(n));
                   },
                   [](const Sample& s) {
                     return substitute(substitute(s.at(0), s.at(1)), s.at(2)) ==
                            substitute(s.at(0), substitute(s.at(1), s.at(2)));
                   }});
  props.push_back({"x is a two-sided identity for substitution",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("f", gen.series(n)).add("sigma", gen.m_series(n));
                   },
                   [](const Sample& s) {
                     const Series x = Series::x(s.at(0).precision());
                     return substitute(s.at(0), x) == s.at(0) && substitute(x, s.at(1)) == s.at(1);
                   }});
  props.push_back({"right substitution by nonzero sigma is injective",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("f", gen.series(n)).add("sigma", gen.m_series(n));
                   },
                   [](const Sample& s) {
                     const Valuation vf = s.at(0).valuation(), vs = s.at(1).valuation();
                     if (!vf.is_exact() || !vs.is_exact() ||
                         vf.value() * vs.value() >= s.at(0).precision())
                       return true;
                     return !substitute(s.at(0), s.at(1)).is_zero();
                   }});
  props.push_back({"f mul_inverse(f) = 1",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("f", gen.unit_series(n));
                   },
                   [](const Sample& s) {
                     const Series inv = mul_inverse(s.at(0));
                     return s.at(0) * inv == Series::one(s.at(0).precision()) &&
                            inv * s.at(0) == Series::one(s.at(0).precision());
                   }});
  props.push_back({"sigma o tau = tau o sigma = x for tau = comp_inverse(sigma)",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("sigma", Series::monomial(gen.nonzero_rational(), 1, n) +
                                                      gen.series(n, 2));
                   },
                   [](const Sample& s) {
                     const Series tau = comp_inverse(s.at(0));
                     const Series x = Series::x(s.at(0).precision());
                     return substitute(s.at(0), tau) == x && substitute(tau, s.at(0)) == x;
                   }});
  props.push_back({"exp and log are mutually inverse",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("u", gen.m_series(n)).add("a", gen.unipotent_series(n));
                   },
                   [](const Sample& s) {
                     return log_series(exp_series(s.at(0))) == s.at(0) &&
                            exp_series(log_series(s.at(1))) == s.at(1);
                   }});
  props.push_back(fixed("left distributivity of o fails: x^2 o (2x) = 4x^2 != 2x^2", [] {
    const std::size_t n = 4;
    const Series x2 = Series::monomial(Rational(1), 2, n);
    const Series lhs = substitute(x2, Rational(2) * Series::x(n));
    const Series rhs = Rational(2) * substitute(x2, Series::x(n));
    return lhs == Series::monomial(Rational(4), 2, n) &&
           rhs == Series::monomial(Rational(2), 2, n) && lhs != rhs;
  }));
  return props;
}

// --- near algebra ----------------------------------------------------------

Props near_algebra_suite()
{
  Props props;
  props.push_back({"(a x| b) x| c = a x| (b x| c)",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("a", gen.pair(n)).add("b", gen.pair(n)).add("c", gen.pair(n));
                   },
                   [](const Sample& s) {
                     const auto a = s.pair_at(0), b = s.pair_at(2), c = s.pair_at(4);
                     return rtimes(rtimes(a, b), c) == rtimes(a, rtimes(b, c));
                   }});
  props.push_back({"(a + b) x| c = a x| c + b x| c",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("a", gen.pair(n)).add("b", gen.pair(n)).add("c", gen.pair(n));
                   },
                   [](const Sample& s) {
                     const auto a = s.pair_at(0), b = s.pair_at(2), c = s.pair_at(4);
                     return rtimes(a + b, c) == rtimes(a, c) + rtimes(b, c);
                   }});
  props.push_back({"(alpha a) x| c = alpha (a x| c)",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("a", gen.pair(n)).add("c", gen.pair(n)).add_scalar(
                         "alpha", gen.rational());
                   },
                   [](const Sample& s) {
                     const auto a = s.pair_at(0), c = s.pair_at(2);
                     return rtimes(s.scalar(0) * a, c) == s.scalar(0) * rtimes(a, c);
                   }});
  props.push_back({"(1, x) is a two-sided identity",
                   [](Generator& gen, std::size_t n) { return Sample{}.add("a", gen.pair(n)); },
                   [](const Sample& s) {
                     const auto a = s.pair_at(0);
                     const auto e = identity(a.precision());
                     return rtimes(a, e) == a && rtimes(e, a) == a;
                   }});
  props.push_back({"(0, 0) is a two-sided zero",
                   [](Generator& gen, std::size_t n) { return Sample{}.add("a", gen.pair(n)); },
                   [](const Sample& s) {
                     const auto a = s.pair_at(0);
                     const auto z = zero_element(a.precision());
                     return rtimes(a, z) == z && rtimes(z, a) == z;
                   }});
  props.push_back({"(mu, 0) x| (0, sigma) = (0, 0)",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("mu", gen.series(n)).add("sigma", gen.m_series(n));
                   },
                   [](const Sample& s) {
                     const std::size_t n = s.at(0).precision();
                     return rtimes(RiordanElement(s.at(0), Series::zero(n)),
                                   RiordanElement(Series::zero(n), s.at(1))) == zero_element(n);
                   }});
  props.push_back({"K[[x]]+ x| M+ is a two-sided ideal",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("a", gen.pair(n)).add("p", gen.ideal(n).element());
                   },
                   [](const Sample& s) {
                     return ideal_closure_check(s.pair_at(0), IdealElement(s.pair_at(2)));
                   }});
  props.push_back(fixed("left distributivity fails: (0,x^2) x| ((0,x) + (0,-x)) = (0,0) but the "
                        "sum of products is (0,2x^2)",
                        [] {
                          const std::size_t n = 4;
                          const Series x = Series::x(n);
                          const Series x2 = Series::monomial(Rational(1), 2, n);
                          const RiordanElement a(Series::zero(n), x2);
                          const RiordanElement b(Series::zero(n), x);
                          const RiordanElement c(Series::zero(n), -x);
                          const RiordanElement lhs = rtimes(a, b + c);
                          const RiordanElement rhs = rtimes(a, b) + rtimes(a, c);
                          return lhs == zero_element(n) &&
                                 rhs == RiordanElement(Series::zero(n), Rational(2) * x2) &&
                                 lhs != rhs;
                        }));
  return props;
}

// --- closed-form powers -----------------------------------------------------

Props power_suite()
{
  Props props;
  props.push_back({"closed-form power equals iterated product, n <= 6",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("a", gen.pair(n)).add_scalar("n", gen.between(0, 6));
                   },
                   [](const Sample& s) {
                     const auto a = s.pair_at(0);
                     return rtimes_power(a, s.natural(0)) == iterated_rtimes(a, s.natural(0));
                   }});
  props.push_back({"(mu, 0)^{x|n} = (mu mu(0)^{n-1}, 0)",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("mu", gen.series(n)).add_scalar("n", gen.between(1, 6));
                   },
                   [](const Sample& s) {
                     const std::size_t n = s.at(0).precision(), k = s.natural(0);
                     if (k == 0)
                       return true;
                     Rational c(1);
                     for (std::size_t i = 1; i < k; ++i)
                       c *= s.at(0).coeff(0);
                     const RiordanElement a(s.at(0), Series::zero(n));
                     const RiordanElement expected(c * s.at(0), Series::zero(n));
                     return rtimes_power(a, k) == expected && iterated_rtimes(a, k) == expected;
                   }});
  props.push_back({"(0, sigma)^{x|n} = (0, sigma^{on})",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("sigma", gen.m_series(n)).add_scalar("n", gen.between(1, 6));
                   },
                   [](const Sample& s) {
                     const std::size_t n = s.at(0).precision(), k = s.natural(0);
                     if (k == 0)
                       return true;
                     const RiordanElement a(Series::zero(n), s.at(0));
                     const RiordanElement expected(Series::zero(n), comp_power(s.at(0), k));
                     return rtimes_power(a, k) == expected && iterated_rtimes(a, k) == expected;
                   }});
  props.push_back({"a^{x|(n+m)} = a^{x|n} x| a^{x|m}",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}
                         .add("a", gen.pair(n))
                         .add_scalar("n", gen.between(0, 3))
                         .add_scalar("m", gen.between(0, 3));
                   },
                   [](const Sample& s) {
                     const auto a = s.pair_at(0);
                     const std::size_t n = s.natural(0), m = s.natural(1);
                     return rtimes_power(a, n + m) == rtimes(rtimes_power(a, n), rtimes_power(a, m));
                   }});
  return props;
}

// --- calculus --------------------------------------------------------------

Props calculus_suite()
{
  Props props;
  props.push_back({"phi(alpha f + beta g) = alpha phi(f) + beta phi(g)",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}
                         .add("base", gen.ideal(n).element())
                         .add("f", gen.series(n))
                         .add("g", gen.series(n))
                         .add_scalar("alpha", gen.rational())
                         .add_scalar("beta", gen.rational());
                   },
                   [](const Sample& s) {
                     const PhiMap phi{IdealElement(s.pair_at(0))};
                     const Rational &alpha = s.scalar(0), &beta = s.scalar(1);
                     return phi(alpha * s.at(2) + beta * s.at(3)) ==
                            alpha * phi(s.at(2)) + beta * phi(s.at(3));
                   }});
  props.push_back({"phi(x^m g) = phi(g) x| base^{x|m}, m <= 4",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}
                         .add("base", gen.ideal(n).element())
                         .add("g", gen.series(n))
                         .add_scalar("m", gen.between(0, 4));
                   },
                   [](const Sample& s) {
                     return phi_shift_identity_check(IdealElement(s.pair_at(0)), s.at(2), s.natural(0));
                   }});
  props.push_back({"f in M maps into the ideal",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("base", gen.ideal(n).element()).add("f", gen.m_series(n));
                   },
                   [](const Sample& s) {
                     if (!s.at(2).coeff(0).is_zero())
                       return true;
                     return is_ideal(phi_apply(IdealElement(s.pair_at(0)), s.at(2)));
                   }});
  props.push_back({"f(0) = 1 maps into the Riordan group",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}
                         .add("base", gen.ideal(n).element())
                         .add("f", gen.unipotent_series(n));
                   },
                   [](const Sample& s) {
                     if (!s.at(2).coeff(0).is_one())
                       return true;
                     return is_group(phi_apply(IdealElement(s.pair_at(0)), s.at(2)));
                   }});
  props.push_back({"terms beyond term_bound change no stored coefficient",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("base", gen.ideal(n).element()).add("f", gen.series(n));
                   },
                   [](const Sample& s) {
                     const RiordanElement base = s.pair_at(0);
                     const std::size_t n = base.precision();
                     RiordanElement full = zero_element(n);
                     for (std::size_t k = 0; k < n; ++k)
                       full += s.at(2).coeff(k) * iterated_rtimes(base, k);
                     return phi_apply(IdealElement(base), s.at(2)) == full;
                   }});
  props.push_back({"base^{x|n} vanishes for every n >= term_bound",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("base", gen.ideal(n).element());
                   },
                   [](const Sample& s) {
                     const IdealElement base(s.pair_at(0));
                     const std::size_t n = base.precision();
                     const std::size_t bound = term_bound(base, n);
                     for (std::size_t k = bound; k < bound + 3; ++k)
                       if (iterated_rtimes(base.element(), k) != zero_element(n))
                         return false;
                     return true;
                   }});
  props.push_back({"phi is injective at truncation scale",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("base", gen.nonzero_ideal(n).element()).add("f", gen.series(n));
                   },
                   [](const Sample& s) {
                     const IdealElement base(s.pair_at(0));
                     const Valuation v = s.at(2).valuation();
                     if (!v.is_exact() ||
                         rtimes_power(base.element(), v.value()) == zero_element(base.precision()))
                       return true;
                     return phi_apply(base, s.at(2)) != zero_element(base.precision());
                   }});
  return props;
}

// --- cauchy ----------------------------------------------------------------

CauchyElement element_at(const Sample& s, std::size_t i)
{
  return CauchyElement(IdealElement(s.pair_at(0)), s.at(i));
}

Props cauchy_suite()
{
  Props props;
  auto base_and = [](Generator& gen, std::size_t n) {
    return Sample{}.add("base", gen.nonzero_ideal(n).element());
  };
  props.push_back({"star product is commutative",
                   [base_and](Generator& gen, std::size_t n) {
                     return base_and(gen, n).add("a", gen.series(n)).add("b", gen.series(n));
                   },
                   [](const Sample& s) {
                     const auto a = element_at(s, 2), b = element_at(s, 3);
                     return star_mul(a, b) == star_mul(b, a);
                   }});
  props.push_back({"star product is associative and distributive",
                   [base_and](Generator& gen, std::size_t n) {
                     return base_and(gen, n)
                         .add("a", gen.series(n))
                         .add("b", gen.series(n))
                         .add("c", gen.series(n));
                   },
                   [](const Sample& s) {
                     const auto a = element_at(s, 2), b = element_at(s, 3), c = element_at(s, 4);
                     return star_mul(star_mul(a, b), c) == star_mul(a, star_mul(b, c)) &&
                            star_mul(a, b + c) == star_mul(a, b) + star_mul(a, c);
                   }});
  props.push_back({"delta^(d) * delta^(e) = delta^(d+e), realized as base^{x|(d+e)}",
                   [base_and](Generator& gen, std::size_t n) {
                     return base_and(gen, n)
                         .add_scalar("d", gen.between(0, 4))
                         .add_scalar("e", gen.between(0, 4));
                   },
                   [](const Sample& s) {
                     const IdealElement base(s.pair_at(0));
                     const std::size_t d = s.natural(0), e = s.natural(1);
                     if (d + e >= base.precision())
                       return true;
                     const CauchyElement product =
                         star_mul(CauchyElement::delta(base, d), CauchyElement::delta(base, e));
                     return product == CauchyElement::delta(base, d + e) &&
                            realize(product) == rtimes_power(base.element(), d + e) &&
                            realize(product) ==
                                rtimes(rtimes_power(base.element(), d), rtimes_power(base.element(), e));
                   }});
  props.push_back({"star_power(delta^(1), d) realizes to base^{x|d}, d <= 5",
                   [base_and](Generator& gen, std::size_t n) {
                     return base_and(gen, n).add_scalar("d", gen.between(0, 5));
                   },
                   [](const Sample& s) {
                     const IdealElement base(s.pair_at(0));
                     const std::size_t d = s.natural(0);
                     return realize(star_power(CauchyElement::delta(base, 1), d)) ==
                            rtimes_power(base.element(), d);
                   }});
  props.push_back({"a * star_inverse(a) = unit",
                   [base_and](Generator& gen, std::size_t n) {
                     Sample s = base_and(gen, n);
                     return s.add("a", gen.chance(1, 2) ? gen.unipotent_series(n) : gen.unit_series(n));
                   },
                   [](const Sample& s) {
                     const auto a = element_at(s, 2);
                     if (a.rep().coeff(0).is_zero())
                       return true;
                     const auto unit = CauchyElement::unit(a.base());
                     const auto inv = star_inverse(a);
                     return star_mul(a, inv) == unit && star_mul(inv, a) == unit;
                   }});
  props.push_back({"star_log(star_exp(u)) = u and star_exp(star_log(a)) = a",
                   [base_and](Generator& gen, std::size_t n) {
                     return base_and(gen, n).add("u", gen.m_series(n)).add("a", gen.unipotent_series(n));
                   },
                   [](const Sample& s) {
                     const auto u = element_at(s, 2), a = element_at(s, 3);
                     return star_log(star_exp(u)) == u && star_exp(star_log(a)) == a;
                   }});
  props.push_back({"star_exp(u) has inverse star_exp(-u)",
                   [base_and](Generator& gen, std::size_t n) {
                     return base_and(gen, n).add("u", gen.m_series(n));
                   },
                   [](const Sample& s) {
                     const auto u = element_at(s, 2);
                     const auto e = star_exp(u);
                     return star_mul(e, star_exp(Rational(-1) * u)) == CauchyElement::unit(u.base()) &&
                            star_inverse(e) == star_exp(Rational(-1) * u);
                   }});
  props.push_back({"exp(lambda log a) = a^{*lambda}",
                   [base_and](Generator& gen, std::size_t n) {
                     return base_and(gen, n)
                         .add("a", gen.unipotent_series(n))
                         .add_scalar("lambda", gen.rational());
                   },
                   [](const Sample& s) {
                     const auto a = element_at(s, 2);
                     if (!a.rep().coeff(0).is_one())
                       return true;
                     return star_exp(s.scalar(0) * star_log(a)) ==
                            star_generalized_power(a, s.scalar(0));
                   }});
  props.push_back({"a^{*alpha} * a^{*beta} = a^{*(alpha+beta)}",
                   [base_and](Generator& gen, std::size_t n) {
                     return base_and(gen, n)
                         .add("a", gen.unipotent_series(n))
                         .add_scalar("alpha", gen.rational())
                         .add_scalar("beta", gen.rational());
                   },
                   [](const Sample& s) {
                     const auto a = element_at(s, 2);
                     if (!a.rep().coeff(0).is_one())
                       return true;
                     return one_parameter_check(a, s.scalar(0), s.scalar(1));
                   }});
  props.push_back({"a^{*n} by binomial series equals the n-th star power, n <= 5",
                   [base_and](Generator& gen, std::size_t n) {
                     return base_and(gen, n)
                         .add("a", gen.unipotent_series(n))
                         .add_scalar("n", gen.between(0, 5));
                   },
                   [](const Sample& s) {
                     const auto a = element_at(s, 2);
                     if (!a.rep().coeff(0).is_one())
                       return true;
                     const std::size_t n = s.natural(0);
                     return star_generalized_power(a, Rational(n)) == star_power(a, n);
                   }});
  props.push_back(fixed("N-compatibility holds for * and fails for x| on (1 + x, x + x^2)", [] {
    const std::size_t n = 10;
    const GroupElement g(RiordanElement(poly({1, 1}, n), poly({0, 1, 1}, n)));
    const IdealElement base = g.ideal_part();
    const CauchyElement a = CauchyElement::unit(base) + CauchyElement::delta(base, 1);
    bool star_ok = true, rtimes_fails = false;
    for (std::size_t k = 0; k <= 5; ++k) {
      star_ok &= star_generalized_power(a, Rational(k)) == star_power(a, k);
      if (k >= 2)
        rtimes_fails |= rtimes_binomial_power(g, Rational(k)).element() != rtimes_power(g.element(), k);
    }
    return star_ok && rtimes_fails;
  }));
  return props;
}

// --- matrix ----------------------------------------------------------------

Props matrix_suite(std::size_t precision)
{
  Props props;
  props.push_back({"column j of M(a) has OGF mu sigma^j",
                   [](Generator& gen, std::size_t n) { return Sample{}.add("a", gen.pair(n)); },
                   [](const Sample& s) {
                     const auto a = s.pair_at(0);
                     const std::size_t n = a.precision();
                     const RiordanMatrix m = to_matrix(a, n);
                     for (std::size_t j = 0; j < n; ++j) {
                       const Series column = a.mu() * mul_power(a.sigma(), j);
                       for (std::size_t i = 0; i < n; ++i)
                         if (m(i, j) != column.coeff(i))
                           return false;
                     }
                     return true;
                   }});
  props.push_back(fixed("(1/(1-x), x/(1-x)) gives Pascal's triangle", [precision] {
    const std::size_t n = std::max<std::size_t>(precision, 2);
    const Series geometric = mul_inverse(poly({1, -1}, n));
    const RiordanMatrix m = to_matrix(RiordanElement(geometric, Series::x(n) * geometric), n);
    // Pascal's rule, independent of any series arithmetic
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      c[i][0] = Rational(1);
      for (std::size_t j = 1; j <= i; ++j)
        c[i][j] = c[i - 1][j - 1] + (j < i ? c[i - 1][j] : Rational(0));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j) != c[i][j])
          return false;
    return true;
  }));
  props.push_back({"group elements give unit lower-triangular matrices",
                   [](Generator& gen, std::size_t n) { return Sample{}.add("a", gen.group(n).element()); },
                   [](const Sample& s) {
                     const auto a = s.pair_at(0);
                     return to_matrix(a, a.precision()).is_lower_unitriangular();
                   }});
  props.push_back({std::string("M(a) M(b) follows the frozen order (") +
                       std::string(correspondence_name(kMatrixOrder)) + ")",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("a", gen.group(n).element()).add("b", gen.group(n).element());
                   },
                   [](const Sample& s) {
                     const auto a = s.pair_at(0), b = s.pair_at(2);
                     return rtimes_matrix_check(a, b, a.precision());
                   }});
  props.push_back({"mu(x) exp(y sigma(x)) has coefficients m_{i,j} / j!, N <= 6",
                   [](Generator& gen, std::size_t n) { return Sample{}.add("a", gen.group(n).element()); },
                   [](const Sample& s) {
                     const auto a = s.pair_at(0);
                     return egf_identity_check(a, std::min<std::size_t>(a.precision(), 6));
                   }});
  return props;
}

// --- group -----------------------------------------------------------------

Props group_suite()
{
  Props props;
  auto one_group = [](Generator& gen, std::size_t n) {
    return Sample{}.add("a", gen.group(n).element());
  };
  props.push_back({"a x| a^{-1} = a^{-1} x| a = (1, x)", one_group, [](const Sample& s) {
                     const GroupElement a(s.pair_at(0));
                     const GroupElement inv = group_inverse(a);
                     const RiordanElement e = identity(a.precision());
                     return rtimes(a.element(), inv.element()) == e &&
                            rtimes(inv.element(), a.element()) == e;
                   }});
  props.push_back({"(a^{-1})^{-1} = a", one_group, [](const Sample& s) {
                     const GroupElement a(s.pair_at(0));
                     return group_inverse(group_inverse(a)) == a;
                   }});
  props.push_back({"UM x| US is closed under x|",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("a", gen.group(n).element()).add("b", gen.group(n).element());
                   },
                   [](const Sample& s) {
                     GroupElement(s.pair_at(0));
                     GroupElement(s.pair_at(2));
                     return is_group(rtimes(s.pair_at(0), s.pair_at(2)));
                   }});
  props.push_back({"binomial x|-series powers stay in the group",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("a", gen.group(n).element()).add_scalar("lambda", gen.rational());
                   },
                   [](const Sample& s) {
                     return is_group(rtimes_binomial_power(GroupElement(s.pair_at(0)), s.scalar(0)).element());
                   }});
  props.push_back({"star generalized powers of (1, x) + base realize into the group",
                   [](Generator& gen, std::size_t n) {
                     return Sample{}.add("a", gen.group(n).element()).add_scalar("lambda", gen.rational());
                   },
                   [](const Sample& s) {
                     const GroupElement g(s.pair_at(0));
                     const IdealElement base = g.ideal_part();
                     const CauchyElement a = CauchyElement::unit(base) + CauchyElement::delta(base, 1);
                     if (realize(a) != g.element())
                       return false;
                     return is_group(realize(star_generalized_power(a, s.scalar(0))));
                   }});
  return props;
}

// --- truncation ------------------------------------------------------------

template <class Fine, class Coarse>
Property stable(std::string name, std::function<Sample(Generator&, std::size_t)> generate,
                Fine fine, Coarse coarse)
{
  return {std::move(name), std::move(generate), [fine, coarse](const Sample& s) {
            const std::size_t n = s.series.empty() ? 0 : s.at(0).precision() / 2;
            Sample small = s;
            for (auto& series : small.series)
              series = series.truncate(n);
            return fine(s, n) == coarse(small);
          }};
}

Props truncation_suite()
{
  Props props;
  using S = const Sample&;
  auto f_g = [](Generator& gen, std::size_t n) {
    return Sample{}.add("f", gen.series(n)).add("g", gen.series(n)).add_scalar("alpha", gen.rational());
  };
  auto f_sigma = [](Generator& gen, std::size_t n) {
    return Sample{}.add("f", gen.series(n)).add("sigma", gen.m_series(n)).add_scalar("n", gen.between(0, 3));
  };
  auto units = [](Generator& gen, std::size_t n) {
    return Sample{}
        .add("f", gen.unit_series(n))
        .add("sigma", Series::monomial(gen.nonzero_rational(), 1, n) + gen.series(n, 2))
        .add("u", gen.m_series(n))
        .add("a", gen.unipotent_series(n))
        .add_scalar("lambda", gen.rational());
  };
  auto two_pairs = [](Generator& gen, std::size_t n) {
    return Sample{}.add("a", gen.pair(n)).add("b", gen.pair(n)).add_scalar("n", gen.between(0, 4));
  };
  auto group_pair = [](Generator& gen, std::size_t n) {
    return Sample{}
        .add("a", gen.group(n).element())
        .add("b", gen.group(n).element())
        .add_scalar("lambda", gen.rational());
  };
  auto base_series = [](Generator& gen, std::size_t n) {
    return Sample{}
        .add("base", gen.nonzero_ideal(n).element())
        .add("f", gen.series(n))
        .add("g", gen.unipotent_series(n))
        .add_scalar("lambda", gen.rational());
  };

  props.push_back(stable(
      "add", f_g, [](S s, std::size_t n) { return (s.at(0) + s.at(1)).truncate(n); },
      [](S s) { return s.at(0) + s.at(1); }));
  props.push_back(stable(
      "scale", f_g, [](S s, std::size_t n) { return (s.scalar(0) * s.at(0)).truncate(n); },
      [](S s) { return s.scalar(0) * s.at(0); }));
  props.push_back(stable(
      "mul", f_g, [](S s, std::size_t n) { return (s.at(0) * s.at(1)).truncate(n); },
      [](S s) { return s.at(0) * s.at(1); }));
  props.push_back(stable(
      "valuation", f_g, [](S s, std::size_t n) { return s.at(0).valuation().truncate(n); },
      [](S s) { return s.at(0).valuation(); }));
  props.push_back(stable(
      "substitute", f_sigma,
      [](S s, std::size_t n) { return substitute(s.at(0), s.at(1)).truncate(n); },
      [](S s) { return substitute(s.at(0), s.at(1)); }));
  props.push_back(stable(
      "comp_power", f_sigma,
      [](S s, std::size_t n) { return comp_power(s.at(1), s.natural(0)).truncate(n); },
      [](S s) { return comp_power(s.at(1), s.natural(0)); }));
  props.push_back(stable(
      "mul_power", f_sigma,
      [](S s, std::size_t n) { return mul_power(s.at(0), s.natural(0)).truncate(n); },
      [](S s) { return mul_power(s.at(0), s.natural(0)); }));
  props.push_back(stable(
      "mul_inverse", units, [](S s, std::size_t n) { return mul_inverse(s.at(0)).truncate(n); },
      [](S s) { return mul_inverse(s.at(0)); }));
  props.push_back(stable(
      "comp_inverse", units, [](S s, std::size_t n) { return comp_inverse(s.at(1)).truncate(n); },
      [](S s) { return comp_inverse(s.at(1)); }));
  props.push_back(stable(
      "exp_series", units, [](S s, std::size_t n) { return exp_series(s.at(2)).truncate(n); },
      [](S s) { return exp_series(s.at(2)); }));
  props.push_back(stable(
      "log_series", units, [](S s, std::size_t n) { return log_series(s.at(3)).truncate(n); },
      [](S s) { return log_series(s.at(3)); }));
  props.push_back(stable(
      "binomial_series", units,
      [](S s, std::size_t n) { return binomial_series(s.scalar(0), s.at(0).precision()).truncate(n); },
      [](S s) { return binomial_series(s.scalar(0), s.at(0).precision()); }));
  props.push_back(stable(
      "rtimes", two_pairs,
      [](S s, std::size_t n) { return rtimes(s.pair_at(0), s.pair_at(2)).truncate(n); },
      [](S s) { return rtimes(s.pair_at(0), s.pair_at(2)); }));
  props.push_back(stable(
      "rtimes_power", two_pairs,
      [](S s, std::size_t n) { return rtimes_power(s.pair_at(0), s.natural(0)).truncate(n); },
      [](S s) { return rtimes_power(s.pair_at(0), s.natural(0)); }));
  props.push_back(stable(
      "is_ideal / is_group / is_unit", two_pairs,
      [](S s, std::size_t) {
        const auto a = s.pair_at(0);
        return std::vector<bool>{is_ideal(a), is_group(a), is_unit(a)};
      },
      [](S s) {
        const auto a = s.pair_at(0);
        return std::vector<bool>{is_ideal(a), is_group(a), is_unit(a)};
      }));
  props.push_back(stable(
      "group_inverse", group_pair,
      [](S s, std::size_t n) { return group_inverse(GroupElement(s.pair_at(0))).element().truncate(n); },
      [](S s) { return group_inverse(GroupElement(s.pair_at(0))).element(); }));
  props.push_back(stable(
      "rtimes_binomial_power", group_pair,
      [](S s, std::size_t n) {
        return rtimes_binomial_power(GroupElement(s.pair_at(0)), s.scalar(0)).element().truncate(n);
      },
      [](S s) { return rtimes_binomial_power(GroupElement(s.pair_at(0)), s.scalar(0)).element(); }));
  props.push_back(stable(
      "term_bound", base_series,
      [](S s, std::size_t n) { return term_bound(IdealElement(s.pair_at(0)), n); },
      [](S s) {
        const IdealElement base(s.pair_at(0));
        return term_bound(base, base.precision());
      }));
  props.push_back(stable(
      "phi_apply", base_series,
      [](S s, std::size_t n) { return phi_apply(IdealElement(s.pair_at(0)), s.at(2)).truncate(n); },
      [](S s) { return phi_apply(IdealElement(s.pair_at(0)), s.at(2)); }));
  props.push_back(stable(
      "star_mul / star_inverse / star_exp / star_log / star_generalized_power",
      base_series,
      [](S s, std::size_t n) {
        const auto f = element_at(s, 2), g = element_at(s, 3);
        return std::vector<CauchyElement>{
            star_mul(f, g).truncate(n), star_inverse(g).truncate(n),
            star_exp(g - CauchyElement::unit(g.base())).truncate(n), star_log(g).truncate(n),
            star_generalized_power(g, s.scalar(0)).truncate(n)};
      },
      [](S s) {
        const auto f = element_at(s, 2), g = element_at(s, 3);
        return std::vector<CauchyElement>{
            star_mul(f, g), star_inverse(g), star_exp(g - CauchyElement::unit(g.base())), star_log(g),
            star_generalized_power(g, s.scalar(0))};
      }));
  props.push_back(stable(
      "realize", base_series,
      [](S s, std::size_t n) { return realize(element_at(s, 2)).truncate(n); },
      [](S s) { return realize(element_at(s, 2)); }));
  props.push_back(stable(
      "to_matrix", two_pairs,
      [](S s, std::size_t n) {
        const auto a = s.pair_at(0);
        return std::vector<RiordanMatrix>{to_matrix(a, n), to_matrix(a, a.precision()).leading(n)};
      },
      [](S s) {
        const auto a = s.pair_at(0);
        return std::vector<RiordanMatrix>{to_matrix(a, a.precision()), to_matrix(a, a.precision())};
      }));
  props.push_back(stable(
      "matmul", two_pairs,
      [](S s, std::size_t n) {
        const auto a = s.pair_at(0), b = s.pair_at(2);
        return matmul(to_matrix(a, a.precision()), to_matrix(b, b.precision())).leading(n);
      },
      [](S s) {
        const auto a = s.pair_at(0), b = s.pair_at(2);
        return matmul(to_matrix(a, a.precision()), to_matrix(b, b.precision()));
      }));
  props.push_back(stable(
      "egf_table", group_pair,
      [](S s, std::size_t n) {
        // top-left block of the fine table
        const auto a = s.pair_at(0);
        const std::size_t big = a.precision();
        const auto table = egf_table(a, big);
        std::vector<Rational> block;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            block.push_back(table[i * big + j]);
        return block;
      },
      [](S s) {
        const auto a = s.pair_at(0);
        return egf_table(a, a.precision());
      }));
  return props;
}

// --- text ------------------------------------------------------------------

Props text_suite()
{
  Props props;
  props.push_back({"parse_series(format_series(s)) = s",
                   [](Generator& gen, std::size_t n) { return Sample{}.add("s", gen.series(n)); },
                   [](const Sample& s) { return parse_series(format_series(s.at(0))) == s.at(0); }});
  props.push_back({"parse_pair(format_pair(p)) = p",
                   [](Generator& gen, std::size_t n) { return Sample{}.add("p", gen.pair(n)); },
                   [](const Sample& s) {
                     const auto p = s.pair_at(0);
                     return parse_pair(format_pair(p), p.precision()) == p;
                   }});
  return props;
}

const std::vector<SuiteInfo> kSuites = {
    {"counterexample", "worked x|-power vs binomial-series counterexample", 1, 5},
    {"valuation", "valuation laws for products, sums and substitution", 500, 16},
    {"near-algebra", "near-algebra axioms of x| and the left-distributivity failure", 200, 12},
    {"power", "closed-form x|-powers against iterated products", 100, 12},
    {"calculus", "formal calculus: linearity, shift identity, ranges, term bound", 200, 12},
    {"cauchy", "Cauchy-product algebra, exp/log and generalized powers", 50, 10},
    {"matrix", "Riordan matrices: columns, Pascal, product order, EGF", 100, 8},
    {"group", "Riordan group inverse and closure", 200, 12},
    {"truncation", "every operation commutes with truncation 16 -> 8", 100, 16},
    {"series", "substitution and inverse laws in K[[x]]", 200, 12},
    {"text", "print/parse round trips", 1000, 12},
};

} // namespace

const std::vector<SuiteInfo>& suites()
{
  return kSuites;
}

std::optional<SuiteInfo> find_suite(const std::string& name)
{
  for (const auto& s : kSuites)
    if (s.name == name)
      return s;
  return std::nullopt;
}

std::vector<Property> suite_properties(const std::string& name, std::size_t precision)
{
  if (name == "counterexample") return counterexample_suite(precision);
  if (name == "valuation") return valuation_suite();
  if (name == "near-algebra") return near_algebra_suite();
  if (name == "power") return power_suite();
  if (name == "calculus") return calculus_suite();
  if (name == "cauchy") return cauchy_suite();
  if (name == "matrix") return matrix_suite(precision);
  if (name == "group") return group_suite();
  if (name == "truncation") return truncation_suite();
  if (name == "series") return series_suite();
  if (name == "text") return text_suite();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteReport run_suite(const std::string& name, const CheckConfig& config)
{
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.name = name;
  Generator gen(config.seed);
  for (const Property& p : suite_properties(name, config.precision))
    report.properties.push_back(run_property(p, gen, config.trials, config.precision));
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace riordan::checks
