#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "riordan/generators.hpp"

namespace riordan::checks {

/// Inputs of one property trial: labelled series and scalars. Pairs are
/// stored as two consecutive series.
struct Sample
{
  std::vector<std::string> labels;
  std::vector<Series> series;
  std::vector<std::string> scalar_labels;
  std::vector<Rational> scalars;

  Sample& add(std::string label, Series s);
  Sample& add(std::string label, const RiordanElement& a);
  Sample& add_scalar(std::string label, Rational r);

  const Series& at(std::size_t i) const { return series.at(i); }
  RiordanElement pair_at(std::size_t i) const { return RiordanElement(series.at(i), series.at(i + 1)); }
  const Rational& scalar(std::size_t i) const { return scalars.at(i); }
  std::size_t natural(std::size_t i) const;

  std::string describe() const;
};

/// A law checked on generated samples. `holds` returns true vacuously when
/// a sample misses the law's precondition; a domain Error thrown by `holds`
/// counts as a failure on a generated sample and as "invalid" while
/// shrinking.
struct Property
{
  std::string name;
  std::function<Sample(Generator&, std::size_t precision)> generate;
  std::function<bool(const Sample&)> holds;
  bool randomized = true;
};

struct PropertyResult
{
  std::string name;
  std::size_t trials = 0;
  bool passed = true;
  /// Shrunk failing sample, rendered in the text grammar.
  std::string counterexample;
  std::string message;
};

struct SuiteReport
{
  std::string name;
  std::vector<PropertyResult> properties;
  double seconds = 0;

  bool passed() const;
};

struct CheckConfig
{
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::size_t precision = 16;
};

/// Runs a property `trials` times (once if not randomized). Stops at the
/// first failure and shrinks it.
PropertyResult run_property(const Property& p, Generator& gen, std::size_t trials,
                            std::size_t precision);

/// Greedy shrinking: zero out or simplify coefficients and scalars while the
/// property keeps failing.
Sample shrink(const Property& p, Sample failing);

struct SuiteInfo
{
  std::string name;
  std::string summary;
  std::size_t default_trials;
  std::size_t default_precision;
};

/// Registered suites, in acceptance order.
const std::vector<SuiteInfo>& suites();
std::optional<SuiteInfo> find_suite(const std::string& name);

std::vector<Property> suite_properties(const std::string& name, std::size_t precision);
SuiteReport run_suite(const std::string& name, const CheckConfig& config);

} // namespace riordan::checks
