#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace riordan::cli {

enum class Format { Text, Csv, Json };

enum ExitCode : int {
  kOk = 0,
  kPropertyViolation = 1,
  kUsageError = 2,
  kDomainError = 3,
};

struct Options
{
  /// Unset means 16 for algebra commands and the suite's own precision for
  /// `check`.
  std::optional<std::size_t> precision;
  std::uint64_t seed = 0;
  /// Unset means each suite's own trial count for `check`.
  std::optional<std::size_t> trials;
  Format format = Format::Text;
};

struct Eval { std::string series; };
struct Compose { std::string f, sigma; };
struct Rtimes { std::string a, b; };
struct Power { std::string pair; std::size_t n = 0; };
struct Inverse { std::string pair; };
struct Phi { std::string base, series; };
struct Star { std::string op; std::string base; std::vector<std::string> args; };
struct Genpow { std::string pair; std::string lambda; std::string mode = "star"; };
struct Matrix { std::string pair; std::size_t n = 0; };
struct Check { std::string suite = "all"; };

using Action =
    std::variant<Eval, Compose, Rtimes, Power, Inverse, Phi, Star, Genpow, Matrix, Check>;

struct Command
{
  Options options;
  Action action;
};

constexpr std::size_t kDefaultPrecision = 16;

/// Executes a parsed command, writing results to out and diagnostics to err.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace riordan::cli
