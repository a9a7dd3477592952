#include "riordan/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "riordan/calculus.hpp"
#include "riordan/cauchy.hpp"
#include "riordan/checks.hpp"
#include "riordan/matrix.hpp"
#include "riordan/text.hpp"

namespace riordan::cli {

namespace {

using json = nlohmann::ordered_json;

/// Parsed inputs of the running command, rendered in the text grammar so a
/// domain error can show exactly what it was applied to.
class Inputs
{
public:
  explicit Inputs(std::size_t precision) : precision_(precision) {}

  std::size_t precision() const { return precision_; }

  Series series(const std::string& label, const std::string& text)
  {
    Series s = parse_series(text, precision_);
    rendered_.push_back(label + " = " + format_series(s));
    return s;
  }

  RiordanElement pair(const std::string& label, const std::string& text)
  {
    RiordanElement p = parse_pair(text, precision_);
    rendered_.push_back(label + " = " + format_pair(p));
    return p;
  }

  Rational scalar(const std::string& label, const std::string& text)
  {
    Rational r = Rational::parse(text);
    rendered_.push_back(label + " = " + r.str());
    return r;
  }

  const std::vector<std::string>& rendered() const { return rendered_; }

private:
  std::size_t precision_;
  std::vector<std::string> rendered_;
};

class Printer
{
public:
  Printer(std::ostream& out, Format format) : out_(out), format_(format) {}

  void series(const Series& s)
  {
    if (format_ == Format::Json)
      out_ << json{{"series", format_series(s)}}.dump() << '\n';
    else
      out_ << format_series(s) << '\n';
  }

  void pair(const RiordanElement& a)
  {
    if (format_ == Format::Json)
      out_ << json{{"mu", format_series(a.mu())}, {"sigma", format_series(a.sigma())}}.dump() << '\n';
    else
      out_ << format_pair(a) << '\n';
  }

  void cauchy(const CauchyElement& e)
  {
    if (format_ == Format::Json) {
      json rep = json::array();
      for (const Rational& c : e.rep().coeffs())
        rep.push_back(c.str());
      out_ << json{{"rep", rep}, {"base", format_pair(e.base().element())}}.dump() << '\n';
    } else {
      out_ << format_cauchy(e) << '\n';
    }
  }

  void matrix(const RiordanMatrix& m, const RiordanElement& source)
  {
    switch (format_) {
    case Format::Csv: out_ << to_csv(m); break;
    case Format::Json: out_ << to_json(m, source) << '\n'; break;
    case Format::Text: {
      std::vector<std::string> cells;
      std::size_t width = 1;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
          cells.push_back(m(i, j).str());
          width = std::max(width, cells.back().size());
        }
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          const std::string& c = cells[i * m.size() + j];
          out_ << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
        }
        out_ << '\n';
      }
      break;
    }
    }
  }

private:
  std::ostream& out_;
  Format format_;
};

std::size_t natural_from(const Rational& r, const char* what)
{
  if (!r.is_integer() || r.sign() < 0)
    throw Error(ErrorKind::PreconditionViolation, std::string(what) + " must be a natural number");
  return static_cast<std::size_t>(r.raw().get_num().get_ui());
}

int run_star(const Star& cmd, Inputs& in, Printer& print)
{
  const IdealElement base(in.pair("base", cmd.base));
  auto arity = [&](std::size_t n) {
    if (cmd.args.size() != n)
      throw CLI::ValidationError("star " + cmd.op, "expects " + std::to_string(n) + " argument(s)");
  };
  auto element = [&](std::size_t i) {
    return from_series(base, in.series("arg" + std::to_string(i + 1), cmd.args[i]));
  };

  if (cmd.op == "realize") {
    arity(1);
    print.pair(realize(element(0)));
  } else if (cmd.op == "mul") {
    arity(2);
    print.cauchy(star_mul(element(0), element(1)));
  } else if (cmd.op == "power") {
    arity(2);
    const auto a = element(0);
    print.cauchy(star_power(a, natural_from(in.scalar("n", cmd.args[1]), "n")));
  } else if (cmd.op == "inverse") {
    arity(1);
    print.cauchy(star_inverse(element(0)));
  } else if (cmd.op == "exp") {
    arity(1);
    print.cauchy(star_exp(element(0)));
  } else if (cmd.op == "log") {
    arity(1);
    print.cauchy(star_log(element(0)));
  } else if (cmd.op == "genpow") {
    arity(2);
    const auto a = element(0);
    print.cauchy(star_generalized_power(a, in.scalar("lambda", cmd.args[1])));
  } else {
    throw CLI::ValidationError("star", "unknown operation '" + cmd.op + "'");
  }
  return kOk;
}

int run_genpow(const Genpow& cmd, Inputs& in, Printer& print)
{
  const GroupElement g(in.pair("pair", cmd.pair));
  const Rational lambda = in.scalar("lambda", cmd.lambda);
  if (cmd.mode == "star") {
    const IdealElement base = g.ideal_part();
    const CauchyElement a = CauchyElement::unit(base) + CauchyElement::delta(base, 1);
    print.pair(realize(star_generalized_power(a, lambda)));
  } else if (cmd.mode == "binomial") {
    print.pair(rtimes_binomial_power(g, lambda).element());
  } else {
    print.pair(rtimes_power(g.element(), natural_from(lambda, "lambda in rtimes mode")));
  }
  return kOk;
}

int run_check(const Check& cmd, const Options& options, std::ostream& out)
{
  std::vector<std::string> names;
  if (cmd.suite == "all")
    for (const auto& s : checks::suites())
      names.push_back(s.name);
  else
    names.push_back(cmd.suite);

  json reports = json::array();
  bool all_passed = true;
  for (const auto& name : names) {
    const auto info = checks::find_suite(name);
    checks::CheckConfig config;
    config.seed = options.seed;
    config.trials = options.trials.value_or(info->default_trials);
    config.precision = options.precision.value_or(info->default_precision);
    const checks::SuiteReport report = checks::run_suite(name, config);
    all_passed &= report.passed();

    if (options.format == Format::Json) {
      json props = json::array();
      for (const auto& p : report.properties)
        props.push_back({{"name", p.name},
                         {"passed", p.passed},
                         {"trials", p.trials},
                         {"counterexample", p.counterexample},
                         {"message", p.message}});
      reports.push_back({{"suite", name},
                         {"passed", report.passed()},
                         {"seconds", report.seconds},
                         {"properties", props}});
      continue;
    }
    for (const auto& p : report.properties) {
      out << (p.passed ? "PASS " : "FAIL ") << name << ": " << p.name << " (" << p.trials
          << (p.trials == 1 ? " trial" : " trials") << ")\n";
      if (!p.passed) {
        out << "  " << p.message << '\n';
        if (!p.counterexample.empty())
          out << "  counterexample: " << p.counterexample << '\n';
      }
    }
    out << (report.passed() ? "ok   " : "FAIL ") << name << " [N=" << config.precision
        << ", seed=" << config.seed << "] " << report.seconds << " s\n";
  }
  if (options.format == Format::Json)
    out << reports.dump(2) << '\n';
  return all_passed ? kOk : kPropertyViolation;
}

struct Dispatch
{
  const Options& options;
  Inputs& in;
  Printer& print;
  std::ostream& out;

  int operator()(const Eval& c) { print.series(in.series("series", c.series)); return kOk; }
  int operator()(const Compose& c)
  {
    const Series f = in.series("f", c.f);
    const Series sigma = in.series("sigma", c.sigma);
    print.series(substitute(f, sigma));
    return kOk;
  }
  int operator()(const Rtimes& c)
  {
    const auto a = in.pair("a", c.a);
    const auto b = in.pair("b", c.b);
    print.pair(rtimes(a, b));
    return kOk;
  }
  int operator()(const Power& c) { print.pair(rtimes_power(in.pair("pair", c.pair), c.n)); return kOk; }
  int operator()(const Inverse& c)
  {
    print.pair(group_inverse(GroupElement(in.pair("pair", c.pair))).element());
    return kOk;
  }
  int operator()(const Phi& c)
  {
    const IdealElement base(in.pair("base", c.base));
    print.pair(phi_apply(base, in.series("f", c.series)));
    return kOk;
  }
  int operator()(const Star& c) { return run_star(c, in, print); }
  int operator()(const Genpow& c) { return run_genpow(c, in, print); }
  int operator()(const Matrix& c)
  {
    const auto a = in.pair("pair", c.pair);
    print.matrix(to_matrix(a, c.n), a);
    return kOk;
  }
  int operator()(const Check& c) { return run_check(c, options, out); }
};

} // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err)
{
  const bool is_matrix = std::holds_alternative<Matrix>(cmd.action);
  if (cmd.options.format == Format::Csv && !is_matrix) {
    err << "error: --format csv only applies to the matrix command\n";
    return kUsageError;
  }

  std::size_t precision = cmd.options.precision.value_or(kDefaultPrecision);
  // a matrix of size n needs at least n coefficients
  if (const auto* m = std::get_if<Matrix>(&cmd.action); m && !cmd.options.precision)
    precision = std::max(precision, m->n);

  Inputs in(precision);
  Printer print(out, cmd.options.format);
  try {
    return std::visit(Dispatch{cmd.options, in, print, out}, cmd.action);
  } catch (const ParseError& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kUsageError;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    for (const auto& line : in.rendered())
      err << "  input: " << line << '\n';
    return kDomainError;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact truncated power series, the Riordan near algebra and its formal calculus",
               "riordan"};
  app.require_subcommand(1);

  Command cmd;
  std::size_t precision = 0, trials = 0;
  std::string format = "text";
  auto* precision_opt = app.add_option("--precision", precision, "Series precision N (default 16)")
                            ->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
  app.add_option("--seed", cmd.options.seed, "Seed for randomized check suites (default 0)");
  auto* trials_opt = app.add_option("--trials", trials, "Trials per property (default: suite's own)")
                         ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  Eval eval;
  auto* eval_cmd = app.add_subcommand("eval", "Parse a series and print it canonically");
  eval_cmd->add_option("series", eval.series)->required();

  Compose compose;
  auto* compose_cmd = app.add_subcommand("compose", "Substitute sigma into f");
  compose_cmd->add_option("f", compose.f)->required();
  compose_cmd->add_option("sigma", compose.sigma)->required();

  Rtimes rt;
  auto* rtimes_cmd = app.add_subcommand("rtimes", "Semi-direct product of two pairs");
  rtimes_cmd->add_option("a", rt.a)->required();
  rtimes_cmd->add_option("b", rt.b)->required();

  Power power;
  auto* power_cmd = app.add_subcommand("power", "n-th semi-direct power of a pair");
  power_cmd->add_option("pair", power.pair)->required();
  power_cmd->add_option("n", power.n)->required();

  Inverse inverse;
  auto* inverse_cmd = app.add_subcommand("inverse", "Inverse in the Riordan group");
  inverse_cmd->add_option("pair", inverse.pair)->required();

  Phi phi;
  auto* phi_cmd = app.add_subcommand("phi", "Substitute an ideal pair into a series");
  phi_cmd->add_option("base", phi.base)->required();
  phi_cmd->add_option("series", phi.series)->required();

  Star star;
  auto* star_cmd = app.add_subcommand(
      "star", "Cauchy-algebra operation over --base: realize, mul, power, inverse, exp, log, genpow");
  star_cmd->add_option("op", star.op)
      ->required()
      ->check(CLI::IsMember({"realize", "mul", "power", "inverse", "exp", "log", "genpow"}));
  star_cmd->add_option("args", star.args, "Representations (series) and scalars");
  star_cmd->add_option("--base", star.base, "Ideal pair (mu+ ; sigma+)")->required();

  Genpow genpow;
  auto* genpow_cmd = app.add_subcommand("genpow", "Generalized power of a Riordan group element");
  genpow_cmd->add_option("pair", genpow.pair)->required();
  genpow_cmd->add_option("lambda", genpow.lambda)->required();
  genpow_cmd->add_option("--mode", genpow.mode, "star (default), binomial, or rtimes")
      ->check(CLI::IsMember({"star", "binomial", "rtimes"}));

  Matrix matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "N x N Riordan matrix of a pair");
  matrix_cmd->add_option("pair", matrix.pair)->required();
  matrix_cmd->add_option("n", matrix.n)->required()->check(CLI::PositiveNumber);

  Check check;
  std::string suite_names = "all";
  for (const auto& s : checks::suites())
    suite_names += ", " + s.name;
  auto* check_cmd = app.add_subcommand("check", "Run property suites: " + suite_names);
  std::vector<std::string> allowed{"all"};
  for (const auto& s : checks::suites())
    allowed.push_back(s.name);
  check_cmd->add_option("suite", check.suite)->check(CLI::IsMember(allowed));

  for (auto* sub : app.get_subcommands({}))
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "Run with --help for usage.\n";
    return kUsageError;
  }

  if (*precision_opt)
    cmd.options.precision = precision;
  if (*trials_opt)
    cmd.options.trials = trials;
  cmd.options.format = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Text;

  if (*eval_cmd) cmd.action = eval;
  else if (*compose_cmd) cmd.action = compose;
  else if (*rtimes_cmd) cmd.action = rt;
  else if (*power_cmd) cmd.action = power;
  else if (*inverse_cmd) cmd.action = inverse;
  else if (*phi_cmd) cmd.action = phi;
  else if (*star_cmd) cmd.action = star;
  else if (*genpow_cmd) cmd.action = genpow;
  else if (*matrix_cmd) cmd.action = matrix;
  else cmd.action = check;

  return run(cmd, out, err);
}

} // namespace riordan::cli
