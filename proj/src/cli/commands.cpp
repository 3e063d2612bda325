#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "zetasums/cli.hpp"

namespace zetasums::cli {

namespace {

const std::map<std::string, Format> kFormats{
    {"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}};

const std::map<std::string, Anchor> kAnchors{{"quarter", Anchor::Quarter}, {"half", Anchor::Half}};

CLI::Option* add_format(CLI::App* app, std::string& format, bool with_latex = true) {
  std::vector<std::string> allowed{"text", "json"};
  if (with_latex) allowed.emplace_back("latex");
  return app->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(allowed))
      ->default_str("text");
}

std::vector<Anchor> expand_anchor(const std::string& a) {
  if (a == "both") return {Anchor::Quarter, Anchor::Half};
  return {kAnchors.at(a)};
}

std::vector<int> expand_weight(const std::string& w) {
  if (w == "both") return {-1, 1};
  return {w == "1" || w == "+1" ? 1 : -1};
}

}  // namespace

Command parse_command(std::span<const std::string> args) {
  CLI::App app{"Exact closed forms and certified values for sum 1/(n (16n^2-1)^r) and relatives",
               "zetasums"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string format = "text";
  std::string anchor = "quarter";
  std::string weight = "-1";

  DeriveCmd derive;
  auto* derive_app = app.add_subcommand("derive", "Derive the exact closed form of one series");
  derive_app->add_option("--r,-r", derive.r, "Power b of the denominator (r >= 1; r >= 2 for weight +1)")
      ->required()
      ->check(CLI::PositiveNumber);
  derive_app->add_option("--anchor", anchor, "quarter (16n^2-1) or half (4n^2-1)")
      ->check(CLI::IsMember({"quarter", "half"}));
  derive_app->add_option("--weight", weight, "Exponent of n in the numerator: -1 or 1")
      ->check(CLI::IsMember({"-1", "1", "+1"}));
  add_format(derive_app, format);

  EvalCmd eval;
  auto* eval_app = app.add_subcommand("eval", "Certified numeric value of a constant, series or polygamma");
  eval_app
      ->add_option("--target", eval.target,
                   "log2 | pi | G | beta<k> | zeta<s> | sum:<w>:<b>:<anchor> | psi:<m>:<p/q>")
      ->required();
  eval_app->add_option("--digits", eval.digits, "Decimal digits")->check(CLI::PositiveNumber);
  add_format(eval_app, format, false);

  VerifyCmd verify;
  std::optional<int> verify_digits;
  auto* verify_app = app.add_subcommand("verify", "Check derived identities numerically");
  verify_app->add_option("--r-max", verify.r_max, "Check r = 1..r_max")->check(CLI::PositiveNumber);
  verify_app->add_option("--anchor", anchor, "quarter, half or both")
      ->check(CLI::IsMember({"quarter", "half", "both"}));
  verify_app->add_option("--weight", weight, "-1, 1 or both")->check(CLI::IsMember({"-1", "1", "+1", "both"}));
  verify_app->add_option("--digits", verify_digits, "Decimal digits (default 20 for r <= 3, 40 above)")
      ->check(CLI::PositiveNumber);
  add_format(verify_app, format, false);

  BenchCmd bench;
  auto* bench_app = app.add_subcommand("bench", "Terms needed: S_r route versus the defining series");
  bench_app->add_option("--r,-r", bench.r, "r >= 2")->check(CLI::Range(2, 1000));
  bench_app->add_option("--digits", bench.digits_list, "Comma-separated digit targets")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  add_format(bench_app, format, false);

  TableCmd table;
  auto* table_app = app.add_subcommand("table", "Closed forms for both anchors and weights");
  table_app->add_option("--r-max", table.r_max, "Largest b")->check(CLI::PositiveNumber);
  table_app->add_option("--digits", table.digits, "Displayed significant digits")->check(CLI::Range(1, 200));
  add_format(table_app, format);

  ApproxCmd approx;
  auto* approx_app = app.add_subcommand("approx", "zeta(5) approximations to Catalan's constant");
  approx_app->add_option("--digits", approx.digits, "Decimal digits")->check(CLI::PositiveNumber);
  add_format(approx_app, format, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    std::string help;
    for (const auto* sub : app.get_subcommands()) help = sub->help();
    if (help.empty()) help = app.help();
    throw UsageError(e.what(), help);
  }

  const Format fmt = kFormats.at(format);
  if (derive_app->parsed()) {
    derive.anchor = kAnchors.at(anchor);
    derive.weight = expand_weight(weight).front();
    derive.format = fmt;
    if (derive.weight == 1 && derive.r < 2) {
      throw UsageError("--r must be >= 2 for weight +1", derive_app->help());
    }
    return derive;
  }
  if (eval_app->parsed()) {
    eval.format = fmt;
    return eval;
  }
  if (verify_app->parsed()) {
    verify.anchors = expand_anchor(anchor);
    verify.weights = expand_weight(weight);
    verify.digits = verify_digits;
    verify.format = fmt;
    return verify;
  }
  if (bench_app->parsed()) {
    bench.format = fmt;
    return bench;
  }
  if (table_app->parsed()) {
    table.format = fmt;
    return table;
  }
  approx.format = fmt;
  return approx;
}

std::uint64_t effort_ceiling_from_env() {
  const char* raw = std::getenv(kEffortEnv);
  if (raw == nullptr || *raw == '\0') return SeriesOptions{}.effort_ceiling;
  const std::string text(raw);
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) || text.size() > 18) {
    throw UsageError(std::string(kEffortEnv) + " must be a positive integer, got '" + text + "'", "");
  }
  const std::uint64_t v = std::stoull(text);
  if (v == 0) throw UsageError(std::string(kEffortEnv) + " must be positive", "");
  return v;
}

int default_verify_digits(int r) { return r <= 3 ? 20 : 40; }

std::string series_label(const SumIndex& index) {
  const int s = anchor_scale(index.anchor);
  std::ostringstream os;
  if (index.weight == -1 && index.anchor == Anchor::Quarter) os << "S_" << index.bpow << " = ";
  os << "sum_{n>=1} ";
  if (index.weight == -1) {
    os << "1/(n*(" << s << "n^2-1)";
  } else if (index.weight == 1) {
    os << "n/((" << s << "n^2-1)";
  } else {
    os << "n^" << index.weight << "/((" << s << "n^2-1)";
  }
  if (index.bpow != 1) os << "^" << index.bpow;
  os << ")";
  return os.str();
}

std::string series_latex(const SumIndex& index) {
  const int s = anchor_scale(index.anchor);
  std::ostringstream os;
  os << "\\sum_{n=1}^{\\infty} \\frac{";
  if (index.weight == -1) {
    os << "1}{n(" << s << "n^2-1)";
  } else if (index.weight == 1) {
    os << "n}{(" << s << "n^2-1)";
  } else {
    os << "n^{" << index.weight << "}}{(" << s << "n^2-1)";
  }
  if (index.bpow != 1) os << "^{" << index.bpow << "}";
  os << "}";
  return os.str();
}

}  // namespace zetasums::cli
