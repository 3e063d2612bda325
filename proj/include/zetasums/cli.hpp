#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "zetasums/ball.hpp"
#include "zetasums/closed_form.hpp"
#include "zetasums/derivation.hpp"
#include "zetasums/numerics.hpp"

namespace zetasums::cli {

enum class Format { Text, Json, Latex };

struct DeriveCmd {
  int r = 1;
  Anchor anchor = Anchor::Quarter;
  int weight = -1;
  Format format = Format::Text;
};

struct EvalCmd {
  std::string target;
  int digits = 20;
  Format format = Format::Text;
};

struct VerifyCmd {
  int r_max = 5;
  std::vector<Anchor> anchors{Anchor::Quarter};
  std::vector<int> weights{-1};
  /// Unset: 20 digits for r <= 3, 40 for r >= 4.
  std::optional<int> digits;
  Format format = Format::Text;
};

struct BenchCmd {
  int r = 2;
  std::vector<int> digits_list{10, 20};
  Format format = Format::Text;
};

struct TableCmd {
  int r_max = 5;
  int digits = 15;
  Format format = Format::Text;
};

struct ApproxCmd {
  int digits = 20;
  Format format = Format::Text;
};

using Command = std::variant<DeriveCmd, EvalCmd, VerifyCmd, BenchCmd, TableCmd, ApproxCmd>;

/// Bad command line.  what() is the message, help() the usage text.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& msg, std::string help) : std::runtime_error(msg), help_(std::move(help)) {}
  const std::string& help() const { return help_; }

 private:
  std::string help_;
};

/// Thrown for --help; carries the text to print.
struct HelpRequested {
  std::string text;
};

/// args excludes the program name.
Command parse_command(std::span<const std::string> args);

inline constexpr const char* kEffortEnv = "ZETASUMS_EFFORT_CEILING";

/// Effort ceiling, from ZETASUMS_EFFORT_CEILING when set.  Throws UsageError
/// on a malformed value.
std::uint64_t effort_ceiling_from_env();

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kEffortExceeded = 3 };

/// Parses, dispatches and prints.  args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// ---------------------------------------------------------------------------
// Building blocks behind the subcommands.

/// "S_2 = sum_{n>=1} 1/(n*(16n^2-1)^2)" style label.
std::string series_label(const SumIndex& index);
std::string series_latex(const SumIndex& index);

/// Digits used by `verify` when none are given.
int default_verify_digits(int r);

struct BenchRow {
  std::string method;
  std::string constant;
  int digits = 0;
  std::uint64_t terms = 0;
  /// Unset when the run was skipped for exceeding the effort ceiling.
  std::optional<Ball> value;
  bool exceeded = false;
  bool pass = false;
  double elapsed_ms = 0.0;
};

/// Terms needed to certify the constant introduced at order r - 1 (beta(r)
/// for even r, zeta(r) for odd r) via S_r versus its plain alternating
/// defining series.  Requires r >= 2.
std::vector<BenchRow> bench_convergence(int r, const std::vector<int>& digits_list,
                                        std::uint64_t effort_ceiling);

struct TableRow {
  SumIndex index;
  ClosedForm form;
  Ball value;
};

/// Both anchors; weight -1 for b = 1..r_max, weight +1 for b = 2..r_max.
std::vector<TableRow> table_rows(int r_max, int digits);
void emit_table(const std::vector<TableRow>& rows, Format format, int digits, std::ostream& out);

}  // namespace zetasums::cli
