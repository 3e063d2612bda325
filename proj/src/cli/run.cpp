#include <nlohmann/json.hpp>

#include <charconv>
#include <iomanip>

#include "zetasums/cli.hpp"
#include "zetasums/errors.hpp"
#include "zetasums/verify.hpp"

namespace zetasums::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson form_json(const ClosedForm& f) { return ojson::parse(to_json_text(f)); }

ojson ball_json(const Ball& b, int digits) {
  return {{"mid", b.to_fixed(digits)}, {"rad", b.rad_string()}};
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'", "");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

int do_derive(const DeriveCmd& cmd, std::ostream& out) {
  const SumIndex index{cmd.weight, cmd.r, cmd.anchor};
  const ClosedForm form = derive_for_index(index);
  switch (cmd.format) {
    case Format::Text:
      out << series_label(index) << " = " << to_pretty(form) << "\n";
      out << "canonical: " << to_canonical_text(form) << "\n";
      break;
    case Format::Json: {
      ojson j;
      j["anchor"] = anchor_name(index.anchor);
      j["weight"] = index.weight;
      j["b"] = index.bpow;
      j["series"] = series_label(index);
      j["closed_form"] = form_json(form);
      j["canonical"] = to_canonical_text(form);
      out << j.dump() << "\n";
      break;
    }
    case Format::Latex:
      out << series_latex(index) << " = " << to_latex(form) << "\n";
      break;
  }
  return kOk;
}

struct EvalResult {
  std::string label;
  Ball value;
};

EvalResult evaluate_target(const std::string& target, const Precision& prec, std::uint64_t ceiling) {
  if (target.starts_with("sum:")) {
    const auto parts = split(target, ':');
    if (parts.size() != 4 || (parts[3] != "quarter" && parts[3] != "half")) {
      throw UsageError("sum target must look like sum:<w>:<b>:<quarter|half>", "");
    }
    const SumIndex index{parse_int(parts[1], "weight"), parse_int(parts[2], "power"),
                         parts[3] == "quarter" ? Anchor::Quarter : Anchor::Half};
    SeriesOptions options;
    options.effort_ceiling = ceiling;
    return {series_label(index), eval_series(index, prec, options).value};
  }
  if (target.starts_with("psi:")) {
    const auto parts = split(target, ':');
    if (parts.size() != 3) throw UsageError("psi target must look like psi:<m>:<p/q>", "");
    Rational x;
    try {
      x = Rational::parse(parts[2]);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what(), "");
    }
    const int m = parse_int(parts[1], "order");
    if (m < 0 || x.sign() <= 0) throw UsageError("psi needs m >= 0 and a positive point", "");
    return {"psi^(" + std::to_string(m) + ")(" + x.to_string() + ")", eval_polygamma(m, x, prec)};
  }
  BasisSymbol symbol = BasisSymbol::one();
  try {
    symbol = target == "G" || target == "catalan" ? BasisSymbol::catalan() : BasisSymbol::from_key(target);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what(), "");
  }
  return {target, eval_constant(symbol, prec)};
}

int do_eval(const EvalCmd& cmd, std::uint64_t ceiling, std::ostream& out) {
  const Precision prec(cmd.digits);
  const EvalResult res = evaluate_target(cmd.target, prec, ceiling);
  if (cmd.format == Format::Json) {
    ojson j;
    j["target"] = cmd.target;
    j["label"] = res.label;
    j["digits"] = cmd.digits;
    j["mid"] = res.value.to_fixed(cmd.digits);
    j["rad"] = res.value.rad_string();
    out << j.dump() << "\n";
  } else {
    out << res.label << " = " << res.value.to_fixed(cmd.digits) << " +/- " << res.value.rad_string() << "\n";
  }
  return kOk;
}

int do_verify(const VerifyCmd& cmd, std::uint64_t ceiling, std::ostream& out) {
  SeriesOptions options;
  options.effort_ceiling = ceiling;
  int checked = 0;
  int passed = 0;
  for (Anchor anchor : cmd.anchors) {
    for (int weight : cmd.weights) {
      for (int r = weight == -1 ? 1 : 2; r <= cmd.r_max; ++r) {
        const int digits = cmd.digits.value_or(default_verify_digits(r));
        const VerificationReport rep = verify_identity(r, anchor, weight, Precision(digits), options);
        ++checked;
        if (rep.pass) ++passed;
        if (cmd.format == Format::Json) {
          ojson j;
          j["anchor"] = anchor_name(anchor);
          j["weight"] = weight;
          j["b"] = r;
          j["digits"] = digits;
          j["pass"] = rep.pass;
          j["closed_form"] = form_json(rep.form);
          j["series"] = ball_json(rep.left, digits + 5);
          j["closed"] = ball_json(rep.right, digits + 5);
          j["difference"] = ball_json(rep.difference, digits + 5);
          j["terms"] = rep.terms;
          j["accelerated"] = rep.accelerated;
          j["elapsed_ms"] = rep.elapsed_ms;
          out << j.dump() << "\n";
        } else {
          out << (rep.pass ? "PASS " : "FAIL ") << anchor_name(anchor) << " w=" << weight << " b=" << r
              << " digits=" << digits << ": " << series_label(rep.index) << " = " << to_pretty(rep.form)
              << "  [series " << rep.left.to_fixed(digits) << ", diff " << rep.difference.to_scientific(2)
              << " +/- " << rep.difference.rad_string() << ", " << rep.terms << " terms"
              << (rep.accelerated ? " + tail expansion" : "") << "]\n";
        }
      }
    }
  }
  if (cmd.format == Format::Text) out << passed << "/" << checked << " identities verified\n";
  return passed == checked ? kOk : kVerifyFailed;
}

int do_bench(const BenchCmd& cmd, std::uint64_t ceiling, std::ostream& out) {
  const auto rows = bench_convergence(cmd.r, cmd.digits_list, ceiling);
  for (const auto& row : rows) {
    if (cmd.format == Format::Json) {
      ojson j;
      j["method"] = row.method;
      j["constant"] = row.constant;
      j["digits"] = row.digits;
      j["terms"] = row.terms;
      j["exceeded"] = row.exceeded;
      j["pass"] = row.pass;
      j["radius"] = row.value ? row.value->rad_string() : "";
      j["elapsed_ms"] = row.elapsed_ms;
      out << j.dump() << "\n";
    } else {
      out << std::left << std::setw(26) << row.method << " " << std::setw(7) << row.constant << " digits="
          << std::setw(4) << row.digits << " terms=" << std::setw(12) << row.terms;
      if (row.exceeded) {
        out << " exceeds effort ceiling " << ceiling;
      } else {
        out << " radius=" << row.value->rad_string() << " " << std::fixed << std::setprecision(1)
            << row.elapsed_ms << "ms";
        out.unsetf(std::ios::floatfield);
      }
      out << "\n";
    }
  }
  return kOk;
}

int do_table(const TableCmd& cmd, std::ostream& out) {
  emit_table(table_rows(cmd.r_max, cmd.digits), cmd.format, cmd.digits, out);
  return kOk;
}

int do_approx(const ApproxCmd& cmd, std::ostream& out) {
  const ApproximationReport rep = approximation_report(Precision(cmd.digits));
  const int d = cmd.digits;
  if (cmd.format == Format::Json) {
    ojson j;
    j["digits"] = d;
    j["catalan"] = ball_json(rep.catalan, d);
    j["base"] = ball_json(rep.base, d);
    j["base_error"] = ball_json(rep.base_error, d);
    j["a1"] = ball_json(rep.first, d);
    j["a1_error"] = ball_json(rep.first_error, d);
    j["a2"] = ball_json(rep.second, d);
    j["a2_error"] = ball_json(rep.second_error, d);
    j["improves"] = rep.improves;
    out << j.dump() << "\n";
  } else {
    auto line = [&](const std::string& name, const Ball& b) {
      out << std::left << std::setw(48) << name << b.to_fixed(d) << "\n";
    };
    line("G", rep.catalan);
    line("3(1 - log2)", rep.base);
    line("|G - 3(1 - log2)|", rep.base_error);
    line("A1 = 3(1 - log2) - zeta(5)/256", rep.first);
    line("|G - A1|", rep.first_error);
    line("A2 = 3(1 - log2) - 1/225 - (zeta(5) - 1)/256", rep.second);
    line("|G - A2|", rep.second_error);
    out << "A2 improves on A1 improves on 3(1 - log2): " << (rep.improves ? "yes" : "no") << "\n";
  }
  return rep.improves ? kOk : kVerifyFailed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    const std::uint64_t ceiling = effort_ceiling_from_env();
    const Command cmd = parse_command(args);
    return std::visit(
        [&](const auto& c) -> int {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, DeriveCmd>) return do_derive(c, out);
          if constexpr (std::is_same_v<T, EvalCmd>) return do_eval(c, ceiling, out);
          if constexpr (std::is_same_v<T, VerifyCmd>) return do_verify(c, ceiling, out);
          if constexpr (std::is_same_v<T, BenchCmd>) return do_bench(c, ceiling, out);
          if constexpr (std::is_same_v<T, TableCmd>) return do_table(c, out);
          if constexpr (std::is_same_v<T, ApproxCmd>) return do_approx(c, out);
        },
        cmd);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    if (!e.help().empty()) err << e.help();
    return kUsage;
  } catch (const EffortExceeded& e) {
    err << "error: " << e.what() << " (raise " << kEffortEnv << " to allow more)\n";
    return kEffortExceeded;
  } catch (const UnsupportedConstant& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DivergentIndex& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace zetasums::cli
