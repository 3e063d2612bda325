#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <sstream>

#include "zetasums/cli.hpp"

using namespace zetasums;
using namespace zetasums::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

// Sets an environment variable for one scope.
class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST_CASE("exit codes") {
  CHECK(invoke({"derive", "--r", "2", "--anchor", "quarter"}).code == kOk);
  CHECK(invoke({"derive", "-r", "3", "--anchor", "half", "--weight", "1"}).code == kOk);
  CHECK(invoke({"eval", "--target", "G", "--digits", "15"}).code == kOk);
  CHECK(invoke({"eval", "--target", "psi:1:1/4"}).code == kOk);
  CHECK(invoke({"verify", "--r-max", "2", "--anchor", "both", "--weight", "both"}).code == kOk);
  CHECK(invoke({"table", "--r-max", "2", "--format", "latex"}).code == kOk);
  CHECK(invoke({"approx"}).code == kOk);
  CHECK(invoke({"--help"}).code == kOk);
  CHECK(invoke({"derive", "--help"}).code == kOk);

  const Outcome zero = invoke({"derive", "--r", "0"});
  CHECK(zero.code == kUsage);
  CHECK(zero.err.find("--r") != std::string::npos);
  CHECK(zero.err.find("Usage") != std::string::npos);

  CHECK(invoke({}).code == kUsage);
  CHECK(invoke({"frobnicate"}).code == kUsage);
  CHECK(invoke({"derive"}).code == kUsage);
  CHECK(invoke({"derive", "--r", "two"}).code == kUsage);
  CHECK(invoke({"derive", "--r", "1", "--weight", "1"}).code == kUsage);
  CHECK(invoke({"derive", "--r", "2", "--anchor", "third"}).code == kUsage);
  CHECK(invoke({"derive", "--r", "2", "--format", "xml"}).code == kUsage);
  CHECK(invoke({"eval", "--target", "gamma"}).code == kUsage);
  CHECK(invoke({"eval", "--target", "beta3"}).code == kUsage);
  CHECK(invoke({"eval", "--target", "sum:1:1:quarter"}).code == kUsage);
  CHECK(invoke({"eval", "--target", "sum:-1:x:quarter"}).code == kUsage);
  CHECK(invoke({"eval", "--target", "psi:1:0"}).code == kUsage);
  CHECK(invoke({"eval", "--target", "G", "--digits", "0"}).code == kUsage);
  CHECK(invoke({"bench", "--r", "1"}).code == kUsage);
  CHECK(invoke({"table", "--digits", "0"}).code == kUsage);
}

TEST_CASE("effort ceiling from the environment") {
  CHECK(effort_ceiling_from_env() == 10'000'000);
  {
    ScopedEnv env(kEffortEnv, "10");
    CHECK(effort_ceiling_from_env() == 10);
    const Outcome o = invoke({"eval", "--target", "sum:-1:1:quarter"});
    CHECK(o.code == kEffortExceeded);
    CHECK(o.err.find(kEffortEnv) != std::string::npos);
    // bench marks rows instead of failing
    CHECK(invoke({"bench", "--r", "2", "--digits", "10"}).code == kOk);
  }
  {
    ScopedEnv env(kEffortEnv, "lots");
    CHECK(invoke({"derive", "--r", "1"}).code == kUsage);
  }
  {
    ScopedEnv env(kEffortEnv, "0");
    CHECK(invoke({"derive", "--r", "1"}).code == kUsage);
  }
}

TEST_CASE("derive output") {
  const Outcome text = invoke({"derive", "--r", "2", "--anchor", "quarter"});
  CHECK(text.out ==
        "S_2 = sum_{n>=1} 1/(n*(16n^2-1)^2) = 3 - 3*log2 - G\n"
        "canonical: 3/1*one - 3/1*log2 - 1/1*beta2\n");

  CHECK(invoke({"derive", "--r", "1", "--format", "json"}).out ==
        R"j({"anchor":"quarter","weight":-1,"b":1,"series":"S_1 = sum_{n>=1} 1/(n*(16n^2-1))",)j"
        R"("closed_form":{"one":"-2/1","log2":"3/1"},"canonical":"-2/1*one + 3/1*log2"})"
        "\n");
  CHECK(invoke({"derive", "--r", "2", "--format", "json"}).out ==
        R"j({"anchor":"quarter","weight":-1,"b":2,"series":"S_2 = sum_{n>=1} 1/(n*(16n^2-1)^2)",)j"
        R"("closed_form":{"one":"3/1","log2":"-3/1","beta2":"-1/1"},"canonical":"3/1*one - 3/1*log2 - 1/1*beta2"})"
        "\n");
  CHECK(invoke({"derive", "--r", "3", "--format", "json"}).out ==
        R"j({"anchor":"quarter","weight":-1,"b":3,"series":"S_3 = sum_{n>=1} 1/(n*(16n^2-1)^3)",)j"
        R"("closed_form":{"one":"-15/4","log2":"3/1","beta2":"5/4","zeta3":"7/16"},)"
        R"("canonical":"-15/4*one + 3/1*log2 + 5/4*beta2 + 7/16*zeta3"})"
        "\n");

  CHECK(invoke({"derive", "--r", "2", "--weight", "+1", "--format", "latex"}).out ==
        "\\sum_{n=1}^{\\infty} \\frac{n}{(16n^2-1)^{2}} = \\frac{1}{16} - \\frac{1}{16}G\n");
  CHECK(invoke({"derive", "--r", "2", "--anchor", "half"}).out.starts_with(
      "sum_{n>=1} 1/(n*(4n^2-1)^2) = 3/2 - 2*log2\n"));
}

TEST_CASE("eval output") {
  const Outcome g = invoke({"eval", "--target", "G", "--digits", "15"});
  CHECK(g.out.starts_with("G = 0.915965594177219 +/- "));
  const auto j = nlohmann::json::parse(invoke({"eval", "--target", "zeta5", "--digits", "12", "--format", "json"}).out);
  CHECK(j["mid"] == "1.036927755143");
  CHECK(j["digits"] == 12);
  CHECK(invoke({"eval", "--target", "sum:-1:2:quarter", "--digits", "9"}).out.starts_with(
      "S_2 = sum_{n>=1} 1/(n*(16n^2-1)^2) = 0.004592864 +/- "));
}

TEST_CASE("verify sweep") {
  const Outcome o = invoke({"verify", "--r-max", "5", "--anchor", "quarter", "--digits", "20"});
  CHECK(o.code == kOk);
  const auto ls = lines(o.out);
  REQUIRE(ls.size() == 6);
  for (int r = 1; r <= 5; ++r) CHECK(ls[static_cast<std::size_t>(r - 1)].starts_with("PASS quarter w=-1 b=" + std::to_string(r)));
  CHECK(ls[3].find("35/8 - 3*log2 - 11/8*G - 1/4*beta(4) - 21/32*zeta(3)") != std::string::npos);
  CHECK(ls[4].find("-315/64 + 3*log2 + 93/64*G + 7/16*beta(4) + 203/256*zeta(3) + 31/256*zeta(5)") !=
        std::string::npos);
  CHECK(ls[5] == "5/5 identities verified");

  const Outcome js = invoke({"verify", "--r-max", "3", "--anchor", "half", "--weight", "both", "--format", "json"});
  const auto jl = lines(js.out);
  CHECK(jl.size() == 5);
  for (const auto& l : jl) CHECK(nlohmann::json::parse(l)["pass"] == true);
}

TEST_CASE("table rows") {
  const auto rows = table_rows(5, 20);
  CHECK(rows.size() == 2 * (5 + 4));
  const auto& s4 = rows[3];
  const auto& s5 = rows[4];
  CHECK(s4.index == SumIndex{-1, 4, Anchor::Quarter});
  CHECK(s4.value.to_scientific(18) == "1.97856927278422275e-5");
  CHECK(s5.value.to_scientific(17) == "1.3173820678770676e-6");
  CHECK(rows[5].index == SumIndex{1, 2, Anchor::Quarter});
  CHECK(rows[9].index == SumIndex{-1, 1, Anchor::Half});

  const auto text = lines(invoke({"table", "--r-max", "3"}).out);
  CHECK(text.size() == 10);
  CHECK(text[0] == "S_1 = sum_{n>=1} 1/(n*(16n^2-1)) = -2 + 3*log2  ~ 7.94415416798359e-2");
}

TEST_CASE("latex table agrees with json table") {
  const auto json_lines = lines(invoke({"table", "--r-max", "4", "--format", "json"}).out);
  const auto latex_lines = lines(invoke({"table", "--r-max", "4", "--format", "latex"}).out);
  REQUIRE(latex_lines.size() == json_lines.size() + 2);
  CHECK(latex_lines.front() == "\\begin{align*}");
  CHECK(latex_lines.back() == "\\end{align*}");
  for (std::size_t i = 0; i < json_lines.size(); ++i) {
    const auto j = nlohmann::json::parse(json_lines[i]);
    const ClosedForm form = closed_form_from_json(j["closed_form"].dump());
    const SumIndex index{j["weight"].get<int>(), j["b"].get<int>(),
                         j["anchor"] == "quarter" ? Anchor::Quarter : Anchor::Half};
    CHECK(form == derive_for_index(index));
    const std::string& l = latex_lines[i + 1];
    CHECK(l.starts_with(series_latex(index) + " &= " + to_latex(form) + " \\approx "));
    const std::string value = j["value"];
    CHECK(l.find(value.substr(0, value.find('e'))) != std::string::npos);
  }
}

TEST_CASE("bench convergence") {
  const auto rows = bench_convergence(2, {10, 20}, 10'000'000);
  REQUIRE(rows.size() == 4);
  const BenchRow& series10 = rows[0];
  const BenchRow& direct10 = rows[1];
  const BenchRow& series20 = rows[2];
  const BenchRow& direct20 = rows[3];

  CHECK(series10.pass);
  CHECK(series10.terms <= 300);
  CHECK(direct10.pass);
  CHECK(direct10.terms > 100 * series10.terms);
  CHECK(series20.pass);
  CHECK(direct20.exceeded);
  CHECK(!direct20.value);
  CHECK(direct20.terms > 1'000'000'000);

  // b = 2 tail: N grows like 10^(d/4)
  const double ratio = static_cast<double>(series20.terms) / static_cast<double>(series10.terms);
  CHECK(ratio > 250.0);
  CHECK(ratio < 400.0);

  const auto r3 = bench_convergence(3, {10}, 10'000'000);
  CHECK(r3[0].pass);
  CHECK(r3[0].constant == "zeta3");
  CHECK(r3[0].terms < series10.terms);

  CHECK_THROWS_AS(bench_convergence(1, {10}, 100), std::invalid_argument);
}
