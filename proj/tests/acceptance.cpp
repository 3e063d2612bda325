// Acceptance checks AC1..AC9.  Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "zetasums/cli.hpp"
#include "zetasums/errors.hpp"
#include "zetasums/verify.hpp"

using namespace zetasums;

namespace {

using Clock = std::chrono::steady_clock;

Rational dec(std::string_view s) {
  std::string digits;
  int scale = 0;
  bool after = false;
  for (char c : s) {
    if (c == '.') {
      after = true;
    } else {
      digits += c;
      if (after) ++scale;
    }
  }
  return Rational(BigInt(digits, 10), pow_int(10, static_cast<unsigned>(scale)));
}

Rational ten_to_minus(int k) { return Rational(BigInt(1), pow_int(10, static_cast<unsigned>(k))); }

// Largest distance from ref to any point of the ball.
Rational worst_error(const Ball& b, const Rational& ref) { return (b.mid() - ref).abs() + b.rad(); }

std::string sci(const Rational& q) { return format_scientific(q, 2); }

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

const BasisSymbol kOne = BasisSymbol::one();
const BasisSymbol kLog2 = BasisSymbol::log2();
const BasisSymbol kG = BasisSymbol::catalan();
const BasisSymbol kBeta4 = BasisSymbol::beta(4);
const BasisSymbol kZeta3 = BasisSymbol::zeta_odd(3);
const BasisSymbol kZeta5 = BasisSymbol::zeta_odd(5);

// ---------------------------------------------------------------------------

Check ac1() {
  Check c;
  const auto t0 = Clock::now();
  c.require(derive_closed_form(1, Anchor::Quarter) == ClosedForm{{kLog2, Rational(3)}, {kOne, Rational(-2)}}, "S_1");
  c.require(derive_closed_form(2, Anchor::Quarter) ==
                ClosedForm{{kOne, Rational(3)}, {kLog2, Rational(-3)}, {kG, Rational(-1)}},
            "S_2");
  const ClosedForm s3 =
      ClosedForm{{kZeta3, Rational(7)}, {kLog2, Rational(48)}, {kG, Rational(20)}, {kOne, Rational(-60)}} *
      Rational(1, 16);
  c.require(derive_closed_form(3, Anchor::Quarter) == s3, "S_3");
  c.require(derive_closed_form(1, Anchor::Half) == ClosedForm{{kLog2, Rational(2)}, {kOne, Rational(-1)}},
            "half b=1");
  c.require(derive_closed_form(2, Anchor::Half) == ClosedForm{{kOne, Rational(3, 2)}, {kLog2, Rational(-2)}},
            "half b=2");
  c.require(derive_weighted_closed_form(2, Anchor::Quarter) ==
                ClosedForm{{kOne, Rational(1)}, {kG, Rational(-1)}} * Rational(1, 16),
            "weighted b=2");
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  c.notes << " six identities exact, " << std::fixed << std::setprecision(1) << ms << " ms";
  return c;
}

Check ac2() {
  Check c;
  const Precision p(20);
  const Ball s2 = eval_closed_form(derive_closed_form(2, Anchor::Quarter), p);
  const Ball rest = eval_closed_form(ClosedForm{{kOne, Rational(3)}, {kLog2, Rational(-3)}}, p);
  const Ball g = -(s2 - rest);
  const Rational eg = worst_error(g, dec("0.915965594"));
  c.require(eg <= Rational(5, 10000000000), "G");

  const Ball series = eval_series({-1, 2, Anchor::Quarter}, p).value;
  const Rational es = worst_error(series, dec("0.004592864"));
  c.require(es <= Rational(5, 10000000000), "series");

  const Ball z5 = eval_constant(kZeta5, p);
  const Rational ez = worst_error(z5, dec("1.0369277551"));
  c.require(ez <= Rational(5, 100000000000), "zeta5");
  c.notes << " G off quote by " << sci(eg) << ", series by " << sci(es) << ", zeta(5) by " << sci(ez);
  return c;
}

Check ac3() {
  Check c;
  const Precision p(40);
  const ClosedForm f4 = derive_closed_form(4, Anchor::Quarter);
  const ClosedForm f5 = derive_closed_form(5, Anchor::Quarter);

  // Quoted values, relative tolerance 1e-15.
  const Rational q4 = dec("0.0000197856927278423");
  const Rational q5 = dec("0.0000013173820678770678");
  const Ball v4 = eval_closed_form(f4, p);
  const Ball v5 = eval_closed_form(f5, p);
  const Rational rel4 = worst_error(v4, q4) / q4;
  const Rational rel5 = worst_error(v5, q5) / q5;
  c.require(rel4 <= ten_to_minus(15), "r=4 quote, rel. error " + sci(rel4));
  c.require(rel5 <= ten_to_minus(15), "r=5 quote, rel. error " + sci(rel5));

  // Independent high-precision references for the same sums.
  c.require(worst_error(v4, dec("0.0000197856927278422275399757944586316905567")) <= ten_to_minus(38), "r=4 ref");
  c.require(worst_error(v5, dec("0.00000131738206787706761440868475475317346022")) <= ten_to_minus(38), "r=5 ref");

  // The r = 4 form with its psi''' difference written through
  // psi'''(1/4) - psi'''(3/4) = 1536 beta(4); the conversion is checked first.
  const Ball d3 = eval_polygamma(3, Rational(1, 4), p) - eval_polygamma(3, Rational(3, 4), p);
  const Ball conv = d3 - eval_constant(kBeta4, p) * Rational(1536);
  c.require(conv.contains_zero() && conv.rad_at_most(ten_to_minus(30)), "psi''' conversion");
  const ClosedForm golden{{kBeta4, Rational(-1, 4)},
                          {kOne, Rational(35, 8)},
                          {kG, Rational(-11, 8)},
                          {kLog2, Rational(-3)},
                          {kZeta3, Rational(-21, 32)}};
  c.require(f4 == golden, "r=4 exact form");
  c.notes << " r=4 rel. error vs quote " << sci(rel4) << ", r=5 " << sci(rel5);
  return c;
}

Check ac4() {
  Check c;
  const Precision p(40);
  const Rational tol = ten_to_minus(35);
  auto psi = [&](int m, const Rational& x) { return eval_polygamma(m, x, p); };
  const Rational q1(1, 4);
  const Rational q3(3, 4);

  Rational worst(0);
  auto check = [&](const Ball& lhs, const BasisSymbol& s, const Rational& k, const std::string& what) {
    const Ball diff = lhs - eval_constant(s, p) * k;
    const Rational e = diff.mid().abs() + diff.rad();
    worst = std::max(worst, e);
    c.require(e <= tol, what);
  };
  // odd order: psi^(2k-1)(1/4) - psi^(2k-1)(3/4) = (2k-1)! 2^(4k) beta(2k)
  check(psi(1, q1) - psi(1, q3), kG, Rational(16), "16G");
  check(psi(3, q1) - psi(3, q3), kBeta4, Rational(1536), "1536 beta(4)");
  // even order: psi^(2k)(1/4) + psi^(2k)(3/4) = -(2k)! 2^(2k+1) (2^(2k+1) - 1) zeta(2k+1)
  check(psi(2, q1) + psi(2, q3), kZeta3, Rational(-112), "-112 zeta(3)");
  check(psi(4, q1) + psi(4, q3), kZeta5, Rational(-23808), "-23808 zeta(5)");
  c.notes << " largest residual " << sci(worst);
  return c;
}

Check ac5() {
  Check c;
  int forms = 0;
  for (Anchor anchor : {Anchor::Quarter, Anchor::Half}) {
    for (int weight : {-1, 1}) {
      for (int r = weight == -1 ? 1 : 2; r <= 12; ++r) {
        const ClosedForm f = derive_for_index({weight, r, anchor});
        ++forms;
        if (!f.coefficient(BasisSymbol::euler_gamma()).is_zero() || !f.coefficient(BasisSymbol::pi()).is_zero()) {
          c.require(false, to_string(SumIndex{weight, r, anchor}));
        }
      }
    }
  }
  c.notes << " " << forms << " forms free of gamma and pi";
  return c;
}

Check ac6() {
  Check c;
  const auto t0 = Clock::now();
  SeriesOptions options;  // default 10^7 ceiling
  int passed = 0;
  int total = 0;
  std::uint64_t most_terms = 0;
  for (Anchor anchor : {Anchor::Quarter, Anchor::Half}) {
    for (int r = 1; r <= 8; ++r) {
      ++total;
      try {
        const auto rep = verify_identity(r, anchor, -1, Precision(cli::default_verify_digits(r)), options);
        most_terms = std::max(most_terms, rep.terms);
        if (rep.pass) {
          ++passed;
        } else {
          c.require(false, anchor_name(anchor) + " r=" + std::to_string(r));
        }
      } catch (const EffortExceeded& e) {
        c.require(false, anchor_name(anchor) + " r=" + std::to_string(r) + " hit the ceiling");
      }
    }
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(s < 300.0, "runtime");
  c.notes << " " << passed << "/" << total << " identities, at most " << most_terms << " terms, " << std::fixed
          << std::setprecision(1) << s << " s";
  return c;
}

Check ac7() {
  Check c;
  constexpr std::uint64_t kFar = 1000000;
  Rational tightest(1000);
  for (int b : {1, 2, 3}) {
    const SumIndex idx{-1, b, Anchor::Quarter};
    const Ball far = partial_sum(idx, kFar, 200, 4);
    for (std::uint64_t n : {10ULL, 100ULL, 1000ULL}) {
      const Ball residual = far - partial_sum(idx, n, 200);
      const Rational bound = tail_bound(idx, n);
      c.require(residual.upper() <= bound, "b=" + std::to_string(b) + " N=" + std::to_string(n));
      tightest = std::min(tightest, bound / residual.upper());
    }
  }
  c.notes << " 9 cases, smallest bound/residual ratio " << format_fixed(tightest, 3);
  return c;
}

Check ac8() {
  Check c;
  const auto rep = approximation_report(Precision(20));
  const Rational e = worst_error(rep.base_error, dec("0.004592864"));
  c.require(e <= ten_to_minus(9), "|G - 3(1 - log2)|");
  c.require(rep.improves, "A2 < A1 < base");
  c.notes << " |G-A1| = " << rep.first_error.to_scientific(3) << ", |G-A2| = " << rep.second_error.to_scientific(3);
  return c;
}

// AC9 helpers: long double brute force for the derivation properties.
long double eval_truncated(const SumExpression& e, long double x, int n_max) {
  long double total = 0.0L;
  for (const auto& t : e.terms()) {
    long double s = 0.0L;
    for (int n = n_max; n >= 1; --n) {
      const long double nn = n;
      s += std::pow(nn, static_cast<long double>(t.weight)) /
           std::pow(nn * nn - x * x, static_cast<long double>(t.bpow));
    }
    total += static_cast<long double>(t.coeff.value().get_d()) * std::pow(x, static_cast<long double>(t.xpow)) * s;
  }
  return total;
}

Check ac9() {
  Check c;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> xs(0.1, 0.4);
  constexpr int kTerms = 10000;
  constexpr long double h = 1e-6L;

  int fd_cases = 0;
  for (int order = 0; order <= 4; ++order) {
    const SumExpression e = derivative_expression(order);
    const SumExpression de = differentiate(e);
    for (int i = 0; i < 2; ++i) {
      const long double x = xs(rng);
      const long double fd = (eval_truncated(e, x - 2 * h, kTerms) - 8 * eval_truncated(e, x - h, kTerms) +
                              8 * eval_truncated(e, x + h, kTerms) - eval_truncated(e, x + 2 * h, kTerms)) /
                             (12.0L * h);
      // tail of the derivative, generously: sum_{n>N} n^-3 scaled by the coefficient mass
      long double mass = 0.0L;
      for (const auto& t : de.terms()) mass += std::fabs(static_cast<long double>(t.coeff.value().get_d()));
      const long double allowance = mass / (1.0L - x * x) / (2.0L * kTerms * kTerms);
      c.require(std::fabs(fd - eval_truncated(de, x, kTerms)) <= 1e-8L + allowance,
                "finite difference at order " + std::to_string(order));
      ++fd_cases;
    }
  }

  for (int order = 1; order <= 5; ++order) {
    const SumExpression e = derivative_expression(order);
    const long double a = eval_truncated(e, 0.3L, kTerms);
    const long double b = eval_truncated(reduce_weight(e), 0.3L, kTerms);
    c.require(std::fabs(a - b) <= 1e-12L * (1.0L + std::fabs(a)), "reduce_weight at order " + std::to_string(order));
  }

  int refinements = 0;
  for (int i = 0; i < 200; ++i) {
    const Rational p(static_cast<std::int64_t>(rng() % 2000001) - 1000000, static_cast<std::int64_t>(rng() % 9999 + 1));
    const Rational q(static_cast<std::int64_t>(rng() % 2000001) - 1000000, static_cast<std::int64_t>(rng() % 9999 + 1));
    auto compute = [&](long bits) {
      const Ball a = Ball::from_rational(p, bits);
      const Ball b = Ball::from_rational(q, bits);
      return (a * b - a / Rational(7)).abs() + b;
    };
    const Ball coarse = compute(24);
    const Ball fine = compute(160);
    c.require(coarse.contains(fine), "refinement");
    c.require(fine.contains((p * q - p / Rational(7)).abs() + q), "enclosure");
    ++refinements;
  }
  const Ball g1 = eval_constant(kG, Precision(15));
  const Ball g2 = eval_constant(kG, Precision(60));
  c.require(g1.contains(g2), "constant refinement");

  const SumIndex idx{-1, 2, Anchor::Quarter};
  const Ball ref = partial_sum(idx, 100000, 150, 1);
  for (unsigned t : {2U, 4U, 8U}) {
    const Ball b = partial_sum(idx, 100000, 150, t);
    c.require(b.mid_units() == ref.mid_units() && b.rad_units() == ref.rad_units(),
              "thread count " + std::to_string(t));
  }
  c.notes << " " << fd_cases << " finite-difference cases, 5 reductions, " << refinements
          << " ball refinements, 4 thread counts";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"AC1 exact derivations", ac1},        {"AC2 quoted numeric values", ac2},
      {"AC3 r = 4, 5 values and form", ac3}, {"AC4 polygamma table at 40 digits", ac4},
      {"AC5 cancellation sweep", ac5},       {"AC6 verification sweep", ac6},
      {"AC7 tail-bound soundness", ac7},     {"AC8 approximation report", ac8},
      {"AC9 property suites", ac9},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << " [exception: " << e.what() << "]";
    }
    if (!c.ok) ++failures;
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << ":" << c.notes.str() << std::endl;
  }
  std::cout << (9 - failures) << "/9 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
