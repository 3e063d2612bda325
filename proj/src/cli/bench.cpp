#include <chrono>
#include <stdexcept>

#include "zetasums/cli.hpp"

namespace zetasums::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Rational pow10_inv(int d) { return Rational(BigInt(1), pow_int(10, static_cast<unsigned>(d))); }

// Smallest N >= 0 with base^-s <= eps where base = step*N + 1.
std::uint64_t alternating_terms(int s, int step, const Rational& eps) {
  // (step N + 1)^s >= 1/eps
  const Rational bound = eps.inverse();
  BigInt root;
  const BigInt ceil_bound = (bound.num() + bound.den() - 1) / bound.den();
  mpz_root(root.get_mpz_t(), ceil_bound.get_mpz_t(), static_cast<unsigned long>(s));
  BigInt n = root >= 1 ? (root - 1) / step : BigInt(0);
  while (Rational(pow_int(n * step + 1, static_cast<unsigned>(s))) < bound) ++n;
  if (!n.fits_ulong_p()) return std::uint64_t{1} << 62;
  return n.get_ui();
}

BenchRow series_route(int r, int digits, std::uint64_t ceiling) {
  const SumIndex index{-1, r, Anchor::Quarter};
  const ClosedForm form = derive_closed_form(r, Anchor::Quarter);
  const BasisSymbol target = r % 2 == 0 ? BasisSymbol::beta(r) : BasisSymbol::zeta_odd(r);
  const Rational k = form.coefficient(target);
  if (k.is_zero()) throw std::logic_error("bench: S_r does not involve the new constant");

  BenchRow row;
  row.method = "S_" + std::to_string(r) + " series";
  row.constant = target.key();
  row.digits = digits;
  const auto start = Clock::now();

  // The constant is (S_r - rest) / k, so the series error is divided by |k|.
  const Rational budget = pow10_inv(digits) * k.abs() / Rational(2);
  row.terms = terms_for_tail(index, budget);
  if (row.terms > ceiling) {
    row.exceeded = true;
    row.elapsed_ms = ms_since(start);
    return row;
  }
  const Precision prec(digits);
  Ball series = partial_sum(index, row.terms, prec.bits());
  series.widen(tail_bound(index, row.terms));
  ClosedForm rest = form;
  rest.add(target, -k);
  const Ball value = (series - eval_closed_form(rest, prec)) / k;
  row.value = value;
  row.pass = value.rad_at_most(pow10_inv(digits));
  row.elapsed_ms = ms_since(start);
  return row;
}

BenchRow direct_route(int r, int digits, std::uint64_t ceiling) {
  const bool is_beta = r % 2 == 0;
  BenchRow row;
  row.method = is_beta ? "alternating beta series" : "alternating eta series";
  row.constant = is_beta ? BasisSymbol::beta(r).key() : BasisSymbol::zeta_odd(r).key();
  row.digits = digits;
  const auto start = Clock::now();

  // Remainder of an alternating series is at most the first omitted term.
  Rational eps = pow10_inv(digits) / Rational(2);
  if (!is_beta) eps *= Rational(1) - Rational(BigInt(1), pow_int(2, static_cast<unsigned>(r - 1)));
  row.terms = alternating_terms(r, is_beta ? 2 : 1, eps);
  if (row.terms > ceiling) {
    row.exceeded = true;
    row.elapsed_ms = ms_since(start);
    return row;
  }
  const long bits = Precision(digits).bits();
  const Ball value = is_beta ? beta_direct(r, row.terms, bits) : zeta_direct(r, row.terms, bits);
  row.value = value;
  row.pass = value.rad_at_most(pow10_inv(digits));
  row.elapsed_ms = ms_since(start);
  return row;
}

}  // namespace

std::vector<BenchRow> bench_convergence(int r, const std::vector<int>& digits_list, std::uint64_t effort_ceiling) {
  if (r < 2) throw std::invalid_argument("bench_convergence: r must be >= 2");
  std::vector<BenchRow> rows;
  for (int d : digits_list) {
    if (d < 1) throw std::invalid_argument("bench_convergence: digits must be >= 1");
    rows.push_back(series_route(r, d, effort_ceiling));
    rows.push_back(direct_route(r, d, effort_ceiling));
  }
  return rows;
}

}  // namespace zetasums::cli
