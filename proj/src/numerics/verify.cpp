#include "zetasums/verify.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace zetasums {

namespace {

std::string describe(const SumIndex& index, const ClosedForm& form) {
  std::ostringstream os;
  os << to_string(index) << " = " << to_pretty(form);
  return os.str();
}

VerificationReport compare(const SumIndex& index, const ClosedForm& form, const Precision& prec,
                           const SeriesOptions& options) {
  VerificationReport rep;
  rep.identity = describe(index, form);
  rep.index = index;
  rep.form = form;
  rep.digits = prec.digits;
  rep.guard = prec.guard;
  const SeriesEvaluation series = eval_series(index, prec, options);
  rep.left = series.value;
  rep.terms = series.terms;
  rep.accelerated = series.accelerated;
  rep.right = eval_closed_form(form, prec);
  rep.difference = rep.left - rep.right;
  rep.pass = rep.difference.contains_zero() && rep.difference.rad_at_most(prec.target_radius());
  return rep;
}

}  // namespace

VerificationReport verify_identity(int r, Anchor anchor, int weight, const Precision& prec,
                                   const SeriesOptions& options) {
  if (weight != -1 && weight != 1) throw std::invalid_argument("verify_identity: weight must be -1 or +1");
  if (r < (weight == -1 ? 1 : 2)) throw std::invalid_argument("verify_identity: r out of range");
  const auto start = std::chrono::steady_clock::now();

  const SumIndex index{weight, r, anchor};
  const ClosedForm form = derive_for_index(index);
  VerificationReport rep = compare(index, form, prec, options);
  if (!rep.difference.rad_at_most(prec.target_radius())) {
    rep = compare(index, form, prec.with_doubled_guard(), options);
    rep.retried = true;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

ApproximationReport approximation_report(const Precision& prec) {
  const long bits = prec.bits();
  ApproximationReport rep;
  rep.catalan = eval_constant(BasisSymbol::catalan(), prec);
  const Ball log2 = eval_constant(BasisSymbol::log2(), prec);
  const Ball zeta5 = eval_constant(BasisSymbol::zeta_odd(5), prec);

  rep.base = (Ball::from_rational(Rational(1), bits) - log2) * Rational(3);
  rep.first = rep.base - zeta5 / Rational(256);
  rep.second = rep.base - Ball::from_rational(Rational(1, 225), bits) -
               (zeta5 - Ball::from_rational(Rational(1), bits)) / Rational(256);

  rep.base_error = (rep.catalan - rep.base).abs();
  rep.first_error = (rep.catalan - rep.first).abs();
  rep.second_error = (rep.catalan - rep.second).abs();
  rep.improves = rep.second_error.upper() < rep.first_error.lower() &&
                 rep.first_error.upper() < rep.base_error.lower();
  return rep;
}

}  // namespace zetasums
