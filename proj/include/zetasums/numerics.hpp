#pragma once

#include <cstdint>

#include "zetasums/ball.hpp"
#include "zetasums/closed_form.hpp"
#include "zetasums/derivation.hpp"
#include "zetasums/rational.hpp"

namespace zetasums {

// ---------------------------------------------------------------------------
// Basis constants

/// Certified value of a basis constant with rad <= 10^-(digits + guard/2).
///
/// Log2 uses 2*atanh(1/3); Pi uses Machin's formula; Beta(k) and ZetaOdd(s)
/// use Chebyshev-accelerated alternating series (the latter through the
/// eta function).  Throws UnsupportedConstant for EulerGamma.
Ball eval_constant(const BasisSymbol& symbol, const Precision& prec);

/// Sum of coefficient * eval_constant.  Throws UnsupportedConstant when the
/// form has a nonzero EulerGamma coefficient.
Ball eval_closed_form(const ClosedForm& form, const Precision& prec);

/// sum_{k>=0} (-1)^k / (2k+1)^s, plain partial sums.  Used as the slow
/// baseline in benchmarks; `terms` alternating terms are added and the
/// first omitted term becomes the radius.
Ball beta_direct(int s, std::uint64_t terms, long bits);
/// zeta(s) through the eta series with plain partial sums.
Ball zeta_direct(int s, std::uint64_t terms, long bits);

/// log(q) for rational q > 0.
Ball log_rational(const Rational& q, long bits);

// ---------------------------------------------------------------------------
// Polygamma

/// Exact Bernoulli number B_k with B_1 = -1/2.
Rational bernoulli(int k);

/// Hurwitz zeta(s, a) for integer s >= 2 and rational a > 0, by
/// Euler-Maclaurin summation with the remainder bounded by the last
/// included correction term.
Ball hurwitz_zeta(int s, const Rational& a, long bits);

/// psi^(m)(x) for rational x > 0.  m = 0 uses recurrence shifts and the
/// asymptotic expansion; m >= 1 uses (-1)^(m+1) m! zeta(m+1, x).
Ball eval_polygamma(int order, const Rational& point, const Precision& prec);

// ---------------------------------------------------------------------------
// Series side

struct SeriesOptions {
  /// Hard limit on summed terms; EffortExceeded beyond it.
  std::uint64_t effort_ceiling = 10'000'000;
  /// Largest N for plain truncation before switching to the tail expansion.
  std::uint64_t direct_budget = 1'000'000;
  /// Tail expansion allowed (otherwise plain truncation only).
  bool accelerate = true;
  /// Worker threads for the partial sum; results do not depend on it.
  unsigned threads = 1;
};

struct SeriesEvaluation {
  Ball value;
  std::uint64_t terms = 0;  ///< explicitly summed terms
  bool accelerated = false;
};

/// Exact upper bound on sum_{n>N} n^w/(s n^2-1)^b, from s n^2 - 1 >= (s-1) n^2
/// and comparison with an integral:  1 / ((s-1)^b (e-1) N^(e-1)), e = 2b - w.
/// Throws DivergentIndex unless w - 2b <= -2, std::invalid_argument for N < 1.
Rational tail_bound(const SumIndex& index, std::uint64_t n);

/// Smallest N with tail_bound(index, N) <= eps.
std::uint64_t terms_for_tail(const SumIndex& index, const Rational& eps);

/// sum_{n=1}^{N} n^w/(s n^2-1)^b at the given scale; rad covers rounding only.
Ball partial_sum(const SumIndex& index, std::uint64_t n, long bits, unsigned threads = 1);

/// Certified enclosure of the full series.  Plain truncation when the
/// needed N fits the direct budget; otherwise the first N terms are summed
/// and the tail is expanded in powers of 1/(s n^2) with Hurwitz zeta values
/// and a bounded remainder.
SeriesEvaluation eval_series(const SumIndex& index, const Precision& prec,
                             const SeriesOptions& options = {});

}  // namespace zetasums
