#pragma once

#include <cstdint>
#include <string>

#include "zetasums/ball.hpp"
#include "zetasums/closed_form.hpp"
#include "zetasums/derivation.hpp"
#include "zetasums/numerics.hpp"

namespace zetasums {

/// Numeric check of one derived identity: series on the left, closed form
/// on the right.
struct VerificationReport {
  std::string identity;
  SumIndex index;
  ClosedForm form;
  Ball left;
  Ball right;
  Ball difference;
  /// difference contains zero and its radius is <= 10^-digits.
  bool pass = false;
  int digits = 0;
  int guard = 0;
  std::uint64_t terms = 0;
  bool accelerated = false;
  bool retried = false;
  double elapsed_ms = 0.0;
};

/// Derives the closed form for (weight, r, anchor), evaluates both sides
/// independently and compares.  weight -1 needs r >= 1, weight +1 needs
/// r >= 2.  A radius that misses the target is retried once with a doubled
/// guard.  A non-enclosing difference is a failing report, not an error.
VerificationReport verify_identity(int r, Anchor anchor, int weight, const Precision& prec,
                                   const SeriesOptions& options = {});

/// G against 3(1 - log 2) - zeta(5)/256 and its refinement that peels off the
/// n = 1 term: 3(1 - log 2) - 1/225 - (zeta(5) - 1)/256.
struct ApproximationReport {
  Ball catalan;
  Ball base;         ///< 3(1 - log 2)
  Ball base_error;   ///< |G - 3(1 - log 2)|, which equals S_2
  Ball first;        ///< A1
  Ball first_error;  ///< |G - A1|
  Ball second;       ///< A2
  Ball second_error; ///< |G - A2|
  /// Certified: upper(second_error) < lower(first_error) < lower(base_error).
  bool improves = false;
};

ApproximationReport approximation_report(const Precision& prec);

}  // namespace zetasums
