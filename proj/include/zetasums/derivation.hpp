#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "zetasums/closed_form.hpp"
#include "zetasums/rational.hpp"

namespace zetasums {

/// coeff * x^xpow * sum_{n>=1} n^weight (n^2 - x^2)^(-bpow)
struct SumTerm {
  Rational coeff;
  int xpow = 0;
  int weight = -1;
  int bpow = 1;

  friend bool operator==(const SumTerm&, const SumTerm&) = default;
};

/// Finite sum of SumTerms, kept normalized: like terms merged, zeros dropped,
/// ordered by (xpow, weight, bpow).
class SumExpression {
 public:
  SumExpression() = default;
  /// Normalizes; throws std::invalid_argument on a term that breaks
  /// bpow >= 1, xpow >= 0 or weight <= 2*bpow - 2.
  explicit SumExpression(std::vector<SumTerm> terms);

  const std::vector<SumTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const SumExpression&, const SumExpression&) = default;

 private:
  std::vector<SumTerm> terms_;
};

std::string to_string(const SumExpression& e);

/// The two evaluation points: x = 1/4 (p = 1/2) and x = 1/2 (p = 1).
enum class Anchor { Quarter, Half };

/// x value of the anchor.
Rational anchor_point(Anchor a);
/// Scale s with (n^2 - x^2) = (s n^2 - 1) / s at the anchor: 16 or 4.
int anchor_scale(Anchor a);
std::string anchor_name(Anchor a);

/// Concrete series sum_{n>=1} n^weight / (s n^2 - 1)^bpow at an anchor.
struct SumIndex {
  int weight = -1;
  int bpow = 1;
  Anchor anchor = Anchor::Quarter;

  friend auto operator<=>(const SumIndex&, const SumIndex&) = default;
};

std::string to_string(const SumIndex& i);

/// -2 x^2 sum 1/(n (n^2 - x^2)), the series side of
/// psi(1+x) + psi(1-x) + 2 gamma.
SumExpression base_expression();

/// d/dx, term by term.  Weight is unchanged.
SumExpression differentiate(const SumExpression& expr);

/// Rewrites x^2 n^w (n^2-x^2)^(-b) as n^(w+2)(n^2-x^2)^(-b) - n^w (n^2-x^2)^(-(b-1))
/// until every term has xpow <= 1.  A rewrite whose pieces would diverge
/// (bpow - 1 == 0, or weight > 2*bpow - 4) is not applied and the term is
/// kept with its xpow.
SumExpression reduce_weight(const SumExpression& expr);

/// Like reduce_weight, but throws InvalidReduction when some term with
/// xpow >= 2 cannot be rewritten.
SumExpression reduce_weight_strict(const SumExpression& expr);

/// Substitutes the anchor; each term contributes coeff * x0^a * s^b to its index.
std::map<SumIndex, Rational> anchor_coefficients(const SumExpression& expr, Anchor anchor);

/// Closed form of the m-th x-derivative of psi(1+x) + psi(1-x) + 2 gamma at the anchor.
ClosedForm polygamma_combination(int order, Anchor anchor);

/// The digamma/polygamma values the reduction above relies on, before any
/// shift: psi^(m)(1/4) -/+ psi^(m)(3/4) (Quarter) or psi^(m)(1/2) (Half).
/// Exposed so they can be checked numerically.
ClosedForm quarter_polygamma_table(int order);
ClosedForm half_polygamma_value(int order);
/// psi(1/4), psi(3/4) and psi(1/2) as closed forms (include gamma and pi).
ClosedForm digamma_quarter();
ClosedForm digamma_three_quarters();
ClosedForm digamma_half();

/// m-th derivative of base_expression (weight -1 family).
SumExpression derivative_expression(int order);
/// Weight +1 family for order m >= 1: the first derivative, weight-reduced,
/// then differentiated m - 1 more times.
SumExpression weighted_expression(int order);

/// Exact closed form of sum_{n>=1} 1/(n (s n^2 - 1)^r).  Requires r >= 1.
ClosedForm derive_closed_form(int r, Anchor anchor);

/// Exact closed form of sum_{n>=1} n/(s n^2 - 1)^b.  Requires b >= 2.
ClosedForm derive_weighted_closed_form(int b, Anchor anchor);

/// Dispatches on weight: -1 -> derive_closed_form, +1 -> derive_weighted_closed_form.
ClosedForm derive_for_index(const SumIndex& index);

/// Default sweep depth for exhaustive checks.
inline constexpr int kDefaultRMax = 12;

}  // namespace zetasums
