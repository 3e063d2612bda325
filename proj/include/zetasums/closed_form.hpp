#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetasums/rational.hpp"

namespace zetasums {

/// One of the named constants a closed form is built from.
///
/// Construct through the factories; Beta takes an even index >= 2 and
/// ZetaOdd an odd index >= 3, so ill-formed constants cannot be built.
/// Catalan's constant is Beta(2).
class BasisSymbol {
 public:
  enum class Kind { One, EulerGamma, Pi, Log2, Beta, ZetaOdd };

  static BasisSymbol one() { return {Kind::One, 0}; }
  static BasisSymbol euler_gamma() { return {Kind::EulerGamma, 0}; }
  static BasisSymbol pi() { return {Kind::Pi, 0}; }
  static BasisSymbol log2() { return {Kind::Log2, 0}; }
  static BasisSymbol catalan() { return {Kind::Beta, 2}; }
  /// Throws std::invalid_argument unless k is even and >= 2.
  static BasisSymbol beta(int k);
  /// Throws std::invalid_argument unless s is odd and >= 3.
  static BasisSymbol zeta_odd(int s);

  /// Inverse of key(): "one", "gamma", "pi", "log2", "beta<k>", "zeta<s>".
  static BasisSymbol from_key(std::string_view key);

  Kind kind() const { return kind_; }
  /// Beta or zeta argument; 0 for the index-free symbols.
  int index() const { return index_; }

  std::string key() const;

  // Canonical order: One, EulerGamma, Pi, Log2, Beta(2), Beta(4), ..., ZetaOdd(3), ...
  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;

 private:
  BasisSymbol(Kind k, int index) : kind_(k), index_(index) {}

  Kind kind_;
  int index_;
};

/// Sparse exact linear combination of basis symbols.  Zero coefficients are
/// never stored, so structural equality is exact equality.
class ClosedForm {
 public:
  using Map = std::map<BasisSymbol, Rational>;

  ClosedForm() = default;
  ClosedForm(std::initializer_list<std::pair<const BasisSymbol, Rational>> init);

  static ClosedForm constant(const Rational& c);
  static ClosedForm of(const BasisSymbol& s, const Rational& c = Rational(1));

  const Map& terms() const { return terms_; }
  Rational coefficient(const BasisSymbol& s) const;
  bool is_zero() const { return terms_.empty(); }

  ClosedForm& add(const BasisSymbol& s, const Rational& c);

  ClosedForm& operator+=(const ClosedForm& o);
  ClosedForm& operator-=(const ClosedForm& o);
  ClosedForm& operator*=(const Rational& k);

  friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
  friend ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }
  friend ClosedForm operator*(ClosedForm a, const Rational& k) { return a *= k; }
  friend ClosedForm operator*(const Rational& k, ClosedForm a) { return a *= k; }
  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

 private:
  Map terms_;
};

/// Returns sum of scale_i * form_i.
ClosedForm cf_combine(const std::vector<std::pair<Rational, ClosedForm>>& terms);

/// Returns x with a*x + b = c.  Throws ZeroCoefficient when a == 0.
ClosedForm cf_solve_linear(const Rational& a, const ClosedForm& b, const ClosedForm& c);

// Serialization.  All four renderings walk the terms in canonical order.

/// "-15/4*one + 3/1*log2 + 5/4*beta2 + 7/16*zeta3"; "0" when empty.
std::string to_canonical_text(const ClosedForm& f);
/// Single-line JSON object keyed by BasisSymbol::key(), values "num/den".
std::string to_json_text(const ClosedForm& f);
/// Inverse of to_json_text; rejects unknown keys and malformed values.
ClosedForm closed_form_from_json(std::string_view json);
/// Human form, e.g. "3 - 3*log2 - G".
std::string to_pretty(const ClosedForm& f);
/// LaTeX, writing beta(2) as G and zeta(s) as \zeta(s).
std::string to_latex(const ClosedForm& f);

}  // namespace zetasums
