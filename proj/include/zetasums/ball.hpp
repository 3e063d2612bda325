#pragma once

#include <string>

#include "zetasums/rational.hpp"

namespace zetasums {

/// Requested accuracy: rad <= 10^-digits, computed with `guard` extra
/// decimal digits of working precision.
struct Precision {
  int digits = 20;
  int guard = 10;

  Precision() = default;
  Precision(int d, int g = 10);

  /// Binary working precision for digits + guard.
  long bits() const;
  /// 10^-digits.
  Rational target_radius() const;
  Precision with_doubled_guard() const { return {digits, 2 * guard}; }
};

/// Fixed-point midpoint-radius enclosure.
///
/// The represented real lies in [(mid - rad) / 2^bits, (mid + rad) / 2^bits].
/// Mid and rad are integers at a common binary scale, so additions are
/// exact and results do not depend on summation order.  Every operation
/// that rounds widens rad by at least one unit.
class Ball {
 public:
  /// Exact zero at scale 2^0.
  Ball() = default;
  Ball(BigInt mid, BigInt rad, long bits);

  static Ball zero(long bits) { return {0, 0, bits}; }
  /// Enclosure of q; exact when q * 2^bits is an integer.
  static Ball from_rational(const Rational& q, long bits);
  /// [q - e, q + e] at the given scale, rounded outward.
  static Ball around(const Rational& q, const Rational& e, long bits);

  const BigInt& mid_units() const { return mid_; }
  const BigInt& rad_units() const { return rad_; }
  long bits() const { return bits_; }

  Rational mid() const;
  Rational rad() const;
  Rational lower() const { return mid() - rad(); }
  Rational upper() const { return mid() + rad(); }

  bool is_exact() const { return rad_ == 0; }
  bool contains(const Rational& q) const;
  bool contains_zero() const { return ::abs(mid_) <= rad_; }
  /// True when every point of `inner` lies in this ball.
  bool contains(const Ball& inner) const;
  bool rad_at_most(const Rational& r) const { return rad() <= r; }

  /// Adds e (rounded up) to the radius.
  Ball& widen(const Rational& e);
  /// Same value at a finer scale; exact.
  Ball rescaled(long bits) const;
  /// Enclosure at a coarser scale, rounded outward.
  Ball rounded(long bits) const;

  Ball operator-() const { return {-mid_, rad_, bits_}; }
  Ball& operator+=(const Ball& o);
  Ball& operator-=(const Ball& o);
  Ball& operator*=(const Rational& k);
  Ball& operator/=(const Rational& k);

  friend Ball operator+(Ball a, const Ball& b) { return a += b; }
  friend Ball operator-(Ball a, const Ball& b) { return a -= b; }
  friend Ball operator*(Ball a, const Rational& k) { return a *= k; }
  friend Ball operator*(const Rational& k, Ball a) { return a *= k; }
  friend Ball operator/(Ball a, const Rational& k) { return a /= k; }
  friend Ball operator*(const Ball& a, const Ball& b);

  Ball abs() const;

  /// Midpoint with `decimals` digits after the point, e.g. "0.0045928641".
  std::string to_fixed(int decimals) const;
  /// Midpoint with `significant` digits, e.g. "1.3173820678770676e-6".
  std::string to_scientific(int significant) const;
  /// Radius rounded up to a short scientific string, e.g. "3.1e-31".
  std::string rad_string() const;

 private:
  void align(Ball& o);

  BigInt mid_{0};
  BigInt rad_{0};
  long bits_ = 0;
};

/// ceil(q * 2^bits) for q >= 0.
BigInt ceil_scaled(const Rational& q, long bits);
/// floor(q * 2^bits).
BigInt floor_scaled(const Rational& q, long bits);

/// Decimal rendering of an exact rational.
std::string format_fixed(const Rational& q, int decimals);
std::string format_scientific(const Rational& q, int significant);

}  // namespace zetasums
