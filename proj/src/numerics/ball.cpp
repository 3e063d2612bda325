#include "zetasums/ball.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace zetasums {

Precision::Precision(int d, int g) : digits(d), guard(g) {
  if (d < 1) throw std::invalid_argument("Precision: digits must be >= 1");
  if (g < 0) throw std::invalid_argument("Precision: guard must be >= 0");
}

long Precision::bits() const {
  // log2(10) < 3.3220; 16 extra bits absorb per-operation unit roundings.
  return static_cast<long>(std::ceil((digits + guard) * 3.3220)) + 16;
}

Rational Precision::target_radius() const {
  return Rational(BigInt(1), pow_int(10, static_cast<unsigned>(digits)));
}

namespace {

BigInt shl(const BigInt& v, long k) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt cdiv(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Nearest integer to a/b (b > 0), ties away from zero.
BigInt round_div(const BigInt& a, const BigInt& b) {
  const BigInt twice = 2 * a;
  return a >= 0 ? fdiv(twice + b, 2 * b) : -fdiv(-twice + b, 2 * b);
}

}  // namespace

BigInt ceil_scaled(const Rational& q, long bits) { return cdiv(shl(q.num(), bits), q.den()); }

BigInt floor_scaled(const Rational& q, long bits) { return fdiv(shl(q.num(), bits), q.den()); }

Ball::Ball(BigInt mid, BigInt rad, long bits) : mid_(std::move(mid)), rad_(std::move(rad)), bits_(bits) {
  if (rad_ < 0) throw std::invalid_argument("Ball: negative radius");
  if (bits_ < 0) throw std::invalid_argument("Ball: negative scale");
}

Ball Ball::from_rational(const Rational& q, long bits) {
  const BigInt scaled = shl(q.num(), bits);
  BigInt m = fdiv(scaled, q.den());
  const bool exact = m * q.den() == scaled;
  return {std::move(m), exact ? 0 : 1, bits};
}

Ball Ball::around(const Rational& q, const Rational& e, long bits) {
  Ball b = from_rational(q, bits);
  b.widen(e.abs());
  return b;
}

Rational Ball::mid() const { return Rational(mid_, shl(1, bits_)); }

Rational Ball::rad() const { return Rational(rad_, shl(1, bits_)); }

bool Ball::contains(const Rational& q) const {
  // |q * 2^bits - mid| <= rad  <=>  |q.num * 2^bits - mid * q.den| <= rad * q.den
  const BigInt lhs = shl(q.num(), bits_) - mid_ * q.den();
  return ::abs(lhs) <= rad_ * q.den();
}

bool Ball::contains(const Ball& inner) const {
  return lower() <= inner.lower() && inner.upper() <= upper();
}

Ball& Ball::widen(const Rational& e) {
  if (e.sign() < 0) throw std::invalid_argument("Ball::widen: negative amount");
  rad_ += ceil_scaled(e, bits_);
  return *this;
}

Ball Ball::rescaled(long bits) const {
  if (bits < bits_) throw std::invalid_argument("Ball::rescaled: can only refine the scale");
  return {shl(mid_, bits - bits_), shl(rad_, bits - bits_), bits};
}

Ball Ball::rounded(long bits) const {
  if (bits >= bits_) return rescaled(bits);
  const BigInt unit = shl(1, bits_ - bits);
  BigInt m = fdiv(mid_, unit);
  const bool exact = m * unit == mid_;
  return {std::move(m), cdiv(rad_, unit) + (exact ? 0 : 1), bits};
}

void Ball::align(Ball& o) {
  if (o.bits_ > bits_) *this = rescaled(o.bits_);
  if (bits_ > o.bits_) o = o.rescaled(bits_);
}

Ball& Ball::operator+=(const Ball& o) {
  Ball other = o;
  align(other);
  mid_ += other.mid_;
  rad_ += other.rad_;
  return *this;
}

Ball& Ball::operator-=(const Ball& o) { return *this += -o; }

Ball& Ball::operator*=(const Rational& k) {
  const BigInt prod = mid_ * k.num();
  BigInt m = fdiv(prod, k.den());
  const bool exact = m * k.den() == prod;
  rad_ = cdiv(rad_ * ::abs(k.num()), k.den()) + (exact ? 0 : 1);
  mid_ = std::move(m);
  return *this;
}

Ball& Ball::operator/=(const Rational& k) { return *this *= k.inverse(); }

Ball operator*(const Ball& a, const Ball& b) {
  Ball x = a;
  Ball y = b;
  x.align(y);
  const BigInt unit = shl(1, x.bits_);
  const BigInt prod = x.mid_ * y.mid_;
  BigInt m = fdiv(prod, unit);
  const bool exact = m * unit == prod;
  const BigInt err = ::abs(x.mid_) * y.rad_ + ::abs(y.mid_) * x.rad_ + x.rad_ * y.rad_;
  BigInt r = cdiv(err, unit) + (exact ? 0 : 1);
  return {std::move(m), std::move(r), x.bits_};
}

Ball Ball::abs() const {
  if (mid_ >= 0) return *this;
  return -*this;
}

std::string format_fixed(const Rational& q, int decimals) {
  const BigInt scale = pow_int(10, static_cast<unsigned>(decimals));
  const BigInt v = round_div(q.num() * scale, q.den());
  std::string digits = BigInt(::abs(v)).get_str();
  if (decimals > 0) {
    if (static_cast<int>(digits.size()) <= decimals) {
      digits.insert(0, static_cast<std::size_t>(decimals + 1) - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  return (v < 0 ? "-" : "") + digits;
}

std::string format_scientific(const Rational& q, int significant) {
  if (q.is_zero()) return "0";
  if (significant < 1) significant = 1;
  const Rational a = q.abs();
  // Decimal exponent e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(a.num().get_str().size()) - static_cast<long>(a.den().get_str().size());
  auto pow10 = [](long k) {
    return k >= 0 ? Rational(pow_int(10, static_cast<unsigned>(k)))
                  : Rational(BigInt(1), pow_int(10, static_cast<unsigned>(-k)));
  };
  while (a < pow10(e)) --e;
  while (a >= pow10(e + 1)) ++e;
  const Rational scaled = a / pow10(e - (significant - 1));
  BigInt v = round_div(scaled.num(), scaled.den());
  if (v.get_str().size() > static_cast<std::size_t>(significant)) {
    ++e;
    v = round_div(v, 10);
  }
  std::string digits = v.get_str();
  std::string mant = digits.substr(0, 1);
  if (digits.size() > 1) mant += "." + digits.substr(1);
  return (q.sign() < 0 ? "-" : "") + mant + "e" + std::to_string(e);
}

std::string Ball::to_fixed(int decimals) const { return format_fixed(mid(), decimals); }

std::string Ball::to_scientific(int significant) const { return format_scientific(mid(), significant); }

std::string Ball::rad_string() const {
  if (rad_ == 0) return "0";
  // Two significant digits, rounded up so the printed value stays a bound.
  const Rational r = rad();
  std::string s = format_scientific(r, 2);
  const auto epos = s.find('e');
  const Rational printed = Rational::parse(std::string(1, s[0]) + s.substr(2, epos - 2)) *
                           Rational(BigInt(1), BigInt(10));
  const long e = std::stol(s.substr(epos + 1));
  const Rational scale = e >= 0 ? Rational(pow_int(10, static_cast<unsigned>(e)))
                                : Rational(BigInt(1), pow_int(10, static_cast<unsigned>(-e)));
  if (printed * scale < r) {
    const Rational bumped = (printed + Rational(1, 10)) * scale;
    s = format_scientific(bumped, 2);
  }
  return s;
}

}  // namespace zetasums
