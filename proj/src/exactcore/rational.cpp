#include "zetasums/rational.hpp"

#include <stdexcept>
#include <utility>

namespace zetasums {

namespace {

BigInt from_i64(std::int64_t v) {
  // mpz_class has no portable int64_t constructor.
  return BigInt(std::to_string(v));
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t n) : q_(from_i64(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(from_i64(num), from_i64(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const BigInt& n) : q_(n) {}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view n = text.substr(0, slash);
  const std::string_view d = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(n) || !valid_integer(d) || d.front() == '-' || d.front() == '+') {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
  const std::string ns(n.front() == '+' ? n.substr(1) : n);
  return Rational(BigInt(ns), BigInt(std::string(d)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(den(), num());
}

Rational Rational::pow(unsigned e) const {
  return Rational(pow_int(num(), e), pow_int(den(), e));
}

std::string Rational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow_int(const BigInt& base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace zetasums
