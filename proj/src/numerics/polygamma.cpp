#include <mutex>
#include <stdexcept>
#include <vector>

#include "zetasums/errors.hpp"
#include "zetasums/numerics.hpp"

namespace zetasums {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};

BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Rising factorial s (s+1) ... (s+len-1).
BigInt rising(int s, int len) {
  BigInt r = 1;
  for (int i = 0; i < len; ++i) r *= s + i;
  return r;
}

// |q| < 2^-bits
bool below_unit(const Rational& q, long bits) {
  return q.abs() * Rational(pow_int(2, static_cast<unsigned>(bits))) < Rational(1);
}

// Euler-Maclaurin corrections sum_{j=1}^{M} B_2j/(2j)! (s)_{2j-1} z^(1-s-2j) until a term drops
// below 2^-bits.  `converged` stays false if the terms stop shrinking first.
struct Corrections {
  Rational sum;
  Rational last;
  bool converged = false;
};

Corrections em_corrections(int s, const Rational& z, long bits) {
  Corrections out;
  Rational prev_mag;
  const Rational zinv = z.inverse();
  const Rational zinv2 = zinv * zinv;
  Rational zpow = zinv.pow(static_cast<unsigned>(s + 1));  // z^(1-s-2j) at j = 1
  for (int j = 1; j < 4000; ++j, zpow *= zinv2) {
    const Rational term = bernoulli(2 * j) / Rational(factorial(static_cast<unsigned>(2 * j))) *
                          Rational(rising(s, 2 * j - 1)) * zpow;
    const Rational mag = term.abs();
    if (j > 1 && mag >= prev_mag) return out;
    out.sum += term;
    out.last = mag;
    prev_mag = mag;
    if (below_unit(mag, bits)) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

// Same for digamma: sum_{j=1}^{M} B_2j / (2j z^2j).
Corrections digamma_corrections(const Rational& z, long bits) {
  Corrections out;
  Rational prev_mag;
  const Rational z2inv = (z * z).inverse();
  Rational zpow = z2inv;
  for (int j = 1; j < 4000; ++j) {
    const Rational term = bernoulli(2 * j) / Rational(2 * j) * zpow;
    const Rational mag = term.abs();
    if (j > 1 && mag >= prev_mag) return out;
    out.sum += term;
    out.last = mag;
    prev_mag = mag;
    if (below_unit(mag, bits)) {
      out.converged = true;
      return out;
    }
    zpow *= z2inv;
  }
  return out;
}

Ball digamma(const Rational& x, long bits) {
  if (x.sign() <= 0) throw std::domain_error("digamma: argument must be positive");
  const long w = bits + 16;
  const BigInt unit = pow_int(2, static_cast<unsigned>(w));
  // psi(x) = psi(x + N) - sum_{k<N} 1/(x + k)
  for (long n = std::max(1L, w / 4); n < (1L << 20); n *= 2) {
    const Rational z = x + Rational(n);
    const Corrections c = digamma_corrections(z, w);
    if (!c.converged) continue;
    BigInt recip = 0;
    for (long k = 0; k < n; ++k) {
      const BigInt den = x.num() + x.den() * k;
      recip += fdiv(x.den() * unit, den);
    }
    Ball shift(recip, BigInt(std::to_string(n)), w);
    // psi(z) = log z - 1/(2z) - sum B_2j/(2j z^2j), |remainder| <= last included term
    Ball asym = log_rational(z, w) - Ball::around(z.inverse() / Rational(2) + c.sum, c.last, w);
    return (asym - shift).rounded(bits);
  }
  throw PrecisionExhausted("digamma: asymptotic expansion did not converge");
}

}  // namespace

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli: index must be >= 0");
  std::lock_guard lock(g_bernoulli_mutex);
  while (static_cast<int>(g_bernoulli.size()) <= k) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    const auto m = static_cast<unsigned>(g_bernoulli.size());
    Rational acc;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * g_bernoulli[j];
    g_bernoulli.push_back(-acc / Rational(m + 1));
  }
  return g_bernoulli[static_cast<std::size_t>(k)];
}

Ball hurwitz_zeta(int s, const Rational& a, long bits) {
  if (s < 2) throw std::invalid_argument("hurwitz_zeta: s must be >= 2");
  if (a.sign() <= 0) throw std::domain_error("hurwitz_zeta: a must be positive");
  const long w = bits + 16;
  const BigInt unit = pow_int(2, static_cast<unsigned>(w));
  const auto us = static_cast<unsigned>(s);

  // Shift far enough that the corrections converge: a + N >= roughly w/4.
  BigInt floor_a = fdiv(a.num(), a.den());
  long n = 0;
  if (floor_a < w / 4 + s) n = (w / 4 + s) - floor_a.get_si();

  for (; n < (1L << 22); n = std::max(2 * n, 16L)) {
    const Rational z = a + Rational(n);
    const Corrections c = em_corrections(s, z, w);
    if (!c.converged) continue;

    BigInt direct = 0;
    const BigInt num_s = pow_int(a.den(), us) * unit;
    for (long k = 0; k < n; ++k) {
      direct += fdiv(num_s, pow_int(a.num() + a.den() * k, us));
    }
    const Rational zinv = z.inverse();
    // z^(1-s)/(s-1) + z^(-s)/2 + corrections, remainder <= last included term
    const Rational tail = zinv.pow(us - 1) / Rational(s - 1) + zinv.pow(us) / Rational(2) + c.sum;
    Ball out(direct, BigInt(std::to_string(n)), w);
    out += Ball::around(tail, c.last, w);
    return out.rounded(bits);
  }
  throw PrecisionExhausted("hurwitz_zeta: Euler-Maclaurin did not converge");
}

Ball eval_polygamma(int order, const Rational& point, const Precision& prec) {
  if (order < 0) throw std::invalid_argument("eval_polygamma: order must be >= 0");
  if (point.sign() <= 0) throw std::domain_error("eval_polygamma: point must be positive");
  const long bits = prec.bits();
  if (order == 0) return digamma(point, bits);
  const BigInt fact = factorial(static_cast<unsigned>(order));
  const long extra = static_cast<long>(mpz_sizeinbase(fact.get_mpz_t(), 2)) + 8;
  Ball z = hurwitz_zeta(order + 1, point, bits + extra) * Rational(fact);
  if (order % 2 == 0) z = -z;
  return z.rounded(bits);
}

}  // namespace zetasums
