#include <stdexcept>

#include "zetasums/errors.hpp"
#include "zetasums/numerics.hpp"

namespace zetasums {

namespace {

BigInt unit_at(long bits) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  return r;
}

BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// sum_{k>=0} sign^k t^(2k+1)/(2k+1) for 0 <= t <= 1/2, with sign = +1 (atanh)
// or -1 (atan).  Each term is floored (error < 1 unit); the tail is bounded
// geometrically for atanh and by the first omitted term for atan.
Ball odd_power_series(const Rational& t, bool alternating, long bits) {
  if (t.sign() < 0 || t > Rational(1, 2)) {
    throw std::invalid_argument("odd_power_series: argument must lie in [0, 1/2]");
  }
  if (t.is_zero()) return Ball::zero(bits);
  const BigInt unit = unit_at(bits);
  const BigInt num2 = t.num() * t.num();
  const BigInt den2 = t.den() * t.den();
  BigInt pn = t.num();
  BigInt pd = t.den();
  BigInt sum = 0;
  std::uint64_t k = 0;
  // Stop once t^(2k+1) < 2^-bits.
  while (pn * unit >= pd) {
    const BigInt term = fdiv(pn * unit, pd * (2 * k + 1));
    if (alternating && k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    pn *= num2;
    pd *= den2;
    ++k;
  }
  Ball out(sum, BigInt(std::to_string(k)), bits);
  Rational tail(pn, pd * (2 * k + 1));
  if (!alternating) tail /= Rational(1) - t * t;
  out.widen(tail);
  return out;
}

Ball log2_ball(long bits) {
  return odd_power_series(Rational(1, 3), false, bits + 4) * Rational(2);
}

Ball pi_ball(long bits) {
  const long w = bits + 8;
  Ball a = odd_power_series(Rational(1, 5), true, w) * Rational(16);
  Ball b = odd_power_series(Rational(1, 239), true, w) * Rational(4);
  return a - b;
}

// Chebyshev-weighted sum for sum_{k>=0} (-1)^k a_k, where a_k = 1/(step*k+1)^s
// is a moment sequence of a positive measure on [0, 1].  With d_n = T_n(3),
// the truncation error is at most 2 a_0 / d_n; ten times that is charged.
Ball accelerated_alternating(int s, int step, long bits) {
  const long w = bits + 8;
  const BigInt unit = unit_at(w);

  // d_n = T_n(3): d_0 = 1, d_1 = 3, d_{n+1} = 6 d_n - d_{n-1}.
  BigInt d_prev = 1;
  BigInt d = 3;
  int n = 1;
  while (20 * unit >= d) {
    BigInt next = 6 * d - d_prev;
    d_prev = std::move(d);
    d = std::move(next);
    ++n;
  }

  BigInt b = -1;
  BigInt c = -d;
  BigInt sum = 0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const BigInt ak_den = pow_int(BigInt(step * k + 1), static_cast<unsigned>(s));
    sum += fdiv(c * unit, ak_den);
    // b <- b (k+n)(k-n) / ((k+1/2)(k+1)), always an integer.
    const BigInt numer = b * 2 * (k + n) * (k - n);
    const BigInt denom = BigInt((2 * k + 1)) * (k + 1);
    if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t())) {
      throw std::logic_error("accelerated_alternating: non-integral Chebyshev weight");
    }
    b = numer / denom;
  }
  // Accumulated floor errors: n units before dividing by d, plus one after.
  Ball out(fdiv(sum, d), BigInt(n + 1), w);
  out.widen(Rational(BigInt(20), d));
  return out.rounded(bits);
}

Ball beta_ball(int k, long bits) { return accelerated_alternating(k, 2, bits); }

Ball zeta_ball(int s, long bits) {
  // zeta(s) = eta(s) / (1 - 2^(1-s))
  const Rational factor = Rational(1) - Rational(BigInt(1), pow_int(2, static_cast<unsigned>(s - 1)));
  return (accelerated_alternating(s, 1, bits + 4) / factor).rounded(bits);
}

}  // namespace

Ball log_rational(const Rational& q, long bits) {
  if (q.sign() <= 0) throw std::domain_error("log_rational: argument must be positive");
  // q = 2^e * y with y in [1, 2); log q = e log 2 + 2 atanh((y - 1)/(y + 1)).
  long e = static_cast<long>(mpz_sizeinbase(q.num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.den().get_mpz_t(), 2));
  auto pow2 = [](long k) {
    return k >= 0 ? Rational(pow_int(2, static_cast<unsigned>(k)))
                  : Rational(BigInt(1), pow_int(2, static_cast<unsigned>(-k)));
  };
  while (q < pow2(e)) --e;
  while (q >= pow2(e + 1)) ++e;
  const Rational y = q / pow2(e);
  const long w = bits + 8 + static_cast<long>(mpz_sizeinbase(BigInt(std::labs(e) + 1).get_mpz_t(), 2));
  Ball out = odd_power_series((y - Rational(1)) / (y + Rational(1)), false, w) * Rational(2);
  if (e != 0) out += log2_ball(w) * Rational(e);
  return out.rounded(bits);
}

Ball eval_constant(const BasisSymbol& symbol, const Precision& prec) {
  using K = BasisSymbol::Kind;
  const long bits = prec.bits();
  Ball out;
  switch (symbol.kind()) {
    case K::One:
      return Ball::from_rational(Rational(1), bits);
    case K::EulerGamma:
      throw UnsupportedConstant("no numeric oracle for Euler's gamma");
    case K::Pi:
      out = pi_ball(bits + 4).rounded(bits);
      break;
    case K::Log2:
      out = log2_ball(bits + 4).rounded(bits);
      break;
    case K::Beta:
      out = beta_ball(symbol.index(), bits);
      break;
    case K::ZetaOdd:
      out = zeta_ball(symbol.index(), bits);
      break;
  }
  const Rational limit(BigInt(1), pow_int(10, static_cast<unsigned>(prec.digits + prec.guard / 2)));
  if (!out.rad_at_most(limit)) {
    throw PrecisionExhausted("eval_constant(" + symbol.key() + "): radius " + out.rad_string() +
                             " misses the requested bound");
  }
  return out;
}

Ball eval_closed_form(const ClosedForm& form, const Precision& prec) {
  if (!form.coefficient(BasisSymbol::euler_gamma()).is_zero()) {
    throw UnsupportedConstant("closed form has a nonzero Euler gamma coefficient");
  }
  const long bits = prec.bits();
  Ball total = Ball::zero(bits);
  for (const auto& [symbol, coeff] : form.terms()) {
    if (symbol == BasisSymbol::one()) {
      total += Ball::from_rational(coeff, bits);
    } else {
      // Extra precision so that scaling by large coefficients stays within budget.
      const long extra = static_cast<long>(mpz_sizeinbase(coeff.num().get_mpz_t(), 2));
      const Precision wider(prec.digits, prec.guard + static_cast<int>(extra / 3 + 1));
      total += (eval_constant(symbol, wider) * coeff).rounded(bits);
    }
  }
  return total;
}

Ball beta_direct(int s, std::uint64_t terms, long bits) {
  const BigInt unit = unit_at(bits);
  BigInt sum = 0;
  for (std::uint64_t k = 0; k < terms; ++k) {
    const BigInt den = pow_int(BigInt(std::to_string(2 * k + 1)), static_cast<unsigned>(s));
    const BigInt term = fdiv(unit, den);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  // Floors of positive and negated terms each err by < 1 unit.
  Ball out(sum, BigInt(std::to_string(terms)), bits);
  out.widen(Rational(BigInt(1), pow_int(BigInt(std::to_string(2 * terms + 1)), static_cast<unsigned>(s))));
  return out;
}

Ball zeta_direct(int s, std::uint64_t terms, long bits) {
  const BigInt unit = unit_at(bits + 4);
  BigInt sum = 0;
  for (std::uint64_t k = 0; k < terms; ++k) {
    const BigInt term = fdiv(unit, pow_int(BigInt(std::to_string(k + 1)), static_cast<unsigned>(s)));
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  Ball eta(sum, BigInt(std::to_string(terms)), bits + 4);
  eta.widen(Rational(BigInt(1), pow_int(BigInt(std::to_string(terms + 1)), static_cast<unsigned>(s))));
  const Rational factor = Rational(1) - Rational(BigInt(1), pow_int(2, static_cast<unsigned>(s - 1)));
  return (eta / factor).rounded(bits);
}

}  // namespace zetasums
