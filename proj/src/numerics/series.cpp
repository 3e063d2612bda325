#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "zetasums/errors.hpp"
#include "zetasums/numerics.hpp"

namespace zetasums {

namespace {

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

// e = 2b - w, the decay exponent of n^w/(s n^2 - 1)^b.
int decay(const SumIndex& index) { return 2 * index.bpow - index.weight; }

void check_convergent(const SumIndex& index) {
  if (index.bpow < 1) throw DivergentIndex("series index needs bpow >= 1");
  if (decay(index) < 2) {
    throw DivergentIndex("series " + to_string(index) + " diverges (need w - 2b <= -2)");
  }
}

BigInt block_sum(const SumIndex& index, std::uint64_t first, std::uint64_t last, const BigInt& unit) {
  const BigInt s = anchor_scale(index.anchor);
  const auto b = static_cast<unsigned>(index.bpow);
  BigInt sum = 0;
  BigInt num;
  BigInt den;
  BigInt q;
  for (std::uint64_t n = first; n <= last; ++n) {
    const BigInt bn = big(n);
    den = pow_int(s * bn * bn - 1, b);
    if (index.weight < 0) {
      den *= pow_int(bn, static_cast<unsigned>(-index.weight));
      num = unit;
    } else {
      num = unit * pow_int(bn, static_cast<unsigned>(index.weight));
    }
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    sum += q;
  }
  return sum;
}

}  // namespace

Rational tail_bound(const SumIndex& index, std::uint64_t n) {
  check_convergent(index);
  if (n < 1) throw std::invalid_argument("tail_bound: N must be >= 1");
  const int e = decay(index);
  const BigInt c = anchor_scale(index.anchor) - 1;
  const BigInt den = pow_int(c, static_cast<unsigned>(index.bpow)) * (e - 1) *
                     pow_int(big(n), static_cast<unsigned>(e - 1));
  return Rational(BigInt(1), den);
}

std::uint64_t terms_for_tail(const SumIndex& index, const Rational& eps) {
  check_convergent(index);
  if (eps.sign() <= 0) throw std::invalid_argument("terms_for_tail: eps must be positive");
  const int e = decay(index);
  const double c = anchor_scale(index.anchor) - 1;
  // Solve c^b (e-1) N^(e-1) >= 1/eps in logs, then settle exactly.
  const double log_eps = std::log(eps.num().get_d()) - std::log(eps.den().get_d());
  const double log_n = (-log_eps - index.bpow * std::log(c) - std::log(e - 1.0)) / (e - 1.0);
  constexpr std::uint64_t kHuge = std::uint64_t{1} << 62;
  if (log_n > std::log(static_cast<double>(kHuge))) return kHuge;
  auto n = static_cast<std::uint64_t>(std::max(1.0, std::floor(std::exp(log_n))));
  while (n > 1 && tail_bound(index, n - 1) <= eps) --n;
  while (tail_bound(index, n) > eps) ++n;
  return n;
}

Ball partial_sum(const SumIndex& index, std::uint64_t n, long bits, unsigned threads) {
  check_convergent(index);
  const BigInt unit = pow_int(2, static_cast<unsigned>(bits));
  threads = std::max(1u, threads);
  if (n < 4096) threads = 1;

  // Contiguous blocks, combined in block order; integer addition makes the
  // result independent of the split.
  std::vector<BigInt> partial(threads);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = n / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t first = 1 + t * chunk;
    const std::uint64_t last = t + 1 == threads ? n : (t + 1) * chunk;
    if (threads == 1) {
      partial[t] = block_sum(index, first, last, unit);
    } else {
      pool.emplace_back([&, t, first, last] { partial[t] = block_sum(index, first, last, unit); });
    }
  }
  for (auto& th : pool) th.join();
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return {total, big(n), bits};
}

namespace {

// sum_{n>N} n^w/(s n^2-1)^b via (1 - u)^-b = sum_j C(b+j-1, j) u^j, u = 1/(s n^2):
//   sum_{j<J} C(b+j-1, j) s^(-b-j) zeta(2b + 2j - w, N + 1)
// The dropped part is at most C(b+J-1, J) (1-u0)^-b s^(-b-J) N^(1-E)/(E-1),
// E = 2b + 2J - w, u0 = 1/(s (N+1)^2).
Ball expanded_tail(const SumIndex& index, std::uint64_t n, const Rational& eps, long bits) {
  const int b = index.bpow;
  const int w = index.weight;
  const Rational s(anchor_scale(index.anchor));
  const Rational u0 = (s * Rational(big(n + 1)) * Rational(big(n + 1))).inverse();
  const Rational growth = (Rational(1) - u0).inverse().pow(static_cast<unsigned>(b));

  auto dropped = [&](int j_count) {
    const int e = 2 * b + 2 * j_count - w;
    return Rational(binomial(static_cast<unsigned>(b + j_count - 1), static_cast<unsigned>(j_count))) *
           growth / s.pow(static_cast<unsigned>(b + j_count)) /
           Rational(big(n)).pow(static_cast<unsigned>(e - 1)) / Rational(e - 1);
  };
  int j_count = 1;
  while (dropped(j_count) > eps) ++j_count;

  const long w_bits = bits + 8;
  Ball tail = Ball::zero(w_bits);
  for (int j = 0; j < j_count; ++j) {
    const Rational weight = Rational(binomial(static_cast<unsigned>(b + j - 1), static_cast<unsigned>(j))) /
                            s.pow(static_cast<unsigned>(b + j));
    tail += hurwitz_zeta(2 * b + 2 * j - w, Rational(big(n + 1)), w_bits) * weight;
  }
  tail.widen(dropped(j_count));
  return tail.rounded(bits);
}

constexpr std::uint64_t kAcceleratedPrefix = 256;

}  // namespace

SeriesEvaluation eval_series(const SumIndex& index, const Precision& prec, const SeriesOptions& options) {
  check_convergent(index);
  const long bits = prec.bits();
  const Rational eps(BigInt(1), pow_int(10, static_cast<unsigned>(prec.digits + prec.guard)));
  const std::uint64_t needed = terms_for_tail(index, eps);

  SeriesEvaluation out;
  const bool fits_budget = needed <= options.direct_budget && needed <= options.effort_ceiling;
  const bool direct_only = !options.accelerate && needed <= options.effort_ceiling;
  if (fits_budget || direct_only) {
    out.value = partial_sum(index, needed, bits, options.threads);
    out.value.widen(tail_bound(index, needed));
    out.terms = needed;
    return out;
  }
  if (!options.accelerate) throw EffortExceeded(needed, options.effort_ceiling);

  const std::uint64_t n = std::min(needed, kAcceleratedPrefix);
  if (n > options.effort_ceiling) throw EffortExceeded(n, options.effort_ceiling);
  out.value = partial_sum(index, n, bits, options.threads) + expanded_tail(index, n, eps, bits);
  out.terms = n;
  out.accelerated = true;
  return out;
}

}  // namespace zetasums
