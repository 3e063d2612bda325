#include <doctest.h>

#include <random>

#include "zetasums/ball.hpp"

using namespace zetasums;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-10000000, 10000000);
  std::uniform_int_distribution<std::int64_t> den(1, 999983);
  return {num(rng), den(rng)};
}

Rational random_nonzero(std::mt19937_64& rng) {
  Rational q = random_rational(rng);
  return q.is_zero() ? Rational(1, 3) : q;
}

}  // namespace

TEST_CASE("precision policy") {
  const Precision p(20);
  CHECK(p.guard == 10);
  CHECK(p.bits() >= 100);
  CHECK(p.target_radius() == Rational(BigInt(1), pow_int(10, 20)));
  CHECK(p.with_doubled_guard().guard == 20);
  CHECK(Precision(40).bits() > p.bits());
}

TEST_CASE("exact and rounded construction") {
  const Ball one = Ball::from_rational(Rational(1), 64);
  CHECK(one.is_exact());
  CHECK(one.mid() == Rational(1));
  CHECK(Ball::zero(10).is_exact());

  const Ball third = Ball::from_rational(Rational(1, 3), 64);
  CHECK(!third.is_exact());
  CHECK(third.contains(Rational(1, 3)));
  CHECK(third.rad() <= Rational(BigInt(1), pow_int(2, 64)));

  const Ball around = Ball::around(Rational(1, 7), Rational(1, 1000), 40);
  CHECK(around.contains(Rational(1, 7) + Rational(1, 1000)));
  CHECK(around.contains(Rational(1, 7) - Rational(1, 1000)));
}

TEST_CASE("operations enclose the exact result") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 500; ++i) {
    const long bits = 20 + static_cast<long>(rng() % 100);
    const Rational p = random_rational(rng);
    const Rational q = random_nonzero(rng);
    const Rational k = random_nonzero(rng);
    const Ball a = Ball::from_rational(p, bits);
    const Ball b = Ball::from_rational(q, bits + static_cast<long>(rng() % 20));
    CHECK(a.contains(p));
    CHECK((a + b).contains(p + q));
    CHECK((a - b).contains(p - q));
    CHECK((-a).contains(-p));
    CHECK((a * k).contains(p * k));
    CHECK((a / k).contains(p / k));
    CHECK((a * b).contains(p * q));
    CHECK(a.abs().contains(p.abs()));
    CHECK(a.rescaled(bits + 17).contains(p));
    CHECK(a.rounded(bits - 10).contains(p));
    Ball w = a;
    w.widen(Rational(1, 1000));
    CHECK(w.contains(p + Rational(1, 1000)));
    CHECK(w.contains(a));
  }
}

TEST_CASE("refinement lies inside the coarse ball") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 300; ++i) {
    const Rational p = random_rational(rng);
    const Rational q = random_nonzero(rng);
    const Rational k = random_nonzero(rng);
    auto compute = [&](long bits) {
      const Ball a = Ball::from_rational(p, bits);
      const Ball b = Ball::from_rational(q, bits);
      return ((a * b) - a / k + b * k).abs();
    };
    const Ball coarse = compute(30);
    const Ball fine = compute(200);
    CHECK(coarse.contains(fine));
    CHECK(fine.rad() <= coarse.rad());
  }
}

TEST_CASE("ball arithmetic is independent of order") {
  std::mt19937_64 rng(5);
  std::vector<Ball> xs;
  for (int i = 0; i < 50; ++i) xs.push_back(Ball::from_rational(random_rational(rng), 80));
  Ball fwd = Ball::zero(80);
  for (const auto& x : xs) fwd += x;
  Ball back = Ball::zero(80);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) back += *it;
  CHECK(fwd.mid_units() == back.mid_units());
  CHECK(fwd.rad_units() == back.rad_units());
}

TEST_CASE("formatting") {
  CHECK(format_fixed(Rational(1, 3), 5) == "0.33333");
  CHECK(format_fixed(Rational(2, 3), 3) == "0.667");
  CHECK(format_fixed(Rational(-1, 8), 2) == "-0.13");
  CHECK(format_scientific(Rational(13173820678770678, 10000000000000000) / Rational(1000000), 17) ==
        "1.3173820678770678e-6");
  const Ball b = Ball::around(Rational(45928641, 10000000000), Rational(BigInt(3), pow_int(10, 31)), 120);
  CHECK(b.to_fixed(10) == "0.0045928641");
  CHECK(b.rad_string().starts_with("3"));
  CHECK(b.rad_string().ends_with("e-31"));
  CHECK(Ball::from_rational(Rational(1), 10).rad_string() == "0");
}
