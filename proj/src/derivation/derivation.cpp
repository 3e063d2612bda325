#include "zetasums/derivation.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "zetasums/errors.hpp"

namespace zetasums {

namespace {

using TermKey = std::tuple<int, int, int>;  // (xpow, weight, bpow)

void check_term(const SumTerm& t) {
  if (t.bpow < 1) throw std::invalid_argument("SumTerm: bpow must be >= 1");
  if (t.xpow < 0) throw std::invalid_argument("SumTerm: xpow must be >= 0");
  if (t.weight > 2 * t.bpow - 2) {
    throw std::invalid_argument("SumTerm: divergent shape, need weight <= 2*bpow - 2");
  }
}

bool reducible(const SumTerm& t) {
  // Both pieces n^(w+2)/D^b and n^w/D^(b-1) must converge.
  return t.xpow >= 2 && t.bpow >= 2 && t.weight <= 2 * t.bpow - 4;
}

}  // namespace

SumExpression::SumExpression(std::vector<SumTerm> terms) {
  std::map<TermKey, Rational> merged;
  for (const auto& t : terms) {
    check_term(t);
    merged[{t.xpow, t.weight, t.bpow}] += t.coeff;
  }
  for (const auto& [key, c] : merged) {
    if (c.is_zero()) continue;
    const auto [a, w, b] = key;
    terms_.push_back({c, a, w, b});
  }
}

std::string to_string(const SumExpression& e) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& t : e.terms()) {
    if (!first) os << ", ";
    os << "(" << t.coeff << ", x^" << t.xpow << ", n^" << t.weight << ", b=" << t.bpow << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

Rational anchor_point(Anchor a) { return a == Anchor::Quarter ? Rational(1, 4) : Rational(1, 2); }

int anchor_scale(Anchor a) { return a == Anchor::Quarter ? 16 : 4; }

std::string anchor_name(Anchor a) { return a == Anchor::Quarter ? "quarter" : "half"; }

std::string to_string(const SumIndex& i) {
  const int s = anchor_scale(i.anchor);
  std::ostringstream os;
  os << "sum n^" << i.weight << "/(" << s << "n^2-1)^" << i.bpow;
  return os.str();
}

SumExpression base_expression() { return SumExpression({{Rational(-2), 2, -1, 1}}); }

SumExpression differentiate(const SumExpression& expr) {
  std::vector<SumTerm> out;
  out.reserve(2 * expr.terms().size());
  for (const auto& t : expr.terms()) {
    if (t.xpow > 0) out.push_back({t.coeff * Rational(t.xpow), t.xpow - 1, t.weight, t.bpow});
    out.push_back({t.coeff * Rational(2 * t.bpow), t.xpow + 1, t.weight, t.bpow + 1});
  }
  return SumExpression(std::move(out));
}

SumExpression reduce_weight(const SumExpression& expr) {
  SumExpression current = expr;
  for (;;) {
    std::vector<SumTerm> next;
    bool changed = false;
    for (const auto& t : current.terms()) {
      if (reducible(t)) {
        next.push_back({t.coeff, t.xpow - 2, t.weight + 2, t.bpow});
        next.push_back({-t.coeff, t.xpow - 2, t.weight, t.bpow - 1});
        changed = true;
      } else {
        next.push_back(t);
      }
    }
    if (!changed) return current;
    current = SumExpression(std::move(next));
  }
}

SumExpression reduce_weight_strict(const SumExpression& expr) {
  SumExpression reduced = reduce_weight(expr);
  for (const auto& t : reduced.terms()) {
    if (t.xpow >= 2) {
      throw InvalidReduction("cannot reduce x^" + std::to_string(t.xpow) + " n^" +
                             std::to_string(t.weight) + "/(n^2-x^2)^" + std::to_string(t.bpow) +
                             " without creating a divergent series");
    }
  }
  return reduced;
}

std::map<SumIndex, Rational> anchor_coefficients(const SumExpression& expr, Anchor anchor) {
  const Rational x0 = anchor_point(anchor);
  const Rational s(anchor_scale(anchor));
  std::map<SumIndex, Rational> out;
  for (const auto& t : expr.terms()) {
    const SumIndex idx{t.weight, t.bpow, anchor};
    out[idx] += t.coeff * x0.pow(static_cast<unsigned>(t.xpow)) * s.pow(static_cast<unsigned>(t.bpow));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// ---------------------------------------------------------------------------
// Polygamma side

ClosedForm digamma_quarter() {
  // psi(1/4) = -gamma - pi/2 - 3 log 2
  return {{BasisSymbol::euler_gamma(), -1},
          {BasisSymbol::pi(), Rational(-1, 2)},
          {BasisSymbol::log2(), -3}};
}

ClosedForm digamma_three_quarters() {
  // psi(3/4) = -gamma + pi/2 - 3 log 2
  return {{BasisSymbol::euler_gamma(), -1},
          {BasisSymbol::pi(), Rational(1, 2)},
          {BasisSymbol::log2(), -3}};
}

ClosedForm digamma_half() {
  // psi(1/2) = -gamma - 2 log 2
  return {{BasisSymbol::euler_gamma(), -1}, {BasisSymbol::log2(), -2}};
}

ClosedForm quarter_polygamma_table(int m) {
  if (m < 1) throw std::invalid_argument("quarter_polygamma_table: order must be >= 1");
  const auto um = static_cast<unsigned>(m);
  const BigInt fact = factorial(um);
  if (m % 2 == 1) {
    // psi^(m)(1/4) - psi^(m)(3/4) = m! 2^(2m+2) beta(m+1)
    return ClosedForm::of(BasisSymbol::beta(m + 1), Rational(BigInt(fact * pow_int(2, 2 * um + 2))));
  }
  // psi^(m)(1/4) + psi^(m)(3/4) = -m! 2^(m+1) (2^(m+1) - 1) zeta(m+1)
  const BigInt p = pow_int(2, um + 1);
  return ClosedForm::of(BasisSymbol::zeta_odd(m + 1), -Rational(BigInt(fact * p * (p - 1))));
}

ClosedForm half_polygamma_value(int m) {
  if (m == 0) return digamma_half();
  if (m < 0 || m % 2 == 1) {
    throw std::invalid_argument("half_polygamma_value: only m = 0 and even m have a basis form");
  }
  // psi^(m)(1/2) = (-1)^(m+1) m! (2^(m+1) - 1) zeta(m+1), m even
  const auto um = static_cast<unsigned>(m);
  return ClosedForm::of(BasisSymbol::zeta_odd(m + 1),
                        -Rational(BigInt(factorial(um) * (pow_int(2, um + 1) - 1))));
}

ClosedForm polygamma_combination(int m, Anchor anchor) {
  if (m < 0) throw std::invalid_argument("polygamma_combination: order must be >= 0");
  const auto um = static_cast<unsigned>(m);
  const Rational x0 = anchor_point(anchor);

  // psi^(m)(1+x) = psi^(m)(x) + (-1)^m m! / x^(m+1)
  Rational shift = Rational(factorial(um)) / x0.pow(um + 1);
  if (m % 2 == 1) shift = -shift;
  ClosedForm out = ClosedForm::constant(shift);

  const ClosedForm two_gamma = ClosedForm::of(BasisSymbol::euler_gamma(), 2);
  if (anchor == Anchor::Quarter) {
    if (m == 0) {
      out += digamma_quarter() + digamma_three_quarters() + two_gamma;
    } else {
      out += quarter_polygamma_table(m);
    }
  } else {
    // psi^(m)(1/2) + (-1)^m psi^(m)(1/2): doubles for even m, cancels for odd m.
    if (m == 0) {
      out += Rational(2) * digamma_half() + two_gamma;
    } else if (m % 2 == 0) {
      out += Rational(2) * half_polygamma_value(m);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Triangular solve

namespace {

template <typename Build>
const SumExpression& cached_expression(std::vector<SumExpression>& cache, int order, Build build) {
  while (static_cast<int>(cache.size()) <= order) {
    cache.push_back(build(static_cast<int>(cache.size()), cache));
  }
  return cache[static_cast<std::size_t>(order)];
}

std::mutex g_expr_mutex;
std::vector<SumExpression> g_plain_cache;
std::vector<SumExpression> g_weighted_cache;

struct FamilyKey {
  int weight;
  Anchor anchor;
  friend auto operator<=>(const FamilyKey&, const FamilyKey&) = default;
};

std::mutex g_solve_mutex;
// solved[(w, anchor)][b] = closed form of sum n^w/(s n^2-1)^b
std::map<FamilyKey, std::map<int, ClosedForm>> g_solved;

int first_b(int weight) { return weight == -1 ? 1 : 2; }

SumExpression expression_for(int weight, int order) {
  return weight == -1 ? derivative_expression(order) : weighted_expression(order);
}

ClosedForm solve_family(int weight, int b, Anchor anchor) {
  std::lock_guard lock(g_solve_mutex);
  auto& solved = g_solved[{weight, anchor}];
  for (int target = first_b(weight); target <= b; ++target) {
    if (solved.contains(target)) continue;
    const int m = target - 1;  // the order-m identity introduces b = m + 1
    const auto coeffs = anchor_coefficients(expression_for(weight, m), anchor);

    const SumIndex pivot_index{weight, target, anchor};
    ClosedForm known;
    Rational pivot;
    for (const auto& [idx, c] : coeffs) {
      if (idx == pivot_index) {
        pivot = c;
        continue;
      }
      if (idx.weight != weight || idx.bpow > target || !solved.contains(idx.bpow)) {
        throw std::logic_error("derivation: order-" + std::to_string(m) +
                               " identity is not triangular in " + to_string(idx));
      }
      known += c * solved.at(idx.bpow);
    }
    if (pivot.is_zero()) {
      throw std::logic_error("derivation: zero pivot at order " + std::to_string(m));
    }
    solved.emplace(target, cf_solve_linear(pivot, known, polygamma_combination(m, anchor)));
  }
  return solved.at(b);
}

}  // namespace

SumExpression derivative_expression(int order) {
  if (order < 0) throw std::invalid_argument("derivative_expression: order must be >= 0");
  std::lock_guard lock(g_expr_mutex);
  return cached_expression(g_plain_cache, order, [](int m, const std::vector<SumExpression>& c) {
    return m == 0 ? base_expression() : differentiate(c.back());
  });
}

SumExpression weighted_expression(int order) {
  if (order < 1) throw std::invalid_argument("weighted_expression: order must be >= 1");
  std::lock_guard lock(g_expr_mutex);
  // Slot 0 is unused; slot 1 is the reduced first derivative.
  return cached_expression(g_weighted_cache, order, [](int m, const std::vector<SumExpression>& c) {
    if (m == 0) return SumExpression();
    if (m == 1) return reduce_weight_strict(differentiate(base_expression()));
    return differentiate(c.back());
  });
}

ClosedForm derive_closed_form(int r, Anchor anchor) {
  if (r < 1) throw std::invalid_argument("derive_closed_form: r must be >= 1");
  return solve_family(-1, r, anchor);
}

ClosedForm derive_weighted_closed_form(int b, Anchor anchor) {
  if (b < 2) throw std::invalid_argument("derive_weighted_closed_form: b must be >= 2");
  return solve_family(1, b, anchor);
}

ClosedForm derive_for_index(const SumIndex& index) {
  if (index.weight == -1) return derive_closed_form(index.bpow, index.anchor);
  if (index.weight == 1) return derive_weighted_closed_form(index.bpow, index.anchor);
  throw std::invalid_argument("derive_for_index: weight must be -1 or +1");
}

}  // namespace zetasums
