#include "zetasums/closed_form.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <stdexcept>

#include "zetasums/errors.hpp"

namespace zetasums {

BasisSymbol BasisSymbol::beta(int k) {
  if (k < 2 || k % 2 != 0) {
    throw std::invalid_argument("Beta index must be even and >= 2, got " + std::to_string(k));
  }
  return {Kind::Beta, k};
}

BasisSymbol BasisSymbol::zeta_odd(int s) {
  if (s < 3 || s % 2 != 1) {
    throw std::invalid_argument("ZetaOdd index must be odd and >= 3, got " + std::to_string(s));
  }
  return {Kind::ZetaOdd, s};
}

BasisSymbol BasisSymbol::from_key(std::string_view key) {
  if (key == "one") return one();
  if (key == "gamma") return euler_gamma();
  if (key == "pi") return pi();
  if (key == "log2") return log2();
  auto indexed = [&](std::string_view prefix) -> int {
    const std::string_view digits = key.substr(prefix.size());
    int v = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("unknown basis key '" + std::string(key) + "'");
    }
    return v;
  };
  if (key.starts_with("beta")) return beta(indexed("beta"));
  if (key.starts_with("zeta")) return zeta_odd(indexed("zeta"));
  throw std::invalid_argument("unknown basis key '" + std::string(key) + "'");
}

std::string BasisSymbol::key() const {
  switch (kind_) {
    case Kind::One: return "one";
    case Kind::EulerGamma: return "gamma";
    case Kind::Pi: return "pi";
    case Kind::Log2: return "log2";
    case Kind::Beta: return "beta" + std::to_string(index_);
    case Kind::ZetaOdd: return "zeta" + std::to_string(index_);
  }
  return {};
}

ClosedForm::ClosedForm(std::initializer_list<std::pair<const BasisSymbol, Rational>> init) {
  for (const auto& [s, c] : init) add(s, c);
}

ClosedForm ClosedForm::constant(const Rational& c) { return of(BasisSymbol::one(), c); }

ClosedForm ClosedForm::of(const BasisSymbol& s, const Rational& c) {
  ClosedForm f;
  f.add(s, c);
  return f;
}

Rational ClosedForm::coefficient(const BasisSymbol& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

ClosedForm& ClosedForm::add(const BasisSymbol& s, const Rational& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

ClosedForm& ClosedForm::operator-=(const ClosedForm& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

ClosedForm& ClosedForm::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= k;
  return *this;
}

ClosedForm cf_combine(const std::vector<std::pair<Rational, ClosedForm>>& terms) {
  ClosedForm out;
  for (const auto& [scale, form] : terms) {
    for (const auto& [s, c] : form.terms()) out.add(s, scale * c);
  }
  return out;
}

ClosedForm cf_solve_linear(const Rational& a, const ClosedForm& b, const ClosedForm& c) {
  if (a.is_zero()) throw ZeroCoefficient();
  return (c - b) * a.inverse();
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_canonical_text(const ClosedForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : f.terms()) {
    if (first) {
      out += c.to_string();
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += c.abs().to_string();
    }
    out += "*" + s.key();
    first = false;
  }
  return out;
}

std::string to_json_text(const ClosedForm& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [s, c] : f.terms()) j[s.key()] = c.to_string();
  return j.dump();
}

ClosedForm closed_form_from_json(std::string_view json) {
  const auto j = nlohmann::json::parse(json);
  if (!j.is_object()) throw std::invalid_argument("closed form JSON must be an object");
  ClosedForm f;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw std::invalid_argument("coefficient for '" + key + "' must be a string");
    f.add(BasisSymbol::from_key(key), Rational::parse(value.get<std::string>()));
  }
  return f;
}

namespace {

std::string pretty_symbol(const BasisSymbol& s) {
  using K = BasisSymbol::Kind;
  switch (s.kind()) {
    case K::One: return "";
    case K::EulerGamma: return "gamma";
    case K::Pi: return "pi";
    case K::Log2: return "log2";
    case K::Beta: return s.index() == 2 ? "G" : "beta(" + std::to_string(s.index()) + ")";
    case K::ZetaOdd: return "zeta(" + std::to_string(s.index()) + ")";
  }
  return {};
}

std::string latex_symbol(const BasisSymbol& s) {
  using K = BasisSymbol::Kind;
  switch (s.kind()) {
    case K::One: return "";
    case K::EulerGamma: return "\\gamma";
    case K::Pi: return "\\pi";
    case K::Log2: return "\\log 2";
    case K::Beta: return s.index() == 2 ? "G" : "\\beta(" + std::to_string(s.index()) + ")";
    case K::ZetaOdd: return "\\zeta(" + std::to_string(s.index()) + ")";
  }
  return {};
}

std::string plain_magnitude(const Rational& m) {
  return m.is_integer() ? m.num().get_str() : m.to_string();
}

std::string latex_magnitude(const Rational& m) {
  return m.is_integer() ? m.num().get_str()
                        : "\\frac{" + m.num().get_str() + "}{" + m.den().get_str() + "}";
}

template <typename SymbolFn, typename MagnitudeFn>
std::string render(const ClosedForm& f, SymbolFn symbol, MagnitudeFn magnitude, std::string_view times) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : f.terms()) {
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational m = c.abs();
    const std::string sym = symbol(s);
    if (sym.empty()) {
      out += magnitude(m);
    } else if (m == Rational(1)) {
      out += sym;
    } else {
      out += magnitude(m);
      out += times;
      out += sym;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string to_pretty(const ClosedForm& f) { return render(f, pretty_symbol, plain_magnitude, "*"); }

std::string to_latex(const ClosedForm& f) { return render(f, latex_symbol, latex_magnitude, ""); }

}  // namespace zetasums
