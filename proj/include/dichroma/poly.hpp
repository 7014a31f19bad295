#pragma once

// Exact bivariate polynomials over arbitrary-precision integers.
//
// A Poly has two variables, called "first" and "second". Their names are
// contextual: (q, t) for the dichromate, (p, t) for its companion, (x, y) for
// the Tutte polynomial. Univariate polynomials use a single slot; the module
// documents which one.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace dichroma {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

struct Exponents {
  unsigned first = 0;
  unsigned second = 0;

  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

class Poly {
 public:
  using Terms = std::map<Exponents, BigInt>;

  Poly() = default;
  Poly(BigInt constant) { add_term({0, 0}, std::move(constant)); }  // NOLINT
  Poly(int constant) : Poly(BigInt(constant)) {}                      // NOLINT

  static Poly monomial(BigInt c, unsigned first_exp, unsigned second_exp) {
    Poly p;
    p.add_term({first_exp, second_exp}, std::move(c));
    return p;
  }
  static Poly first_var() { return monomial(1, 1, 0); }
  static Poly second_var() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  BigInt coeff(unsigned first_exp, unsigned second_exp) const {
    auto it = terms_.find({first_exp, second_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  int degree_first() const {
    int deg = kMinusInfinity;
    for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<int>(e.first));
    return deg;
  }
  int degree_second() const {
    int deg = kMinusInfinity;
    for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<int>(e.second));
    return deg;
  }

  /// Adds c * first^a * second^b in place, dropping the term if it cancels.
  void add_term(Exponents e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
  }
  friend Poly operator*(const BigInt& s, Poly a) {
    if (s == 0) return {};
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(unsigned k) const {
    Poly result(1);
    Poly base = *this;
    while (k > 0) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return result;
  }

  /// Lexicographically largest exponent pair; undefined on zero.
  const std::pair<const Exponents, BigInt>& leading_term() const { return *terms_.rbegin(); }

  Rational evaluate(const Rational& first_val, const Rational& second_val) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = Rational(c);
      for (unsigned k = 0; k < e.first; ++k) term *= first_val;
      for (unsigned k = 0; k < e.second; ++k) term *= second_val;
      sum += term;
    }
    return sum;
  }

  /// [first^k] as a polynomial in the second slot.
  Poly coefficient_of_first(unsigned k) const {
    Poly r;
    for (const auto& [e, c] : terms_)
      if (e.first == k) r.add_term({0, e.second}, c);
    return r;
  }

  /// [second^k] as a polynomial in the first slot.
  Poly coefficient_of_second(unsigned k) const {
    Poly r;
    for (const auto& [e, c] : terms_)
      if (e.second == k) r.add_term({e.first, 0}, c);
    return r;
  }

  /// Swaps the roles of the two variables.
  Poly swapped() const {
    Poly r;
    for (const auto& [e, c] : terms_) r.add_term({e.second, e.first}, c);
    return r;
  }

  bool all_coefficients_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
  }

  std::string to_string(const std::string& first_name = "p",
                        const std::string& second_name = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      std::string mono;
      auto factor = [&](const std::string& name, unsigned k) {
        if (k == 0) return;
        if (!mono.empty()) mono += "*";
        mono += name;
        if (k > 1) mono += "^" + std::to_string(k);
      };
      factor(first_name, e.first);
      factor(second_name, e.second);
      if (mono.empty())
        out += mag.str();
      else if (mag == 1)
        out += mono;
      else
        out += mag.str() + "*" + mono;
    }
    return out;
  }

 private:
  Terms terms_;
};

/// t(t-1)...(t-k+1) in the second slot.
inline Poly falling_factorial(unsigned k) {
  Poly r(1);
  for (unsigned j = 0; j < k; ++j) r *= Poly::second_var() - Poly(static_cast<int>(j));
  return r;
}

/// Returns q with num == den * q, or throws NonExactDivision.
///
/// Leading terms are taken in lexicographic order on (first, second); the
/// quotient is built by repeated leading-term elimination and the remainder
/// must vanish identically.
inline Poly exact_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw NonExactDivision("division by the zero polynomial");
  const auto& [lead_e, lead_c] = den.leading_term();
  Poly rem = num;
  Poly quot;
  while (!rem.is_zero()) {
    const auto& [e, c] = rem.leading_term();
    if (e.first < lead_e.first || e.second < lead_e.second || c % lead_c != 0)
      throw NonExactDivision("remainder " + rem.to_string("X", "Y") + " survives division by " +
                             den.to_string("X", "Y"));
    Poly step = Poly::monomial(c / lead_c, e.first - lead_e.first, e.second - lead_e.second);
    quot += step;
    rem -= step * den;
  }
  return quot;
}

/// A rational image numerator/denominator for one variable.
struct RationalImage {
  Poly numerator;
  Poly denominator = Poly(1);
};

/// Computes multiplier * P(first, second) / divisor with all denominators
/// cleared and a final exact division; the result must be a polynomial.
///
/// Each monomial c a^i b^j with i <= A = deg_first P, j <= B = deg_second P is
/// expanded as c N1^i D1^(A-i) N2^j D2^(B-j), and the sum is divided by
/// D1^A D2^B * divisor.
inline Poly substitute(const Poly& p, const RationalImage& first, const RationalImage& second,
                       const Poly& multiplier = Poly(1), const Poly& divisor = Poly(1)) {
  if (p.is_zero()) return {};
  const unsigned deg_a = static_cast<unsigned>(p.degree_first());
  const unsigned deg_b = static_cast<unsigned>(p.degree_second());

  std::map<unsigned, Poly> first_parts;
  std::map<unsigned, Poly> second_parts;
  for (const auto& [e, c] : p.terms()) {
    if (!first_parts.contains(e.first))
      first_parts[e.first] = first.numerator.pow(e.first) * first.denominator.pow(deg_a - e.first);
    if (!second_parts.contains(e.second))
      second_parts[e.second] =
          second.numerator.pow(e.second) * second.denominator.pow(deg_b - e.second);
  }
  Poly sum;
  for (const auto& [e, c] : p.terms()) sum += c * (first_parts[e.first] * second_parts[e.second]);
  Poly den = first.denominator.pow(deg_a) * second.denominator.pow(deg_b) * divisor;
  return exact_div(multiplier * sum, den);
}

/// Polynomial composition P(a, b).
inline Poly compose(const Poly& p, const Poly& first_image, const Poly& second_image) {
  return substitute(p, {first_image}, {second_image});
}

}  // namespace dichroma
