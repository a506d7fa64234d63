#pragma once

// Dense univariate polynomials with exact coefficients.
//
// IntPoly (arbitrary precision integers) is the working type for every
// cyclotomic object; RatPoly only shows up for CRT idempotents and the
// extended Euclidean algorithm. Conversion between the two is explicit.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclorth {

using Integer = mpz_class;
using Rational = mpq_class;

/// Degree of a polynomial. std::nullopt is the degree of the zero polynomial
/// (minus infinity) and deliberately does not take part in integer arithmetic.
using Degree = std::optional<std::size_t>;

/// A division that was required to be exact left a remainder. This always
/// indicates a bug upstream and is never caught inside the library.
class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Coeff>
class Poly {
 public:
  using coeff_type = Coeff;

  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly monomial(std::size_t k, const Coeff& c = Coeff(1)) {
    std::vector<Coeff> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }

  /// X^m + sign.
  static Poly binomial(std::size_t m, int sign) {
    std::vector<Coeff> v(m + 1);
    v[m] += 1;
    v[0] += sign;
    return Poly(std::move(v));
  }

  [[nodiscard]] const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }

  [[nodiscard]] Degree degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  [[nodiscard]] const Coeff& lead() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Coefficient of X^k; zero past the end.
  [[nodiscard]] Coeff coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Coeff(0);
  }

  [[nodiscard]] Coeff evaluate(const Coeff& x) const {
    Coeff acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

namespace detail {

inline void add_product(Integer& acc, const Integer& x, const Integer& y) {
  mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}
inline void sub_product(Integer& acc, const Integer& x, const Integer& y) {
  mpz_submul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}
inline void add_product(Rational& acc, const Rational& x, const Rational& y) { acc += x * y; }
inline void sub_product(Rational& acc, const Rational& x, const Rational& y) { acc -= x * y; }

// Quotient a / b that must be exact in the coefficient ring.
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  if (b == 1) return a;
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw InexactDivision("leading coefficient does not divide over the integers");
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

template <class C>
std::vector<C> schoolbook(std::span<const C> a, std::span<const C> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<C> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) add_product(out[i + j], a[i], b[j]);
  }
  return out;
}

template <class C>
void accumulate_at(std::vector<C>& out, std::size_t offset, const std::vector<C>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] += v[i];
}

template <class C>
std::vector<C> sum_spans(std::span<const C> a, std::span<const C> b) {
  std::vector<C> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

template <class C>
std::vector<C> karatsuba(std::span<const C> a, std::span<const C> b, std::size_t threshold) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= std::max<std::size_t>(threshold, 1)) {
    return schoolbook(a, b);
  }
  const std::size_t m = std::max(a.size(), b.size()) / 2;
  std::vector<C> out(a.size() + b.size() - 1);

  if (a.size() <= m || b.size() <= m) {
    // Only the longer operand has a high half.
    const auto longer = a.size() > m ? a : b;
    const auto shorter = a.size() > m ? b : a;
    accumulate_at(out, 0, karatsuba(longer.first(m), shorter, threshold));
    accumulate_at(out, m, karatsuba(longer.subspan(m), shorter, threshold));
    return out;
  }

  const auto a0 = a.first(m), a1 = a.subspan(m);
  const auto b0 = b.first(m), b1 = b.subspan(m);
  std::vector<C> z0 = karatsuba(a0, b0, threshold);
  std::vector<C> z2 = karatsuba(a1, b1, threshold);
  const std::vector<C> sa = sum_spans(a0, a1);
  const std::vector<C> sb = sum_spans(b0, b1);
  std::vector<C> z1 = karatsuba(std::span<const C>(sa), std::span<const C>(sb), threshold);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  accumulate_at(out, 0, z0);
  accumulate_at(out, 2 * m, z2);
  // z1 may carry trailing zeros past the product length.
  for (std::size_t i = 0; i < z1.size() && m + i < out.size(); ++i) out[m + i] += z1[i];
  return out;
}

}  // namespace detail

/// Size (in coefficients) at or below which mul() falls back to schoolbook.
/// Defaults to 32. Process-wide; safe to change concurrently.
[[nodiscard]] std::size_t karatsuba_threshold() noexcept;
void set_karatsuba_threshold(std::size_t threshold) noexcept;

template <class C>
Poly<C> operator-(const Poly<C>& f) {
  std::vector<C> v = f.coeffs();
  for (auto& c : v) c = -c;
  return Poly<C>(std::move(v));
}

template <class C>
Poly<C> operator+(const Poly<C>& f, const Poly<C>& g) {
  return Poly<C>(detail::sum_spans(std::span<const C>(f.coeffs()), std::span<const C>(g.coeffs())));
}

template <class C>
Poly<C> operator-(const Poly<C>& f, const Poly<C>& g) {
  std::vector<C> v(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = f.coeffs()[i];
  for (std::size_t i = 0; i < g.size(); ++i) v[i] -= g.coeffs()[i];
  return Poly<C>(std::move(v));
}

template <class C>
Poly<C> operator*(const C& scalar, const Poly<C>& f) {
  std::vector<C> v = f.coeffs();
  for (auto& c : v) c *= scalar;
  return Poly<C>(std::move(v));
}

template <class C>
Poly<C> mul_schoolbook(const Poly<C>& f, const Poly<C>& g) {
  return Poly<C>(detail::schoolbook(std::span<const C>(f.coeffs()), std::span<const C>(g.coeffs())));
}

template <class C>
Poly<C> mul_karatsuba(const Poly<C>& f, const Poly<C>& g, std::size_t threshold) {
  return Poly<C>(
      detail::karatsuba(std::span<const C>(f.coeffs()), std::span<const C>(g.coeffs()), threshold));
}

template <class C>
Poly<C> mul(const Poly<C>& f, const Poly<C>& g) {
  return mul_karatsuba(f, g, karatsuba_threshold());
}

template <class C>
Poly<C> operator*(const Poly<C>& f, const Poly<C>& g) {
  return mul(f, g);
}

/// q with q * g == f. Throws InexactDivision if g does not divide f and
/// std::domain_error if g is zero.
template <class C>
Poly<C> div_exact(const Poly<C>& f, const Poly<C>& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.size() < g.size()) throw InexactDivision("divisor has larger degree than dividend");

  std::vector<C> rem = f.coeffs();
  const std::size_t dg = g.size() - 1;
  const C& lead = g.lead();
  std::vector<std::pair<std::size_t, const C*>> terms;
  for (std::size_t j = 0; j < dg; ++j) {
    if (g.coeffs()[j] != 0) terms.emplace_back(j, &g.coeffs()[j]);
  }

  std::vector<C> q(f.size() - dg);
  for (std::size_t k = q.size(); k-- > 0;) {
    C& top = rem[k + dg];
    if (top == 0) continue;
    q[k] = detail::exact_quotient(top, lead);
    for (const auto& [j, c] : terms) detail::sub_product(rem[k + j], q[k], *c);
    top = 0;
  }
  for (std::size_t j = 0; j < dg; ++j) {
    if (rem[j] != 0) throw InexactDivision("nonzero remainder in exact division");
  }
  return Poly<C>(std::move(q));
}

/// f * (X^m + sign) in linear time.
template <class C>
Poly<C> mul_binomial(const Poly<C>& f, std::size_t m, int sign) {
  if (m == 0) throw std::domain_error("binomial exponent must be positive");
  if (sign != 1 && sign != -1) throw std::domain_error("binomial sign must be +1 or -1");
  if (f.is_zero()) return {};
  std::vector<C> out(f.size() + m);
  const auto& c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k + m] += c[k];
    if (sign > 0) {
      out[k] += c[k];
    } else {
      out[k] -= c[k];
    }
  }
  return Poly<C>(std::move(out));
}

/// f / (X^m + sign) in linear time; the division must be exact.
template <class C>
Poly<C> div_binomial(const Poly<C>& f, std::size_t m, int sign) {
  if (m == 0) throw std::domain_error("binomial exponent must be positive");
  if (sign != 1 && sign != -1) throw std::domain_error("binomial sign must be +1 or -1");
  if (f.is_zero()) return {};
  if (f.size() <= m) throw InexactDivision("binomial does not divide polynomial of lower degree");

  const auto& c = f.coeffs();
  std::vector<C> q(f.size() - m);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = c[k + m];
    if (k + m < q.size()) {
      if (sign > 0) {
        q[k] -= q[k + m];
      } else {
        q[k] += q[k + m];
      }
    }
  }
  // Low coefficients must match sign * q[k].
  for (std::size_t k = 0; k < m; ++k) {
    const C expected = k < q.size() ? C(sign * q[k]) : C(0);
    if (c[k] != expected) throw InexactDivision("binomial division leaves a remainder");
  }
  return Poly<C>(std::move(q));
}

/// Sum of a_k * b_k; the shorter operand is treated as zero-padded.
template <class C>
C inner_product(const Poly<C>& f, const Poly<C>& g) {
  C acc = 0;
  const std::size_t len = std::min(f.size(), g.size());
  for (std::size_t k = 0; k < len; ++k) detail::add_product(acc, f.coeffs()[k], g.coeffs()[k]);
  return acc;
}

/// X^l * f.
template <class C>
Poly<C> shift(const Poly<C>& f, std::size_t l) {
  if (f.is_zero() || l == 0) return f;
  std::vector<C> v(f.size() + l);
  std::copy(f.coeffs().begin(), f.coeffs().end(), v.begin() + static_cast<std::ptrdiff_t>(l));
  return Poly<C>(std::move(v));
}

/// Representative of f modulo X^n - 1 with degree < n.
template <class C>
Poly<C> cyclic_reduce(const Poly<C>& f, std::size_t n) {
  if (n == 0) throw std::domain_error("cyclic order must be positive");
  if (f.size() <= n) return f;
  std::vector<C> v(n);
  for (std::size_t k = 0; k < f.size(); ++k) v[k % n] += f.coeffs()[k];
  return Poly<C>(std::move(v));
}

[[nodiscard]] RatPoly to_rational(const IntPoly& f);
/// Throws std::domain_error if some coefficient is not an integer.
[[nodiscard]] IntPoly to_integer(const RatPoly& f);

struct DivRem {
  RatPoly quotient;
  RatPoly remainder;
};

/// f = q*g + r with deg r < deg g. Throws std::domain_error for g == 0.
[[nodiscard]] DivRem div_rem(const RatPoly& f, const RatPoly& g);

/// f mod g.
[[nodiscard]] RatPoly rem(const RatPoly& f, const RatPoly& g);

struct Bezout {
  RatPoly gcd;  ///< monic
  RatPoly s;    ///< s*a + t*b == gcd
  RatPoly t;
};

/// Extended Euclid over Q. Throws std::domain_error when a == b == 0.
[[nodiscard]] Bezout extended_gcd(const RatPoly& a, const RatPoly& b);

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed input or a zero denominator.
[[nodiscard]] Rational parse_rational(std::string_view token);

/// Human-oriented rendering, descending powers: "X^4 - X^2 + 1".
[[nodiscard]] std::string to_string(const IntPoly& f);
[[nodiscard]] std::string to_string(const RatPoly& f);

/// Coefficient list from degree 0 upward: "[1, 0, -1, 0, 1]".
[[nodiscard]] std::string coeff_list(const IntPoly& f);
[[nodiscard]] std::string coeff_list(const RatPoly& f);

}  // namespace cyclorth
