#include "cyclorth/poly.hpp"

#include <atomic>
#include <regex>
#include <sstream>

namespace cyclorth {

namespace {

std::atomic<std::size_t> g_karatsuba_threshold{32};

template <class C>
std::string render(const Poly<C>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = f.size(); k-- > 0;) {
    const C& c = f.coeffs()[k];
    if (c == 0) continue;
    const bool negative = sgn(c) < 0;
    const C magnitude = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (k == 0) {
      os << magnitude;
      continue;
    }
    if (!unit) os << magnitude << '*';
    os << 'X';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

template <class C>
std::string render_list(const Poly<C>& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k > 0) os << ", ";
    os << f.coeffs()[k];
  }
  os << ']';
  return os.str();
}

}  // namespace

std::size_t karatsuba_threshold() noexcept {
  return g_karatsuba_threshold.load(std::memory_order_relaxed);
}

void set_karatsuba_threshold(std::size_t threshold) noexcept {
  g_karatsuba_threshold.store(threshold, std::memory_order_relaxed);
}

RatPoly to_rational(const IntPoly& f) {
  std::vector<Rational> v(f.coeffs().begin(), f.coeffs().end());
  return RatPoly(std::move(v));
}

IntPoly to_integer(const RatPoly& f) {
  std::vector<Integer> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) {
    if (c.get_den() != 1) throw std::domain_error("coefficient " + c.get_str() + " is not an integer");
    v.push_back(c.get_num());
  }
  return IntPoly(std::move(v));
}

DivRem div_rem(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.size() < g.size()) return {RatPoly{}, f};

  std::vector<Rational> r = f.coeffs();
  const std::size_t dg = g.size() - 1;
  const Rational inv_lead = 1 / g.lead();
  std::vector<Rational> q(f.size() - dg);
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational& top = r[k + dg];
    if (top == 0) continue;
    q[k] = top * inv_lead;
    for (std::size_t j = 0; j < dg; ++j) {
      if (g.coeffs()[j] != 0) r[k + j] -= q[k] * g.coeffs()[j];
    }
    top = 0;
  }
  r.resize(dg);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly rem(const RatPoly& f, const RatPoly& g) { return div_rem(f, g).remainder; }

Bezout extended_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");

  RatPoly r0 = a, r1 = b;
  RatPoly s0{Rational(1)}, s1;
  RatPoly t0, t1{Rational(1)};
  while (!r1.is_zero()) {
    auto [q, r] = div_rem(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    RatPoly s2 = s0 - q * s1;
    s0 = std::exchange(s1, std::move(s2));
    RatPoly t2 = t0 - q * t1;
    t0 = std::exchange(t1, std::move(t2));
  }
  const Rational inv = 1 / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

Rational parse_rational(std::string_view token) {
  static const std::regex kPattern(R"(^\s*([+-]?\d+)(?:/(\d+))?\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(token.begin(), token.end(), m, kPattern)) {
    throw std::invalid_argument("not a rational number: '" + std::string(token) + "'");
  }
  std::string num = m[1].str();
  if (num.front() == '+') num.erase(0, 1);
  Rational value;
  value.get_num() = Integer(num, 10);
  value.get_den() = m[2].matched ? Integer(m[2].str(), 10) : Integer(1);
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const IntPoly& f) { return render(f); }
std::string to_string(const RatPoly& f) { return render(f); }
std::string coeff_list(const IntPoly& f) { return render_list(f); }
std::string coeff_list(const RatPoly& f) { return render_list(f); }

}  // namespace cyclorth
