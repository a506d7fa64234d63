#include "cyclorth/cyclotomic.hpp"

#include "cyclorth/numtheory.hpp"

namespace cyclorth {

std::string_view to_string(PhiAlgorithm algorithm) noexcept {
  switch (algorithm) {
    case PhiAlgorithm::cascade: return "cascade";
    case PhiAlgorithm::mobius: return "mobius";
    case PhiAlgorithm::radical: return "radical";
    case PhiAlgorithm::automatic: return "auto";
  }
  return "auto";
}

std::optional<PhiAlgorithm> parse_algorithm(std::string_view name) noexcept {
  if (name == "cascade") return PhiAlgorithm::cascade;
  if (name == "mobius") return PhiAlgorithm::mobius;
  if (name == "radical") return PhiAlgorithm::radical;
  if (name == "auto") return PhiAlgorithm::automatic;
  return std::nullopt;
}

IntPoly phi_mobius(std::uint64_t n) {
  const Factorization f = factorize(n);
  const auto divs = divisors(f);
  // Multiply first so that every division is exact.
  IntPoly acc{Integer(1)};
  for (std::uint64_t d : divs) {
    if (mobius(d) == 1) acc = mul_binomial(acc, n / d, -1);
  }
  for (std::uint64_t d : divs) {
    if (mobius(d) == -1) acc = div_binomial(acc, n / d, -1);
  }
  return acc;
}

IntPoly substitute_power(const IntPoly& f, std::size_t k) {
  if (k == 0) throw std::domain_error("substitution exponent must be positive");
  if (f.is_zero() || k == 1) return f;
  std::vector<Integer> v((f.size() - 1) * k + 1);
  for (std::size_t i = 0; i < f.size(); ++i) v[i * k] = f.coeffs()[i];
  return IntPoly(std::move(v));
}

IntPoly phi_radical(std::uint64_t n) {
  const Factorization f = factorize(n);
  const std::uint64_t r = radical(f);
  return substitute_power(phi_mobius(r), n / r);
}

IntPoly phi_cascade(std::uint64_t n, const PhiLookup& lower) {
  if (n == 0) throw std::domain_error("argument must be a positive integer, got 0");
  IntPoly acc = IntPoly::binomial(n, -1);
  for (std::uint64_t d : divisors(n)) {
    if (d == n) break;
    acc = div_exact(acc, lower(d));
  }
  return acc;
}

IntPoly phi(std::uint64_t n, PhiAlgorithm algorithm) {
  if (n == 0) throw std::domain_error("argument must be a positive integer, got 0");
  switch (algorithm) {
    case PhiAlgorithm::mobius: return phi_mobius(n);
    case PhiAlgorithm::radical: return phi_radical(n);
    case PhiAlgorithm::cascade: {
      std::map<std::uint64_t, IntPoly> memo;
      PhiLookup lookup = [&](std::uint64_t d) -> IntPoly {
        if (auto it = memo.find(d); it != memo.end()) return it->second;
        IntPoly value = phi_cascade(d, lookup);
        memo.emplace(d, value);
        return value;
      };
      return lookup(n);
    }
    case PhiAlgorithm::automatic:
      break;
  }
  return radical(n) == n ? phi_mobius(n) : phi_radical(n);
}

IntPoly geometric_sum(std::uint64_t n, std::uint64_t d) {
  if (d == 0 || n % d != 0) throw std::domain_error("geometric_sum requires d | n");
  std::vector<Integer> v(n - d + 1);
  for (std::uint64_t k = 0; k < n; k += d) v[k] = 1;
  return IntPoly(std::move(v));
}

IntPoly psi(std::uint64_t n) { return default_cache().psi(n); }
IntPoly psi_nd(std::uint64_t n, std::uint64_t d) { return default_cache().psi_nd(n, d); }

CoeffStats stats(const IntPoly& f, std::uint64_t n) {
  CoeffStats s;
  s.n = n;
  s.degree = f.degree();
  s.coefficients = f.coeffs();
  for (const auto& c : f.coeffs()) {
    if (c == 0) continue;
    ++s.nonzero_terms;
    const Integer a = abs(c);
    if (a > s.height) s.height = a;
  }
  return s;
}

}  // namespace cyclorth
