#include "cyclorth/numtheory.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cyclorth {

namespace {

void require_positive(std::uint64_t n) {
  if (n == 0) throw std::domain_error("argument must be a positive integer, got 0");
}

// Pulls every factor p out of n, recording it if present.
void extract(std::uint64_t& n, std::uint64_t p, std::vector<PrimePower>& out) {
  std::uint32_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (e > 0) out.push_back({p, e});
}

// Gaps between consecutive integers coprime to 30, starting at 7.
constexpr std::array<std::uint64_t, 8> kWheelGaps = {4, 2, 4, 2, 4, 6, 2, 6};

}  // namespace

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& [p, e] : factors) {
    for (std::uint32_t i = 0; i < e; ++i) v *= p;
  }
  return v;
}

Factorization factorize(std::uint64_t n) {
  require_positive(n);
  Factorization result{n, {}};
  std::uint64_t rest = n;
  for (std::uint64_t p : {2u, 3u, 5u}) extract(rest, p, result.factors);

  std::uint64_t p = 7;
  std::size_t gap = 0;
  while (p <= rest / p) {
    extract(rest, p, result.factors);
    p += kWheelGaps[gap];
    gap = (gap + 1) % kWheelGaps.size();
  }
  if (rest > 1) result.factors.push_back({rest, 1});
  return result;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  // Mixed-radix expansion over the exponent vector.
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (std::uint32_t k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

int mobius(const Factorization& f) {
  for (const auto& pe : f.factors) {
    if (pe.exponent > 1) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

int mobius(std::uint64_t n) { return mobius(factorize(n)); }

std::uint64_t totient(const Factorization& f) {
  std::uint64_t phi = f.n;
  for (const auto& pe : f.factors) phi = phi / pe.prime * (pe.prime - 1);
  return phi;
}

std::uint64_t totient(std::uint64_t n) { return totient(factorize(n)); }

std::uint64_t radical(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& pe : f.factors) r *= pe.prime;
  return r;
}

std::uint64_t radical(std::uint64_t n) { return radical(factorize(n)); }

}  // namespace cyclorth
