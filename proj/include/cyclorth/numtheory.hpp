#pragma once

#include <cstdint>
#include <vector>

namespace cyclorth {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer. `factors` is sorted by
/// strictly increasing prime and is empty exactly when n == 1.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  /// Multiplies the prime powers back together.
  [[nodiscard]] std::uint64_t value() const;
};

/// Trial division over a 2,3,5 wheel. Runs in O(sqrt(n)) worst case, so it is
/// meant for n up to about 10^12; the rest of the library targets n <= 10^6.
/// Throws std::domain_error for n == 0.
[[nodiscard]] Factorization factorize(std::uint64_t n);

/// All positive divisors in increasing order.
[[nodiscard]] std::vector<std::uint64_t> divisors(std::uint64_t n);
[[nodiscard]] std::vector<std::uint64_t> divisors(const Factorization& f);

[[nodiscard]] int mobius(std::uint64_t n);
[[nodiscard]] int mobius(const Factorization& f);

[[nodiscard]] std::uint64_t totient(std::uint64_t n);
[[nodiscard]] std::uint64_t totient(const Factorization& f);

/// Product of the distinct primes dividing n; radical(1) == 1.
[[nodiscard]] std::uint64_t radical(std::uint64_t n);
[[nodiscard]] std::uint64_t radical(const Factorization& f);

}  // namespace cyclorth
