#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string_view>

#include "cyclorth/poly.hpp"

namespace cyclorth {

enum class PhiAlgorithm {
  cascade,    ///< (X^n - 1) divided by every Phi_d, d a proper divisor
  mobius,     ///< prod over d | n of (X^(n/d) - 1)^mu(d), binomial steps only
  radical,    ///< Phi_rad(n)(X^(n/rad(n))) with the squarefree core by mobius
  automatic,  ///< radical when n is not squarefree, mobius otherwise
};

[[nodiscard]] std::string_view to_string(PhiAlgorithm algorithm) noexcept;
/// Accepts "cascade", "mobius", "radical" and "auto".
[[nodiscard]] std::optional<PhiAlgorithm> parse_algorithm(std::string_view name) noexcept;

/// Supplies Phi_d for the cascade algorithm.
using PhiLookup = std::function<IntPoly(std::uint64_t)>;

[[nodiscard]] IntPoly phi_mobius(std::uint64_t n);
[[nodiscard]] IntPoly phi_radical(std::uint64_t n);
[[nodiscard]] IntPoly phi_cascade(std::uint64_t n, const PhiLookup& lower);

/// The n-th cyclotomic polynomial. The cascade variant memoizes its
/// recursion locally. Throws std::domain_error for n == 0.
[[nodiscard]] IntPoly phi(std::uint64_t n, PhiAlgorithm algorithm = PhiAlgorithm::automatic);

/// Psi_n and Psi_{n,d} through the default cache.
[[nodiscard]] IntPoly psi(std::uint64_t n);
[[nodiscard]] IntPoly psi_nd(std::uint64_t n, std::uint64_t d);

/// f(X^k).
[[nodiscard]] IntPoly substitute_power(const IntPoly& f, std::size_t k);

/// 1 + X^d + X^(2d) + ... + X^(n-d). Requires d | n.
[[nodiscard]] IntPoly geometric_sum(std::uint64_t n, std::uint64_t d);

/// Inspectable report on a polynomial's coefficients. Makes no claims.
struct CoeffStats {
  std::uint64_t n = 0;
  Degree degree;
  Integer height;  ///< max |coefficient|
  std::size_t nonzero_terms = 0;
  std::vector<Integer> coefficients;

  friend bool operator==(const CoeffStats&, const CoeffStats&) = default;
};

[[nodiscard]] CoeffStats stats(const IntPoly& f, std::uint64_t n);

/// Memo of Phi_n, keyed by n, optionally persisted to a text file with one
/// record per line: `n:c0,c1,...,c_phi(n)` in ASCII decimal.
///
/// Lookups take a shared lock. Missing entries are computed outside any lock
/// and inserted under an exclusive lock, so the same n may be computed twice
/// by racing threads; both results are identical.
class CycloCache {
 public:
  explicit CycloCache(PhiAlgorithm algorithm = PhiAlgorithm::automatic);

  CycloCache(const CycloCache&) = delete;
  CycloCache& operator=(const CycloCache&) = delete;

  [[nodiscard]] IntPoly phi(std::uint64_t n);
  /// Psi_n = (X^n - 1) / Phi_n.
  [[nodiscard]] IntPoly psi(std::uint64_t n);
  /// Psi_{n,d} = (X^n - 1) / Phi_d, computed both as a quotient and as
  /// geometric_sum(n, d) * Psi_d; a disagreement throws std::logic_error.
  [[nodiscard]] IntPoly psi_nd(std::uint64_t n, std::uint64_t d);

  [[nodiscard]] bool contains(std::uint64_t n) const;
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::map<std::uint64_t, IntPoly> snapshot() const;
  [[nodiscard]] PhiAlgorithm algorithm() const noexcept { return algorithm_; }

  /// Adds an entry after checking it: degree phi(n), leading coefficient 1,
  /// Phi_n(0) and Phi_n(1) consistent with X^n - 1 = prod Phi_d.
  /// Throws std::invalid_argument on a bad entry.
  void insert(std::uint64_t n, IntPoly f);

  /// Serializes every entry in ascending n.
  void write(std::ostream& os) const;
  /// Merges records from a stream. Throws std::invalid_argument on a
  /// malformed line or an entry that fails validation.
  void read(std::istream& is);

  /// Writes the whole cache, replacing the file atomically via a temporary.
  void save(const std::filesystem::path& file);
  /// Returns false when the file does not exist.
  bool load(const std::filesystem::path& file);

  /// Whether anything was inserted since construction or the last load/save.
  [[nodiscard]] bool dirty() const;

 private:
  PhiAlgorithm algorithm_;
  mutable std::shared_mutex mutex_;
  std::map<std::uint64_t, IntPoly> entries_;
  bool dirty_ = false;
};

/// Process-wide cache used when callers do not supply one.
[[nodiscard]] CycloCache& default_cache();

/// Checks the cache invariants for a candidate Phi_n without consulting
/// any other entry. Returns a description of the first failure.
[[nodiscard]] std::optional<std::string> validate_phi(std::uint64_t n, const IntPoly& f);

}  // namespace cyclorth
