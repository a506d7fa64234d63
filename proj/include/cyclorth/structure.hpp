#pragma once

// The decomposition Q[X]/(X^n - 1) = (+)_{d | n} Q[X]/Phi_d realized through
// the shifted cofactors X^l * Psi_{n,d}, 0 <= l < phi(d), and the
// orthogonality of those cofactors under the coefficient inner product.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cyclorth/cyclotomic.hpp"
#include "cyclorth/linalg.hpp"

namespace cyclorth {

[[nodiscard]] std::string version();

/// Position of X^l * Psi_{n,d} in the global basis ordering.
struct BasisIndex {
  std::uint64_t d = 0;
  std::uint64_t l = 0;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Divisors ascending, then shifts ascending. Always n entries.
[[nodiscard]] std::vector<BasisIndex> basis_ordering(std::uint64_t n);

/// X^l * Psi_{n,d} for l = 0 .. phi(d) - 1, without further checks.
[[nodiscard]] std::vector<IntPoly> component_elements(std::uint64_t n, std::uint64_t d,
                                                      CycloCache& cache = default_cache());

struct ComponentBasis {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::vector<IntPoly> elements;
  bool independent = false;  ///< exact rank equals phi(d)
  bool x_stable = false;     ///< X * last element, reduced mod X^n - 1, stays in the span
};

/// Throws std::domain_error unless d | n.
[[nodiscard]] ComponentBasis component_basis(std::uint64_t n, std::uint64_t d,
                                             CycloCache& cache = default_cache());

/// Whether f (reduced mod X^n - 1) lies in the rational span of the basis.
[[nodiscard]] bool in_span(const ComponentBasis& basis, const RatPoly& f);

/// table(l1, l2) = <X^l1 * a, X^l2 * b> for l1 < count_a, l2 < count_b.
/// Each entry depends only on l1 - l2, so the table is filled from
/// count_a + count_b - 1 correlations of the coefficient sequences.
[[nodiscard]] IntMatrix shifted_inner_products(const IntPoly& a, std::size_t count_a,
                                               const IntPoly& b, std::size_t count_b);

struct Violation {
  std::uint64_t d1 = 0;
  std::uint64_t l1 = 0;
  std::uint64_t d2 = 0;
  std::uint64_t l2 = 0;
  Integer value;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct GramReport {
  std::uint64_t n = 0;
  std::vector<BasisIndex> ordering;
  IntMatrix matrix;  ///< n x n, rows and columns in `ordering`
  bool block_diagonal = true;
  /// Nonzero entries outside the diagonal blocks, upper triangle only.
  std::vector<Violation> violations;

  friend bool operator==(const GramReport&, const GramReport&) = default;
};

[[nodiscard]] GramReport gram_matrix(std::uint64_t n, CycloCache& cache = default_cache());

/// Test seam: lets callers perturb Psi_{n,d} before it is paired.
using OperandHook = std::function<void(std::uint64_t d, IntPoly& psi_nd)>;

struct VerifyOptions {
  /// false: stop at the first violation (bulk scans).
  bool exhaustive = true;
  /// Also run verify_lemma over every pair of distinct divisors.
  bool lemma = false;
  OperandHook operand_hook;
};

struct VerificationCertificate {
  std::uint64_t n = 0;
  std::uint64_t checks_performed = 0;
  bool pass = true;
  std::vector<Violation> violations;
  bool lemma_checked = false;
  std::string version;
  std::string timestamp;  ///< ISO 8601 UTC
};

/// sum over d1 < d2, both dividing n, of phi(d1) * phi(d2).
[[nodiscard]] std::uint64_t expected_check_count(std::uint64_t n);

/// Pairs every X^l1 Psi_{n,d1} with every X^l2 Psi_{n,d2} for unordered
/// divisor pairs d1 < d2; the symmetric half is redundant.
[[nodiscard]] VerificationCertificate verify_theorem(std::uint64_t n,
                                                     const VerifyOptions& options = {},
                                                     CycloCache& cache = default_cache());

/// Early-exit boolean form of verify_theorem.
[[nodiscard]] bool theorem_holds(std::uint64_t n, CycloCache& cache = default_cache());

/// verify_theorem over [first, last] on `jobs` worker threads. Results are
/// ordered by ascending n regardless of scheduling.
[[nodiscard]] std::vector<VerificationCertificate> verify_range(
    std::uint64_t first, std::uint64_t last, unsigned jobs, const VerifyOptions& options = {},
    CycloCache& cache = default_cache());

/// Coefficient of X^(jd + r) in Psi_{n,d} equals that of X^r in Psi_d for all
/// r < d, j < n/d. Throws std::domain_error unless d | n.
[[nodiscard]] bool repetition_check(std::uint64_t n, std::uint64_t d,
                                    CycloCache& cache = default_cache());

/// CRT idempotent e_d of Q[X]/(X^n - 1): 1 mod Phi_d, 0 mod every other
/// Phi_d'. Memoized in memory per (n, d).
[[nodiscard]] RatPoly idempotent(std::uint64_t n, std::uint64_t d,
                                 CycloCache& cache = default_cache());

/// Components f_d = f * e_d mod X^n - 1 for every d | n (zero ones included).
[[nodiscard]] std::map<std::uint64_t, RatPoly> decompose(std::uint64_t n, const RatPoly& f,
                                                         CycloCache& cache = default_cache());

struct FullBasis {
  IntMatrix matrix;  ///< row i = coefficients of the i-th element of basis_ordering(n)
  Integer determinant;
  bool nonsingular = false;
};

[[nodiscard]] FullBasis full_basis_matrix(std::uint64_t n, CycloCache& cache = default_cache());

}  // namespace cyclorth
