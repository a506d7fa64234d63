#include "cyclorth/structure.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <mutex>
#include <thread>
#include <utility>

#include "cyclorth/numtheory.hpp"
#include "cyclorth/tensor.hpp"

namespace cyclorth {

namespace {

void require_divisor(std::uint64_t n, std::uint64_t d) {
  if (n == 0 || d == 0 || n % d != 0) {
    throw std::domain_error(std::to_string(d) + " is not a divisor of " + std::to_string(n));
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Scales f by the lcm of its denominators.
IntPoly clear_denominators(const RatPoly& f) {
  Integer lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) v.push_back(c.get_num() * (lcm / c.get_den()));
  return IntPoly(std::move(v));
}

struct DivisorData {
  std::uint64_t d;
  std::uint64_t count;  // phi(d)
  IntPoly psi_nd;
};

std::vector<DivisorData> divisor_data(std::uint64_t n, CycloCache& cache,
                                      const OperandHook& hook = {}) {
  std::vector<DivisorData> out;
  for (std::uint64_t d : divisors(n)) {
    IntPoly p = cache.psi_nd(n, d);
    if (hook) hook(d, p);
    out.push_back({d, totient(d), std::move(p)});
  }
  return out;
}

std::mutex g_idempotent_mutex;
std::map<std::pair<std::uint64_t, std::uint64_t>, RatPoly> g_idempotents;

}  // namespace

std::string version() { return CYCLORTH_VERSION; }

std::vector<BasisIndex> basis_ordering(std::uint64_t n) {
  std::vector<BasisIndex> out;
  out.reserve(n);
  for (std::uint64_t d : divisors(n)) {
    const std::uint64_t count = totient(d);
    for (std::uint64_t l = 0; l < count; ++l) out.push_back({d, l});
  }
  return out;
}

std::vector<IntPoly> component_elements(std::uint64_t n, std::uint64_t d, CycloCache& cache) {
  require_divisor(n, d);
  const IntPoly base = cache.psi_nd(n, d);
  const std::uint64_t count = totient(d);
  std::vector<IntPoly> out;
  out.reserve(count);
  for (std::uint64_t l = 0; l < count; ++l) out.push_back(shift(base, l));
  return out;
}

ComponentBasis component_basis(std::uint64_t n, std::uint64_t d, CycloCache& cache) {
  ComponentBasis basis{n, d, component_elements(n, d, cache), false, false};
  const IntMatrix rows = rows_from_polys(basis.elements, n);
  const std::size_t r = rank(rows);
  basis.independent = r == basis.elements.size();

  std::vector<IntPoly> extended = basis.elements;
  extended.push_back(cyclic_reduce(shift(basis.elements.back(), 1), n));
  basis.x_stable = rank(rows_from_polys(extended, n)) == r;
  return basis;
}

bool in_span(const ComponentBasis& basis, const RatPoly& f) {
  std::vector<IntPoly> rows = basis.elements;
  const std::size_t r = rank(rows_from_polys(rows, basis.n));
  rows.push_back(clear_denominators(cyclic_reduce(f, basis.n)));
  return rank(rows_from_polys(rows, basis.n)) == r;
}

IntMatrix shifted_inner_products(const IntPoly& a, std::size_t count_a, const IntPoly& b,
                                 std::size_t count_b) {
  IntMatrix table(count_a, count_b);
  if (count_a == 0 || count_b == 0) return table;
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  // corr[s + count_b - 1] = sum_j a[j] * b[j + s], s = l1 - l2.
  const std::ptrdiff_t lo = -static_cast<std::ptrdiff_t>(count_b - 1);
  const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(count_a - 1);
  std::vector<Integer> corr(static_cast<std::size_t>(hi - lo + 1));
  const auto na = static_cast<std::ptrdiff_t>(ca.size());
  const auto nb = static_cast<std::ptrdiff_t>(cb.size());
  for (std::ptrdiff_t s = lo; s <= hi; ++s) {
    Integer& acc = corr[static_cast<std::size_t>(s - lo)];
    const std::ptrdiff_t j0 = std::max<std::ptrdiff_t>(0, -s);
    const std::ptrdiff_t j1 = std::min(na, nb - s);
    for (std::ptrdiff_t j = j0; j < j1; ++j) {
      const Integer& x = ca[static_cast<std::size_t>(j)];
      if (x == 0) continue;
      detail::add_product(acc, x, cb[static_cast<std::size_t>(j + s)]);
    }
  }
  for (std::size_t l1 = 0; l1 < count_a; ++l1) {
    for (std::size_t l2 = 0; l2 < count_b; ++l2) {
      const auto s = static_cast<std::ptrdiff_t>(l1) - static_cast<std::ptrdiff_t>(l2);
      table(l1, l2) = corr[static_cast<std::size_t>(s - lo)];
    }
  }
  return table;
}

GramReport gram_matrix(std::uint64_t n, CycloCache& cache) {
  GramReport report;
  report.n = n;
  report.ordering = basis_ordering(n);
  report.matrix = IntMatrix(n, n);
  const auto data = divisor_data(n, cache);

  std::vector<std::size_t> offset(data.size());
  for (std::size_t i = 1; i < data.size(); ++i) offset[i] = offset[i - 1] + data[i - 1].count;

  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = i; j < data.size(); ++j) {
      const IntMatrix block =
          shifted_inner_products(data[i].psi_nd, data[i].count, data[j].psi_nd, data[j].count);
      for (std::size_t l1 = 0; l1 < data[i].count; ++l1) {
        for (std::size_t l2 = 0; l2 < data[j].count; ++l2) {
          const Integer& v = block(l1, l2);
          report.matrix(offset[i] + l1, offset[j] + l2) = v;
          report.matrix(offset[j] + l2, offset[i] + l1) = v;
          if (i != j && v != 0) report.violations.push_back({data[i].d, l1, data[j].d, l2, v});
        }
      }
    }
  }
  report.block_diagonal = report.violations.empty();
  return report;
}

std::uint64_t expected_check_count(std::uint64_t n) {
  // (sum phi(d))^2 = n^2 splits into the diagonal sum phi(d)^2 plus twice the pairs.
  std::uint64_t squares = 0;
  for (std::uint64_t d : divisors(n)) {
    const std::uint64_t t = totient(d);
    squares += t * t;
  }
  return (n * n - squares) / 2;
}

VerificationCertificate verify_theorem(std::uint64_t n, const VerifyOptions& options,
                                       CycloCache& cache) {
  VerificationCertificate cert;
  cert.n = n;
  cert.version = version();
  cert.timestamp = utc_timestamp();
  const auto data = divisor_data(n, cache, options.operand_hook);

  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = i + 1; j < data.size(); ++j) {
      const IntMatrix block =
          shifted_inner_products(data[i].psi_nd, data[i].count, data[j].psi_nd, data[j].count);
      cert.checks_performed += data[i].count * data[j].count;
      for (std::size_t l1 = 0; l1 < data[i].count; ++l1) {
        for (std::size_t l2 = 0; l2 < data[j].count; ++l2) {
          if (block(l1, l2) == 0) continue;
          cert.violations.push_back({data[i].d, l1, data[j].d, l2, block(l1, l2)});
          if (!options.exhaustive) {
            cert.pass = false;
            return cert;
          }
        }
      }
    }
  }
  cert.pass = cert.violations.empty();

  if (options.lemma) {
    cert.lemma_checked = true;
    for (std::size_t i = 0; i < data.size(); ++i) {
      for (std::size_t j = i + 1; j < data.size(); ++j) {
        if (!verify_lemma(n, data[i].d, data[j].d, cache)) cert.pass = false;
      }
    }
  }
  return cert;
}

bool theorem_holds(std::uint64_t n, CycloCache& cache) {
  VerifyOptions options;
  options.exhaustive = false;
  return verify_theorem(n, options, cache).pass;
}

std::vector<VerificationCertificate> verify_range(std::uint64_t first, std::uint64_t last,
                                                  unsigned jobs, const VerifyOptions& options,
                                                  CycloCache& cache) {
  if (first == 0 || first > last) throw std::domain_error("range must satisfy 1 <= first <= last");
  const std::size_t count = last - first + 1;
  std::vector<VerificationCertificate> results(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(jobs, 1u), count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = verify_theorem(first + i, options, cache);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

bool repetition_check(std::uint64_t n, std::uint64_t d, CycloCache& cache) {
  require_divisor(n, d);
  const IntPoly full = cache.psi_nd(n, d);
  const IntPoly base = cache.psi(d);
  for (std::uint64_t j = 0; j < n / d; ++j) {
    for (std::uint64_t r = 0; r < d; ++r) {
      if (full.coeff(j * d + r) != base.coeff(r)) return false;
    }
  }
  return true;
}

RatPoly idempotent(std::uint64_t n, std::uint64_t d, CycloCache& cache) {
  require_divisor(n, d);
  {
    std::lock_guard lock(g_idempotent_mutex);
    if (auto it = g_idempotents.find({n, d}); it != g_idempotents.end()) return it->second;
  }
  const RatPoly phi_d = to_rational(cache.phi(d));
  const RatPoly cofactor = to_rational(cache.psi_nd(n, d));
  // Reducing the cofactor first keeps the Bezout coefficient below deg Phi_d.
  const Bezout b = extended_gcd(phi_d, rem(cofactor, phi_d));
  if (b.gcd != RatPoly{Rational(1)}) {
    throw std::logic_error("Phi_d and Psi_{n,d} are not coprime for n=" + std::to_string(n) +
                           ", d=" + std::to_string(d));
  }
  RatPoly e = cyclic_reduce(cofactor * b.t, n);
  std::lock_guard lock(g_idempotent_mutex);
  return g_idempotents.emplace(std::pair{n, d}, std::move(e)).first->second;
}

std::map<std::uint64_t, RatPoly> decompose(std::uint64_t n, const RatPoly& f, CycloCache& cache) {
  if (n == 0) throw std::domain_error("cyclic order must be positive");
  const RatPoly reduced = cyclic_reduce(f, n);
  std::map<std::uint64_t, RatPoly> out;
  for (std::uint64_t d : divisors(n)) {
    out.emplace(d, cyclic_reduce(reduced * idempotent(n, d, cache), n));
  }
  return out;
}

FullBasis full_basis_matrix(std::uint64_t n, CycloCache& cache) {
  std::vector<IntPoly> rows;
  rows.reserve(n);
  for (std::uint64_t d : divisors(n)) {
    for (auto& p : component_elements(n, d, cache)) rows.push_back(std::move(p));
  }
  FullBasis out;
  out.matrix = rows_from_polys(rows, n);
  out.determinant = determinant(out.matrix);
  out.nonsingular = out.determinant != 0;
  return out;
}

}  // namespace cyclorth
