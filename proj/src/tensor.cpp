#include "cyclorth/tensor.hpp"

#include "cyclorth/numtheory.hpp"
#include "cyclorth/structure.hpp"

namespace cyclorth {

namespace {

std::vector<TensorElement> tensor_span(std::uint64_t n, const std::vector<IntPoly>& component) {
  std::vector<TensorElement> out;
  out.reserve(2 * component.size());
  for (const auto& u : component) out.push_back(TensorElement::along_v1(n, u));
  for (const auto& u : component) out.push_back(TensorElement::along_v2(n, u));
  return out;
}

TensorElement unit_vector(std::uint64_t n, std::size_t index) {
  const auto mono = IntPoly::monomial(index % n);
  return index < n ? TensorElement::along_v1(n, mono) : TensorElement::along_v2(n, mono);
}

}  // namespace

std::vector<Integer> coordinates(const TensorElement& a) {
  std::vector<Integer> out(2 * a.n());
  for (std::size_t k = 0; k < a.p1().size(); ++k) out[k] = a.p1().coeffs()[k];
  for (std::size_t k = 0; k < a.p2().size(); ++k) out[a.n() + k] = a.p2().coeffs()[k];
  return out;
}

IntMatrix pairing_matrix(std::uint64_t n) {
  IntMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const auto ei = unit_vector(n, i);
    for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) = tensor_pair(ei, unit_vector(n, j));
  }
  return m;
}

bool verify_lemma(std::uint64_t n, std::uint64_t d1, std::uint64_t d2, CycloCache& cache) {
  if (n == 0 || d1 == 0 || d2 == 0 || n % d1 != 0 || n % d2 != 0) {
    throw std::domain_error("verify_lemma requires divisors of n");
  }
  if (d1 == d2) throw std::domain_error("verify_lemma requires distinct divisors");
  const auto left = tensor_span(n, component_elements(n, d1, cache));
  const auto right = tensor_span(n, component_elements(n, d2, cache));
  for (const auto& a : left) {
    for (const auto& b : right) {
      if (tensor_pair(a, b) != 0) return false;
    }
  }
  return true;
}

ComplementReport orthogonal_complement(std::uint64_t n, std::uint64_t d1, CycloCache& cache) {
  if (n == 0 || d1 == 0 || n % d1 != 0) throw std::domain_error("d1 must divide n");
  ComplementReport report;
  report.n = n;
  report.d1 = d1;
  report.expected_dimension = 2 * n - 2 * totient(d1);

  // Row u holds the functional x -> <u, x> in the unit-vector coordinates.
  const auto span = tensor_span(n, component_elements(n, d1, cache));
  IntMatrix functionals(span.size(), 2 * n);
  for (std::size_t i = 0; i < span.size(); ++i) {
    for (std::size_t j = 0; j < 2 * n; ++j) {
      functionals(i, j) = tensor_pair(span[i], unit_vector(n, j));
    }
  }
  const auto kernel = kernel_basis(to_rational(functionals));
  report.dimension = kernel.size();

  std::vector<std::vector<Integer>> others;
  for (std::uint64_t d : divisors(n)) {
    if (d == d1) continue;
    for (const auto& w : tensor_span(n, component_elements(n, d, cache))) {
      others.push_back(coordinates(w));
    }
  }

  report.others_orthogonal = true;
  for (const auto& x : others) {
    for (std::size_t i = 0; i < functionals.rows() && report.others_orthogonal; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < x.size(); ++j) detail::add_product(acc, functionals(i, j), x[j]);
      if (acc != 0) report.others_orthogonal = false;
    }
  }

  IntMatrix stacked(others.size(), 2 * n);
  for (std::size_t i = 0; i < others.size(); ++i) {
    for (std::size_t j = 0; j < 2 * n; ++j) stacked(i, j) = others[i][j];
  }
  report.others_dimension = rank(stacked);
  return report;
}

}  // namespace cyclorth
