#pragma once

// Q[G] (x) V for G cyclic of order n and V = span(v1, v2), with the pairing
// extended from <a v1 + b v2, c v1 + d v2> = ad - bc.

#include <cstdint>
#include <stdexcept>

#include "cyclorth/cyclotomic.hpp"
#include "cyclorth/linalg.hpp"

namespace cyclorth {

/// p1 (x) v1 + p2 (x) v2, both polynomials kept reduced mod X^n - 1.
template <class C>
class BasicTensorElement {
 public:
  BasicTensorElement(std::uint64_t n, const Poly<C>& p1, const Poly<C>& p2)
      : n_(require_order(n)), p1_(cyclic_reduce(p1, n)), p2_(cyclic_reduce(p2, n)) {}

  static BasicTensorElement along_v1(std::uint64_t n, const Poly<C>& f) { return {n, f, {}}; }
  static BasicTensorElement along_v2(std::uint64_t n, const Poly<C>& f) { return {n, {}, f}; }

  [[nodiscard]] std::uint64_t n() const noexcept { return n_; }
  [[nodiscard]] const Poly<C>& p1() const noexcept { return p1_; }
  [[nodiscard]] const Poly<C>& p2() const noexcept { return p2_; }

  friend bool operator==(const BasicTensorElement&, const BasicTensorElement&) = default;

 private:
  static std::uint64_t require_order(std::uint64_t n) {
    if (n == 0) throw std::domain_error("cyclic order must be positive");
    return n;
  }

  std::uint64_t n_;
  Poly<C> p1_;
  Poly<C> p2_;
};

using TensorElement = BasicTensorElement<Integer>;
using RatTensorElement = BasicTensorElement<Rational>;

namespace detail {
template <class C>
void require_same_order(const BasicTensorElement<C>& a, const BasicTensorElement<C>& b) {
  if (a.n() != b.n()) throw std::domain_error("tensor elements live in different group algebras");
}
}  // namespace detail

template <class C>
BasicTensorElement<C> operator+(const BasicTensorElement<C>& a, const BasicTensorElement<C>& b) {
  detail::require_same_order(a, b);
  return {a.n(), a.p1() + b.p1(), a.p2() + b.p2()};
}

template <class C>
BasicTensorElement<C> operator*(const C& scalar, const BasicTensorElement<C>& a) {
  return {a.n(), scalar * a.p1(), scalar * a.p2()};
}

/// <a, b> = <a.p1, b.p2> - <a.p2, b.p1>.
template <class C>
C tensor_pair(const BasicTensorElement<C>& a, const BasicTensorElement<C>& b) {
  detail::require_same_order(a, b);
  C value = inner_product(a.p1(), b.p2());
  value -= inner_product(a.p2(), b.p1());
  return value;
}

/// Left action of the generator g0 (multiplication by X) on both factors.
template <class C>
BasicTensorElement<C> act_generator(const BasicTensorElement<C>& a) {
  return {a.n(), shift(a.p1(), 1), shift(a.p2(), 1)};
}

/// Coordinates (p1 coefficients, then p2 coefficients), length 2n.
[[nodiscard]] std::vector<Integer> coordinates(const TensorElement& a);

/// Pairing matrix on {X^k (x) v1}_{k<n} followed by {X^k (x) v2}_{k<n}.
[[nodiscard]] IntMatrix pairing_matrix(std::uint64_t n);

/// The pairing vanishes between Q[G]^(d1) (x) V and Q[G]^(d2) (x) V, checked
/// on every combination of component basis elements and v1, v2. Throws
/// std::domain_error unless d1, d2 are distinct divisors of n.
[[nodiscard]] bool verify_lemma(std::uint64_t n, std::uint64_t d1, std::uint64_t d2,
                                CycloCache& cache = default_cache());

struct ComplementReport {
  std::uint64_t n = 0;
  std::uint64_t d1 = 0;
  std::size_t dimension = 0;           ///< dim of the orthogonal complement (exact kernel)
  std::size_t expected_dimension = 0;  ///< 2n - 2 phi(d1)
  bool others_orthogonal = false;      ///< every other component (x) V lies in it
  std::size_t others_dimension = 0;    ///< rank of the other components together

  [[nodiscard]] bool matches() const noexcept {
    return dimension == expected_dimension && others_orthogonal &&
           others_dimension == expected_dimension;
  }
};

/// Orthogonal complement of Q[G]^(d1) (x) V computed as the exact kernel of
/// the pairing against a spanning set of that component.
[[nodiscard]] ComplementReport orthogonal_complement(std::uint64_t n, std::uint64_t d1,
                                                     CycloCache& cache = default_cache());

}  // namespace cyclorth
