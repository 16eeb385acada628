#pragma once

#include <span>
#include <vector>

#include "spreadlab/polynomial.hpp"

namespace spreadlab {

/// Reduced Gröbner basis: monic elements, no term of any element divisible by
/// another element's leading monomial, sorted ascending by leading monomial.
/// For a fixed ring and order it is the canonical form of its ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool reduced() const { return true; }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit_ideal() const { return elements_.size() == 1 && elements_[0].is_constant(); }
  std::vector<Monomial> leading_monomials() const;

  bool operator==(const GroebnerBasis& other) const { return elements_ == other.elements_; }

 private:
  Ring ring_;
  std::vector<Polynomial> elements_;
};

/// Buchberger's algorithm with the normal selection strategy (smallest
/// weighted lcm degree first) and the Gebauer–Möller pair criteria.
/// Zero generators are ignored; an empty input yields the zero ideal's basis.
GroebnerBasis groebner_basis(std::span<const Polynomial> gens, const Ring& ring);

/// Full remainder of f modulo G. Zero iff f lies in the ideal of G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Full reduction of f by an arbitrary divisor list. Among divisors whose
/// leading monomial divides a term, the one with fewest terms is used, ties
/// going to the earliest in list order.
Polynomial reduce_by(const Polynomial& f, std::span<const Polynomial> divisors);

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

}  // namespace spreadlab
