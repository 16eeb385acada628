#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spreadlab/field.hpp"
#include "spreadlab/monomial.hpp"
#include "spreadlab/ring.hpp"

namespace spreadlab {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial over a ring context. Terms are strictly descending in the
/// ring's order with nonzero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  /// Trusted constructor: terms already strictly descending, nonzero.
  static Polynomial from_sorted_terms(Ring ring, std::vector<Term> terms) {
    Polynomial out(std::move(ring));
    out.terms_ = std::move(terms);
    return out;
  }
  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, const Monomial& m, Coeff c = 1);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Leading term accessors; the polynomial must be nonzero.
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;
  Polynomial pow(int k) const;
  /// Divide by the leading coefficient (zero stays zero).
  Polynomial monic() const;

  /// this - c * m * g, computed by a single merge.
  Polynomial minus_term_times(Coeff c, const Monomial& m, const Polynomial& g) const;

  /// Common weighted degree of all terms under the ring weights, or nullopt.
  /// Throws DegenerateInputError for the zero polynomial.
  std::optional<long> weighted_degree() const { return weighted_degree(ring_->weights()); }
  std::optional<long> weighted_degree(std::span<const int> weights) const;

  int total_degree() const;
  std::uint32_t support() const;

  Coeff evaluate(std::span<const Coeff> point) const;
  /// Rewrites into `target`, sending variable i to target variable var_map[i].
  Polynomial mapped(const Ring& target, std::span<const std::size_t> var_map) const;

  /// Text form, e.g. "y^2 - x*z"; coefficients printed symmetrically.
  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  void check_ring(const Polynomial& g) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// Formal partial derivative with respect to variable `index`.
Polynomial derivative(const Polynomial& f, std::size_t index);

/// Homogeneity test under an explicit weight vector.
/// Throws DegenerateInputError if f is zero.
std::optional<long> weighted_degree_check(const Polynomial& f, std::span<const int> weights);

}  // namespace spreadlab
