#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "spreadlab/groebner.hpp"
#include "spreadlab/polynomial.hpp"

namespace spreadlab {

/// Ideal given by generators, with a lazily computed reduced Gröbner basis.
/// Copies share the cached basis; the cache is filled at most once.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> gens);

  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(Ring ring);
  /// (x_1, ..., x_n)
  static Ideal maximal(Ring ring);
  static Ideal from_basis(const GroebnerBasis& gb);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis& groebner() const;

  bool is_zero() const { return groebner().is_zero_ideal(); }
  bool is_unit() const { return groebner().is_unit_ideal(); }
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_monomial() const;
  /// Every nonzero generator homogeneous for the ring weights.
  bool is_weighted_homogeneous() const;

  /// Minimal homogeneous generating set, picked greedily from the reduced
  /// basis in ascending weighted degree. Requires weighted-homogeneous input.
  std::vector<Polynomial> minimal_generators() const;
  /// Elements of the reduced basis that, together with `base`, minimally
  /// generate this ideal (the same greedy rule, working modulo `base`).
  std::vector<Polynomial> minimal_generators_modulo(const Ideal& base) const;

  /// Same ideal, generators replaced by the reduced basis.
  Ideal canonical() const { return from_basis(groebner()); }

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
  };

  void check_ring(const Ideal& other) const;

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Equality via reduced bases.
bool ideal_equal(const Ideal& a, const Ideal& b);

enum class CombineOp { Sum, Product, Power };

/// Generator-level sum / product / power(k). For Power the second operand is
/// ignored; power(0) is the unit ideal.
Ideal ideal_combine(const Ideal& a, const Ideal& b, CombineOp op, int k = 0);
Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, int k);

/// A ∩ B via t·A + (1 - t)·B and elimination of t.
Ideal intersect(const Ideal& a, const Ideal& b);

/// A : B = ∩ A : (b_i), each from A ∩ (b_i) divided by b_i.
Ideal quotient(const Ideal& a, const Ideal& b);

struct Saturation {
  Ideal ideal;
  int index;  ///< least k with A:B^k = A:B^(k+1)
};

/// A : B^∞ by iterating the colon until it stabilizes.
Saturation saturate(const Ideal& a, const Ideal& b);

/// A ∩ k[remaining variables], returned in A's ring.
Ideal eliminate(const Ideal& a, std::span<const std::size_t> variables);

/// Krull dimension of ring/A from the leading-term ideal; -1 for the unit ideal.
int krull_dim(const Ideal& a);

/// n - krull_dim(A) for proper nonzero A.
int height(const Ideal& a);

/// True iff (x_1..x_n) is an associated prime of ring/A.
bool is_max_ideal_associated(const Ideal& a);

/// Integral closure of a monomial ideal: lattice points of its Newton polyhedron.
Ideal monomial_integral_closure(const Ideal& a);

/// Largest independent set of variables modulo a monomial ideal, given the
/// support masks of its generators. Exposed for testing.
int max_independent_set_size(std::span<const std::uint32_t> supports, std::size_t num_vars);

/// Exact membership of a lattice point in conv(points) + R^n_{>=0}.
bool in_newton_polyhedron(std::span<const std::vector<int>> points, std::span<const int> target);

/// Exact quotient f / g; throws ArgumentError if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace spreadlab
