#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spreadlab/field.hpp"
#include "spreadlab/linalg.hpp"

namespace spreadlab {

/// Number of ternary monomials of degree d.
inline std::size_t num_monomials(int d) {
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 2) / 2;
}

/// Position of x^i y^j z^(d-i-j) among degree-d monomials, ordered by
/// descending i then descending j.
inline std::size_t monomial_index(int d, int i, int j) {
  return static_cast<std::size_t>((d - i) * (d - i + 1) / 2 + (d - i - j));
}

/// Dense ternary form of a fixed degree.
struct TernaryForm {
  int degree = 0;
  Vec coeffs;  ///< num_monomials(degree) entries

  bool is_zero() const;
  bool operator==(const TernaryForm&) const = default;
};

TernaryForm multiply(const TernaryForm& a, const TernaryForm& b, const PrimeField& field);
/// x_k · f for k in {0, 1, 2}.
TernaryForm times_variable(const TernaryForm& f, int k);
Coeff evaluate(const TernaryForm& f, const std::array<Coeff, 3>& point, const PrimeField& field);

/// Deterministic uniform draws in [0, p) from a 64-bit Mersenne twister
/// (rejection sampling, so results do not depend on the standard library's
/// distribution implementations).
class FieldSampler {
 public:
  FieldSampler(std::uint64_t seed, std::uint32_t p) : engine_(seed), p_(p) {}
  Coeff next();

 private:
  std::mt19937_64 engine_;
  std::uint32_t p_;
};

enum class Constraint { None, Elliptic };

/// Projective points of P^2 over F_p with multiplicities. Representatives are
/// normalized so the first nonzero coordinate is 1.
struct FatPointScheme {
  std::uint32_t p = kDefaultPrime;
  std::vector<std::array<Coeff, 3>> points;
  std::vector<int> multiplicities;
  Constraint constraint = Constraint::None;
  std::optional<TernaryForm> cubic;  ///< the smooth cubic G in elliptic mode
  std::uint64_t seed = 0;

  PrimeField field() const { return PrimeField(p); }
  std::size_t size() const { return points.size(); }
};

/// r points (uniform multiplicity if `mult` has one entry, else one per
/// point), pseudo-generic in the plane or on a random smooth cubic.
/// Throws SeedError if the field is too small for r distinct points or no
/// smooth cubic is found; ArgumentError on bad sizes or multiplicities.
FatPointScheme sample_scheme(std::size_t r, std::vector<int> mult, Constraint constraint,
                             std::uint64_t seed, std::uint32_t p = kDefaultPrime);

/// Same points with every multiplicity multiplied by `factor`.
FatPointScheme scaled_scheme(const FatPointScheme& scheme, int factor);

/// True iff G has no singular point in P^2 (G, G_x, G_y, G_z only vanish at 0).
bool is_smooth_cubic(const TernaryForm& g, std::uint32_t p);

/// Degree-d forms vanishing to order ≥ m_i at each point.
struct LinearSystem {
  int degree;
  std::size_t monomials;   ///< C(d+2, 2)
  std::size_t conditions;  ///< number of condition rows
  std::size_t rank;        ///< rank of the condition matrix
  std::vector<TernaryForm> basis;
  std::size_t h0() const { return basis.size(); }
};

/// Condition matrix: for each point, coefficients of the local monomials of
/// degree < m after moving the point to the origin of an affine chart.
DenseMatrix condition_matrix(const FatPointScheme& scheme, int d);

LinearSystem h0(const FatPointScheme& scheme, int d, Backend backend = Backend::Parallel);

/// Least d ≤ max_degree with a nonzero degree-d form of the system, if any.
std::optional<int> first_section_degree(const FatPointScheme& scheme, int max_degree,
                                        Backend backend = Backend::Parallel);

struct MultMapResult {
  bool surjective;
  std::size_t image_dim;
  std::size_t target_dim;
};

/// Is H^0(O(1)) ⊗ L_{d-1} → L_d onto, for the scheme's multiplicities?
MultMapResult mult_map_surjective(const FatPointScheme& scheme, int d, Backend backend = Backend::Parallel);

struct ContainmentRow {
  int degree;                 ///< D
  std::size_t product_dim;    ///< dim of the s-fold product span in degree D
  std::size_t target_dim;     ///< dim of m·(sn-system)_{D-1}
  std::size_t ambient_dim;    ///< dim of (sn-system)_D
  bool contained;
};

struct ContainmentReport {
  int n;
  int s;
  int max_degree;
  std::vector<ContainmentRow> rows;   ///< degrees with a nonzero product span
  bool empty;                         ///< no products up to max_degree
  bool holds;                         ///< contained in every listed degree (elliptic: except 3sn)
  /// Elliptic only: the degree-3sn products survive because the target is zero.
  std::optional<bool> bottom_exception;
  std::vector<int> failing_degrees;
};

/// (n-system)^s ⊆ m·(sn-system), degree by degree up to max_degree.
ContainmentReport graded_power_containment(const FatPointScheme& scheme, int n, int s, int max_degree,
                                           Backend backend = Backend::Parallel);

struct CensusPiece {
  int n;
  int degree;
  std::size_t piece_dim;  ///< h0 of the n-system in this degree
  bool dies;              ///< every h in the piece has h^s ∈ m·(sn-system)
};

struct CensusReport {
  int max_n;
  int max_degree;
  int s;
  std::vector<CensusPiece> pieces;  ///< nonzero pieces only
  std::size_t survivors() const;
};

/// Which nonzero pieces of the n-systems (n ≤ max_n, degree ≤ max_degree)
/// have s-th powers landing in m·(sn-system).
CensusReport fiber_generator_census(const FatPointScheme& scheme, int max_n, int max_degree, int s = 4,
                                    Backend backend = Backend::Parallel);

}  // namespace spreadlab
