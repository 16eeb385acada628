#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spreadlab/filtration.hpp"

namespace spreadlab {

struct ReesGenerator {
  int degree;          ///< n, the filtration level of the generator
  Polynomial element;  ///< f_{n,j} in the base ring
  std::string variable;
};

/// Presentation of R[𝓘_a] = R[f_{n,j} t^n] as k[x, T]/Q and of its fiber
/// k[T]/Q₀ with Q₀ = (Q + (x)) ∩ k[T].
struct ReesPresentation {
  Ring base_ring;
  Ring extended_ring;  ///< t, x, T with t eliminated first
  Ring combined_ring;  ///< x, T with T_{n,j} weighted wdeg(f_{n,j}) + n
  Ring fiber_ring;     ///< T only, T_{n,j} weighted n
  int truncation_level;
  std::vector<ReesGenerator> generators;
  Ideal kernel;        ///< Q ⊂ k[x, T]
  Ideal fiber_kernel;  ///< Q₀ ⊂ k[T]
};

/// Presentation of the a-th truncation of F. Generators of each I_n (n ≤ a)
/// are the reduced-basis elements of I_n that are minimal modulo
/// Σ_{i+j=n} I_i I_j, taken in ascending order.
/// Throws ValidationError for inhomogeneous members and ArgumentError when
/// I_1 is zero or the unit ideal, or the combined ring would exceed 32 variables.
ReesPresentation rees_presentation(const Filtration& filtration, int a);

/// Image of q ∈ k[x, T] under T_{n,j} ↦ f_{n,j} t^n, in the extended ring.
Polynomial rees_evaluate(const ReesPresentation& pres, const Polynomial& q);

struct SpreadReport {
  int ell;
  int height;
  int num_vars;
  bool bounds_ok;  ///< ht ≤ ell ≤ n
  ReesPresentation presentation;
  /// Truncated reports: least e ≤ witness_bound with ℓ(I_{a,e}) = ell.
  std::optional<int> witness;
  int witness_bound = 0;
  std::vector<std::string> notes;
};

/// ℓ(I) = dim k[T]/Q₀ for the adic presentation.
/// Throws ArgumentError for the zero or unit ideal, ValidationError if I is
/// not weighted-homogeneous.
SpreadReport analytic_spread(const Ideal& ideal);

/// ℓ(𝓘_a) plus a search for e ≤ witness_bound (default 3a) with ℓ(I_{a,e}) = ℓ(𝓘_a).
SpreadReport analytic_spread_truncated(const Filtration& filtration, int a, int witness_bound = 0);

struct EquimultipleResult {
  bool equimultiple;
  int height;
  int ell;
};

EquimultipleResult equimultiple_check(const Ideal& ideal);

/// Least m ≤ max_power with f^m ∈ (x_1..x_n)·I_{mn}.
/// Throws PreconditionError if f ∉ I_n, ArgumentError for n < 1 or max_power < 1.
std::optional<int> sp0_witness(const Filtration& filtration, int n, const Polynomial& f, int max_power);

struct TruncationProbe {
  int a;
  bool stabilized;                      ///< I^(n) = I_{a,n} for all n ≤ N
  std::optional<int> first_mismatch;    ///< least n where they differ
  int ell;                              ///< ℓ(𝓘_a)
  std::optional<int> witness;           ///< e with ℓ(I_{a,e}) = ℓ(𝓘_a)
  int witness_bound;
};

struct SymbolicSpread {
  int n;
  int ell;          ///< ℓ(I^(n))
  bool below_dim;   ///< ℓ(I^(n)) < dim R
};

struct FingenReport {
  int max_level;   ///< A
  int max_degree;  ///< N
  int num_vars;
  int height;
  std::vector<TruncationProbe> truncations;
  std::optional<int> generation_degree;  ///< least stabilized a
  bool some_ell_below_dim;
  bool all_ell_equal_dim;
  std::vector<SymbolicSpread> symbolic_spreads;
  std::string label;
};

/// Finite-generation evidence for ⊕ I^n : J^∞ up to the given bounds.
/// Throws ArgumentError unless 1 ≤ A ≤ N.
FingenReport fingen_probe(const Ideal& ideal, const Ideal& along, int max_level, int max_degree);

}  // namespace spreadlab
