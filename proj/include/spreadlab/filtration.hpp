#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/ideal.hpp"

namespace spreadlab {

/// A descending multiplicative chain I_0 = (1) ⊇ I_1 ⊇ I_2 ⊇ ... of ideals.
/// Members are materialized on demand and cached; copies share the cache.
class Filtration {
 public:
  enum class Kind { Adic, Symbolic, Truncated, TrivialMaximal };

  /// I_n = I^n.
  static Filtration adic(Ideal base);
  /// I_n = I^n : J^∞, with J = (x_1..x_n) when omitted.
  static Filtration symbolic(Ideal base, std::optional<Ideal> along = std::nullopt);
  /// Generated by explicit I_1..I_a: for n > a, I_n = Σ_{i+j=n} I_i I_j.
  /// Throws ValidationError if the members break the chain or product rule.
  static Filtration truncated(std::vector<Ideal> members);
  /// I_n = (x_1..x_n) for every n ≥ 1.
  static Filtration trivial_maximal(Ring ring);

  Kind kind() const { return state_->kind; }
  const Ring& ring() const { return state_->ring; }
  /// a for the truncated kind, 0 otherwise.
  int truncation_level() const { return static_cast<int>(state_->members.size()); }
  /// The defining ideal of the adic and symbolic kinds.
  const std::optional<Ideal>& base() const { return state_->base; }
  const std::optional<Ideal>& along() const { return state_->along; }

  /// I_n as a canonical ideal (reduced basis generators); n ≥ 0.
  Ideal materialize(int n) const;

  /// The a-th truncation: I_1..I_a of this filtration, extended by products.
  Filtration truncate(int a) const;

  std::string describe() const;

 private:
  struct State {
    Kind kind;
    Ring ring;
    std::optional<Ideal> base;
    std::optional<Ideal> along;
    std::vector<Ideal> members;
    std::mutex mu;
    std::map<int, Ideal> cache;
    std::map<int, Ideal> powers;  // I^n for the symbolic kind
  };

  explicit Filtration(std::shared_ptr<State> s) : state_(std::move(s)) {}
  Ideal compute(int n) const;
  Ideal ordinary_power(int n) const;

  std::shared_ptr<State> state_;
};

/// I^n : J^∞ with J = (x_1..x_n) by default.
/// Throws ArgumentError for n < 1, a unit I, or a zero or unit J.
Ideal symbolic_power(const Ideal& base, int n, std::optional<Ideal> along = std::nullopt);

}  // namespace spreadlab
