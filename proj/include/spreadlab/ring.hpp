#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/field.hpp"
#include "spreadlab/monomial.hpp"
#include "spreadlab/order.hpp"

namespace spreadlab {

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// Polynomial ring k[x_1..x_n] over F_p with a monomial order and a positive
/// weight vector. Ideals handed to the local-algebra operations must be
/// homogeneous for the weights; the maximal ideal is (x_1..x_n).
class RingContext {
 public:
  /// Throws ArgumentError on a non-prime p, an empty or oversized variable
  /// list, duplicate names, or non-positive weights. Empty weights = all ones.
  static Ring make(std::uint32_t p, std::vector<std::string> variables,
                   MonomialOrder order = MonomialOrder::grevlex(),
                   std::vector<int> weights = {});

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& variables() const { return names_; }
  const std::string& variable_name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }

  long weighted_degree(const Monomial& m) const { return m.weighted_degree(weights_); }

  bool same_as(const RingContext& other) const;

 private:
  RingContext(PrimeField f, std::vector<std::string> names, MonomialOrder order,
              std::vector<int> weights)
      : field_(f), names_(std::move(names)), order_(std::move(order)), weights_(std::move(weights)) {}

  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<int> weights_;
};

/// Ring with `extra` variables prepended (weights `extra_weights`, default 1)
/// and a block order eliminating them ahead of `base`'s own order.
Ring prepend_elimination_variables(const Ring& base, const std::vector<std::string>& extra,
                                   std::vector<int> extra_weights = {});

/// Same variables and weights as `base`, block order eliminating `mask`.
Ring with_elimination_order(const Ring& base, std::uint32_t mask);

}  // namespace spreadlab
