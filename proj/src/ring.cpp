#include "spreadlab/ring.hpp"

#include <algorithm>
#include <set>

#include "spreadlab/errors.hpp"

namespace spreadlab {

Ring RingContext::make(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order,
                       std::vector<int> weights) {
  PrimeField field(p);
  if (variables.empty()) throw ArgumentError("ring needs at least one variable");
  if (variables.size() > kMaxVariables) {
    throw ArgumentError("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty() || !seen.insert(v).second) {
      throw ArgumentError("duplicate or empty variable name '" + v + "'");
    }
  }
  if (weights.empty()) weights.assign(variables.size(), 1);
  if (weights.size() != variables.size()) {
    throw ArgumentError("weight vector length does not match the variable count");
  }
  if (std::any_of(weights.begin(), weights.end(), [](int w) { return w <= 0; })) {
    throw ArgumentError("weights must be strictly positive");
  }
  if (order.kind() == MonomialOrder::Kind::WeightedGrevlex && order.weights().empty()) {
    order = MonomialOrder::weighted_grevlex(weights);
  }
  return Ring(new RingContext(field, std::move(variables), std::move(order), std::move(weights)));
}

std::optional<std::size_t> RingContext::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool RingContext::same_as(const RingContext& other) const {
  return this == &other || (field_ == other.field_ && names_ == other.names_ &&
                            order_ == other.order_ && weights_ == other.weights_);
}

namespace {

// Re-express `order` for a ring whose variables are shifted right by `shift`.
MonomialOrder shifted(const MonomialOrder& order, std::size_t shift, std::size_t extra_count,
                      const std::vector<int>& extra_weights) {
  switch (order.kind()) {
    case MonomialOrder::Kind::Grevlex: return MonomialOrder::grevlex();
    case MonomialOrder::Kind::Lex: return MonomialOrder::lex();
    case MonomialOrder::Kind::WeightedGrevlex: {
      std::vector<int> w(extra_weights.begin(), extra_weights.begin() + extra_count);
      w.insert(w.end(), order.weights().begin(), order.weights().end());
      return MonomialOrder::weighted_grevlex(std::move(w));
    }
    case MonomialOrder::Kind::Block:
      return MonomialOrder::block(order.eliminated_mask() << shift,
                                  shifted(*order.inner(), shift, extra_count, extra_weights));
  }
  return MonomialOrder::grevlex();
}

}  // namespace

Ring prepend_elimination_variables(const Ring& base, const std::vector<std::string>& extra,
                                   std::vector<int> extra_weights) {
  if (extra.empty()) throw ArgumentError("no variables to prepend");
  if (extra_weights.empty()) extra_weights.assign(extra.size(), 1);
  std::vector<std::string> names = extra;
  names.insert(names.end(), base->variables().begin(), base->variables().end());
  std::vector<int> weights = extra_weights;
  weights.insert(weights.end(), base->weights().begin(), base->weights().end());
  std::uint32_t mask = (extra.size() >= 32) ? ~0u : ((1u << extra.size()) - 1);
  auto inner = shifted(base->order(), extra.size(), extra.size(), extra_weights);
  return RingContext::make(base->characteristic(), std::move(names),
                           MonomialOrder::block(mask, std::move(inner)), std::move(weights));
}

Ring with_elimination_order(const Ring& base, std::uint32_t mask) {
  return RingContext::make(base->characteristic(), base->variables(),
                           MonomialOrder::block(mask, base->order()), base->weights());
}

}  // namespace spreadlab
