#include "spreadlab/order.hpp"

#include "spreadlab/errors.hpp"

namespace spreadlab {

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<int> weights) {
  for (int w : weights) {
    if (w <= 0) throw ArgumentError("weighted order needs strictly positive weights");
  }
  if (weights.size() > kMaxVariables) throw ArgumentError("too many weights");
  MonomialOrder o(Kind::WeightedGrevlex);
  for (std::size_t i = 0; i < weights.size(); ++i) o.wpad_[i] = weights[i];
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::block(std::uint32_t eliminated_mask, MonomialOrder inner) {
  if (eliminated_mask == 0) throw ArgumentError("block order with nothing to eliminate");
  MonomialOrder o(Kind::Block);
  o.elim_mask_ = eliminated_mask;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (eliminated_mask & (1u << i)) {
      o.wpad_[i] = 1;
      o.elim_desc_[o.num_elim_++] = static_cast<std::uint8_t>(i);
    }
  }
  o.inner_ = std::make_shared<const MonomialOrder>(std::move(inner));
  return o;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::WeightedGrevlex: return "wgrevlex";
    case Kind::Block: return "block(" + std::to_string(elim_mask_) + "," + inner_->name() + ")";
  }
  return "?";
}

bool MonomialOrder::operator==(const MonomialOrder& other) const {
  if (kind_ != other.kind_ || weights_ != other.weights_ || elim_mask_ != other.elim_mask_) {
    return false;
  }
  if (kind_ == Kind::Block) return *inner_ == *other.inner_;
  return true;
}

}  // namespace spreadlab
