#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "spreadlab/monomial.hpp"

namespace spreadlab {

/// A global monomial order. compare() returns -1, 0 or 1.
///
/// Block orders compare the eliminated part first (by degree, then reverse
/// lexicographically over the eliminated variables), so any monomial that
/// involves an eliminated variable ranks above every monomial free of them;
/// ties fall through to the inner order.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, WeightedGrevlex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder weighted_grevlex(std::vector<int> weights);
  static MonomialOrder block(std::uint32_t eliminated_mask, MonomialOrder inner);

  Kind kind() const { return kind_; }
  const std::vector<int>& weights() const { return weights_; }
  std::uint32_t eliminated_mask() const { return elim_mask_; }
  const MonomialOrder* inner() const { return inner_.get(); }

  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Grevlex: return compare_grevlex(a, b);
      case Kind::Lex: return compare_lex(a, b);
      case Kind::WeightedGrevlex: return compare_weighted(a, b);
      case Kind::Block: return compare_block(a, b);
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Session-file name: grevlex, lex, wgrevlex, or block(...) for internal orders.
  std::string name() const;

  bool operator==(const MonomialOrder& other) const;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  using Weights = std::array<std::int32_t, kMaxVariables>;

  static std::int32_t dot(const Monomial& a, const Weights& w) {
    std::int32_t d = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) d += w[i] * static_cast<std::int32_t>(a[i]);
    return d;
  }
  static int compare_revlex_tail(const Monomial& a, const Monomial& b) {
    for (std::size_t i = kMaxVariables; i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  static int compare_grevlex(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    return compare_revlex_tail(a, b);
  }
  static int compare_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  int compare_weighted(const Monomial& a, const Monomial& b) const {
    std::int32_t da = dot(a, wpad_), db = dot(b, wpad_);
    if (da != db) return da > db ? 1 : -1;
    return compare_revlex_tail(a, b);
  }
  int compare_block(const Monomial& a, const Monomial& b) const {
    std::int32_t da = dot(a, wpad_), db = dot(b, wpad_);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = 0; k < num_elim_; ++k) {
      std::size_t i = elim_desc_[k];
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return inner_->compare(a, b);
  }

  Kind kind_;
  std::vector<int> weights_;
  std::uint32_t elim_mask_ = 0;
  Weights wpad_{};  // weights, or the 0/1 indicator of the eliminated block
  std::array<std::uint8_t, kMaxVariables> elim_desc_{};
  std::size_t num_elim_ = 0;
  std::shared_ptr<const MonomialOrder> inner_;
};

}  // namespace spreadlab
