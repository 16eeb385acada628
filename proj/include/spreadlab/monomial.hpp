#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace spreadlab {

inline constexpr std::size_t kMaxVariables = 32;

using Exponent = std::uint16_t;

/// Exponent vector. Slots beyond the ring's variable count stay zero, so
/// arithmetic and comparisons never need to know the variable count.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(std::size_t index, int power = 1) {
    Monomial m;
    m.e_[index] = static_cast<Exponent>(power);
    return m;
  }

  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }

  int total_degree() const {
    int d = 0;
    for (Exponent x : e_) d += x;
    return d;
  }
  long weighted_degree(std::span<const int> weights) const {
    long d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += static_cast<long>(weights[i]) * e_[i];
    return d;
  }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
  }

  /// True iff *this divides other.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (e_[i] != 0) mask |= (1u << i);
    }
    return mask;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = static_cast<Exponent>(e_[i] + o.e_[i]);
    return r;
  }
  /// Caller guarantees divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = static_cast<Exponent>(e_[i] - divisor.e_[i]);
    return r;
  }
  Monomial pow(int k) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = static_cast<Exponent>(e_[i] * k);
    return r;
  }

  bool operator==(const Monomial&) const = default;

  const std::array<Exponent, kMaxVariables>& exponents() const { return e_; }

 private:
  std::array<Exponent, kMaxVariables> e_{};
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  return (a.support() & b.support()) == 0;
}

inline Monomial Monomial::from_exponents(std::span<const int> exps) {
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.e_[i] = static_cast<Exponent>(exps[i]);
  return m;
}

}  // namespace spreadlab
