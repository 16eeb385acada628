#pragma once

#include <cstdint>

namespace spreadlab {

/// Residue in [0, p). The owning ring context supplies p.
using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
 public:
  /// Throws ArgumentError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a*b + c
  Coeff fma(Coeff a, Coeff b, Coeff c) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b + c) % p_);
  }

  /// Multiplicative inverse; throws DegenerateInputError on zero.
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const;

  /// Reduce an arbitrary signed integer into [0, p).
  Coeff from_int(std::int64_t v) const;
  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t symmetric(Coeff a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace spreadlab
