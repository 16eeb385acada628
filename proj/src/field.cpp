#include "spreadlab/field.hpp"

#include <string>

#include "spreadlab/errors.hpp"

namespace spreadlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw ArgumentError("characteristic " + std::to_string(p) +
                        " is not a prime below 2^31");
  }
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  Coeff base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw DegenerateInputError("inverse of zero in F_p");
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

Coeff PrimeField::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Coeff>(m);
}

std::int64_t PrimeField::symmetric(Coeff a) const {
  if (a > p_ / 2) return static_cast<std::int64_t>(a) - p_;
  return a;
}

}  // namespace spreadlab
