#pragma once

#include <random>
#include <string>
#include <vector>

#include "spreadlab/ideal.hpp"
#include "spreadlab/parse.hpp"

namespace testing_support {

using namespace spreadlab;

inline Ring ring3(MonomialOrder order = MonomialOrder::grevlex(), std::vector<int> weights = {}) {
  return RingContext::make(kDefaultPrime, {"x", "y", "z"}, std::move(order), std::move(weights));
}

inline Ideal ideal_of(const Ring& r, const std::string& text) { return Ideal(r, parse_polynomial_list(text, r)); }

inline Polynomial poly(const Ring& r, const std::string& text) { return parse_polynomial(text, r); }

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
  Monomial m;
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Exponent>(rng() % (max_exp + 1));
  return m;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const Ring& r, int terms, int max_exp) {
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    ts.push_back({random_monomial(rng, r->num_vars(), max_exp), static_cast<Coeff>(1 + rng() % (r->characteristic() - 1))});
  }
  return Polynomial::from_terms(r, ts);
}

// Homogeneous for the ring weights: every term has weighted degree d.
inline Polynomial random_homogeneous(std::mt19937_64& rng, const Ring& r, long d, int terms) {
  std::vector<Monomial> all;
  std::size_t n = r->num_vars();
  Monomial m;
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i == n) {
      if (left == 0) all.push_back(m);
      return;
    }
    for (long e = 0; e * r->weights()[i] <= left; ++e) {
      m[i] = static_cast<Exponent>(e);
      self(self, i + 1, left - e * r->weights()[i]);
    }
    m[i] = 0;
  };
  rec(rec, 0, d);
  std::vector<Term> ts;
  if (all.empty()) return Polynomial(r);
  for (int i = 0; i < terms; ++i) {
    ts.push_back({all[rng() % all.size()], static_cast<Coeff>(1 + rng() % (r->characteristic() - 1))});
  }
  return Polynomial::from_terms(r, ts);
}

}  // namespace testing_support
