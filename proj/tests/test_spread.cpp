#include <doctest.h>

#include "oracles/oracles.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/spread.hpp"
#include "support.hpp"

using namespace spreadlab;
using namespace testing_support;

namespace {

const char* kCurve = "y^2 - x*z, x^3 - y*z, x^2*y - z^2";

Ring curve_ring() { return ring3(MonomialOrder::weighted_grevlex({3, 4, 5}), {3, 4, 5}); }

// T variable of the k-th generator in the combined ring
Polynomial T(const ReesPresentation& pres, std::size_t k) {
  return Polynomial::variable(pres.combined_ring, pres.base_ring->num_vars() + k);
}
Polynomial X(const ReesPresentation& pres, std::size_t i) { return Polynomial::variable(pres.combined_ring, i); }

void check_presentation(const ReesPresentation& pres) {
  for (const auto& q : pres.kernel.groebner().elements()) CHECK(rees_evaluate(pres, q).is_zero());
  CHECK(ideal_equal(pres.fiber_kernel, oracle::fiber_kernel_by_substitution(pres)));
  CHECK(pres.kernel.is_weighted_homogeneous());
  CHECK(pres.fiber_kernel.is_weighted_homogeneous());
  // R[I] is a domain over a domain here, of dimension dim R + 1
  CHECK(krull_dim(pres.kernel) == static_cast<int>(pres.base_ring->num_vars()) + 1);
}

}  // namespace

TEST_CASE("presentation of (x, y)") {
  auto r = RingContext::make(32003, {"x", "y"});
  auto pres = rees_presentation(Filtration::adic(ideal_of(r, "x, y")), 1);
  REQUIRE(pres.generators.size() == 2);
  std::size_t kx = pres.generators[0].element == poly(r, "x") ? 0 : 1, ky = 1 - kx;
  Polynomial expected = X(pres, 0) * T(pres, ky) - X(pres, 1) * T(pres, kx);
  CHECK(ideal_equal(pres.kernel, Ideal(pres.combined_ring, {expected})));
  CHECK(pres.fiber_kernel.is_zero());
  check_presentation(pres);
}

TEST_CASE("presentation of a principal ideal is free") {
  auto r = ring3();
  auto pres = rees_presentation(Filtration::adic(ideal_of(r, "x^2 + y*z")), 1);
  CHECK(pres.kernel.is_zero());
  check_presentation(pres);
}

TEST_CASE("presentation of (x, y, z) has the Koszul relations") {
  auto r = ring3();
  auto pres = rees_presentation(Filtration::adic(Ideal::maximal(r)), 1);
  REQUIRE(pres.generators.size() == 3);
  // x_i T_j - x_j T_i where T_k ↦ the k-th generator
  std::vector<Polynomial> koszul;
  auto image_var = [&](std::size_t k) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (pres.generators[k].element == Polynomial::variable(r, i)) return X(pres, i);
    }
    FAIL("generator is not a variable");
    return X(pres, 0);
  };
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) koszul.push_back(image_var(a) * T(pres, b) - image_var(b) * T(pres, a));
  }
  CHECK(ideal_equal(pres.kernel, Ideal(pres.combined_ring, koszul)));
  check_presentation(pres);
}

TEST_CASE("analytic spread examples") {
  auto r = ring3();
  auto rep = analytic_spread(ideal_of(r, "x, y"));
  CHECK(rep.ell == 2);
  CHECK(rep.height == 2);
  CHECK(rep.bounds_ok);
  CHECK(analytic_spread(ideal_of(r, "x, y, z")).ell == 3);
  auto mono = analytic_spread(ideal_of(r, "x^2, y^3, z^5"));
  CHECK(mono.ell == 3);
  check_presentation(mono.presentation);
  auto c = curve_ring();
  auto curve = analytic_spread(ideal_of(c, kCurve));
  CHECK(curve.ell == 3);
  check_presentation(curve.presentation);
}

TEST_CASE("analytic spread input validation") {
  auto r = ring3();
  CHECK_THROWS_AS(analytic_spread(Ideal::zero(r)), ArgumentError);
  CHECK_THROWS_AS(analytic_spread(Ideal::unit(r)), ArgumentError);
  CHECK_THROWS_AS(analytic_spread(ideal_of(r, "x + y^2")), ValidationError);
}

TEST_CASE("equimultiplicity examples") {
  auto r = ring3();
  auto a = equimultiple_check(ideal_of(r, "x, y"));
  CHECK(a.equimultiple);
  CHECK(a.height == 2);
  CHECK(a.ell == 2);
  auto b = equimultiple_check(ideal_of(r, "x^2, x*y"));
  CHECK_FALSE(b.equimultiple);
  CHECK(b.height == 1);
  CHECK(b.ell == 2);
  auto c = equimultiple_check(ideal_of(r, "x^3, y^2, z^4, x*y*z"));
  CHECK(c.equimultiple);
  CHECK(c.ell == 3);
}

TEST_CASE("spread bounds on random weighted-homogeneous ideals") {
  std::mt19937_64 rng(31);
  auto r = ring3(MonomialOrder::weighted_grevlex({1, 2, 3}), {1, 2, 3});
  int checked = 0;
  while (checked < 12) {
    std::vector<Polynomial> gens;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) gens.push_back(random_homogeneous(rng, r, 2 + static_cast<long>(rng() % 3), 2));
    Ideal I(r, gens);
    if (I.is_zero() || I.is_unit()) continue;
    auto rep = analytic_spread(I);
    CHECK(rep.bounds_ok);
    CHECK(rep.height <= rep.ell);
    CHECK(rep.ell <= 3);
    check_presentation(rep.presentation);
    ++checked;
  }
}

TEST_CASE("truncated spread examples") {
  auto r = ring3();
  Filtration S = Filtration::symbolic(ideal_of(r, "x, y"));
  for (int a = 1; a <= 3; ++a) CHECK(analytic_spread_truncated(S, a).ell == 2);
  Ideal q = ideal_of(r, "x^2, x*y");
  CHECK(analytic_spread_truncated(Filtration::adic(q), 1).ell == analytic_spread(q).ell);
  Filtration trivial = Filtration::trivial_maximal(r);
  for (int a = 1; a <= 3; ++a) {
    auto rep = analytic_spread_truncated(trivial, a);
    CHECK(rep.ell == 3);
    CHECK(rep.bounds_ok);
    CHECK(rep.witness.has_value());
  }
  CHECK_THROWS_AS(analytic_spread_truncated(trivial, 0), ArgumentError);
}

TEST_CASE("truncated presentations satisfy the kernel invariants") {
  auto c = curve_ring();
  Filtration S = Filtration::symbolic(ideal_of(c, kCurve));
  for (int a = 1; a <= 2; ++a) check_presentation(rees_presentation(S, a));
}

TEST_CASE("sp0 witnesses") {
  auto r = ring3();
  Filtration trivial = Filtration::trivial_maximal(r);
  CHECK(sp0_witness(trivial, 1, poly(r, "x"), 4) == 2);
  Filtration adic = Filtration::adic(ideal_of(r, "x, y"));
  for (int M = 1; M <= 4; ++M) CHECK_FALSE(sp0_witness(adic, 1, poly(r, "x"), M).has_value());
  CHECK(sp0_witness(adic, 1, Polynomial(r), 3) == 1);
  CHECK_THROWS_AS(sp0_witness(adic, 1, poly(r, "z"), 3), PreconditionError);
  CHECK_THROWS_AS(sp0_witness(adic, 1, poly(r, "x"), 0), ArgumentError);
}

TEST_CASE("fingen probe on a regular prime") {
  auto r = ring3();
  auto rep = fingen_probe(ideal_of(r, "x, y"), Ideal::maximal(r), 2, 4);
  CHECK(rep.generation_degree == 1);
  for (const auto& t : rep.truncations) {
    CHECK(t.stabilized);
    CHECK(t.ell == 2);
  }
  CHECK(rep.some_ell_below_dim);
  CHECK_FALSE(rep.all_ell_equal_dim);
  CHECK(rep.label == "evidence up to bound a = 2, n = 4");
  CHECK_THROWS_AS(fingen_probe(ideal_of(r, "x, y"), Ideal::maximal(r), 0, 3), ArgumentError);
  CHECK_THROWS_AS(fingen_probe(ideal_of(r, "x, y"), Ideal::maximal(r), 3, 2), ArgumentError);
}

TEST_CASE("fingen probe on the space curve") {
  auto c = curve_ring();
  auto rep = fingen_probe(ideal_of(c, kCurve), Ideal::maximal(c), 3, 6);
  REQUIRE(rep.truncations.size() == 3);
  CHECK_FALSE(rep.truncations[0].stabilized);
  CHECK(rep.truncations[0].ell == 3);
  CHECK(rep.truncations[1].stabilized);
  CHECK(rep.truncations[2].stabilized);
  CHECK(rep.truncations[1].ell == 2);
  CHECK(rep.truncations[2].ell == 2);
  CHECK(rep.generation_degree == 2);
  CHECK(rep.some_ell_below_dim);
  REQUIRE(rep.symbolic_spreads.size() == 3);
  CHECK(rep.symbolic_spreads[0].ell == 3);
  CHECK(rep.symbolic_spreads[1].ell == 2);
  CHECK(rep.symbolic_spreads[2].ell == 3);
  for (const auto& t : rep.truncations) {
    CHECK(rep.height <= t.ell);
    CHECK(t.ell <= 3);
  }
}

TEST_CASE("trivial filtration truncations never drop below dim") {
  auto r = ring3();
  Ideal m = Ideal::maximal(r);
  for (int a = 1; a <= 3; ++a) {
    Filtration F = Filtration::truncated(std::vector<Ideal>(a, m));
    CHECK(analytic_spread_truncated(F, a).ell == 3);
  }
}
