#include <doctest.h>

#include <set>

#include "oracles/oracles.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/fatpoints.hpp"

using namespace spreadlab;

namespace {

std::size_t binom2(int k) { return static_cast<std::size_t>(k) * (k + 1) / 2; }  // C(k+1, 2)

std::size_t expected_h0(int d, const std::vector<int>& mult, std::size_t r) {
  std::size_t conditions = 0;
  for (std::size_t i = 0; i < r; ++i) conditions += binom2(mult.size() == 1 ? mult[0] : mult[i]);
  std::size_t mons = num_monomials(d);
  return mons > conditions ? mons - conditions : 0;
}

void check_basis_sound(const FatPointScheme& s, const LinearSystem& L, std::uint64_t seed) {
  FieldSampler dirs(seed, s.p);
  auto field = s.field();
  for (const auto& f : L.basis) {
    CHECK_FALSE(f.is_zero());
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::array<Coeff, 3> dir{dirs.next(), dirs.next(), dirs.next()};
      CHECK(oracle::order_along_line(f, s.points[i], dir, field) >= s.multiplicities[i]);
    }
  }
}

}  // namespace

TEST_CASE("sampling") {
  auto s = sample_scheme(16, {1}, Constraint::None, 42);
  CHECK(s.size() == 16);
  std::set<std::array<Coeff, 3>> distinct(s.points.begin(), s.points.end());
  CHECK(distinct.size() == 16);
  for (const auto& pt : s.points) {
    std::size_t lead = pt[0] != 0 ? 0 : pt[1] != 0 ? 1 : 2;
    CHECK(pt[lead] == 1);
  }

  auto e = sample_scheme(12, {1}, Constraint::Elliptic, 7);
  REQUIRE(e.cubic.has_value());
  CHECK(is_smooth_cubic(*e.cubic, e.p));
  for (const auto& pt : e.points) CHECK(evaluate(*e.cubic, pt, e.field()) == 0);
  std::set<std::array<Coeff, 3>> on_curve(e.points.begin(), e.points.end());
  CHECK(on_curve.size() == 12);

  CHECK_THROWS_AS(sample_scheme(100, {1}, Constraint::None, 1, 5), SeedError);
  CHECK_THROWS_AS(sample_scheme(3, {1, 2}, Constraint::None, 1), ArgumentError);
}

TEST_CASE("smoothness test") {
  PrimeField f(32003);
  // x^3 + y^3 + z^3 is smooth away from characteristic 3; x^3 + y^2 z is a cusp
  TernaryForm fermat{3, Vec(10, 0)}, cusp{3, Vec(10, 0)};
  fermat.coeffs[monomial_index(3, 3, 0)] = 1;
  fermat.coeffs[monomial_index(3, 0, 3)] = 1;
  fermat.coeffs[monomial_index(3, 0, 0)] = 1;
  cusp.coeffs[monomial_index(3, 3, 0)] = 1;
  cusp.coeffs[monomial_index(3, 0, 2)] = 1;
  CHECK(is_smooth_cubic(fermat, 32003));
  CHECK_FALSE(is_smooth_cubic(cusp, 32003));
}

TEST_CASE("determinism") {
  auto a = sample_scheme(12, {2}, Constraint::Elliptic, 2024);
  auto b = sample_scheme(12, {2}, Constraint::Elliptic, 2024);
  CHECK(a.points == b.points);
  CHECK(a.cubic == b.cubic);
  CHECK(condition_matrix(a, 7) == condition_matrix(b, 7));
  CHECK(h0(a, 7).basis == h0(b, 7).basis);
  auto c = sample_scheme(12, {2}, Constraint::Elliptic, 2025);
  CHECK(a.points != c.points);
}

TEST_CASE("linear system examples") {
  auto one = sample_scheme(1, {1}, Constraint::None, 3);
  CHECK(h0(one, 1).h0() == 2);
  auto five = sample_scheme(5, {1}, Constraint::None, 3);
  CHECK(h0(five, 2).h0() == 1);
  auto nagata = sample_scheme(16, {1}, Constraint::None, 42);
  CHECK(h0(nagata, 4).h0() == 0);
  auto e = sample_scheme(12, {1}, Constraint::Elliptic, 7);
  CHECK(h0(e, 3).h0() == 1);
  CHECK(h0(e, 2).h0() == 0);
  CHECK(h0(e, 4).h0() == 3);
  // the degree-3 section is the cubic itself
  LinearSystem L3 = h0(e, 3);
  Subspace span(10, e.field());
  span.insert(L3.basis[0].coeffs);
  CHECK(span.contains(e.cubic->coeffs));
}

TEST_CASE("elliptic ladder") {
  for (int m = 1; m <= 3; ++m) {
    auto e = sample_scheme(12, {m}, Constraint::Elliptic, 7);
    CHECK(h0(e, 3 * m).h0() == 1);
    CHECK(h0(e, 3 * m - 1).h0() == 0);
  }
}

TEST_CASE("multiplication map examples") {
  auto nagata = sample_scheme(16, {1}, Constraint::None, 42);
  CHECK(mult_map_surjective(nagata, 8).surjective);
  auto e = sample_scheme(12, {1}, Constraint::Elliptic, 7);
  CHECK(mult_map_surjective(e, 8).surjective);
  auto low = mult_map_surjective(e, 3);
  CHECK_FALSE(low.surjective);
  CHECK(low.image_dim == 0);
  CHECK(low.target_dim == 1);
}

TEST_CASE("condition count and expected dimension") {
  for (int m = 1; m <= 2; ++m) {
    auto s = sample_scheme(16, {m}, Constraint::None, 42);
    for (int d = 0; d <= 4 * m + 4; ++d) {
      LinearSystem L = h0(s, d);
      CHECK(L.conditions == 16 * binom2(m));
      CHECK(L.rank <= L.conditions);
      CHECK(L.h0() + L.rank == num_monomials(d));
      CHECK(L.h0() == expected_h0(d, {m}, 16));
    }
  }
}

TEST_CASE("monotonicity in degree and multiplicity") {
  std::vector<int> mult{2, 1, 1, 3, 2, 1, 1, 2};
  auto s = sample_scheme(8, mult, Constraint::None, 5);
  std::size_t prev = 0;
  for (int d = 0; d <= 9; ++d) {
    std::size_t cur = h0(s, d).h0();
    CHECK(cur >= prev);
    prev = cur;
  }
  for (std::size_t i = 0; i < mult.size(); ++i) {
    FatPointScheme heavier = s;
    heavier.multiplicities[i] += 1;
    for (int d = 2; d <= 8; ++d) CHECK(h0(heavier, d).h0() <= h0(s, d).h0());
  }
}

TEST_CASE("basis forms vanish to the required order") {
  auto s = sample_scheme(6, {1, 2, 3, 1, 2, 1}, Constraint::None, 8);
  for (int d = 3; d <= 7; ++d) check_basis_sound(s, h0(s, d), 100 + d);
  auto e = sample_scheme(12, {2}, Constraint::Elliptic, 7);
  for (int d = 6; d <= 9; ++d) check_basis_sound(e, h0(e, d), 200 + d);
}

TEST_CASE("serial and parallel kernels agree") {
  auto s = sample_scheme(16, {2}, Constraint::None, 7);
  for (int d = 8; d <= 11; ++d) {
    auto a = h0(s, d, Backend::Serial), b = h0(s, d, Backend::Parallel);
    CHECK(a.basis == b.basis);
    CHECK(a.rank == b.rank);
    auto ma = mult_map_surjective(s, d, Backend::Serial), mb = mult_map_surjective(s, d, Backend::Parallel);
    CHECK(ma.image_dim == mb.image_dim);
  }
  auto e = sample_scheme(12, {1}, Constraint::Elliptic, 7);
  auto ca = fiber_generator_census(e, 1, 6, 4, Backend::Serial);
  auto cb = fiber_generator_census(e, 1, 6, 4, Backend::Parallel);
  REQUIRE(ca.pieces.size() == cb.pieces.size());
  for (std::size_t i = 0; i < ca.pieces.size(); ++i) CHECK(ca.pieces[i].dies == cb.pieces[i].dies);
}

TEST_CASE("graded containment") {
  auto nagata = sample_scheme(16, {1}, Constraint::None, 42);
  auto rep = graded_power_containment(nagata, 1, 4, 24);
  CHECK_FALSE(rep.empty);
  CHECK(rep.holds);
  CHECK_FALSE(rep.rows.empty());
  CHECK(rep.rows.front().degree == 20);
  for (const auto& row : rep.rows) CHECK(row.contained);
  CHECK_FALSE(rep.bottom_exception.has_value());

  auto small = graded_power_containment(nagata, 1, 4, 12);
  CHECK(small.empty);
  CHECK(small.rows.empty());

  auto e = sample_scheme(12, {1}, Constraint::Elliptic, 7);
  auto erep = graded_power_containment(e, 1, 4, 13);
  REQUIRE(erep.bottom_exception.has_value());
  CHECK(*erep.bottom_exception);
  CHECK(erep.rows.front().degree == 12);
  CHECK_FALSE(erep.rows.front().contained);
  CHECK(erep.rows.front().target_dim == 0);
  CHECK(erep.failing_degrees == std::vector<int>{12});
  CHECK(erep.holds);
  CHECK_THROWS_AS(graded_power_containment(e, 0, 4, 13), ArgumentError);
}

TEST_CASE("fiber census") {
  auto nagata = sample_scheme(16, {1}, Constraint::None, 42);
  auto rep = fiber_generator_census(nagata, 1, 8);
  CHECK(rep.survivors() == 0);
  CHECK_FALSE(rep.pieces.empty());

  auto e = sample_scheme(12, {1}, Constraint::Elliptic, 7);
  auto erep = fiber_generator_census(e, 1, 8);
  CHECK(erep.survivors() == 1);
  for (const auto& piece : erep.pieces) {
    if (!piece.dies) {
      CHECK(piece.degree == 3);
      CHECK(piece.piece_dim == 1);
    }
  }
  CHECK(fiber_generator_census(e, 0, 8).pieces.empty());
}

TEST_CASE("first section degree") {
  auto nagata = sample_scheme(16, {1}, Constraint::None, 42);
  CHECK(first_section_degree(nagata, 10) == 5);
  CHECK_FALSE(first_section_degree(nagata, 4).has_value());
  auto e = sample_scheme(12, {2}, Constraint::Elliptic, 7);
  CHECK(first_section_degree(e, 10) == 6);
}

TEST_CASE("scaled schemes") {
  auto s = sample_scheme(16, {1}, Constraint::None, 42);
  auto t = scaled_scheme(s, 3);
  CHECK(t.points == s.points);
  for (int m : t.multiplicities) CHECK(m == 3);
  CHECK(h0(t, 12).h0() == 0);
}
