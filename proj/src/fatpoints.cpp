#include "spreadlab/fatpoints.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "spreadlab/errors.hpp"
#include "spreadlab/ideal.hpp"

namespace spreadlab {

bool TernaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Coeff c) { return c == 0; });
}

TernaryForm multiply(const TernaryForm& a, const TernaryForm& b, const PrimeField& field) {
  TernaryForm out{a.degree + b.degree, Vec(num_monomials(a.degree + b.degree), 0)};
  const int da = a.degree, db = b.degree, d = out.degree;
  for (int i1 = da; i1 >= 0; --i1) {
    for (int j1 = da - i1; j1 >= 0; --j1) {
      Coeff ca = a.coeffs[monomial_index(da, i1, j1)];
      if (ca == 0) continue;
      for (int i2 = db; i2 >= 0; --i2) {
        for (int j2 = db - i2; j2 >= 0; --j2) {
          Coeff cb = b.coeffs[monomial_index(db, i2, j2)];
          if (cb == 0) continue;
          Coeff& slot = out.coeffs[monomial_index(d, i1 + i2, j1 + j2)];
          slot = field.fma(ca, cb, slot);
        }
      }
    }
  }
  return out;
}

TernaryForm times_variable(const TernaryForm& f, int k) {
  if (k < 0 || k > 2) throw ArgumentError("variable index must be 0, 1 or 2");
  const int d = f.degree;
  TernaryForm out{d + 1, Vec(num_monomials(d + 1), 0)};
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j) {
      Coeff c = f.coeffs[monomial_index(d, i, j)];
      if (c == 0) continue;
      out.coeffs[monomial_index(d + 1, i + (k == 0), j + (k == 1))] = c;
    }
  }
  return out;
}

Coeff evaluate(const TernaryForm& f, const std::array<Coeff, 3>& point, const PrimeField& field) {
  const int d = f.degree;
  Coeff acc = 0;
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j) {
      Coeff c = f.coeffs[monomial_index(d, i, j)];
      if (c == 0) continue;
      Coeff m = field.mul(field.pow(point[0], static_cast<std::uint64_t>(i)),
                          field.mul(field.pow(point[1], static_cast<std::uint64_t>(j)),
                                    field.pow(point[2], static_cast<std::uint64_t>(d - i - j))));
      acc = field.fma(c, m, acc);
    }
  }
  return acc;
}

Coeff FieldSampler::next() {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / p_ * p_;
  for (;;) {
    std::uint64_t v = engine_();
    if (v < limit) return static_cast<Coeff>(v % p_);
  }
}

namespace {

std::array<Coeff, 3> normalized(std::array<Coeff, 3> v, const PrimeField& field) {
  for (Coeff c : v) {
    if (c != 0) {
      Coeff inv = field.inv(c);
      for (auto& x : v) x = field.mul(x, inv);
      break;
    }
  }
  return v;
}

Polynomial to_polynomial(const TernaryForm& f, const Ring& ring) {
  std::vector<Term> terms;
  const int d = f.degree;
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j) {
      Coeff c = f.coeffs[monomial_index(d, i, j)];
      if (c == 0) continue;
      Monomial m;
      m[0] = static_cast<Exponent>(i);
      m[1] = static_cast<Exponent>(j);
      m[2] = static_cast<Exponent>(d - i - j);
      terms.push_back({m, c});
    }
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

// binom(n, k) mod p for 0 <= k <= n <= max_n, by Pascal's rule
std::vector<Vec> binomials(int max_n, const PrimeField& field) {
  std::vector<Vec> c(static_cast<std::size_t>(max_n + 1));
  for (int n = 0; n <= max_n; ++n) {
    c[n].assign(static_cast<std::size_t>(n + 1), 1);
    for (int k = 1; k < n; ++k) c[n][k] = field.add(c[n - 1][k - 1], c[n - 1][k]);
  }
  return c;
}

void check_scheme(const FatPointScheme& scheme) {
  if (scheme.points.size() != scheme.multiplicities.size()) {
    throw ArgumentError("scheme needs one multiplicity per point");
  }
}

}  // namespace

bool is_smooth_cubic(const TernaryForm& g, std::uint32_t p) {
  if (g.degree != 3) throw ArgumentError("expected a cubic form");
  if (g.is_zero()) return false;
  Ring ring = RingContext::make(p, {"x", "y", "z"});
  Polynomial G = to_polynomial(g, ring);
  Ideal singular(ring, {G, derivative(G, 0), derivative(G, 1), derivative(G, 2)});
  // only the irrelevant ideal's zero (the origin) may remain
  return krull_dim(singular) == 0;
}

FatPointScheme sample_scheme(std::size_t r, std::vector<int> mult, Constraint constraint,
                             std::uint64_t seed, std::uint32_t p) {
  if (r == 0) throw ArgumentError("need at least one point");
  if (mult.size() == 1) mult.assign(r, mult[0]);
  if (mult.size() != r) throw ArgumentError("give one multiplicity or one per point");
  for (int m : mult) {
    if (m < 0) throw ArgumentError("multiplicities must be nonnegative");
  }
  PrimeField field(p);
  const std::uint64_t capacity = static_cast<std::uint64_t>(p) * p + p + 1;
  if (r > capacity) {
    throw SeedError("F_" + std::to_string(p) + " has only " + std::to_string(capacity) +
                    " projective points; cannot place " + std::to_string(r));
  }
  FatPointScheme scheme;
  scheme.p = p;
  scheme.multiplicities = std::move(mult);
  scheme.constraint = constraint;
  scheme.seed = seed;
  FieldSampler rng(seed, p);
  std::set<std::array<Coeff, 3>> seen;
  const std::size_t max_draws = 1000 * r + 1000;

  if (constraint == Constraint::None) {
    std::size_t draws = 0;
    while (scheme.points.size() < r) {
      if (++draws > max_draws) throw SeedError("could not draw distinct points for seed " + std::to_string(seed));
      std::array<Coeff, 3> v{rng.next(), rng.next(), rng.next()};
      if (v == std::array<Coeff, 3>{0, 0, 0}) continue;
      v = normalized(v, field);
      if (seen.insert(v).second) scheme.points.push_back(v);
    }
    return scheme;
  }

  if (p > (1u << 22)) throw ArgumentError("elliptic sampling scans the field; use a prime below 2^22");
  constexpr int kCubicAttempts = 100;
  for (int attempt = 0; attempt < kCubicAttempts && !scheme.cubic; ++attempt) {
    TernaryForm g{3, Vec(num_monomials(3))};
    for (auto& c : g.coeffs) c = rng.next();
    if (is_smooth_cubic(g, p)) scheme.cubic = std::move(g);
  }
  if (!scheme.cubic) throw SeedError("no smooth cubic found for seed " + std::to_string(seed));
  const TernaryForm& g = *scheme.cubic;

  std::size_t draws = 0;
  while (scheme.points.size() < r) {
    if (++draws > max_draws) throw SeedError("could not find enough points on the cubic for seed " + std::to_string(seed));
    // G(1, u, z) as a cubic in z
    Coeff u = rng.next();
    Vec cz(4, 0);
    for (int i = 3; i >= 0; --i) {
      for (int j = 3 - i; j >= 0; --j) {
        int k = 3 - i - j;
        Coeff c = g.coeffs[monomial_index(3, i, j)];
        cz[k] = field.fma(c, field.pow(u, static_cast<std::uint64_t>(j)), cz[k]);
      }
    }
    std::vector<Coeff> roots;
    for (std::uint32_t z = 0; z < p; ++z) {
      Coeff v = field.fma(field.fma(field.fma(cz[3], z, cz[2]), z, cz[1]), z, cz[0]);
      if (v == 0) roots.push_back(z);
      if (roots.size() > 3) break;
    }
    if (roots.empty() || roots.size() > 3) continue;
    Coeff z = roots[rng.next() % roots.size()];
    std::array<Coeff, 3> pt{1, u, z};
    if (seen.insert(pt).second) scheme.points.push_back(pt);
  }
  return scheme;
}

FatPointScheme scaled_scheme(const FatPointScheme& scheme, int factor) {
  if (factor < 0) throw ArgumentError("negative multiplicity factor");
  FatPointScheme out = scheme;
  for (auto& m : out.multiplicities) m *= factor;
  return out;
}

DenseMatrix condition_matrix(const FatPointScheme& scheme, int d) {
  check_scheme(scheme);
  if (d < 0) throw ArgumentError("negative degree");
  const PrimeField field = scheme.field();
  const std::size_t cols = num_monomials(d);
  std::size_t rows = 0;
  for (int m : scheme.multiplicities) rows += num_monomials(m - 1);
  DenseMatrix out(rows, cols);
  const auto binom = binomials(d, field);
  std::size_t row = 0;
  for (std::size_t idx = 0; idx < scheme.points.size(); ++idx) {
    const auto& pt = scheme.points[idx];
    const int m = scheme.multiplicities[idx];
    if (m <= 0) continue;
    // chart: the first nonzero coordinate is 1; the other two become pt + (u1, u2)
    int c = pt[0] != 0 ? 0 : (pt[1] != 0 ? 1 : 2);
    int a = c == 0 ? 1 : 0;
    int b = c == 2 ? 1 : 2;
    // pow tables for the two moving coordinates
    Vec pa(static_cast<std::size_t>(d + 1)), pb(static_cast<std::size_t>(d + 1));
    pa[0] = pb[0] = 1;
    for (int e = 1; e <= d; ++e) {
      pa[e] = field.mul(pa[e - 1], pt[a]);
      pb[e] = field.mul(pb[e - 1], pt[b]);
    }
    for (int s = 0; s < m; ++s) {
      for (int t = 0; s + t < m; ++t, ++row) {
        // coefficient of u1^s u2^t in x^i y^j z^k after substitution
        for (int i = d; i >= 0; --i) {
          for (int j = d - i; j >= 0; --j) {
            int e[3] = {i, j, d - i - j};
            int ea = e[a], eb = e[b];
            if (ea < s || eb < t) continue;
            Coeff v = field.mul(field.mul(binom[ea][s], pa[ea - s]), field.mul(binom[eb][t], pb[eb - t]));
            out.at(row, monomial_index(d, i, j)) = v;
          }
        }
      }
    }
  }
  return out;
}

LinearSystem h0(const FatPointScheme& scheme, int d, Backend backend) {
  const PrimeField field = scheme.field();
  DenseMatrix cond = condition_matrix(scheme, d);
  const std::size_t cols = num_monomials(d);
  LinearSystem sys{d, cols, cond.rows(), 0, {}};
  if (cond.rows() == 0) {
    for (std::size_t k = 0; k < cols; ++k) {
      Vec v(cols, 0);
      v[k] = 1;
      sys.basis.push_back({d, std::move(v)});
    }
    return sys;
  }
  auto kernel = nullspace(cond, field, backend);
  sys.rank = cols - kernel.size();
  for (auto& v : kernel) sys.basis.push_back({d, std::move(v)});
  return sys;
}

// h0 > 0 is monotone in d (multiply by a linear form), so bisect.
std::optional<int> first_section_degree(const FatPointScheme& scheme, int max_degree, Backend backend) {
  if (max_degree < 0 || h0(scheme, max_degree, backend).h0() == 0) return std::nullopt;
  int lo = -1, hi = max_degree;  // h0(lo) = 0 < h0(hi)
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    if (h0(scheme, mid, backend).h0() > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

MultMapResult mult_map_surjective(const FatPointScheme& scheme, int d, Backend backend) {
  if (d < 1) throw ArgumentError("multiplication map needs d >= 1");
  const PrimeField field = scheme.field();
  auto lower = h0(scheme, d - 1, backend);
  std::size_t target = h0(scheme, d, backend).h0();
  Subspace image(num_monomials(d), field);
  std::vector<Vec> gens;
  for (const auto& g : lower.basis) {
    for (int k = 0; k < 3; ++k) gens.push_back(times_variable(g, k).coeffs);
  }
  image.insert_all(std::move(gens), backend);
  return {image.rank() == target, image.rank(), target};
}

namespace {

std::vector<TernaryForm> as_forms(const Subspace& s, int degree) {
  std::vector<TernaryForm> out;
  for (const auto& v : s.basis()) out.push_back({degree, v});
  return out;
}

// span{u·v : u ∈ us, v ∈ vs} added to `target` up to rank `cap`
void add_products(Subspace& target, const std::vector<TernaryForm>& us, const std::vector<TernaryForm>& vs,
                  const PrimeField& field, Backend backend, std::size_t cap) {
  const std::size_t total = us.size() * vs.size();
  constexpr std::size_t kBatch = 256;
  for (std::size_t start = 0; start < total && target.rank() < cap; start += kBatch) {
    std::size_t end = std::min(total, start + kBatch);
    std::vector<Vec> prods(end - start);
    if (backend == Backend::Parallel) {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t q = static_cast<std::ptrdiff_t>(start); q < static_cast<std::ptrdiff_t>(end); ++q) {
        auto uq = static_cast<std::size_t>(q);
        prods[uq - start] = multiply(us[uq / vs.size()], vs[uq % vs.size()], field).coeffs;
      }
    } else {
      for (std::size_t q = start; q < end; ++q) {
        prods[q - start] = multiply(us[q / vs.size()], vs[q % vs.size()], field).coeffs;
      }
    }
    target.insert_all(std::move(prods), backend, cap);
  }
}

// m·(system)_{D-1} inside degree D
Subspace maximal_times(const FatPointScheme& scheme, int degree, Backend backend) {
  Subspace w(num_monomials(degree), scheme.field());
  if (degree < 1) return w;
  std::vector<Vec> gens;
  for (const auto& g : h0(scheme, degree - 1, backend).basis) {
    for (int k = 0; k < 3; ++k) gens.push_back(times_variable(g, k).coeffs);
  }
  w.insert_all(std::move(gens), backend);
  return w;
}

// does the span of s-fold products of the degree-d piece of the n-system lie in m·(sn-system)?
bool piece_power_dies(const FatPointScheme& scheme, const std::vector<TernaryForm>& piece, int n, int d, int s,
                      Backend backend) {
  const PrimeField field = scheme.field();
  Subspace current(num_monomials(d), field);
  for (const auto& f : piece) current.insert(f.coeffs);
  for (int k = 2; k <= s; ++k) {
    std::size_t cap = h0(scaled_scheme(scheme, k * n), k * d, backend).h0();
    Subspace next(num_monomials(k * d), field);
    add_products(next, as_forms(current, (k - 1) * d), piece, field, backend, cap);
    current = std::move(next);
  }
  return maximal_times(scaled_scheme(scheme, s * n), s * d, backend).contains(current);
}

}  // namespace

ContainmentReport graded_power_containment(const FatPointScheme& scheme, int n, int s, int max_degree,
                                           Backend backend) {
  check_scheme(scheme);
  if (n < 1 || s < 1) throw ArgumentError("containment needs n >= 1 and s >= 1");
  if (max_degree < 0) throw ArgumentError("negative degree bound");
  const PrimeField field = scheme.field();
  const FatPointScheme base = scaled_scheme(scheme, n);
  std::vector<std::vector<TernaryForm>> pieces(static_cast<std::size_t>(max_degree + 1));
  for (int e = 0; e <= max_degree; ++e) pieces[e] = h0(base, e, backend).basis;

  // spans[D] holds the k-fold product span in degree D
  std::vector<Subspace> spans;
  for (int e = 0; e <= max_degree; ++e) {
    Subspace sp(num_monomials(e), field);
    for (const auto& f : pieces[e]) sp.insert(f.coeffs);
    spans.push_back(std::move(sp));
  }
  for (int k = 2; k <= s; ++k) {
    const FatPointScheme kn = scaled_scheme(scheme, k * n);
    std::vector<Subspace> next;
    for (int D = 0; D <= max_degree; ++D) {
      Subspace sp(num_monomials(D), field);
      std::size_t cap = 0;
      bool any = false;
      for (int e = 0; e <= D; ++e) any = any || (spans[e].rank() > 0 && !pieces[D - e].empty());
      if (any) cap = h0(kn, D, backend).h0();
      for (int e = 0; e <= D && sp.rank() < cap; ++e) {
        if (spans[e].rank() == 0 || pieces[D - e].empty()) continue;
        add_products(sp, as_forms(spans[e], e), pieces[D - e], field, backend, cap);
      }
      next.push_back(std::move(sp));
    }
    spans = std::move(next);
  }

  ContainmentReport report{n, s, max_degree, {}, true, true, std::nullopt, {}};
  const FatPointScheme sn = scaled_scheme(scheme, s * n);
  const bool elliptic = scheme.constraint == Constraint::Elliptic;
  const int bottom = 3 * s * n;
  for (int D = 0; D <= max_degree; ++D) {
    if (spans[D].rank() == 0) continue;
    report.empty = false;
    Subspace target = maximal_times(sn, D, backend);
    std::size_t ambient = h0(sn, D, backend).h0();
    bool contained = target.contains(spans[D]);
    report.rows.push_back({D, spans[D].rank(), target.rank(), ambient, contained});
    if (!contained) {
      report.failing_degrees.push_back(D);
      if (!(elliptic && D == bottom)) report.holds = false;
    }
    if (elliptic && D == bottom) report.bottom_exception = target.rank() == 0 && !contained;
  }
  if (report.empty) report.holds = false;
  return report;
}

std::size_t CensusReport::survivors() const {
  return static_cast<std::size_t>(std::count_if(pieces.begin(), pieces.end(), [](const CensusPiece& p) { return !p.dies; }));
}

CensusReport fiber_generator_census(const FatPointScheme& scheme, int max_n, int max_degree, int s,
                                    Backend backend) {
  check_scheme(scheme);
  if (max_n < 0 || max_degree < 0) throw ArgumentError("census bounds must be nonnegative");
  if (s < 1) throw ArgumentError("census power must be at least 1");
  CensusReport report{max_n, max_degree, s, {}};
  for (int n = 1; n <= max_n; ++n) {
    const FatPointScheme base = scaled_scheme(scheme, n);
    for (int d = 1; d <= max_degree; ++d) {
      auto piece = h0(base, d, backend).basis;
      if (piece.empty()) continue;
      report.pieces.push_back({n, d, piece.size(), piece_power_dies(scheme, piece, n, d, s, backend)});
    }
  }
  return report;
}

}  // namespace spreadlab
