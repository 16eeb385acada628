#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

Polynomial naive_remainder(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const auto& field = f.ring()->field();
  Polynomial p = f;
  Polynomial r(f.ring());
  while (!p.is_zero()) {
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero() || !g.leading_monomial().divides(p.leading_monomial())) continue;
      Coeff c = field.mul(p.leading_coeff(), field.inv(g.leading_coeff()));
      p = p - g.times_term(p.leading_monomial() / g.leading_monomial(), c);
      divided = true;
      break;
    }
    if (!divided) {
      Polynomial lt = Polynomial::monomial(f.ring(), p.leading_monomial(), p.leading_coeff());
      r = r + lt;
      p = p - lt;
    }
  }
  return r;
}

std::vector<Polynomial> naive_groebner(const std::vector<Polynomial>& gens, const Ring& ring) {
  std::vector<Polynomial> G;
  for (const auto& g : gens) {
    if (!g.is_zero()) G.push_back(g);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  // still every pair, but the one with the smallest lcm degree goes first;
  // the last-in-first-out order makes intermediate bases explode
  auto lcm_degree = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return lcm(G[pr.first].leading_monomial(), G[pr.second].leading_monomial()).total_degree();
  };
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return lcm_degree(a) < lcm_degree(b);
    });
    auto [i, j] = *best;
    pairs.erase(best);
    Polynomial r = naive_remainder(s_polynomial(G[i], G[j]), G);
    if (r.is_zero()) continue;
    for (std::size_t k = 0; k < G.size(); ++k) pairs.emplace_back(k, G.size());
    G.push_back(r);
  }

  // minimize: drop elements whose leading monomial is divisible by another's
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = G[j].leading_monomial();
      const auto& b = G[i].leading_monomial();
      if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i].monic());
  }
  if (std::any_of(minimal.begin(), minimal.end(), [](const Polynomial& g) { return g.is_constant(); })) {
    return {Polynomial::constant(ring, 1)};
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial lead = Polynomial::monomial(ring, minimal[i].leading_monomial(), 1);
    reduced.push_back(lead + naive_remainder(minimal[i] - lead, others));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

int brute_monomial_dim(const std::vector<Monomial>& monomials, std::size_t n) {
  for (const auto& m : monomials) {
    if (m.is_one()) return -1;
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool independent = true;
    for (const auto& m : monomials) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] > 0 && !(s & (1u << i))) inside = false;
      }
      if (inside) independent = false;
    }
    if (independent) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

Ideal saturate_extra_variable(const Ideal& a, const Ideal& b) {
  const Ring& base = a.ring();
  Ring ext = prepend_elimination_variables(base, {"_u"});
  std::vector<std::size_t> up(base->num_vars()), down(ext->num_vars(), 0);
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = i + 1;
  for (std::size_t i = 1; i < down.size(); ++i) down[i] = i - 1;
  Polynomial u = Polynomial::variable(ext, 0);
  Ideal result = Ideal::unit(base);
  for (const auto& g : b.generators()) {
    if (g.is_zero()) continue;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(f.mapped(ext, up));
    gens.push_back(Polynomial::constant(ext, 1) - u * g.mapped(ext, up));
    auto gb = groebner_basis(gens, ext);
    std::vector<Polynomial> kept;
    for (const auto& h : gb.elements()) {
      if ((h.support() & 1u) == 0) kept.push_back(h.mapped(base, down));
    }
    result = intersect(result, Ideal(base, kept));
  }
  return result.canonical();
}

namespace {

void each_monomial(std::size_t n, int d, const std::function<void(const Monomial&)>& visit) {
  Monomial m;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      m[i] = static_cast<Exponent>(left);
      visit(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = static_cast<Exponent>(e);
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
}

}  // namespace

std::size_t piece_dim(const Ideal& ideal, int d) {
  auto lms = ideal.groebner().leading_monomials();
  std::size_t count = 0;
  each_monomial(ideal.ring()->num_vars(), d, [&](const Monomial& m) {
    if (std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
  });
  return count;
}

std::size_t rank_mod_p(std::vector<std::vector<Coeff>> rows, const PrimeField& field) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Coeff inv = field.inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Coeff factor = field.mul(rows[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = field.sub(rows[r][k], field.mul(factor, rows[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t colon_piece_dim(const Ideal& a, const Ideal& b, int d) {
  const Ring& ring = a.ring();
  std::vector<Monomial> basis;
  each_monomial(ring->num_vars(), d, [&](const Monomial& m) { basis.push_back(m); });

  // column j = image of the j-th monomial; rows indexed by (b_i, output monomial)
  std::vector<std::vector<std::pair<Monomial, Coeff>>> images(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Polynomial f = Polynomial::monomial(ring, basis[j]);
    for (std::size_t i = 0; i < b.generators().size(); ++i) {
      Polynomial r = normal_form(f * b.generators()[i], a.groebner());
      for (const auto& t : r.terms()) {
        Monomial tagged = t.mono;
        tagged[ring->num_vars()] = static_cast<Exponent>(i + 1);  // spare slot as a tag
        images[j].emplace_back(tagged, t.coeff);
      }
    }
  }
  std::vector<Monomial> keys;
  for (const auto& col : images) {
    for (const auto& [m, c] : col) {
      if (std::find(keys.begin(), keys.end(), m) == keys.end()) keys.push_back(m);
    }
  }
  std::vector<std::vector<Coeff>> rows(basis.size(), std::vector<Coeff>(keys.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [m, c] : images[j]) {
      rows[j][std::find(keys.begin(), keys.end(), m) - keys.begin()] = c;
    }
  }
  return basis.size() - rank_mod_p(rows, ring->field());
}

Ideal definition_closure(const Ideal& monomial_ideal, int max_k) {
  const Ring& ring = monomial_ideal.ring();
  std::size_t n = ring->num_vars();
  std::vector<Monomial> gens;
  for (const auto& g : monomial_ideal.generators()) {
    if (!g.is_zero()) gens.push_back(g.leading_monomial());
  }
  std::vector<int> box(n, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) box[i] = std::max(box[i], static_cast<int>(g[i]));
  }

  // is x^target divisible by a product of k generators?
  std::function<bool(const Monomial&, int, std::size_t)> in_power = [&](const Monomial& target, int k,
                                                                         std::size_t from) -> bool {
    if (k == 0) return true;
    for (std::size_t i = from; i < gens.size(); ++i) {
      if (gens[i].divides(target) && in_power(target / gens[i], k - 1, i)) return true;
    }
    return false;
  };

  std::vector<Polynomial> out;
  Monomial a;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (int k = 1; k <= max_k; ++k) {
        if (in_power(a.pow(k), k, 0)) {
          out.push_back(Polynomial::monomial(ring, a));
          return;
        }
      }
      return;
    }
    for (int e = 0; e <= box[i]; ++e) {
      a[i] = static_cast<Exponent>(e);
      rec(i + 1);
    }
    a[i] = 0;
  };
  rec(0);
  return Ideal(ring, out).canonical();
}

Ideal fiber_kernel_by_substitution(const ReesPresentation& pres) {
  std::size_t nx = pres.base_ring->num_vars();
  std::size_t total = pres.combined_ring->num_vars();
  std::vector<std::size_t> to_fiber(total, 0);
  for (std::size_t i = nx; i < total; ++i) to_fiber[i] = i - nx;
  std::vector<Polynomial> images;
  for (const auto& q : pres.kernel.groebner().elements()) {
    std::vector<Term> kept;
    for (const auto& t : q.terms()) {
      bool x_free = true;
      for (std::size_t i = 0; i < nx; ++i) x_free = x_free && t.mono[i] == 0;
      if (x_free) kept.push_back(t);
    }
    images.push_back(Polynomial::from_terms(pres.combined_ring, kept).mapped(pres.fiber_ring, to_fiber));
  }
  return Ideal(pres.fiber_ring, images).canonical();
}

int order_along_line(const TernaryForm& f, const std::array<Coeff, 3>& point,
                     const std::array<Coeff, 3>& direction, const PrimeField& field) {
  // univariate coefficients of f(point + t·direction)
  int d = f.degree;
  std::vector<Coeff> total(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) {
      Coeff c = f.coeffs[monomial_index(d, i, j)];
      if (c == 0) continue;
      int k = d - i - j;
      std::vector<Coeff> acc{c};
      auto mul_linear_pow = [&](Coeff p0, Coeff p1, int e) {
        for (int r = 0; r < e; ++r) {
          std::vector<Coeff> next(acc.size() + 1, 0);
          for (std::size_t s = 0; s < acc.size(); ++s) {
            next[s] = field.add(next[s], field.mul(acc[s], p0));
            next[s + 1] = field.add(next[s + 1], field.mul(acc[s], p1));
          }
          acc = next;
        }
      };
      mul_linear_pow(point[0], direction[0], i);
      mul_linear_pow(point[1], direction[1], j);
      mul_linear_pow(point[2], direction[2], k);
      for (std::size_t s = 0; s < acc.size(); ++s) total[s] = field.add(total[s], acc[s]);
    }
  }
  for (int s = 0; s <= d; ++s) {
    if (total[s] != 0) return s;
  }
  return d + 1;  // f vanishes on the whole line
}

}  // namespace oracle
