#include "spreadlab/groebner.hpp"

#include <algorithm>
#include <set>

#include "spreadlab/errors.hpp"

namespace spreadlab {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

namespace {

// Divisor lookup table: leading monomials plus support masks as a fast
// rejection filter.
class DivisorTable {
 public:
  void add(const Polynomial* p) {
    polys_.push_back(p);
    lms_.push_back(p->leading_monomial());
    masks_.push_back(lms_.back().support());
    inv_lc_.push_back(p->ring()->field().inv(p->leading_coeff()));
  }
  std::size_t size() const { return polys_.size(); }

  // shortest divisor, ties to the lowest index; -1 if none
  int find(const Monomial& m) const {
    std::uint32_t mask = m.support();
    int best = -1;
    for (std::size_t i = 0; i < lms_.size(); ++i) {
      if ((masks_[i] & ~mask) == 0 && lms_[i].divides(m)) {
        if (best < 0 || polys_[i]->size() < polys_[best]->size()) best = static_cast<int>(i);
      }
    }
    return best;
  }

  // Reduced terms move to `done` as soon as they are final, so each step only
  // merges the still-unprocessed part.
  Polynomial reduce(const Polynomial& r, bool full) const {
    if (polys_.empty() || r.is_zero()) return r;
    const auto& field = r.ring()->field();
    const auto& order = r.ring()->order();
    std::vector<Term> done, cur = r.terms(), next;
    std::size_t k = 0;
    while (k < cur.size()) {
      int d = find(cur[k].mono);
      if (d < 0) {
        done.push_back(cur[k++]);
        if (!full) break;
        continue;
      }
      const auto& g = polys_[d]->terms();
      Coeff negc = field.neg(field.mul(cur[k].coeff, inv_lc_[d]));
      Monomial q = cur[k].mono / g[0].mono;
      next.clear();
      std::size_t i = k + 1, j = 1;
      while (i < cur.size() && j < g.size()) {
        Monomial gm = g[j].mono * q;
        int c = order.compare(cur[i].mono, gm);
        if (c > 0) {
          next.push_back(cur[i++]);
        } else if (c < 0) {
          next.push_back({gm, field.mul(negc, g[j++].coeff)});
        } else {
          Coeff v = field.fma(negc, g[j++].coeff, cur[i].coeff);
          if (v != 0) next.push_back({gm, v});
          ++i;
        }
      }
      for (; i < cur.size(); ++i) next.push_back(cur[i]);
      for (; j < g.size(); ++j) next.push_back({g[j].mono * q, field.mul(negc, g[j].coeff)});
      std::swap(cur, next);
      k = 0;
    }
    done.insert(done.end(), cur.begin() + static_cast<std::ptrdiff_t>(k), cur.end());
    return Polynomial::from_sorted_terms(r.ring(), std::move(done));
  }

 private:
  std::vector<const Polynomial*> polys_;
  std::vector<Monomial> lms_;
  std::vector<std::uint32_t> masks_;
  std::vector<Coeff> inv_lc_;
};

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  long degree;
};

class Buchberger {
 public:
  explicit Buchberger(const Ring& ring) : ring_(ring), order_(ring->order()) {
    auto cmp = [this](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      int c = order_.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    };
    pairs_ = std::set<Pair, std::function<bool(const Pair&, const Pair&)>>(cmp);
  }

  void add_input(const Polynomial& f) {
    Polynomial h = active_table().reduce(f, true);
    if (h.is_zero()) return;
    insert(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Polynomial s = s_polynomial(polys_[p.i], polys_[p.j]);
      Polynomial h = active_table().reduce(std::move(s), true);
      if (h.is_zero()) continue;
      insert(h.monic());
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) minimal.push_back(polys_[i]);
    }
    // active leading monomials are pairwise non-dividing; reduce tails
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      DivisorTable others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.add(&minimal[j]);
      }
      const Polynomial& g = minimal[i];
      Polynomial lead = Polynomial::monomial(ring_, g.leading_monomial(), g.leading_coeff());
      Polynomial tail = others.reduce(g - lead, true);
      out.push_back((lead + tail).monic());
    }
    std::sort(out.begin(), out.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }

 private:
  DivisorTable active_table() const {
    DivisorTable t;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) t.add(&polys_[i]);
    }
    return t;
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    Monomial l = lcm(lms_[i], lms_[j]);
    return Pair{std::min(i, j), std::max(i, j), l, ring_->weighted_degree(l)};
  }

  // Gebauer–Möller update for a new basis element.
  void insert(Polynomial h) {
    polys_.reserve(polys_.size() + 1);
    std::size_t hi = polys_.size();
    Monomial hlm = h.leading_monomial();
    polys_.push_back(std::move(h));
    lms_.push_back(hlm);
    active_.push_back(true);

    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) candidates.push_back(g);
    }
    std::vector<Monomial> cand_lcm;
    for (std::size_t g : candidates) cand_lcm.push_back(lcm(lms_[g], hlm));

    // chain criterion among the new pairs
    std::vector<bool> kept(candidates.size(), false);
    std::vector<bool> removed(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      removed[a] = true;  // leaves C
      bool keep = coprime(lms_[candidates[a]], hlm);
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < candidates.size() && keep; ++b) {
          if (b == a) continue;
          bool in_c = !removed[b];
          bool in_d = kept[b];
          if ((in_c || in_d) && cand_lcm[b].divides(cand_lcm[a])) keep = false;
        }
      }
      kept[a] = keep;
    }

    // B criterion on existing pairs
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (hlm.divides(p.lcm) && !(lcm(lms_[p.i], hlm) == p.lcm) &&
          !(lcm(lms_[p.j], hlm) == p.lcm)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }

    // product criterion drops coprime pairs
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (kept[a] && !coprime(lms_[candidates[a]], hlm)) pairs_.insert(make_pair(candidates[a], hi));
    }

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && hlm.divides(lms_[g])) active_[g] = false;
    }
  }

  Ring ring_;
  const MonomialOrder& order_;
  std::vector<Polynomial> polys_;
  std::vector<Monomial> lms_;
  std::vector<bool> active_;
  std::set<Pair, std::function<bool(const Pair&, const Pair&)>> pairs_;
};

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& field = f.ring()->field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  return a.minus_term_times(field.inv(g.leading_coeff()), l / g.leading_monomial(), g);
}

GroebnerBasis groebner_basis(std::span<const Polynomial> gens, const Ring& ring) {
  for (const auto& g : gens) {
    if (!g.ring()->same_as(*ring)) throw ContextError("generator outside the requested ring");
  }
  std::vector<Polynomial> inputs;
  for (const auto& g : gens) {
    if (!g.is_zero()) inputs.push_back(g.monic());
  }
  // feed low-degree generators first; order does not affect the result
  std::stable_sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  Buchberger engine(ring);
  for (const auto& f : inputs) {
    if (f.is_constant()) {
      return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
    }
    engine.add_input(f);
  }
  engine.run();
  return GroebnerBasis(ring, engine.reduced_basis());
}

Polynomial reduce_by(const Polynomial& f, std::span<const Polynomial> divisors) {
  DivisorTable table;
  for (const auto& d : divisors) {
    if (!d.is_zero()) table.add(&d);
  }
  return table.reduce(f, true);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (!f.ring()->same_as(*G.ring())) throw ContextError("normal form across ring contexts");
  return reduce_by(f, G.elements());
}

}  // namespace spreadlab
