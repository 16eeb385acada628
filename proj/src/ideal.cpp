#include "spreadlab/ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "spreadlab/errors.hpp"

namespace spreadlab {

namespace {

void push_unique(std::vector<Polynomial>& out, Polynomial p) {
  if (p.is_zero()) return;
  p = p.monic();
  for (const auto& q : out) {
    if (q == p) return;
  }
  out.push_back(std::move(p));
}

std::vector<std::size_t> identity_map(std::size_t n, std::size_t offset = 0) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + offset;
  return m;
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!g.ring()->same_as(*ring_)) throw ContextError("generator outside the ideal's ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ring ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(Ring ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

Ideal Ideal::from_basis(const GroebnerBasis& gb) {
  Ideal out(gb.ring(), gb.elements());
  std::call_once(out.cache_->once, [&] { out.cache_->gb.emplace(gb); });
  return out;
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->gb.emplace(groebner_basis(gens_, ring_)); });
  return *cache_->gb;
}

void Ideal::check_ring(const Ideal& other) const {
  if (ring_ != other.ring_ && !ring_->same_as(*other.ring_)) {
    throw ContextError("ideals belong to different ring contexts");
  }
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return normal_form(f, groebner()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  check_ring(other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::is_weighted_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.weighted_degree().has_value(); });
}

std::vector<Polynomial> Ideal::minimal_generators() const {
  return minimal_generators_modulo(Ideal::zero(ring_));
}

std::vector<Polynomial> Ideal::minimal_generators_modulo(const Ideal& base) const {
  check_ring(base);
  if (!base.is_weighted_homogeneous()) {
    throw ValidationError("minimal generators need a weighted-homogeneous ideal");
  }
  const auto& gb = groebner();
  if (gb.is_unit_ideal()) return gb.elements();
  std::vector<std::pair<long, Polynomial>> graded;
  for (const auto& g : gb.elements()) {
    auto d = g.weighted_degree();
    if (!d) throw ValidationError("minimal generators need a weighted-homogeneous ideal");
    graded.emplace_back(*d, g);
  }
  std::stable_sort(graded.begin(), graded.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Polynomial> kept;
  std::size_t i = 0;
  while (i < graded.size()) {
    long degree = graded[i].first;
    std::vector<Polynomial> lower_gens = base.generators();
    lower_gens.insert(lower_gens.end(), kept.begin(), kept.end());
    auto lower = groebner_basis(lower_gens, ring_);
    // echelon list of normal forms in this degree
    std::vector<Polynomial> echelon;
    for (; i < graded.size() && graded[i].first == degree; ++i) {
      Polynomial r = normal_form(graded[i].second, lower);
      r = reduce_by(r, echelon);
      if (r.is_zero()) continue;
      echelon.push_back(r.monic());
      kept.push_back(graded[i].second);
    }
  }
  return kept;
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string();
  }
  if (gens_.empty()) os << "0";
  os << ")";
  return os.str();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_as(*b.ring())) throw ContextError("ideals belong to different ring contexts");
  return a.groebner() == b.groebner();
}

Ideal sum(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_as(*b.ring())) throw ContextError("ideals belong to different ring contexts");
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) push_unique(gens, g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_as(*b.ring())) throw ContextError("ideals belong to different ring contexts");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) push_unique(gens, f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& a, int k) {
  if (k < 0) throw ArgumentError("negative ideal power");
  Ideal result = Ideal::unit(a.ring());
  for (int i = 0; i < k; ++i) result = product(result, a);
  return result;
}

Ideal ideal_combine(const Ideal& a, const Ideal& b, CombineOp op, int k) {
  switch (op) {
    case CombineOp::Sum: return sum(a, b);
    case CombineOp::Product: return product(a, b);
    case CombineOp::Power: return power(a, k);
  }
  throw ArgumentError("unknown combine operation");
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_as(*b.ring())) throw ContextError("ideals belong to different ring contexts");
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_unit()) return b.canonical();
  if (b.is_unit()) return a.canonical();
  const Ring& base = a.ring();
  Ring ext = prepend_elimination_variables(base, {"_t"});
  auto up = identity_map(base->num_vars(), 1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.mapped(ext, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.mapped(ext, up));
  auto gb = groebner_basis(gens, ext);

  std::vector<std::size_t> down(ext->num_vars(), 0);
  for (std::size_t i = 1; i < ext->num_vars(); ++i) down[i] = i - 1;
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    if ((g.support() & 1u) == 0) kept.push_back(g.mapped(base, down));
  }
  return Ideal(base, std::move(kept)).canonical();
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw ArgumentError("division by the zero polynomial");
  const auto& field = f.ring()->field();
  Coeff inv_lc = field.inv(g.leading_coeff());
  std::vector<Term> q;
  Polynomial r = f;
  while (!r.is_zero()) {
    const Monomial& lt = r.leading_monomial();
    if (!g.leading_monomial().divides(lt)) throw ArgumentError("inexact polynomial division");
    Monomial m = lt / g.leading_monomial();
    Coeff c = field.mul(r.leading_coeff(), inv_lc);
    q.push_back({m, c});
    r = r.minus_term_times(c, m, g);
  }
  return Polynomial::from_terms(f.ring(), std::move(q));
}

Ideal quotient(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_as(*b.ring())) throw ContextError("ideals belong to different ring contexts");
  if (b.is_zero()) throw ArgumentError("quotient by the zero ideal");
  std::optional<Ideal> result;
  for (const auto& g : b.generators()) {
    if (a.contains(g)) continue;  // A : (g) = (1)
    Ideal principal(a.ring(), {g});
    Ideal meet = intersect(a, principal);
    std::vector<Polynomial> gens;
    for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, g));
    Ideal colon(a.ring(), std::move(gens));
    result = result ? intersect(*result, colon) : colon.canonical();
  }
  if (!result) return Ideal::unit(a.ring());
  return *result;
}

Saturation saturate(const Ideal& a, const Ideal& b) {
  if (b.is_zero()) throw ArgumentError("saturation by the zero ideal");
  Ideal current = a.canonical();
  int index = 0;
  for (;;) {
    Ideal next = quotient(current, b);
    if (current.contains(next)) return {current, index};
    current = next;
    ++index;
  }
}

Ideal eliminate(const Ideal& a, std::span<const std::size_t> variables) {
  const Ring& base = a.ring();
  if (variables.empty()) throw ArgumentError("no variables to eliminate");
  std::uint32_t mask = 0;
  for (std::size_t v : variables) {
    if (v >= base->num_vars()) throw ArgumentError("elimination variable out of range");
    mask |= 1u << v;
  }
  std::uint32_t all = base->num_vars() >= 32 ? ~0u : ((1u << base->num_vars()) - 1);
  if (mask == all) throw ArgumentError("cannot eliminate every variable");
  Ring ext = with_elimination_order(base, mask);
  auto same = identity_map(base->num_vars());
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.mapped(ext, same));
  auto gb = groebner_basis(gens, ext);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    if ((g.support() & mask) == 0) kept.push_back(g.mapped(base, same));
  }
  return Ideal(base, std::move(kept));
}

int max_independent_set_size(std::span<const std::uint32_t> supports, std::size_t num_vars) {
  for (std::uint32_t s : supports) {
    if (s == 0) return -1;  // a unit leading term
  }
  int best = 0;
  // depth-first search over variables with a size bound
  auto search = [&](auto&& self, std::size_t idx, std::uint32_t chosen, int size) -> void {
    if (size + static_cast<int>(num_vars - idx) <= best) return;
    if (idx == num_vars) {
      best = size;
      return;
    }
    std::uint32_t with = chosen | (1u << idx);
    bool ok = true;
    for (std::uint32_t s : supports) {
      if ((s & (1u << idx)) && (s & ~with) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) self(self, idx + 1, with, size + 1);
    self(self, idx + 1, chosen, size);
  };
  search(search, 0, 0u, 0);
  return best;
}

int krull_dim(const Ideal& a) {
  const auto& gb = a.groebner();
  if (gb.is_unit_ideal()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.elements()) supports.push_back(g.leading_monomial().support());
  return max_independent_set_size(supports, a.ring()->num_vars());
}

int height(const Ideal& a) {
  if (a.is_zero() || a.is_unit()) throw ArgumentError("height needs a proper nonzero ideal");
  return static_cast<int>(a.ring()->num_vars()) - krull_dim(a);
}

bool is_max_ideal_associated(const Ideal& a) {
  if (a.is_unit()) throw ArgumentError("associated primes of the unit ideal");
  // m ∈ Ass(R/A) iff A : m strictly contains A, i.e. the saturation index is positive
  Ideal colon = quotient(a, Ideal::maximal(a.ring()));
  return !a.contains(colon);
}

namespace {

using Row = std::vector<long long>;  // coefficients..., rhs; meaning coeffs·λ <= rhs

long long gcd_ll(long long x, long long y) {
  x = x < 0 ? -x : x;
  y = y < 0 ? -y : y;
  while (y) {
    long long t = x % y;
    x = y;
    y = t;
  }
  return x;
}

void normalize(Row& r) {
  long long g = 0;
  for (long long v : r) g = gcd_ll(g, v);
  if (g > 1) {
    for (auto& v : r) v /= g;
  }
}

long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw ArgumentError("Newton polyhedron test overflowed");
  return static_cast<long long>(v);
}

}  // namespace

bool in_newton_polyhedron(std::span<const std::vector<int>> points, std::span<const int> target) {
  if (points.empty()) return false;
  const std::size_t n = target.size();
  const std::size_t k = points.size();
  if (k == 1) {
    for (std::size_t j = 0; j < n; ++j) {
      if (points[0][j] > target[j]) return false;
    }
    return true;
  }
  // λ_k = 1 - Σ_{i<k} λ_i; unknowns λ_1..λ_{k-1}
  const std::size_t m = k - 1;
  const auto& last = points[k - 1];
  std::vector<Row> rows;
  for (std::size_t i = 0; i < m; ++i) {
    Row r(m + 1, 0);
    r[i] = -1;
    rows.push_back(r);
  }
  {
    Row r(m + 1, 1);
    rows.push_back(r);  // Σ λ_i <= 1
  }
  for (std::size_t j = 0; j < n; ++j) {
    Row r(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) r[i] = points[i][j] - last[j];
    r[m] = target[j] - last[j];
    rows.push_back(r);
  }
  // Fourier–Motzkin elimination
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r[v] > 0) {
        pos.push_back(r);
      } else if (r[v] < 0) {
        neg.push_back(r);
      } else {
        next.push_back(r);
      }
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Row c(m + 1, 0);
        for (std::size_t t = 0; t <= m; ++t) {
          c[t] = checked(static_cast<__int128>(-q[v]) * p[t] + static_cast<__int128>(p[v]) * q[t]);
        }
        normalize(c);
        next.push_back(std::move(c));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rows = std::move(next);
  }
  return std::all_of(rows.begin(), rows.end(), [m](const Row& r) { return r[m] >= 0; });
}

Ideal monomial_integral_closure(const Ideal& a) {
  const Ring& ring = a.ring();
  if (!a.is_monomial()) throw ArgumentError("integral closure is only implemented for monomial ideals");
  if (a.generators().empty()) return Ideal::zero(ring);
  const std::size_t n = ring->num_vars();
  std::vector<std::vector<int>> points;
  std::vector<int> box(n, 0);
  for (const auto& g : a.generators()) {
    std::vector<int> e(n);
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = g.leading_monomial()[j];
      box[j] = std::max(box[j], e[j]);
    }
    points.push_back(std::move(e));
  }
  // any minimal generator of the closure lies inside the componentwise-max box
  std::vector<Monomial> members;
  std::vector<int> cur(n, 0);
  for (;;) {
    if (in_newton_polyhedron(points, cur)) members.push_back(Monomial::from_exponents(cur));
    std::size_t j = 0;
    while (j < n && cur[j] == box[j]) cur[j++] = 0;
    if (j == n) break;
    ++cur[j];
  }
  std::vector<Polynomial> gens;
  for (const auto& mono : members) {
    bool minimal = std::none_of(members.begin(), members.end(), [&](const Monomial& other) {
      return !(other == mono) && other.divides(mono);
    });
    if (minimal) gens.push_back(Polynomial::monomial(ring, mono));
  }
  return Ideal(ring, std::move(gens)).canonical();
}

}  // namespace spreadlab
