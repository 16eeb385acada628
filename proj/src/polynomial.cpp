#include "spreadlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "spreadlab/errors.hpp"

namespace spreadlab {

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  Polynomial out(std::move(ring));
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = field.add(out.terms_.back().coeff, t.coeff);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  Coeff v = ring->field().from_int(c);
  Polynomial out(std::move(ring));
  if (v != 0) out.terms_.push_back({Monomial{}, v});
  return out;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->num_vars()) throw ArgumentError("variable index out of range");
  Polynomial out(std::move(ring));
  out.terms_.push_back({Monomial::variable(index), 1});
  return out;
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, Coeff c) {
  Polynomial out(std::move(ring));
  if (c != 0) out.terms_.push_back({m, c});
  return out;
}

void Polynomial::check_ring(const Polynomial& g) const {
  if (ring_ != g.ring_ && !ring_->same_as(*g.ring_)) {
    throw ContextError("polynomials belong to different ring contexts");
  }
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_ring(g);
  return minus_term_times(ring_->field().neg(1), Monomial{}, g);
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  check_ring(g);
  return minus_term_times(1, Monomial{}, g);
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::minus_term_times(Coeff c, const Monomial& m, const Polynomial& g) const {
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  Polynomial out(ring_);
  if (c == 0 || g.is_zero()) {
    out.terms_ = terms_;
    return out;
  }
  Coeff negc = field.neg(c);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const bool shift = !m.is_one();
  while (i < terms_.size() && j < g.terms_.size()) {
    Monomial gm = shift ? g.terms_[j].mono * m : g.terms_[j].mono;
    int cmp = order.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({gm, field.mul(negc, g.terms_[j].coeff)});
      ++j;
    } else {
      Coeff v = field.fma(negc, g.terms_[j].coeff, terms_[i].coeff);
      if (v != 0) out.terms_.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) {
    Monomial gm = shift ? g.terms_[j].mono * m : g.terms_[j].mono;
    out.terms_.push_back({gm, field.mul(negc, g.terms_[j].coeff)});
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_ring(g);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  const auto& field = ring_->field();
  std::vector<Term> prods;
  prods.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) prods.push_back({a.mono * b.mono, field.mul(a.coeff, b.coeff)});
  }
  return from_terms(ring_, std::move(prods));
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw ArgumentError("negative polynomial power");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

std::optional<long> Polynomial::weighted_degree(std::span<const int> weights) const {
  if (is_zero()) throw DegenerateInputError("weighted degree of the zero polynomial is undefined");
  long d = terms_.front().mono.weighted_degree(weights);
  for (const auto& t : terms_) {
    if (t.mono.weighted_degree(weights) != d) return std::nullopt;
  }
  return d;
}

std::optional<long> weighted_degree_check(const Polynomial& f, std::span<const int> weights) {
  return f.weighted_degree(weights);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::uint32_t Polynomial::support() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) mask |= t.mono.support();
  return mask;
}

Coeff Polynomial::evaluate(std::span<const Coeff> point) const {
  const auto& field = ring_->field();
  Coeff acc = 0;
  for (const auto& t : terms_) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
      if (t.mono[i] != 0) v = field.mul(v, field.pow(point[i], t.mono[i]));
    }
    acc = field.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::mapped(const Ring& target, std::span<const std::size_t> var_map) const {
  if (target->characteristic() != ring_->characteristic()) {
    throw ContextError("cannot map between rings of different characteristic");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map[i] >= target->num_vars()) throw ContextError("variable has no image in target ring");
      m[var_map[i]] = static_cast<Exponent>(m[var_map[i]] + t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  const auto& field = ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = field.symmetric(t.coeff);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (wrote) os << "*";
      os << ring_->variable_name(i);
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      wrote = true;
    }
  }
  return os.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!ring_->same_as(*other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial derivative(const Polynomial& f, std::size_t index) {
  if (index >= f.ring()->num_vars()) throw ArgumentError("variable index out of range");
  const auto& field = f.ring()->field();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    int e = t.mono[index];
    if (e == 0) continue;
    Coeff c = field.mul(t.coeff, field.from_int(e));
    if (c == 0) continue;
    Monomial m = t.mono;
    m[index] = static_cast<Exponent>(e - 1);
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

}  // namespace spreadlab
