#include "spreadlab/filtration.hpp"

#include <sstream>

#include "spreadlab/errors.hpp"

namespace spreadlab {

namespace {

void check_proper_nonzero(const Ideal& j, const char* what) {
  if (j.is_zero() || j.is_unit()) throw ArgumentError(std::string(what) + " must be proper and nonzero");
}

}  // namespace

Filtration Filtration::adic(Ideal base) {
  auto s = std::make_shared<State>();
  s->kind = Kind::Adic;
  s->ring = base.ring();
  s->base = std::move(base);
  return Filtration(std::move(s));
}

Filtration Filtration::symbolic(Ideal base, std::optional<Ideal> along) {
  if (base.is_unit()) throw ArgumentError("symbolic powers of the unit ideal");
  if (!along) along = Ideal::maximal(base.ring());
  if (!along->ring()->same_as(*base.ring())) throw ContextError("saturating ideal in another ring");
  check_proper_nonzero(*along, "saturating ideal");
  auto s = std::make_shared<State>();
  s->kind = Kind::Symbolic;
  s->ring = base.ring();
  s->base = std::move(base);
  s->along = std::move(along);
  return Filtration(std::move(s));
}

Filtration Filtration::truncated(std::vector<Ideal> members) {
  if (members.empty()) throw ArgumentError("truncated filtration needs at least one member");
  const Ring ring = members.front().ring();
  for (auto& m : members) {
    if (!m.ring()->same_as(*ring)) throw ContextError("filtration members in different rings");
    m = m.canonical();
  }
  const int a = static_cast<int>(members.size());
  for (int i = 1; i < a; ++i) {
    if (!members[i - 1].contains(members[i])) {
      throw ValidationError("filtration members are not descending at n = " + std::to_string(i + 1));
    }
  }
  for (int i = 1; i <= a; ++i) {
    for (int j = i; i + j <= a; ++j) {
      if (!members[i + j - 1].contains(product(members[i - 1], members[j - 1]))) {
        throw ValidationError("I_" + std::to_string(i) + "·I_" + std::to_string(j) +
                              " is not contained in I_" + std::to_string(i + j));
      }
    }
  }
  auto s = std::make_shared<State>();
  s->kind = Kind::Truncated;
  s->ring = ring;
  s->members = std::move(members);
  return Filtration(std::move(s));
}

Filtration Filtration::trivial_maximal(Ring ring) {
  auto s = std::make_shared<State>();
  s->kind = Kind::TrivialMaximal;
  s->ring = std::move(ring);
  return Filtration(std::move(s));
}

Ideal Filtration::materialize(int n) const {
  if (n < 0) throw ArgumentError("negative filtration index");
  if (n == 0) return Ideal::unit(state_->ring);
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->cache.find(n);
    if (it != state_->cache.end()) return it->second;
  }
  // computed outside the lock; a racing duplicate produces the same ideal
  Ideal value = compute(n).canonical();
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->cache.emplace(n, std::move(value)).first->second;
}

Ideal Filtration::ordinary_power(int n) const {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->powers.find(n);
    if (it != state_->powers.end()) return it->second;
  }
  Ideal value = n == 1 ? state_->base->canonical()
                       : product(ordinary_power(n - 1), *state_->base).canonical();
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->powers.emplace(n, std::move(value)).first->second;
}

Ideal Filtration::compute(int n) const {
  switch (state_->kind) {
    case Kind::Adic:
      return n == 1 ? *state_->base : product(materialize(n - 1), *state_->base);
    case Kind::Symbolic:
      return saturate(ordinary_power(n), *state_->along).ideal;
    case Kind::TrivialMaximal:
      return Ideal::maximal(state_->ring);
    case Kind::Truncated: {
      const int a = truncation_level();
      if (n <= a) return state_->members[n - 1];
      // Σ_{i+j=n} I_i I_j; every partition of n into parts ≤ a is reached
      // through this recursion, so it equals the sum over partitions
      std::optional<Ideal> acc;
      for (int i = 1; 2 * i <= n; ++i) {
        Ideal term = product(materialize(i), materialize(n - i));
        acc = acc ? sum(*acc, term) : term;
      }
      return *acc;
    }
  }
  throw ArgumentError("unknown filtration kind");
}

Filtration Filtration::truncate(int a) const {
  if (a < 1) throw ArgumentError("truncation level must be at least 1");
  std::vector<Ideal> members;
  for (int n = 1; n <= a; ++n) members.push_back(materialize(n));
  // members of a genuine filtration already satisfy the axioms
  auto s = std::make_shared<State>();
  s->kind = Kind::Truncated;
  s->ring = state_->ring;
  s->members = std::move(members);
  return Filtration(std::move(s));
}

std::string Filtration::describe() const {
  std::ostringstream os;
  switch (state_->kind) {
    case Kind::Adic:
      os << "adic:" << state_->base->to_string();
      break;
    case Kind::Symbolic:
      os << "symbolic:" << state_->base->to_string() << ":" << state_->along->to_string();
      break;
    case Kind::TrivialMaximal:
      os << "trivial-m";
      break;
    case Kind::Truncated:
      os << "truncated:" << truncation_level();
      break;
  }
  return os.str();
}

Ideal symbolic_power(const Ideal& base, int n, std::optional<Ideal> along) {
  if (n < 1) throw ArgumentError("symbolic power index must be at least 1");
  if (base.is_unit()) throw ArgumentError("symbolic powers of the unit ideal");
  if (!along) along = Ideal::maximal(base.ring());
  if (!along->ring()->same_as(*base.ring())) throw ContextError("saturating ideal in another ring");
  check_proper_nonzero(*along, "saturating ideal");
  return saturate(power(base, n), *along).ideal;
}

}  // namespace spreadlab
