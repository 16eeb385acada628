#include "spreadlab/spread.hpp"

#include <algorithm>
#include <set>

#include "spreadlab/errors.hpp"

namespace spreadlab {

namespace {

std::string fresh_name(const std::string& stem, const std::set<std::string>& taken) {
  std::string name = stem;
  while (taken.count(name)) name = "_" + name;
  return name;
}

}  // namespace

ReesPresentation rees_presentation(const Filtration& filtration, int a) {
  if (a < 1) throw ArgumentError("presentation level must be at least 1");
  const Ring& base = filtration.ring();
  std::vector<Ideal> members;
  for (int n = 1; n <= a; ++n) {
    Ideal member = filtration.materialize(n);
    if (!member.is_weighted_homogeneous()) {
      throw ValidationError("filtration member I_" + std::to_string(n) +
                            " is not homogeneous for the ring weights");
    }
    members.push_back(std::move(member));
  }
  if (members[0].is_zero() || members[0].is_unit()) {
    throw ArgumentError("I_1 must be a proper nonzero ideal");
  }

  // generators: minimal modulo the products of lower members
  std::vector<ReesGenerator> generators;
  std::set<std::string> taken(base->variables().begin(), base->variables().end());
  for (int n = 1; n <= a; ++n) {
    Ideal lower = Ideal::zero(base);
    for (int i = 1; 2 * i <= n; ++i) lower = sum(lower, product(members[i - 1], members[n - i - 1]));
    int j = 0;
    for (auto& f : members[n - 1].minimal_generators_modulo(lower)) {
      ++j;
      std::string name = fresh_name("T" + std::to_string(n) + "_" + std::to_string(j), taken);
      taken.insert(name);
      generators.push_back({n, std::move(f), name});
    }
  }

  const std::size_t nx = base->num_vars();
  const std::size_t nt = generators.size();
  if (1 + nx + nt > kMaxVariables) {
    throw ArgumentError("presentation needs " + std::to_string(1 + nx + nt) +
                        " variables; at most " + std::to_string(kMaxVariables) + " are supported");
  }
  std::vector<std::string> names = base->variables();
  std::vector<int> weights = base->weights();
  std::vector<std::string> fiber_names;
  std::vector<int> fiber_weights;
  for (const auto& g : generators) {
    names.push_back(g.variable);
    weights.push_back(static_cast<int>(*g.element.weighted_degree()) + g.degree);
    fiber_names.push_back(g.variable);
    fiber_weights.push_back(g.degree);
  }
  const auto p = base->characteristic();
  Ring combined = RingContext::make(p, names, MonomialOrder::weighted_grevlex(weights), weights);
  Ring extended = prepend_elimination_variables(combined, {fresh_name("t", taken)});
  Ring fiber = RingContext::make(p, fiber_names, MonomialOrder::weighted_grevlex(fiber_weights),
                                 fiber_weights);

  std::vector<std::size_t> up(nx);
  for (std::size_t i = 0; i < nx; ++i) up[i] = i + 1;
  Polynomial t = Polynomial::variable(extended, 0);
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < nt; ++k) {
    const auto& g = generators[k];
    gens.push_back(Polynomial::variable(extended, 1 + nx + k) - g.element.mapped(extended, up) * t.pow(g.degree));
  }
  auto gb = groebner_basis(gens, extended);
  std::vector<std::size_t> down(extended->num_vars(), 0);
  for (std::size_t i = 1; i < extended->num_vars(); ++i) down[i] = i - 1;
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    if ((g.support() & 1u) == 0) kept.push_back(g.mapped(combined, down));
  }
  // the t-free part of a reduced block-order basis is the reduced basis of Q
  Ideal kernel = Ideal::from_basis(GroebnerBasis(combined, std::move(kept)));

  std::vector<std::size_t> xs(nx);
  for (std::size_t i = 0; i < nx; ++i) xs[i] = i;
  std::vector<Polynomial> with_x = kernel.generators();
  for (std::size_t i = 0; i < nx; ++i) with_x.push_back(Polynomial::variable(combined, i));
  Ideal contracted = eliminate(Ideal(combined, std::move(with_x)), xs);
  std::vector<std::size_t> to_fiber(combined->num_vars(), 0);
  for (std::size_t k = 0; k < nt; ++k) to_fiber[nx + k] = k;
  std::vector<Polynomial> fiber_gens;
  for (const auto& g : contracted.generators()) fiber_gens.push_back(g.mapped(fiber, to_fiber));
  Ideal fiber_kernel = Ideal(fiber, std::move(fiber_gens)).canonical();

  return ReesPresentation{base,      extended, combined,         fiber, a, std::move(generators),
                          std::move(kernel), std::move(fiber_kernel)};
}

Polynomial rees_evaluate(const ReesPresentation& pres, const Polynomial& q) {
  if (!q.ring()->same_as(*pres.combined_ring)) throw ContextError("element outside the presentation ring");
  const Ring& ext = pres.extended_ring;
  const std::size_t nx = pres.base_ring->num_vars();
  std::vector<std::size_t> up(nx);
  for (std::size_t i = 0; i < nx; ++i) up[i] = i + 1;
  Polynomial t = Polynomial::variable(ext, 0);
  std::vector<Polynomial> images;
  for (const auto& g : pres.generators) images.push_back(g.element.mapped(ext, up) * t.pow(g.degree));

  Polynomial out(ext);
  for (const auto& term : q.terms()) {
    Monomial xpart;
    for (std::size_t i = 0; i < nx; ++i) xpart = xpart * Monomial::variable(i + 1, term.mono[i]);
    Polynomial piece = Polynomial::monomial(ext, xpart, term.coeff);
    for (std::size_t k = 0; k < images.size(); ++k) {
      int e = term.mono[nx + k];
      if (e) piece = piece * images[k].pow(e);
    }
    out += piece;
  }
  return out;
}

namespace {

void check_spread_input(const Ideal& ideal) {
  if (ideal.is_zero()) throw ArgumentError("analytic spread of the zero ideal");
  if (ideal.is_unit()) throw ArgumentError("analytic spread of the unit ideal");
  if (!ideal.is_weighted_homogeneous()) {
    throw ValidationError("ideal is not homogeneous for the ring weights");
  }
}

}  // namespace

SpreadReport analytic_spread(const Ideal& ideal) {
  check_spread_input(ideal);
  auto pres = rees_presentation(Filtration::adic(ideal), 1);
  int ell = krull_dim(pres.fiber_kernel);
  int ht = height(ideal);
  int n = static_cast<int>(ideal.ring()->num_vars());
  return SpreadReport{ell, ht, n, ht <= ell && ell <= n, std::move(pres), std::nullopt, 0, {}};
}

SpreadReport analytic_spread_truncated(const Filtration& filtration, int a, int witness_bound) {
  if (a < 1) throw ArgumentError("truncation level must be at least 1");
  if (witness_bound < 0) throw ArgumentError("negative witness bound");
  if (witness_bound == 0) witness_bound = 3 * a;
  Filtration trunc = filtration.truncate(a);
  Ideal first = trunc.materialize(1);
  check_spread_input(first);
  auto pres = rees_presentation(trunc, a);
  int ell = krull_dim(pres.fiber_kernel);
  int ht = height(first);
  int n = static_cast<int>(filtration.ring()->num_vars());
  SpreadReport report{ell, ht, n, ht <= ell && ell <= n, std::move(pres), std::nullopt, witness_bound, {}};
  for (int e = 1; e <= witness_bound; ++e) {
    if (analytic_spread(trunc.materialize(e)).ell == ell) {
      report.witness = e;
      break;
    }
  }
  if (!report.witness) {
    report.notes.push_back("no e <= " + std::to_string(witness_bound) + " with l(I_{a,e}) = l");
  }
  return report;
}

EquimultipleResult equimultiple_check(const Ideal& ideal) {
  auto r = analytic_spread(ideal);
  return {r.height == r.ell, r.height, r.ell};
}

std::optional<int> sp0_witness(const Filtration& filtration, int n, const Polynomial& f, int max_power) {
  if (n < 1) throw ArgumentError("filtration level must be at least 1");
  if (max_power < 1) throw ArgumentError("power bound must be at least 1");
  if (!f.ring()->same_as(*filtration.ring())) throw ContextError("element outside the filtration's ring");
  if (f.is_zero()) return 1;
  if (!filtration.materialize(n).contains(f)) {
    throw PreconditionError("element is not in I_" + std::to_string(n));
  }
  const Ideal m = Ideal::maximal(filtration.ring());
  Polynomial fm = f;
  for (int k = 1; k <= max_power; ++k) {
    if (k > 1) fm = fm * f;
    if (product(m, filtration.materialize(k * n)).contains(fm)) return k;
  }
  return std::nullopt;
}

FingenReport fingen_probe(const Ideal& ideal, const Ideal& along, int max_level, int max_degree) {
  if (max_level < 1 || max_degree < 1) throw ArgumentError("probe bounds must be at least 1");
  if (max_degree < max_level) throw ArgumentError("probe needs N >= A");
  Filtration sym = Filtration::symbolic(ideal, along);
  const int nvars = static_cast<int>(ideal.ring()->num_vars());
  Ideal first = sym.materialize(1);
  check_spread_input(first);

  FingenReport report;
  report.max_level = max_level;
  report.max_degree = max_degree;
  report.num_vars = nvars;
  report.height = height(first);
  report.some_ell_below_dim = false;
  report.all_ell_equal_dim = true;
  for (int a = 1; a <= max_level; ++a) {
    Filtration trunc = sym.truncate(a);
    TruncationProbe row{a, true, std::nullopt, 0, std::nullopt, 0};
    for (int n = a + 1; n <= max_degree; ++n) {
      if (!ideal_equal(sym.materialize(n), trunc.materialize(n))) {
        row.stabilized = false;
        row.first_mismatch = n;
        break;
      }
    }
    auto spread = analytic_spread_truncated(sym, a);
    row.ell = spread.ell;
    row.witness = spread.witness;
    row.witness_bound = spread.witness_bound;
    if (row.ell < nvars) report.some_ell_below_dim = true;
    if (row.ell != nvars) report.all_ell_equal_dim = false;
    if (row.stabilized && !report.generation_degree) report.generation_degree = a;
    report.truncations.push_back(row);
  }
  for (int n = 1; n <= max_level; ++n) {
    int ell = analytic_spread(sym.materialize(n)).ell;
    report.symbolic_spreads.push_back({n, ell, ell < nvars});
  }
  report.label = "evidence up to bound a = " + std::to_string(max_level) + ", n = " +
                 std::to_string(max_degree);
  return report;
}

}  // namespace spreadlab
