#include "spreadlab/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "spreadlab/errors.hpp"
#include "spreadlab/fatpoints.hpp"
#include "spreadlab/filtration.hpp"
#include "spreadlab/parse.hpp"
#include "spreadlab/session.hpp"
#include "spreadlab/spread.hpp"

namespace spreadlab::cli {

using Json = nlohmann::ordered_json;

std::string digest(std::string_view canonical_input) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical_input) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

const char* kEllipticNote =
    "elliptic results are only claimed for m <= 3: over F_p the restricted divisor class has finite order";

struct Args {
  std::string file;
  std::string ideal;
  std::string other;
  std::string filtration;
  std::string poly;
  int n = 1;
  int level = 1;
  int witness_bound = 0;
  int max_power = 1;
  int max_level = 1;
  int max_degree = 1;

  // fatpoints
  std::size_t r = 0;
  std::vector<int> mult;
  int d = 0;
  int s = 4;
  int dmax = 0;
  int nmax = 0;
  std::uint64_t seed = 0;
  bool elliptic = false;
  std::uint32_t p = kDefaultPrime;
};

Json string_list(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

Json basis_of(const Ideal& ideal) { return string_list(ideal.groebner().elements()); }

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

class Command {
 public:
  Command(std::string operation, const Args& args) : operation_(std::move(operation)), args_(args) {}

  // Loads the session and records the canonical input: the command's own
  // parameters followed by the re-serialized session.
  const Session& session() {
    if (!session_) {
      session_ = load_session(args_.file);
      canonical_ += session_->serialize();
    }
    return *session_;
  }

  void param(const std::string& key, const std::string& value) { params_ += key + "=" + value + "\n"; }
  void param(const std::string& key, long long value) { param(key, std::to_string(value)); }

  Ideal ideal(const std::string& key, const std::string& name) {
    param(key, name);
    return session().ideal(name);
  }

  // Spread operations need every named ideal weighted-homogeneous.
  void require_homogeneous() {
    for (const auto& [name, ideal] : session().ideals()) {
      if (!ideal.is_weighted_homogeneous()) {
        throw ValidationError("ideal '" + name + "' is not homogeneous for the ring weights");
      }
    }
  }

  Json header(std::optional<std::uint64_t> seed = std::nullopt) const {
    Json j;
    j["schema"] = "1";
    j["operation"] = operation_;
    j["input_digest"] = digest("op=" + operation_ + "\n" + params_ + canonical_);
    if (seed) j["seed"] = *seed;
    return j;
  }

 private:
  std::string operation_;
  const Args& args_;
  std::optional<Session> session_;
  std::string params_;
  std::string canonical_;
};

Json run_algebra(const std::string& op, const Args& a) {
  Command cmd(op, a);
  if (op == "gb") {
    Ideal I = cmd.ideal("ideal", a.ideal);
    Json j = cmd.header();
    j["ideal"] = a.ideal;
    j["basis"] = basis_of(I);
    j["size"] = I.groebner().size();
    return j;
  }
  if (op == "nf") {
    Ideal I = cmd.ideal("ideal", a.ideal);
    Polynomial f = parse_polynomial(a.poly, cmd.session().ring());
    cmd.param("poly", f.to_string());
    Polynomial r = normal_form(f, I.groebner());
    Json j = cmd.header();
    j["ideal"] = a.ideal;
    j["poly"] = f.to_string();
    j["normal_form"] = r.to_string();
    j["member"] = r.is_zero();
    return j;
  }
  if (op == "dim" || op == "ht") {
    Ideal I = cmd.ideal("ideal", a.ideal);
    Json j = cmd.header();
    j["ideal"] = a.ideal;
    if (op == "dim") {
      j["dim"] = krull_dim(I);
    } else {
      j["ht"] = height(I);
    }
    return j;
  }
  if (op == "intersect" || op == "quotient" || op == "saturate") {
    Ideal A = cmd.ideal("ideal", a.ideal);
    Ideal B = cmd.ideal("other", a.other);
    Json j = cmd.header();
    j["ideal"] = a.ideal;
    j["other"] = a.other;
    if (op == "intersect") {
      j["generators"] = basis_of(intersect(A, B));
    } else if (op == "quotient") {
      j["generators"] = basis_of(quotient(A, B));
    } else {
      Saturation s = saturate(A, B);
      j["generators"] = basis_of(s.ideal);
      j["saturation_index"] = s.index;
    }
    return j;
  }
  if (op == "closure-monomial") {
    Ideal I = cmd.ideal("ideal", a.ideal);
    Ideal closure = monomial_integral_closure(I);
    Json j = cmd.header();
    j["ideal"] = a.ideal;
    j["generators"] = basis_of(closure);
    j["integrally_closed"] = ideal_equal(closure, I);
    return j;
  }
  if (op == "symbolic") {
    Ideal I = cmd.ideal("ideal", a.ideal);
    std::optional<Ideal> J;
    if (!a.other.empty()) J = cmd.ideal("along", a.other);
    cmd.param("n", a.n);
    Ideal S = symbolic_power(I, a.n, J);
    Json j = cmd.header();
    j["ideal"] = a.ideal;
    j["along"] = a.other.empty() ? "m" : a.other;
    j["n"] = a.n;
    j["generators"] = basis_of(S);
    j["strictly_contains_power"] = !ideal_equal(S, power(I, a.n));
    return j;
  }
  if (op == "ell" || op == "equimult") {
    Ideal I = cmd.ideal("ideal", a.ideal);
    cmd.require_homogeneous();
    SpreadReport rep = analytic_spread(I);
    Json j = cmd.header();
    j["ideal"] = a.ideal;
    j["ell"] = rep.ell;
    j["ht"] = rep.height;
    j["num_vars"] = rep.num_vars;
    j["equimultiple"] = rep.ell == rep.height;
    j["bounds_ok"] = rep.bounds_ok;
    return j;
  }
  if (op == "ell-trunc") {
    cmd.param("filtration", a.filtration);
    cmd.param("a", a.level);
    cmd.param("witness_bound", a.witness_bound);
    Filtration F = cmd.session().filtration(a.filtration);
    cmd.require_homogeneous();
    SpreadReport rep = analytic_spread_truncated(F, a.level, a.witness_bound);
    Json j = cmd.header();
    j["filtration"] = a.filtration;
    j["kind"] = F.describe();
    j["a"] = a.level;
    j["ell"] = rep.ell;
    j["ht"] = rep.height;
    j["num_vars"] = rep.num_vars;
    j["bounds_ok"] = rep.bounds_ok;
    j["witness"] = optional_int(rep.witness);
    j["witness_bound"] = rep.witness_bound;
    j["notes"] = rep.notes;
    return j;
  }
  if (op == "sp0") {
    cmd.param("filtration", a.filtration);
    Filtration F = cmd.session().filtration(a.filtration);
    cmd.require_homogeneous();
    Polynomial f = parse_polynomial(a.poly, cmd.session().ring());
    cmd.param("poly", f.to_string());
    cmd.param("n", a.n);
    cmd.param("max_power", a.max_power);
    auto w = sp0_witness(F, a.n, f, a.max_power);
    Json j = cmd.header();
    j["filtration"] = a.filtration;
    j["kind"] = F.describe();
    j["n"] = a.n;
    j["poly"] = f.to_string();
    j["max_power"] = a.max_power;
    j["witness"] = optional_int(w);
    return j;
  }
  if (op == "fingen-probe") {
    Ideal I = cmd.ideal("ideal", a.ideal);
    Ideal J = a.other.empty() ? Ideal::maximal(cmd.session().ring()) : cmd.ideal("along", a.other);
    cmd.param("max_level", a.max_level);
    cmd.param("max_degree", a.max_degree);
    cmd.require_homogeneous();
    FingenReport rep = fingen_probe(I, J, a.max_level, a.max_degree);
    Json j = cmd.header();
    j["ideal"] = a.ideal;
    j["along"] = a.other.empty() ? "m" : a.other;
    j["max_level"] = rep.max_level;
    j["max_degree"] = rep.max_degree;
    j["num_vars"] = rep.num_vars;
    j["ht"] = rep.height;
    Json rows = Json::array();
    bool bounds_ok = true;
    for (const auto& t : rep.truncations) {
      Json row;
      row["a"] = t.a;
      row["stabilized"] = t.stabilized;
      row["first_mismatch"] = optional_int(t.first_mismatch);
      row["ell"] = t.ell;
      row["witness"] = optional_int(t.witness);
      row["witness_bound"] = t.witness_bound;
      rows.push_back(row);
      bounds_ok = bounds_ok && rep.height <= t.ell && t.ell <= rep.num_vars;
    }
    j["truncations"] = rows;
    Json spreads = Json::array();
    for (const auto& s : rep.symbolic_spreads) {
      spreads.push_back(Json{{"n", s.n}, {"ell", s.ell}, {"below_dim", s.below_dim}});
    }
    j["symbolic_spreads"] = spreads;
    j["generation_degree"] = optional_int(rep.generation_degree);
    j["some_ell_below_dim"] = rep.some_ell_below_dim;
    j["all_ell_equal_dim"] = rep.all_ell_equal_dim;
    j["bounds_ok"] = bounds_ok;
    j["label"] = rep.label;
    return j;
  }
  throw std::logic_error("unhandled operation " + op);
}

Json run_fatpoints(const std::string& op, const Args& a) {
  FatPointScheme scheme = sample_scheme(a.r, a.mult, a.elliptic ? Constraint::Elliptic : Constraint::None, a.seed, a.p);
  std::string params = "op=fatpoints " + op + "\nr=" + std::to_string(a.r) + "\nm=";
  for (std::size_t i = 0; i < a.mult.size(); ++i) params += (i ? "," : "") + std::to_string(a.mult[i]);
  params += "\nelliptic=" + std::to_string(a.elliptic) + "\np=" + std::to_string(a.p) + "\nseed=" + std::to_string(a.seed);
  auto add = [&params](const char* key, int v) { params += std::string("\n") + key + "=" + std::to_string(v); };

  Json j;
  j["schema"] = "1";
  j["operation"] = "fatpoints " + op;
  j["input_digest"] = "";
  j["seed"] = a.seed;
  j["r"] = a.r;
  j["m"] = a.mult;
  j["elliptic"] = a.elliptic;
  j["p"] = a.p;

  if (op == "h0") {
    add("d", a.d);
    LinearSystem L = h0(scheme, a.d);
    j["d"] = a.d;
    j["h0"] = L.h0();
    j["monomials"] = L.monomials;
    j["conditions"] = L.conditions;
    j["rank"] = L.rank;
  } else if (op == "multmap") {
    add("d", a.d);
    MultMapResult res = mult_map_surjective(scheme, a.d);
    j["d"] = a.d;
    j["surjective"] = res.surjective;
    j["image_dim"] = res.image_dim;
    j["target_dim"] = res.target_dim;
  } else if (op == "contain") {
    add("n", a.n);
    add("s", a.s);
    add("dmax", a.dmax);
    ContainmentReport rep = graded_power_containment(scheme, a.n, a.s, a.dmax);
    j["n"] = rep.n;
    j["s"] = rep.s;
    j["dmax"] = rep.max_degree;
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
      rows.push_back(Json{{"degree", row.degree},
                          {"product_dim", row.product_dim},
                          {"target_dim", row.target_dim},
                          {"ambient_dim", row.ambient_dim},
                          {"contained", row.contained}});
    }
    j["rows"] = rows;
    j["empty"] = rep.empty;
    j["holds"] = rep.holds;
    if (rep.bottom_exception) j["bottom_exception"] = *rep.bottom_exception;
    j["failing_degrees"] = rep.failing_degrees;
  } else if (op == "census") {
    add("nmax", a.nmax);
    add("dmax", a.dmax);
    add("s", a.s);
    CensusReport rep = fiber_generator_census(scheme, a.nmax, a.dmax, a.s);
    j["nmax"] = rep.max_n;
    j["dmax"] = rep.max_degree;
    j["s"] = rep.s;
    Json pieces = Json::array();
    for (const auto& piece : rep.pieces) {
      pieces.push_back(Json{{"n", piece.n}, {"degree", piece.degree}, {"dim", piece.piece_dim}, {"dies", piece.dies}});
    }
    j["pieces"] = pieces;
    j["survivors"] = rep.survivors();
  }
  if (a.elliptic) j["notes"] = Json::array({kEllipticNote});
  j["input_digest"] = digest(params + "\n");
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"spreadlab: analytic spreads, symbolic powers and fat-point linear systems over F_p"};
  app.name("spreadlab");
  app.require_subcommand(1);
  Args a;
  std::map<std::string, CLI::App*> algebra;

  auto session_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("-f,--file", a.file, "session file")->required();
    algebra[name] = c;
    return c;
  };
  auto need_ideal = [&](CLI::App* c) { c->add_option("-i,--ideal", a.ideal, "ideal name")->required(); };

  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"gb", "reduced Groebner basis"},
           {"dim", "Krull dimension of R/I"},
           {"ht", "height of I"},
           {"closure-monomial", "integral closure of a monomial ideal"},
           {"ell", "analytic spread with height and bound check"},
           {"equimult", "equimultiplicity check"}}) {
    need_ideal(session_cmd(name, help));
  }
  {
    auto* c = session_cmd("nf", "normal form of a polynomial");
    need_ideal(c);
    c->add_option("--poly", a.poly, "polynomial")->required();
  }
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"intersect", "A intersected with B"}, {"quotient", "colon ideal A : B"}, {"saturate", "A : B^infinity"}}) {
    auto* c = session_cmd(name, help);
    need_ideal(c);
    c->add_option("-j,--other", a.other, "second ideal name")->required();
  }
  {
    auto* c = session_cmd("symbolic", "symbolic power I^n : J^infinity");
    need_ideal(c);
    c->add_option("-j,--along", a.other, "saturating ideal (default m)");
    c->add_option("-n", a.n, "power")->required();
  }
  {
    auto* c = session_cmd("ell-trunc", "analytic spread of a truncated filtration");
    c->add_option("-F,--filtration", a.filtration, "filtration name")->required();
    c->add_option("-a,--level", a.level, "truncation level")->required();
    c->add_option("-e,--witness-bound", a.witness_bound, "largest e searched for a witness (default 3a)");
  }
  {
    auto* c = session_cmd("sp0", "least m with f^m in m_R I_{mn}");
    c->add_option("-F,--filtration", a.filtration, "filtration name")->required();
    c->add_option("-n", a.n, "level of f")->required();
    c->add_option("--poly", a.poly, "element f of I_n")->required();
    c->add_option("-M,--max-power", a.max_power, "largest m tried")->required();
  }
  {
    auto* c = session_cmd("fingen-probe", "finite-generation evidence for the symbolic algebra");
    need_ideal(c);
    c->add_option("-j,--along", a.other, "saturating ideal (default m)");
    c->add_option("-A,--max-level", a.max_level, "largest truncation level")->required();
    c->add_option("-N,--max-degree", a.max_degree, "largest degree compared")->required();
  }

  CLI::App* fat = app.add_subcommand("fatpoints", "fat-point linear systems in P^2 over F_p");
  fat->require_subcommand(1);
  std::map<std::string, CLI::App*> fatcmds;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"h0", "dimension of the degree-d system"},
           {"multmap", "surjectivity of H0(O(1)) x L_{d-1} -> L_d"},
           {"contain", "graded containment (n-system)^s in m (sn-system)"},
           {"census", "which pieces die in the fiber"}}) {
    CLI::App* c = fat->add_subcommand(name, help);
    c->add_option("--r", a.r, "number of points")->required();
    c->add_option("--m", a.mult, "multiplicity, or one per point")->required()->delimiter(',');
    c->add_option("--seed", a.seed, "RNG seed")->required();
    c->add_flag("--elliptic", a.elliptic, "points on a random smooth cubic");
    c->add_option("--p", a.p, "field characteristic");
    fatcmds[name] = c;
  }
  fatcmds["h0"]->add_option("--d", a.d, "degree")->required();
  fatcmds["multmap"]->add_option("--d", a.d, "degree")->required();
  fatcmds["contain"]->add_option("--n", a.n, "system index n")->required();
  fatcmds["contain"]->add_option("--s", a.s, "power s (default 4)");
  fatcmds["contain"]->add_option("--dmax", a.dmax, "largest degree")->required();
  fatcmds["census"]->add_option("--nmax", a.nmax, "largest n")->required();
  fatcmds["census"]->add_option("--dmax", a.dmax, "largest degree")->required();
  fatcmds["census"]->add_option("--s", a.s, "power s (default 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  try {
    Json report;
    for (const auto& [name, c] : algebra) {
      if (c->parsed()) report = run_algebra(name, a);
    }
    for (const auto& [name, c] : fatcmds) {
      if (c->parsed()) report = run_fatpoints(name, a);
    }
    out << report.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace spreadlab::cli
