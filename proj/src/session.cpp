#include "spreadlab/session.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "spreadlab/errors.hpp"
#include "spreadlab/parse.hpp"

namespace spreadlab {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& s, int line, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      s.size() > 9) {
    fail(line, std::string("bad ") + what + " '" + s + "'");
  }
  return std::stoi(s);
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

}  // namespace

Session parse_session(std::string_view text) {
  Session s;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    auto space = line.find_first_of(" \t");
    std::string keyword = line.substr(0, space);
    std::string rest = space == std::string::npos ? "" : trim(line.substr(space));

    if (keyword == "ring") {
      if (s.ring_) fail(line_no, "second ring declaration");
      std::map<std::string, std::string> kv;
      std::istringstream fields(rest);
      std::string field;
      while (fields >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) fail(line_no, "expected key=value, got '" + field + "'");
        std::string key = field.substr(0, eq);
        if (key != "p" && key != "vars" && key != "order" && key != "weights") fail(line_no, "unknown ring key '" + key + "'");
        if (kv.count(key)) fail(line_no, "repeated ring key '" + key + "'");
        kv[key] = field.substr(eq + 1);
      }
      if (!kv.count("vars")) fail(line_no, "ring needs vars=");
      std::uint32_t p = kDefaultPrime;
      if (kv.count("p")) {
        const auto& ps = kv["p"];
        if (ps.empty() || ps.size() > 10 || !std::all_of(ps.begin(), ps.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          fail(line_no, "bad prime '" + ps + "'");
        }
        std::uint64_t v = std::stoull(ps);
        if (v > 0xffffffffull) fail(line_no, "prime too large");
        p = static_cast<std::uint32_t>(v);
      }
      auto vars = split(kv["vars"], ',');
      for (const auto& v : vars) {
        if (!is_identifier(v)) fail(line_no, "bad variable name '" + v + "'");
      }
      std::vector<int> weights;
      if (kv.count("weights")) {
        for (const auto& w : split(kv["weights"], ',')) weights.push_back(parse_int(w, line_no, "weight"));
      }
      std::string order = kv.count("order") ? kv["order"] : "grevlex";
      MonomialOrder mo = MonomialOrder::grevlex();
      if (order == "lex") {
        mo = MonomialOrder::lex();
      } else if (order == "wgrevlex") {
        mo = MonomialOrder::weighted_grevlex(weights.empty() ? std::vector<int>(vars.size(), 1) : weights);
      } else if (order != "grevlex") {
        fail(line_no, "unknown order '" + order + "'");
      }
      s.ring_ = RingContext::make(p, vars, mo, weights);
      continue;
    }

    if (!s.ring_) fail(line_no, "the ring declaration must come first");
    auto eq = rest.find('=');
    if (eq == std::string::npos) fail(line_no, "expected '" + keyword + " NAME = ...'");
    std::string name = trim(rest.substr(0, eq));
    std::string body = trim(rest.substr(eq + 1));
    if (!is_identifier(name)) fail(line_no, "bad name '" + name + "'");
    bool taken = std::any_of(s.ideals_.begin(), s.ideals_.end(), [&](const auto& e) { return e.first == name; }) ||
                 std::any_of(s.filtrations_.begin(), s.filtrations_.end(), [&](const auto& e) { return e.first == name; });
    if (taken) fail(line_no, "name '" + name + "' defined twice");

    if (keyword == "ideal") {
      if (body.empty()) fail(line_no, "ideal needs at least one generator");
      try {
        s.ideals_.emplace_back(name, Ideal(s.ring_, parse_polynomial_list(body, s.ring_)));
      } catch (const ParseError& e) {
        fail(line_no, e.what());
      }
    } else if (keyword == "filtration") {
      auto parts = split(body, ':');
      FiltrationSpec spec{FiltrationSpec::Kind::TrivialMaximal, "", ""};
      if (parts[0] == "trivial-m" && parts.size() == 1) {
        // nothing else to read
      } else if (parts[0] == "adic" && parts.size() == 2) {
        spec = {FiltrationSpec::Kind::Adic, parts[1], ""};
      } else if (parts[0] == "symbolic" && (parts.size() == 2 || parts.size() == 3)) {
        spec = {FiltrationSpec::Kind::Symbolic, parts[1], parts.size() == 3 ? parts[2] : ""};
      } else {
        fail(line_no, "filtration must be adic:I, symbolic:I[:J] or trivial-m");
      }
      for (const auto* ref : {&spec.ideal, &spec.along}) {
        if (ref->empty()) continue;
        if (!s.has_ideal(*ref)) fail(line_no, "unknown ideal '" + *ref + "'");
      }
      s.filtrations_.emplace_back(name, spec);
    } else {
      fail(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!s.ring_) throw ParseError("session has no ring declaration");
  return s;
}

Session load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open session file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str());
}

bool Session::has_ideal(const std::string& name) const {
  if (name == "m") return true;
  return std::any_of(ideals_.begin(), ideals_.end(), [&](const auto& e) { return e.first == name; });
}

Ideal Session::ideal(const std::string& name) const {
  for (const auto& [n, ideal] : ideals_) {
    if (n == name) return ideal;
  }
  if (name == "m") return Ideal::maximal(ring_);
  throw ArgumentError("no ideal named '" + name + "'");
}

Filtration Session::filtration(const std::string& name) const {
  for (const auto& [n, spec] : filtrations_) {
    if (n != name) continue;
    switch (spec.kind) {
      case FiltrationSpec::Kind::Adic: return Filtration::adic(ideal(spec.ideal));
      case FiltrationSpec::Kind::Symbolic:
        return Filtration::symbolic(ideal(spec.ideal),
                                    spec.along.empty() ? std::nullopt : std::optional<Ideal>(ideal(spec.along)));
      case FiltrationSpec::Kind::TrivialMaximal: return Filtration::trivial_maximal(ring_);
    }
  }
  throw ArgumentError("no filtration named '" + name + "'");
}

std::string Session::serialize() const {
  std::ostringstream os;
  std::vector<std::string> w;
  for (int x : ring_->weights()) w.push_back(std::to_string(x));
  std::string order = ring_->order().kind() == MonomialOrder::Kind::Lex ? "lex"
                      : ring_->order().kind() == MonomialOrder::Kind::WeightedGrevlex ? "wgrevlex"
                                                                                       : "grevlex";
  os << "ring p=" << ring_->characteristic() << " vars=" << join(ring_->variables(), ",") << " order=" << order
     << " weights=" << join(w, ",") << "\n";
  for (const auto& [name, ideal] : ideals_) {
    std::vector<std::string> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
    os << "ideal " << name << " = " << (gens.empty() ? "0" : join(gens, ", ")) << "\n";
  }
  for (const auto& [name, spec] : filtrations_) {
    os << "filtration " << name << " = ";
    switch (spec.kind) {
      case FiltrationSpec::Kind::Adic: os << "adic:" << spec.ideal; break;
      case FiltrationSpec::Kind::Symbolic:
        os << "symbolic:" << spec.ideal;
        if (!spec.along.empty()) os << ":" << spec.along;
        break;
      case FiltrationSpec::Kind::TrivialMaximal: os << "trivial-m"; break;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace spreadlab
