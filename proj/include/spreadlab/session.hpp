#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spreadlab/filtration.hpp"

namespace spreadlab {

struct FiltrationSpec {
  enum class Kind { Adic, Symbolic, TrivialMaximal };
  Kind kind;
  std::string ideal;  ///< empty for trivial-m
  std::string along;  ///< symbolic only; empty means the maximal ideal
};

/// Parsed session file:
///
///   ring p=32003 vars=x,y,z order=grevlex weights=3,4,5
///   ideal p = y^2 - x*z, x^3 - y*z, x^2*y - z^2
///   filtration S = symbolic:p
///
/// `#` starts a comment. The name `m` refers to (x_1..x_n) unless the file
/// defines its own ideal called m.
class Session {
 public:
  const Ring& ring() const { return ring_; }
  const std::vector<std::pair<std::string, Ideal>>& ideals() const { return ideals_; }
  const std::vector<std::pair<std::string, FiltrationSpec>>& filtrations() const { return filtrations_; }

  /// Throws ArgumentError for unknown names.
  Ideal ideal(const std::string& name) const;
  Filtration filtration(const std::string& name) const;
  bool has_ideal(const std::string& name) const;

  /// Canonical text: fixed key order, one space around '=', generators
  /// printed in the ring's term order. Parsing it back gives the same session.
  std::string serialize() const;

 private:
  friend Session parse_session(std::string_view text);
  Ring ring_;
  std::vector<std::pair<std::string, Ideal>> ideals_;
  std::vector<std::pair<std::string, FiltrationSpec>> filtrations_;
};

/// Throws ParseError (with a line number) on malformed input and
/// ArgumentError on an invalid ring declaration.
Session parse_session(std::string_view text);
Session load_session(const std::string& path);

}  // namespace spreadlab
