#include "spreadlab/parse.hpp"

#include <cctype>
#include <string>

#include "spreadlab/errors.hpp"

namespace spreadlab {

namespace {

// expr   := ['-'|'+'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ['^' integer]
// base   := integer | identifier | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at column " +
                     std::to_string(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      b = b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      // reduce digit by digit so arbitrarily long literals stay exact mod p
      const auto& field = ring_->field();
      Coeff v = 0;
      for (std::size_t i = start; i < pos_; ++i) {
        v = field.fma(v, 10, static_cast<Coeff>(text_[i] - '0'));
      }
      return Polynomial::monomial(ring_, Monomial{}, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return Parser(text, ring).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const Ring& ring) {
  std::vector<Polynomial> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t") == std::string_view::npos) {
        throw ParseError("empty entry in polynomial list '" + std::string(text) + "'");
      }
      out.push_back(parse_polynomial(piece, ring));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace spreadlab
