// Recursive-descent parser for ring elements.
//
//   sum    := [sign] term { sign term }
//   term   := factor { '*' factor }
//   factor := integer [ '/' integer ] | identifier [ '^' integer ]

#include <cctype>

#include "sncdp/chow_ring.hpp"

namespace sncdp {

namespace {

class TermParser {
 public:
  TermParser(const std::vector<VariableSpec>& variables, std::string_view text)
      : vars_(variables), text_(text) {}

  Terms parse() {
    Terms out;
    skip_space();
    if (at_end()) return out;
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [m, c] = term();
      c *= sign;
      if (c != 0) {
        auto [it, inserted] = out.emplace(m, c);
        if (!inserted) {
          it->second += c;
          if (it->second == 0) out.erase(it);
        }
      }
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  std::pair<Monomial, Rational> term() {
    Monomial m(vars_.size(), 0);
    Rational c = 1;
    factor(m, c);
    skip_space();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      factor(m, c);
      skip_space();
    }
    return {m, c};
  }

  void factor(Monomial& m, Rational& c) {
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = integer();
      skip_space();
      Integer den = 1;
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("division by zero", at);
      }
      c *= Rational(num) / Rational(den);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      int index = -1;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name == name) index = static_cast<int>(i);
      }
      if (index < 0) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      skip_space();
      int exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        Integer e = integer();
        if (e > 1000) throw ParseError("exponent too large", at);
        exponent = e.convert_to<int>();
      }
      m[index] += exponent;
      return;
    }
    fail(std::string("unexpected character '") + peek() + "'");
  }

  Integer integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    Integer value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      ++pos_;
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  char peek() const { return text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  const std::vector<VariableSpec>& vars_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Terms parse_terms(const std::vector<VariableSpec>& variables, std::string_view text) {
  return TermParser(variables, text).parse();
}

}  // namespace sncdp
