#include "germinv/parse.hpp"

#include <cctype>

#include "germinv/errors.hpp"

namespace germinv {

namespace {

bool known_variable(const std::string& name) {
  static const char* const kNames[] = {"x", "y", "x'", "y'", "X", "Y", "Z", "t", "u", "w"};
  for (const char* n : kNames) {
    if (name == n) return true;
  }
  return false;
}

class Parser {
 public:
  Parser(const std::string& text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial whole() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  std::array<Polynomial, 3> triple() {
    expect('(');
    Polynomial a = expr();
    expect(',');
    Polynomial b = expr();
    expect(',');
    Polynomial c = expr();
    expect(')');
    skip();
    if (pos_ != s_.size()) fail("trailing input after germ");
    return {a, b, c};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      std::string digits = s_.substr(start, pos_ - start);
      if (digits.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Polynomial number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string text = s_.substr(start, pos_ - start);
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      std::size_t save = pos_;
      ++pos_;
      skip();
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) {
        pos_ = save;
        fail("expected a denominator");
      }
      std::string den = s_.substr(dstart, pos_ - dstart);
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      text += "/" + den;
    }
    return Polynomial::constant(ring_, parse_rational(text));
  }

  Polynomial variable() {
    std::size_t start = pos_;
    std::string name(1, s_[pos_++]);
    if (pos_ < s_.size() && s_[pos_] == '\'') {
      name += '\'';
      ++pos_;
    }
    if (!known_variable(name)) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    auto idx = ring_->index_of(name);
    if (!idx) {
      pos_ = start;
      fail("variable '" + name + "' is not allowed here");
    }
    return Polynomial::variable(ring_, *idx);
  }

  const std::string& s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).whole();
}

std::array<Polynomial, 3> parse_triple(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).triple();
}

}  // namespace germinv
