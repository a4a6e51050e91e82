#include "tensorcoh/poly_parser.hpp"

#include <cctype>

#include "tensorcoh/errors.hpp"

namespace tensorcoh {

namespace {

class Parser {
 public:
  Parser(const AmbientPtr& ring, std::string_view s) : ring_(ring), s_(s) {}

  Polynomial parse() {
    Polynomial p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial sum() {
    skip();
    Polynomial acc(ring_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Polynomial t = product();
    acc = negate ? -t : t;
    while (true) {
      if (eat('+')) acc = acc + product();
      else if (eat('-')) acc = acc - product();
      else return acc;
    }
  }

  Polynomial product() {
    Polynomial acc = power();
    while (true) {
      skip();
      if (eat('*')) {
        acc = acc * power();
        continue;
      }
      // juxtaposition such as 2x or x y
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        acc = acc * power();
        continue;
      }
      return acc;
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = sum();
      if (!eat(')')) fail("')' expected");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 18) fail("integer literal too long");
      return Polynomial::constant(ring_, std::stoll(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int v = ring_->var_index(name);
      if (v < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, v);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const AmbientPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const AmbientPtr& ring, std::string_view text) { return Parser(ring, text).parse(); }

}  // namespace tensorcoh
