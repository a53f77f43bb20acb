#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "tgwa/basering.hpp"
#include "tgwa/error.hpp"
#include "tgwa/scalar.hpp"
#include "tgwa/upoly.hpp"

namespace tgwa {

// Value-generic hooks for the recursive-descent grammar
//   expr := term (('+'|'-') term)*
//   term := unary (('*'|'/') unary)*
//   unary := ('-'|'+') unary | power
//   power := atom ('^' ['-'] integer)?
//   atom := integer | 'zeta' '(' integer ')' | identifier | '(' expr ')'
template <class V>
struct ExprOps {
  std::function<V(const Scalar&)> constant;
  std::function<std::optional<V>(const std::string&)> identifier;
  std::function<V(const V&, const V&)> divide;
  std::function<V(const V&, long)> power;
  FieldPtr field;
};

template <class V>
class ExprParser {
 public:
  ExprParser(const std::string& text, const ExprOps<V>& ops) : s_(text), ops_(ops) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError,
                "column " + std::to_string(pos_ + 1) + " in \"" + s_ + "\": " + msg);
  }
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
  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("integer expected");
    if (pos_ - start > 9) fail("integer literal too large for an exponent");
    return std::stol(s_.substr(start, pos_ - start));
  }
  V expr() {
    V v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  V term() {
    V v = unary();
    for (;;) {
      if (eat('*')) v = v * unary();
      else if (eat('/')) {
        size_t at = pos_;
        V d = unary();
        try {
          v = ops_.divide(v, d);
        } catch (const Error& e) {
          pos_ = at;
          fail(e.what());
        }
      } else
        return v;
    }
  }
  V unary() {
    if (eat('-')) return ops_.constant(Scalar(0)) - unary();
    if (eat('+')) return unary();
    return power();
  }
  V power() {
    V base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    size_t at = pos_;
    long k = integer();
    try {
      return ops_.power(base, neg ? -k : k);
    } catch (const Error& e) {
      pos_ = at;
      fail(e.what());
    }
  }
  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) fail("')' expected");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ops_.constant(Scalar(Rational(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == "zeta") {
        if (!eat('(')) fail("'(' expected after zeta");
        long n = integer();
        if (!eat(')')) fail("')' expected");
        if (n < 1) fail("zeta order must be positive");
        try {
          return ops_.constant(Scalar::root_of_unity(ops_.field, static_cast<int>(n)));
        } catch (const Error& e) {
          pos_ = start;
          fail(e.what());
        }
      }
      if (auto v = ops_.identifier(id)) return *v;
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  const ExprOps<V>& ops_;
  size_t pos_ = 0;
};

using Params = std::map<std::string, Scalar>;

Scalar parse_scalar(const std::string& text, const FieldPtr& field, const Params& params = {});
BasePoly parse_poly(const std::string& text, const RingPtr& ring, const Params& params = {});
RatFunc parse_ratfunc(const std::string& text, const FieldPtr& field, const std::string& var = "h",
                      const Params& params = {});

}  // namespace tgwa
