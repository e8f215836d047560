#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "permfit/class_expr.hpp"

namespace permfit {

/// Parser for the class-expression DSL:
///
///   atom := "triv" | "all" | "sol" | "nil" | "Epi(P)" | "Np(p)"
///         | "NilPi(P)" | "PiNil(P)" | "PiSol(P)"
///   P    := "{p1,p2,...}" | "~{p1,...}"
///   expr := atom | "prod(expr,expr)" | "meet(expr,...)" | "hartley(expr;P)"
///
/// Whitespace-insensitive; errors cite the character offset.
namespace detail {

class ClassParser {
public:
  explicit ClassParser(std::string_view text) : text_(text) {}

  ClassExpr parse() {
    ClassExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

  PrimeSet parse_prime_set_only() {
    PrimeSet ps = prime_set();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return ps;
  }

private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a class name");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned number() {
    skip_ws();
    std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 1000000) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return static_cast<unsigned>(v);
  }

  unsigned prime() {
    std::size_t at = pos_;
    unsigned p = number();
    if (!is_prime(p)) {
      pos_ = at;
      fail(std::to_string(p) + " is not prime");
    }
    return p;
  }

  PrimeSet prime_set() {
    skip_ws();
    bool complement = try_consume('~');
    expect('{');
    std::vector<unsigned> primes;
    skip_ws();
    if (!try_consume('}')) {
      primes.push_back(prime());
      while (try_consume(',')) primes.push_back(prime());
      expect('}');
    }
    return complement ? PrimeSet::cofinite(std::move(primes))
                      : PrimeSet::finite(std::move(primes));
  }

  ClassExpr expr() {
    skip_ws();
    std::size_t at = pos_;
    std::string name = word();
    if (name == "triv") return cls::trivial();
    if (name == "all") return cls::all();
    if (name == "sol") return cls::soluble();
    if (name == "nil") return cls::nilpotent();
    if (name == "Epi") {
      expect('(');
      PrimeSet ps = prime_set();
      expect(')');
      return cls::pi_groups(std::move(ps));
    }
    if (name == "Np") {
      expect('(');
      unsigned p = prime();
      expect(')');
      return cls::p_groups(p);
    }
    if (name == "NilPi") {
      expect('(');
      PrimeSet ps = prime_set();
      expect(')');
      return cls::nilpotent_pi(std::move(ps));
    }
    if (name == "PiNil") {
      expect('(');
      PrimeSet ps = prime_set();
      expect(')');
      return cls::pi_nilpotent(std::move(ps));
    }
    if (name == "PiSol") {
      expect('(');
      PrimeSet ps = prime_set();
      expect(')');
      return cls::pi_soluble(std::move(ps));
    }
    if (name == "prod") {
      expect('(');
      ClassExpr f = expr();
      expect(',');
      ClassExpr h = expr();
      expect(')');
      return cls::product(std::move(f), std::move(h));
    }
    if (name == "meet") {
      expect('(');
      std::vector<ClassExpr> parts;
      parts.push_back(expr());
      while (try_consume(',')) parts.push_back(expr());
      expect(')');
      return cls::meet(std::move(parts));
    }
    if (name == "hartley") {
      expect('(');
      ClassExpr x = expr();
      expect(';');
      PrimeSet ps = prime_set();
      expect(')');
      return cls::hartley(std::move(x), std::move(ps));
    }
    pos_ = at;
    fail("unknown class name '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ClassExpr parse_class_expr(std::string_view text) {
  return detail::ClassParser(text).parse();
}

inline PrimeSet parse_prime_set(std::string_view text) {
  return detail::ClassParser(text).parse_prime_set_only();
}

}  // namespace permfit
