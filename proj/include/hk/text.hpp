#ifndef HK_TEXT_HPP
#define HK_TEXT_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "hk/polynomial.hpp"

namespace hk {

/// Canonical text form, e.g. "1/2*z[1]^2*zbar[2]-x[1]+(0,1)*y[3]". Terms follow
/// the canonical monomial order, so equal polynomials print identically.
inline std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& sys = *p.system();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string term;
    if (m.is_one()) {
      term = c.to_string();
    } else {
      if (c.is_one()) {
        term.clear();
      } else if (c.is_real() && c.re() == -1) {
        term = "-";
      } else {
        term = c.to_string() + "*";
      }
      bool first_factor = true;
      for (int i = 0; i < sys.symbol_count(); ++i) {
        unsigned e = m.exponent(static_cast<std::size_t>(i));
        if (!e) continue;
        if (!first_factor) term += '*';
        first_factor = false;
        term += sys.symbol_name(Symbol{static_cast<std::uint16_t>(i)});
        if (e > 1) term += "^" + std::to_string(e);
      }
    }
    if (!first && term.front() != '-') out += '+';
    out += term;
    first = false;
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, SystemRef sys) : s_(text), sys_(std::move(sys)) {}

  Polynomial parse() {
    PolynomialBuilder out(sys_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = term();
      out.add(m, negative ? -c : c);
      skip_ws();
    }
    return std::move(out).build();
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void expect(char ch) {
    skip_ws();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::pair<Monomial, Scalar> term() {
    Monomial m;
    Scalar c(1);
    factor(m, c);
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      factor(m, c);
      skip_ws();
    }
    return {m, c};
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Rational rational_literal() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    mpz_class num = integer();
    mpz_class den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      den = integer();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  void factor(Monomial& m, Scalar& c) {
    char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      c *= Scalar(rational_literal());
    } else if (ch == '(') {
      ++pos_;
      Rational re = rational_literal();
      skip_ws();
      Rational im = 0;
      if (peek() == ',') {
        ++pos_;
        im = rational_literal();
      }
      expect(')');
      c *= Scalar(re, im);
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      bool bar = false;
      if (!sys_->has_group(name)) {
        if (name.size() > 3 && name.ends_with("bar") && sys_->has_group(name.substr(0, name.size() - 3)) &&
            sys_->group(name.substr(0, name.size() - 3)).is_complex()) {
          name.resize(name.size() - 3);
          bar = true;
        } else {
          throw ParseError("unknown symbol '" + name + "'", start);
        }
      }
      expect('[');
      skip_ws();
      std::size_t idx_at = pos_;
      mpz_class idx = integer();
      const Group& g = sys_->group(name);
      if (idx < 1 || idx > g.length) throw ParseError("index out of range for " + name, idx_at);
      expect(']');
      unsigned e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        std::size_t e_at = pos_;
        mpz_class ez = integer();
        if (ez > Monomial::kMaxExponent) throw ParseError("exponent too large", e_at);
        e = static_cast<unsigned>(ez.get_ui());
      }
      Symbol sym = sys_->symbol(name, static_cast<int>(idx.get_si()) - 1, bar);
      unsigned total = m[sym] + e;
      if (total > Monomial::kMaxExponent) fail("exponent too large");
      m.set(sym, total);
    } else {
      fail(at_end() ? "unexpected end of input" : std::string("unexpected character '") + ch + "'");
    }
  }

  std::string_view s_;
  SystemRef sys_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text grammar
///   poly   ::= ['+'|'-'] term (('+'|'-') term)*
///   term   ::= factor ('*' factor)*
///   factor ::= rational | '(' rational [',' rational] ')' | name '[' idx ']' ['^' exp]
/// where `name` is a group name, or a complex group name followed by "bar".
inline Polynomial parse(std::string_view text, SystemRef sys) {
  return detail::PolyParser(text, std::move(sys)).parse();
}

}  // namespace hk

#endif  // HK_TEXT_HPP
