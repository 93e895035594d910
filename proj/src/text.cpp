#include "nsarith/text.hpp"

#include <cctype>

#include "nsarith/errors.hpp"

namespace nsarith {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int dim) : text_(text), dim_(dim) {
    if (dim != 1 && dim != 2) throw PreconditionError("dimension must be 1 or 2");
  }

  Series parse() {
    std::vector<Term> terms;
    skip();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    terms.push_back(term(sign));
    for (;;) {
      skip();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("'+', '-' or end of input");
      take();
      terms.push_back(term(c == '-' ? -1 : 1));
    }
    return Series::from_terms(std::move(terms), dim_);
  }

 private:
  Term term(int sign) {
    skip();
    Rational coeff = 1;
    if (peek() == 't') return {monomial(), Rational(sign)};
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("coefficient or 't'");
    coeff = rational(false);
    skip();
    if (peek() == '*') {
      take();
      skip();
      if (peek() != 't') fail("'t'");
      return {monomial(), coeff * sign};
    }
    return {Exponent::zero(dim_), coeff * sign};
  }

  Exponent monomial() {
    take();  // 't'
    skip();
    Exponent e = Exponent::unit(dim_);
    if (peek() != '^') return e;
    take();
    skip();
    if (peek() == '(') {
      take();
      e = Exponent(dim_);
      e[0] = rational(true);
      skip();
      if (peek() == ',') {
        if (dim_ != 2) fail("')' (exponent pairs need dimension 2)");
        take();
        e[1] = rational(true);
        skip();
      }
      if (peek() != ')') fail(dim_ == 2 ? "',' or ')'" : "')'");
      take();
      return e;
    }
    e = Exponent(dim_);
    e[0] = rational(true);
    return e;
  }

  Rational rational(bool allow_sign) {
    skip();
    bool negative = false;
    if (allow_sign && peek() == '-') {
      take();
      skip();
      negative = true;
    }
    Integer num = integer();
    Integer den = 1;
    skip();
    if (peek() == '/') {
      take();
      skip();
      const std::size_t at = pos_;
      den = integer();
      if (den == 0) {
        pos_ = at;
        fail("nonzero denominator");
      }
    }
    Rational q(negative ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("digit");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;
};

std::string exponent_text(const Exponent& e) {
  if (e.dim() == 1) {
    if (e[0] == 1) return "t";
    if (is_integer(e[0]) && sgn(e[0]) > 0) return "t^" + to_string(e[0]);
    return "t^(" + to_string(e[0]) + ")";
  }
  return "t^" + to_string(e);
}

}  // namespace

Series parse_series(std::string_view text, int dim) { return Parser(text, dim).parse(); }

Element parse_element(std::string_view text, int dim) { return Element::from_series(parse_series(text, dim)); }

int infer_dim(std::string_view text) {
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == ',' && depth > 0) return 2;
  }
  return 1;
}

std::string format_series(const Series& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : s.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(t.coeff);
    if (t.exp.is_zero()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += exponent_text(t.exp);
    } else {
      out += to_string(mag) + "*" + exponent_text(t.exp);
    }
  }
  return out;
}

std::string format_element(const Element& e) { return format_series(e.series()); }

}  // namespace nsarith
