#pragma once

#include <string>
#include <vector>

#include "nsarith/exponent.hpp"

namespace nsarith {

struct Term {
  Exponent exp;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coeff == b.coeff; }
};

/// Finite generalized power series with rational coefficients and exponents
/// in Q^d: the ordered field the model lives in. Signed, any exponents.
///
/// Terms are kept strictly descending by exponent with zero coefficients
/// dropped, so structural equality is value equality.
class Series {
 public:
  explicit Series(int dim = 1) : dim_(dim) {}

  static Series constant(const Rational& c, int dim);
  static Series monomial(const Exponent& e, const Rational& c);
  /// Sorts, merges equal exponents, drops zeros.
  static Series from_terms(std::vector<Term> terms, int dim);

  int dim() const noexcept { return dim_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Sign in the field order: the sign of the leading coefficient.
  int sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coeff); }
  const Term& leading() const { return terms_.front(); }
  const Exponent& degree() const { return terms_.front().exp; }

  /// Coefficient at exponent 0.
  Rational constant_term() const;
  /// True when every exponent is <= 0 (the value is bounded by a standard number).
  bool is_finite() const { return terms_.empty() || !terms_.front().exp.is_positive(); }
  /// Terms with exponent > 0.
  Series positive_part() const;
  /// Terms whose exponent has first component > 0.
  Series first_component_part() const;

  // Rvalue overloads reuse the operand's storage.
  Series operator-() const&;
  Series operator-() &&;
  friend Series operator+(Series a, const Series& b) { return merge(std::move(a), b, 1); }
  friend Series operator-(Series a, const Series& b) { return merge(std::move(a), b, -1); }
  Series operator*(const Series& o) const;
  Series scaled(const Rational& s) const&;
  Series scaled(const Rational& s) &&;
  /// Multiplication by c*t^e.
  Series times_monomial(const Exponent& e, const Rational& c) const&;
  Series times_monomial(const Exponent& e, const Rational& c) &&;
  Series abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Series& a, const Series& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  // a + sign*o
  static Series merge(Series a, const Series& o, int sign);

  std::vector<Term> terms_;
  int dim_;
};

/// Sign of a - b without materializing the difference.
int compare(const Series& a, const Series& b);

/// Sign of a.positive_part() - b.positive_part(), without materializing.
int compare_positive_parts(const Series& a, const Series& b);

/// a.first_component_part() == b.first_component_part(), without materializing.
bool same_first_component_part(const Series& a, const Series& b);

}  // namespace nsarith
