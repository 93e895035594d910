#pragma once

#include <cstdint>
#include <optional>

#include "nsarith/series.hpp"

namespace nsarith {

struct ModelConfig {
  int dim = 1;
  /// Maximum number of positive-exponent quotient terms a d=2 division (or
  /// root extraction) may produce before it is declared non-terminating.
  std::size_t div_budget = 64;
  /// Upper bound for witness escalation and bounded searches.
  std::uint64_t search_n_max = 64;
  std::uint64_t seed = 0;

  /// Throws PreconditionError when a field is out of range.
  void validate() const;
};

/// A member of the model: a finite generalized power series with exponents
/// >= 0, an integer constant term, and a nonnegative value.
///
/// Elements with a positive-exponent term are nonstandard (larger than
/// every natural number); the others are exactly the natural numbers.
class Element {
 public:
  Element() : s_(1) {}

  static Element zero(int dim) { return Element(Series(dim)); }
  static Element constant(const Integer& n, int dim);
  static Element one(int dim) { return constant(1, dim); }
  /// c * t^e. Throws InvariantViolation unless e > 0 and c > 0, or e = 0 and c a natural number.
  static Element monomial(const Exponent& e, const Rational& c = 1);
  /// The basic nonstandard element t^(1) / t^(1,0).
  static Element t(int dim) { return monomial(Exponent::unit(dim)); }
  /// Validates; throws InvariantViolation if s is not in the model.
  static Element from_series(Series s);
  /// Null when s is not in the model.
  static std::optional<Element> try_from_series(Series s);

  const Series& series() const noexcept { return s_; }
  const std::vector<Term>& terms() const noexcept { return s_.terms(); }
  int dim() const noexcept { return s_.dim(); }
  bool is_zero() const noexcept { return s_.is_zero(); }
  bool is_standard() const { return s_.is_finite(); }
  Integer constant_term() const;
  /// Leading exponent; null for zero.
  std::optional<Exponent> deg() const;

  friend bool operator==(const Element& a, const Element& b) { return a.s_ == b.s_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  explicit Element(Series s) : s_(std::move(s)) {}
  Series s_;
};

/// Checks the Element invariants on an arbitrary series.
bool in_model(const Series& s);

enum class Ordering { Less, Equal, Greater };

Element add(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
/// The unique e with b + e = a. Throws Underflow when b > a.
Element sub(const Element& a, const Element& b);
Ordering cmp(const Element& a, const Element& b);

struct ScalarDivision {
  Element quotient;
  Integer remainder;
};

/// a = n*q + r with 0 <= r < n. Total for every n >= 1.
ScalarDivision divmod_scalar(const Element& a, const Integer& n);

struct Division {
  Element quotient;
  Element remainder;
};

/// a = q*b + r with 0 <= r < b, for b > 0. In d=2 the quotient expansion may
/// be infinite; more than cfg.div_budget positive-exponent quotient terms
/// raises NonTerminatingQuotient. Never raised in d=1.
Division divmod(const Element& a, const Element& b, const ModelConfig& cfg = {});
Element floor_quotient(const Element& a, const Element& b, const ModelConfig& cfg = {});

Element pow(const Element& a, unsigned long n);

/// m with m^k <= a < (m+1)^k, for a >= 1. Raises CoefficientNotRepresentable
/// when no rational-coefficient m exists, and NonTerminatingQuotient when a
/// d=2 root expansion exceeds cfg.div_budget terms.
Element root_floor(const Element& a, unsigned long k, const ModelConfig& cfg = {});

inline std::optional<Exponent> deg(const Element& a) { return a.deg(); }
inline bool is_standard(const Element& a) { return a.is_standard(); }

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline bool operator<(const Element& a, const Element& b) { return cmp(a, b) == Ordering::Less; }
inline bool operator>(const Element& a, const Element& b) { return cmp(a, b) == Ordering::Greater; }
inline bool operator<=(const Element& a, const Element& b) { return cmp(a, b) != Ordering::Greater; }
inline bool operator>=(const Element& a, const Element& b) { return cmp(a, b) != Ordering::Less; }

/// x + k for a signed integer k; throws Underflow if the result would be negative.
Element add_integer(const Element& x, const Integer& k);

/// Integer value of a - b when the difference is standard (a E0 b, or both
/// standard); null otherwise.
std::optional<Integer> finite_difference(const Element& a, const Element& b);

}  // namespace nsarith
