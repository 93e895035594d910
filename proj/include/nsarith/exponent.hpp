#pragma once

#include <array>
#include <initializer_list>
#include <string>

#include "nsarith/rational.hpp"

namespace nsarith {

/// A point of Q^d (d = 1 or 2) under the lexicographic order.
///
/// Unused trailing components are held at zero, so comparison and the group
/// operations never need to branch on the dimension.
class Exponent {
 public:
  static constexpr int kMaxDim = 2;

  Exponent() = default;
  explicit Exponent(int dim);
  Exponent(std::initializer_list<Rational> components);

  static Exponent zero(int dim) { return Exponent(dim); }
  /// (1) in d=1, (1,0) in d=2.
  static Exponent unit(int dim);

  int dim() const noexcept { return dim_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  /// -1, 0, +1 under lex.
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }

  /// Index of the first nonzero component, or dim() when zero. Two positive
  /// exponents are Archimedean-equivalent iff their ranks agree.
  int rank() const;

  Exponent operator+(const Exponent& o) const;
  Exponent& operator+=(const Exponent& o);
  Exponent operator-(const Exponent& o) const;
  Exponent operator-() const;
  Exponent scaled(const Rational& s) const;

  friend int compare(const Exponent& a, const Exponent& b);
  friend bool operator==(const Exponent& a, const Exponent& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return compare(a, b) != 0; }
  friend bool operator<(const Exponent& a, const Exponent& b) { return compare(a, b) < 0; }
  friend bool operator>(const Exponent& a, const Exponent& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Exponent& a, const Exponent& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Exponent& a, const Exponent& b) { return compare(a, b) >= 0; }

 private:
  std::array<Rational, kMaxDim> c_{};
  int dim_ = 1;
};

/// n*v < w for every standard n (v >= 0, w > 0).
bool archimedean_dominated(const Exponent& v, const Exponent& w);

/// v < n*w and w < n*v for some standard n (v, w > 0).
bool archimedean_equivalent(const Exponent& v, const Exponent& w);

/// "2", "3/2" in d=1; "(1,-1/2)" in d=2.
std::string to_string(const Exponent& e);

}  // namespace nsarith
