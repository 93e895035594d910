#include "nsarith/series.hpp"

#include <algorithm>

#include "nsarith/errors.hpp"

namespace nsarith {

namespace {

void check_same(const Series& a, const Series& b) {
  if (a.dim() != b.dim()) throw InvariantViolation("series dimensions differ");
}

}  // namespace

Series Series::constant(const Rational& c, int dim) {
  Series s(dim);
  if (sgn(c) != 0) s.terms_.push_back({Exponent::zero(dim), c});
  return s;
}

Series Series::monomial(const Exponent& e, const Rational& c) {
  Series s(e.dim());
  if (sgn(c) != 0) s.terms_.push_back({e, c});
  return s;
}

Series Series::from_terms(std::vector<Term> terms, int dim) {
  for (const auto& t : terms)
    if (t.exp.dim() != dim) throw InvariantViolation("term dimension differs from series dimension");
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exp > y.exp; });
  Series s(dim);
  for (auto& t : terms) {
    if (!s.terms_.empty() && s.terms_.back().exp == t.exp) {
      s.terms_.back().coeff += t.coeff;
    } else {
      if (!s.terms_.empty() && sgn(s.terms_.back().coeff) == 0) s.terms_.pop_back();
      s.terms_.push_back(std::move(t));
    }
  }
  if (!s.terms_.empty() && sgn(s.terms_.back().coeff) == 0) s.terms_.pop_back();
  return s;
}

Rational Series::constant_term() const {
  for (const auto& t : terms_) {
    const int s = t.exp.sign();
    if (s == 0) return t.coeff;
    if (s < 0) break;
  }
  return 0;
}

Series Series::positive_part() const {
  Series s(dim_);
  s.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!t.exp.is_positive()) break;
    s.terms_.push_back(t);
  }
  return s;
}

Series Series::first_component_part() const {
  Series s(dim_);
  s.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (sgn(t.exp[0]) <= 0) break;
    s.terms_.push_back(t);
  }
  return s;
}

Series Series::operator-() const& { return -Series(*this); }

Series Series::operator-() && {
  for (auto& t : terms_) t.coeff = -t.coeff;
  return std::move(*this);
}

Series Series::merge(Series a, const Series& o, int sign) {
  check_same(a, o);
  if (o.terms_.empty()) return a;
  std::vector<Term> out;
  out.reserve(a.terms_.size() + o.terms_.size());
  auto i = a.terms_.begin();
  auto j = o.terms_.begin();
  while (i != a.terms_.end() || j != o.terms_.end()) {
    int c;
    if (i == a.terms_.end()) c = 1;
    else if (j == o.terms_.end()) c = -1;
    else c = -compare(i->exp, j->exp);
    if (c < 0) {
      out.push_back(std::move(*i++));
    } else if (c > 0) {
      out.push_back(*j++);
      if (sign < 0) mpq_neg(out.back().coeff.get_mpq_t(), out.back().coeff.get_mpq_t());
    } else {
      if (sign > 0)
        i->coeff += j->coeff;
      else
        i->coeff -= j->coeff;
      if (sgn(i->coeff) != 0) out.push_back(std::move(*i));
      ++i;
      ++j;
    }
  }
  a.terms_ = std::move(out);
  return a;
}

Series Series::operator*(const Series& o) const {
  check_same(*this, o);
  if (is_zero() || o.is_zero()) return Series(dim_);
  if (o.size() == 1) return times_monomial(o.terms_[0].exp, o.terms_[0].coeff);
  if (size() == 1) return o.times_monomial(terms_[0].exp, terms_[0].coeff);
  std::vector<Term> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const auto& x : terms_)
    for (const auto& y : o.terms_) products.push_back({x.exp + y.exp, x.coeff * y.coeff});
  return from_terms(std::move(products), dim_);
}

Series Series::scaled(const Rational& s) const& { return Series(*this).scaled(s); }

Series Series::scaled(const Rational& s) && {
  if (sgn(s) == 0) return Series(dim_);
  for (auto& t : terms_) t.coeff *= s;
  return std::move(*this);
}

Series Series::times_monomial(const Exponent& e, const Rational& c) const& {
  return Series(*this).times_monomial(e, c);
}

Series Series::times_monomial(const Exponent& e, const Rational& c) && {
  if (sgn(c) == 0) return Series(dim_);
  for (auto& t : terms_) {
    t.exp += e;
    t.coeff *= c;
  }
  return std::move(*this);
}

namespace {

// Sign of the difference of the leading runs of a and b whose exponents
// satisfy keep (a prefix, since terms descend).
template <class Keep>
int compare_prefix(const Series& a, const Series& b, Keep keep) {
  if (a.dim() != b.dim()) throw InvariantViolation("series dimensions differ");
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  auto ie = a.terms().end();
  auto je = b.terms().end();
  for (;;) {
    const bool has_i = i != ie && keep(i->exp);
    const bool has_j = j != je && keep(j->exp);
    if (!has_i && !has_j) return 0;
    if (!has_i) return -sgn(j->coeff);
    if (!has_j) return sgn(i->coeff);
    const int c = compare(i->exp, j->exp);
    if (c > 0) return sgn(i->coeff);
    if (c < 0) return -sgn(j->coeff);
    const int d = cmp(i->coeff, j->coeff);
    if (d != 0) return d < 0 ? -1 : 1;
    ++i;
    ++j;
  }
}

}  // namespace

int compare(const Series& a, const Series& b) {
  return compare_prefix(a, b, [](const Exponent&) { return true; });
}

int compare_positive_parts(const Series& a, const Series& b) {
  return compare_prefix(a, b, [](const Exponent& e) { return e.is_positive(); });
}

bool same_first_component_part(const Series& a, const Series& b) {
  return compare_prefix(a, b, [](const Exponent& e) { return sgn(e[0]) > 0; }) == 0;
}

}  // namespace nsarith
