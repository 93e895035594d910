#include "nsarith/element.hpp"

#include "nsarith/errors.hpp"

namespace nsarith {

namespace {

void check_dims(const Element& a, const Element& b) {
  if (a.dim() != b.dim()) throw InvariantViolation("element dimensions differ");
}

// Long division in the series field, keeping only the positive-exponent part
// of the quotient. Returns {P, a - P*b}.
std::pair<Series, Series> positive_quotient(const Series& a, const Series& b, const ModelConfig& cfg) {
  const Term& lead = b.leading();
  std::vector<Term> q;
  Series rem = a;
  while (!rem.is_zero() && rem.degree() > lead.exp) {
    if (a.dim() > 1 && q.size() >= cfg.div_budget) throw NonTerminatingQuotient(cfg.div_budget);
    Term next{rem.degree() - lead.exp, rem.leading().coeff / lead.coeff};
    rem = rem - b.times_monomial(next.exp, next.coeff);
    q.push_back(std::move(next));
  }
  return {Series::from_terms(std::move(q), a.dim()), std::move(rem)};
}

}  // namespace

void ModelConfig::validate() const {
  if (dim != 1 && dim != 2) throw PreconditionError("dim must be 1 or 2");
  if (div_budget < 1) throw PreconditionError("div_budget must be >= 1");
  if (search_n_max < 1) throw PreconditionError("search_n_max must be >= 1");
}

bool in_model(const Series& s) {
  if (s.is_zero()) return true;
  for (const auto& t : s.terms()) {
    const int sign = t.exp.sign();
    if (sign < 0) return false;
    if (sign == 0 && !is_integer(t.coeff)) return false;
  }
  return s.sign() > 0;
}

Element Element::constant(const Integer& n, int dim) {
  if (n < 0) throw InvariantViolation("negative constant is not in the model");
  return Element(Series::constant(Rational(n), dim));
}

Element Element::monomial(const Exponent& e, const Rational& c) {
  return from_series(Series::monomial(e, c));
}

Element Element::from_series(Series s) {
  if (!in_model(s)) throw InvariantViolation("value is not an element of the model");
  return Element(std::move(s));
}

std::optional<Element> Element::try_from_series(Series s) {
  if (!in_model(s)) return std::nullopt;
  return Element(std::move(s));
}

Integer Element::constant_term() const { return s_.constant_term().get_num(); }

std::optional<Exponent> Element::deg() const {
  if (s_.is_zero()) return std::nullopt;
  return s_.degree();
}

Element add(const Element& a, const Element& b) {
  check_dims(a, b);
  return Element::from_series(a.series() + b.series());
}

Element mul(const Element& a, const Element& b) {
  check_dims(a, b);
  return Element::from_series(a.series() * b.series());
}

Element sub(const Element& a, const Element& b) {
  check_dims(a, b);
  Series d = a.series() - b.series();
  if (d.sign() < 0) throw Underflow();
  return Element::from_series(std::move(d));
}

Ordering cmp(const Element& a, const Element& b) {
  check_dims(a, b);
  const int c = compare(a.series(), b.series());
  return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}

Element add_integer(const Element& x, const Integer& k) {
  Series s = x.series() + Series::constant(Rational(k), x.dim());
  if (s.sign() < 0) throw Underflow();
  return Element::from_series(std::move(s));
}

std::optional<Integer> finite_difference(const Element& a, const Element& b) {
  check_dims(a, b);
  if (compare_positive_parts(a.series(), b.series()) != 0) return std::nullopt;
  return a.constant_term() - b.constant_term();
}

ScalarDivision divmod_scalar(const Element& a, const Integer& n) {
  if (n < 1) throw PreconditionError("divisor must be a positive integer");
  const Rational inv(1, n);
  std::vector<Term> q;
  Integer constant = 0;
  for (const auto& t : a.terms()) {
    if (t.exp.is_positive()) q.push_back({t.exp, t.coeff * inv});
    else constant = t.coeff.get_num();
  }
  q.push_back({Exponent::zero(a.dim()), Rational(floor_div(constant, n))});
  return {Element::from_series(Series::from_terms(std::move(q), a.dim())), floor_mod(constant, n)};
}

Division divmod(const Element& a, const Element& b, const ModelConfig& cfg) {
  check_dims(a, b);
  if (b.is_zero()) throw PreconditionError("division by zero");
  auto [p, rem] = positive_quotient(a.series(), b.series(), cfg);

  // rem/b is now bounded, so the constant part of the quotient is a small integer.
  Integer k = 0;
  if (!rem.is_zero()) {
    if (rem.degree() == b.series().degree()) k = floor(rem.leading().coeff / b.series().leading().coeff);
    else k = rem.sign() >= 0 ? 0 : -1;
  }
  auto rest = [&](const Integer& j) { return rem - b.series().scaled(Rational(j)); };
  while (rest(k).sign() < 0) --k;
  while (rest(k + 1).sign() >= 0) ++k;

  Series q = p + Series::constant(Rational(k), a.dim());
  return {Element::from_series(std::move(q)), Element::from_series(rest(k))};
}

Element floor_quotient(const Element& a, const Element& b, const ModelConfig& cfg) {
  return divmod(a, b, cfg).quotient;
}

Element pow(const Element& a, unsigned long n) {
  Series result = Series::constant(1, a.dim());
  Series base = a.series();
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return Element::from_series(std::move(result));
}

namespace {

Series series_pow(const Series& s, unsigned long n) {
  Series result = Series::constant(1, s.dim());
  Series base = s;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

}  // namespace

Element root_floor(const Element& a, unsigned long k, const ModelConfig& cfg) {
  if (k == 0) throw PreconditionError("root index must be positive");
  if (a.is_zero()) throw PreconditionError("root_floor requires a >= 1");
  if (k == 1) return a;
  const int dim = a.dim();

  if (a.is_standard()) {
    Integer r;
    const Integer n = a.constant_term();
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return Element::constant(r, dim);
  }

  const Term& lead = a.series().leading();
  const auto root_coeff = exact_root(lead.coeff, k);
  if (!root_coeff)
    throw CoefficientNotRepresentable("leading coefficient " + to_string(lead.coeff) + " has no rational root of degree " +
                                      std::to_string(k));

  // Extract the positive-exponent part R of a^(1/k) term by term: each new
  // term cancels the leading term of a - R^k against k * lead(R)^(k-1).
  const Exponent root_deg = lead.exp.scaled(Rational(1, k));
  const Exponent tail_deg = root_deg.scaled(Rational(k - 1));
  Integer num_pow, den_pow;
  mpz_pow_ui(num_pow.get_mpz_t(), root_coeff->get_num_mpz_t(), k - 1);
  mpz_pow_ui(den_pow.get_mpz_t(), root_coeff->get_den_mpz_t(), k - 1);
  Rational denom(Integer(k) * num_pow, den_pow);
  denom.canonicalize();
  Series root = Series::monomial(root_deg, *root_coeff);
  Rational standard_part = 0;
  for (;;) {
    const Series rem = a.series() - series_pow(root, k);
    if (rem.is_zero()) break;
    const Exponent next = rem.degree() - tail_deg;
    const Rational coeff = rem.leading().coeff / denom;
    if (!next.is_positive()) {
      if (next.is_zero()) standard_part = coeff;
      else standard_part = rem.sign() > 0 ? Rational(0) : Rational(-1, 2);
      break;
    }
    if (dim > 1 && root.size() > cfg.div_budget) throw NonTerminatingQuotient(cfg.div_budget);
    root = root + Series::monomial(next, coeff);
  }

  auto candidate = [&](const Integer& j) { return root + Series::constant(Rational(j), dim); };
  auto fits = [&](const Integer& j) { return compare(series_pow(candidate(j), k), a.series()) <= 0; };
  Integer j = floor(standard_part);
  while (!fits(j)) --j;
  while (fits(j + 1)) ++j;

  // fits(j) && !fits(j + 1) is exactly m^k <= a < (m+1)^k.
  auto m = Element::try_from_series(candidate(j));
  if (!m) throw CoefficientNotRepresentable("root candidate falls outside the model");
  return *m;
}

}  // namespace nsarith
