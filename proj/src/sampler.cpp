#include "nsarith/sampler.hpp"

#include <algorithm>

#include "nsarith/errors.hpp"

namespace nsarith {

void SampleProfile::validate() const {
  if (max_terms < 1 || den_bound < 1 || coeff_bound < 1) throw PreconditionError("sample bounds must be >= 1");
  if (dim != 1 && dim != 2) throw PreconditionError("dim must be 1 or 2");
  if (standard_percent < 0 || standard_percent > 100) throw PreconditionError("standard_percent must be in 0..100");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  auto splitmix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return splitmix(splitmix(splitmix(seed) ^ stream) ^ index);
}

Sampler::Sampler(const SampleProfile& profile) : Sampler(profile, profile.seed) {}

Sampler::Sampler(const SampleProfile& profile, std::uint64_t seed) : profile_(profile), rng_(seed) {
  profile_.validate();
}

std::uint64_t Sampler::below(std::uint64_t n) { return n <= 1 ? 0 : rng_() % n; }

long Sampler::range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

bool Sampler::coin(int percent) { return static_cast<int>(below(100)) < percent; }

Rational Sampler::fraction(long lo_num, long hi_num) {
  const long den = range(1, profile_.den_bound);
  Rational q(range(lo_num * den, hi_num * den), den);
  q.canonicalize();
  return q;
}

Exponent Sampler::exponent() {
  Exponent e(profile_.dim);
  if (profile_.dim == 1) {
    do e[0] = fraction(0, 3);
    while (sgn(e[0]) <= 0);
    return e;
  }
  if (coin(30)) {
    do e[1] = fraction(0, 3);
    while (sgn(e[1]) <= 0);
    return e;
  }
  do e[0] = fraction(0, 2);
  while (sgn(e[0]) <= 0);
  e[1] = fraction(-2, 2);
  return e;
}

Rational Sampler::coefficient(bool positive) {
  const long den = range(1, profile_.den_bound);
  long num = 0;
  while (num == 0) num = positive ? range(1, profile_.coeff_bound) : range(-profile_.coeff_bound, profile_.coeff_bound);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Element Sampler::standard() { return Element::constant(range(0, profile_.coeff_bound), profile_.dim); }

Element Sampler::nonstandard() {
  const int count = static_cast<int>(range(1, profile_.max_terms));
  std::vector<Exponent> exps;
  for (int i = 0; i < count; ++i) exps.push_back(exponent());
  std::sort(exps.begin(), exps.end(), [](const Exponent& x, const Exponent& y) { return x > y; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Term> terms;
  for (std::size_t i = 0; i < exps.size(); ++i) terms.push_back({exps[i], coefficient(i == 0)});
  terms.push_back({Exponent::zero(profile_.dim), Rational(range(-profile_.coeff_bound, profile_.coeff_bound))});
  return Element::from_series(Series::from_terms(std::move(terms), profile_.dim));
}

Element Sampler::element() { return coin(profile_.standard_percent) ? standard() : nonstandard(); }

Element Sampler::related(const Element& a) {
  const int dim = profile_.dim;
  const Series& s = a.series();
  const Exponent d = *a.deg();
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::optional<Element> b;
    switch (below(dim == 2 ? 8 : 7)) {
      case 0:
        b = a;
        break;
      case 1:
        b = Element::try_from_series(s + Series::constant(Rational(range(-profile_.coeff_bound, profile_.coeff_bound)), dim));
        break;
      case 2: {
        // A perturbation strictly below the degree of a.
        Rational r(range(1, 3), 4);
        r.canonicalize();
        b = Element::try_from_series(s + Series::monomial(d.scaled(r), coefficient(false)));
        break;
      }
      case 3: {
        Rational r = fraction(0, 3);
        if (sgn(r) <= 0) r = 2;
        b = Element::try_from_series(s.positive_part().scaled(r) + Series::constant(Rational(range(0, 3)), dim));
        break;
      }
      case 4:
        b = Element::try_from_series(s.times_monomial(exponent(), 1));
        break;
      case 5:
        b = nonstandard();
        break;
      case 6:
        b = Element::try_from_series(s + Series::monomial(d.scaled(Rational(range(2, 3))), coefficient(true)));
        break;
      case 7: {
        // Move inside the E3-class: rescale by t^(0,y) on the positive-first-component part.
        Exponent shift(2);
        shift[1] = fraction(-2, 2);
        const Series top = s.first_component_part();
        b = Element::try_from_series(top.times_monomial(shift, coefficient(true)) + (s - top));
        break;
      }
    }
    if (b && !b->is_standard()) return *b;
  }
  return nonstandard();
}

std::optional<Element> Sampler::between(const Element& a, const Element& c) {
  if (!(a < c)) return std::nullopt;
  const Series gap = c.series() - a.series();
  for (int attempt = 0; attempt < 4; ++attempt) {
    const long q = range(2, 8);
    const long p = range(1, q - 1);
    const auto part = Element::try_from_series(gap.scaled(Rational(p)));
    if (!part) break;
    const Element b = a + divmod_scalar(*part, q).quotient;
    if (a < b && b < c) return b;
  }
  const Element next = add_integer(a, 1);
  if (next < c) return next;
  return std::nullopt;
}

Element sample(const SampleProfile& profile) {
  Sampler s(profile);
  return s.element();
}

}  // namespace nsarith
