#include "nsarith/oracle.hpp"

#include <algorithm>

namespace nsarith::oracle {

namespace {

// x < y^n, decided from degrees when they differ (the leading term of the
// larger side wins) and by exact expansion when they tie or n is small.
bool less_than_power(const Element& x, const Element& y, const Integer& n) {
  if (n <= 3) return x < pow(y, n.get_ui());
  const int c = compare(*x.deg(), y.deg()->scaled(Rational(n)));
  if (c != 0) return c < 0;
  return x < pow(y, n.get_ui());
}

bool nonstandard_pair(const Element& a, const Element& b) {
  return a.dim() == b.dim() && !a.is_standard() && !b.is_standard();
}

}  // namespace

bool linearly_small(const Element& c, const Element& x) {
  if (c.is_standard()) return true;
  return *c.deg() < *x.deg();
}

bool multiplicatively_small(const Element& c, const Element& x) {
  if (c.is_standard()) return true;
  return archimedean_dominated(*c.deg(), *x.deg());
}

bool refutes(int level, const Element& a, const Element& b) {
  if (!nonstandard_pair(a, b)) return false;
  const Element& lo = a < b ? a : b;
  const Element& hi = a < b ? b : a;
  const Exponent dlo = *lo.deg();
  const Exponent dhi = *hi.deg();
  switch (level) {
    case 0:
      return !(hi - lo).is_standard();
    case 1: {
      const Element gap = hi - lo;
      return !gap.is_standard() && *gap.deg() >= dlo;
    }
    case 2:
      return dhi > dlo;
    case 3:
      return dhi > dlo && !archimedean_dominated(dhi - dlo, dlo);
    case 4:
      return archimedean_dominated(dlo, dhi);
  }
  return false;
}

bool check_witness(int level, const Element& a, const Element& b, const Witness& w) {
  if (!nonstandard_pair(a, b)) return false;
  if (level == 0 || level == 2 || level == 4) {
    const auto* bound = std::get_if<BoundN>(&w);
    if (!bound || bound->n < 1) return false;
    const Integer& n = bound->n;
    if (level == 0) return a < add_integer(b, n) && b < add_integer(a, n);
    if (level == 2) {
      const Element scale = Element::constant(n, a.dim());
      return a < b * scale && b < a * scale;
    }
    return less_than_power(a, b, n) && less_than_power(b, a, n);
  }
  if (level == 1 || level == 3) {
    const auto* comp = std::get_if<Companion>(&w);
    if (!comp || comp->c.dim() != a.dim()) return false;
    const Element& c = comp->c;
    if (level == 1) return linearly_small(c, a) && linearly_small(c, b) && a < b + c && b < a + c;
    return multiplicatively_small(c, a) && multiplicatively_small(c, b) && a < b * c && b < a * c;
  }
  return false;
}

SearchBounds lattice_bounds(const Element& a, const Element& b, std::uint64_t n_max) {
  SearchBounds bounds{n_max, {}};
  const int dim = a.dim();
  std::vector<Exponent> lattice;
  std::vector<Exponent> anchors{Exponent::zero(dim)};
  for (const auto* x : {&a, &b})
    for (const auto& t : x->terms())
      if (t.exp.is_positive()) lattice.push_back(t.exp);
  if (auto da = a.deg()) anchors.push_back(*da);
  if (auto db = b.deg()) anchors.push_back(*db);
  const Series diff = a.series() - b.series();
  if (!diff.is_zero() && diff.degree().is_positive()) anchors.push_back(diff.degree());
  for (const auto& x : anchors) {
    lattice.push_back(x);
    for (const auto& y : anchors) {
      lattice.push_back((x + y).scaled(Rational(1, 2)));
      if (x > y) lattice.push_back(x - y);
    }
  }
  if (dim == 2) {
    for (std::uint64_t k = 1; k <= std::min<std::uint64_t>(n_max, 8); ++k) {
      Exponent e(2);
      e[1] = Rational(k);
      lattice.push_back(e);
    }
    if (auto da = a.deg(), db = b.deg(); da && db) {
      Exponent gap(2);
      gap[1] = abs((*da)[1] - (*db)[1]);
      lattice.push_back(gap);
      gap[1] += 1;
      lattice.push_back(gap);
    }
  }
  std::sort(lattice.begin(), lattice.end());
  lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());

  for (std::uint64_t k = 0; k <= n_max; ++k) bounds.companion_pool.push_back(Element::constant(k, dim));
  for (const auto& e : lattice) {
    if (!e.is_positive()) continue;
    const Element m = Element::monomial(e);
    bounds.companion_pool.push_back(m);
    bounds.companion_pool.push_back(add_integer(m, 1));
    bounds.companion_pool.push_back(Element::monomial(e, 2));
  }
  return bounds;
}

std::optional<Witness> search(int level, const Element& a, const Element& b, const SearchBounds& bounds) {
  if (level == 0 || level == 2 || level == 4) {
    for (std::uint64_t n = 1; n <= bounds.n_max; ++n) {
      Witness w = BoundN{Integer(n)};
      if (check_witness(level, a, b, w)) return w;
    }
    return std::nullopt;
  }
  for (const auto& c : bounds.companion_pool) {
    Witness w = Companion{c};
    if (check_witness(level, a, b, w)) return w;
  }
  return std::nullopt;
}

}  // namespace nsarith::oracle
