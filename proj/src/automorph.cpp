#include "nsarith/automorph.hpp"

#include <algorithm>

#include "nsarith/equiv.hpp"
#include "nsarith/errors.hpp"
#include "nsarith/sampler.hpp"
#include "nsarith/text.hpp"

namespace nsarith::automorph {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Class of x at or below the class of c: x < c, or x E0 c.
bool at_or_below(const Element& x, const Element& c) { return compare_positive_parts(x.series(), c.series()) <= 0; }

// Above the center, f(r + k) = n*r - (n-1)*center + k for a representative r.
Element affine_forward(const E2Affine& f, const Element& x) {
  if (x.is_standard() || at_or_below(x, f.center)) return x;
  Series rep;
  Integer offset;
  if (auto k = finite_difference(x, f.anchor)) {
    rep = f.anchor.series();
    offset = *k;
  } else {
    rep = x.series().positive_part();
    offset = x.constant_term();
  }
  Series y = std::move(rep).scaled(Rational(f.scale)) - f.center.series().scaled(Rational(f.scale - 1));
  return Element::from_series(std::move(y) + Series::constant(Rational(offset), x.dim()));
}

// Solves y = n*r - (n-1)*center + k for the zero-constant representative r.
Element affine_backward(const E2Affine& f, const Element& y) {
  if (y.is_standard() || at_or_below(y, f.center)) return y;
  if (auto k = finite_difference(y, f.image)) return add_integer(f.anchor, *k);
  const Series& c = f.center.series();
  const Rational m(f.scale - 1);
  Series rep = (y.series().positive_part() + c.positive_part().scaled(m)).scaled(Rational(1, f.scale));
  const Rational offset = y.series().constant_term() + m * c.constant_term();
  return Element::from_series(std::move(rep) + Series::constant(offset, y.dim()));
}

Element shift_forward(const E3Shift& f, const Element& x) {
  const Series& xs = x.series();
  if (xs.is_zero() || sgn(xs.degree()[0]) <= 0) return x;
  Series rep;
  if (same_first_component_part(xs, f.a1.series()))
    rep = f.a1.series();
  else if (same_first_component_part(xs, f.a2.series()))
    rep = f.a2.series();
  else
    rep = xs.first_component_part();
  return Element::from_series(f.factor.series() * rep + (x.series() - rep));
}

// Whether the first-component part of y equals factor times that of a.
bool shifted_class(const Series& y, const Series& a, const Term& factor) {
  auto i = y.terms().begin();
  auto j = a.terms().begin();
  for (;; ++i, ++j) {
    const bool has_i = i != y.terms().end() && sgn(i->exp[0]) > 0;
    const bool has_j = j != a.terms().end() && sgn(j->exp[0]) > 0;
    if (!has_i || !has_j) return has_i == has_j;
    if (i->exp[0] != j->exp[0] || i->exp[1] - j->exp[1] != factor.exp[1] || i->coeff != factor.coeff * j->coeff)
      return false;
  }
}

Element shift_backward(const E3Shift& f, const Element& y) {
  const Series& ys = y.series();
  if (ys.is_zero() || sgn(ys.degree()[0]) <= 0) return y;
  const Series& factor = f.factor.series();
  for (const Element* anchor : {&f.a1, &f.a2}) {
    if (!shifted_class(ys, anchor->series(), factor.leading())) continue;
    const Series image = factor * anchor->series();
    return Element::from_series(anchor->series() + (ys - image));
  }
  const Series top = ys.first_component_part();
  const Term& ft = factor.leading();
  const Series rep = top.times_monomial(-ft.exp, 1 / ft.coeff);
  return Element::from_series(rep + (ys - factor * rep));
}

Element class_shift(const E0ClassShift& f, const Element& x, bool forward) {
  if (!finite_difference(x, f.anchor)) return x;
  return add_integer(x, forward ? f.offset : Integer(-f.offset));
}

}  // namespace

Element apply(const Descriptor& d, const Element& x) {
  return std::visit(overloaded{
                        [&](const Identity&) { return x; },
                        [&](const E2Affine& f) { return affine_forward(f, x); },
                        [&](const E3Shift& f) { return shift_forward(f, x); },
                        [&](const E0ClassShift& f) { return class_shift(f, x, true); },
                        [&](const SegmentExtend& f) {
                          if (x < f.a) return apply(*f.below, x);
                          return f.b + (x - f.a);
                        },
                        [&](const Compose& f) {
                          Element y = x;
                          for (auto it = f.parts.rbegin(); it != f.parts.rend(); ++it) y = apply(*it, y);
                          return y;
                        },
                        [&](const Inverse& f) { return apply_inverse(*f.inner, x); },
                    },
                    d.kind());
}

Element apply_inverse(const Descriptor& d, const Element& y) {
  return std::visit(overloaded{
                        [&](const Identity&) { return y; },
                        [&](const E2Affine& f) { return affine_backward(f, y); },
                        [&](const E3Shift& f) { return shift_backward(f, y); },
                        [&](const E0ClassShift& f) { return class_shift(f, y, false); },
                        [&](const SegmentExtend& f) {
                          if (y < f.b) return apply_inverse(*f.below, y);
                          return f.a + (y - f.b);
                        },
                        [&](const Compose& f) {
                          Element x = y;
                          for (const auto& part : f.parts) x = apply_inverse(part, x);
                          return x;
                        },
                        [&](const Inverse& f) { return apply(*f.inner, y); },
                    },
                    d.kind());
}

Descriptor invert(const Descriptor& d) {
  std::vector<Pin> pins;
  for (const auto& p : d.pins()) pins.push_back({p.to, p.from});
  return std::visit(overloaded{
                        [&](const Identity&) { return Descriptor(Identity{}, pins); },
                        [&](const E0ClassShift& f) {
                          return Descriptor(E0ClassShift{f.anchor, -f.offset}, pins);
                        },
                        [&](const Compose& f) {
                          Compose inv;
                          for (auto it = f.parts.rbegin(); it != f.parts.rend(); ++it) inv.parts.push_back(invert(*it));
                          return Descriptor(std::move(inv), pins);
                        },
                        [&](const Inverse& f) { return f.inner->with_pins(pins); },
                        [&](const auto&) { return Descriptor(Inverse{std::make_shared<const Descriptor>(d.with_pins({}))}, pins); },
                    },
                    d.kind());
}

Descriptor compose(const Descriptor& outer, const Descriptor& inner) {
  std::vector<Pin> pins;
  for (const auto& p : inner.pins()) pins.push_back({p.from, apply(outer, p.to)});
  return Descriptor(Compose{{outer, inner}}, std::move(pins));
}

Descriptor build_from_e2(const Element& a, const Element& b, const ModelConfig& cfg) {
  if (!equiv::decide(2, a, b, cfg).equivalent) throw NotEquivalent(2);
  const std::vector<Pin> pins{{a, b}};
  if (a == b) return Descriptor(Identity{}, pins);
  if (b < a) return invert(build_from_e2(b, a, cfg)).with_pins(pins);
  if (auto k = finite_difference(b, a)) return Descriptor(E0ClassShift{a, *k}, pins);

  const Division ratio = divmod(b, a, cfg);
  if (ratio.remainder.is_zero()) {
    // b = m*a: go to b - 1 and step within the class.
    const Descriptor step = build_from_e2(a, add_integer(b, -1), cfg);
    return compose(Descriptor(E0ClassShift{b, 1}), step).with_pins(pins);
  }
  // Least n with b < n*a; then (n-1)*a <= b.
  const Integer n = ratio.quotient.constant_term() + 1;
  const ScalarDivision part = divmod_scalar(b - a, n - 1);
  const Element center = a - part.quotient;
  const Element image = add_integer(b, -part.remainder);
  const Descriptor affine(E2Affine{a, image, n, center});
  if (part.remainder == 0) return affine.with_pins(pins);
  return compose(Descriptor(E0ClassShift{b, part.remainder}), affine).with_pins(pins);
}

Descriptor build_from_e3(const Element& a1, const Element& a2, const ModelConfig& cfg) {
  if (!equiv::decide(3, a1, a2, cfg).equivalent) throw NotEquivalent(3);
  if (equiv::decide(2, a1, a2, cfg).equivalent) return build_from_e2(a1, a2, cfg);
  const std::vector<Pin> pins{{a1, a2}};
  if (a2 < a1) return invert(build_from_e3(a2, a1, cfg)).with_pins(pins);

  Exponent s(2);
  s[1] = (*a2.deg())[1] - (*a1.deg())[1];
  const Element factor = Element::monomial(s);
  const Element target = factor * a1;
  const Descriptor shift(E3Shift{a1, target, factor});
  if (target == a2) return shift.with_pins(pins);
  return compose(build_from_e2(target, a2, cfg), shift).with_pins(pins);
}

Descriptor extend_initial_segment(const Descriptor& below, const Element& a, const Element& b) {
  return Descriptor(SegmentExtend{std::make_shared<const Descriptor>(below), a, b}, {{a, b}});
}

ValidationReport validate(const Descriptor& d, std::span<const Element> probes) {
  ValidationReport report;
  report.probes = probes.size();
  for (std::size_t i = 1; i < probes.size(); ++i)
    if (!(probes[i - 1] < probes[i])) throw PreconditionError("probes must be strictly increasing");

  auto fail = [](const char* check, const Element& x, const Element& y) {
    throw ValidationFailure(check, format_element(x), format_element(y));
  };

  std::vector<Element> images;
  images.reserve(probes.size());
  for (const auto& x : probes) {
    images.push_back(apply(d, x));
    if (apply_inverse(d, images.back()) != x) fail("inverse after map", x, images.back());
    const Element pre = apply_inverse(d, x);
    if (apply(d, pre) != x) fail("map after inverse", x, pre);
    ++report.round_trips;
  }
  for (std::size_t i = 1; i < probes.size(); ++i) {
    const Element& x = probes[i - 1];
    const Element& y = probes[i];
    if (!(images[i - 1] < images[i])) fail("monotonicity", x, y);
    ++report.monotone_pairs;
    const bool related = finite_difference(x, y).has_value();
    if (related != finite_difference(images[i - 1], images[i]).has_value()) fail("E0 transport", x, y);
    report.e0_related += related;
    ++report.e0_pairs;
  }
  for (const auto& pin : d.pins()) {
    if (apply(d, pin.from) != pin.to) fail("pin", pin.from, pin.to);
    ++report.pins;
  }
  return report;
}

namespace {

void collect_anchors(const Descriptor& d, std::vector<Element>& out) {
  for (const auto& p : d.pins()) {
    out.push_back(p.from);
    out.push_back(p.to);
  }
  std::visit(overloaded{
                 [&](const Identity&) {},
                 [&](const E2Affine& f) {
                   out.insert(out.end(), {f.anchor, f.image, f.center});
                 },
                 [&](const E3Shift& f) {
                   out.insert(out.end(), {f.a1, f.a2, f.factor * f.a1, f.factor * f.a2});
                 },
                 [&](const E0ClassShift& f) { out.push_back(f.anchor); },
                 [&](const SegmentExtend& f) {
                   out.insert(out.end(), {f.a, f.b});
                   collect_anchors(*f.below, out);
                 },
                 [&](const Compose& f) {
                   for (const auto& part : f.parts) collect_anchors(part, out);
                 },
                 [&](const Inverse& f) { collect_anchors(*f.inner, out); },
             },
             d.kind());
}

}  // namespace

std::vector<Element> probe_set(const Descriptor& d, int dim, std::uint64_t seed, std::size_t count) {
  std::vector<Element> anchors;
  collect_anchors(d, anchors);
  SampleProfile profile;
  profile.dim = dim;
  profile.standard_percent = 5;
  Sampler rng(profile, seed);

  std::vector<Element> probes;
  probes.reserve(count + 8);
  auto push_cluster = [&](const Element& base) {
    // base and a few class-mates, so some consecutive probes are E0-related.
    const long width = rng.range(0, 2);
    for (long k = -width; k <= width && probes.size() < count; ++k)
      if (k >= 0 || !base.is_standard()) {
        if (auto x = Element::try_from_series(base.series() + Series::constant(Rational(k), dim))) probes.push_back(*x);
      }
  };
  for (const auto& a : anchors) push_cluster(a);

  for (std::size_t guard = 0; probes.size() < count && guard < 16 * count; ++guard) {
    Element base;
    const auto kind = rng.below(anchors.empty() ? 1 : 4);
    if (kind == 0) {
      base = rng.element();
    } else {
      const Element& a = anchors[rng.below(anchors.size())];
      if (a.is_standard()) {
        base = rng.element();
      } else if (kind == 1) {
        base = rng.related(a);
      } else if (kind == 2) {
        base = a + rng.nonstandard();
      } else {
        const long q = rng.range(1, 4);
        base = divmod_scalar(a * Element::constant(rng.range(1, 2 * q), dim), q).quotient;
      }
    }
    push_cluster(base);
    if (probes.size() >= count) {
      std::sort(probes.begin(), probes.end());
      probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    }
  }
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  return probes;
}

std::optional<Integer> almost_add_defect(const Descriptor& d, const Element& a, const Element& b) {
  const Series defect = apply(d, a + b).series() - apply(d, a).series() - apply(d, b).series();
  if (!defect.is_finite()) return std::nullopt;
  return defect.constant_term().get_num();
}

}  // namespace nsarith::automorph
