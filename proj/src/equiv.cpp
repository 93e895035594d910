#include "nsarith/equiv.hpp"

#include "nsarith/errors.hpp"
#include "nsarith/oracle.hpp"

namespace nsarith::equiv {

namespace {

void check_level(int level) {
  if (level < 0 || level > 4) throw PreconditionError("equivalence level must be in 0..4");
}

// Least n with a < n*b and b < n*a, for elements of equal degree.
Integer ratio_bound(const Element& a, const Element& b, const ModelConfig& cfg) {
  const Integer ab = floor_quotient(a, b, cfg).constant_term();
  const Integer ba = floor_quotient(b, a, cfg).constant_term();
  return (ab > ba ? ab : ba) + 1;
}

// Least n >= 1 with x < y^n. The degree test settles every n except the one
// (if any) where n*deg(y) = deg(x), which is checked exactly.
Integer least_power_above(const Element& x, const Element& y) {
  const Exponent dx = *x.deg();
  const Exponent dy = *y.deg();
  const int r = dx.rank();
  Integer n = floor(dx[r] / dy[r]);
  if (n < 1) n = 1;
  while (compare(dy.scaled(Rational(n)), dx) < 0) ++n;
  while (n > 1 && compare(dy.scaled(Rational(n - 1)), dx) >= 0) --n;
  if (compare(dy.scaled(Rational(n)), dx) == 0 && !(x < pow(y, n.get_ui()))) ++n;
  return n;
}

Element exponent_monomial(const Exponent& e) { return Element::monomial(e); }

// Post-validates a synthesized witness, escalating it step by step up to
// cfg.search_n_max if the closed form ever lands on a boundary.
Witness certify(int level, const Element& a, const Element& b, Witness w, const ModelConfig& cfg) {
  for (std::uint64_t step = 0; step <= cfg.search_n_max; ++step) {
    if (oracle::check_witness(level, a, b, w)) return w;
    if (auto* bound = std::get_if<BoundN>(&w)) {
      bound->n += 1;
    } else {
      auto& c = std::get<Companion>(w).c;
      if (level == 3 && !c.is_standard()) {
        Exponent e = *c.deg();
        e[1] += 1;
        c = exponent_monomial(e);
      } else {
        c = add_integer(c, 1);
      }
    }
  }
  throw Error("witness synthesis failed validation at level " + std::to_string(level));
}

Verdict decide_unchecked(int level, const Element& a, const Element& b, const ModelConfig& cfg) {
  Verdict v;
  v.level = level;
  v.reason.deg_a = a.deg();
  v.reason.deg_b = b.deg();
  const Exponent& da = *v.reason.deg_a;
  const Exponent& db = *v.reason.deg_b;
  const int dim = a.dim();

  switch (level) {
    case 0: {
      const Series diff = a.series() - b.series();
      if (!diff.is_zero()) v.reason.deg_diff = diff.degree();
      if (!diff.is_finite()) {
        v.reason.rule = "positive-exponent parts differ";
        return v;
      }
      v.reason.rule = "difference is standard";
      v.equivalent = true;
      v.witness = BoundN{Integer(Rational(abs(diff.constant_term())).get_num() + 1)};
      return v;
    }
    case 1: {
      const Series diff = a.series() - b.series();
      Exponent small = Exponent::zero(dim);
      if (!diff.is_zero()) {
        v.reason.deg_diff = diff.degree();
        if (diff.degree() > small) small = diff.degree();
      }
      if (!(small < da)) {
        v.reason.rule = "deg(a-b) is not below deg(a)";
        return v;
      }
      v.reason.rule = "deg(a-b) below deg(a)";
      v.equivalent = true;
      // A companion strictly between |a-b| and a in degree.
      v.witness = Companion{add_integer(exponent_monomial((small + da).scaled(Rational(1, 2))), 1)};
      return v;
    }
    case 2: {
      if (da != db) {
        v.reason.rule = "degrees differ";
        return v;
      }
      v.reason.rule = "degrees equal";
      v.equivalent = true;
      v.witness = BoundN{ratio_bound(a, b, cfg)};
      return v;
    }
    case 3: {
      if (da == db) {
        v.reason.rule = dim == 1 ? "degrees equal (E3 coincides with E2 in d=1)" : "degrees equal";
        v.equivalent = true;
        v.witness = Companion{Element::constant(ratio_bound(a, b, cfg), dim)};
        return v;
      }
      if (dim == 1) {
        v.reason.rule = "degrees differ (E3 coincides with E2 in d=1)";
        return v;
      }
      if (da[0] != db[0]) {
        v.reason.rule = "first degree components differ";
        return v;
      }
      if (sgn(da[0]) == 0) {
        v.reason.rule = "first degree components vanish and degrees differ";
        return v;
      }
      v.reason.rule = "first degree components equal and positive";
      v.equivalent = true;
      Exponent gap(2);
      gap[1] = abs(da[1] - db[1]) + 1;
      v.witness = Companion{exponent_monomial(gap)};
      return v;
    }
    case 4: {
      if (!archimedean_equivalent(da, db)) {
        v.reason.rule = "degrees in different Archimedean classes";
        return v;
      }
      v.reason.rule = "degrees Archimedean-equivalent";
      v.equivalent = true;
      const Integer n1 = least_power_above(a, b);
      const Integer n2 = least_power_above(b, a);
      v.witness = BoundN{n1 > n2 ? n1 : n2};
      return v;
    }
  }
  throw PreconditionError("equivalence level must be in 0..4");
}

}  // namespace

Verdict decide(int level, const Element& a, const Element& b, const ModelConfig& cfg) {
  check_level(level);
  if (a.dim() != b.dim()) throw InvariantViolation("element dimensions differ");
  if (a.is_standard() || b.is_standard()) throw StandardInput();
  Verdict v = decide_unchecked(level, a, b, cfg);
  if (v.equivalent) v.witness = certify(level, a, b, std::move(*v.witness), cfg);
  return v;
}

Integer minimal_bound_n(int level, const Element& a, const Element& b, const ModelConfig& cfg) {
  if (level != 0 && level != 2 && level != 4) throw PreconditionError("bound witnesses exist for levels 0, 2, 4");
  const Verdict v = decide(level, a, b, cfg);
  if (!v.equivalent) throw NotEquivalent(level);
  return std::get<BoundN>(*v.witness).n;
}

Element companion_witness(int level, const Element& a, const Element& b, const ModelConfig& cfg) {
  if (level != 1 && level != 3) throw PreconditionError("companion witnesses exist for levels 1, 3");
  const Verdict v = decide(level, a, b, cfg);
  if (!v.equivalent) throw NotEquivalent(level);
  return std::get<Companion>(*v.witness).c;
}

}  // namespace nsarith::equiv
