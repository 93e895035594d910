#include "nsarith/suite.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>

#include "nsarith/errors.hpp"
#include "nsarith/oracle.hpp"
#include "nsarith/sampler.hpp"
#include "nsarith/text.hpp"

namespace nsarith::suite {

using json::Json;

namespace {

std::string F(const Element& e) { return format_element(e); }

struct Check {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::size_t partial = 0;
  Json failures = Json::array();
  Json partial_kinds = Json::object();
  Json stats = Json::object();

  void ok() { ++cases; }
  void fail(Json detail) {
    ++cases;
    ++violations;
    if (failures.size() < 3) failures.push_back(std::move(detail));
  }
  void expect(bool cond, const std::function<Json()>& detail) { cond ? ok() : fail(detail()); }
  void partiality(const PartialityError& e) {
    ++cases;
    ++partial;
    const std::string kind = dynamic_cast<const NonTerminatingQuotient*>(&e) ? "NonTerminatingQuotient"
                                                                            : "CoefficientNotRepresentable";
    partial_kinds[kind] = partial_kinds.value(kind, 0) + 1;
  }
  void count(const std::string& key, std::size_t by = 1) { stats[key] = stats.value(key, std::size_t{0}) + by; }

  Json to_json() const {
    Json out{{"check", name}, {"cases", cases}, {"violations", violations}};
    if (partial) {
      out["partial"] = partial;
      out["partial_kinds"] = partial_kinds;
    }
    if (!stats.empty()) out["stats"] = stats;
    if (!failures.empty()) out["failures"] = failures;
    return out;
  }
};

class Suite {
 public:
  Check& operator[](const std::string& name) {
    for (auto& c : checks_)
      if (c.name == name) return c;
    checks_.push_back(Check{name});
    return checks_.back();
  }
  std::size_t violations() const {
    std::size_t v = 0;
    for (const auto& c : checks_) v += c.violations;
    return v;
  }
  Json to_json() const {
    Json out = Json::array();
    for (const auto& c : checks_) out.push_back(c.to_json());
    return out;
  }

 private:
  // Stable references: suites hold Check& across later insertions.
  std::deque<Check> checks_;
};

struct Ctx {
  SuiteOptions opt;
  SampleProfile profile;
  ModelConfig cfg;
  std::uint64_t stream = 0;
};

template <class Fn>
void for_cases(const Ctx& ctx, Suite& suite, std::size_t n, Fn fn) {
  for (std::size_t i = 0; i < n; ++i) {
    Sampler s(ctx.profile, mix_seed(ctx.opt.seed, ctx.stream, i));
    try {
      fn(s, i);
    } catch (const Error& e) {
      suite["unexpected_errors"].fail(Json{{"case", i}, {"error", e.what()}});
    }
  }
}

Json pair(const Element& a, const Element& b) { return Json::array({F(a), F(b)}); }

bool E(int level, const Element& a, const Element& b, const ModelConfig& cfg) {
  return equiv::decide(level, a, b, cfg).equivalent;
}

Rational ratio(Sampler& s, long lo, long hi) {
  const long q = s.range(1, 4);
  Rational r(s.range(lo * q, hi * q), q);
  r.canonicalize();
  return r;
}

// b with a E2 b: rescaled positive part, an optional lower perturbation and a constant.
Element e2_mate(Sampler& s, const Element& a, const ModelConfig& cfg) {
  const Exponent d = *a.deg();
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rational r = ratio(s, 0, 4);
    if (sgn(r) <= 0) r = Rational(1, 2);
    Series b = a.series().positive_part().scaled(r);
    if (s.coin(50)) b = b + Series::monomial(d.scaled(Rational(1, 2)), s.coefficient(false));
    b = b + Series::constant(Rational(s.range(0, 5)), a.dim());
    if (auto e = Element::try_from_series(b); e && !e->is_standard() && E(2, a, *e, cfg)) return *e;
  }
  return add_integer(a, 1);
}

// d=2 element with positive first degree component.
Element e3_anchor(Sampler& s) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    const Element a = s.nonstandard();
    if (sgn((*a.deg())[0]) > 0) return a;
  }
  return s.nonstandard() + Element::t(2);
}

// b with a E3 b, d=2: the positive-first-component part moved by t^(0,y) and rescaled.
Element e3_mate(Sampler& s, const Element& a) {
  Exponent shift(2);
  shift[1] = ratio(s, -2, 2);
  const Series top = a.series().first_component_part();
  return Element::from_series(top.times_monomial(shift, s.coefficient(true)) + (a.series() - top));
}

// ---------------------------------------------------------------------------

void suite_algebra(const Ctx& ctx, Suite& suite) {
  for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t) {
    const Element a = s.element(), b = s.element(), c = s.element();
    const Element zero = Element::zero(ctx.opt.dim), one = Element::one(ctx.opt.dim);
    auto trip = [&] { return Json::array({F(a), F(b), F(c)}); };

    suite["add_commutative"].expect(a + b == b + a, trip);
    suite["add_associative"].expect((a + b) + c == a + (b + c), trip);
    suite["mul_commutative"].expect(a * b == b * a, trip);
    suite["mul_associative"].expect((a * b) * c == a * (b * c), trip);
    suite["distributive"].expect(a * (b + c) == a * b + a * c, trip);
    suite["identities"].expect(a + zero == a && one * a == a && (a * zero).is_zero(), trip);

    const Ordering ab = cmp(a, b), ba = cmp(b, a);
    const bool antisym = (ab == Ordering::Less && ba == Ordering::Greater) ||
                         (ab == Ordering::Greater && ba == Ordering::Less) ||
                         (ab == Ordering::Equal && ba == Ordering::Equal && a == b);
    suite["order_total"].expect(antisym, trip);
    if (a < b && b < c) suite["order_transitive"].expect(a < c, trip);
    if (a < b) {
      suite["order_translation_add"].expect(a + c < b + c, trip);
      if (!c.is_zero()) suite["order_translation_mul"].expect(a * c < b * c, trip);
    }
    suite["discrete"].expect(!(a < b && b < add_integer(a, 1)), trip);

    if (b <= a) {
      suite["sub_inverse"].expect(b + (a - b) == a, trip);
    } else {
      bool threw = false;
      try {
        (void)(a - b);
      } catch (const Underflow&) {
        threw = true;
      }
      suite["sub_underflow"].expect(threw, trip);
    }

    const Integer n(static_cast<unsigned long>(s.range(1, 7)));
    const ScalarDivision sd = divmod_scalar(a, n);
    suite["divmod_scalar"].expect(
        Element::constant(n, ctx.opt.dim) * sd.quotient + Element::constant(sd.remainder, ctx.opt.dim) == a &&
            sd.remainder >= 0 && sd.remainder < n,
        [&] { return Json{{"a", F(a)}, {"n", to_string(n)}}; });

    if (!b.is_zero()) {
      try {
        const Division d = divmod(a, b, ctx.cfg);
        suite["divmod"].expect(d.quotient * b + d.remainder == a && d.remainder < b, [&] { return pair(a, b); });
      } catch (const NonTerminatingQuotient& e) {
        if (ctx.opt.dim == 1)
          suite["divmod"].fail(Json{{"pair", pair(a, b)}, {"error", "NonTerminatingQuotient in d=1"}});
        else
          suite["divmod"].partiality(e);
      }
    }

    const unsigned long k = static_cast<unsigned long>(s.range(1, 3));
    if (one <= a) {
      try {
        const Element m = root_floor(a, k, ctx.cfg);
        suite["root_floor"].expect(pow(m, k) <= a && a < pow(m + one, k),
                                   [&] { return Json{{"a", F(a)}, {"k", k}, {"m", F(m)}}; });
      } catch (const PartialityError& e) {
        suite["root_floor"].partiality(e);
      }
    }

    const unsigned long p = static_cast<unsigned long>(s.range(0, 4));
    suite["pow"].expect(pow(a, 0) == one && pow(a, p) * a == pow(a, p + 1), [&] { return Json{{"a", F(a)}, {"p", p}}; });
  });
}

void suite_refinement(const Ctx& ctx, Suite& suite) {
  for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t) {
    const Element a = s.nonstandard();
    const Element b = s.related(a);
    bool v[5];
    for (int l = 0; l <= 4; ++l) v[l] = E(l, a, b, ctx.cfg);
    for (int l = 0; l < 4; ++l) {
      Check& c = suite["E" + std::to_string(l) + "_refines_E" + std::to_string(l + 1)];
      if (v[l]) c.count("premise");
      if (v[l + 1] && !v[l]) c.count("strict");
      c.expect(!v[l] || v[l + 1], [&] { return pair(a, b); });
    }
  });
}

void suite_equivalence(const Ctx& ctx, Suite& suite) {
  for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t) {
    const Element a = s.nonstandard();
    const Element b = s.related(a);
    const Element c = s.coin(50) ? s.related(b) : s.related(a);
    for (int l = 0; l <= 4; ++l) {
      const std::string L = "E" + std::to_string(l);
      suite[L + "_reflexive"].expect(E(l, a, a, ctx.cfg), [&] { return Json::array({F(a)}); });
      const bool ab = E(l, a, b, ctx.cfg), bc = E(l, b, c, ctx.cfg);
      suite[L + "_symmetric"].expect(ab == E(l, b, a, ctx.cfg), [&] { return pair(a, b); });
      if (ab && bc) {
        suite[L + "_transitive"].expect(E(l, a, c, ctx.cfg), [&] { return Json::array({F(a), F(b), F(c)}); });
      }
    }
  });
}

void suite_convexity(const Ctx& ctx, Suite& suite) {
  for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t) {
    Element a, c;
    std::optional<Element> b;
    // Redraw until a < b < c exists; adjacent or equal draws carry no information.
    for (int attempt = 0; !b; ++attempt) {
      a = s.nonstandard();
      c = s.related(a);
      if (c < a) std::swap(a, c);
      b = s.between(a, c);
      if (!b) suite["triples"].count("redrawn");
      if (attempt == 64) throw InvariantViolation("sampler produced no ordered triple");
    }
    suite["triples"].ok();
    for (int l = 0; l <= 4; ++l) {
      Check& chk = suite["E" + std::to_string(l) + "_convex"];
      const bool ac = E(l, a, c, ctx.cfg);
      if (ac) chk.count("premise");
      chk.expect(!ac || (E(l, a, *b, ctx.cfg) && E(l, *b, c, ctx.cfg)),
                 [&] { return Json::array({F(a), F(*b), F(c)}); });
    }
  });
}

void suite_closure(const Ctx& ctx, Suite& suite) {
  for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t) {
    const Element a1 = s.nonstandard(), b1 = s.related(a1);
    const Element a2 = s.nonstandard(), b2 = s.related(a2);
    auto quad = [&] { return Json::array({F(a1), F(b1), F(a2), F(b2)}); };
    for (int l = 0; l <= 4; ++l) {
      const std::string L = "E" + std::to_string(l);
      const bool premise = E(l, a1, b1, ctx.cfg) && E(l, a2, b2, ctx.cfg);
      Check& add = suite[L + "_closed_add"];
      if (premise) add.count("premise");
      add.expect(!premise || E(l, a1 + a2, b1 + b2, ctx.cfg), quad);
      if (l >= 2) {
        Check& mul = suite[L + "_closed_mul"];
        if (premise) mul.count("premise");
        mul.expect(!premise || E(l, a1 * a2, b1 * b2, ctx.cfg), quad);
      }
    }
  });
}

Element companion_candidate(Sampler& s, const Element& a) {
  const int dim = a.dim();
  switch (s.below(dim == 2 ? 4 : 3)) {
    case 0:
      return Element::constant(s.range(1, 5), dim);
    case 1: {
      Rational r(s.range(1, 5), 4);
      r.canonicalize();
      return add_integer(Element::monomial(a.deg()->scaled(r), s.coefficient(true)), s.range(0, 3));
    }
    case 2:
      return s.nonstandard();
    default: {
      Exponent e(2);
      e[1] = Rational(s.range(1, 12), 3);
      return add_integer(Element::monomial(e, s.coefficient(true)), s.range(0, 3));
    }
  }
}

void suite_witness_sets(const Ctx& ctx, Suite& suite) {
  for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t) {
    const Element a = ctx.opt.dim == 2 ? e3_anchor(s) : s.nonstandard();
    struct Rel {
      int level;
      Element b;
      bool (*small)(const Element&, const Element&);
    };
    const Rel rels[] = {
        {3, ctx.opt.dim == 2 ? e3_mate(s, a) : e2_mate(s, a, ctx.cfg), &oracle::multiplicatively_small},
        {1, Element::from_series(a.series() + Series::monomial(a.deg()->scaled(Rational(1, 2)), 1)),
         &oracle::linearly_small},
    };
    for (const auto& rel : rels) {
      const std::string L = "E" + std::to_string(rel.level);
      if (!E(rel.level, a, rel.b, ctx.cfg)) {
        suite[L + "_pairs"].fail(pair(a, rel.b));
        continue;
      }
      suite[L + "_pairs"].ok();
      const Element c1 = companion_candidate(s, a), c2 = companion_candidate(s, a);
      auto info = [&] { return Json{{"pair", pair(a, rel.b)}, {"c", Json::array({F(c1), F(c2)})}}; };
      suite[L + "_small_same_for_both"].expect(
          rel.small(c1, a) == rel.small(c1, rel.b) && rel.small(c2, a) == rel.small(c2, rel.b), info);
      if (rel.small(c1, a) && rel.small(c2, a)) {
        Check& closed = suite[L + "_small_closed"];
        const bool sum = rel.small(c1 + c2, a);
        const bool prod = rel.level == 3 ? rel.small(c1 * c2, a) : true;
        closed.expect(sum && prod, info);
        const Element& lo = c1 < c2 ? c1 : c2;
        const Element& hi = c1 < c2 ? c2 : c1;
        if (auto mid = s.between(lo, hi)) suite[L + "_small_convex"].expect(rel.small(*mid, a), info);
      }
    }
  });
}

void suite_agreement(const Ctx& ctx, Suite& suite) {
  for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t) {
    const Element a = s.nonstandard();
    const Element b = s.related(a);
    for (int l = 0; l <= 4; ++l) {
      const std::string L = "E" + std::to_string(l);
      const Verdict v = equiv::decide(l, a, b, ctx.cfg);
      if (!v.equivalent) {
        suite[L + "_negative_refuted"].expect(oracle::refutes(l, a, b), [&] { return pair(a, b); });
        oracle::SearchBounds small = oracle::lattice_bounds(a, b, 16);
        suite[L + "_negative_unwitnessed"].expect(!oracle::search(l, a, b, small), [&] { return pair(a, b); });
        continue;
      }
      suite[L + "_witness_valid"].expect(oracle::check_witness(l, a, b, *v.witness), [&] { return pair(a, b); });
      suite[L + "_positive_not_refuted"].expect(!oracle::refutes(l, a, b), [&] { return pair(a, b); });
      if (const auto* bound = std::get_if<BoundN>(&*v.witness)) {
        const Integer n = equiv::minimal_bound_n(l, a, b, ctx.cfg);
        suite[L + "_minimal_n"].expect(
            oracle::check_witness(l, a, b, BoundN{n}) && !oracle::check_witness(l, a, b, BoundN{n - 1}),
            [&] { return Json{{"pair", pair(a, b)}, {"n", to_string(n)}}; });
        const oracle::SearchBounds bounds{n.get_ui() + 1, {}};
        const auto found = oracle::search(l, a, b, bounds);
        suite[L + "_search_agrees"].expect(found && std::get<BoundN>(*found).n == bound->n,
                                           [&] { return pair(a, b); });
      } else {
        const auto bounds = oracle::lattice_bounds(a, b, std::max<std::uint64_t>(ctx.cfg.search_n_max, 16));
        suite[L + "_search_agrees"].expect(oracle::search(l, a, b, bounds).has_value(), [&] { return pair(a, b); });
      }
    }
  });
}

void suite_separation(const Ctx& ctx, Suite& suite) {
  const int dim = ctx.opt.dim;
  auto P = [&](const char* text) { return parse_element(text, dim); };
  struct Exhibit {
    int level;
    const char* a;
    const char* b;
  };
  std::vector<Exhibit> exhibits;
  if (dim == 1) {
    exhibits = {{0, "t^2 + t", "t^2"}, {1, "t^2", "2*t^2"}, {3, "t", "t^2"}};
  } else {
    exhibits = {{0, "t^(2,0) + t^(1,0)", "t^(2,0)"},
                {1, "t^(1,0)", "2*t^(1,0)"},
                {2, "t^(1,0)", "t^(1,1)"},
                {3, "t^(1,0)", "t^(2,0)"}};
  }
  Check& check = suite["strict_separations"];
  Json shown = Json::array();
  for (const auto& ex : exhibits) {
    const Element a = P(ex.a), b = P(ex.b);
    const Verdict lower = equiv::decide(ex.level, a, b, ctx.cfg);
    const Verdict upper = equiv::decide(ex.level + 1, a, b, ctx.cfg);
    const bool refuted = !lower.equivalent && oracle::refutes(ex.level, a, b);
    const bool witnessed = upper.equivalent && oracle::check_witness(ex.level + 1, a, b, *upper.witness);
    Json entry{{"strict", "E" + std::to_string(ex.level) + " < E" + std::to_string(ex.level + 1)},
               {"a", F(a)},
               {"b", F(b)},
               {"lower_refuted", refuted},
               {"upper_witness", upper.witness ? json::to_json(*upper.witness) : Json(nullptr)}};
    shown.push_back(entry);
    check.expect(refuted && witnessed, [&] { return entry; });
  }
  if (dim == 1) {
    // E2 and E3 coincide in d=1: no exhibit can exist.
    check.stats["collapsed"] = "E2 = E3 in d=1";
  }
  check.stats["exhibits"] = std::move(shown);
}

void suite_automorph(const Ctx& ctx, Suite& suite) {
  const int dim = ctx.opt.dim;
  for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t i) {
    for (int route : {2, 3}) {
      const std::string R = route == 2 ? "e2" : "e3";
      Element a, b;
      if (route == 2) {
        a = s.nonstandard();
        b = e2_mate(s, a, ctx.cfg);
      } else if (dim == 2) {
        a = e3_anchor(s);
        b = e3_mate(s, a);
      } else {
        a = s.nonstandard();
        b = e2_mate(s, a, ctx.cfg);
      }
      if (s.coin(25)) std::swap(a, b);
      if (route == 3 && !E(2, a, b, ctx.cfg)) suite[R + "_build"].count("proper_e3");

      automorph::Descriptor d;
      try {
        d = route == 2 ? automorph::build_from_e2(a, b, ctx.cfg) : automorph::build_from_e3(a, b, ctx.cfg);
        suite[R + "_build"].ok();
      } catch (const Error& e) {
        suite[R + "_build"].fail(Json{{"pair", pair(a, b)}, {"error", e.what()}});
        continue;
      }
      suite[R + "_anchor"].expect(automorph::apply(d, a) == b, [&] { return pair(a, b); });

      const auto probes = automorph::probe_set(d, dim, mix_seed(ctx.opt.seed, 1000 + route, i), ctx.opt.probes);
      Check& val = suite[R + "_validate"];
      try {
        const auto report = automorph::validate(d, probes);
        val.ok();
        val.count("probe_pairs", report.monotone_pairs);
        val.count("e0_related_pairs", report.e0_related);
        if (probes.size() < ctx.opt.probes) val.count("short_probe_sets");
      } catch (const ValidationFailure& e) {
        val.fail(Json{{"pair", pair(a, b)}, {"descriptor", json::to_json(d)}, {"error", e.what()}});
      }

      const auto back = json::descriptor_from_json(json::to_json(d), dim);
      suite["descriptor_json_roundtrip"].expect(json::to_json(back) == json::to_json(d) && automorph::apply(back, a) == b,
                                                [&] { return pair(a, b); });
    }

    // Negative control: a map that collapses a-1 and a must be rejected.
    const Element a = s.nonstandard();
    const automorph::Descriptor broken =
        automorph::extend_initial_segment(automorph::Descriptor(), a, add_integer(a, -1));
    const std::vector<Element> probes{add_integer(a, -1), a};
    bool caught = false;
    try {
      automorph::validate(broken, probes);
    } catch (const ValidationFailure&) {
      caught = true;
    }
    suite["negative_control_rejected"].expect(caught, [&] { return Json::array({F(a)}); });

    // Additive defect: 0 for the identity, a standard integer for a class shift.
    const Element x = s.nonstandard(), y = s.nonstandard();
    suite["defect_identity"].expect(automorph::almost_add_defect(automorph::Descriptor(), x, y) == Integer(0),
                                    [&] { return pair(x, y); });
    const automorph::Descriptor shift(automorph::E0ClassShift{x, 1});
    const auto defect = automorph::almost_add_defect(shift, x, y);
    const Integer expected = Integer(finite_difference(x + y, x) ? 1 : 0) - 1 - (finite_difference(y, x) ? 1 : 0);
    suite["defect_class_shift"].expect(defect && *defect == expected, [&] { return pair(x, y); });
  });
}

void suite_sequences(const Ctx& ctx, Suite& suite) {
  using analysis::Direction;
  for (int level : {0, 2}) {
    for (Direction dir : {Direction::Up, Direction::Down}) {
      const std::string name = "e" + std::to_string(level) + "_" + analysis::to_string(dir);
      Check& check = suite[name];
      for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t) {
        const Element a = s.nonstandard();
        Element b = level == 0 ? Element::from_series(a.series() + Series::constant(Rational(s.range(-20, 20)), ctx.opt.dim))
                               : e2_mate(s, a, ctx.cfg);
        const std::size_t idx = analysis::passing_index(
            level == 0 ? analysis::e0_seq(a, 1, dir) : analysis::e2_seq(a, 1, dir), a, b, ctx.cfg);
        const auto seq = level == 0 ? analysis::e0_seq(a, idx + 1, dir) : analysis::e2_seq(a, idx + 1, dir);
        bool members = true;
        for (const auto& term : seq.terms) members = members && E(level, a, term, ctx.cfg);
        check.expect(analysis::is_monotone(seq) && members && analysis::passes(seq, idx, b),
                     [&] { return Json{{"a", F(a)}, {"b", F(b)}, {"index", idx}}; });
        Json& most = check.stats["max_index"];
        most = std::max<std::size_t>(most.is_null() ? 0 : most.get<std::size_t>(), idx);
      });
    }
  }
}

void suite_b11(const Ctx& ctx, Suite& suite) {
  using analysis::Direction;
  constexpr std::size_t kTerms = 3;
  for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t) {
    Element a;
    if (s.coin(50)) {
      // Leading coefficient and exponents divisible enough for 8th roots.
      SampleProfile small = ctx.profile;
      small.max_terms = 2;
      Sampler inner(small, s.below(~0ULL));
      a = pow(inner.nonstandard(), 1UL << kTerms);
      if (s.coin(50)) a = add_integer(a, s.range(0, 9));
    } else {
      a = s.nonstandard();
    }
    for (Direction dir : {Direction::Up, Direction::Down}) {
      Check& check = suite[std::string("b11_") + analysis::to_string(dir)];
      try {
        const auto seq = analysis::b11_seq(a, kTerms, dir, ctx.cfg);
        bool ok = analysis::is_monotone(seq);
        for (std::size_t i = 0; i < seq.terms.size(); ++i) ok = ok && analysis::b11_certify(seq, i, a, ctx.cfg);
        check.expect(ok, [&] { return Json{{"a", F(a)}, {"sequence", json::to_json(seq)}}; });
        if (ok) check.count("certified_terms", seq.terms.size());
      } catch (const PartialityError& e) {
        check.partiality(e);
      }
    }
  });
}

void suite_embed(const Ctx& ctx, Suite& suite) {
  const int dim = ctx.opt.dim;
  for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t) {
    const Element anchor = dim == 2 ? e3_anchor(s) : s.nonstandard();
    const Element b1 = dim == 2 ? e3_anchor(s) : s.nonstandard();
    const Element b2 = s.coin(40) ? (dim == 2 ? e3_mate(s, b1) : e2_mate(s, b1, ctx.cfg))
                                  : (dim == 2 ? e3_anchor(s) : s.nonstandard());
    const auto e1 = analysis::real_embed(anchor, b1, ctx.cfg);
    const auto e2 = analysis::real_embed(anchor, b2, ctx.cfg);
    auto info = [&] { return Json{{"anchor", F(anchor)}, {"b", pair(b1, b2)}}; };
    const bool same = E(3, b1, b2, ctx.cfg);
    suite["constant_on_E3_classes"].expect(same == (e1.value == e2.value), info);
    if (!same) {
      suite["order_preserving"].expect((b1 < b2) == (e1.value < e2.value), info);
    }
    const auto prod = analysis::real_embed(anchor, b1 * b2, ctx.cfg);
    suite["additive_over_products"].expect(prod.value == e1.value + e2.value, info);
    suite["nondegenerate"].expect(!e1.degenerate && !e2.degenerate, info);
  });
  if (dim == 2) {
    const Element a = parse_element("t^(0,1)", 2);
    const auto e = analysis::real_embed(a, parse_element("t^(0,3) + 1", 2), ctx.cfg);
    suite["degenerate_class_flagged"].expect(e.degenerate && e.value == 3, [] { return Json("t^(0,1)"); });
  }
}

void suite_roundtrip(const Ctx& ctx, Suite& suite) {
  for_cases(ctx, suite, ctx.opt.samples, [&](Sampler& s, std::size_t i) {
    const Element a = s.element();
    suite["text_roundtrip"].expect(parse_element(format_element(a), ctx.opt.dim) == a, [&] { return Json(F(a)); });
    suite["json_roundtrip"].expect(json::element_from_json(json::to_json(a), ctx.opt.dim) == a,
                                   [&] { return Json(F(a)); });
    Sampler again(ctx.profile, mix_seed(ctx.opt.seed, ctx.stream, i));
    suite["sampler_deterministic"].expect(again.element() == a, [&] { return Json(F(a)); });
    suite["invariants"].expect(in_model(a.series()), [&] { return Json(F(a)); });
  });
}

using SuiteFn = void (*)(const Ctx&, Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"algebra", suite_algebra},       {"refinement", suite_refinement}, {"convexity", suite_convexity},
      {"closure", suite_closure},       {"equivalence", suite_equivalence}, {"witness-sets", suite_witness_sets},
      {"agreement", suite_agreement},   {"separation", suite_separation}, {"automorph", suite_automorph},
      {"sequences", suite_sequences},   {"b11", suite_b11},               {"embed", suite_embed},
      {"roundtrip", suite_roundtrip},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const SuiteOptions& options) {
  if (options.dim != 1 && options.dim != 2) throw PreconditionError("dim must be 1 or 2");
  if (options.samples < 1) throw PreconditionError("samples must be >= 1");
  if (options.probes < 2) throw PreconditionError("probes must be >= 2");
  Ctx ctx;
  ctx.opt = options;
  ctx.profile.dim = options.dim;
  ctx.profile.seed = options.seed;
  ctx.cfg = options.model;
  ctx.cfg.dim = options.dim;
  ctx.cfg.validate();

  SuiteReport report;
  Json suites = Json::array();
  bool matched = false;
  for (std::size_t k = 0; k < registry().size(); ++k) {
    const auto& [name, fn] = registry()[k];
    if (options.name != "all" && options.name != name) continue;
    matched = true;
    ctx.stream = k + 1;
    ctx.profile.standard_percent = name == "algebra" || name == "roundtrip" ? 10 : 0;
    Suite suite;
    fn(ctx, suite);
    const std::size_t v = suite.violations();
    report.violations += v;
    suites.push_back(Json{{"suite", name}, {"violations", v}, {"checks", suite.to_json()}});
  }
  if (!matched) throw PreconditionError("unknown suite: " + options.name);
  report.json = Json{{"suite", options.name},   {"dim", options.dim},
                     {"samples", options.samples}, {"seed", options.seed},
                     {"ok", report.violations == 0}, {"violations", report.violations},
                     {"suites", std::move(suites)}};
  return report;
}

}  // namespace nsarith::suite
