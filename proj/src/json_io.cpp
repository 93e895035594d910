#include "nsarith/json_io.hpp"

#include "nsarith/errors.hpp"

namespace nsarith::json {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void malformed(const std::string& what) { throw ParseError(0, what); }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) malformed("integer");
    return q.get_num();
  }
  malformed("integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("field \"") + key + "\"");
  return j.at(key);
}

std::shared_ptr<const automorph::Descriptor> nested(const Json& j, int dim) {
  return std::make_shared<const automorph::Descriptor>(descriptor_from_json(j, dim));
}

}  // namespace

Json to_json(const Rational& q) { return Json(to_string(q)); }

Json to_json(const Exponent& e) {
  Json out = Json::array();
  for (int i = 0; i < e.dim(); ++i) out.push_back(to_json(e[i]));
  return out;
}

Json to_json(const Element& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms()) terms.push_back(Json{{"exp", to_json(t.exp)}, {"coeff", to_json(t.coeff)}});
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const Witness& w) {
  return std::visit(overloaded{
                        [](const BoundN& b) { return Json{{"kind", "BoundN"}, {"n", integer_json(b.n)}}; },
                        [](const Companion& c) { return Json{{"kind", "Companion"}, {"c", to_json(c.c)}}; },
                    },
                    w);
}

Json to_json(const Verdict& v) {
  auto opt_exp = [](const std::optional<Exponent>& e) { return e ? to_json(*e) : Json(nullptr); };
  Json out;
  out["level"] = v.level;
  out["equivalent"] = v.equivalent;
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  out["reason"] = Json{{"rule", v.reason.rule},
                       {"deg_a", opt_exp(v.reason.deg_a)},
                       {"deg_b", opt_exp(v.reason.deg_b)},
                       {"deg_diff", opt_exp(v.reason.deg_diff)}};
  return out;
}

Json to_json(const automorph::Descriptor& d) {
  using namespace automorph;
  Json out{{"kind", d.kind_name()}};
  std::visit(overloaded{
                 [&](const Identity&) {},
                 [&](const E2Affine& f) {
                   out["anchor"] = to_json(f.anchor);
                   out["image"] = to_json(f.image);
                   out["scale"] = integer_json(f.scale);
                   out["center"] = to_json(f.center);
                 },
                 [&](const E3Shift& f) {
                   out["a1"] = to_json(f.a1);
                   out["a2"] = to_json(f.a2);
                   out["factor"] = to_json(f.factor);
                 },
                 [&](const E0ClassShift& f) {
                   out["anchor"] = to_json(f.anchor);
                   out["offset"] = integer_json(f.offset);
                 },
                 [&](const SegmentExtend& f) {
                   out["below"] = to_json(*f.below);
                   out["a"] = to_json(f.a);
                   out["b"] = to_json(f.b);
                 },
                 [&](const Compose& f) {
                   Json parts = Json::array();
                   for (const auto& p : f.parts) parts.push_back(to_json(p));
                   out["parts"] = std::move(parts);
                 },
                 [&](const Inverse& f) { out["inner"] = to_json(*f.inner); },
             },
             d.kind());
  Json pins = Json::array();
  for (const auto& p : d.pins()) pins.push_back(Json{{"from", to_json(p.from)}, {"to", to_json(p.to)}});
  out["pins"] = std::move(pins);
  return out;
}

Json to_json(const analysis::ClassSequence& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(to_json(t));
  return Json{{"direction", analysis::to_string(s.direction)}, {"level", s.level}, {"terms", std::move(terms)}};
}

Json to_json(const analysis::Embedding& e) {
  return Json{{"value", to_json(e.value)}, {"degenerate", e.degenerate}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (!j.is_string()) malformed("rational string");
  return parse_rational(j.get<std::string>());
}

int infer_json_dim(const Json& j) {
  if (j.is_object()) {
    if (j.contains("exp") && j.at("exp").is_array()) return static_cast<int>(j.at("exp").size());
    for (const auto& [key, value] : j.items())
      if (int d = infer_json_dim(value)) return d;
  } else if (j.is_array()) {
    for (const auto& value : j)
      if (int d = infer_json_dim(value)) return d;
  }
  return 0;
}

Element element_from_json(const Json& j, int dim) {
  if (dim == 0) dim = infer_json_dim(j);
  if (dim == 0) dim = 1;
  if (dim != 1 && dim != 2) malformed("exponent of length 1 or 2");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms array");
  std::vector<Term> out;
  for (const auto& t : terms) {
    const Json& exp = field(t, "exp");
    if (!exp.is_array() || static_cast<int>(exp.size()) != dim) malformed("exponent of length " + std::to_string(dim));
    Exponent e(dim);
    for (int i = 0; i < dim; ++i) e[i] = rational_from_json(exp[static_cast<std::size_t>(i)]);
    out.push_back({e, rational_from_json(field(t, "coeff"))});
  }
  return Element::from_series(Series::from_terms(std::move(out), dim));
}

Witness witness_from_json(const Json& j, int dim) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "BoundN") return BoundN{integer_from_json(field(j, "n"))};
  if (kind == "Companion") return Companion{element_from_json(field(j, "c"), dim)};
  malformed("witness kind BoundN or Companion");
}

automorph::Descriptor descriptor_from_json(const Json& j, int dim) {
  using namespace automorph;
  if (dim == 0) dim = infer_json_dim(j);
  if (dim == 0) dim = 1;
  auto el = [&](const char* key) { return element_from_json(field(j, key), dim); };
  const Json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) malformed("descriptor kind");
  const std::string kind = kind_field.get<std::string>();

  std::vector<Pin> pins;
  if (j.contains("pins")) {
    if (!j.at("pins").is_array()) malformed("pins array");
    for (const auto& p : j.at("pins"))
      pins.push_back({element_from_json(field(p, "from"), dim), element_from_json(field(p, "to"), dim)});
  }

  Descriptor::Kind k;
  if (kind == "identity") {
    k = Identity{};
  } else if (kind == "e2_affine") {
    const Integer scale = integer_from_json(field(j, "scale"));
    if (scale < 1) throw InvariantViolation("e2_affine scale must be >= 1");
    k = E2Affine{el("anchor"), el("image"), scale, el("center")};
  } else if (kind == "e3_shift") {
    const Element factor = el("factor");
    if (factor.terms().size() != 1 || dim != 2 || sgn(factor.terms()[0].exp[0]) != 0)
      throw InvariantViolation("e3_shift factor must be a monomial t^(0,s)");
    k = E3Shift{el("a1"), el("a2"), factor};
  } else if (kind == "e0_class_shift") {
    k = E0ClassShift{el("anchor"), integer_from_json(field(j, "offset"))};
  } else if (kind == "segment_extend") {
    k = SegmentExtend{nested(field(j, "below"), dim), el("a"), el("b")};
  } else if (kind == "compose") {
    const Json& parts = field(j, "parts");
    if (!parts.is_array()) malformed("parts array");
    Compose c;
    for (const auto& p : parts) c.parts.push_back(descriptor_from_json(p, dim));
    k = std::move(c);
  } else if (kind == "inverse") {
    k = Inverse{nested(field(j, "inner"), dim)};
  } else {
    malformed("known descriptor kind");
  }
  return Descriptor(std::move(k), std::move(pins));
}

}  // namespace nsarith::json
