#pragma once

#include <json.hpp>

#include "nsarith/analysis.hpp"
#include "nsarith/automorph.hpp"
#include "nsarith/equiv.hpp"

namespace nsarith::json {

/// Key order is insertion order, so serialization is byte-deterministic.
using Json = nlohmann::ordered_json;

// Element  {"terms":[{"exp":["p/q",...],"coeff":"p/q"}, ...]}
// Witness  {"kind":"BoundN","n":4} | {"kind":"Companion","c":Element}
// Verdict  {"level","equivalent","witness","reason":{"rule","deg_a","deg_b","deg_diff"}}
// Descriptor {"kind":..., kind fields..., "pins":[{"from","to"}]}; nested
//   descriptors under "below", "parts", "inner"

Json to_json(const Rational& q);
Json to_json(const Exponent& e);
Json to_json(const Element& e);
Json to_json(const Witness& w);
Json to_json(const Verdict& v);
Json to_json(const automorph::Descriptor& d);
Json to_json(const analysis::ClassSequence& s);
Json to_json(const analysis::Embedding& e);

/// Throws ParseError (position 0) on malformed documents and
/// InvariantViolation when values fall outside the model.
Rational rational_from_json(const Json& j);
/// dim 0 infers the dimension from the exponent arrays (1 when there are none).
Element element_from_json(const Json& j, int dim = 0);
Witness witness_from_json(const Json& j, int dim = 0);
automorph::Descriptor descriptor_from_json(const Json& j, int dim = 0);

/// Dimension of the first exponent found anywhere in a document, or 0.
int infer_json_dim(const Json& j);

}  // namespace nsarith::json
