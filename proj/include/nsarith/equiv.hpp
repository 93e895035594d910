#pragma once

#include <optional>
#include <string>
#include <variant>

#include "nsarith/descriptor.hpp"
#include "nsarith/element.hpp"

namespace nsarith {

/// A standard bound n (levels 0, 2, 4).
struct BoundN {
  Integer n;
  friend bool operator==(const BoundN& a, const BoundN& b) { return a.n == b.n; }
};

/// A companion element c (levels 1, 3).
struct Companion {
  Element c;
  friend bool operator==(const Companion& a, const Companion& b) { return a.c == b.c; }
};

using Witness = std::variant<BoundN, Companion>;

/// Which degree comparison settled a verdict.
struct Reason {
  std::string rule;
  std::optional<Exponent> deg_a;
  std::optional<Exponent> deg_b;
  /// deg(a - b) in the series field, when it was consulted.
  std::optional<Exponent> deg_diff;
};

struct Verdict {
  int level = 0;
  bool equivalent = false;
  std::optional<Witness> witness;
  Reason reason;
};

}  // namespace nsarith

namespace nsarith::equiv {

/// Closed-form decision of a E^level b for level 0..4, on nonstandard inputs.
///
///   E0  positive-exponent parts agree (a - b is standard)
///   E1  a = b, or deg(a - b) < deg(a)
///   E2  deg(a) = deg(b)
///   E3  d=2: equal first degree components when positive, equal degrees
///       when the first components vanish; d=1: same as E2
///   E4  degrees in the same Archimedean class of Q^d
///
/// Positive verdicts carry a witness that has passed oracle::check_witness;
/// bounds for levels 0, 2, 4 are minimal. Throws StandardInput.
Verdict decide(int level, const Element& a, const Element& b, const ModelConfig& cfg = {});

/// Least n certifying level 0, 2 or 4. Throws NotEquivalent.
Integer minimal_bound_n(int level, const Element& a, const Element& b, const ModelConfig& cfg = {});

/// Companion c certifying level 1 or 3. Throws NotEquivalent.
Element companion_witness(int level, const Element& a, const Element& b, const ModelConfig& cfg = {});

/// Sound, incomplete prover for E5: routes through the E2 construction or,
/// failing that, the E3 one. The returned descriptor maps a to b and has
/// passed automorph::validate on a seeded probe set. Throws CannotProve when
/// neither E2 nor E3 holds; that is not a refutation of E5.
automorph::Descriptor prove_e5(const Element& a, const Element& b, const ModelConfig& cfg = {});

}  // namespace nsarith::equiv
