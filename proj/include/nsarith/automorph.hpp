#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nsarith/descriptor.hpp"

namespace nsarith::automorph {

/// Order-automorphism moving a to b, for a E2 b. Scales E0-classes above a
/// center point by the least n with max(a,b) < n*min(a,b), after dividing
/// b - a by n - 1 with remainder; the remainder is absorbed by a class
/// shift. Throws NotEquivalent(2).
Descriptor build_from_e2(const Element& a, const Element& b, const ModelConfig& cfg = {});

/// Order-automorphism moving a1 to a2, for a1 E3 a2. In d=2 with unequal
/// degrees: shift classes by t^(0,s) onto factor*a1, then finish with the E2
/// construction. Otherwise delegates to build_from_e2. Throws NotEquivalent(3).
Descriptor build_from_e3(const Element& a1, const Element& a2, const ModelConfig& cfg = {});

/// x -> below(x) for x < a, b + (x - a) for x >= a.
Descriptor extend_initial_segment(const Descriptor& below, const Element& a, const Element& b);

Element apply(const Descriptor& d, const Element& x);
/// apply(invert(d), y) without building the inverse descriptor.
Element apply_inverse(const Descriptor& d, const Element& y);

Descriptor invert(const Descriptor& d);
/// outer o inner; inner is applied first.
Descriptor compose(const Descriptor& outer, const Descriptor& inner);

struct ValidationReport {
  std::size_t probes = 0;
  std::size_t monotone_pairs = 0;
  std::size_t round_trips = 0;
  std::size_t pins = 0;
  std::size_t e0_pairs = 0;
  /// Consecutive probe pairs that were E0-related.
  std::size_t e0_related = 0;
};

/// Checks on strictly increasing probes: images strictly increasing, both
/// round trips through the inverse exact, pins hit, and E0-relatedness of
/// each consecutive pair unchanged by the map. Throws ValidationFailure at
/// the first violating pair, PreconditionError when probes are unsorted.
ValidationReport validate(const Descriptor& d, std::span<const Element> probes);

/// Sorted, distinct probes: the descriptor's own anchors and their class
/// neighbours, rescalings of them, and random elements, with many probes
/// placed in E0-clusters so consecutive pairs exercise both sides of E0.
std::vector<Element> probe_set(const Descriptor& d, int dim, std::uint64_t seed, std::size_t count);

/// f(a+b) - f(a) - f(b) when it is a standard integer, null otherwise.
std::optional<Integer> almost_add_defect(const Descriptor& d, const Element& a, const Element& b);

}  // namespace nsarith::automorph
