#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "nsarith/element.hpp"

namespace nsarith {

struct SampleProfile {
  int max_terms = 3;
  /// Exponent and coefficient denominators are drawn from 1..den_bound.
  int den_bound = 3;
  /// Coefficient numerators and constants are drawn from -coeff_bound..coeff_bound.
  int coeff_bound = 5;
  int dim = 1;
  std::uint64_t seed = 1;
  /// Percentage of element() draws that are standard.
  int standard_percent = 10;

  void validate() const;
};

/// Stream-splitting seed mixer (splitmix64), so case i of a suite draws the
/// same values however cases are scheduled.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Deterministic generator of model elements. All draws come from raw
/// mt19937_64 output, so sequences are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(const SampleProfile& profile);
  Sampler(const SampleProfile& profile, std::uint64_t seed);

  const SampleProfile& profile() const noexcept { return profile_; }
  int dim() const noexcept { return profile_.dim; }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long range(long lo, long hi);
  bool coin(int percent);

  Exponent exponent();
  Rational coefficient(bool positive);

  Element element();
  Element nonstandard();
  Element standard();

  /// A nonstandard b related to nonstandard a by a randomly chosen
  /// construction: equal, shifted by a constant, perturbed below its degree,
  /// rescaled, shifted inside its E3-class (d=2), raised in degree, or
  /// independent. Mixes every level of agreement between E0 and "none".
  Element related(const Element& a);

  /// Some b with a < b < c, when one exists.
  std::optional<Element> between(const Element& a, const Element& c);

 private:
  Rational fraction(long lo_num, long hi_num);
  SampleProfile profile_;
  std::mt19937_64 rng_;
};

/// One element drawn with a fresh generator seeded from profile.seed.
Element sample(const SampleProfile& profile);

}  // namespace nsarith
