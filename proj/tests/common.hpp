#pragma once

#include <string>

#include "nsarith/element.hpp"
#include "nsarith/sampler.hpp"
#include "nsarith/text.hpp"

namespace nsarith::testing {

inline Element el(const std::string& text, int dim = 1) { return parse_element(text, dim); }
inline Element el2(const std::string& text) { return parse_element(text, 2); }

inline SampleProfile profile(int dim, std::uint64_t seed, int standard_percent = 0) {
  SampleProfile p;
  p.dim = dim;
  p.seed = seed;
  p.standard_percent = standard_percent;
  return p;
}

}  // namespace nsarith::testing
