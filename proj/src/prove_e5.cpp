#include "nsarith/automorph.hpp"
#include "nsarith/equiv.hpp"
#include "nsarith/errors.hpp"

namespace nsarith::equiv {

namespace {
constexpr std::size_t kProofProbes = 200;
}

automorph::Descriptor prove_e5(const Element& a, const Element& b, const ModelConfig& cfg) {
  automorph::Descriptor d;
  if (decide(2, a, b, cfg).equivalent)
    d = automorph::build_from_e2(a, b, cfg);
  else if (decide(3, a, b, cfg).equivalent)
    d = automorph::build_from_e3(a, b, cfg);
  else
    throw CannotProve();
  const auto probes = automorph::probe_set(d, a.dim(), cfg.seed, kProofProbes);
  automorph::validate(d, probes);
  return d;
}

}  // namespace nsarith::equiv
