#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsarith/json_io.hpp"

namespace nsarith::suite {

struct SuiteOptions {
  std::string name = "all";
  /// Cases per check (pairs, triples, class-mates, ...; see each suite).
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  int dim = 1;
  /// Probes per descriptor in the automorph suite; consecutive pairs are
  /// probes - 1.
  std::size_t probes = 1001;
  ModelConfig model;
};

struct SuiteReport {
  json::Json json;
  std::size_t violations = 0;
  bool ok() const { return violations == 0; }
};

/// algebra, refinement, convexity, closure, equivalence, witness-sets,
/// agreement, separation, automorph, sequences, b11, embed, roundtrip.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Each case draws from its own
/// generator seeded by (seed, suite, case index), so reports are
/// byte-identical for identical options. Throws PreconditionError for an
/// unknown name.
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace nsarith::suite
