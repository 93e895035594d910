// Runs the property suites at their acceptance sizes and prints one
// PASS/FAIL line per criterion. Exit status is 0 only when all pass.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "nsarith/suite.hpp"

namespace {

using nsarith::suite::SuiteOptions;
using nsarith::suite::SuiteReport;

constexpr std::uint64_t kSeed = 20240901;
constexpr double kAlgebraSeconds = 10.0;
constexpr double kAutomorphSeconds = 30.0;
constexpr double kTotalSeconds = 60.0;

struct Run {
  std::size_t violations = 0;
  std::size_t partial = 0;
  std::size_t cases = 0;
  double seconds = 0;
};

double total_seconds = 0;

std::size_t sum_field(const nsarith::json::Json& report, const char* key) {
  std::size_t n = 0;
  for (const auto& s : report.at("suites"))
    for (const auto& c : s.at("checks"))
      if (c.contains(key)) n += c.at(key).get<std::size_t>();
  return n;
}

Run run(const std::string& name, std::size_t samples, int dim, std::size_t probes = 1001) {
  SuiteOptions opt;
  opt.name = name;
  opt.samples = samples;
  opt.seed = kSeed;
  opt.dim = dim;
  opt.probes = probes;
  opt.model.dim = dim;
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport report = nsarith::suite::run_suite(opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  total_seconds += secs;
  return {report.violations, sum_field(report.json, "partial"), sum_field(report.json, "cases"), secs};
}

Run both_dims(const std::string& name, std::size_t samples) {
  Run a = run(name, samples, 1), b = run(name, samples, 2);
  return {a.violations + b.violations, a.partial + b.partial, a.cases + b.cases, a.seconds + b.seconds};
}

Run merge(std::initializer_list<Run> runs) {
  Run out;
  for (const auto& r : runs) {
    out.violations += r.violations;
    out.partial += r.partial;
    out.cases += r.cases;
    out.seconds += r.seconds;
  }
  return out;
}

bool report(int criterion, const char* what, const Run& r, bool extra_ok = true, double limit = 0) {
  const bool time_ok = limit == 0 || r.seconds < limit;
  const bool ok = r.violations == 0 && extra_ok && time_ok;
  std::printf("criterion %2d %s  %-34s violations=%zu cases=%zu partial=%zu time=%.2fs", criterion,
              ok ? "PASS" : "FAIL", what, r.violations, r.cases, r.partial, r.seconds);
  if (limit > 0) std::printf(" (limit %.0fs)", limit);
  std::printf("\n");
  return ok;
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "algebra and order laws", both_dims("algebra", 1000), true, kAlgebraSeconds);
  all &= report(2, "refinement chain", both_dims("refinement", 1000));
  all &= report(3, "convexity and closure", merge({both_dims("convexity", 500), both_dims("closure", 500)}));
  all &= report(4, "decider/oracle agreement", both_dims("agreement", 500));
  all &= report(5, "strict separations", both_dims("separation", 1));
  all &= report(6, "constructive E5 (d=2)", run("automorph", 200, 2, 1001), true, kAutomorphSeconds);
  all &= report(7, "class sequences", both_dims("sequences", 100));
  all &= report(8, "root-based class sequences", both_dims("b11", 100));
  all &= report(9, "real embedding (d=2)", run("embed", 300, 2));

  SuiteOptions full;
  full.samples = 40;
  full.seed = kSeed;
  full.dim = 2;
  full.model.dim = 2;
  full.probes = 101;
  const auto start = std::chrono::steady_clock::now();
  const std::string a = nsarith::suite::run_suite(full).json.dump();
  const std::string b = nsarith::suite::run_suite(full).json.dump();
  total_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool same = a == b;
  std::printf("criterion 10 %s  %-34s identical=%s bytes=%zu total=%.2fs (limit %.0fs)\n",
              same && total_seconds < kTotalSeconds ? "PASS" : "FAIL", "deterministic full suite",
              same ? "yes" : "no", a.size(), total_seconds, kTotalSeconds);
  all &= same && total_seconds < kTotalSeconds;
  return all ? 0 : 1;
}
