#include <gtest/gtest.h>

#include "common.hpp"
#include "nsarith/automorph.hpp"
#include "nsarith/equiv.hpp"
#include "nsarith/errors.hpp"

using namespace nsarith;
using namespace nsarith::automorph;
using nsarith::testing::el;
using nsarith::testing::el2;

TEST(Build, FromE2) {
  const Descriptor f = build_from_e2(el("t"), el("2*t + 1"));
  EXPECT_EQ(apply(f, el("t")), el("2*t + 1"));
  EXPECT_EQ(apply_inverse(f, el("2*t + 1")), el("t"));
  const auto probes = probe_set(f, 1, 3, 100);
  EXPECT_NO_THROW(validate(f, probes));

  EXPECT_EQ(build_from_e2(el("t + 4"), el("t + 4")).kind_name(), "identity");
  EXPECT_THROW(build_from_e2(el("t"), el("t^2")), NotEquivalent);
}

TEST(Build, ExactMultipleAndReversed) {
  for (const auto& [a, b] : {std::pair{el("t"), el("3*t")}, {el("3*t + 5"), el("t")}, {el("t^2"), el("t^2 + 9")}}) {
    const Descriptor f = build_from_e2(a, b);
    EXPECT_EQ(apply(f, a), b);
    EXPECT_NO_THROW(validate(f, probe_set(f, 1, 9, 300)));
  }
}

TEST(Build, FromE3) {
  const Descriptor f = build_from_e3(el2("t^(1,0)"), el2("t^(1,1)"));
  EXPECT_EQ(apply(f, el2("t^(1,0)")), el2("t^(1,1)"));
  EXPECT_NO_THROW(validate(f, probe_set(f, 2, 4, 300)));

  const Descriptor g = build_from_e3(el("t"), el("3*t"));
  EXPECT_EQ(apply(g, el("t")), el("3*t"));
  EXPECT_THROW(build_from_e3(el2("t^(1,0)"), el2("t^(2,0)")), NotEquivalent);
}

TEST(Build, Extend) {
  const Descriptor id = extend_initial_segment(Descriptor(), el("t"), el("t"));
  for (const char* x : {"3", "t - 1", "t", "t^2 + 1"}) EXPECT_EQ(apply(id, el(x)), el(x));

  const Descriptor below = build_from_e2(el("t"), el("2*t + 1"));
  const Descriptor g = extend_initial_segment(below, el("t^2"), el("t^2 + 3"));
  EXPECT_EQ(apply(g, el("t^2")), el("t^2 + 3"));
  EXPECT_EQ(apply(g, el("t^2 + 5")), el("t^2 + 8"));
  EXPECT_EQ(apply(g, el("t")), el("2*t + 1"));
}

TEST(Validate, CatchesCorruptedDescriptor) {
  // Scaling one class without the rest breaks monotonicity.
  const Descriptor bad(E0ClassShift{el("t"), 1}, {{el("t"), el("t + 7")}});
  EXPECT_THROW(validate(bad, probe_set(bad, 1, 1, 50)), ValidationFailure);
  std::vector<Element> unsorted{el("t + 1"), el("t")};
  EXPECT_THROW(validate(Descriptor(), unsorted), PreconditionError);
  const std::vector<Element> probes{el("1"), el("t"), el("t + 1"), el("t^2")};
  EXPECT_EQ(validate(Descriptor(), probes).probes, 4u);
}

TEST(Defect, AlmostAdditive) {
  EXPECT_EQ(almost_add_defect(Descriptor(), el("t"), el("t^2")), Integer(0));
  // f(2t) - f(t) - f(t) with f shifting only the class of t by 1.
  EXPECT_EQ(almost_add_defect(Descriptor(E0ClassShift{el("t"), 1}), el("t"), el("t")), Integer(-2));
  // Scaling about a nonstandard center leaves a defect of (scale - 1) * center.
  EXPECT_FALSE(almost_add_defect(build_from_e2(el("t"), el("3*t + 1")), el("t^2"), el("t^3")));
  EXPECT_EQ(almost_add_defect(build_from_e2(el("t"), el("2*t")), el("t"), el("t^2")), Integer(0));
}

TEST(ProveE5, Routes) {
  ModelConfig cfg2;
  cfg2.dim = 2;
  const Descriptor f = equiv::prove_e5(el("t"), el("2*t + 1"));
  EXPECT_EQ(apply(f, el("t")), el("2*t + 1"));
  const Descriptor g = equiv::prove_e5(el2("t^(1,0)"), el2("t^(1,1)"), cfg2);
  EXPECT_EQ(apply(g, el2("t^(1,0)")), el2("t^(1,1)"));
  EXPECT_THROW(equiv::prove_e5(el("t"), el("t^2")), CannotProve);
}

TEST(Seeded, E2AndE3Pairs) {
  ModelConfig cfg;
  cfg.dim = 2;
  Sampler s(nsarith::testing::profile(2, 31));
  int built = 0;
  for (int i = 0; i < 200 && built < 30; ++i) {
    const Element a = s.nonstandard();
    const Element b = s.related(a);
    if (!equiv::decide(3, a, b, cfg).equivalent) continue;
    const Descriptor f = build_from_e3(a, b, cfg);
    ASSERT_EQ(apply(f, a), b);
    const auto report = validate(f, probe_set(f, 2, static_cast<std::uint64_t>(i), 200));
    ASSERT_GT(report.e0_related, 0u);
    ++built;
  }
  EXPECT_EQ(built, 30);
}
