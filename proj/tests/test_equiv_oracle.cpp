#include <gtest/gtest.h>

#include "common.hpp"
#include "nsarith/equiv.hpp"
#include "nsarith/errors.hpp"
#include "nsarith/oracle.hpp"

using namespace nsarith;
using nsarith::testing::el;
using nsarith::testing::el2;

namespace {

// Literal bound conditions, evaluated with plain model arithmetic.
bool bound_holds(int level, const Element& a, const Element& b, long n) {
  const int d = a.dim();
  const Element N = Element::constant(n, d);
  switch (level) {
    case 0: return a < b + N && b < a + N;
    case 2: return a < N * b && b < N * a;
    case 4: return a < pow(b, n) && b < pow(a, n);
  }
  return false;
}

long brute_minimal(int level, const Element& a, const Element& b, long limit) {
  for (long n = 1; n <= limit; ++n)
    if (bound_holds(level, a, b, n)) return n;
  return -1;
}

Integer bound_of(const Verdict& v) { return std::get<BoundN>(*v.witness).n; }
Element companion_of(const Verdict& v) { return std::get<Companion>(*v.witness).c; }

}  // namespace

TEST(Decide, Examples) {
  auto v = equiv::decide(0, el("t^2 + 3"), el("t^2"));
  EXPECT_TRUE(v.equivalent);
  EXPECT_EQ(bound_of(v), 4);
  EXPECT_FALSE(equiv::decide(2, el("t"), el("t^2")).equivalent);

  v = equiv::decide(1, el("t^2 + t"), el("t^2"));
  EXPECT_TRUE(v.equivalent);
  EXPECT_EQ(companion_of(v), el("t^(3/2) + 1"));

  v = equiv::decide(3, el2("t^(1,0)"), el2("t^(1,5)"));
  EXPECT_TRUE(v.equivalent);
  EXPECT_EQ(companion_of(v), el2("t^(0,6)"));
  EXPECT_FALSE(equiv::decide(3, el2("t^(1,0)"), el2("t^(2,0)")).equivalent);

  v = equiv::decide(4, el2("t^(1,0)"), el2("t^(2,0)"));
  EXPECT_TRUE(v.equivalent);
  EXPECT_EQ(bound_of(v), 3);
  EXPECT_FALSE(equiv::decide(4, el2("t^(0,1)"), el2("t^(1,0)")).equivalent);
}

TEST(Decide, MinimalBoundsAndCompanions) {
  EXPECT_EQ(equiv::minimal_bound_n(0, el("t^2 + 3"), el("t^2")), 4);
  EXPECT_EQ(equiv::minimal_bound_n(2, el("t"), el("3*t + 5")), 4);
  EXPECT_EQ(equiv::minimal_bound_n(4, el("t^2"), el("t^3")), 2);
  EXPECT_EQ(brute_minimal(2, el("t"), el("3*t + 5"), 20), 4);
  EXPECT_EQ(brute_minimal(4, el("t^2"), el("t^3"), 20), 2);

  EXPECT_EQ(equiv::companion_witness(1, el("t^2 + t"), el("t^2")), el("t^(3/2) + 1"));
  EXPECT_EQ(equiv::companion_witness(3, el2("t^(1,2)"), el2("t^(1,7)")), el2("t^(0,6)"));
  EXPECT_EQ(equiv::companion_witness(3, el("t"), el("t")), el("2"));
  EXPECT_THROW(equiv::minimal_bound_n(2, el("t"), el("t^2")), NotEquivalent);
}

TEST(Decide, RejectsStandardInput) {
  EXPECT_THROW(equiv::decide(0, el("3"), el("t")), StandardInput);
  EXPECT_THROW(equiv::decide(2, el("t"), el("0")), StandardInput);
}

TEST(Oracle, CheckWitness) {
  EXPECT_TRUE(oracle::check_witness(2, el("t"), el("3*t"), BoundN{4}));
  EXPECT_FALSE(oracle::check_witness(2, el("t"), el("3*t"), BoundN{3}));
  EXPECT_TRUE(oracle::check_witness(3, el2("t^(1,0)"), el2("t^(1,5)"), Companion{el2("t^(0,6)")}));
  EXPECT_FALSE(oracle::check_witness(3, el2("t^(1,0)"), el2("t^(1,5)"), Companion{el2("t^(0,5)")}));
}

TEST(Oracle, Search) {
  const auto w = oracle::search(0, el("t + 2"), el("t"), oracle::lattice_bounds(el("t + 2"), el("t"), 8));
  ASSERT_TRUE(w);
  EXPECT_EQ(std::get<BoundN>(*w).n, 3);
  EXPECT_FALSE(oracle::search(2, el("t"), el("t^2"), oracle::lattice_bounds(el("t"), el("t^2"), 64)));
  const auto c = oracle::search(3, el2("t^(1,0)"), el2("t^(1,3)"),
                                oracle::lattice_bounds(el2("t^(1,0)"), el2("t^(1,3)"), 64));
  ASSERT_TRUE(c);
  EXPECT_TRUE(std::holds_alternative<Companion>(*c));
}

TEST(Oracle, StrictSeparations) {
  // Each pair is in the finer relation's complement and the coarser relation.
  struct Case {
    int level;
    Element a, b;
  };
  const Case cases[] = {{0, el("t^2 + t"), el("t^2")},
                        {1, el("t^2"), el("2*t^2")},
                        {2, el2("t^(1,0)"), el2("t^(1,1)")},
                        {3, el2("t^(1,0)"), el2("t^(2,0)")}};
  for (const auto& c : cases) {
    EXPECT_TRUE(oracle::refutes(c.level, c.a, c.b)) << c.level;
    const auto v = equiv::decide(c.level + 1, c.a, c.b);
    ASSERT_TRUE(v.equivalent) << c.level;
    EXPECT_TRUE(oracle::check_witness(c.level + 1, c.a, c.b, *v.witness));
  }
}

class DeciderAgreement : public ::testing::TestWithParam<int> {};

TEST_P(DeciderAgreement, SeededPairs) {
  const int dim = GetParam();
  ModelConfig cfg;
  cfg.dim = dim;
  Sampler s(nsarith::testing::profile(dim, 23));
  for (int i = 0; i < 200; ++i) {
    const Element a = s.nonstandard();
    const Element b = s.related(a);
    bool previous = false;
    for (int level = 0; level <= 4; ++level) {
      const auto v = equiv::decide(level, a, b, cfg);
      ASSERT_TRUE(!previous || v.equivalent) << format_element(a) << " / " << format_element(b) << " E" << level;
      previous = v.equivalent;
      if (v.equivalent) {
        ASSERT_TRUE(oracle::check_witness(level, a, b, *v.witness));
        if (level % 2 == 0) {
          const long n = bound_of(v).get_si();
          ASSERT_TRUE(bound_holds(level, a, b, n));
          ASSERT_FALSE(n > 1 && bound_holds(level, a, b, n - 1));
        }
      } else {
        ASSERT_TRUE(oracle::refutes(level, a, b)) << format_element(a) << " / " << format_element(b) << " E" << level;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, DeciderAgreement, ::testing::Values(1, 2));
