#include <gtest/gtest.h>

#include "common.hpp"
#include "nsarith/analysis.hpp"
#include "nsarith/equiv.hpp"
#include "nsarith/errors.hpp"

using namespace nsarith;
using namespace nsarith::analysis;
using nsarith::testing::el;
using nsarith::testing::el2;

TEST(Sequences, E0AndE2) {
  const auto up = e0_seq(el("t^2"), 4, Direction::Up);
  EXPECT_EQ(up.terms.back(), el("t^2 + 3"));
  EXPECT_TRUE(is_monotone(up));
  const auto down = e2_seq(el("3*t"), 3, Direction::Down);
  EXPECT_EQ(down.terms, (std::vector<Element>{el("3*t"), el("3/2*t"), el("t")}));
  EXPECT_TRUE(is_monotone(down));
}

TEST(Sequences, PassingIndex) {
  const Element a = el("t"), b = el("5*t + 2");
  const auto up = e2_seq(a, 10, Direction::Up);
  const std::size_t i = passing_index(up, a, b);
  ASSERT_LT(i, up.terms.size());
  EXPECT_TRUE(passes(up, i, b));
  EXPECT_GT(up.terms[i], b);
  EXPECT_THROW(passing_index(up, a, el("t^2")), NotEquivalent);
}

TEST(RootSequences, Examples) {
  const Element a = el("t^2");
  const auto up = b11_seq(a, 2, Direction::Up);
  EXPECT_EQ(up.terms, (std::vector<Element>{el("t^3"), el("t^(5/2)")}));
  const auto down = b11_seq(a, 1, Direction::Down);
  EXPECT_EQ(down.terms.front(), el("t"));
  for (std::size_t i = 0; i < up.terms.size(); ++i) EXPECT_TRUE(b11_certify(up, i, a));
  EXPECT_TRUE(b11_certify(down, 0, a));
  EXPECT_THROW(b11_seq(el("2*t^2"), 1, Direction::Down), CoefficientNotRepresentable);
}

TEST(RootSequences, PredicateNeighbours) {
  // Independent restatement: floor(T/a)^K <= a, with T-1/T+1 failing on the up side.
  const Element a = el("t^4 + t");
  const auto up = b11_seq(a, 3, Direction::Up);
  for (std::size_t i = 0; i < up.terms.size(); ++i) {
    const unsigned long K = 1ul << (i + 1);
    const Element& T = up.terms[i];
    EXPECT_TRUE(b11_up_predicate(a, T, K));
    EXPECT_LE(pow(floor_quotient(T, a), K), a);
    EXPECT_FALSE(b11_up_predicate(a, T + Element::one(1), K));
    EXPECT_FALSE(b11_up_predicate(a, T - Element::one(1), K));
    EXPECT_GT(pow(floor_quotient(T + a, a), K), a);
  }
  EXPECT_TRUE(is_monotone(up));
}

TEST(Embed, Examples) {
  EXPECT_EQ(real_embed(el2("t^(1,0)"), el2("t^(2,3)")).value, 2);
  EXPECT_EQ(real_embed(el2("t^(1,0)"), el2("t^(1,0)")).value, 1);
  EXPECT_THROW(real_embed(el2("t^(0,1)"), el2("t^(1,0)")), NotEquivalent);
}

TEST(Embed, AdditiveAndMonotone) {
  Sampler s(nsarith::testing::profile(2, 41));
  ModelConfig cfg;
  cfg.dim = 2;
  const Element a = el2("t^(1,0)");
  for (int i = 0; i < 100; ++i) {
    Element x = s.nonstandard(), y = s.nonstandard();
    if (!equiv::decide(4, a, x, cfg).equivalent || !equiv::decide(4, a, y, cfg).equivalent) continue;
    const Rational ex = real_embed(a, x).value, ey = real_embed(a, y).value;
    EXPECT_EQ(real_embed(a, x * y).value, ex + ey);
    if (equiv::decide(3, x, y, cfg).equivalent)
      EXPECT_EQ(ex, ey);
    else
      EXPECT_EQ(ex < ey, x < y);
  }
}
