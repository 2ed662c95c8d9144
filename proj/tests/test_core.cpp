#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "fixtures.hpp"

using namespace irs;

namespace {

int s1_exponent_sum(const Word& w) {
  int s = 0;
  for (Letter l : w)
    if (l.generator() == 1) s += l.sign();
  return s;
}

}  // namespace

TEST(Trace, CayleyFollowsRegularAction) {
  OraclePtr c = make_cayley(2);
  EXPECT_EQ(trace(*c, parse_word("s1.s2")), "ab");
  EXPECT_EQ(trace(*c, Word()), "1");
  EXPECT_EQ(c->neighbor("ab", Letter::inv(2)), "a");
}

TEST(Trace, IndexTwoHandTrace) {
  FiniteOracle o(fixtures::index2());
  EXPECT_EQ(trace(o, parse_word("s1")), "B");
  EXPECT_EQ(trace(o, parse_word("s1.s2.s1")), "A");
}

TEST(Trace, IndexTwoMembershipIsEvenS1Sum) {
  FiniteOracle o(fixtures::index2());
  for (const Word& w : ball_words(2, 5)) EXPECT_EQ(contains(o, w), s1_exponent_sum(w) % 2 == 0) << w.to_string();
}

TEST(Ball, CayleyBallSizes) {
  for (int R = 0; R <= 4; ++R) {
    BallView b = ball(make_cayley(2), R);
    EXPECT_EQ(b.size(), ball_size(2, R));
    EXPECT_TRUE(validate(b).ok);
  }
  EXPECT_EQ(ball(make_cayley(3), 2).size(), ball_size(3, 2));
}

TEST(Ball, BudgetExceededIsResourceError) {
  EXPECT_THROW(ball(make_cayley(2), 10, 100), ResourceError);
}

TEST(Ball, ValidatorCatchesDuplicateIncomingEdge) {
  BallView b = ball(make_finite_oracle(fixtures::index2()), 2);
  ASSERT_TRUE(validate(b).ok);
  BallView bad = b;
  bad.out[0 * bad.rank + 1] = 1;  // A --s2--> B while B --s2--> B
  EXPECT_FALSE(validate(bad).ok);
}

TEST(RootIsomorphism, Reflexive) {
  BallView b = ball(make_cayley(2), 3);
  EXPECT_TRUE(root_isomorphic(b, b));
}

TEST(RootIsomorphism, CayleyVersusIndexTwo) {
  EXPECT_FALSE(root_isomorphic(ball(make_cayley(2), 2), ball(make_finite_oracle(fixtures::index2()), 2)));
}

TEST(RootIsomorphism, RebasingsOfVertexTransitiveGraph) {
  FiniteSchreierGraph g = cyclic_base(5);
  for (int v = 0; v < 5; ++v)
    EXPECT_TRUE(root_isomorphic(ball(make_finite_oracle(g), 4), ball(make_finite_oracle(g.rebased(v)), 4)));
}

TEST(RootIsomorphism, IgnoresVertexNames) {
  BallView a = ball(make_finite_oracle(fixtures::index2()), 3);
  BallView b = ball(make_finite_oracle(fixtures::index2().with_shortlex_names()), 3);
  EXPECT_TRUE(root_isomorphic(a, b));
  EXPECT_EQ(canonical_code(a), canonical_code(b));
}

TEST(Metric, CayleyAgainstIndexTwoDiffersAtRadiusZero) {
  // The s2-loop at the index-2 root already distinguishes the radius-0 balls.
  MetricResult m = metric(make_cayley(2), make_finite_oracle(fixtures::index2()), 6);
  ASSERT_TRUE(m.first_disagreement.has_value());
  EXPECT_EQ(*m.first_disagreement, 0);
  EXPECT_EQ(m.value(), Rational(1));
}

TEST(Metric, LoopFreeRootDelaysDisagreement) {
  // g: s2 fixes the root, so radius 0 already differs. h: no loops, but only
  // three vertices within radius 1.
  FiniteSchreierGraph g(2, {{1, 2, 0}, {0, 2, 1}}, 0);
  MetricResult loop = metric(make_cayley(2), make_finite_oracle(g), 6);
  EXPECT_EQ(loop.value(), Rational(1));
  FiniteSchreierGraph h(2, {{1, 2, 0}, {2, 0, 1}}, 0);
  MetricResult m = metric(make_cayley(2), make_finite_oracle(h), 6);
  ASSERT_TRUE(m.first_disagreement.has_value());
  EXPECT_EQ(*m.first_disagreement, 1);
  EXPECT_EQ(m.value(), Rational(1, 2));
  EXPECT_EQ(metric(make_cayley(2), make_cayley(2), 5).value(), Rational(0));
  EXPECT_EQ(metric(make_cayley(2), make_cayley(2), 5).upper_bound(), Rational(1, 7));
}

TEST(Metric, MatchesFirstFingerprintDifference) {
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    OraclePtr a = make_finite_oracle(fixtures::random_finite_graph(2, 1 + rng.below(6), rng));
    OraclePtr b = make_finite_oracle(fixtures::random_finite_graph(2, 1 + rng.below(6), rng));
    MetricResult m = metric(a, b, 5);
    int first = -1;
    for (int R = 0; R <= 5 && first < 0; ++R)
      if (!root_isomorphic(ball(a, R), ball(b, R))) first = R;
    if (first < 0) {
      EXPECT_FALSE(m.first_disagreement.has_value());
    } else {
      EXPECT_EQ(m.first_disagreement, first);
      EXPECT_EQ(m.value(), Rational(1, first + 1));
    }
  }
}

TEST(Fingerprint, TrivialSubgroup) {
  Fingerprint f = cylinder_fingerprint(make_cayley(2), 2);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_TRUE(f.front().empty());
}

TEST(Fingerprint, IndexTwoAgreesWithParity) {
  Fingerprint f = cylinder_fingerprint(make_finite_oracle(fixtures::index2()), 2);
  Fingerprint expected;
  for (const Word& w : ball_words(2, 2))
    if (s1_exponent_sum(w) % 2 == 0) expected.push_back(w);
  EXPECT_EQ(f, expected);
  EXPECT_EQ(f.size(), 7u);
}

TEST(Automorphisms, IndexTwoIsNormal) { EXPECT_EQ(aut_count(fixtures::index2()), 2u); }

TEST(Automorphisms, NormalSubgroupCountsVertices) {
  EXPECT_EQ(aut_count(cyclic_base(6)), 6u);
}

TEST(Automorphisms, AsymmetricThreeVertexGraph) {
  // s1 = (0 1 2), s2 fixes only vertex 0 (and swaps 1, 2).
  FiniteSchreierGraph g(2, {{1, 2, 0}, {0, 2, 1}}, 0);
  EXPECT_EQ(aut_count(g), 1u);
  EXPECT_TRUE(has_trivial_automorphism_group(g));
}

TEST(Automorphisms, MatchesPermutationSearch) {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    FiniteSchreierGraph g = fixtures::random_finite_graph(2, 1 + rng.below(6), rng);
    EXPECT_EQ(aut_count(g), fixtures::brute_aut_count(g));
  }
}

TEST(NormalizerPredicate, TrivialSubgroupIsNormalizedByEverything) {
  EXPECT_EQ(z_set_member(make_cayley(2), parse_word("s1"), 4), TriState::ConsistentUpToRadius);
}

TEST(NormalizerPredicate, IndexTwoNormalizedByS1) {
  EXPECT_EQ(z_set_member(make_finite_oracle(fixtures::index2()), parse_word("s1"), 4), TriState::ConsistentUpToRadius);
}

TEST(NormalizerPredicate, ElementsOfTheSubgroupAreExcluded) {
  EXPECT_EQ(z_set_member(make_finite_oracle(fixtures::index2()), parse_word("s2"), 4), TriState::No);
}

TEST(NormalizerPredicate, NonNormalizingElementIsRejected) {
  FiniteSchreierGraph g(2, {{1, 2, 0}, {0, 2, 1}}, 0);
  EXPECT_EQ(z_set_member(make_finite_oracle(g), parse_word("s1"), 4), TriState::No);
}

TEST(Sgr, RoundTripPreservesBall) {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    BallView b = ball(make_finite_oracle(fixtures::random_finite_graph(2, 1 + rng.below(7), rng)), 3);
    BallView c = parse_sgr(to_sgr(b));
    EXPECT_TRUE(root_isomorphic(b, c));
    EXPECT_EQ(c.vertices, b.vertices);
  }
  BallView cay = ball(make_cayley(2), 2);
  EXPECT_TRUE(root_isomorphic(cay, parse_sgr(to_sgr(cay))));
}

TEST(Sgr, LoadsIndexTwoDataFile) {
  FiniteSchreierGraph g = load_finite_graph(fixtures::data("index2.sgr"));
  EXPECT_TRUE(rooted_equal(g, g.root(), fixtures::index2(), 0));
}

TEST(Sgr, RejectsMalformedInput) {
  EXPECT_THROW(parse_sgr("schreier r=2\nroot A\nA s1 B\nA s1 C\n"), DomainError);
  EXPECT_THROW(parse_sgr("nonsense"), DomainError);
}

TEST(Sgr, DotOutputListsEdges) {
  std::ostringstream os;
  write_dot(os, ball(make_finite_oracle(fixtures::index2()), 1));
  EXPECT_NE(os.str().find("digraph"), std::string::npos);
}

TEST(Conjugate, IdentityIsNoOp) {
  OraclePtr o = make_finite_oracle(fixtures::index2());
  EXPECT_EQ(conjugate(o, Word()), o);
}

TEST(Conjugate, MembershipOfConjugateSubgroup) {
  // contains(conjugate(o, g), w) iff contains(o, g^-1 w g)
  Rng rng(19);
  for (int t = 0; t < 1000; ++t) {
    OraclePtr o = make_finite_oracle(fixtures::random_finite_graph(2, 1 + rng.below(6), rng));
    Word g = rng.word_up_to(2, 4), w = rng.word_up_to(2, 5);
    EXPECT_EQ(contains(*conjugate(o, g), w), contains(*o, g.inverse() * w * g));
  }
  OraclePtr c = conjugate(make_cayley(2), parse_word("s1.s2"));
  EXPECT_EQ(c->root(), "BA");
}

TEST(Conjugate, ComposesAsAnAction) {
  Rng rng(29);
  for (int t = 0; t < 300; ++t) {
    OraclePtr o = make_finite_oracle(fixtures::random_finite_graph(2, 1 + rng.below(6), rng));
    Word g = rng.word_up_to(2, 4), h = rng.word_up_to(2, 4);
    EXPECT_EQ(conjugate(conjugate(o, g), h)->root(), conjugate(o, h * g)->root());
  }
}

TEST(Conjugate, FingerprintIsConjugatedFingerprint) {
  Rng rng(37);
  for (int t = 0; t < 40; ++t) {
    OraclePtr o = make_finite_oracle(fixtures::random_finite_graph(2, 1 + rng.below(5), rng));
    Word g = rng.word_up_to(2, 2);
    Fingerprint expected;
    for (const Word& w : cylinder_fingerprint(o, 2 + 2 * static_cast<int>(g.size()))) {
      Word c = g * w * g.inverse();
      if (c.size() <= 2) expected.push_back(c);
    }
    std::sort(expected.begin(), expected.end(), ShortlexLess{});
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    EXPECT_EQ(cylinder_fingerprint(conjugate(o, g), 2), expected);
  }
}

TEST(AtomicMeasure, TotalVariation) {
  AtomicMeasure<int> a, b;
  a.add("x", Rational(1, 2), 0);
  a.add("y", Rational(1, 2), 0);
  b.add("x", Rational(1, 4), 0);
  b.add("z", Rational(3, 4), 0);
  EXPECT_EQ(tv_distance(a, b), Rational(3, 4));
  EXPECT_EQ(tv_distance(a, a), Rational(0));
}

TEST(KeyedHash, DeterministicAndSeparatedByNamespace) {
  EXPECT_EQ(keyed_u64(1, "mark", "v"), keyed_u64(1, "mark", "v"));
  EXPECT_NE(keyed_u64(1, "mark", "v"), keyed_u64(1, "slot", "v"));
  EXPECT_NE(keyed_u64(1, "mark", "v"), keyed_u64(2, "mark", "v"));
  EXPECT_NE(derive_seed(1, "sample", "0"), derive_seed(1, "sample", "1"));
}

TEST(KeyedHash, ScaleToIsUniformOnSmallRange) {
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 30000; ++i) ++counts[scale_to(keyed_u64(9, "u", std::to_string(i)), 3)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 400);
}

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.05"), Rational(1, 20));
  EXPECT_THROW(parse_rational("0.05", true), DomainError);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
}
