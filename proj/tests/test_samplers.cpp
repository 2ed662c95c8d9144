#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "fixtures.hpp"

using namespace irs;

namespace {

// Marks of the finite base cosets as the lazy oracle sees them.
std::vector<int> marks_of(const NormalizerOracle& o, const FiniteSchreierGraph& base) {
  std::vector<int> m;
  for (std::size_t c = 0; c < base.size(); ++c) m.push_back(o.mark_of(base.name(static_cast<int>(c))));
  return m;
}

}  // namespace

TEST(MarkLaw, RootParameter) {
  MarkLaw law(Rational(1, 2), 2);
  EXPECT_EQ(law.q(), Rational(3, 4));
  EXPECT_EQ(MarkLaw(Rational(1, 10), 2).q(), Rational(1, 4));
}

TEST(MarkLaw, MassesSumToOne) {
  for (int r = 1; r <= 4; ++r) {
    MarkLaw law(Rational(2, 7), r);
    for (bool at_root : {false, true}) {
      Rational total = 0;
      for (int m = 0; m <= r; ++m) total += law.mass(m, at_root);
      EXPECT_EQ(total, Rational(1));
    }
    EXPECT_EQ(law.mass(0, false), Rational(5, 7));
    EXPECT_EQ(law.mass(r, false), Rational(2, 7) / r);
  }
}

TEST(MarkLaw, EmpiricalFrequencyOfZero) {
  MarkLaw law(Rational(3, 10), 2);
  const int N = 100000;
  int zeros = 0;
  std::vector<int> counts(3, 0);
  for (int i = 0; i < N; ++i) {
    int m = mark({42, "mark", std::to_string(i)}, law, false);
    ++counts[m];
    zeros += m == 0;
  }
  EXPECT_NEAR(zeros / double(N), 0.7, 0.005);
  EXPECT_NEAR(counts[1] / double(N), 0.15, 0.005);
  EXPECT_NEAR(counts[2] / double(N), 0.15, 0.005);
}

TEST(MarkLaw, RejectsParameterOutsideOpenInterval) {
  EXPECT_THROW(MarkLaw(Rational(0), 2), DomainError);
  EXPECT_THROW(MarkLaw(Rational(1), 2), DomainError);
  EXPECT_THROW(MarkLaw(Rational(3, 2), 2), DomainError);
}

TEST(Normalizer, TripledCosetRules) {
  // Matching generator: slot 0 -> slot 2, loop at slot 1, slot 2 leaves.
  EXPECT_EQ(tripled_forward(1, 1, 0), 2);
  EXPECT_EQ(tripled_forward(1, 1, 1), 1);
  EXPECT_EQ(tripled_forward(1, 1, 2), std::nullopt);
  // Other generators run 0 -> 1 -> 2 and leave from slot 2.
  EXPECT_EQ(tripled_forward(1, 2, 0), 1);
  EXPECT_EQ(tripled_forward(1, 2, 1), 2);
  EXPECT_EQ(tripled_forward(1, 2, 2), std::nullopt);
  for (int m = 1; m <= 2; ++m)
    for (int g = 1; g <= 2; ++g)
      for (int s = 0; s < 3; ++s) {
        auto f = tripled_forward(m, g, s);
        if (f) {
          EXPECT_EQ(tripled_backward(m, g, *f), s);
        }
      }
}

TEST(Normalizer, TokensRoundTrip) {
  NormalizerVertex a{"ab", std::nullopt}, b{"ab", 2};
  EXPECT_EQ(a.token(), "[ab]");
  EXPECT_EQ(b.token(), "[ab]2");
  EXPECT_EQ(NormalizerVertex::parse(b.token()).slot, 2);
  EXPECT_EQ(NormalizerVertex::parse(a.token()).coset, "ab");
  EXPECT_THROW(NormalizerVertex::parse("ab"), DomainError);
}

TEST(Normalizer, EdgeRulesAtMarkedCosets) {
  // Check the eight rules directly against the base graph and the oracle's marks.
  Rng rng(2);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    FiniteSchreierGraph base = fixtures::random_finite_graph(2, 2 + rng.below(4), rng);
    NormalizerOracle o(make_finite_oracle(base), Rational(1, 2), seed);
    BallView b = ball(o, 4);
    for (std::size_t v = 0; v < b.size(); ++v) {
      if (b.boundary[v]) continue;
      NormalizerVertex x = NormalizerVertex::parse(b.vertices[v]);
      const int m = o.mark_of(x.coset);
      for (int i = 1; i <= 2; ++i) {
        NormalizerVertex y = NormalizerVertex::parse(b.vertices[b.out_edge(static_cast<int>(v), i)]);
        const int c = FiniteOracle(base).index_of(x.coset);
        const std::string next = base.name(base.step(c, Letter::gen(i)));
        const int mn = o.mark_of(next);
        if (m == 0 || x.slot == 2) {
          EXPECT_EQ(y.coset, next);
          EXPECT_EQ(y.slot, mn == 0 ? std::nullopt : std::optional<int>(0));
        } else if (i == m) {
          EXPECT_EQ(y.coset, x.coset);
          EXPECT_EQ(y.slot, *x.slot == 0 ? 2 : 1);
        } else {
          EXPECT_EQ(y.coset, x.coset);
          EXPECT_EQ(y.slot, *x.slot + 1);
        }
      }
    }
  }
}

TEST(Normalizer, LazyOracleMatchesFiniteOutcome) {
  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FiniteSchreierGraph base = fixtures::random_finite_graph(2, 1 + rng.below(5), rng);
    NormalizerOracle o(make_finite_oracle(base), Rational(1, 3), seed);
    auto marks = marks_of(o, base);
    int slot = marks[base.root()] ? *NormalizerVertex::parse(o.root()).slot : 0;
    FiniteSchreierGraph out = normalizer_outcome(base, marks, slot);
    EXPECT_TRUE(root_isomorphic(ball(o, 5), ball(make_finite_oracle(out), 5)));
  }
}

TEST(Normalizer, SampledBallsAreValid) {
  for (const char* p : {"1/20", "1/5", "1/2"}) {
    OracleSampler s = parse_base_spec("normalizer:trivial", parse_rational(p));
    for (std::uint64_t seed = 0; seed < 100; ++seed) EXPECT_TRUE(validate(ball(s(seed), 4)).ok);
  }
}

TEST(Normalizer, SmallPRarelyChangesTheCayleyBall) {
  // Union bound: the radius-2 ball is unchanged with probability >= (1-q)(1-p)^16.
  const Rational p(1, 100);
  const double q = to_double(MarkLaw(p, 2).q()), pd = to_double(p);
  const double bound = (1 - q) * std::pow(1 - pd, 16);
  OracleSampler s = parse_base_spec("normalizer:trivial", p);
  BallView cay = ball(make_cayley(2), 2);
  const int N = 4000;
  int same = 0;
  for (int i = 0; i < N; ++i) same += root_isomorphic(ball(s(sample_seed(5, i)), 2), cay);
  const double est = same / double(N);
  EXPECT_GE(est, bound - 3 * std::sqrt(bound * (1 - bound) / N));
}

TEST(Normalizer, ExactLawOverIndexTwoIsInvariant) {
  GraphLaw law = enumerate_normalizer_law(fixtures::index2(), Rational(1, 2));
  EXPECT_EQ(law.total(), Rational(1));
  EXPECT_TRUE(exact_invariance_report(law, 2).invariant());
  EXPECT_TRUE(rebasing_invariance(law).invariant);
}

TEST(Normalizer, ExactLawOverUniformRootedBaseIsInvariant) {
  FiniteSchreierGraph g(2, {{1, 2, 0}, {0, 2, 1}}, 0);
  GraphLaw law = enumerate_normalizer_law(uniform_rebasings(g), Rational(1, 3));
  EXPECT_EQ(law.total(), Rational(1));
  EXPECT_TRUE(rebasing_invariance(law).invariant);
}

TEST(Normalizer, ExactLawAgreesWithSampler) {
  // Cylinder frequencies of the lazy sampler against exact masses.
  const Rational p(1, 2);
  GraphLaw law = enumerate_normalizer_law(fixtures::index2(), p);
  std::map<std::string, Rational> exact;
  for (const auto& [k, atom] : law)
    exact[fingerprint_key(cylinder_fingerprint(FiniteOracle(atom.representative), 2))] += atom.mass;
  OracleSampler s = normalizer_sampler(constant_sampler(make_finite_oracle(fixtures::index2())), p);
  const int N = 20000;
  std::map<std::string, int> counts;
  for (int i = 0; i < N; ++i) ++counts[fingerprint_key(cylinder_fingerprint(s(sample_seed(1, i)), 2))];
  for (const auto& [k, c] : counts) EXPECT_TRUE(exact.count(k)) << k;
  for (const auto& [k, m] : exact) {
    const double e = to_double(m), f = counts[k] / double(N);
    EXPECT_LE(std::abs(f - e), 5 * std::sqrt(e * (1 - e) / N) + 1e-12) << k;
  }
}

TEST(Normalizer, SelfNormalizingMassMatchesAutomorphismCounts) {
  const Rational p(1, 2);
  GraphLaw law = enumerate_normalizer_law(fixtures::index2(), p);
  Rational trivial = 0;
  for (const auto& [k, atom] : law)
    if (fixtures::brute_aut_count(atom.representative) == 1) trivial += atom.mass;
  EXPECT_EQ(self_normalizing_mass(point_mass(fixtures::index2()), p), trivial);
}

TEST(Normalizer, SelfNormalizingMassMatchesOnRandomBases) {
  Rng rng(4);
  for (int t = 0; t < 12; ++t) {
    FiniteSchreierGraph base = fixtures::random_finite_graph(2, 2 + rng.below(2), rng);
    const Rational p(1, 3);
    GraphLaw law = enumerate_normalizer_law(base, p);
    Rational trivial = 0;
    for (const auto& [k, atom] : law)
      if (fixtures::brute_aut_count(atom.representative) == 1) trivial += atom.mass;
    EXPECT_EQ(self_normalizing_mass(point_mass(base), p), trivial);
  }
}

TEST(Normalizer, SelfNormalizingFractionGrowsWithBaseIndex) {
  // Mean over sampled connected bases of each index, at p = 1/2.
  Rng rng(1);
  const int per_index = 5;
  Rational previous = 0;
  for (int n = 2; n <= 12; ++n) {
    Rational sum = 0;
    for (int k = 0; k < per_index; ++k) {
      FiniteSchreierGraph base;
      do base = orbit_schreier(random_action(2, n, rng), 0);
      while (static_cast<int>(base.size()) != n);
      const Rational f = self_normalizing_mass(point_mass(base), Rational(1, 2));
      EXPECT_GE(f, 0);
      EXPECT_LE(f, 1);
      sum += f;
    }
    const Rational mean = sum / per_index;
    EXPECT_GE(mean, previous) << "index " << n;
    previous = mean;
  }
  EXPECT_EQ(previous, Rational(1));
}

TEST(Normalizer, EnumerationBudgetIsEnforced) {
  EXPECT_THROW(enumerate_normalizer_law(cyclic_base(12), Rational(1, 2), 1000), ResourceError);
}

TEST(Normalizer, BiasedControlFixesRootSlot) {
  OracleSampler s = parse_base_spec("biased-normalizer:trivial", Rational(1, 2));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    NormalizerVertex r = NormalizerVertex::parse(s(seed)->root());
    if (r.slot) {
      EXPECT_EQ(*r.slot, 1);
    }
  }
}

TEST(Poulsen, VertexTokens) {
  PoulsenVertex v{"{|1}", "ab"};
  EXPECT_EQ(v.token(), "{{|1}|ab}");
  PoulsenVertex w = PoulsenVertex::parse(v.token());
  EXPECT_EQ(w.copy, "{|1}");
  EXPECT_EQ(w.coset, "ab");
  EXPECT_EQ(w.level(), 1);
  EXPECT_EQ(PoulsenVertex::parse("{|1}").level(), 0);
}

TEST(Poulsen, TrivialBaseStaysCayley) {
  OracleSampler s = parse_base_spec("poulsen:trivial", Rational(1, 2));
  BallView cay = ball(make_cayley(2), 4);
  for (std::uint64_t seed = 0; seed < 40; ++seed) EXPECT_TRUE(root_isomorphic(ball(s(seed), 4), cay));
}

TEST(Poulsen, SurgeredS1FollowsStarPartner) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = std::make_shared<PoulsenGraph>(parse_base_spec("normalizer:trivial", Rational(1, 5)), Rational(1, 5), seed);
    PoulsenRawOracle raw(g);
    BallView b = ball(raw, 3);
    for (const VertexId& v : b.vertices) {
      auto w = g->star(v);
      const VertexId expected = g->raw_neighbor(w ? *w : v, Letter::gen(1));
      EXPECT_EQ(g->surgered_neighbor(v, Letter::gen(1)), expected);
      EXPECT_EQ(g->surgered_neighbor(expected, Letter::inv(1)), v);
      if (w) {
        EXPECT_EQ(g->star(*w), v);
      }
    }
  }
}

TEST(Poulsen, SampledBallsAreValid) {
  for (const char* base : {"poulsen:trivial", "poulsen:normalizer:trivial", "poulsen:file:" IRS_DATA_DIR "/index2.sgr"}) {
    OracleSampler s = parse_base_spec(base, Rational(1, 5));
    for (std::uint64_t seed = 0; seed < 60; ++seed) EXPECT_TRUE(validate(ball(s(seed), 4)).ok) << base;
  }
}

TEST(Surgery, NoStarsIsIdentity) {
  BallView b = ball(make_finite_oracle(fixtures::index2()), 2);
  SurgeryRecord rec;
  BallView out = surgery(b, &rec);
  EXPECT_TRUE(rec.stars.empty());
  EXPECT_EQ(out.out, b.out);
}

TEST(Surgery, InverseRestoresRawBall) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    BallView raw = ball(poulsen_raw_oracle(parse_base_spec("trivial", Rational(1, 3)), Rational(1, 3), seed), 4);
    // Stars reaching past the explored region cannot be rewired inside the view.
    for (std::size_t v = 0; v < raw.size(); ++v) {
      int w = raw.star[v];
      if (w == kNoVertex) continue;
      if (raw.out_edge(static_cast<int>(v), 1) == kNoVertex || raw.out_edge(w, 1) == kNoVertex) {
        raw.star[v] = kNoVertex;
        raw.star[w] = kNoVertex;
      }
    }
    SurgeryRecord rec;
    BallView out = surgery(raw, &rec);
    EXPECT_EQ(out.star_count(), 0u);
    BallView back = inverse_surgery(out, rec);
    EXPECT_EQ(back.out, raw.out);
    EXPECT_EQ(back.star, raw.star);
  }
}

TEST(Surgery, RejectsAsymmetricStar) {
  BallView b = ball(make_finite_oracle(fixtures::index2()), 1);
  b.star.assign(b.size(), kNoVertex);
  b.star[0] = 1;
  EXPECT_THROW(surgery(b), DomainError);
}

TEST(BaseSpec, RejectsUnknownSpec) {
  EXPECT_THROW(parse_base_spec("bogus", Rational(1, 2)), DomainError);
  EXPECT_THROW(parse_finite_base_law("trivial"), DomainError);
}
