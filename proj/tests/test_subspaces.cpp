#include <gtest/gtest.h>

#include <random>

#include "superengel/subspaces.hpp"
#include "support.hpp"

using namespace superengel;
using namespace test_support;

namespace {

Subspace span1(const LieSuperalgebra& L, const Vec& v) {
  std::vector<Vec> g{v};
  return span_of(L, g);
}

}  // namespace

TEST(BracketSpace, Examples) {
  auto G1 = build(gallery::odd_extension(1, 3, false));
  auto all = whole_space(G1);
  EXPECT_EQ(bracket_space(G1, all, all), span1(G1, named(G1, {{1, "z1"}})));
  EXPECT_TRUE(bracket_space(G1, all, zero_space(G1)).is_zero());
  auto G2 = build(gallery::heisenberg(3, false));
  EXPECT_EQ(bracket_space(G2, even_space(G2), even_space(G2)), span1(G2, named(G2, {{1, "z"}})));
}

TEST(LowerCentralSeries, Examples) {
  auto G1 = build(gallery::odd_extension(1, 3, false));
  auto s = lower_central_series(G1);
  ASSERT_EQ(s.chain.size(), 3u);
  EXPECT_EQ(s.chain[1], span1(G1, named(G1, {{1, "z1"}})));
  EXPECT_TRUE(s.terminal_zero);
  EXPECT_EQ(s.nilpotency_class, std::optional<std::size_t>(2));

  auto ab = build(gallery::odd_extension(0, 3, false));
  EXPECT_EQ(lower_central_series(ab).nilpotency_class, std::optional<std::size_t>(1));

  auto G5 = build(gallery::odd_eigen(0, false));
  auto s5 = lower_central_series(G5);
  EXPECT_FALSE(s5.terminal_zero);
  EXPECT_EQ(s5.chain.back(), span1(G5, named(G5, {{1, "y"}})));
}

TEST(LowerCentralSeries, DecreasingAndContainsDerived) {
  for (const auto& inst : gallery::random_corpus(40, 2, 2, 3, 3)) {
    const auto& L = inst.algebra;
    auto s = lower_central_series(L);
    for (std::size_t k = 1; k < s.chain.size(); ++k) EXPECT_TRUE(s.chain[k - 1].contains(s.chain[k]));
    if (s.chain.size() > 1) EXPECT_TRUE(s.chain[1].contains(derived_subalgebra(L)));
  }
}

TEST(Center, ExamplesAndIdealProperty) {
  auto G1 = build(gallery::odd_extension(1, 3, false));
  EXPECT_EQ(center(G1), span1(G1, named(G1, {{1, "z1"}})));
  auto ab = build(gallery::odd_extension(0, 5, false));
  EXPECT_EQ(center(ab), whole_space(ab));
  auto G2 = build(gallery::heisenberg(3, false));
  EXPECT_EQ(center(G2), span1(G2, named(G2, {{1, "z"}})));
  for (const auto& inst : gallery::random_corpus(40, 2, 2, 3, 4)) {
    const auto& L = inst.algebra;
    EXPECT_TRUE(bracket_space(L, whole_space(L), center(L)).is_zero());
  }
}

TEST(UniformAdNilpotency, Examples) {
  auto G1 = build(gallery::odd_extension(1, 3, false));
  auto r = uniform_ad_nilpotency(G1, even_space(G1));
  EXPECT_EQ(r.status, AdNilpotency::Status::Nilpotent);
  EXPECT_EQ(r.index, 2u);
  EXPECT_EQ(r.certainty, Certainty::Exact);

  auto ab = build(gallery::odd_extension(0, 3, false));
  EXPECT_EQ(uniform_ad_nilpotency(ab, whole_space(ab)).index, 1u);

  auto G5 = build(gallery::odd_eigen(3, false));
  auto r5 = uniform_ad_nilpotency(G5, even_space(G5));
  EXPECT_EQ(r5.status, AdNilpotency::Status::NotNilpotent);
  ASSERT_TRUE(r5.witness);
  EXPECT_TRUE(vec_eq(*r5.witness, named(G5, {{1, "x"}})));

  auto G5q = build(gallery::odd_eigen(0, false));
  EXPECT_EQ(uniform_ad_nilpotency(G5q, even_space(G5q)).status, AdNilpotency::Status::NotNilpotent);
  auto G1q = build(gallery::odd_extension(3, 0, false));
  auto rq = uniform_ad_nilpotency(G1q, even_space(G1q));
  EXPECT_EQ(rq.status, AdNilpotency::Status::Nilpotent);
  EXPECT_EQ(rq.certainty, Certainty::Bound);
}

TEST(UniformAdNilpotency, EngelTheoremConsistency) {
  // Exact ad-nilpotency on L_0 plus nilpotent (ad y)^2 on odd basis forces a
  // nilpotent lower central series.
  for (const auto& inst : gallery::random_corpus(60, 2, 2, 3, 9)) {
    const auto& L = inst.algebra;
    auto r = uniform_ad_nilpotency(L, even_space(L));
    if (r.status != AdNilpotency::Status::Nilpotent || r.certainty != Certainty::Exact) continue;
    bool odd_ok = true;
    for (std::size_t i = L.n_even(); i < L.dim(); ++i) {
      auto a = L.ad(L.basis_vec(i));
      if (!(a * a).nilpotency_index()) odd_ok = false;
    }
    // Engel's theorem needs every homogeneous ad nilpotent; odd elements are
    // checked through random combinations as well.
    std::mt19937_64 rng(inst.seed);
    for (int k = 0; k < 20 && odd_ok && L.n_odd(); ++k) {
      auto a = L.ad(random_odd(L, rng));
      if (!(a * a).nilpotency_index()) odd_ok = false;
    }
    if (odd_ok) EXPECT_TRUE(lower_central_series(L).terminal_zero);
  }
}

TEST(AssociativeEnvelope, Examples) {
  auto G1 = build(gallery::odd_extension(1, 3, false));
  auto ops = homogeneous_ads(G1);
  EXPECT_TRUE(associative_envelope_nilpotency(ops));

  FpField f{3};
  CoeffField cf{Ring::fp(3)};
  LinearOperator shift(cf, 4, 4);
  for (int i = 0; i + 1 < 4; ++i) shift(i, i + 1) = Coeff::fp(1, 3);
  std::vector<LinearOperator> one{shift};
  EXPECT_EQ(associative_envelope_nilpotency(one), std::optional<std::size_t>(4));

  auto G5 = build(gallery::odd_eigen(3, false));
  std::vector<LinearOperator> adx{G5.ad(named(G5, {{1, "x"}}))};
  EXPECT_FALSE(associative_envelope_nilpotency(adx));

  std::vector<LinearOperator> mixed{shift, LinearOperator(cf, 3, 3)};
  EXPECT_THROW(associative_envelope_nilpotency(mixed), Error);
}

TEST(AssociativeEnvelope, NilpotentAlgebrasGiveFiniteIndex) {
  for (const auto& inst : gallery::random_corpus(60, 2, 2, 3, 21)) {
    const auto& L = inst.algebra;
    if (!lower_central_series(L).terminal_zero) continue;
    auto ops = homogeneous_ads(L);
    EXPECT_TRUE(associative_envelope_nilpotency(ops));
  }
}

TEST(PNilpotent, Examples) {
  auto G2 = build(gallery::heisenberg(3, true));
  auto r = is_p_nilpotent(G2, span1(G2, named(G2, {{1, "z"}})));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.exponent, 1u);

  auto G3 = build(gallery::odd_square(3, true));
  auto r3 = is_p_nilpotent(G3, span1(G3, named(G3, {{1, "x"}})));
  EXPECT_FALSE(r3.holds);
  ASSERT_TRUE(r3.witness);

  auto r0 = is_p_nilpotent(G3, zero_space(G3));
  EXPECT_TRUE(r0.holds);
  EXPECT_EQ(r0.exponent, 0u);
}

TEST(PNilpotent, BasisModeAndBudget) {
  auto G1 = build(gallery::odd_extension(3, 3, true));
  EXPECT_THROW(is_p_nilpotent(G1, even_space(G1), 5, false), Error);
  auto r = is_p_nilpotent(G1, even_space(G1), 5, true);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.certainty, Certainty::BasisCertified);
}

TEST(ComputeM, Examples) {
  auto G4 = build(gallery::clifford(3, true));
  EXPECT_TRUE(compute_M(G4).is_zero());
  auto G3 = build(gallery::odd_square(3, true));
  EXPECT_TRUE(compute_M(G3).is_zero());
  auto G1 = build(gallery::odd_extension(2, 3, true));
  EXPECT_EQ(compute_M(G1), odd_space(G1));
}

TEST(ComputeM, InvariantUnderOddPermutation) {
  std::mt19937_64 rng(42);
  for (const auto& inst : gallery::random_corpus(30, 2, 2, 3, 13)) {
    const auto& L = inst.algebra;
    if (L.n_odd() < 2) continue;
    std::vector<std::size_t> perm(L.dim());
    for (std::size_t k = 0; k < L.dim(); ++k) perm[k] = k;
    std::swap(perm[L.n_even()], perm[L.n_even() + 1]);
    std::vector<Coeff> scale(L.dim(), L.field().one());
    auto R = L.rebased(perm, scale);
    auto M = compute_M(L), MR = compute_M(R);
    // Map MR back to the original coordinates by the same swap.
    Subspace back = zero_space(L);
    for (auto v : MR.basis()) {
      std::swap(v[L.n_even()], v[L.n_even() + 1]);
      back.insert(v);
    }
    EXPECT_EQ(M, back);
  }
}

TEST(IdealClosure, Examples) {
  auto G1 = build(gallery::odd_extension(1, 3, true));
  auto z = span1(G1, named(G1, {{1, "z1"}}));
  EXPECT_EQ(ideal_closure(G1, z, true), z);
  EXPECT_EQ(ideal_closure(G1, whole_space(G1), true), whole_space(G1));
  auto G3 = build(gallery::odd_square(3, true));
  auto yy = bracket_space(G3, odd_space(G3), odd_space(G3));
  EXPECT_EQ(ideal_closure(G3, yy, true), span1(G3, named(G3, {{1, "x"}})));
  auto G1b = build(gallery::odd_extension(1, 3, false));
  auto x = span1(G1b, named(G1b, {{1, "x1"}}));
  auto cl = ideal_closure(G1b, x, false);
  EXPECT_TRUE(is_ideal(G1b, cl));
  EXPECT_EQ(cl.dim(), 2u);
}
