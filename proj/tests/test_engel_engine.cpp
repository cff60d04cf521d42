#include <gtest/gtest.h>

#include "superengel/engel_engine.hpp"
#include "support.hpp"

using namespace superengel;
using namespace test_support;

namespace {

EnvAlgebra u_of(const RawAlgebra& raw) { return EnvAlgebra::restricted(build(raw)); }

}  // namespace

TEST(ExactOracle, CommutativeAlgebraHasDegreeOne) {
  auto r = engel_degree_exact(u_of(gallery::odd_square(3, true)));
  ASSERT_TRUE(std::holds_alternative<EngelWithDegree>(r.verdict)) << r.summary();
  EXPECT_EQ(std::get<EngelWithDegree>(r.verdict).n, 1u);
}

TEST(ExactOracle, ExampleAlgebraIsEngelOfDegreeAtLeastThree) {
  auto A = u_of(gallery::odd_extension(1, 3, true));
  auto r = engel_degree_exact(A);
  ASSERT_TRUE(std::holds_alternative<EngelWithDegree>(r.verdict)) << r.summary();
  const auto& e = std::get<EngelWithDegree>(r.verdict);
  EXPECT_GE(e.n, 3u);
  EXPECT_EQ(r.budget_spent, (177147u - 1) / 2);
  // Minimality: the extremal b still has a nonzero (n-1)-fold commutator.
  ASSERT_TRUE(e.extremal);
  RegularRep rep(A);
  EXPECT_FALSE(rep.ad(rep.coords(*e.extremal)).pow(e.n - 1).is_zero());
  EXPECT_TRUE(rep.ad(rep.coords(*e.extremal)).pow(e.n).is_zero());
}

TEST(ExactOracle, CliffordAlgebraIsNotEngel) {
  auto L = build(gallery::clifford(3, true));
  auto r = engel_degree_exact(EnvAlgebra::restricted(L));
  ASSERT_TRUE(r.is_witness()) << r.summary();
  const auto& w = std::get<NotEngelWitness>(r.verdict);
  EXPECT_TRUE(w.all_n);
  EXPECT_TRUE(verify_witness(L, w));
}

TEST(ExactOracle, BudgetGivesInconclusive) {
  auto r = engel_degree_exact(u_of(gallery::heisenberg(3, true)), 1000);
  EXPECT_TRUE(r.is_inconclusive());
}

TEST(WitnessSearch, OddEigenvector) {
  auto L = build(gallery::odd_eigen(0, false));
  auto A = EnvAlgebra::truncated(L, 6);
  auto r = engel_witness_search(A, 4, 50, 1);
  ASSERT_TRUE(r.is_witness()) << r.summary();
  EXPECT_TRUE(verify_witness(L, std::get<NotEngelWitness>(r.verdict)));
  // The forced pair itself.
  auto c = A.iterated_commutator(A.parse("y"), A.parse("x"), 4);
  EXPECT_EQ(A.format(c), "y");
}

TEST(WitnessSearch, HeisenbergEveryDegree) {
  auto L = build(gallery::heisenberg(3, false));
  auto A = EnvAlgebra::truncated(L, 12);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto r = engel_witness_search(A, n, 50, 2, 42 + n);
    ASSERT_TRUE(r.is_witness()) << n << " " << r.summary();
    EXPECT_TRUE(verify_witness(L, std::get<NotEngelWitness>(r.verdict)));
  }
}

TEST(WitnessSearch, CommutativeFindsNothing) {
  auto A = EnvAlgebra::truncated(build(gallery::odd_square(3, false)), 8);
  EXPECT_TRUE(engel_witness_search(A, 1, 40, 2).is_inconclusive());
}

TEST(WitnessSearch, CoherentWithExactDegree) {
  auto A = u_of(gallery::odd_extension(1, 3, true));
  auto n = std::get<EngelWithDegree>(engel_degree_exact(A).verdict).n;
  EXPECT_TRUE(engel_witness_search(A, n, 100, 4).is_inconclusive());
  EXPECT_TRUE(engel_witness_search(A, n - 1, 200, 4).is_witness());
}

TEST(WitnessSearch, DeterministicForSeed) {
  auto A = EnvAlgebra::truncated(build(gallery::heisenberg(3, false)), 12);
  auto r1 = engel_witness_search(A, 3, 50, 2, 9), r2 = engel_witness_search(A, 3, 50, 2, 9);
  ASSERT_TRUE(r1.is_witness() && r2.is_witness());
  const auto &w1 = std::get<NotEngelWitness>(r1.verdict), &w2 = std::get<NotEngelWitness>(r2.verdict);
  EXPECT_EQ(A.format(w1.a), A.format(w2.a));
  EXPECT_EQ(A.format(w1.b), A.format(w2.b));
}

TEST(CentralPower, Examples) {
  auto sq = central_power_check(u_of(gallery::odd_square(3, true)), 1);
  ASSERT_TRUE(sq.holds);
  EXPECT_TRUE(*sq.holds);

  auto heis = central_power_check(u_of(gallery::heisenberg(3, true)), 1);
  ASSERT_TRUE(heis.holds);
  EXPECT_EQ(heis.tier, OracleMode::Symbolic);

  auto A = u_of(gallery::clifford(3, true));
  auto cl = central_power_check(A, 3);
  ASSERT_TRUE(cl.holds);
  EXPECT_FALSE(*cl.holds);
  ASSERT_TRUE(cl.witness);
  RegularRep rep(A);
  EXPECT_FALSE(rep.center().contains(rep.power(rep.coords(*cl.witness), 27)));
}

TEST(CentralPower, ConsistentWithExactDegree) {
  for (auto raw : {gallery::odd_extension(1, 3, true), gallery::odd_square(3, true), gallery::odd_eigen(3, true)}) {
    auto A = u_of(raw);
    auto ex = engel_degree_exact(A);
    for (unsigned k = 1; k <= 2; ++k) {
      auto cp = central_power_check(A, k);
      if (cp.holds && *cp.holds) {
        ASSERT_TRUE(ex.engel_bound());
        EXPECT_LE(*ex.engel_bound(), k == 1 ? 3u : 9u);
      }
    }
  }
}

TEST(ChainCertificate, HeisenbergZeroPMap) {
  auto A = u_of(gallery::heisenberg(3, true));
  auto r = chain_certificate(RegularRep(A));
  ASSERT_TRUE(std::holds_alternative<CertifiedEngelViaChain>(r.verdict)) << r.summary();
  const auto& c = std::get<CertifiedEngelViaChain>(r.verdict);
  EXPECT_EQ(c.nil_index, 3u);
  EXPECT_EQ(c.bound, 9u);
}

TEST(ChainCertificate, ToralCenterFails) {
  EXPECT_TRUE(chain_certificate(RegularRep(u_of(gallery::heisenberg_toral(3)))).is_inconclusive());
  EXPECT_TRUE(chain_certificate(RegularRep(u_of(gallery::clifford(3, true)))).is_inconclusive());
}

TEST(ChainCertificate, BoundDominatesExactDegree) {
  for (const auto& inst : gallery::random_corpus(30, 2, 1, 3, 99)) {
    auto A = EnvAlgebra::restricted(inst.algebra);
    if (A.carrier_dim() > 12) continue;
    auto ex = engel_degree_exact(A);
    auto cert = chain_certificate(RegularRep(A));
    if (cert.is_engel()) {
      ASSERT_TRUE(ex.is_engel()) << inst.seed;
      EXPECT_LE(*ex.engel_bound(), *cert.engel_bound()) << inst.seed;
    }
  }
}

TEST(AdSampling, ToralHeisenbergWitness) {
  auto L = build(gallery::heisenberg_toral(3));
  auto r = sample_non_nilpotent_ad(RegularRep(EnvAlgebra::restricted(L)), 100);
  ASSERT_TRUE(r.is_witness()) << r.summary();
  EXPECT_TRUE(verify_witness(L, std::get<NotEngelWitness>(r.verdict)));
}

TEST(OddExtension, IdentityGrid) {
  for (unsigned m : {1u, 2u, 3u})
    for (std::uint32_t p : {3u, 5u}) {
      auto c = verify_odd_extension(m, p);
      EXPECT_TRUE(c.ok()) << m << "," << p;
      EXPECT_TRUE(c.two_step_nonzero);
    }
}

TEST(RunOracle, TierSelection) {
  OracleOptions opts;
  auto g1 = run_oracle(build(gallery::odd_extension(1, 3, true)), true, opts);
  EXPECT_EQ(g1.tier, "exact-enumeration");
  auto g2 = run_oracle(build(gallery::heisenberg(3, true)), true, opts);
  EXPECT_EQ(g2.tier, "chain-certificate");
  EXPECT_TRUE(g2.is_engel());
  auto g6 = run_oracle(build(gallery::heisenberg_toral(3)), true, opts);
  EXPECT_TRUE(g6.is_witness());
  EXPECT_TRUE(g6.is_proof());
  auto g2o = run_oracle(build(gallery::heisenberg(3, false)), false, opts);
  EXPECT_TRUE(g2o.is_witness()) << g2o.summary();
  EXPECT_FALSE(g2o.is_proof());
}
