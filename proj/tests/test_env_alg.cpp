#include <gtest/gtest.h>

#include <random>

#include "superengel/env_alg.hpp"
#include "support.hpp"

using namespace superengel;
using namespace test_support;

namespace {

EnvElement random_element(const EnvAlgebra& A, std::mt19937_64& rng, unsigned max_deg) {
  EnvElement e = A.zero();
  for (const auto& m : A.basis_monomials())
    if (m.degree() <= max_deg && rng() % 2) e.add_term(m, random_coeff(A.field(), rng));
  return e;
}

bool same(const EnvAlgebra& A, const EnvElement& a, const EnvElement& b) { return A.sub(a, b).is_zero(); }

}  // namespace

TEST(EnvAlgebra, ReorderingUsesTheBracket) {
  auto L = build(gallery::odd_extension(1, 3, true));
  auto A = EnvAlgebra::restricted(L);
  EXPECT_TRUE(same(A, A.parse("y*x1"), A.parse("x1*y - z1")));
  EXPECT_TRUE(A.parse("y*y").is_zero());
  EXPECT_TRUE(A.parse("x1^3").is_zero());
  EXPECT_EQ(A.format(A.parse("z1*y")), "2*y*z1");
}

TEST(EnvAlgebra, OddSquaresAndPMap) {
  auto A = EnvAlgebra::restricted(build(gallery::odd_square(3, true)));
  EXPECT_EQ(A.format(A.power(A.parse("y"), 3)), "2*x*y");
  EXPECT_TRUE(same(A, A.parse("x^3"), A.parse("x")));
  auto T = EnvAlgebra::restricted(build(gallery::heisenberg_toral(3)));
  EXPECT_TRUE(same(T, T.parse("z^3"), T.parse("z")));
  EXPECT_TRUE(same(T, T.parse("y*x"), T.parse("x*y - z")));
}

TEST(EnvAlgebra, CarrierDimensions) {
  EXPECT_EQ(EnvAlgebra::restricted(build(gallery::odd_extension(1, 3, true))).carrier_dim(), 12u);
  EXPECT_EQ(EnvAlgebra::restricted(build(gallery::heisenberg(3, true))).carrier_dim(), 27u);
  EXPECT_EQ(EnvAlgebra::restricted(build(gallery::odd_extension(2, 3, true))).carrier_dim(), 9u * 8u);
  // 1 + 3 + 6 monomials of degree <= 2 in x, y, z.
  EXPECT_EQ(EnvAlgebra::truncated(build(gallery::heisenberg(3, false)), 2).carrier_dim(), 10u);
}

TEST(EnvAlgebra, IteratedCommutatorsInExample) {
  for (std::uint32_t p : {0u, 3u, 5u}) {
    auto L = build(gallery::odd_extension(1, p, false));
    auto A = EnvAlgebra::truncated(L, 6);
    auto x = A.parse("x1"), y = A.parse("y");
    EXPECT_TRUE(same(A, A.iterated_commutator(x, y, 1), A.parse("z1"))) << p;
    EXPECT_TRUE(same(A, A.iterated_commutator(x, y, 2), A.scale(A.parse("y*z1"), L.field().from_int(-2)))) << p;
    auto c3 = A.iterated_commutator(x, y, 3);
    EXPECT_TRUE(c3.is_zero()) << p;
    EXPECT_FALSE(c3.lossy);
  }
}

TEST(EnvAlgebra, OddEigenvectorNeverVanishes) {
  auto A = EnvAlgebra::truncated(build(gallery::odd_eigen(0, false)), 10);
  auto x = A.parse("x"), y = A.parse("y");
  for (unsigned n = 1; n <= 8; ++n) {
    auto c = A.iterated_commutator(y, x, n);
    auto expect = A.scale(y, A.field().from_int(n % 2 ? -1 : 1));
    EXPECT_TRUE(same(A, c, expect)) << n << ": " << A.format(c);
  }
}

TEST(EnvAlgebra, HeisenbergCommutatorsGrow) {
  auto A = EnvAlgebra::truncated(build(gallery::heisenberg(3, false)), 10);
  auto x = A.parse("x"), xy = A.parse("x*y");
  EnvElement expect = x;
  for (unsigned n = 1; n <= 6; ++n) {
    expect = A.multiply(expect, A.parse("z"));
    auto c = A.iterated_commutator(x, xy, n);
    EXPECT_TRUE(same(A, c, expect)) << n << ": " << A.format(c);
    EXPECT_FALSE(c.lossy);
  }
}

TEST(EnvAlgebra, TruncationIsFlagged) {
  auto A = EnvAlgebra::truncated(build(gallery::heisenberg(3, false)), 2);
  auto p = A.multiply(A.parse("x*y"), A.parse("x"));
  EXPECT_TRUE(p.lossy);
  EXPECT_FALSE(A.multiply(A.parse("x"), A.parse("y")).lossy);
}

TEST(EnvAlgebra, AssociativityOnRandomTriples) {
  std::mt19937_64 rng(11);
  std::vector<LieSuperalgebra> algebras = {build(gallery::odd_extension(2, 3, true)), build(gallery::clifford(3, true)),
                                           build(gallery::heisenberg_toral(3)), build(gallery::odd_eigen(5, true))};
  for (const auto& inst : gallery::random_corpus(6, 2, 2, 3, 5)) algebras.push_back(inst.algebra);
  int checked = 0;
  for (const auto& L : algebras) {
    auto A = EnvAlgebra::restricted(L);
    for (int t = 0; t < 25; ++t) {
      auto a = random_element(A, rng, 3), b = random_element(A, rng, 3), c = random_element(A, rng, 3);
      EXPECT_TRUE(same(A, A.multiply(A.multiply(a, b), c), A.multiply(a, A.multiply(b, c))));
      ++checked;
    }
  }
  EXPECT_GE(checked, 200);
}

TEST(EnvAlgebra, SupercommutatorMatchesBracket) {
  std::mt19937_64 rng(3);
  for (const auto& inst : gallery::random_corpus(8, 2, 2, 3, 21)) {
    const auto& L = inst.algebra;
    auto A = EnvAlgebra::restricted(L);
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j) {
        auto a = A.generator(i), b = A.generator(j);
        const int s = (parity_bit(L.parity(i)) & parity_bit(L.parity(j))) ? -1 : 1;
        auto lhs = A.sub(A.multiply(a, b), A.scale(A.multiply(b, a), L.field().from_int(s)));
        EXPECT_TRUE(same(A, lhs, A.from_lie(L.bracket_basis(i, j))));
      }
    for (std::size_t i = 0; i < L.n_even(); ++i)
      EXPECT_TRUE(same(A, A.power(A.generator(i), 3), A.from_lie(L.p_map_basis(i))));
  }
}

TEST(RegularRep, FrobeniusOnAdjoint) {
  std::mt19937_64 rng(8);
  for (auto raw : {gallery::odd_extension(1, 3, true), gallery::clifford(3, true), gallery::heisenberg(3, true)}) {
    auto A = EnvAlgebra::restricted(build(raw));
    RegularRep R(A);
    EXPECT_FALSE(R.lossy());
    for (int t = 0; t < 5; ++t) {
      auto a = R.coords(random_element(A, rng, 4));
      EXPECT_EQ(R.ad(a).pow(3), R.ad(R.power(a, 3)));
    }
    EXPECT_TRUE(R.basis_ads()[0].is_zero());
  }
}

TEST(RegularRep, TableAgreesWithElements) {
  std::mt19937_64 rng(4);
  auto A = EnvAlgebra::restricted(build(gallery::odd_extension(2, 3, true)));
  RegularRep R(A);
  for (int t = 0; t < 20; ++t) {
    auto a = random_element(A, rng, 3), b = random_element(A, rng, 3);
    EXPECT_EQ(R.multiply(R.coords(a), R.coords(b)), R.coords(A.multiply(a, b)));
    EXPECT_TRUE(same(A, R.element(R.coords(a)), a));
  }
}

TEST(RegularRep, CommutatorIdealChains) {
  auto heis = commutator_ideal_chain(EnvAlgebra::restricted(build(gallery::heisenberg(3, true))));
  EXPECT_TRUE(heis.associative.terminal_zero);
  EXPECT_EQ(heis.associative.index, 3u);  // R = z u and z^3 = 0
  auto cliff = commutator_ideal_chain(EnvAlgebra::restricted(build(gallery::clifford(3, true))));
  EXPECT_FALSE(cliff.associative.terminal_zero);
  auto sq = commutator_ideal_chain(EnvAlgebra::restricted(build(gallery::odd_square(3, true))));
  EXPECT_TRUE(sq.associative.terminal_zero);
  EXPECT_EQ(sq.associative.dims.front(), 0u);
  EXPECT_EQ(env_center_dim(EnvAlgebra::restricted(build(gallery::odd_square(3, true)))), 6u);
}

TEST(EnvAlgebra, GenericElement) {
  auto A = EnvAlgebra::restricted(build(gallery::odd_square(3, true)));
  EXPECT_EQ(A.generic_size(std::nullopt, true), 5u);
  auto ring = Ring::poly(3, 8);
  auto w = A.generic_element(ring, std::nullopt, 0, true);
  EXPECT_EQ(w.terms.size(), 5u);
  EXPECT_THROW(A.generic_element(ring, std::nullopt, 4, true), Error);
}

TEST(EnvAlgebra, ParseFormatRoundTrip) {
  std::mt19937_64 rng(9);
  auto A = EnvAlgebra::truncated(build(gallery::odd_extension(2, 0, false)), 4);
  for (int t = 0; t < 20; ++t) {
    auto a = random_element(A, rng, 4);
    EXPECT_TRUE(same(A, A.parse(A.format(a)), a)) << A.format(a);
  }
  EXPECT_THROW(A.parse("q*x1"), Error);
}

TEST(EnvAlgebra, MixingAlgebrasIsRejected) {
  auto L = build(gallery::heisenberg(3, true));
  auto A = EnvAlgebra::restricted(L);
  auto B = EnvAlgebra::truncated(L, 3);
  EXPECT_THROW(A.multiply(A.parse("x"), B.parse("x")), Error);
}
