#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace superengel;
using namespace test_support;

namespace {

bool has_violation(const ValidationReport& r, const std::string& axiom, const std::string& loc = "") {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) {
    return v.axiom == axiom && (loc.empty() || v.location == loc);
  });
}

std::vector<LieSuperalgebra> gallery_algebras(std::uint32_t p) {
  std::vector<LieSuperalgebra> out;
  for (bool r : {false, true})
    for (const auto& n : gallery::names()) {
      if (n == "G6" && !r) continue;
      out.push_back(build(*gallery::by_name(n, 2, p, r)));
    }
  return out;
}

// x, e1, e2, e3 with (x, e1) = e2, (x, e2) = e3 and zero p-map, over F_3.
RawAlgebra filiform() {
  RawAlgebra raw;
  raw.characteristic = 3;
  raw.restricted = true;
  raw.even_basis = {"x", "e1", "e2", "e3"};
  raw.bracket("x", "e1", {{Coeff::integer(1), "e2"}}).bracket("x", "e2", {{Coeff::integer(1), "e3"}});
  for (const auto& n : raw.even_basis) raw.pmap(n, {});
  return raw;
}

}  // namespace

TEST(Validate, GalleryAlgebrasAreValid) {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned m : {1u, 2u, 3u}) {
      auto res = LieSuperalgebra::validate(gallery::odd_extension(m, p, true));
      EXPECT_TRUE(res.report.ok()) << res.report.summary();
    }
  for (const auto& L : gallery_algebras(3)) EXPECT_GT(L.dim(), 0u);
  EXPECT_TRUE(LieSuperalgebra::validate(gallery::odd_eigen(0, false)).report.ok());
}

TEST(Validate, WrongSignMirrorIsReported) {
  RawAlgebra raw;
  raw.characteristic = 3;
  raw.even_basis = {"x"};
  raw.odd_basis = {"y", "z"};
  raw.bracket("x", "y", {{Coeff::integer(1), "z"}}).bracket("y", "x", {{Coeff::integer(1), "z"}});
  auto res = LieSuperalgebra::validate(raw);
  EXPECT_FALSE(res.algebra);
  EXPECT_TRUE(has_violation(res.report, "skew-symmetry", "(y,x)")) << res.report.summary();
}

TEST(Validate, CubicIdentityViolation) {
  RawAlgebra raw;
  raw.characteristic = 3;
  raw.even_basis = {"x"};
  raw.odd_basis = {"y"};
  raw.bracket("y", "y", {{Coeff::integer(1), "x"}}).bracket("x", "y", {{Coeff::integer(1), "x"}});
  auto res = LieSuperalgebra::validate(raw);
  EXPECT_FALSE(res.algebra);
  EXPECT_TRUE(has_violation(res.report, "cubic", "y")) << res.report.summary();
}

TEST(Validate, RejectsCharacteristicTwoAndMissingPMap) {
  RawAlgebra raw = gallery::odd_square(3, true);
  raw.characteristic = 2;
  auto res = LieSuperalgebra::validate(raw);
  ASSERT_TRUE(res.report.error);
  EXPECT_EQ(*res.report.error, ErrorCode::CharTwoRejected);

  RawAlgebra missing = gallery::heisenberg(3, true);
  missing.p_map.pop_back();
  auto res2 = LieSuperalgebra::validate(missing);
  ASSERT_TRUE(res2.report.error);
  EXPECT_EQ(*res2.report.error, ErrorCode::MissingPMap);
}

TEST(Validate, RejectsIncompatiblePMapAndRestrictedCharZero) {
  RawAlgebra raw = gallery::odd_eigen(3, true);
  raw.p_map.clear();
  raw.pmap("x", {});  // ad(0) = 0 but (ad x)^3 maps y to y
  EXPECT_TRUE(has_violation(LieSuperalgebra::validate(raw).report, "p-map", "x"));

  RawAlgebra q = gallery::odd_eigen(0, false);
  q.restricted = true;
  EXPECT_TRUE(has_violation(LieSuperalgebra::validate(q).report, "restricted"));
}

TEST(Validate, CubicEnumerationBudget) {
  RawAlgebra raw = gallery::odd_extension(3, 3, false);  // 4 odd basis elements
  auto res = LieSuperalgebra::validate(raw, 10);
  ASSERT_TRUE(res.report.error);
  EXPECT_EQ(*res.report.error, ErrorCode::BudgetExceeded);
}

TEST(Bracket, Examples) {
  auto G1 = build(gallery::odd_extension(1, 3, false));
  EXPECT_TRUE(vec_eq(G1.bracket(named(G1, {{1, "x1"}}), named(G1, {{1, "y"}})), named(G1, {{1, "z1"}})));
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    Vec u = random_even(G1, rng);
    EXPECT_TRUE(vec_eq(G1.bracket(u, u), G1.zero_vec()));
  }
  auto G4 = build(gallery::clifford(3, false));
  Vec s = named(G4, {{1, "y1"}, {1, "y2"}});
  EXPECT_TRUE(vec_eq(G4.bracket(s, s), named(G4, {{2, "x"}})));
}

TEST(Ad, Examples) {
  auto G1 = build(gallery::odd_extension(1, 3, false));
  auto adx = G1.ad(named(G1, {{1, "x1"}}));
  EXPECT_EQ(adx.nilpotency_index(), std::optional<std::size_t>(2));
  auto G5 = build(gallery::odd_eigen(3, false));
  EXPECT_FALSE(G5.ad(named(G5, {{1, "x"}})).nilpotency_index());
}

TEST(Ad, LinearInArgument) {
  std::mt19937_64 rng(42);
  for (const auto& L : gallery_algebras(5)) {
    for (int i = 0; i < 10; ++i) {
      Vec x = random_vec(L, 0, L.dim(), rng), w = random_vec(L, 0, L.dim(), rng);
      Coeff a = random_coeff(L.field(), rng), b = random_coeff(L.field(), rng);
      Vec comb = L.zero_vec();
      for (std::size_t k = 0; k < L.dim(); ++k) comb[k] = a * x[k] + b * w[k];
      EXPECT_TRUE(L.ad(comb) == L.ad(x).scaled(a) + L.ad(w).scaled(b));
    }
  }
}

TEST(Grading, BracketParityIsAdditive) {
  for (const auto& L : gallery_algebras(3))
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j) {
        auto par = L.parity_of(L.bracket_basis(i, j));
        if (!par) continue;
        EXPECT_EQ(parity_bit(*par), (parity_bit(L.parity(i)) + parity_bit(L.parity(j))) % 2);
      }
}

TEST(OddSquareAd, HoldsOnBasisAndRandomOddElements) {
  std::mt19937_64 rng(42);
  for (std::uint32_t p : {0u, 3u, 5u}) {
    std::vector<LieSuperalgebra> algs;
    if (p == 0) {
      for (const auto& n : {"G1", "G2", "G3", "G4", "G5"}) algs.push_back(build(*gallery::by_name(n, 2, 0, false)));
    } else {
      algs = gallery_algebras(p);
    }
    for (const auto& L : algs) {
      for (std::size_t i = L.n_even(); i < L.dim(); ++i) EXPECT_TRUE(L.check_odd_square_ad(L.basis_vec(i)));
      for (int k = 0; k < 100 && L.n_odd(); ++k) EXPECT_TRUE(L.check_odd_square_ad(random_odd(L, rng)));
    }
  }
}

TEST(OddSquareAd, OddSquareAndCorruptedTable) {
  auto G3 = build(gallery::odd_square(3, false));
  EXPECT_TRUE(G3.check_odd_square_ad(named(G3, {{1, "y"}})));
  RawAlgebra bad;
  bad.characteristic = 3;
  bad.even_basis = {"x"};
  bad.odd_basis = {"y"};
  bad.bracket("y", "y", {{Coeff::integer(1), "x"}}).bracket("x", "y", {{Coeff::integer(1), "y"}});
  auto L = LieSuperalgebra::unchecked(bad);
  EXPECT_FALSE(L.check_odd_square_ad(named(L, {{1, "y"}})));
}

TEST(JacobsonSums, Examples) {
  auto ab = build(gallery::odd_extension(2, 3, true));  // L_0 abelian
  std::mt19937_64 rng(42);
  for (const auto& s : ab.jacobson_sums(random_even(ab, rng), random_even(ab, rng)))
    EXPECT_TRUE(vec_eq(s, ab.zero_vec()));

  auto G2 = build(gallery::heisenberg(3, true));
  Vec x = named(G2, {{1, "x"}}), y = named(G2, {{1, "y"}});
  // ad(t x + y)(x) = -z and every bracket with z vanishes, so the square is 0.
  for (const auto& v : G2.jacobson_sums(x, y)) EXPECT_TRUE(vec_eq(v, G2.zero_vec()));
  for (const auto& v : G2.jacobson_sums(x, G2.zero_vec())) EXPECT_TRUE(vec_eq(v, G2.zero_vec()));

  // Filiform: ad(t x + e1)(x) = -e2, ad(t x + e1)(-e2) = -t e3, so 2 s_2 = -e3.
  auto F = build(filiform());
  auto sf = F.jacobson_sums(named(F, {{1, "x"}}), named(F, {{1, "e1"}}));
  EXPECT_TRUE(vec_eq(sf[0], F.zero_vec()));
  EXPECT_TRUE(vec_eq(sf[1], named(F, {{1, "e3"}})));

  auto plain = build(gallery::heisenberg(3, false));
  EXPECT_THROW(plain.jacobson_sums(x, y), Error);
}

TEST(PMap, Examples) {
  auto G3 = build(gallery::odd_square(3, true));
  Vec x = named(G3, {{1, "x"}});
  EXPECT_TRUE(vec_eq(G3.p_map(x), x));
  EXPECT_TRUE(vec_eq(G3.p_map(named(G3, {{2, "x"}})), named(G3, {{2, "x"}})));
  auto G2 = build(gallery::heisenberg(3, true));
  EXPECT_TRUE(vec_eq(G2.p_map(named(G2, {{1, "x"}, {1, "y"}})), G2.zero_vec()));
  auto F = build(filiform());
  EXPECT_TRUE(vec_eq(F.p_map(named(F, {{1, "x"}, {1, "e1"}})), named(F, {{1, "e3"}})));
}

TEST(PMap, ExtensionIsAdCompatible) {
  std::mt19937_64 rng(42);
  std::vector<LieSuperalgebra> algs;
  for (std::uint32_t p : {3u, 5u})
    for (const auto& L : gallery_algebras(p))
      if (L.is_restricted()) algs.push_back(L);
  for (const auto& inst : gallery::random_corpus(30, 2, 2, 3, 11)) algs.push_back(inst.algebra);
  for (const auto& L : algs)
    for (int k = 0; k < 20; ++k) {
      Vec v = random_even(L, rng);
      EXPECT_TRUE(L.ad(L.p_map(v)) == L.ad(v).pow(L.characteristic()));
    }
}

TEST(Rebase, ValidityIsCovariant) {
  std::mt19937_64 rng(42);
  std::vector<LieSuperalgebra> algs = gallery_algebras(3);
  for (const auto& inst : gallery::random_corpus(20, 2, 2, 3, 5)) algs.push_back(inst.algebra);
  for (const auto& L : algs) {
    auto R = gallery::random_rebase(L, rng);
    auto res = LieSuperalgebra::validate(R.to_raw());
    EXPECT_TRUE(res.report.ok()) << res.report.summary();
  }
}

TEST(RoundTrip, ToRawRebuildsSameTable) {
  for (const auto& L : gallery_algebras(5)) {
    auto M = build(L.to_raw());
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j) EXPECT_TRUE(vec_eq(L.bracket_basis(i, j), M.bracket_basis(i, j)));
  }
}
