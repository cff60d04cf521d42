#include <gtest/gtest.h>

#include <random>

#include "superengel/kernels.hpp"

using namespace superengel;
using namespace superengel::kernels;

namespace {

FpMatrix random_strict_upper(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  FpMatrix m(FpField{p}, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = d(rng);
  return m;
}

FpMatrix random_matrix(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  FpMatrix m(FpField{p}, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Projective, CountsAndRepresentatives) {
  EXPECT_EQ(projective_count(3, 3, 1000), 13u);
  EXPECT_FALSE(projective_count(3, 3, 12));
  // Brute-force count of representatives below every bound.
  for (std::uint32_t p : {3u, 5u}) {
    std::uint64_t seen = 0;
    for (std::uint64_t u = 1; u < 400; ++u) {
      if (is_line_representative(u, p)) ++seen;
      EXPECT_EQ(representatives_upto(u, p), seen) << u;
    }
  }
  // Every nonzero point is a nonzero multiple of exactly one representative.
  const std::uint32_t p = 3;
  const std::size_t k = 3;
  std::vector<int> hits(27, 0);
  for (std::uint64_t u = 1; u < 27; ++u) {
    if (!is_line_representative(u, p)) continue;
    auto d = point_digits(u, k, p);
    for (std::uint32_t c = 1; c < p; ++c) {
      std::uint64_t v = 0, w = 1;
      for (std::size_t i = 0; i < k; ++i, w *= p) v += (d[i] * c % p) * w;
      ++hits[v];
    }
  }
  for (std::uint64_t u = 1; u < 27; ++u) EXPECT_EQ(hits[u], 1);
}

TEST(NilpotencyIndex, MatchesDenseMatrix) {
  std::mt19937_64 rng(42);
  std::vector<std::uint32_t> scratch;
  for (int trial = 0; trial < 50; ++trial) {
    FpMatrix m = trial % 2 ? random_strict_upper(6, 3, rng) : random_matrix(4, 5, rng);
    auto expected = m.nilpotency_index();
    auto got = nilpotency_index(m.data().data(), m.rows(), m.field().p, scratch);
    EXPECT_EQ(got, expected.value_or(0));
  }
}

TEST(FamilyScan, SerialAndParallelAgree) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FpMatrix> fam;
    const std::uint32_t p = trial % 3 == 0 ? 5 : 3;
    for (int i = 0; i < 5; ++i)
      fam.push_back(trial % 2 ? random_strict_upper(5, p, rng) : random_matrix(3, p, rng));
    auto a = scan_family_serial(fam, p);
    auto b = scan_family_omp(fam, p);
    EXPECT_EQ(a, b) << "trial " << trial;
    if (trial % 2) {
      EXPECT_FALSE(a.non_nilpotent_at);
      EXPECT_EQ(a.visited, *projective_count(5, p, 1u << 30));
    }
  }
}

TEST(FamilyScan, FindsFirstNonNilpotentPoint) {
  FpField f{3};
  FpMatrix n1(f, 2, 2), n2(f, 2, 2);
  n1(0, 1) = 1;
  n2(1, 0) = 1;
  std::vector<FpMatrix> fam{n1, n2};
  auto r = scan_family_serial(fam, 3);
  // 1*n1 and 1*n2 are nilpotent; n1 + n2 (index 1 + 3 = 4) squares to the identity.
  ASSERT_TRUE(r.non_nilpotent_at);
  EXPECT_EQ(*r.non_nilpotent_at, 4u);
  EXPECT_EQ(r, scan_family_omp(fam, 3));
}

TEST(PowerCentral, SerialAndParallelAgree) {
  // Algebra of 2x2 matrices over F_3 with basis E11, E12, E21, E22; center = scalars.
  FpAlgebraTable alg;
  alg.dim = 4;
  alg.p = 3;
  alg.data.assign(64, 0);
  auto idx = [](int i, int j) { return std::size_t(2 * i + j); };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) alg.data[(idx(i, j) * 4 + idx(k, l)) * 4 + idx(i, l)] = 1;
  FpSubspace center(FpField{3}, 4);
  center.insert({1, 0, 0, 1});
  std::vector<std::size_t> support{0, 1, 2, 3};
  auto s = scan_power_central_serial(alg, support, 9, center);
  auto o = scan_power_central_omp(alg, support, 9, center);
  ASSERT_TRUE(s);
  EXPECT_EQ(s, o);
  // On the span of E12 alone every cube is zero, hence central.
  std::vector<std::size_t> nil{1};
  EXPECT_FALSE(scan_power_central_serial(alg, nil, 3, center));
  EXPECT_FALSE(scan_power_central_omp(alg, nil, 3, center));
}
