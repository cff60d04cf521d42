#ifndef SUPERENGEL_TEST_SUPPORT_HPP
#define SUPERENGEL_TEST_SUPPORT_HPP

#include <random>

#include "superengel/gallery.hpp"
#include "superengel/lie_superalgebra.hpp"

namespace test_support {

using namespace superengel;

inline LieSuperalgebra build(const RawAlgebra& raw) { return LieSuperalgebra::from_raw(raw); }

inline Coeff random_coeff(const Ring& r, std::mt19937_64& rng) {
  if (r.characteristic() == 0) {
    std::uniform_int_distribution<int> d(-4, 4);
    return r.from_int(d(rng));
  }
  std::uniform_int_distribution<std::uint32_t> d(0, r.characteristic() - 1);
  return r.from_int(d(rng));
}

/// Random element supported on basis indices [from, to).
inline Vec random_vec(const LieSuperalgebra& L, std::size_t from, std::size_t to, std::mt19937_64& rng) {
  Vec v = L.zero_vec();
  for (std::size_t i = from; i < to; ++i) v[i] = random_coeff(L.field(), rng);
  return v;
}

inline Vec random_even(const LieSuperalgebra& L, std::mt19937_64& rng) { return random_vec(L, 0, L.n_even(), rng); }
inline Vec random_odd(const LieSuperalgebra& L, std::mt19937_64& rng) {
  return random_vec(L, L.n_even(), L.dim(), rng);
}

inline Vec named(const LieSuperalgebra& L, std::initializer_list<std::pair<long long, const char*>> terms) {
  Vec v = L.zero_vec();
  for (auto& [c, n] : terms) v[*L.index_of(n)] += L.field().from_int(c);
  return v;
}

inline bool vec_eq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] - b[i]).is_zero()) return false;
  return true;
}

}  // namespace test_support

#endif
