#ifndef SUPERENGEL_KERNELS_HPP
#define SUPERENGEL_KERNELS_HPP

// Exhaustive enumeration kernels over F_p coordinates. Each kernel has a
// serial reference and an OpenMP version; the two must return identical
// results (witnesses are merged by smallest enumeration index).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "superengel/linalg.hpp"

namespace superengel::kernels {

/// Number of projective points of F_p^k (lines through the origin), or
/// nullopt when it exceeds `cap`.
std::optional<std::uint64_t> projective_count(std::size_t k, std::uint32_t p, std::uint64_t cap);

/// Points are addressed by their enumeration index u in [1, p^k): the base-p
/// digits of u (lowest first) are the coordinates. Only indices whose lowest
/// nonzero digit is 1 are visited, one per line through the origin.
std::vector<std::uint32_t> point_digits(std::uint64_t index, std::size_t k, std::uint32_t p);
bool is_line_representative(std::uint64_t index, std::uint32_t p);
/// Number of line representatives with index in [1, u].
std::uint64_t representatives_upto(std::uint64_t u, std::uint32_t p);

/// Result of scanning every nonzero linear combination (up to scalars) of a
/// family of square matrices for nilpotency.
struct FamilyScan {
  std::size_t max_index = 0;                         // largest index (0 when a witness exists)
  std::uint64_t max_index_at = 0;                    // first point attaining it
  std::optional<std::uint64_t> non_nilpotent_at;     // first non-nilpotent point
  std::uint64_t visited = 0;                         // representatives up to the stopping point

  friend bool operator==(const FamilyScan&, const FamilyScan&) = default;
};

FamilyScan scan_family_serial(std::span<const FpMatrix> family, std::uint32_t p);
FamilyScan scan_family_omp(std::span<const FpMatrix> family, std::uint32_t p);

/// Nilpotency index of a dense mod-p matrix (0 if not nilpotent), using a
/// caller-provided scratch space.
std::size_t nilpotency_index(const std::uint32_t* m, std::size_t n, std::uint32_t p,
                             std::vector<std::uint32_t>& scratch);

/// Structure constants of a finite-dimensional associative algebra over F_p:
/// product(i, j) is the coordinate vector of b_i * b_j.
struct FpAlgebraTable {
  std::size_t dim = 0;
  std::uint32_t p = 3;
  std::vector<std::uint32_t> data;  // dim * dim * dim

  const std::uint32_t* product(std::size_t i, std::size_t j) const { return &data[(i * dim + j) * dim]; }
  FpVec multiply(const FpVec& a, const FpVec& b) const;
  FpVec power(const FpVec& a, std::uint64_t e) const;
};

/// Decides whether w^(p^k) lies in `center` for every w in the span of the
/// basis vectors with index in `support` (enumerated projectively). Returns
/// the first failing point's enumeration index, or nullopt if all pass.
std::optional<std::uint64_t> scan_power_central_serial(const FpAlgebraTable& alg,
                                                       std::span<const std::size_t> support,
                                                       std::uint64_t exponent, const FpSubspace& center);
std::optional<std::uint64_t> scan_power_central_omp(const FpAlgebraTable& alg,
                                                    std::span<const std::size_t> support,
                                                    std::uint64_t exponent, const FpSubspace& center);

}  // namespace superengel::kernels

#endif  // SUPERENGEL_KERNELS_HPP
