#ifndef SUPERENGEL_GALLERY_HPP
#define SUPERENGEL_GALLERY_HPP

// Built-in algebras and the random restricted corpus used for cross-checks.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "superengel/lie_superalgebra.hpp"

namespace superengel::gallery {

/// G1: even x_1..x_m, odd y, z_1..z_m with (x_i, y) = z_i. Restricted
/// variant uses x_i^[p] = 0. p = 0 gives the rational form.
RawAlgebra odd_extension(unsigned m, std::uint32_t p, bool restricted);

/// G2: even Heisenberg x, y, z with (x, y) = z. The restricted variant takes
/// z^[p] = zp (0 by default), x^[p] = y^[p] = 0.
RawAlgebra heisenberg(std::uint32_t p, bool restricted, long long zp = 0);

/// G3: even x, odd y, (y, y) = x; x^[p] = x.
RawAlgebra odd_square(std::uint32_t p, bool restricted);

/// G4: even x, odd y1, y2, (y1,y1) = (y2,y2) = x, x central with x^[p] = x.
RawAlgebra clifford(std::uint32_t p, bool restricted);

/// G5: even x, odd y, (x, y) = y; x^[p] = x.
RawAlgebra odd_eigen(std::uint32_t p, bool restricted);

/// G6: Heisenberg with toral center, z^[p] = z.
RawAlgebra heisenberg_toral(std::uint32_t p);

/// Looks up a gallery entry by id ("G1".."G6") or name ("odd-extension",
/// "heisenberg", "odd-square", "clifford", "odd-eigen", "heisenberg-toral").
std::optional<RawAlgebra> by_name(const std::string& name, unsigned m, std::uint32_t p, bool restricted);

/// The gallery ids in order.
std::vector<std::string> names();

struct CorpusInstance {
  std::uint64_t seed;
  std::size_t attempts;  // rejected drafts before this one validated
  LieSuperalgebra algebra;
};

/// One random validated restricted algebra over F_p with dim L_0 <= max_even
/// and dim L_1 <= max_odd, drawn by rejection sampling.
CorpusInstance random_restricted(std::uint64_t seed, std::size_t max_even, std::size_t max_odd, std::uint32_t p);

/// count instances; instance k uses a seed derived from (seed, k).
std::vector<CorpusInstance> random_corpus(std::size_t count, std::size_t max_even, std::size_t max_odd,
                                          std::uint32_t p, std::uint64_t seed);

/// A random parity-preserving permutation and nonzero rescaling of the basis.
LieSuperalgebra random_rebase(const LieSuperalgebra& L, std::mt19937_64& rng);

}  // namespace superengel::gallery

#endif  // SUPERENGEL_GALLERY_HPP
