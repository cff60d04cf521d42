#ifndef SUPERENGEL_SUBSPACES_HPP
#define SUPERENGEL_SUBSPACES_HPP

// Subspace calculus inside a Lie superalgebra: bracket spaces, series,
// centers, ad-nilpotency, p-nilpotency, the subspace M, and ideal closures.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superengel/lie_superalgebra.hpp"

namespace superengel {

/// How a claim was established.
enum class Certainty { Exact, BasisCertified, Bound, Assumed, Unknown };
const char* to_string(Certainty c);

struct SeriesReport {
  std::vector<Subspace> chain;  // strictly decreasing, first entry is the start
  std::size_t stabilized_at = 0;  // index of the last entry
  bool terminal_zero = false;
  std::optional<std::size_t> nilpotency_class;  // least c with chain[c] = 0
};

Subspace zero_space(const LieSuperalgebra& L);
Subspace whole_space(const LieSuperalgebra& L);
Subspace even_space(const LieSuperalgebra& L);
Subspace odd_space(const LieSuperalgebra& L);
Subspace span_of(const LieSuperalgebra& L, std::span<const Vec> gens);

/// Even and odd components of a homogeneous subspace.
Subspace even_component(const LieSuperalgebra& L, const Subspace& S);
Subspace odd_component(const LieSuperalgebra& L, const Subspace& S);

Subspace bracket_space(const LieSuperalgebra& L, const Subspace& S, const Subspace& T);
Subspace derived_subalgebra(const LieSuperalgebra& L);
SeriesReport lower_central_series(const LieSuperalgebra& L);
SeriesReport derived_series(const LieSuperalgebra& L);
Subspace center(const LieSuperalgebra& L);
bool is_ideal(const LieSuperalgebra& L, const Subspace& S);

struct AdNilpotency {
  enum class Status { Nilpotent, NotNilpotent, Unknown } status = Status::Unknown;
  std::size_t index = 0;      // uniform n with (ad x)^n = 0, when Nilpotent
  std::optional<Vec> witness;  // x with ad x not nilpotent
  Certainty certainty = Certainty::Unknown;  // Exact, or Bound for the commuting shortcut
  std::string note;
};

/// Uniform n with (ad x)^n = 0 on L for all x in the even subspace S.
AdNilpotency uniform_ad_nilpotency(const LieSuperalgebra& L, const Subspace& S,
                                   std::uint64_t budget = default_budget());

/// Least t such that every product of t operators from the list vanishes,
/// or nullopt if the associative algebra they generate is not nilpotent.
std::optional<std::size_t> associative_envelope_nilpotency(std::span<const LinearOperator> ops);

/// ad b for every basis element b.
std::vector<LinearOperator> homogeneous_ads(const LieSuperalgebra& L);

struct PNilpotency {
  bool holds = false;
  std::size_t exponent = 0;    // least n with x^[p]^n = 0 for all x (when holds)
  std::optional<Vec> witness;  // element whose orbit never reaches 0
  Certainty certainty = Certainty::Exact;
};

/// Steps for x to reach 0 under the p-map, or nullopt if it never does.
std::optional<std::size_t> p_orbit_length(const LieSuperalgebra& L, const Vec& x);

/// Decides whether every x in the even subspace S is p-nilpotent. Falls back
/// to checking the echelon basis (labelled BasisCertified) when enumeration
/// exceeds the budget and S lies in a nilpotent algebra; otherwise throws
/// BudgetExceeded.
PNilpotency is_p_nilpotent(const LieSuperalgebra& L, const Subspace& S, std::uint64_t budget = default_budget(),
                           bool ambient_nilpotent = false);

/// Span of the odd y with (y, y) p-nilpotent.
Subspace compute_M(const LieSuperalgebra& L, std::uint64_t budget = default_budget());

/// Which elements a closure brackets with.
enum class ClosureScope { All, Even };

/// Least subspace containing S closed under brackets with L (or with L_0
/// only) and, when `restricted`, under the p-map of its even members.
Subspace ideal_closure(const LieSuperalgebra& L, const Subspace& S, bool restricted,
                       ClosureScope scope = ClosureScope::All);

/// Converts an F_p operator to raw residues.
FpMatrix to_fp(const LinearOperator& m);

}  // namespace superengel

#endif  // SUPERENGEL_SUBSPACES_HPP
