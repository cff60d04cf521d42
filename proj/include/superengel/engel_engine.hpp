#ifndef SUPERENGEL_ENGEL_ENGINE_HPP
#define SUPERENGEL_ENGEL_ENGINE_HPP

// Engel oracles on enveloping algebras, independent of the structural
// decision procedures: exhaustive enumeration, centrality of p-th powers,
// commutator-ideal certificates and seeded random witness search.

#include <optional>
#include <string>
#include <variant>

#include "superengel/env_alg.hpp"

namespace superengel {

enum class OracleMode { Exact, Symbolic, Certificate, Sample };
const char* to_string(OracleMode m);
std::optional<OracleMode> parse_oracle_mode(const std::string& s);

/// Every element of the algebra satisfies [a, n b] = 0 and n is least.
struct EngelWithDegree {
  std::size_t n = 1;
  std::optional<EnvElement> extremal;  // some b with (ad b)^(n-1) != 0
};

/// [a, n b] != 0. With all_n set, ad b is not nilpotent and the commutator
/// is nonzero for every n.
struct NotEngelWitness {
  EnvElement a, b;
  std::size_t n = 0;
  bool all_n = false;
};

/// An upper bound on the Engel degree with its derivation. For the chain
/// route: R^nil_index = 0 with nil_index <= p^m, and every PBW monomial has
/// its p^s-th power in Z + R, so bound = p^(m+s). For the central-power
/// route: every w^(p^s) is central and bound = p^s.
struct CertifiedEngelViaChain {
  std::uint64_t bound = 0;
  std::string route;  // "chain" or "central-power"
  std::size_t nil_index = 0;
  unsigned m = 0;
  unsigned s = 0;
};

struct Inconclusive {
  std::string reason;
};

using OracleVerdict = std::variant<EngelWithDegree, NotEngelWitness, CertifiedEngelViaChain, Inconclusive>;

struct OracleResult {
  OracleVerdict verdict;
  OracleMode mode = OracleMode::Sample;
  std::string tier;
  std::uint64_t budget_spent = 0;

  bool is_engel() const;
  bool is_witness() const;
  bool is_inconclusive() const { return std::holds_alternative<Inconclusive>(verdict); }
  /// Upper bound on the Engel degree when the result establishes one.
  std::optional<std::uint64_t> engel_bound() const;
  /// True when the result is a proof (exact enumeration, a certificate, or
  /// a witness valid for every n).
  bool is_proof() const;
  std::string summary() const;
};

/// Exact minimal Engel degree of u(L) by enumerating every b up to scalars
/// and computing the nilpotency index of ad b on the regular representation.
OracleResult engel_degree_exact(const EnvAlgebra& A, std::uint64_t budget = default_budget());

/// Random pairs (a, b) with PBW degree <= degree_cap and uniform
/// coefficients; the first nonzero [a, n b] computed without truncation
/// loss is returned.
OracleResult engel_witness_search(const EnvAlgebra& A, std::size_t n, std::size_t trials, unsigned degree_cap,
                                  std::uint64_t seed = 42);

/// Samples b in u(L) looking for a non-nilpotent ad b.
OracleResult sample_non_nilpotent_ad(const RegularRep& rep, std::size_t trials, std::uint64_t seed = 42);

/// Commutator-ideal certificate for u(L): nil index of R = [u, u] u and the
/// least s with m^(p^s) in Z(u) + R for every PBW monomial m.
OracleResult chain_certificate(const RegularRep& rep, unsigned max_s = 8);

struct CentralPowerCheck {
  std::optional<bool> holds;      // nullopt when inconclusive
  std::optional<EnvElement> witness;  // w with w^(p^k) not central
  OracleMode tier = OracleMode::Symbolic;
  std::string reason;
  std::uint64_t spent = 0;
};

/// Whether w^(p^k) is central for every w in u(L): symbolically with a
/// generic element when the estimated size fits the budget, else by
/// enumeration, else inconclusive.
CentralPowerCheck central_power_check(const EnvAlgebra& A, unsigned k, std::uint64_t budget = default_budget(),
                                      std::uint64_t seed = 42);

/// Recomputes [a, n b] from scratch in the algebra the witness came from.
bool verify_witness(const LieSuperalgebra& L, const NotEngelWitness& w);

struct OddExtensionCheck {
  unsigned m = 0;
  std::uint32_t p = 0;
  bool identity_holds = false;   // [x_1...x_m, p y] = 0
  bool triple_vanishes = false;  // [x_i, 3 y] = 0 for every i
  bool two_step_nonzero = false; // [x_1, 2 y] != 0
  bool lossy = false;
  bool ok() const { return identity_holds && triple_vanishes && !lossy; }
};

/// Checks the p-Engel identity of the odd extension x_i -> z_i in U(L)
/// truncated at degree m + p + 1.
OddExtensionCheck verify_odd_extension(unsigned m, std::uint32_t p);

/// Configuration for the tiered oracle used by cross-validation and the CLI.
struct OracleOptions {
  std::optional<OracleMode> mode;  // nullopt picks the strongest affordable tier
  std::size_t max_n = 9;
  unsigned trunc = 8;
  std::uint64_t budget = default_budget();
  std::uint64_t seed = 42;
  std::size_t trials = 64;
  unsigned degree_cap = 2;
};

/// Runs the oracle for u(L) (restricted_setting) or U(L). In the ordinary
/// setting only sampling applies; the witness search uses n = max_n and a
/// truncation high enough that no product loses terms.
OracleResult run_oracle(const LieSuperalgebra& L, bool restricted_setting, const OracleOptions& opts);

}  // namespace superengel

#endif  // SUPERENGEL_ENGEL_ENGINE_HPP
