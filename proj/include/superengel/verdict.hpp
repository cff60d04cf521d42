#ifndef SUPERENGEL_VERDICT_HPP
#define SUPERENGEL_VERDICT_HPP

// Structural decision procedures for bounded Lie Engel enveloping algebras
// (characteristic 0, ordinary characteristic p, restricted), PI-certificate
// searches, and cross-validation of verdicts against the Engel oracles.

#include <optional>
#include <string>
#include <vector>

#include "superengel/engel_engine.hpp"
#include "superengel/subspaces.hpp"

namespace superengel {

/// Which enveloping algebra a verdict is about: U(L) over Q, U(L) over F_p,
/// or u(L) for restricted L.
enum class Setting { Char0, Ordinary, Restricted };
const char* to_string(Setting s);
std::optional<Setting> parse_setting(const std::string& s);
/// Restricted when L carries a p-map, ordinary in characteristic p, else char 0.
Setting default_setting(const LieSuperalgebra& L);

struct Condition {
  std::string name;
  bool holds = false;
  Certainty certainty = Certainty::Exact;
  bool automatic = false;   // holds for every finite-dimensional input
  std::string witness;      // evidence for a failure (or the subspace involved)
  std::string note;
  std::vector<Condition> alternatives;  // non-empty for a disjunction
};

/// A pair of ideals (A, B) witnessing that the enveloping algebra is PI.
struct PiCertificate {
  std::string a_label;
  Subspace A, B;
  std::vector<std::string> flags;  // e.g. "B' != 0" in the ordinary setting
};

struct PiSearch {
  std::optional<PiCertificate> certificate;
  std::size_t candidates_tried = 0;
};

/// Measured exponents from the constructive Engel bound: R = [u, u] u is
/// nilpotent of index nil_index <= p^m, L_0^(p^s) lies in Z(L), and every
/// PBW monomial has its p^chain_s-th power in Z(u) + R.
struct EngelExponents {
  std::size_t nil_index = 0;
  unsigned m = 0;
  unsigned s = 0;
  Certainty s_certainty = Certainty::Exact;
  unsigned chain_s = 0;
  std::uint64_t bound = 0;  // p^(m + chain_s)
};

struct Verdict {
  Setting setting = Setting::Restricted;
  bool holds = false;
  Certainty certainty = Certainty::Exact;
  std::vector<Condition> conditions;
  std::optional<PiCertificate> pi;
  /// Proven Engel bound for true verdicts when one follows from the
  /// structure (ordinary and characteristic 0 settings).
  std::optional<std::uint64_t> engel_bound;
  std::optional<EngelExponents> exponents;
  std::vector<std::string> notes;

  const Condition* find(const std::string& name) const;
};

Verdict decide_char0(const LieSuperalgebra& L);
Verdict decide_ordinary_charp(const LieSuperalgebra& L);
Verdict decide_restricted(const LieSuperalgebra& L, std::uint64_t budget = default_budget());
Verdict decide(const LieSuperalgebra& L, Setting s, std::uint64_t budget = default_budget());

/// Searches a canonical list of homogeneous ideals A with
/// B = closure of (A, A): ordinary accepts B inside L_1, restricted accepts
/// B abelian with B_0 p-nilpotent. Sufficient, not complete.
PiSearch pi_witness_search(const LieSuperalgebra& L, bool restricted, std::uint64_t budget = default_budget());

/// Engel bound for U(L) when L_0 is abelian, L is nilpotent and either
/// (L_1, L_1) = 0 (bound: 1 + sum_i dim(gamma_i odd part)) or dim L_1 <= 1 with
/// (L_0, L_1) = 0 (U(L) commutative, bound 1). nullopt otherwise.
std::optional<std::uint64_t> structural_engel_bound(const LieSuperalgebra& L);

struct NonmatrixReport {
  std::vector<Condition> conditions;
  bool conditions_hold = false;
  std::optional<Subspace> M;
  std::optional<bool> commutator_ideal_nilpotent;  // nullopt if u(L) too large
  std::vector<std::size_t> chain_dims;
  bool agreement = false;
};

/// Non-matrix PI criterion for u(L) checked against the nilpotency of the
/// commutator ideal of u(L).
NonmatrixReport nonmatrix_pi_check(const LieSuperalgebra& L, std::uint64_t budget = default_budget());

enum class Agreement { Agree, Disagree, Inconclusive };
const char* to_string(Agreement a);

struct LemmaCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct CrossValidation {
  Verdict verdict;
  OracleResult oracle;
  Agreement agreement = Agreement::Inconclusive;
  std::string explanation;
  std::vector<LemmaCheck> lemmas;
  std::optional<Verdict> ordinary_companion;  // restricted input seen as U(L)
  bool lemmas_ok() const;
};

CrossValidation cross_validate(const LieSuperalgebra& L, Setting s, const OracleOptions& opts = {});

struct CorpusEntry {
  std::uint64_t seed = 0;
  std::size_t dim_u = 0;
  CrossValidation result;
};

struct CorpusReport {
  std::vector<CorpusEntry> entries;
  std::size_t disagreements = 0;
  std::size_t inconclusive = 0;
  std::size_t lemma_failures = 0;
};

/// Cross-validates `count` random restricted algebras (parallel over
/// instances, results ordered by instance).
CorpusReport cross_validate_corpus(std::size_t count, std::size_t dim_even, std::size_t dim_odd, std::uint32_t p,
                                   std::uint64_t seed, const OracleOptions& opts = {});

}  // namespace superengel

#endif  // SUPERENGEL_VERDICT_HPP
