#ifndef SUPERENGEL_LIE_SUPERALGEBRA_HPP
#define SUPERENGEL_LIE_SUPERALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superengel/coeffs.hpp"
#include "superengel/linalg.hpp"

namespace superengel {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int parity_bit(Parity p) { return static_cast<int>(p); }

struct BasisElement {
  std::string name;
  Parity parity;
  std::size_t index;  // all even elements precede all odd ones
};

/// Coordinates of an element of L in the canonical basis.
using Vec = std::vector<Coeff>;
using LinearOperator = DenseMatrix<CoeffField>;
using Subspace = BasicSubspace<CoeffField>;

/// Unvalidated description, as read from an algebra file or built in code.
struct RawTerm {
  Coeff c;
  std::string basis;
};

struct RawBracket {
  std::string left, right;
  std::vector<RawTerm> value;
};

struct RawPMap {
  std::string of;
  std::vector<RawTerm> value;
};

struct RawAlgebra {
  std::uint32_t characteristic = 0;
  bool restricted = false;
  std::vector<std::string> even_basis;
  std::vector<std::string> odd_basis;
  std::vector<RawBracket> brackets;
  std::vector<RawPMap> p_map;

  Ring field() const;
  RawAlgebra& bracket(std::string left, std::string right, std::vector<RawTerm> value);
  RawAlgebra& pmap(std::string of, std::vector<RawTerm> value);
};

struct Violation {
  std::string axiom;     // "grading", "skew-symmetry", "jacobi", "cubic", "p-map", ...
  std::string location;  // offending pair/triple/element
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::optional<ErrorCode> error;  // fatal condition that stopped validation
  std::string error_detail;

  bool ok() const { return violations.empty() && !error; }
  std::string summary() const;
};

class LieSuperalgebra;

struct ValidationResult;

std::uint64_t default_budget();

class LieSuperalgebra {
 public:
  /// Checks grading, super skew-symmetry, super-Jacobi on basis triples, the
  /// cubic identity ((y,y),y) = 0 on all of L_1 when p = 3, and p-map
  /// compatibility ad(x^[p]) = (ad x)^p on even basis elements.
  static ValidationResult validate(const RawAlgebra& raw, std::uint64_t budget = default_budget());
  /// Like validate() but throws Error(ValidationFailed) on any violation.
  static LieSuperalgebra from_raw(const RawAlgebra& raw, std::uint64_t budget = default_budget());
  /// Builds the bracket table without checking axioms (test hook for
  /// deliberately corrupted inputs).
  static LieSuperalgebra unchecked(const RawAlgebra& raw);

  RawAlgebra to_raw() const;

  const Ring& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  bool is_restricted() const { return restricted_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t n_even() const { return n_even_; }
  std::size_t n_odd() const { return basis_.size() - n_even_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  Parity parity(std::size_t i) const { return basis_[i].parity; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  Vec zero_vec() const { return Vec(dim(), field_.zero()); }
  Vec basis_vec(std::size_t i) const;
  Vec even_part(const Vec& v) const;
  Vec odd_part(const Vec& v) const;
  /// Parity of a nonzero homogeneous vector; nullopt for mixed or zero vectors.
  std::optional<Parity> parity_of(const Vec& v) const;

  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec bracket(const Vec& u, const Vec& v) const;
  LinearOperator ad(const Vec& x) const;

  /// (ad z)^2 == 1/2 ad((z,z)) for odd z.
  bool check_odd_square_ad(const Vec& z) const;

  /// s_1(x,w), ..., s_{p-1}(x,w): i*s_i is the coefficient of t^(i-1) in
  /// (ad(t x + w))^(p-1)(x).
  std::vector<Vec> jacobson_sums(const Vec& x, const Vec& w) const;
  /// x^[p] for an arbitrary even x, extended from the basis table.
  Vec p_map(const Vec& v) const;
  const Vec& p_map_basis(std::size_t i) const { return pmap_.at(i); }

  /// Same algebra with the p-map dropped (ordinary setting).
  LieSuperalgebra forget_restriction() const;
  /// Algebra in the basis f_k = scale[k] * e_{perm[k]}; perm must keep the
  /// even block first.
  LieSuperalgebra rebased(const std::vector<std::size_t>& perm, const std::vector<Coeff>& scale) const;

  std::string format(const Vec& v) const;

 private:
  LieSuperalgebra(Ring field) : field_(std::move(field)) {}

  Ring field_;
  bool restricted_ = false;
  std::vector<BasisElement> basis_;
  std::size_t n_even_ = 0;
  std::vector<Vec> table_;  // dim*dim, both orientations stored
  std::vector<Vec> pmap_;   // one entry per even basis element when restricted
};

struct ValidationResult {
  std::optional<LieSuperalgebra> algebra;
  ValidationReport report;
};

}  // namespace superengel

#endif  // SUPERENGEL_LIE_SUPERALGEBRA_HPP
