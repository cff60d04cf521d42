#ifndef SUPERENGEL_ENV_ALG_HPP
#define SUPERENGEL_ENV_ALG_HPP

// PBW arithmetic in the restricted enveloping algebra u(L) and in the
// degree-truncated ordinary enveloping algebra U(L).

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superengel/kernels.hpp"
#include "superengel/lie_superalgebra.hpp"

namespace superengel {

/// x_1^a_1 ... x_k^a_k y_{j1} ... y_{jr} with j1 < ... < jr (bit j of `odd`).
struct Monomial {
  std::vector<std::uint16_t> exp;
  std::uint64_t odd = 0;

  unsigned degree() const;
  bool is_one() const;
  auto operator<=>(const Monomial&) const = default;
};

struct EnvMode {
  bool restricted = true;
  unsigned trunc = 0;  // truncation degree N in the ordinary mode
  friend bool operator==(const EnvMode&, const EnvMode&) = default;
};

/// Sparse combination of normal monomials. `lossy` records that terms above
/// the truncation degree were discarded somewhere in its history.
struct EnvElement {
  EnvMode mode;
  Ring ring = Ring::rationals();
  std::map<Monomial, Coeff> terms;
  bool lossy = false;

  bool is_zero() const { return terms.empty(); }
  Coeff coefficient(const Monomial& m) const;
  unsigned degree() const;
  void add_term(const Monomial& m, const Coeff& c);
};

class EnvAlgebra {
 public:
  /// u(L); L must be restricted.
  static EnvAlgebra restricted(const LieSuperalgebra& L);
  /// U(L) with PBW monomials of degree <= N.
  static EnvAlgebra truncated(const LieSuperalgebra& L, unsigned N);

  const LieSuperalgebra& lie() const { return *lie_; }
  EnvMode mode() const { return mode_; }
  bool is_restricted_mode() const { return mode_.restricted; }
  unsigned truncation() const { return mode_.trunc; }
  const Ring& field() const { return lie_->field(); }

  EnvElement zero(const Ring& ring) const;
  EnvElement zero() const { return zero(field()); }
  EnvElement one() const;
  EnvElement scalar(const Coeff& c) const;
  EnvElement generator(std::size_t i) const;
  EnvElement from_lie(const Vec& v) const;
  EnvElement from_monomial(const Monomial& m, const Coeff& c) const;
  Monomial monomial_of_generator(std::size_t i) const;

  EnvElement add(const EnvElement& a, const EnvElement& b) const;
  EnvElement sub(const EnvElement& a, const EnvElement& b) const;
  EnvElement scale(const EnvElement& a, const Coeff& c) const;
  EnvElement multiply(const EnvElement& a, const EnvElement& b) const;
  EnvElement power(const EnvElement& a, std::uint64_t e) const;
  /// ab - ba.
  EnvElement commutator(const EnvElement& a, const EnvElement& b) const;
  /// Left-normed [a, b, ..., b] with n copies of b.
  EnvElement iterated_commutator(const EnvElement& a, const EnvElement& b, unsigned n) const;
  /// Drops terms above the truncation degree, marking the element lossy if any.
  EnvElement truncate(EnvElement a) const;

  /// All normal monomials (restricted: p^|X| 2^|Y| of them; truncated: those
  /// of degree <= N), identity first.
  std::vector<Monomial> basis_monomials() const;
  std::size_t carrier_dim() const;

  /// sum t_i m_i over normal monomials of degree <= bound (all monomials
  /// when bound is unset), with variables t_offset, t_offset+1, ... in
  /// `poly_ring`. The augmentation variant skips the identity.
  EnvElement generic_element(const Ring& poly_ring, std::optional<unsigned> bound, std::uint32_t offset,
                             bool augmentation) const;
  std::size_t generic_size(std::optional<unsigned> bound, bool augmentation) const;

  std::string format(const EnvElement& a) const;
  std::string format(const Monomial& m) const;
  /// Parses a sum of products of basis names and scalars, e.g.
  /// "2*x^2*y1 - z + 1/2". Products are normalized in the algebra.
  EnvElement parse(const std::string& text) const;

  std::size_t memo_size() const;

 private:
  struct Memo;
  EnvAlgebra(const LieSuperalgebra& L, EnvMode mode);

  // m * generator g, exactly (no truncation), over the base field.
  const std::vector<std::pair<Monomial, Coeff>>& mono_times_gen(const Monomial& m, std::size_t g) const;
  EnvElement multiply_exact(const EnvElement& a, const EnvElement& b) const;
  void check_compatible(const EnvElement& a, const EnvElement& b) const;

  std::shared_ptr<const LieSuperalgebra> lie_;
  EnvMode mode_;
  std::shared_ptr<Memo> memo_;
};

/// A chain of subspaces of the enveloping algebra, recorded by dimension.
struct EnvChain {
  std::vector<std::size_t> dims;
  bool terminal_zero = false;
  std::optional<std::size_t> index;  // least t with the t-th term zero
};

struct ChainReport {
  EnvChain associative;  // R, R^2, R^3, ... with R = [A, A] A
  EnvChain lie;          // A, [A, A], [[A, A], A], ...
  bool lossy = false;    // truncated mode and some product left the carrier
};

/// Multiplication table of the carrier monomials with coordinates in a
/// field policy F (FpField for characteristic p, CoeffField for Q).
template <class F>
class BasicRegularRep {
 public:
  using Vec = BasicVec<F>;
  using Matrix = DenseMatrix<F>;
  using Space = BasicSubspace<F>;

  explicit BasicRegularRep(const EnvAlgebra& A);

  const EnvAlgebra& algebra() const { return A_; }
  const F& field() const { return f_; }
  std::size_t dim() const { return carrier_.size(); }
  const std::vector<Monomial>& carrier() const { return carrier_; }
  std::optional<std::size_t> index_of(const Monomial& m) const;
  bool lossy() const { return lossy_; }

  /// Coordinates of m_i * m_j.
  const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec power(const Vec& a, std::uint64_t e) const;
  Vec coords(const EnvElement& a) const;
  EnvElement element(const Vec& v) const;
  Vec unit(std::size_t i) const;

  /// Matrix of v -> a v - v a.
  Matrix ad(const Vec& a) const;
  /// ad of each carrier monomial.
  const std::vector<Matrix>& basis_ads() const { return ads_; }

  /// Joint kernel of ad over the Lie generators.
  Space center() const;
  /// R = [A, A] A.
  Space commutator_ideal() const;
  /// R, R^2, ... until zero or stable.
  EnvChain ideal_chain() const;
  ChainReport chains() const;

 private:
  EnvAlgebra A_;
  F f_;
  std::vector<Monomial> carrier_;
  std::map<Monomial, std::size_t> index_;
  std::vector<Vec> table_;
  std::vector<Matrix> ads_;
  bool lossy_ = false;
};

using RegularRep = BasicRegularRep<FpField>;
using RationalRegularRep = BasicRegularRep<CoeffField>;

/// Dense structure constants of a characteristic-p carrier for the kernels.
kernels::FpAlgebraTable fp_table(const RegularRep& rep);

/// Convenience wrappers around BasicRegularRep.
ChainReport commutator_ideal_chain(const EnvAlgebra& A);
std::size_t env_center_dim(const EnvAlgebra& A);

}  // namespace superengel

#endif  // SUPERENGEL_ENV_ALG_HPP
