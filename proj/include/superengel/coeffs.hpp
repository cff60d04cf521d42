#ifndef SUPERENGEL_COEFFS_HPP
#define SUPERENGEL_COEFFS_HPP

// Exact coefficient rings: the prime field F_p (p odd), the rationals, and
// multivariate polynomials over F_p used for generic-element computations.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "superengel/errors.hpp"

namespace superengel {

using Rational = boost::multiprecision::cpp_rational;

class Coeff;

class Ring {
 public:
  enum class Kind { Fp, Rational, PolyFp };

  static Ring fp(std::uint32_t p);
  static Ring rationals() { return Ring(Kind::Rational, 0, 0); }
  static Ring poly(std::uint32_t p, std::uint32_t nvars);

  Kind kind() const noexcept { return kind_; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t num_vars() const noexcept { return nvars_; }
  bool is_field() const noexcept { return kind_ != Kind::PolyFp; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(long long n) const;
  Coeff var(std::uint32_t i) const;
  /// Lifts a base-field element into this ring (F_p -> F_p[t], identity otherwise).
  Coeff lift(const Coeff& c) const;

  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind k, std::uint32_t p, std::uint32_t n) : kind_(k), p_(p), nvars_(n) {}

  Kind kind_;
  std::uint32_t p_;
  std::uint32_t nvars_;
};

bool is_odd_prime(std::uint64_t p);

/// Sparse polynomial over F_p. Terms are kept in graded-lex order, highest
/// first; no zero coefficients are ever stored.
class Poly {
 public:
  using Exponent = std::vector<std::uint8_t>;

  struct GrLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
  };
  using TermMap = std::map<Exponent, std::uint32_t, GrLexGreater>;

  Poly(std::uint32_t p, std::uint32_t nvars) : p_(p), nvars_(nvars) {}
  static Poly constant(std::uint32_t p, std::uint32_t nvars, std::uint32_t c);
  static Poly variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t i);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t num_vars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  unsigned total_degree() const;
  /// Constant term value if the polynomial is constant.
  std::optional<std::uint32_t> as_constant() const;

  void add_term(const Exponent& e, std::uint64_t c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Poly& o) const;
  Poly scaled(std::uint32_t c) const;
  Poly negated() const;

  std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const;
  /// Variables that occur with positive exponent, ascending.
  std::vector<std::uint32_t> support_vars() const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

 private:
  std::uint32_t p_;
  std::uint32_t nvars_;
  TermMap terms_;
};

/// A value of one of the coefficient rings. A default-constructed Coeff is an
/// untyped integer zero that adopts the ring of whatever it is combined with.
class Coeff {
 public:
  struct Fp {
    std::uint32_t v;
    std::uint32_t p;
    friend bool operator==(const Fp&, const Fp&) = default;
  };

  Coeff() : v_(Untyped{0}) {}
  static Coeff fp(long long v, std::uint32_t p);
  static Coeff rational(Rational q) { return Coeff(Storage(std::move(q))); }
  static Coeff poly(Poly f) { return Coeff(Storage(std::move(f))); }
  static Coeff integer(long long v) { return Coeff(Storage(Untyped{v})); }

  bool is_zero() const;
  bool is_one() const;
  bool is_typed() const noexcept { return !std::holds_alternative<Untyped>(v_); }
  Ring ring() const;

  /// Residue for an F_p value.
  std::uint32_t residue() const;
  const Rational& as_rational() const;
  const Poly& as_poly() const;

  Coeff operator-() const;
  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  friend bool operator==(const Coeff& a, const Coeff& b);

  Coeff pow(std::uint64_t e) const;

  std::string to_string() const;

 private:
  struct Untyped {
    long long v;
  };
  using Storage = std::variant<Untyped, Fp, Rational, Poly>;
  explicit Coeff(Storage s) : v_(std::move(s)) {}

  friend Coeff promote(const Coeff& c, const Coeff& like);

  Storage v_;
};

/// Multiplicative inverse in F_p or Q.
Coeff field_inverse(const Coeff& a);

/// Searches for a point of F_p^d where f is nonzero. Points are enumerated
/// deterministically over the variables f actually uses, then sampled with a
/// seeded generator, until `budget` evaluations are spent.
std::optional<std::vector<std::uint32_t>> poly_find_nonzero_point(const Coeff& f,
                                                                  std::uint64_t budget,
                                                                  std::uint64_t seed = 42);

/// Parses "7", "-3", "2/5" into the given field.
Coeff parse_coeff(const std::string& text, const Ring& ring);

}  // namespace superengel

#endif  // SUPERENGEL_COEFFS_HPP
