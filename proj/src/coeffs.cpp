#include "superengel/coeffs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace superengel {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CharTwoRejected: return "CharTwoRejected";
    case ErrorCode::MissingPMap: return "MissingPMap";
    case ErrorCode::NotRestricted: return "NotRestricted";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::VariableBudgetExceeded: return "VariableBudgetExceeded";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::OddCharacteristicRequired: return "OddCharacteristicRequired";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- Ring

Ring Ring::fp(std::uint32_t p) {
  if (p == 2) throw Error(ErrorCode::CharTwoRejected, "characteristic 2 is not supported");
  if (!is_odd_prime(p)) throw Error(ErrorCode::ParseError, "not an odd prime: " + std::to_string(p));
  if (p >= (1u << 20)) throw Error(ErrorCode::ParseError, "prime too large: " + std::to_string(p));
  return Ring(Kind::Fp, p, 0);
}

Ring Ring::poly(std::uint32_t p, std::uint32_t nvars) {
  Ring base = fp(p);
  return Ring(Kind::PolyFp, base.p_, nvars);
}

Coeff Ring::zero() const { return from_int(0); }
Coeff Ring::one() const { return from_int(1); }

Coeff Ring::from_int(long long n) const {
  switch (kind_) {
    case Kind::Fp: return Coeff::fp(n, p_);
    case Kind::Rational: return Coeff::rational(Rational(n));
    case Kind::PolyFp: {
      long long r = n % static_cast<long long>(p_);
      if (r < 0) r += p_;
      return Coeff::poly(Poly::constant(p_, nvars_, static_cast<std::uint32_t>(r)));
    }
  }
  return {};
}

Coeff Ring::var(std::uint32_t i) const {
  if (kind_ != Kind::PolyFp) throw Error(ErrorCode::RingMismatch, "variables need a polynomial ring");
  if (i >= nvars_) throw Error(ErrorCode::VariableBudgetExceeded, "variable index out of range");
  return Coeff::poly(Poly::variable(p_, nvars_, i));
}

Coeff Ring::lift(const Coeff& c) const {
  if (!c.is_typed()) return c;
  Ring r = c.ring();
  if (r == *this) return c;
  if (kind_ == Kind::PolyFp && r.kind() == Kind::Fp && r.characteristic() == p_)
    return Coeff::poly(Poly::constant(p_, nvars_, c.residue()));
  throw Error(ErrorCode::RingMismatch, "cannot lift " + r.to_string() + " into " + to_string());
}

std::string Ring::to_string() const {
  switch (kind_) {
    case Kind::Fp: return "F_" + std::to_string(p_);
    case Kind::Rational: return "Q";
    case Kind::PolyFp: return "F_" + std::to_string(p_) + "[t0..t" + std::to_string(nvars_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- Poly

bool Poly::GrLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return a > b;
}

Poly Poly::constant(std::uint32_t p, std::uint32_t nvars, std::uint32_t c) {
  Poly f(p, nvars);
  f.add_term(Exponent(nvars, 0), c);
  return f;
}

Poly Poly::variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t i) {
  Poly f(p, nvars);
  Exponent e(nvars, 0);
  e[i] = 1;
  f.add_term(e, 1);
  return f;
}

unsigned Poly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

std::optional<std::uint32_t> Poly::as_constant() const {
  if (terms_.empty()) return 0u;
  if (terms_.size() == 1 && total_degree() == 0) return terms_.begin()->second;
  return std::nullopt;
}

void Poly::add_term(const Exponent& e, std::uint64_t c) {
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, static_cast<std::uint32_t>(c));
  if (!inserted) {
    it->second = static_cast<std::uint32_t>((it->second + c) % p_);
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, p_ - c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(p_, nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::uint32_t i = 0; i < nvars_; ++i) {
        unsigned s = unsigned(ea[i]) + unsigned(eb[i]);
        if (s > 255) throw Error(ErrorCode::VariableBudgetExceeded, "polynomial degree overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, std::uint64_t(ca) * cb);
    }
  }
  return out;
}

Poly Poly::scaled(std::uint32_t c) const {
  Poly out(p_, nvars_);
  c %= p_;
  if (c == 0) return out;
  for (const auto& [e, v] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), e, static_cast<std::uint32_t>(std::uint64_t(v) * c % p_));
  return out;
}

Poly Poly::negated() const { return scaled(p_ - 1); }

std::uint32_t Poly::evaluate(const std::vector<std::uint32_t>& point) const {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t t = c;
    for (std::uint32_t i = 0; i < nvars_ && t != 0; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t = t * (point[i] % p_) % p_;
    acc = (acc + t) % p_;
  }
  return static_cast<std::uint32_t>(acc);
}

std::vector<std::uint32_t> Poly::support_vars() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& [e, c] : terms_)
    for (std::uint32_t i = 0; i < nvars_; ++i)
      if (e[i]) used[i] = true;
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < nvars_; ++i)
    if (used[i]) out.push_back(i);
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; });
    if (c != 1 || !has_var) os << c;
    bool need_star = c != 1;
    for (std::uint32_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (need_star) os << '*';
      os << 't' << i;
      if (e[i] > 1) os << '^' << unsigned(e[i]);
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- Coeff

Coeff Coeff::fp(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return Coeff(Storage(Fp{static_cast<std::uint32_t>(r), p}));
}

Ring Coeff::ring() const {
  return std::visit(
      [](const auto& x) -> Ring {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Fp>) return Ring::fp(x.p);
        else if constexpr (std::is_same_v<T, Rational>) return Ring::rationals();
        else if constexpr (std::is_same_v<T, Poly>) return Ring::poly(x.modulus(), x.num_vars());
        else throw Error(ErrorCode::RingMismatch, "untyped coefficient has no ring");
      },
      v_);
}

bool Coeff::is_zero() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Fp>) return x.v == 0;
        else if constexpr (std::is_same_v<T, Rational>) return x == 0;
        else if constexpr (std::is_same_v<T, Poly>) return x.is_zero();
        else return x.v == 0;
      },
      v_);
}

bool Coeff::is_one() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Fp>) return x.v == 1;
        else if constexpr (std::is_same_v<T, Rational>) return x == 1;
        else if constexpr (std::is_same_v<T, Poly>) return x.as_constant() == 1u;
        else return x.v == 1;
      },
      v_);
}

std::uint32_t Coeff::residue() const {
  if (auto* f = std::get_if<Fp>(&v_)) return f->v;
  if (auto* u = std::get_if<Untyped>(&v_)) return static_cast<std::uint32_t>(u->v);
  throw Error(ErrorCode::RingMismatch, "residue() needs an F_p value");
}

const Rational& Coeff::as_rational() const {
  if (auto* q = std::get_if<Rational>(&v_)) return *q;
  throw Error(ErrorCode::RingMismatch, "as_rational() needs a rational value");
}

const Poly& Coeff::as_poly() const {
  if (auto* f = std::get_if<Poly>(&v_)) return *f;
  throw Error(ErrorCode::RingMismatch, "as_poly() needs a polynomial value");
}

// Brings `c` into the ring of `like`; both typed operands must share a ring,
// except that F_p values embed into F_p[t] as constants.
Coeff promote(const Coeff& c, const Coeff& like) {
  if (!like.is_typed()) return c;
  Ring target = like.ring();
  if (!c.is_typed()) return target.from_int(std::get<Coeff::Untyped>(c.v_).v);
  Ring r = c.ring();
  if (r == target) return c;
  if (target.kind() == Ring::Kind::PolyFp && r.kind() == Ring::Kind::Fp) return target.lift(c);
  if (r.kind() == Ring::Kind::PolyFp && target.kind() == Ring::Kind::Fp) return c;
  throw Error(ErrorCode::RingMismatch, r.to_string() + " vs " + target.to_string());
}

namespace {

template <class Op>
Coeff binary(const Coeff& a, const Coeff& b, Op op) {
  Coeff x = promote(a, b);
  Coeff y = promote(b, x);
  return op(x, y);
}

}  // namespace

Coeff Coeff::operator-() const {
  return std::visit(
      [](const auto& x) -> Coeff {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Fp>) return Coeff::fp(x.p - x.v, x.p);
        else if constexpr (std::is_same_v<T, Rational>) return Coeff::rational(-x);
        else if constexpr (std::is_same_v<T, Poly>) return Coeff::poly(x.negated());
        else return Coeff::integer(-x.v);
      },
      v_);
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  return binary(a, b, [](const Coeff& x, const Coeff& y) -> Coeff {
    if (auto* f = std::get_if<Coeff::Fp>(&x.v_)) {
      auto g = std::get<Coeff::Fp>(y.v_);
      return Coeff(Coeff::Storage(Coeff::Fp{(f->v + g.v) % f->p, f->p}));
    }
    if (auto* q = std::get_if<Rational>(&x.v_)) return Coeff::rational(*q + std::get<Rational>(y.v_));
    if (auto* f = std::get_if<Poly>(&x.v_)) {
      Poly out = *f;
      out += std::get<Poly>(y.v_);
      return Coeff::poly(std::move(out));
    }
    return Coeff::integer(std::get<Coeff::Untyped>(x.v_).v + std::get<Coeff::Untyped>(y.v_).v);
  });
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
  // Scalar times polynomial avoids promoting the scalar.
  if (auto* f = std::get_if<Poly>(&a.v_)) {
    if (auto* g = std::get_if<Coeff::Fp>(&b.v_)) {
      if (g->p != f->modulus()) throw Error(ErrorCode::RingMismatch, "modulus mismatch");
      return Coeff::poly(f->scaled(g->v));
    }
  }
  if (auto* f = std::get_if<Poly>(&b.v_)) {
    if (auto* g = std::get_if<Coeff::Fp>(&a.v_)) {
      if (g->p != f->modulus()) throw Error(ErrorCode::RingMismatch, "modulus mismatch");
      return Coeff::poly(f->scaled(g->v));
    }
  }
  return binary(a, b, [](const Coeff& x, const Coeff& y) -> Coeff {
    if (auto* f = std::get_if<Coeff::Fp>(&x.v_)) {
      auto g = std::get<Coeff::Fp>(y.v_);
      return Coeff(Coeff::Storage(
          Coeff::Fp{static_cast<std::uint32_t>(std::uint64_t(f->v) * g.v % f->p), f->p}));
    }
    if (auto* q = std::get_if<Rational>(&x.v_)) return Coeff::rational(*q * std::get<Rational>(y.v_));
    if (auto* f = std::get_if<Poly>(&x.v_)) return Coeff::poly(*f * std::get<Poly>(y.v_));
    return Coeff::integer(std::get<Coeff::Untyped>(x.v_).v * std::get<Coeff::Untyped>(y.v_).v);
  });
}

bool operator==(const Coeff& a, const Coeff& b) {
  return (a - b).is_zero();
}

Coeff Coeff::pow(std::uint64_t e) const {
  Coeff base = *this;
  Coeff acc = is_typed() ? ring().one() : Coeff::integer(1);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

std::string Coeff::to_string() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Fp>) return std::to_string(x.v);
        else if constexpr (std::is_same_v<T, Rational>) return x.str();
        else if constexpr (std::is_same_v<T, Poly>) return x.to_string();
        else return std::to_string(x.v);
      },
      v_);
}

Coeff field_inverse(const Coeff& a) {
  if (!a.is_typed()) throw Error(ErrorCode::NotAField, "untyped coefficient");
  Ring r = a.ring();
  if (!r.is_field()) throw Error(ErrorCode::NotAField, "polynomial ring has no general inverses");
  if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  if (r.kind() == Ring::Kind::Rational) return Coeff::rational(Rational(1) / a.as_rational());
  // Extended Euclid on (v, p).
  long long t = 0, nt = 1, rr = r.characteristic(), nr = a.residue();
  while (nr != 0) {
    long long q = rr / nr;
    t = std::exchange(nt, t - q * nt);
    rr = std::exchange(nr, rr - q * nr);
  }
  return Coeff::fp(t, r.characteristic());
}

std::optional<std::vector<std::uint32_t>> poly_find_nonzero_point(const Coeff& f,
                                                                  std::uint64_t budget,
                                                                  std::uint64_t seed) {
  const Poly& poly = f.as_poly();
  if (poly.is_zero()) return std::nullopt;
  const std::uint32_t p = poly.modulus();
  const auto vars = poly.support_vars();
  std::vector<std::uint32_t> point(poly.num_vars(), 0);

  // Exhaustive over the used variables while that fits in the budget.
  std::uint64_t total = 1;
  bool fits = true;
  for (std::size_t i = 0; i < vars.size() && fits; ++i) {
    if (total > budget / p) fits = false;
    else total *= p;
  }
  std::uint64_t spent = 0;
  std::uint64_t enumerate = fits ? total : budget / 2;
  std::vector<std::uint32_t> digits(vars.size(), 0);
  for (std::uint64_t k = 0; k < enumerate; ++k) {
    for (std::size_t i = 0; i < vars.size(); ++i) point[vars[i]] = digits[i];
    ++spent;
    if (poly.evaluate(point) != 0) return point;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  if (fits) throw Error(ErrorCode::BudgetExceeded, "polynomial vanishes on every point of F_p^d");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  while (spent < budget) {
    for (auto v : vars) point[v] = dist(rng);
    ++spent;
    if (poly.evaluate(point) != 0) return point;
  }
  throw Error(ErrorCode::BudgetExceeded, "no nonzero point found within budget");
}

Coeff parse_coeff(const std::string& text, const Ring& ring) {
  try {
    auto slash = text.find('/');
    if (ring.kind() == Ring::Kind::Rational) {
      if (slash == std::string::npos) return Coeff::rational(Rational(boost::multiprecision::cpp_int(text)));
      boost::multiprecision::cpp_int num(text.substr(0, slash)), den(text.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in " + text);
      return Coeff::rational(Rational(num, den));
    }
    if (slash == std::string::npos) return ring.from_int(std::stoll(text));
    Coeff num = ring.from_int(std::stoll(text.substr(0, slash)));
    Coeff den = ring.from_int(std::stoll(text.substr(slash + 1)));
    return num * field_inverse(den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, "bad coefficient '" + text + "'");
  }
}

}  // namespace superengel
