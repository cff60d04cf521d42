#include "superengel/env_alg.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace superengel {

unsigned Monomial::degree() const {
  unsigned d = static_cast<unsigned>(std::popcount(odd));
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  return odd == 0 && std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

Coeff EnvElement::coefficient(const Monomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? ring.zero() : it->second;
}

unsigned EnvElement::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

void EnvElement::add_term(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

// ------------------------------------------------------------ straightening

using TermList = std::vector<std::pair<Monomial, Coeff>>;

struct EnvAlgebra::Memo {
  std::shared_mutex mu;
  std::map<std::pair<Monomial, std::size_t>, TermList> table;
};

namespace {

using Terms = std::map<Monomial, Coeff>;

void accumulate(Terms& t, const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

int super_sign(Parity a, Parity b) { return (parity_bit(a) & parity_bit(b)) ? -1 : 1; }

}  // namespace

EnvAlgebra::EnvAlgebra(const LieSuperalgebra& L, EnvMode mode)
    : lie_(std::make_shared<const LieSuperalgebra>(L)), mode_(mode), memo_(std::make_shared<Memo>()) {
  if (L.n_odd() > 64) throw Error(ErrorCode::DimensionMismatch, "at most 64 odd generators");
}

EnvAlgebra EnvAlgebra::restricted(const LieSuperalgebra& L) {
  if (!L.is_restricted()) throw Error(ErrorCode::NotRestricted, "u(L) needs a restricted algebra");
  return EnvAlgebra(L, EnvMode{true, 0});
}

EnvAlgebra EnvAlgebra::truncated(const LieSuperalgebra& L, unsigned N) { return EnvAlgebra(L, EnvMode{false, N}); }

Monomial EnvAlgebra::monomial_of_generator(std::size_t i) const {
  Monomial m;
  m.exp.assign(lie_->n_even(), 0);
  if (i < lie_->n_even())
    m.exp[i] = 1;
  else
    m.odd = std::uint64_t{1} << (i - lie_->n_even());
  return m;
}

const TermList& EnvAlgebra::mono_times_gen(const Monomial& m, std::size_t g) const {
  const auto key = std::make_pair(m, g);
  {
    std::shared_lock lock(memo_->mu);
    auto it = memo_->table.find(key);
    if (it != memo_->table.end()) return it->second;
  }

  const LieSuperalgebra& L = *lie_;
  const std::size_t ne = L.n_even();
  Terms out;

  // Last generator of m in PBW order.
  std::optional<std::size_t> h;
  if (m.odd)
    h = ne + (63 - std::countl_zero(m.odd));
  else
    for (std::size_t i = ne; i-- > 0;)
      if (m.exp[i]) {
        h = i;
        break;
      }

  auto times_lie = [&](const Monomial& base, const Vec& v, const Coeff& scale) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      for (const auto& [mm, c] : mono_times_gen(base, k)) accumulate(out, mm, scale * v[k] * c);
    }
  };

  if (!h || g > *h) {
    Monomial r = m;
    if (g < ne)
      r.exp[g] += 1;
    else
      r.odd |= std::uint64_t{1} << (g - ne);
    accumulate(out, r, L.field().one());
  } else if (g == *h) {
    Monomial base = m;
    if (g < ne) {
      const std::uint32_t p = L.characteristic();
      if (mode_.restricted && m.exp[g] + 1u == p) {
        // x^p = x^[p]
        base.exp[g] = 0;
        times_lie(base, L.p_map_basis(g), L.field().one());
      } else {
        base.exp[g] += 1;
        accumulate(out, base, L.field().one());
      }
    } else {
      // y y = 1/2 (y, y)
      base.odd &= ~(std::uint64_t{1} << (g - ne));
      times_lie(base, L.bracket_basis(g, g), field_inverse(L.field().from_int(2)));
    }
  } else {
    // m g = m' h g = s m' g h + m' (h, g) with s = (-1)^{|h||g|}.
    const std::size_t hh = *h;
    Monomial rest = m;
    if (hh < ne)
      rest.exp[hh] -= 1;
    else
      rest.odd &= ~(std::uint64_t{1} << (hh - ne));
    const Coeff s = L.field().from_int(super_sign(L.parity(hh), L.parity(g)));
    const TermList first = mono_times_gen(rest, g);
    for (const auto& [mm, c] : first)
      for (const auto& [mm2, c2] : mono_times_gen(mm, hh)) accumulate(out, mm2, s * c * c2);
    times_lie(rest, L.bracket_basis(hh, g), L.field().one());
  }

  TermList list(out.begin(), out.end());
  std::unique_lock lock(memo_->mu);
  auto [it, inserted] = memo_->table.emplace(key, std::move(list));
  return it->second;
}

std::size_t EnvAlgebra::memo_size() const {
  std::shared_lock lock(memo_->mu);
  return memo_->table.size();
}

// ------------------------------------------------------------ elements

EnvElement EnvAlgebra::zero(const Ring& ring) const {
  EnvElement e;
  e.mode = mode_;
  e.ring = ring;
  return e;
}

EnvElement EnvAlgebra::one() const { return scalar(field().one()); }

EnvElement EnvAlgebra::scalar(const Coeff& c) const {
  EnvElement e = zero(c.is_typed() ? c.ring() : field());
  Monomial m;
  m.exp.assign(lie_->n_even(), 0);
  e.add_term(m, c);
  return e;
}

EnvElement EnvAlgebra::generator(std::size_t i) const { return from_monomial(monomial_of_generator(i), field().one()); }

EnvElement EnvAlgebra::from_monomial(const Monomial& m, const Coeff& c) const {
  EnvElement e = zero(c.is_typed() ? c.ring() : field());
  e.add_term(m, c);
  return truncate(std::move(e));
}

EnvElement EnvAlgebra::from_lie(const Vec& v) const {
  EnvElement e = zero();
  for (std::size_t i = 0; i < v.size(); ++i) e.add_term(monomial_of_generator(i), field().zero() + v[i]);
  return truncate(std::move(e));
}

void EnvAlgebra::check_compatible(const EnvElement& a, const EnvElement& b) const {
  if (!(a.mode == mode_) || !(b.mode == mode_)) throw Error(ErrorCode::ModeMismatch, "elements of different enveloping algebras");
  if (!(a.ring == b.ring)) throw Error(ErrorCode::RingMismatch, a.ring.to_string() + " vs " + b.ring.to_string());
}

EnvElement EnvAlgebra::add(const EnvElement& a, const EnvElement& b) const {
  check_compatible(a, b);
  EnvElement r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c);
  r.lossy = a.lossy || b.lossy;
  return r;
}

EnvElement EnvAlgebra::sub(const EnvElement& a, const EnvElement& b) const {
  check_compatible(a, b);
  EnvElement r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, -c);
  r.lossy = a.lossy || b.lossy;
  return r;
}

EnvElement EnvAlgebra::scale(const EnvElement& a, const Coeff& c) const {
  EnvElement r = zero(a.ring);
  r.lossy = a.lossy;
  for (const auto& [m, x] : a.terms) r.add_term(m, x * c);
  return r;
}

EnvElement EnvAlgebra::truncate(EnvElement a) const {
  if (mode_.restricted) return a;
  for (auto it = a.terms.begin(); it != a.terms.end();) {
    if (it->first.degree() > mode_.trunc) {
      it = a.terms.erase(it);
      a.lossy = true;
    } else {
      ++it;
    }
  }
  return a;
}

EnvElement EnvAlgebra::multiply_exact(const EnvElement& a, const EnvElement& b) const {
  check_compatible(a, b);
  const std::size_t ne = lie_->n_even();
  EnvElement result = zero(a.ring);
  result.lossy = a.lossy || b.lossy;
  for (const auto& [mb, cb] : b.terms) {
    // Right-multiply by the generators of mb one at a time.
    Terms cur(a.terms.begin(), a.terms.end());
    auto apply = [&](std::size_t g) {
      Terms next;
      for (const auto& [m, c] : cur)
        for (const auto& [mm, c2] : mono_times_gen(m, g)) accumulate(next, mm, c * c2);
      cur = std::move(next);
    };
    for (std::size_t i = 0; i < ne; ++i)
      for (unsigned k = 0; k < mb.exp[i]; ++k) apply(i);
    for (std::uint64_t bits = mb.odd; bits; bits &= bits - 1) apply(ne + std::countr_zero(bits));
    for (const auto& [m, c] : cur) result.add_term(m, c * cb);
  }
  return result;
}

EnvElement EnvAlgebra::multiply(const EnvElement& a, const EnvElement& b) const {
  return truncate(multiply_exact(a, b));
}

EnvElement EnvAlgebra::power(const EnvElement& a, std::uint64_t e) const {
  EnvElement acc = scalar(a.ring.one());
  acc.lossy = a.lossy;
  EnvElement base = a;
  while (e) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return acc;
}

EnvElement EnvAlgebra::commutator(const EnvElement& a, const EnvElement& b) const {
  EnvElement ab = multiply_exact(a, b);
  EnvElement ba = multiply_exact(b, a);
  return truncate(sub(ab, ba));
}

EnvElement EnvAlgebra::iterated_commutator(const EnvElement& a, const EnvElement& b, unsigned n) const {
  EnvElement c = a;
  for (unsigned k = 0; k < n; ++k) c = commutator(c, b);
  return c;
}

// ------------------------------------------------------------ carriers

std::vector<Monomial> EnvAlgebra::basis_monomials() const {
  const std::size_t ne = lie_->n_even(), no = lie_->n_odd();
  std::vector<Monomial> out;
  if (mode_.restricted) {
    const std::uint32_t p = lie_->characteristic();
    std::uint64_t evens = 1;
    for (std::size_t i = 0; i < ne; ++i) evens *= p;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << no); ++mask)
      for (std::uint64_t idx = 0; idx < evens; ++idx) {
        Monomial m;
        m.exp.resize(ne);
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < ne; ++i, r /= p) m.exp[i] = static_cast<std::uint16_t>(r % p);
        m.odd = mask;
        out.push_back(std::move(m));
      }
    return out;
  }
  const unsigned N = mode_.trunc;
  std::vector<std::uint16_t> e(ne, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned used) -> void {
    if (i == ne) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << no); ++mask)
        if (used + std::popcount(mask) <= N) out.push_back(Monomial{e, mask});
      return;
    }
    for (unsigned k = 0; used + k <= N; ++k) {
      e[i] = static_cast<std::uint16_t>(k);
      self(self, i + 1, used + k);
    }
    e[i] = 0;
  };
  rec(rec, 0, 0);
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  return out;
}

std::size_t EnvAlgebra::carrier_dim() const { return basis_monomials().size(); }

std::size_t EnvAlgebra::generic_size(std::optional<unsigned> bound, bool augmentation) const {
  std::size_t n = 0;
  for (const auto& m : basis_monomials())
    if ((!bound || m.degree() <= *bound) && !(augmentation && m.is_one())) ++n;
  return n;
}

EnvElement EnvAlgebra::generic_element(const Ring& poly_ring, std::optional<unsigned> bound, std::uint32_t offset,
                                       bool augmentation) const {
  if (poly_ring.kind() != Ring::Kind::PolyFp) throw Error(ErrorCode::RingMismatch, "generic elements need F_p[t]");
  const std::size_t need = generic_size(bound, augmentation);
  if (offset + need > poly_ring.num_vars())
    throw Error(ErrorCode::VariableBudgetExceeded,
                std::to_string(offset + need) + " variables needed, ring has " + std::to_string(poly_ring.num_vars()));
  EnvElement e = zero(poly_ring);
  std::uint32_t v = offset;
  for (const auto& m : basis_monomials()) {
    if ((bound && m.degree() > *bound) || (augmentation && m.is_one())) continue;
    e.add_term(m, poly_ring.var(v++));
  }
  return e;
}

// ------------------------------------------------------------ text

std::string EnvAlgebra::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  const auto& basis = lie_->basis();
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (!m.exp[i]) continue;
    if (!first) os << '*';
    first = false;
    os << basis[i].name;
    if (m.exp[i] > 1) os << '^' << m.exp[i];
  }
  for (std::uint64_t bits = m.odd; bits; bits &= bits - 1) {
    if (!first) os << '*';
    first = false;
    os << basis[lie_->n_even() + std::countr_zero(bits)].name;
  }
  return os.str();
}

std::string EnvAlgebra::format(const EnvElement& a) const {
  if (a.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first, then monomial order.
  std::vector<const std::pair<const Monomial, Coeff>*> order;
  for (const auto& t : a.terms) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](auto* x, auto* y) { return x->first.degree() > y->first.degree(); });
  for (const auto* t : order) {
    if (!first) os << " + ";
    first = false;
    const bool poly = t->second.is_typed() && t->second.ring().kind() == Ring::Kind::PolyFp;
    std::string c = t->second.to_string();
    if (poly && t->second.as_poly().num_terms() > 1) c = "(" + c + ")";
    if (t->first.is_one())
      os << c;
    else if (t->second.is_one())
      os << format(t->first);
    else
      os << c << '*' << format(t->first);
  }
  return os.str();
}

EnvElement EnvAlgebra::parse(const std::string& text) const {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos) + " in '" + text + "'");
  };
  auto factor = [&]() -> EnvElement {
    skip();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      return scalar(parse_coeff(text.substr(start, pos - start), field()));
    }
    if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
      std::string name = text.substr(start, pos - start);
      auto idx = lie_->index_of(name);
      if (!idx) throw fail("unknown generator '" + name + "'");
      EnvElement g = generator(*idx);
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        std::size_t s = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (s == pos) throw fail("missing exponent");
        return power(g, std::stoull(text.substr(s, pos - s)));
      }
      return g;
    }
    throw fail("expected a generator or a number");
  };
  auto term = [&]() -> EnvElement {
    skip();
    bool neg = false;
    while (pos < text.size() && text[pos] == '-') {
      neg = !neg;
      ++pos;
      skip();
    }
    EnvElement t = factor();
    for (skip(); pos < text.size() && text[pos] == '*'; skip()) {
      ++pos;
      t = multiply(t, factor());
    }
    return neg ? scale(t, field().from_int(-1)) : t;
  };
  EnvElement sum = term();
  for (skip(); pos < text.size(); skip()) {
    if (text[pos] == '+') {
      ++pos;
      sum = add(sum, term());
    } else if (text[pos] == '-') {
      ++pos;
      sum = sub(sum, term());
    } else {
      throw fail("unexpected character");
    }
  }
  return sum;
}

// ------------------------------------------------------------ regular representation

namespace {

std::uint32_t to_value(const FpField&, const Coeff& c, const Ring& r) { return (c + r.zero()).residue(); }
Coeff to_value(const CoeffField&, const Coeff& c, const Ring& r) { return c + r.zero(); }

template <class F>
F carrier_field(const Ring& r) {
  if constexpr (std::is_same_v<F, FpField>) {
    if (r.characteristic() == 0) throw Error(ErrorCode::RingMismatch, "F_p carrier over characteristic 0");
    return FpField{r.characteristic()};
  } else {
    return CoeffField{r};
  }
}

}  // namespace

template <class F>
BasicRegularRep<F>::BasicRegularRep(const EnvAlgebra& A) : A_(A), f_(carrier_field<F>(A.field())) {
  carrier_ = A.basis_monomials();
  for (std::size_t i = 0; i < carrier_.size(); ++i) index_.emplace(carrier_[i], i);
  const std::size_t n = carrier_.size();
  const Ring r = A.field();
  table_.assign(n * n, Vec(n, f_.zero()));
  std::vector<char> dropped(n, 0);
  std::vector<EnvElement> mono;
  for (const auto& m : carrier_) {
    EnvElement e = A.zero();
    e.add_term(m, r.one());
    mono.push_back(std::move(e));
  }
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = 0; j < n; ++j) {
      EnvElement prod = A.multiply(mono[i], mono[j]);
      if (prod.lossy) dropped[i] = 1;
      Vec& out = table_[i * n + j];
      for (const auto& [m, c] : prod.terms) out[index_.at(m)] = to_value(f_, c, r);
    }
  }
  lossy_ = std::any_of(dropped.begin(), dropped.end(), [](char c) { return c != 0; });
  for (std::size_t k = 0; k < n; ++k) ads_.push_back(ad(unit(k)));
}

template <class F>
std::optional<std::size_t> BasicRegularRep<F>::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <class F>
typename BasicRegularRep<F>::Vec BasicRegularRep<F>::unit(std::size_t i) const {
  Vec v(dim(), f_.zero());
  v[i] = f_.one();
  return v;
}

template <class F>
typename BasicRegularRep<F>::Vec BasicRegularRep<F>::multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  Vec out(n, f_.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (f_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (f_.is_zero(b[j])) continue;
      const auto s = f_.mul(a[i], b[j]);
      const Vec& pr = product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!f_.is_zero(pr[k])) out[k] = f_.add(out[k], f_.mul(s, pr[k]));
    }
  }
  return out;
}

template <class F>
typename BasicRegularRep<F>::Vec BasicRegularRep<F>::power(const Vec& a, std::uint64_t e) const {
  Vec acc = unit(0), base = a;
  while (e) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return acc;
}

template <class F>
typename BasicRegularRep<F>::Vec BasicRegularRep<F>::coords(const EnvElement& a) const {
  Vec v(dim(), f_.zero());
  for (const auto& [m, c] : a.terms) {
    auto idx = index_of(m);
    if (!idx) throw Error(ErrorCode::DimensionMismatch, "monomial outside the carrier: " + A_.format(m));
    v[*idx] = to_value(f_, c, A_.field());
  }
  return v;
}

template <class F>
EnvElement BasicRegularRep<F>::element(const Vec& v) const {
  EnvElement e = A_.zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (f_.is_zero(v[i])) continue;
    if constexpr (std::is_same_v<F, FpField>)
      e.add_term(carrier_[i], Coeff::fp(v[i], f_.p));
    else
      e.add_term(carrier_[i], v[i]);
  }
  return e;
}

template <class F>
typename BasicRegularRep<F>::Matrix BasicRegularRep<F>::ad(const Vec& a) const {
  const std::size_t n = dim();
  Matrix m(f_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& ij = product(i, j);
      const Vec& ji = product(j, i);
      for (std::size_t k = 0; k < n; ++k) m(k, j) = f_.add(m(k, j), f_.mul(a[i], f_.sub(ij[k], ji[k])));
    }
  }
  return m;
}

template <class F>
typename BasicRegularRep<F>::Space BasicRegularRep<F>::center() const {
  std::vector<Matrix> ops;
  for (std::size_t g = 0; g < A_.lie().dim(); ++g) ops.push_back(ads_[*index_of(A_.monomial_of_generator(g))]);
  return joint_kernel(f_, dim(), std::span<const Matrix>(ops));
}

template <class F>
typename BasicRegularRep<F>::Space BasicRegularRep<F>::commutator_ideal() const {
  const std::size_t n = dim();
  Space C(f_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec c = product(i, j);
      const Vec& ji = product(j, i);
      for (std::size_t k = 0; k < n; ++k) c[k] = f_.sub(c[k], ji[k]);
      C.insert(std::move(c));
    }
  Space R = C;
  for (const auto& c : C.basis())
    for (std::size_t k = 1; k < n; ++k) R.insert(multiply(c, unit(k)));
  return R;
}

template <class F>
EnvChain BasicRegularRep<F>::ideal_chain() const {
  EnvChain chain;
  const std::size_t n = dim();
  const Space R = commutator_ideal();
  Space P = R;
  chain.dims.push_back(P.dim());
  while (!P.is_zero()) {
    Space next(f_, n);
    for (const auto& a : P.basis())
      for (const auto& b : R.basis()) next.insert(multiply(a, b));
    if (next.dim() == P.dim()) break;
    P = std::move(next);
    chain.dims.push_back(P.dim());
  }
  chain.terminal_zero = P.is_zero();
  if (P.is_zero()) chain.index = chain.dims.size();
  return chain;
}

template <class F>
ChainReport BasicRegularRep<F>::chains() const {
  ChainReport rep;
  rep.lossy = lossy_;
  const std::size_t n = dim();
  rep.associative = ideal_chain();

  Space V = Space::whole(f_, n);
  rep.lie.dims.push_back(V.dim());
  while (!V.is_zero()) {
    Space next(f_, n);
    for (const auto& v : V.basis())
      for (std::size_t j = 0; j < n; ++j) next.insert(ads_[j].apply(v));
    if (next.dim() == V.dim()) break;
    V = std::move(next);
    rep.lie.dims.push_back(V.dim());
  }
  rep.lie.terminal_zero = V.is_zero();
  if (V.is_zero()) rep.lie.index = rep.lie.dims.size();
  return rep;
}

template class BasicRegularRep<FpField>;
template class BasicRegularRep<CoeffField>;

kernels::FpAlgebraTable fp_table(const RegularRep& rep) {
  kernels::FpAlgebraTable t;
  t.dim = rep.dim();
  t.p = rep.field().p;
  t.data.resize(t.dim * t.dim * t.dim);
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j) std::copy(rep.product(i, j).begin(), rep.product(i, j).end(), &t.data[(i * t.dim + j) * t.dim]);
  return t;
}

ChainReport commutator_ideal_chain(const EnvAlgebra& A) {
  if (A.field().characteristic() == 0) return RationalRegularRep(A).chains();
  return RegularRep(A).chains();
}

std::size_t env_center_dim(const EnvAlgebra& A) {
  if (A.field().characteristic() == 0) return RationalRegularRep(A).center().dim();
  return RegularRep(A).center().dim();
}

}  // namespace superengel
