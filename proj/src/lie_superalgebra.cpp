#include "superengel/lie_superalgebra.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace superengel {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SUPERENGEL_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 2'000'000;
}

Ring RawAlgebra::field() const {
  return characteristic == 0 ? Ring::rationals() : Ring::fp(characteristic);
}

RawAlgebra& RawAlgebra::bracket(std::string left, std::string right, std::vector<RawTerm> value) {
  brackets.push_back({std::move(left), std::move(right), std::move(value)});
  return *this;
}

RawAlgebra& RawAlgebra::pmap(std::string of, std::vector<RawTerm> value) {
  p_map.push_back({std::move(of), std::move(value)});
  return *this;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  if (error) os << to_string(*error) << ": " << error_detail << "; ";
  for (const auto& v : violations) os << v.axiom << " at " << v.location << " (" << v.detail << "); ";
  return os.str();
}

namespace {

int sign_of(Parity a, Parity b) { return (parity_bit(a) & parity_bit(b)) ? -1 : 1; }

struct TableBuild {
  std::vector<Vec> table;
  std::vector<Vec> pmap;
};

}  // namespace

std::optional<std::size_t> LieSuperalgebra::index_of(const std::string& name) const {
  for (const auto& b : basis_)
    if (b.name == name) return b.index;
  return std::nullopt;
}

Vec LieSuperalgebra::basis_vec(std::size_t i) const {
  Vec v = zero_vec();
  v[i] = field_.one();
  return v;
}

Vec LieSuperalgebra::even_part(const Vec& v) const {
  Vec out = v;
  for (std::size_t i = n_even_; i < dim(); ++i) out[i] = field_.zero();
  return out;
}

Vec LieSuperalgebra::odd_part(const Vec& v) const {
  Vec out = v;
  for (std::size_t i = 0; i < n_even_; ++i) out[i] = field_.zero();
  return out;
}

std::optional<Parity> LieSuperalgebra::parity_of(const Vec& v) const {
  bool has_even = false, has_odd = false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    (i < n_even_ ? has_even : has_odd) = true;
  }
  if (has_even == has_odd) return std::nullopt;
  return has_even ? Parity::Even : Parity::Odd;
}

Vec LieSuperalgebra::bracket(const Vec& u, const Vec& v) const {
  Vec out = zero_vec();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j].is_zero()) continue;
      const Vec& c = bracket_basis(i, j);
      Coeff s = u[i] * v[j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!c[k].is_zero()) out[k] += s * c[k];
    }
  }
  return out;
}

LinearOperator LieSuperalgebra::ad(const Vec& x) const {
  LinearOperator m(CoeffField{field_}, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = bracket(x, basis_vec(j));
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

bool LieSuperalgebra::check_odd_square_ad(const Vec& z) const {
  if (characteristic() == 2) throw Error(ErrorCode::OddCharacteristicRequired, "the odd square identity needs char != 2");
  LinearOperator adz = ad(z);
  LinearOperator lhs = adz * adz;
  LinearOperator rhs = ad(bracket(z, z)).scaled(field_inverse(field_.from_int(2)));
  return lhs == rhs;
}

std::vector<Vec> LieSuperalgebra::jacobson_sums(const Vec& x, const Vec& w) const {
  if (!restricted_) throw Error(ErrorCode::NotRestricted, "Jacobson sums need a restricted algebra");
  const std::uint32_t p = characteristic();
  // terms[d] is the coefficient of t^d in (ad(t x + w))^k (x).
  std::vector<Vec> terms{x};
  for (std::uint32_t k = 0; k + 1 < p; ++k) {
    std::vector<Vec> next(terms.size() + 1, zero_vec());
    for (std::size_t d = 0; d < terms.size(); ++d) {
      Vec bw = bracket(w, terms[d]);
      Vec bx = bracket(x, terms[d]);
      for (std::size_t i = 0; i < dim(); ++i) {
        next[d][i] += bw[i];
        next[d + 1][i] += bx[i];
      }
    }
    terms = std::move(next);
  }
  std::vector<Vec> s;
  for (std::uint32_t i = 1; i < p; ++i) {
    Coeff inv = field_inverse(field_.from_int(i));
    Vec si = terms[i - 1];
    for (auto& c : si) c *= inv;
    s.push_back(std::move(si));
  }
  return s;
}

Vec LieSuperalgebra::p_map(const Vec& v) const {
  if (!restricted_) throw Error(ErrorCode::NotRestricted, "p-map needs a restricted algebra");
  for (std::size_t i = n_even_; i < dim(); ++i)
    if (!v[i].is_zero()) throw Error(ErrorCode::DimensionMismatch, "p-map is defined on even elements only");
  std::size_t lead = 0;
  while (lead < n_even_ && v[lead].is_zero()) ++lead;
  if (lead == n_even_) return zero_vec();
  const std::uint32_t p = characteristic();
  Vec a = zero_vec();
  a[lead] = v[lead];
  Vec b = v;
  b[lead] = field_.zero();
  for (std::size_t i = n_even_; i < dim(); ++i) b[i] = field_.zero();

  // (c e)^[p] = c^p e^[p]
  Vec out = pmap_.at(lead);
  Coeff cp = v[lead].pow(p);
  for (auto& c : out) c *= cp;
  bool b_zero = std::all_of(b.begin(), b.end(), [](const Coeff& c) { return c.is_zero(); });
  if (b_zero) return out;
  Vec bp = p_map(b);
  for (std::size_t i = 0; i < dim(); ++i) out[i] += bp[i];
  for (const Vec& s : jacobson_sums(a, b))
    for (std::size_t i = 0; i < dim(); ++i) out[i] += s[i];
  return out;
}

std::string LieSuperalgebra::format(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!v[i].is_one()) os << v[i].to_string() << '*';
    os << basis_[i].name;
  }
  if (first) return "0";
  return os.str();
}

// ----------------------------------------------------------- construction

namespace {

struct Builder {
  const RawAlgebra& raw;
  Ring field;
  ValidationReport* report;  // null: unchecked build
  std::vector<BasisElement> basis;
  std::map<std::string, std::size_t> index;

  void violation(std::string axiom, std::string loc, std::string detail) {
    if (report) report->violations.push_back({std::move(axiom), std::move(loc), std::move(detail)});
  }

  bool build_basis() {
    std::size_t k = 0;
    for (const auto& n : raw.even_basis) basis.push_back({n, Parity::Even, k++});
    for (const auto& n : raw.odd_basis) basis.push_back({n, Parity::Odd, k++});
    bool ok = true;
    for (const auto& b : basis) {
      if (b.name.empty()) {
        violation("basis", "<empty>", "empty basis name");
        ok = false;
      }
      if (!index.emplace(b.name, b.index).second) {
        violation("basis", b.name, "duplicate basis name");
        ok = false;
      }
    }
    return ok;
  }

  std::optional<Vec> to_vec(const std::vector<RawTerm>& terms, const std::string& where) {
    Vec v(basis.size(), field.zero());
    for (const auto& t : terms) {
      auto it = index.find(t.basis);
      if (it == index.end()) {
        violation("unknown-basis", where, "unknown basis name '" + t.basis + "'");
        return std::nullopt;
      }
      v[it->second] += field.zero() + t.c;
    }
    return v;
  }

  std::string pair_name(std::size_t i, std::size_t j) const {
    return "(" + basis[i].name + "," + basis[j].name + ")";
  }
};

bool vec_equal(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] - b[i]).is_zero()) return false;
  return true;
}

}  // namespace

ValidationResult LieSuperalgebra::validate(const RawAlgebra& raw, std::uint64_t budget) {
  ValidationResult result;
  ValidationReport& rep = result.report;
  Ring field = Ring::rationals();
  try {
    field = raw.field();
  } catch (const Error& e) {
    rep.error = e.code();
    rep.error_detail = e.what();
    return result;
  }

  Builder b{raw, field, &rep, {}, {}};
  if (!b.build_basis()) return result;
  const std::size_t n = b.basis.size();

  std::vector<std::optional<Vec>> given(n * n);
  for (const auto& br : raw.brackets) {
    auto li = b.index.find(br.left), ri = b.index.find(br.right);
    std::string loc = "(" + br.left + "," + br.right + ")";
    if (li == b.index.end() || ri == b.index.end()) {
      b.violation("unknown-basis", loc, "bracket names an unknown basis element");
      continue;
    }
    auto v = b.to_vec(br.value, loc);
    if (!v) continue;
    auto& slot = given[li->second * n + ri->second];
    if (slot && !vec_equal(*slot, *v)) b.violation("duplicate", loc, "conflicting entries for the same pair");
    slot = std::move(v);
  }

  LieSuperalgebra alg(field);
  alg.basis_ = b.basis;
  alg.n_even_ = raw.even_basis.size();
  alg.restricted_ = raw.restricted;
  alg.table_.assign(n * n, Vec(n, field.zero()));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto& gij = given[i * n + j];
      const auto& gji = given[j * n + i];
      const int s = sign_of(alg.basis_[i].parity, alg.basis_[j].parity);
      // Grading: parity of (a,b) is |a| + |b|.
      const Parity want = Parity((parity_bit(alg.basis_[i].parity) + parity_bit(alg.basis_[j].parity)) % 2);
      for (const auto* g : {&gij, &gji}) {
        if (!*g) continue;
        auto par = alg.parity_of(**g);
        if (par && *par != want)
          b.violation("grading", g == &gij ? b.pair_name(i, j) : b.pair_name(j, i),
                      "bracket value has the wrong parity");
        else if (!par && !std::all_of((*g)->begin(), (*g)->end(), [](auto& c) { return c.is_zero(); }))
          b.violation("grading", g == &gij ? b.pair_name(i, j) : b.pair_name(j, i),
                      "bracket value is not homogeneous");
      }
      Vec vij = gij ? *gij : Vec(n, field.zero());
      if (!gij && gji) {
        vij = *gji;
        for (auto& c : vij) c *= field.from_int(-s);
      }
      if (gij && gji) {
        Vec mirror = *gij;
        for (auto& c : mirror) c *= field.from_int(-s);
        if (!vec_equal(mirror, *gji))
          b.violation("skew-symmetry", b.pair_name(j, i),
                      "(b,a) must equal -(-1)^(|a||b|) (a,b)");
      }
      if (i == j && s == 1 && !std::all_of(vij.begin(), vij.end(), [](auto& c) { return c.is_zero(); }))
        b.violation("skew-symmetry", b.pair_name(i, i), "(a,a) must vanish for even a");
      alg.table_[i * n + j] = vij;
      Vec vji = vij;
      for (auto& c : vji) c *= field.from_int(-s);
      if (i != j) alg.table_[j * n + i] = vji;
    }
  }

  // Super-Jacobi in graded cyclic form on basis triples.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Vec a = alg.basis_vec(i), bb = alg.basis_vec(j), c = alg.basis_vec(k);
        Parity pa = alg.parity(i), pb = alg.parity(j), pc = alg.parity(k);
        Vec t1 = alg.bracket(a, alg.bracket(bb, c));
        Vec t2 = alg.bracket(bb, alg.bracket(c, a));
        Vec t3 = alg.bracket(c, alg.bracket(a, bb));
        Vec sum = alg.zero_vec();
        for (std::size_t m = 0; m < n; ++m)
          sum[m] = field.from_int(sign_of(pa, pc)) * t1[m] + field.from_int(sign_of(pb, pa)) * t2[m] +
                   field.from_int(sign_of(pc, pb)) * t3[m];
        if (!std::all_of(sum.begin(), sum.end(), [](auto& x) { return x.is_zero(); }))
          b.violation("jacobi", "(" + alg.basis_[i].name + "," + alg.basis_[j].name + "," + alg.basis_[k].name + ")",
                      "graded Jacobi sum = " + alg.format(sum));
      }

  // ((y,y),y) = 0 for every y in L_1 when p = 3, by enumeration over F_3.
  if (field.characteristic() == 3 && alg.n_odd() > 0) {
    const std::size_t m = alg.n_odd();
    std::uint64_t count = 1;
    bool over = false;
    for (std::size_t i = 0; i < m; ++i) {
      count *= 3;
      if (count > budget * 2 + 1) over = true;
    }
    if (over || (count - 1) / 2 > budget) {
      rep.error = ErrorCode::BudgetExceeded;
      rep.error_detail = "cubic identity enumeration over F_3^" + std::to_string(m) + " exceeds budget";
      return result;
    }
    std::vector<std::uint32_t> digits(m, 0);
    for (std::uint64_t idx = 1; idx < count; ++idx) {
      for (std::size_t d = 0; d < m; ++d) {
        if (++digits[d] < 3) break;
        digits[d] = 0;
      }
      // One representative per line: leading nonzero digit equal to 1.
      std::size_t lead = 0;
      while (digits[lead] == 0) ++lead;
      if (digits[lead] != 1) continue;
      Vec y = alg.zero_vec();
      for (std::size_t d = 0; d < m; ++d) y[alg.n_even_ + d] = Coeff::fp(digits[d], 3);
      Vec cube = alg.bracket(alg.bracket(y, y), y);
      if (!std::all_of(cube.begin(), cube.end(), [](auto& x) { return x.is_zero(); })) {
        b.violation("cubic", alg.format(y), "((y,y),y) = " + alg.format(cube));
        break;
      }
    }
  }

  if (raw.restricted) {
    if (field.characteristic() == 0) {
      b.violation("restricted", "characteristic", "characteristic 0 algebras cannot be restricted");
    } else {
      std::vector<std::optional<Vec>> pm(alg.n_even_);
      for (const auto& e : raw.p_map) {
        auto it = b.index.find(e.of);
        if (it == b.index.end()) {
          b.violation("unknown-basis", e.of, "p-map entry for unknown basis element");
          continue;
        }
        if (it->second >= alg.n_even_) {
          b.violation("p-map", e.of, "p-map is only defined on even elements");
          continue;
        }
        auto v = b.to_vec(e.value, e.of + "^[p]");
        if (!v) continue;
        auto par = alg.parity_of(*v);
        if (par == Parity::Odd || (!par && !std::all_of(v->begin(), v->end(), [](auto& c) { return c.is_zero(); })))
          b.violation("p-map", e.of, "x^[p] must be even");
        pm[it->second] = std::move(v);
      }
      for (std::size_t i = 0; i < alg.n_even_; ++i) {
        if (!pm[i]) {
          rep.error = ErrorCode::MissingPMap;
          rep.error_detail = "no p-map entry for " + alg.basis_[i].name;
          return result;
        }
        alg.pmap_.push_back(*pm[i]);
      }
      for (std::size_t i = 0; i < alg.n_even_; ++i) {
        LinearOperator lhs = alg.ad(alg.pmap_[i]);
        LinearOperator rhs = alg.ad(alg.basis_vec(i)).pow(field.characteristic());
        if (!(lhs == rhs))
          b.violation("p-map", alg.basis_[i].name, "ad(x^[p]) != (ad x)^p");
      }
    }
  }

  if (rep.ok()) result.algebra = std::move(alg);
  return result;
}

LieSuperalgebra LieSuperalgebra::from_raw(const RawAlgebra& raw, std::uint64_t budget) {
  auto res = validate(raw, budget);
  if (!res.algebra) {
    if (res.report.error && res.report.violations.empty())
      throw Error(*res.report.error, res.report.error_detail);
    throw Error(ErrorCode::ValidationFailed, res.report.summary());
  }
  return std::move(*res.algebra);
}

LieSuperalgebra LieSuperalgebra::unchecked(const RawAlgebra& raw) {
  Ring field = raw.field();
  Builder b{raw, field, nullptr, {}, {}};
  b.build_basis();
  const std::size_t n = b.basis.size();
  LieSuperalgebra alg(field);
  alg.basis_ = b.basis;
  alg.n_even_ = raw.even_basis.size();
  alg.restricted_ = raw.restricted;
  alg.table_.assign(n * n, Vec(n, field.zero()));
  std::vector<bool> set(n * n, false);
  for (const auto& br : raw.brackets) {
    auto li = b.index.find(br.left), ri = b.index.find(br.right);
    if (li == b.index.end() || ri == b.index.end()) continue;
    auto v = b.to_vec(br.value, "");
    if (!v) continue;
    std::size_t i = li->second, j = ri->second;
    const int s = sign_of(alg.basis_[i].parity, alg.basis_[j].parity);
    alg.table_[i * n + j] = *v;
    set[i * n + j] = true;
    if (!set[j * n + i]) {
      Vec m = *v;
      for (auto& c : m) c *= field.from_int(-s);
      alg.table_[j * n + i] = m;
    }
  }
  if (raw.restricted) {
    alg.pmap_.assign(alg.n_even_, alg.zero_vec());
    for (const auto& e : raw.p_map) {
      auto it = b.index.find(e.of);
      if (it == b.index.end() || it->second >= alg.n_even_) continue;
      if (auto v = b.to_vec(e.value, "")) alg.pmap_[it->second] = *v;
    }
  }
  return alg;
}

RawAlgebra LieSuperalgebra::to_raw() const {
  RawAlgebra raw;
  raw.characteristic = characteristic();
  raw.restricted = restricted_;
  auto terms = [&](const Vec& v) {
    std::vector<RawTerm> t;
    for (std::size_t k = 0; k < dim(); ++k)
      if (!v[k].is_zero()) t.push_back({v[k], basis_[k].name});
    return t;
  };
  for (const auto& b : basis_) (b.parity == Parity::Even ? raw.even_basis : raw.odd_basis).push_back(b.name);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) {
      auto t = terms(bracket_basis(i, j));
      if (!t.empty()) raw.bracket(basis_[i].name, basis_[j].name, std::move(t));
    }
  if (restricted_)
    for (std::size_t i = 0; i < n_even_; ++i) raw.pmap(basis_[i].name, terms(pmap_[i]));
  return raw;
}

LieSuperalgebra LieSuperalgebra::forget_restriction() const {
  LieSuperalgebra out = *this;
  out.restricted_ = false;
  out.pmap_.clear();
  return out;
}

LieSuperalgebra LieSuperalgebra::rebased(const std::vector<std::size_t>& perm,
                                         const std::vector<Coeff>& scale) const {
  const std::size_t n = dim();
  if (perm.size() != n || scale.size() != n) throw Error(ErrorCode::DimensionMismatch, "rebase size");
  for (std::size_t k = 0; k < n; ++k)
    if (parity(perm[k]) != parity(k)) throw Error(ErrorCode::DimensionMismatch, "rebase must keep parity blocks");
  std::vector<std::size_t> inv(n);
  for (std::size_t k = 0; k < n; ++k) inv[perm[k]] = k;
  // Old coordinates -> new: e_m = (1/scale[inv m]) f_{inv m}.
  auto to_new = [&](const Vec& old) {
    Vec v = zero_vec();
    for (std::size_t m = 0; m < n; ++m)
      if (!old[m].is_zero()) v[inv[m]] = old[m] * field_inverse(scale[inv[m]]);
    return v;
  };
  LieSuperalgebra out = *this;
  for (std::size_t k = 0; k < n; ++k) out.basis_[k] = {basis_[perm[k]].name, parity(k), k};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = to_new(bracket_basis(perm[i], perm[j]));
      for (auto& c : v) c *= scale[i] * scale[j];
      out.table_[i * n + j] = std::move(v);
    }
  if (restricted_) {
    for (std::size_t i = 0; i < n_even_; ++i) {
      Vec v = to_new(pmap_[perm[i]]);
      Coeff sp = scale[i].pow(characteristic());
      for (auto& c : v) c *= sp;
      out.pmap_[i] = std::move(v);
    }
  }
  return out;
}

}  // namespace superengel
