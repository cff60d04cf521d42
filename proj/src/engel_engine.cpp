#include "superengel/engel_engine.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "superengel/gallery.hpp"
#include "superengel/kernels.hpp"

namespace superengel {

const char* to_string(OracleMode m) {
  switch (m) {
    case OracleMode::Exact: return "exact";
    case OracleMode::Symbolic: return "symbolic";
    case OracleMode::Certificate: return "certificate";
    case OracleMode::Sample: return "sample";
  }
  return "?";
}

std::optional<OracleMode> parse_oracle_mode(const std::string& s) {
  for (auto m : {OracleMode::Exact, OracleMode::Symbolic, OracleMode::Certificate, OracleMode::Sample})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

bool OracleResult::is_engel() const {
  return std::holds_alternative<EngelWithDegree>(verdict) || std::holds_alternative<CertifiedEngelViaChain>(verdict);
}

bool OracleResult::is_witness() const { return std::holds_alternative<NotEngelWitness>(verdict); }

std::optional<std::uint64_t> OracleResult::engel_bound() const {
  if (auto* e = std::get_if<EngelWithDegree>(&verdict)) return e->n;
  if (auto* c = std::get_if<CertifiedEngelViaChain>(&verdict)) return c->bound;
  return std::nullopt;
}

bool OracleResult::is_proof() const {
  if (auto* w = std::get_if<NotEngelWitness>(&verdict)) return w->all_n;
  return is_engel();
}

std::string OracleResult::summary() const {
  std::ostringstream os;
  os << tier << ": ";
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, EngelWithDegree>)
          os << "Engel of degree " << v.n;
        else if constexpr (std::is_same_v<T, NotEngelWitness>)
          os << "not Engel, [a, " << v.n << " b] != 0" << (v.all_n ? " for every n" : "");
        else if constexpr (std::is_same_v<T, CertifiedEngelViaChain>)
          os << "Engel of degree <= " << v.bound << " (" << v.route << ")";
        else
          os << "inconclusive: " << v.reason;
      },
      verdict);
  return os.str();
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Least k with p^k >= n.
unsigned log_ceil(std::uint64_t n, std::uint32_t p) {
  unsigned k = 0;
  for (std::uint64_t v = 1; v < n; v *= p) ++k;
  return k;
}

EnvElement point_element(const RegularRep& rep, std::uint64_t u, std::size_t offset, std::size_t k) {
  const auto digits = kernels::point_digits(u, k, rep.field().p);
  FpVec v(rep.dim(), 0);
  for (std::size_t i = 0; i < k; ++i) v[offset + i] = digits[i];
  return rep.element(v);
}

/// Index j with column j of m nonzero.
std::optional<std::size_t> nonzero_column(const FpMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j)) return j;
  return std::nullopt;
}

Coeff sample_coeff(const Ring& r, std::mt19937_64& rng) {
  if (r.characteristic() == 0) return r.from_int(static_cast<long long>(rng() % 7) - 3);
  return r.from_int(static_cast<long long>(rng() % r.characteristic()));
}

}  // namespace

OracleResult engel_degree_exact(const EnvAlgebra& A, std::uint64_t budget) {
  OracleResult res;
  res.mode = OracleMode::Exact;
  res.tier = "exact-enumeration";
  if (!A.is_restricted_mode()) {
    res.verdict = Inconclusive{"exact enumeration needs the restricted enveloping algebra"};
    return res;
  }
  const std::uint32_t p = A.lie().characteristic();
  const std::size_t d = A.carrier_dim();
  if (!kernels::projective_count(d - 1, p, budget)) {
    res.verdict = Inconclusive{"budget: " + std::to_string(p) + "^" + std::to_string(d - 1) + " points exceed " +
                               std::to_string(budget)};
    return res;
  }
  RegularRep rep(A);
  if (d == 1) {
    res.verdict = EngelWithDegree{1, std::nullopt};
    return res;
  }
  // ad(1) = 0, so b ranges over the span of the other monomials.
  std::vector<FpMatrix> family(rep.basis_ads().begin() + 1, rep.basis_ads().end());
  const auto scan = kernels::scan_family_omp(family, p);
  res.budget_spent = scan.visited;
  if (scan.non_nilpotent_at) {
    EnvElement b = point_element(rep, *scan.non_nilpotent_at, 1, d - 1);
    const auto j = nonzero_column(rep.ad(rep.coords(b)).pow(d));
    res.verdict = NotEngelWitness{rep.element(rep.unit(*j)), b, d, true};
    return res;
  }
  EngelWithDegree e;
  e.n = std::max<std::size_t>(scan.max_index, 1);
  if (scan.max_index_at) e.extremal = point_element(rep, scan.max_index_at, 1, d - 1);
  res.verdict = e;
  return res;
}

OracleResult engel_witness_search(const EnvAlgebra& A, std::size_t n, std::size_t trials, unsigned degree_cap,
                                  std::uint64_t seed) {
  OracleResult res;
  res.mode = OracleMode::Sample;
  res.tier = "witness-sampling";
  std::vector<Monomial> monos;
  if (A.is_restricted_mode()) {
    for (auto& m : A.basis_monomials())
      if (m.degree() <= degree_cap) monos.push_back(m);
  } else {
    monos = EnvAlgebra::truncated(A.lie(), std::min(degree_cap, A.truncation())).basis_monomials();
  }
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    EnvElement e = A.zero();
    for (const auto& m : monos) e.add_term(m, sample_coeff(A.field(), rng));
    return e;
  };
  std::size_t lossy = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    EnvElement a = draw(), b = draw();
    ++res.budget_spent;
    if (a.is_zero() || b.is_zero()) continue;
    EnvElement c = A.iterated_commutator(a, b, static_cast<unsigned>(n));
    if (c.lossy) {
      ++lossy;
      continue;
    }
    if (!c.is_zero()) {
      res.verdict = NotEngelWitness{a, b, n, false};
      return res;
    }
  }
  std::string reason = "no witness for n = " + std::to_string(n) + " in " + std::to_string(trials) + " trials";
  if (lossy) reason += " (" + std::to_string(lossy) + " truncated)";
  res.verdict = Inconclusive{reason};
  return res;
}

OracleResult sample_non_nilpotent_ad(const RegularRep& rep, std::size_t trials, std::uint64_t seed) {
  OracleResult res;
  res.mode = OracleMode::Sample;
  res.tier = "ad-sampling";
  const std::size_t d = rep.dim();
  const std::uint32_t p = rep.field().p;
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> scratch;
  for (std::size_t t = 0; t < trials; ++t) {
    ++res.budget_spent;
    // Alternate dense and sparse draws.
    const unsigned keep = 1u << (t % 3);
    FpVec b(d, 0);
    for (std::size_t k = 1; k < d; ++k)
      if (rng() % keep == 0) b[k] = static_cast<std::uint32_t>(rng() % p);
    FpMatrix m(rep.field(), d, d);
    for (std::size_t k = 1; k < d; ++k)
      if (b[k]) m.add_scaled(rep.basis_ads()[k], b[k]);
    if (kernels::nilpotency_index(m.data().data(), d, p, scratch) != 0) continue;
    const auto j = nonzero_column(m.pow(d));
    res.verdict = NotEngelWitness{rep.element(rep.unit(*j)), rep.element(b), d, true};
    return res;
  }
  res.verdict = Inconclusive{"every sampled ad b was nilpotent (" + std::to_string(trials) + " trials)"};
  return res;
}

OracleResult chain_certificate(const RegularRep& rep, unsigned max_s) {
  OracleResult res;
  res.mode = OracleMode::Certificate;
  res.tier = "chain-certificate";
  const auto& f = rep.field();
  const std::size_t d = rep.dim();
  const EnvChain chain = rep.ideal_chain();
  res.budget_spent = chain.dims.size();
  if (!chain.terminal_zero) {
    res.verdict = Inconclusive{"commutator ideal is not nilpotent (powers stabilize at dim " +
                               std::to_string(chain.dims.back()) + ")"};
    return res;
  }
  const std::size_t t = *chain.index;
  const FpSubspace R = rep.commutator_ideal();
  const FpSubspace ZR = rep.center().sum(R);
  std::vector<FpVec> powers;
  for (std::size_t i = 1; i < d; ++i) powers.push_back(rep.unit(i));
  for (unsigned s = 0; s <= max_s; ++s) {
    bool all = std::all_of(powers.begin(), powers.end(), [&](const FpVec& v) { return ZR.contains(v); });
    if (all) {
      const unsigned m = log_ceil(t, f.p);
      res.verdict = CertifiedEngelViaChain{ipow(f.p, m + s), "chain", t, m, s};
      return res;
    }
    for (auto& v : powers) v = rep.power(v, f.p);
    ++res.budget_spent;
  }
  res.verdict = Inconclusive{"no s <= " + std::to_string(max_s) + " puts every monomial power in Z + R"};
  return res;
}

CentralPowerCheck central_power_check(const EnvAlgebra& A, unsigned k, std::uint64_t budget, std::uint64_t seed) {
  CentralPowerCheck out;
  if (!A.is_restricted_mode()) throw Error(ErrorCode::NotRestricted, "central power check runs in u(L)");
  const std::uint32_t p = A.lie().characteristic();
  const std::size_t d = A.carrier_dim();
  const std::uint64_t e = ipow(p, k);
  const std::size_t nv = d - 1;
  if (nv == 0) {
    out.holds = true;
    return out;
  }

  // Monomials of degree e in nv variables, times the carrier dimension.
  const double log_size = std::lgamma(double(nv + e) + 1) - std::lgamma(double(e) + 1) - std::lgamma(double(nv) + 1) +
                          std::log(double(d));
  if (e < 256 && log_size <= std::log(double(budget))) {
    out.tier = OracleMode::Symbolic;
    out.spent = static_cast<std::uint64_t>(std::exp(log_size));
    const Ring ring = Ring::poly(p, static_cast<std::uint32_t>(nv));
    const EnvElement w = A.generic_element(ring, std::nullopt, 0, true);
    const EnvElement pw = A.power(w, e);
    for (std::size_t g = 0; g < A.lie().dim(); ++g) {
      const EnvElement c = A.commutator(A.from_monomial(A.monomial_of_generator(g), ring.one()), pw);
      if (c.is_zero()) continue;
      std::optional<std::vector<std::uint32_t>> point;
      try {
        point = poly_find_nonzero_point(c.terms.begin()->second, budget, seed);
      } catch (const Error& err) {
        out.reason = std::string("formally non-central but no nonzero point found: ") + err.what();
        return out;
      }
      const auto monos = A.basis_monomials();
      EnvElement concrete = A.zero();
      for (std::size_t v = 0; v < nv; ++v) concrete.add_term(monos[v + 1], A.field().from_int((*point)[v]));
      out.holds = false;
      out.witness = concrete;
      return out;
    }
    out.holds = true;
    return out;
  }

  if (kernels::projective_count(nv, p, budget)) {
    out.tier = OracleMode::Exact;
    RegularRep rep(A);
    const auto table = fp_table(rep);
    std::vector<std::size_t> support(nv);
    for (std::size_t i = 0; i < nv; ++i) support[i] = i + 1;
    const auto bad = kernels::scan_power_central_omp(table, support, e, rep.center());
    out.spent = *kernels::projective_count(nv, p, budget);
    if (!bad) {
      out.holds = true;
      return out;
    }
    out.spent = kernels::representatives_upto(*bad, p);
    out.holds = false;
    out.witness = point_element(rep, *bad, 1, nv);
    return out;
  }
  out.reason = "generic element and enumeration both exceed the budget";
  return out;
}

bool verify_witness(const LieSuperalgebra& L, const NotEngelWitness& w) {
  const EnvAlgebra A = w.a.mode.restricted ? EnvAlgebra::restricted(L) : EnvAlgebra::truncated(L, w.a.mode.trunc);
  if (w.all_n && (!w.a.mode.restricted || w.n < A.carrier_dim())) return false;
  const EnvElement c = A.iterated_commutator(w.a, w.b, static_cast<unsigned>(w.n));
  return !c.is_zero() && !c.lossy;
}

OddExtensionCheck verify_odd_extension(unsigned m, std::uint32_t p) {
  OddExtensionCheck out;
  out.m = m;
  out.p = p;
  const LieSuperalgebra L = LieSuperalgebra::from_raw(gallery::odd_extension(m, p, false));
  const EnvAlgebra A = EnvAlgebra::truncated(L, m + p + 1);
  const EnvElement y = A.parse("y");
  EnvElement prod = A.one();
  out.triple_vanishes = true;
  for (unsigned i = 1; i <= m; ++i) {
    const EnvElement x = A.parse("x" + std::to_string(i));
    prod = A.multiply(prod, x);
    const EnvElement c = A.iterated_commutator(x, y, 3);
    out.triple_vanishes = out.triple_vanishes && c.is_zero();
    out.lossy = out.lossy || c.lossy;
  }
  const EnvElement c = A.iterated_commutator(prod, y, p);
  out.identity_holds = c.is_zero();
  out.lossy = out.lossy || c.lossy || prod.lossy;
  out.two_step_nonzero = !A.iterated_commutator(A.parse("x1"), y, 2).is_zero();
  return out;
}

OracleResult run_oracle(const LieSuperalgebra& L, bool restricted_setting, const OracleOptions& opts) {
  if (!restricted_setting) {
    if (opts.mode && *opts.mode != OracleMode::Sample) {
      OracleResult r;
      r.mode = *opts.mode;
      r.tier = to_string(*opts.mode);
      r.verdict = Inconclusive{"only sampling applies to U(L)"};
      return r;
    }
    const unsigned N = std::max<unsigned>(opts.trunc, opts.degree_cap * static_cast<unsigned>(opts.max_n + 1));
    const EnvAlgebra A = EnvAlgebra::truncated(L, N);
    return engel_witness_search(A, opts.max_n, opts.trials, opts.degree_cap, opts.seed);
  }

  const EnvAlgebra A = EnvAlgebra::restricted(L);
  const std::uint32_t p = L.characteristic();
  const std::size_t d = A.carrier_dim();

  auto symbolic = [&]() {
    OracleResult r;
    r.mode = OracleMode::Symbolic;
    const unsigned k = log_ceil(d, p);
    auto cp = central_power_check(A, k, opts.budget, opts.seed);
    r.tier = cp.tier == OracleMode::Symbolic ? "central-power-symbolic" : "central-power-enumeration";
    r.budget_spent = cp.spent;
    if (!cp.holds) {
      r.verdict = Inconclusive{cp.reason};
    } else if (*cp.holds) {
      r.verdict = CertifiedEngelViaChain{ipow(p, k), "central-power", 0, 0, k};
    } else {
      // Some generator g has [g, w^(p^k)] != 0, i.e. [g, p^k w] != 0.
      const EnvElement pw = A.power(*cp.witness, ipow(p, k));
      for (std::size_t g = 0; g < L.dim(); ++g) {
        const EnvElement gen = A.generator(g);
        if (!A.commutator(gen, pw).is_zero()) {
          r.verdict = NotEngelWitness{gen, *cp.witness, ipow(p, k), true};
          break;
        }
      }
    }
    return r;
  };

  if (opts.mode) {
    switch (*opts.mode) {
      case OracleMode::Exact: return engel_degree_exact(A, opts.budget);
      case OracleMode::Symbolic: return symbolic();
      case OracleMode::Certificate: return chain_certificate(RegularRep(A));
      case OracleMode::Sample: return sample_non_nilpotent_ad(RegularRep(A), opts.trials, opts.seed);
    }
  }

  if (kernels::projective_count(d - 1, p, opts.budget)) return engel_degree_exact(A, opts.budget);
  const RegularRep rep(A);
  std::uint64_t spent = 0;
  std::vector<std::string> reasons;
  for (auto tier : {0, 1, 2}) {
    OracleResult r = tier == 0 ? chain_certificate(rep) : tier == 1 ? sample_non_nilpotent_ad(rep, opts.trials, opts.seed)
                                                                      : symbolic();
    spent += r.budget_spent;
    if (!r.is_inconclusive()) {
      r.budget_spent = spent;
      return r;
    }
    reasons.push_back(r.tier + ": " + std::get<Inconclusive>(r.verdict).reason);
  }
  OracleResult r;
  r.mode = OracleMode::Sample;
  r.tier = "all-tiers";
  r.budget_spent = spent;
  std::string why;
  for (const auto& s : reasons) why += (why.empty() ? "" : "; ") + s;
  r.verdict = Inconclusive{why};
  return r;
}

}  // namespace superengel
