#include "superengel/verdict.hpp"

#include <algorithm>

#include "superengel/gallery.hpp"

namespace superengel {

const char* to_string(Setting s) {
  switch (s) {
    case Setting::Char0: return "char0";
    case Setting::Ordinary: return "ordinary";
    case Setting::Restricted: return "restricted";
  }
  return "?";
}

std::optional<Setting> parse_setting(const std::string& s) {
  for (auto v : {Setting::Char0, Setting::Ordinary, Setting::Restricted})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

Setting default_setting(const LieSuperalgebra& L) {
  if (L.is_restricted()) return Setting::Restricted;
  return L.characteristic() == 0 ? Setting::Char0 : Setting::Ordinary;
}

const char* to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "agree";
    case Agreement::Disagree: return "disagree";
    case Agreement::Inconclusive: return "inconclusive";
  }
  return "?";
}

const Condition* Verdict::find(const std::string& name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return &c;
    for (const auto& a : c.alternatives)
      if (a.name == name) return &a;
  }
  return nullptr;
}

bool CrossValidation::lemmas_ok() const {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaCheck& l) { return l.holds; });
}

namespace {

std::string format_space(const LieSuperalgebra& L, const Subspace& S) {
  if (S.is_zero()) return "0";
  std::string out = "span{";
  for (std::size_t i = 0; i < S.basis().size(); ++i) out += (i ? ", " : "") + L.format(S.basis()[i]);
  return out + "}";
}

/// "(a, b) = c" for the first basis pair of S x T with a nonzero bracket.
std::string bracket_witness(const LieSuperalgebra& L, const Subspace& S, const Subspace& T) {
  for (const auto& s : S.basis())
    for (const auto& t : T.basis()) {
      Vec v = L.bracket(s, t);
      if (std::any_of(v.begin(), v.end(), [](const Coeff& c) { return !c.is_zero(); }))
        return "(" + L.format(s) + ", " + L.format(t) + ") = " + L.format(v);
    }
  return "";
}

int rank(Certainty c) { return static_cast<int>(c); }
Certainty worst(Certainty a, Certainty b) { return rank(a) >= rank(b) ? a : b; }

Condition zero_bracket(const LieSuperalgebra& L, std::string name, const Subspace& S, const Subspace& T) {
  Condition c;
  c.name = std::move(name);
  c.holds = bracket_space(L, S, T).is_zero();
  if (!c.holds) c.witness = bracket_witness(L, S, T);
  return c;
}

Condition nilpotent_condition(const LieSuperalgebra& L) {
  Condition c;
  c.name = "L nilpotent";
  auto series = lower_central_series(L);
  c.holds = series.terminal_zero;
  if (c.holds)
    c.note = "nilpotency class " + std::to_string(*series.nilpotency_class);
  else
    c.witness = "lower central series stabilizes at " + format_space(L, series.chain.back());
  return c;
}

Condition small_odd_branch(const LieSuperalgebra& L, const std::string& name) {
  Condition c = zero_bracket(L, name, even_space(L), odd_space(L));
  if (L.n_odd() > 1) {
    c.holds = false;
    c.witness = "dim L_1 = " + std::to_string(L.n_odd());
  }
  return c;
}

Condition disjunction(std::string name, std::vector<Condition> alts) {
  Condition c;
  c.name = std::move(name);
  c.holds = std::any_of(alts.begin(), alts.end(), [](const Condition& a) { return a.holds; });
  c.certainty = Certainty::Unknown;
  if (c.holds) {
    for (const auto& a : alts)
      if (a.holds && rank(a.certainty) < rank(c.certainty)) c.certainty = a.certainty;
  } else {
    c.certainty = Certainty::Exact;
    for (const auto& a : alts) c.certainty = worst(c.certainty, a.certainty);
  }
  c.alternatives = std::move(alts);
  return c;
}

/// Elementwise p-nilpotency of the closure of S under ad L_0 and the p-map.
Condition p_nilpotent_condition(const LieSuperalgebra& L, std::string name, const Subspace& S, bool ambient_nilpotent,
                                std::uint64_t budget) {
  Condition c;
  c.name = std::move(name);
  const Subspace closure = ideal_closure(L, S, true, ClosureScope::Even);
  c.note = "closure " + format_space(L, closure);
  try {
    auto pn = is_p_nilpotent(L, closure, budget, ambient_nilpotent);
    c.holds = pn.holds;
    c.certainty = pn.certainty;
    if (!pn.holds) c.witness = L.format(*pn.witness) + " is not p-nilpotent";
  } catch (const Error& e) {
    c.holds = false;
    c.certainty = Certainty::Unknown;
    c.note += "; " + std::string(e.what());
  }
  return c;
}

void finish(Verdict& v) {
  v.holds = std::all_of(v.conditions.begin(), v.conditions.end(), [](const Condition& c) { return c.holds; });
  v.certainty = Certainty::Exact;
  for (const auto& c : v.conditions) {
    if (c.automatic) continue;
    // A false verdict only depends on its failing conditions.
    if (v.holds || !c.holds) v.certainty = worst(v.certainty, c.certainty);
  }
  if (!v.holds) {
    Certainty best = Certainty::Unknown;
    for (const auto& c : v.conditions)
      if (!c.holds && !c.automatic && rank(c.certainty) < rank(best)) best = c.certainty;
    v.certainty = best;
  }
}

void require_odd_char(const LieSuperalgebra& L) {
  if (L.characteristic() == 0) throw Error(ErrorCode::WrongCharacteristic, "needs characteristic p > 2");
}

}  // namespace

std::optional<std::uint64_t> structural_engel_bound(const LieSuperalgebra& L) {
  if (!bracket_space(L, even_space(L), even_space(L)).is_zero()) return std::nullopt;
  auto series = lower_central_series(L);
  if (!series.terminal_zero) return std::nullopt;
  std::optional<std::uint64_t> bound;
  if (L.n_odd() <= 1 && bracket_space(L, even_space(L), odd_space(L)).is_zero()) bound = 1;
  if (!bound && bracket_space(L, odd_space(L), odd_space(L)).is_zero()) {
    // Weight each odd factor of a PBW monomial by its depth in the lower
    // central series; every commutator raises the total weight.
    std::uint64_t levels = 0;
    for (const auto& g : series.chain) levels += odd_component(L, g).dim();
    bound = levels + 1;
  }
  return bound;
}

Verdict decide_char0(const LieSuperalgebra& L) {
  if (L.characteristic() != 0) throw Error(ErrorCode::WrongCharacteristic, "needs characteristic 0");
  Verdict v;
  v.setting = Setting::Char0;
  v.conditions.push_back(zero_bracket(L, "L_0 abelian", even_space(L), even_space(L)));
  v.conditions.push_back(nilpotent_condition(L));
  Condition fin;
  fin.name = "(L, L) finite-dimensional";
  fin.holds = true;
  fin.automatic = true;
  fin.certainty = Certainty::Assumed;
  fin.note = "input is finite-dimensional";
  v.conditions.push_back(fin);
  v.conditions.push_back(disjunction(
      "odd part", {zero_bracket(L, "(L_1, L_1) = 0", odd_space(L), odd_space(L)),
                   small_odd_branch(L, "dim L_1 <= 1 and (L_0, L_1) = 0")}));
  finish(v);
  if (v.holds) {
    v.engel_bound = structural_engel_bound(L);
    v.notes.push_back("U(L) is Lie nilpotent");
  }
  return v;
}

Verdict decide_ordinary_charp(const LieSuperalgebra& L0) {
  require_odd_char(L0);
  const LieSuperalgebra L = L0.is_restricted() ? L0.forget_restriction() : L0;
  Verdict v;
  v.setting = Setting::Ordinary;
  v.conditions.push_back(zero_bracket(L, "L_0 abelian", even_space(L), even_space(L)));
  v.conditions.push_back(nilpotent_condition(L));
  v.conditions.push_back(disjunction(
      "odd part", {zero_bracket(L, "(L_1, L_1) = 0", odd_space(L), odd_space(L)),
                   small_odd_branch(L, "dim L_1 <= 1 and (L_0, L_1) = 0")}));
  const bool others = std::all_of(v.conditions.begin(), v.conditions.end(), [](const Condition& c) { return c.holds; });

  Condition pi;
  pi.name = "U(L) is PI";
  auto search = pi_witness_search(L, false);
  if (search.certificate) {
    v.pi = search.certificate;
    pi.holds = true;
    pi.witness = "A = " + search.certificate->a_label + ", B = " + format_space(L, search.certificate->B);
    for (const auto& f : search.certificate->flags) pi.note += f;
  } else if (others) {
    pi.holds = true;
    pi.certainty = Certainty::Assumed;
    pi.note = "implied by the remaining conditions";
  } else {
    pi.holds = false;
    pi.certainty = Certainty::Unknown;
    pi.note = "no certificate among the canonical candidates";
  }
  v.conditions.insert(v.conditions.begin(), pi);
  finish(v);
  if (v.holds) v.engel_bound = structural_engel_bound(L);
  return v;
}

Verdict decide_restricted(const LieSuperalgebra& L, std::uint64_t budget) {
  if (!L.is_restricted()) throw Error(ErrorCode::NotRestricted, "decide_restricted needs a p-map");
  Verdict v;
  v.setting = Setting::Restricted;
  Condition pi;
  pi.name = "u(L) is PI";
  pi.holds = true;
  pi.automatic = true;
  pi.certainty = Certainty::Assumed;
  pi.note = "u(L) is finite-dimensional";
  v.conditions.push_back(pi);
  Condition nil = nilpotent_condition(L);
  v.conditions.push_back(nil);
  v.conditions.push_back(p_nilpotent_condition(L, "(L_0, L_0) p-nilpotent",
                                               bracket_space(L, even_space(L), even_space(L)), nil.holds, budget));
  v.conditions.push_back(disjunction(
      "odd part",
      {p_nilpotent_condition(L, "(L_1, L_1) p-nilpotent", bracket_space(L, odd_space(L), odd_space(L)), nil.holds,
                             budget),
       small_odd_branch(L, "dim L_1 <= 1 and (L_1, L_0) = 0")}));
  finish(v);
  auto search = pi_witness_search(L, true, budget);
  if (search.certificate) v.pi = search.certificate;
  return v;
}

Verdict decide(const LieSuperalgebra& L, Setting s, std::uint64_t budget) {
  switch (s) {
    case Setting::Char0: return decide_char0(L);
    case Setting::Ordinary: return decide_ordinary_charp(L);
    case Setting::Restricted: return decide_restricted(L, budget);
  }
  throw Error(ErrorCode::WrongCharacteristic, "unknown setting");
}

PiSearch pi_witness_search(const LieSuperalgebra& L, bool restricted, std::uint64_t budget) {
  PiSearch out;
  std::vector<std::pair<std::string, Subspace>> base;
  base.emplace_back("L", whole_space(L));
  auto lcs = lower_central_series(L);
  for (std::size_t k = 1; k < lcs.chain.size(); ++k) base.emplace_back("gamma_" + std::to_string(k + 1), lcs.chain[k]);
  auto ds = derived_series(L);
  for (std::size_t k = 1; k < ds.chain.size(); ++k) base.emplace_back("L^(" + std::to_string(k) + ")", ds.chain[k]);
  if (is_ideal(L, even_space(L))) base.emplace_back("L_0", even_space(L));
  base.emplace_back("Z(L)", center(L));

  std::vector<std::pair<std::string, Subspace>> cands;
  auto add = [&](std::string label, Subspace S) {
    if (restricted) S = ideal_closure(L, S, true);
    for (const auto& c : cands)
      if (c.second == S) return;
    cands.emplace_back(std::move(label), std::move(S));
  };
  for (const auto& [l, S] : base) add(l, S);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j)
      add(base[i].first + " + " + base[j].first, base[i].second.sum(base[j].second));
  add("0", zero_space(L));

  for (const auto& [label, A] : cands) {
    ++out.candidates_tried;
    const Subspace B = ideal_closure(L, bracket_space(L, A, A), restricted);
    const bool B_abelian = bracket_space(L, B, B).is_zero();
    PiCertificate cert{label, A, B, {}};
    if (!restricted) {
      if (!even_component(L, B).is_zero()) continue;
      if (!B_abelian) cert.flags.push_back("B' != 0");
    } else {
      if (!B_abelian) continue;
      try {
        if (!is_p_nilpotent(L, even_component(L, B), budget).holds) continue;
      } catch (const Error&) {
        continue;
      }
    }
    out.certificate = std::move(cert);
    return out;
  }
  return out;
}

NonmatrixReport nonmatrix_pi_check(const LieSuperalgebra& L, std::uint64_t budget) {
  if (!L.is_restricted()) throw Error(ErrorCode::NotRestricted, "nonmatrix check needs a p-map");
  NonmatrixReport r;
  r.M = compute_M(L, budget);
  const bool nilpotent = lower_central_series(L).terminal_zero;

  Condition pi;
  pi.name = "u(L) is PI";
  pi.holds = true;
  pi.automatic = true;
  pi.certainty = Certainty::Assumed;
  r.conditions.push_back(pi);
  r.conditions.push_back(p_nilpotent_condition(L, "(L_0, L_0) p-nilpotent",
                                               bracket_space(L, even_space(L), even_space(L)), nilpotent, budget));
  Condition codim;
  codim.name = "dim L_1/M <= 1";
  codim.holds = L.n_odd() - r.M->dim() <= 1;
  codim.note = "M = " + format_space(L, *r.M);
  r.conditions.push_back(codim);
  r.conditions.push_back(
      p_nilpotent_condition(L, "(M, L_1) p-nilpotent", bracket_space(L, *r.M, odd_space(L)), nilpotent, budget));
  Condition inside;
  inside.name = "(L_1, L_0) in M";
  const Subspace odd_even = bracket_space(L, odd_space(L), even_space(L));
  inside.holds = r.M->contains(odd_even);
  if (!inside.holds) inside.witness = format_space(L, odd_even);
  r.conditions.push_back(inside);
  r.conditions_hold =
      std::all_of(r.conditions.begin(), r.conditions.end(), [](const Condition& c) { return c.holds; });

  const EnvAlgebra A = EnvAlgebra::restricted(L);
  if (A.carrier_dim() <= 400) {
    const auto chain = RegularRep(A).ideal_chain();
    r.chain_dims = chain.dims;
    r.commutator_ideal_nilpotent = chain.terminal_zero;
  }
  r.agreement = !r.commutator_ideal_nilpotent || *r.commutator_ideal_nilpotent == r.conditions_hold;
  return r;
}

namespace {

unsigned log_ceil(std::uint64_t n, std::uint32_t p) {
  unsigned k = 0;
  for (std::uint64_t v = 1; v < n; v *= p) ++k;
  return k;
}

void ordinary_lemmas(const LieSuperalgebra& L, std::vector<LemmaCheck>& out) {
  const Subspace L0 = even_space(L), L1 = odd_space(L);
  LemmaCheck a{"(L_0, L_0) = (L_0, L_1, L_1) = 0", false, ""};
  a.holds = bracket_space(L, L0, L0).is_zero() && bracket_space(L, bracket_space(L, L0, L1), L1).is_zero();
  out.push_back(a);
  LemmaCheck b{"(L_1, L_1) = 0 or dim L_1 <= 1", false, ""};
  b.holds = bracket_space(L, L1, L1).is_zero() || L.n_odd() <= 1;
  out.push_back(b);
}

void restricted_lemma(const LieSuperalgebra& L, std::uint64_t budget, std::vector<LemmaCheck>& out) {
  LemmaCheck c{"(L_1, L_1) p-nilpotent or dim L_1 <= 1", false, ""};
  if (L.n_odd() <= 1) {
    c.holds = true;
  } else {
    try {
      auto pn = is_p_nilpotent(L, bracket_space(L, odd_space(L), odd_space(L)), budget, true);
      c.holds = pn.holds;
      if (!pn.holds) c.detail = L.format(*pn.witness) + " is not p-nilpotent";
    } catch (const Error& e) {
      c.detail = e.what();
    }
  }
  out.push_back(c);
}

void classify(CrossValidation& cv) {
  const bool v = cv.verdict.holds;
  const auto& o = cv.oracle;
  if (o.is_inconclusive()) {
    cv.agreement = Agreement::Inconclusive;
    cv.explanation = "oracle inconclusive";
    return;
  }
  if (v && o.is_engel()) {
    cv.agreement = Agreement::Agree;
    cv.explanation = "verdict Engel, oracle " + o.summary();
  } else if (!v && o.is_witness()) {
    cv.agreement = Agreement::Agree;
    cv.explanation = "verdict not Engel, oracle " + o.summary();
  } else {
    cv.agreement = Agreement::Disagree;
    cv.explanation = std::string("verdict ") + (v ? "Engel" : "not Engel") + " but oracle " + o.summary();
  }
}

}  // namespace

CrossValidation cross_validate(const LieSuperalgebra& L, Setting s, const OracleOptions& opts) {
  CrossValidation cv;
  if (s == Setting::Restricted) {
    cv.verdict = decide_restricted(L, opts.budget);
    cv.oracle = run_oracle(L, true, opts);
    classify(cv);
    if (cv.verdict.holds) {
      restricted_lemma(L, opts.budget, cv.lemmas);
      const EnvAlgebra A = EnvAlgebra::restricted(L);
      if (A.carrier_dim() <= 400) {
        EngelExponents ex;
        const RegularRep rep(A);
        auto cert = chain_certificate(rep);
        if (auto* c = std::get_if<CertifiedEngelViaChain>(&cert.verdict)) {
          ex.nil_index = c->nil_index;
          ex.m = c->m;
          ex.chain_s = c->s;
          ex.bound = c->bound;
          auto ad = uniform_ad_nilpotency(L, even_space(L), opts.budget);
          if (ad.status == AdNilpotency::Status::Nilpotent) {
            ex.s = log_ceil(ad.index, L.characteristic());
            ex.s_certainty = ad.certainty;
          } else {
            ex.s_certainty = Certainty::Unknown;
          }
          cv.verdict.exponents = ex;
          // An exact degree above a proven bound would be a contradiction.
          if (auto* e = std::get_if<EngelWithDegree>(&cv.oracle.verdict); e && e->n > ex.bound) {
            cv.agreement = Agreement::Disagree;
            cv.explanation = "exact degree " + std::to_string(e->n) + " exceeds certified bound " +
                             std::to_string(ex.bound);
          }
        } else if (cv.agreement != Agreement::Disagree) {
          cv.verdict.notes.push_back("no commutator-ideal certificate: " + std::get<Inconclusive>(cert.verdict).reason);
        }
      }
    }
    Verdict ord = decide_ordinary_charp(L);
    if (ord.holds) ordinary_lemmas(L, cv.lemmas);
    cv.ordinary_companion = std::move(ord);
    return cv;
  }

  const LieSuperalgebra U = L.is_restricted() ? L.forget_restriction() : L;
  cv.verdict = s == Setting::Char0 ? decide_char0(U) : decide_ordinary_charp(U);
  OracleOptions o = opts;
  o.mode = OracleMode::Sample;
  if (cv.verdict.holds && cv.verdict.engel_bound) o.max_n = std::max<std::size_t>(o.max_n, *cv.verdict.engel_bound);
  cv.oracle = run_oracle(U, false, o);
  classify(cv);
  if (cv.verdict.holds && cv.oracle.is_inconclusive())
    cv.explanation = "no witness at n = " + std::to_string(o.max_n) + " (structural bound " +
                     std::to_string(cv.verdict.engel_bound.value_or(0)) + ")";
  if (cv.verdict.holds) ordinary_lemmas(U, cv.lemmas);
  return cv;
}

CorpusReport cross_validate_corpus(std::size_t count, std::size_t dim_even, std::size_t dim_odd, std::uint32_t p,
                                   std::uint64_t seed, const OracleOptions& opts) {
  const auto corpus = gallery::random_corpus(count, dim_even, dim_odd, p, seed);
  CorpusReport rep;
  rep.entries.resize(corpus.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(corpus.size()); ++i) {
    const auto& inst = corpus[static_cast<std::size_t>(i)];
    CorpusEntry& e = rep.entries[static_cast<std::size_t>(i)];
    e.seed = inst.seed;
    e.dim_u = EnvAlgebra::restricted(inst.algebra).carrier_dim();
    try {
      e.result = cross_validate(inst.algebra, Setting::Restricted, opts);
    } catch (const Error& err) {
      e.result.agreement = Agreement::Inconclusive;
      e.result.oracle.verdict = Inconclusive{err.what()};
      e.result.explanation = err.what();
    }
  }
  for (const auto& e : rep.entries) {
    if (e.result.agreement == Agreement::Disagree) ++rep.disagreements;
    if (e.result.agreement == Agreement::Inconclusive) ++rep.inconclusive;
    if (!e.result.lemmas_ok()) ++rep.lemma_failures;
  }
  return rep;
}

}  // namespace superengel
