#include "superengel/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace superengel::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Coeff coeff_from_json(const json& j, const Ring& field) {
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  if (j.is_string()) return parse_coeff(j.get<std::string>(), field);
  bad("coefficient must be an integer or an \"a/b\" string, got " + j.dump());
}

json coeff_to_json(const Coeff& c) {
  if (c.is_typed() && c.ring().kind() == Ring::Kind::Rational) {
    const Rational& q = c.as_rational();
    if (denominator(q) != 1) return q.str();
  }
  if (c.is_typed() && c.ring().kind() == Ring::Kind::Fp) return c.residue();
  const std::string s = c.to_string();
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    return s;
  }
}

std::vector<RawTerm> terms_from_json(const json& j, const Ring& field) {
  if (!j.is_array()) bad("value must be a list of {\"c\", \"b\"} terms");
  std::vector<RawTerm> out;
  for (const auto& t : j) {
    if (!t.contains("c") || !t.contains("b")) bad("term needs \"c\" and \"b\": " + t.dump());
    out.push_back({coeff_from_json(t.at("c"), field), t.at("b").get<std::string>()});
  }
  return out;
}

json terms_to_json(const std::vector<RawTerm>& ts) {
  json out = json::array();
  for (const auto& t : ts) out.push_back({{"c", coeff_to_json(t.c)}, {"b", t.basis}});
  return out;
}

json space_json(const LieSuperalgebra& L, const Subspace& S) {
  json out = json::array();
  for (const auto& v : S.basis()) out.push_back(L.format(v));
  return out;
}

json dims(const std::vector<Subspace>& chain) {
  json out = json::array();
  for (const auto& s : chain) out.push_back(s.dim());
  return out;
}

json condition_json(const Condition& c) {
  json j{{"name", c.name}, {"holds", c.holds}, {"certainty", to_string(c.certainty)}};
  if (c.automatic) j["automatic"] = true;
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.note.empty()) j["note"] = c.note;
  if (!c.alternatives.empty()) {
    j["alternatives"] = json::array();
    for (const auto& a : c.alternatives) j["alternatives"].push_back(condition_json(a));
  }
  return j;
}

}  // namespace

RawAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) bad("algebra file must hold a JSON object");
  RawAlgebra raw;
  try {
    raw.characteristic = j.at("characteristic").get<std::uint32_t>();
    raw.restricted = j.value("restricted", false);
    raw.even_basis = j.value("even_basis", std::vector<std::string>{});
    raw.odd_basis = j.value("odd_basis", std::vector<std::string>{});
  } catch (const json::exception& e) {
    bad(e.what());
  }
  if (raw.characteristic == 2) throw Error(ErrorCode::CharTwoRejected, "characteristic 2 is not supported");
  if (raw.characteristic != 0 && !is_odd_prime(raw.characteristic))
    bad("characteristic must be 0 or an odd prime, got " + std::to_string(raw.characteristic));
  const Ring field = raw.field();
  for (const auto& b : j.value("brackets", json::array())) {
    if (!b.contains("left") || !b.contains("right")) bad("bracket needs \"left\" and \"right\": " + b.dump());
    raw.bracket(b.at("left").get<std::string>(), b.at("right").get<std::string>(),
                terms_from_json(b.value("value", json::array()), field));
  }
  for (const auto& p : j.value("p_map", json::array())) {
    if (!p.contains("of")) bad("p_map entry needs \"of\": " + p.dump());
    raw.pmap(p.at("of").get<std::string>(), terms_from_json(p.value("value", json::array()), field));
  }
  return raw;
}

RawAlgebra read_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
  return algebra_from_json(j);
}

json algebra_to_json(const RawAlgebra& raw) {
  json j{{"characteristic", raw.characteristic},
         {"restricted", raw.restricted},
         {"even_basis", raw.even_basis},
         {"odd_basis", raw.odd_basis}};
  j["brackets"] = json::array();
  for (const auto& b : raw.brackets)
    j["brackets"].push_back({{"left", b.left}, {"right", b.right}, {"value", terms_to_json(b.value)}});
  if (raw.restricted) {
    j["p_map"] = json::array();
    for (const auto& p : raw.p_map) j["p_map"].push_back({{"of", p.of}, {"value", terms_to_json(p.value)}});
  }
  return j;
}

void write_algebra(const RawAlgebra& raw, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << algebra_to_json(raw).dump(2) << "\n";
}

std::string digest(const RawAlgebra& raw) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : algebra_to_json(raw).dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json input_json(const RawAlgebra& raw) {
  return {{"digest", digest(raw)},
          {"characteristic", raw.characteristic},
          {"restricted", raw.restricted},
          {"dim_even", raw.even_basis.size()},
          {"dim_odd", raw.odd_basis.size()}};
}

json validation_json(const ValidationReport& r) {
  json j{{"ok", r.ok()}, {"violations", json::array()}};
  for (const auto& v : r.violations)
    j["violations"].push_back({{"axiom", v.axiom}, {"location", v.location}, {"detail", v.detail}});
  if (r.error) {
    j["error"] = to_string(*r.error);
    j["error_detail"] = r.error_detail;
  }
  return j;
}

json analysis_json(const LieSuperalgebra& L, std::uint64_t budget) {
  json j;
  j["dim_even"] = L.n_even();
  j["dim_odd"] = L.n_odd();
  auto lcs = lower_central_series(L);
  j["lower_central_series"] = dims(lcs.chain);
  j["nilpotency_class"] = lcs.nilpotency_class ? json(*lcs.nilpotency_class) : json(nullptr);
  auto ds = derived_series(L);
  j["derived_series"] = dims(ds.chain);
  j["solvable"] = ds.terminal_zero;
  j["center"] = space_json(L, center(L));
  j["even_part_abelian"] = bracket_space(L, even_space(L), even_space(L)).is_zero();
  j["odd_square"] = space_json(L, bracket_space(L, odd_space(L), odd_space(L)));
  j["even_odd"] = space_json(L, bracket_space(L, even_space(L), odd_space(L)));
  bool square_ad = true;
  for (std::size_t i = L.n_even(); i < L.dim(); ++i) square_ad = square_ad && L.check_odd_square_ad(L.basis_vec(i));
  j["odd_square_identity"] = square_ad;
  auto ads = homogeneous_ads(L);
  auto t = associative_envelope_nilpotency(ads);
  j["ad_envelope_nilpotency"] = t ? json(*t) : json(nullptr);
  if (L.is_restricted()) {
    std::uint64_t dim_u = 1;
    for (std::size_t i = 0; i < L.n_even(); ++i) dim_u *= L.characteristic();
    dim_u <<= L.n_odd();
    j["dim_u"] = dim_u;
    try {
      j["M"] = space_json(L, compute_M(L, budget));
    } catch (const Error& e) {
      j["M"] = e.what();
    }
  }
  return j;
}

EnvAlgebra witness_algebra(const LieSuperalgebra& L, const EnvElement& e) {
  return e.mode.restricted ? EnvAlgebra::restricted(L) : EnvAlgebra::truncated(L, e.mode.trunc);
}

json oracle_json(const LieSuperalgebra& L, const OracleResult& r) {
  json j{{"mode", to_string(r.mode)}, {"tier", r.tier}, {"budget_spent", r.budget_spent},
         {"proof", r.is_proof()}, {"summary", r.summary()}};
  json res;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, EngelWithDegree>) {
          res = {{"kind", "engel"}, {"n", v.n}};
          if (v.extremal) res["extremal"] = witness_algebra(L, *v.extremal).format(*v.extremal);
        } else if constexpr (std::is_same_v<T, NotEngelWitness>) {
          const EnvAlgebra A = witness_algebra(L, v.a);
          res = {{"kind", "not-engel"}, {"a", A.format(v.a)}, {"b", A.format(v.b)}, {"n", v.n}, {"all_n", v.all_n}};
          res["algebra"] = v.a.mode.restricted ? "u(L)" : "U(L) truncated at degree " + std::to_string(v.a.mode.trunc);
        } else if constexpr (std::is_same_v<T, CertifiedEngelViaChain>) {
          res = {{"kind", "engel-bound"}, {"bound", v.bound}, {"route", v.route}, {"nil_index", v.nil_index},
                 {"m", v.m}, {"s", v.s}};
        } else {
          res = {{"kind", "inconclusive"}, {"reason", v.reason}};
        }
      },
      r.verdict);
  j["result"] = res;
  return j;
}

json verdict_json(const LieSuperalgebra& L, const Verdict& v) {
  json j{{"setting", to_string(v.setting)}, {"holds", v.holds}, {"certainty", to_string(v.certainty)}};
  j["conditions"] = json::array();
  for (const auto& c : v.conditions) j["conditions"].push_back(condition_json(c));
  if (v.pi) {
    json pi{{"A", v.pi->a_label}, {"B", space_json(L, v.pi->B)}};
    if (!v.pi->flags.empty()) pi["flags"] = v.pi->flags;
    j["pi_certificate"] = pi;
  }
  if (v.engel_bound) j["engel_bound"] = *v.engel_bound;
  if (v.exponents) {
    const auto& e = *v.exponents;
    j["exponents"] = {{"nil_index", e.nil_index}, {"m", e.m},         {"s", e.s},
                      {"s_certainty", to_string(e.s_certainty)},   {"chain_s", e.chain_s}, {"bound", e.bound}};
  }
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

json cross_validation_json(const LieSuperalgebra& L, const CrossValidation& cv) {
  json j{{"verdict", verdict_json(L, cv.verdict)},
         {"oracle", oracle_json(L, cv.oracle)},
         {"agreement", to_string(cv.agreement)},
         {"explanation", cv.explanation}};
  j["lemmas"] = json::array();
  for (const auto& l : cv.lemmas) {
    json x{{"name", l.name}, {"holds", l.holds}};
    if (!l.detail.empty()) x["detail"] = l.detail;
    j["lemmas"].push_back(x);
  }
  if (cv.ordinary_companion) j["ordinary_verdict"] = cv.ordinary_companion->holds;
  return j;
}

json corpus_json(const CorpusReport& r) {
  json j{{"instances", r.entries.size()},
         {"disagreements", r.disagreements},
         {"inconclusive", r.inconclusive},
         {"lemma_failures", r.lemma_failures}};
  j["entries"] = json::array();
  for (const auto& e : r.entries) {
    json x{{"seed", e.seed},
           {"dim_u", e.dim_u},
           {"verdict", e.result.verdict.holds},
           {"certainty", to_string(e.result.verdict.certainty)},
           {"tier", e.result.oracle.tier},
           {"oracle", e.result.oracle.summary()},
           {"agreement", to_string(e.result.agreement)},
           {"lemmas_ok", e.result.lemmas_ok()}};
    if (e.result.verdict.exponents) x["bound"] = e.result.verdict.exponents->bound;
    j["entries"].push_back(x);
  }
  return j;
}

}  // namespace superengel::io
