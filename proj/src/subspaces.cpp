#include "superengel/subspaces.hpp"

#include <algorithm>

#include "superengel/kernels.hpp"

namespace superengel {

const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::Exact: return "exact";
    case Certainty::BasisCertified: return "basis-certified";
    case Certainty::Bound: return "bound";
    case Certainty::Assumed: return "assumed";
    case Certainty::Unknown: return "unknown";
  }
  return "?";
}

namespace {

CoeffField cf(const LieSuperalgebra& L) { return CoeffField{L.field()}; }

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Coeff& c) { return c.is_zero(); });
}

// p^k when it does not exceed cap.
std::optional<std::uint64_t> bounded_power(std::uint32_t p, std::size_t k, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / p) return std::nullopt;
    total *= p;
  }
  return total;
}

// Element sum_i d_i basis_i for the digits of a projective enumeration index.
Vec combination(const LieSuperalgebra& L, const std::vector<Vec>& basis, std::uint64_t index) {
  const std::uint32_t p = L.characteristic();
  auto digits = kernels::point_digits(index, basis.size(), p);
  Vec v = L.zero_vec();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!digits[i]) continue;
    Coeff c = Coeff::fp(digits[i], p);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!basis[i][k].is_zero()) v[k] += c * basis[i][k];
  }
  return v;
}

}  // namespace

Subspace zero_space(const LieSuperalgebra& L) { return Subspace(cf(L), L.dim()); }
Subspace whole_space(const LieSuperalgebra& L) { return Subspace::whole(cf(L), L.dim()); }

Subspace even_space(const LieSuperalgebra& L) {
  Subspace s = zero_space(L);
  for (std::size_t i = 0; i < L.n_even(); ++i) s.insert(L.basis_vec(i));
  return s;
}

Subspace odd_space(const LieSuperalgebra& L) {
  Subspace s = zero_space(L);
  for (std::size_t i = L.n_even(); i < L.dim(); ++i) s.insert(L.basis_vec(i));
  return s;
}

Subspace span_of(const LieSuperalgebra& L, std::span<const Vec> gens) {
  return Subspace::span(cf(L), L.dim(), gens);
}

Subspace even_component(const LieSuperalgebra& L, const Subspace& S) {
  Subspace s = zero_space(L);
  for (const auto& v : S.basis()) s.insert(L.even_part(v));
  return s;
}

Subspace odd_component(const LieSuperalgebra& L, const Subspace& S) {
  Subspace s = zero_space(L);
  for (const auto& v : S.basis()) s.insert(L.odd_part(v));
  return s;
}

Subspace bracket_space(const LieSuperalgebra& L, const Subspace& S, const Subspace& T) {
  Subspace out = zero_space(L);
  for (const auto& s : S.basis())
    for (const auto& t : T.basis()) out.insert(L.bracket(s, t));
  return out;
}

Subspace derived_subalgebra(const LieSuperalgebra& L) {
  Subspace all = whole_space(L);
  return bracket_space(L, all, all);
}

namespace {

template <class Next>
SeriesReport run_series(const LieSuperalgebra& L, Next next) {
  SeriesReport r;
  r.chain.push_back(whole_space(L));
  while (!r.chain.back().is_zero()) {
    Subspace n = next(r.chain.back());
    if (n.dim() == r.chain.back().dim()) break;
    r.chain.push_back(std::move(n));
  }
  r.stabilized_at = r.chain.size() - 1;
  r.terminal_zero = r.chain.back().is_zero();
  if (r.terminal_zero) r.nilpotency_class = r.chain.size() - 1;
  return r;
}

}  // namespace

SeriesReport lower_central_series(const LieSuperalgebra& L) {
  Subspace all = whole_space(L);
  return run_series(L, [&](const Subspace& g) { return bracket_space(L, all, g); });
}

SeriesReport derived_series(const LieSuperalgebra& L) {
  return run_series(L, [&](const Subspace& g) { return bracket_space(L, g, g); });
}

Subspace center(const LieSuperalgebra& L) {
  std::vector<LinearOperator> ops = homogeneous_ads(L);
  // v is central iff (b, v) = 0 for every basis b, i.e. v is in the joint
  // kernel of the ad b.
  return joint_kernel(cf(L), L.dim(), std::span<const LinearOperator>(ops));
}

bool is_ideal(const LieSuperalgebra& L, const Subspace& S) {
  return S.contains(bracket_space(L, whole_space(L), S));
}

std::vector<LinearOperator> homogeneous_ads(const LieSuperalgebra& L) {
  std::vector<LinearOperator> ops;
  for (std::size_t i = 0; i < L.dim(); ++i) ops.push_back(L.ad(L.basis_vec(i)));
  return ops;
}

FpMatrix to_fp(const LinearOperator& m) {
  const Ring r = m.field().ring;
  FpMatrix out(FpField{r.characteristic()}, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = (m(i, j) + r.zero()).residue();
  return out;
}

AdNilpotency uniform_ad_nilpotency(const LieSuperalgebra& L, const Subspace& S, std::uint64_t budget) {
  AdNilpotency res;
  const auto& basis = S.basis();
  if (basis.empty()) {
    res.status = AdNilpotency::Status::Nilpotent;
    res.index = 1;
    res.certainty = Certainty::Exact;
    return res;
  }
  const std::uint32_t p = L.characteristic();

  if (p != 0 && bounded_power(p, basis.size(), budget)) {
    std::vector<FpMatrix> fam;
    for (const auto& b : basis) fam.push_back(to_fp(L.ad(b)));
    auto scan = kernels::scan_family_omp(fam, p);
    res.certainty = Certainty::Exact;
    if (scan.non_nilpotent_at) {
      res.status = AdNilpotency::Status::NotNilpotent;
      res.witness = combination(L, basis, *scan.non_nilpotent_at);
    } else {
      res.status = AdNilpotency::Status::Nilpotent;
      res.index = std::max<std::size_t>(1, scan.max_index);
    }
    res.note = "enumerated " + std::to_string(scan.visited) + " lines";
    return res;
  }

  // Basis elements first: a non-nilpotent one is an exact witness.
  std::vector<std::size_t> idx;
  for (const auto& b : basis) {
    auto k = L.ad(b).nilpotency_index();
    if (!k) {
      res.status = AdNilpotency::Status::NotNilpotent;
      res.witness = b;
      res.certainty = Certainty::Exact;
      return res;
    }
    idx.push_back(*k);
  }
  if (bracket_space(L, S, S).is_zero()) {
    // Pairwise commuting nilpotent operators: the index of a combination is
    // at most sum (k_i - 1) + 1.
    std::size_t bound = 1;
    for (auto k : idx) bound += k - 1;
    res.status = AdNilpotency::Status::Nilpotent;
    res.index = basis.size() == 1 ? idx[0] : std::min(bound, L.dim() + 1);
    res.certainty = basis.size() == 1 ? Certainty::Exact : Certainty::Bound;
    res.note = "commuting basis operators";
    return res;
  }
  res.note = p == 0 ? "characteristic 0 without commuting basis" : "enumeration exceeds budget";
  return res;
}

std::optional<std::size_t> associative_envelope_nilpotency(std::span<const LinearOperator> ops) {
  if (ops.empty()) return 1;
  const std::size_t n = ops[0].rows();
  const CoeffField f = ops[0].field();
  for (const auto& m : ops)
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "operators must share a carrier");

  using MatSpace = BasicSubspace<CoeffField>;
  auto flat = [](const LinearOperator& m) { return Vec(m.data().begin(), m.data().end()); };
  auto unflat = [&](const Vec& v) {
    LinearOperator m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
  };

  MatSpace gens(f, n * n);
  for (const auto& m : ops) gens.insert(flat(m));
  std::vector<LinearOperator> g;
  for (const auto& v : gens.basis()) g.push_back(unflat(v));
  if (g.empty()) return 1;

  // P_1 = algebra generated by the operators, P_{k+1} = ops * P_k = P_1^(k+1).
  // Products of exactly t generators vanish iff P_t = 0.
  MatSpace alg = gens;
  for (bool grew = true; grew;) {
    grew = false;
    auto cur = alg.basis();
    for (const auto& a : g)
      for (const auto& v : cur)
        if (alg.insert(flat(a * unflat(v)))) grew = true;
  }
  MatSpace P = alg;
  for (std::size_t k = 1;; ++k) {
    MatSpace next(f, n * n);
    for (const auto& a : g)
      for (const auto& v : P.basis()) next.insert(flat(a * unflat(v)));
    if (next.is_zero()) return k + 1;
    if (next.dim() == P.dim()) return std::nullopt;
    P = std::move(next);
  }
}

std::optional<std::size_t> p_orbit_length(const LieSuperalgebra& L, const Vec& x) {
  // Nonzero orbit elements of a p-nilpotent x are linearly independent in
  // L_0, so the orbit reaches 0 within dim L_0 steps if it ever does.
  Vec cur = x;
  for (std::size_t k = 0; k <= L.n_even() + 1; ++k) {
    if (vec_is_zero(cur)) return k;
    cur = L.p_map(cur);
  }
  return std::nullopt;
}

PNilpotency is_p_nilpotent(const LieSuperalgebra& L, const Subspace& S, std::uint64_t budget,
                           bool ambient_nilpotent) {
  if (!L.is_restricted()) throw Error(ErrorCode::NotRestricted, "p-nilpotency needs a restricted algebra");
  PNilpotency res;
  const auto& basis = S.basis();
  if (basis.empty()) {
    res.holds = true;
    return res;
  }
  const std::uint32_t p = L.characteristic();
  auto total = bounded_power(p, basis.size(), budget);
  if (total) {
    // (c x)^[p] = c^p x^[p], so one representative per line suffices.
    for (std::uint64_t u = 1; u < *total; ++u) {
      if (!kernels::is_line_representative(u, p)) continue;
      Vec x = combination(L, basis, u);
      auto len = p_orbit_length(L, x);
      if (!len) {
        res.holds = false;
        res.witness = x;
        return res;
      }
      res.exponent = std::max(res.exponent, *len);
    }
    res.holds = true;
    return res;
  }
  if (!ambient_nilpotent) throw Error(ErrorCode::BudgetExceeded, "p-nilpotency enumeration exceeds budget");
  res.certainty = Certainty::BasisCertified;
  for (const auto& b : basis) {
    auto len = p_orbit_length(L, b);
    if (!len) {
      res.holds = false;
      res.witness = b;
      res.certainty = Certainty::Exact;
      return res;
    }
    res.exponent = std::max(res.exponent, *len);
  }
  res.holds = true;
  return res;
}

Subspace compute_M(const LieSuperalgebra& L, std::uint64_t budget) {
  if (!L.is_restricted()) throw Error(ErrorCode::NotRestricted, "M needs a restricted algebra");
  const std::uint32_t p = L.characteristic();
  auto total = bounded_power(p, L.n_odd(), budget);
  if (!total) throw Error(ErrorCode::BudgetExceeded, "enumeration of L_1 exceeds budget");
  std::vector<Vec> odd;
  for (std::size_t i = L.n_even(); i < L.dim(); ++i) odd.push_back(L.basis_vec(i));
  Subspace M = zero_space(L);
  // (c y, c y) = c^2 (y, y): p-nilpotency is constant along lines.
  for (std::uint64_t u = 1; u < *total; ++u) {
    if (!kernels::is_line_representative(u, p)) continue;
    Vec y = combination(L, odd, u);
    if (M.contains(y)) continue;
    if (p_orbit_length(L, L.bracket(y, y))) M.insert(std::move(y));
  }
  return M;
}

Subspace ideal_closure(const LieSuperalgebra& L, const Subspace& S, bool restricted, ClosureScope scope) {
  Subspace I = S;
  const std::size_t reach = scope == ClosureScope::All ? L.dim() : L.n_even();
  for (bool grew = true; grew;) {
    grew = false;
    auto cur = I.basis();
    for (const auto& v : cur)
      for (std::size_t b = 0; b < reach; ++b)
        if (I.insert(L.bracket(L.basis_vec(b), v))) grew = true;
    if (restricted && L.is_restricted()) {
      // For a subalgebra, the p-images of an even basis span all p-images
      // modulo the subalgebra itself (Jacobson sums are brackets).
      Subspace ev = even_component(L, I);
      for (const auto& v : ev.basis())
        if (I.insert(L.p_map(v))) grew = true;
    }
  }
  return I;
}

}  // namespace superengel
