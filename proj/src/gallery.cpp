#include "superengel/gallery.hpp"

#include <algorithm>
#include <numeric>

namespace superengel::gallery {

namespace {

RawTerm t(long long c, std::string b) { return {Coeff::integer(c), std::move(b)}; }

RawAlgebra base(std::uint32_t p, bool restricted) {
  RawAlgebra raw;
  raw.characteristic = p;
  raw.restricted = restricted;
  return raw;
}

}  // namespace

RawAlgebra odd_extension(unsigned m, std::uint32_t p, bool restricted) {
  RawAlgebra raw = base(p, restricted);
  for (unsigned i = 1; i <= m; ++i) raw.even_basis.push_back("x" + std::to_string(i));
  raw.odd_basis.push_back("y");
  for (unsigned i = 1; i <= m; ++i) raw.odd_basis.push_back("z" + std::to_string(i));
  for (unsigned i = 1; i <= m; ++i) {
    raw.bracket("x" + std::to_string(i), "y", {t(1, "z" + std::to_string(i))});
    if (restricted) raw.pmap("x" + std::to_string(i), {});
  }
  return raw;
}

RawAlgebra heisenberg(std::uint32_t p, bool restricted, long long zp) {
  RawAlgebra raw = base(p, restricted);
  raw.even_basis = {"x", "y", "z"};
  raw.bracket("x", "y", {t(1, "z")});
  if (restricted) {
    raw.pmap("x", {}).pmap("y", {});
    if (zp == 0)
      raw.pmap("z", {});
    else
      raw.pmap("z", {t(zp, "z")});
  }
  return raw;
}

RawAlgebra odd_square(std::uint32_t p, bool restricted) {
  RawAlgebra raw = base(p, restricted);
  raw.even_basis = {"x"};
  raw.odd_basis = {"y"};
  raw.bracket("y", "y", {t(1, "x")});
  if (restricted) raw.pmap("x", {t(1, "x")});
  return raw;
}

RawAlgebra clifford(std::uint32_t p, bool restricted) {
  RawAlgebra raw = base(p, restricted);
  raw.even_basis = {"x"};
  raw.odd_basis = {"y1", "y2"};
  raw.bracket("y1", "y1", {t(1, "x")}).bracket("y2", "y2", {t(1, "x")});
  if (restricted) raw.pmap("x", {t(1, "x")});
  return raw;
}

RawAlgebra odd_eigen(std::uint32_t p, bool restricted) {
  RawAlgebra raw = base(p, restricted);
  raw.even_basis = {"x"};
  raw.odd_basis = {"y"};
  raw.bracket("x", "y", {t(1, "y")});
  if (restricted) raw.pmap("x", {t(1, "x")});
  return raw;
}

RawAlgebra heisenberg_toral(std::uint32_t p) { return heisenberg(p, true, 1); }

std::vector<std::string> names() { return {"G1", "G2", "G3", "G4", "G5", "G6"}; }

std::optional<RawAlgebra> by_name(const std::string& name, unsigned m, std::uint32_t p, bool restricted) {
  if (name == "G1" || name == "odd-extension" || name == "example21") return odd_extension(m, p, restricted);
  if (name == "G2" || name == "heisenberg") return heisenberg(p, restricted);
  if (name == "G3" || name == "odd-square") return odd_square(p, restricted);
  if (name == "G4" || name == "clifford") return clifford(p, restricted);
  if (name == "G5" || name == "odd-eigen") return odd_eigen(p, restricted);
  if (name == "G6" || name == "heisenberg-toral") return heisenberg_toral(p);
  return std::nullopt;
}

// ------------------------------------------------------------ random corpus

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::optional<RawAlgebra> draft(std::mt19937_64& rng, std::size_t max_even, std::size_t max_odd, std::uint32_t p) {
  std::uniform_int_distribution<std::size_t> de(0, max_even), dodd(0, max_odd);
  std::size_t e = de(rng), o = dodd(rng);
  if (e + o == 0) return std::nullopt;
  RawAlgebra raw = base(p, false);
  std::vector<std::string> name;
  for (std::size_t i = 0; i < e; ++i) raw.even_basis.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < o; ++i) raw.odd_basis.push_back("y" + std::to_string(i + 1));
  name = raw.even_basis;
  name.insert(name.end(), raw.odd_basis.begin(), raw.odd_basis.end());
  const std::size_t n = e + o;
  auto odd = [&](std::size_t k) { return k >= e; };

  // Half of the drafts only bracket into later elements of a random order,
  // which makes them nilpotent.
  std::bernoulli_distribution coin(0.5), fill(0.5), entry(0.6);
  const bool graded_down = coin(rng);
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::uniform_int_distribution<std::uint32_t> nonzero(1, p - 1);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && !odd(i)) continue;
      if (!fill(rng)) continue;
      const bool want_odd = odd(i) != odd(j);
      std::vector<RawTerm> value;
      for (std::size_t k = 0; k < n; ++k) {
        if (odd(k) != want_odd) continue;
        if (graded_down && rank[k] <= std::max(rank[i], rank[j])) continue;
        if (entry(rng)) value.push_back({Coeff::fp(nonzero(rng), p), name[k]});
      }
      if (!value.empty()) raw.bracket(name[i], name[j], std::move(value));
    }
  return raw;
}

// Attaches a p-map by choosing, for every even basis x, a v in L_0 with
// ad(v) = (ad x)^p. Fails when some x admits no such v.
bool attach_pmap(RawAlgebra& raw, const LieSuperalgebra& L, std::mt19937_64& rng) {
  const std::uint32_t p = L.characteristic();
  const std::size_t e = L.n_even();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < e; ++i) total *= p;
  for (std::size_t i = 0; i < e; ++i) {
    LinearOperator target = L.ad(L.basis_vec(i)).pow(p);
    std::vector<Vec> sols;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Vec v = L.zero_vec();
      std::uint64_t r = idx;
      for (std::size_t k = 0; k < e; ++k, r /= p) v[k] = Coeff::fp(static_cast<long long>(r % p), p);
      if (L.ad(v) == target) sols.push_back(std::move(v));
    }
    if (sols.empty()) return false;
    std::uniform_int_distribution<std::size_t> pick(0, sols.size() - 1);
    const Vec& v = sols[pick(rng)];
    std::vector<RawTerm> terms;
    for (std::size_t k = 0; k < e; ++k)
      if (!v[k].is_zero()) terms.push_back({v[k], L.basis()[k].name});
    raw.pmap(L.basis()[i].name, std::move(terms));
  }
  raw.restricted = true;
  return true;
}

}  // namespace

CorpusInstance random_restricted(std::uint64_t seed, std::size_t max_even, std::size_t max_odd, std::uint32_t p) {
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0;; ++attempt) {
    auto raw = draft(rng, max_even, max_odd, p);
    if (!raw) continue;
    auto lie = LieSuperalgebra::validate(*raw);
    if (!lie.algebra) continue;
    if (!attach_pmap(*raw, *lie.algebra, rng)) continue;
    auto res = LieSuperalgebra::validate(*raw);
    if (!res.algebra) continue;
    return {seed, attempt, std::move(*res.algebra)};
  }
}

std::vector<CorpusInstance> random_corpus(std::size_t count, std::size_t max_even, std::size_t max_odd,
                                          std::uint32_t p, std::uint64_t seed) {
  std::vector<CorpusInstance> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_restricted(mix(seed * 1000003ull + k), max_even, max_odd, p));
  return out;
}

LieSuperalgebra random_rebase(const LieSuperalgebra& L, std::mt19937_64& rng) {
  const std::size_t n = L.dim(), e = L.n_even();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.begin() + e, rng);
  std::shuffle(perm.begin() + e, perm.end(), rng);
  std::vector<Coeff> scale(n);
  const std::uint32_t p = L.characteristic();
  for (auto& s : scale) {
    if (p == 0) {
      std::uniform_int_distribution<int> d(1, 3);
      std::bernoulli_distribution neg(0.5);
      s = L.field().from_int(neg(rng) ? -d(rng) : d(rng));
    } else {
      std::uniform_int_distribution<std::uint32_t> d(1, p - 1);
      s = Coeff::fp(d(rng), p);
    }
  }
  return L.rebased(perm, scale);
}

}  // namespace superengel::gallery
