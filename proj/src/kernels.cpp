#include "superengel/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include <omp.h>

namespace superengel::kernels {

std::optional<std::uint64_t> projective_count(std::size_t k, std::uint32_t p, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > (std::numeric_limits<std::uint64_t>::max() - 1) / p) return std::nullopt;
    total *= p;
  }
  std::uint64_t lines = (total - 1) / (p - 1);
  if (lines > cap) return std::nullopt;
  return lines;
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::vector<std::uint32_t> point_digits(std::uint64_t index, std::size_t k, std::uint32_t p) {
  std::vector<std::uint32_t> d(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return d;
}

bool is_line_representative(std::uint64_t index, std::uint32_t p) {
  if (index == 0) return false;
  while (index % p == 0) index /= p;
  return index % p == 1;
}

std::uint64_t representatives_upto(std::uint64_t u, std::uint32_t p) {
  // Representatives with lowest nonzero digit at position t are p^t (p q + 1).
  std::uint64_t count = 0;
  for (std::uint64_t pt = 1; pt <= u; pt *= p) {
    std::uint64_t m = u / pt;
    if (m >= 1) count += (m - 1) / p + 1;
    if (pt > u / p) break;
  }
  return count;
}

namespace {

// out = a * b for n x n matrices mod p; Acc is wide enough for n (p-1)^2.
template <class Acc>
void matmul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n,
            std::uint32_t p) {
  Acc acc[64];
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc, acc + n, Acc(0));
    for (std::size_t k = 0; k < n; ++k) {
      const Acc aik = a[i * n + k];
      if (!aik) continue;
      const std::uint32_t* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) acc[j] += aik * brow[j];
    }
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = static_cast<std::uint32_t>(acc[j] % p);
  }
}

void matmul_any(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n,
                std::uint32_t p) {
  if (n <= 64 && std::uint64_t(n) * (p - 1) * (p - 1) < (1ull << 32)) {
    matmul<std::uint32_t>(a, b, out, n, p);
  } else if (n <= 64) {
    matmul<std::uint64_t>(a, b, out, n, p);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s = (s + std::uint64_t(a[i * n + k]) * b[k * n + j]) % p;
        out[i * n + j] = static_cast<std::uint32_t>(s);
      }
  }
}

bool all_zero(const std::uint32_t* m, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (m[i]) return false;
  return true;
}

// Builds sum_i c_i D_i into out.
void combine(std::span<const FpMatrix> family, const std::vector<std::uint32_t>& c, std::uint32_t p,
             std::vector<std::uint32_t>& out) {
  const std::size_t len = out.size();
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!c[i]) continue;
    const auto& d = family[i].data();
    for (std::size_t t = 0; t < len; ++t) out[t] = (out[t] + c[i] * d[t]) % p;
  }
}

std::uint64_t total_points(std::size_t k, std::uint32_t p) { return ipow(p, k); }

}  // namespace

std::size_t nilpotency_index(const std::uint32_t* m, std::size_t n, std::uint32_t p,
                             std::vector<std::uint32_t>& scratch) {
  const std::size_t len = n * n;
  if (all_zero(m, len)) return 1;
  scratch.resize(2 * len);
  std::uint32_t* cur = scratch.data();
  std::uint32_t* nxt = scratch.data() + len;
  std::copy(m, m + len, cur);
  for (std::size_t k = 2; k <= n; ++k) {
    matmul_any(cur, m, nxt, n, p);
    if (all_zero(nxt, len)) return k;
    std::swap(cur, nxt);
  }
  return 0;
}

FamilyScan scan_family_serial(std::span<const FpMatrix> family, std::uint32_t p) {
  FamilyScan res;
  if (family.empty()) return res;
  const std::size_t n = family[0].rows();
  const std::uint64_t total = total_points(family.size(), p);
  std::vector<std::uint32_t> m(n * n), scratch;
  for (std::uint64_t u = 1; u < total; ++u) {
    if (!is_line_representative(u, p)) continue;
    ++res.visited;
    combine(family, point_digits(u, family.size(), p), p, m);
    std::size_t idx = nilpotency_index(m.data(), n, p, scratch);
    if (idx == 0) {
      res.non_nilpotent_at = u;
      res.max_index = 0;
      res.max_index_at = 0;
      return res;
    }
    if (idx > res.max_index) {
      res.max_index = idx;
      res.max_index_at = u;
    }
  }
  return res;
}

FamilyScan scan_family_omp(std::span<const FpMatrix> family, std::uint32_t p) {
  FamilyScan res;
  if (family.empty()) return res;
  const std::size_t n = family[0].rows();
  const std::uint64_t total = total_points(family.size(), p);
  std::atomic<std::uint64_t> first_bad{std::numeric_limits<std::uint64_t>::max()};
  std::size_t best_index = 0;
  std::uint64_t best_at = 0;

#pragma omp parallel
  {
    std::vector<std::uint32_t> m(n * n), scratch;
    std::size_t local_index = 0;
    std::uint64_t local_at = 0;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t su = 1; su < static_cast<std::int64_t>(total); ++su) {
      const auto u = static_cast<std::uint64_t>(su);
      if (u > first_bad.load(std::memory_order_relaxed)) continue;
      if (!is_line_representative(u, p)) continue;
      combine(family, point_digits(u, family.size(), p), p, m);
      std::size_t idx = nilpotency_index(m.data(), n, p, scratch);
      if (idx == 0) {
        std::uint64_t cur = first_bad.load();
        while (u < cur && !first_bad.compare_exchange_weak(cur, u)) {
        }
        continue;
      }
      if (idx > local_index || (idx == local_index && u < local_at)) {
        local_index = idx;
        local_at = u;
      }
    }
#pragma omp critical
    {
      if (local_index > best_index || (local_index == best_index && local_index > 0 && local_at < best_at)) {
        best_index = local_index;
        best_at = local_at;
      }
    }
  }

  const std::uint64_t bad = first_bad.load();
  if (bad != std::numeric_limits<std::uint64_t>::max()) {
    res.non_nilpotent_at = bad;
    res.visited = representatives_upto(bad, p);
    return res;
  }
  res.max_index = best_index;
  res.max_index_at = best_at;
  res.visited = representatives_upto(total - 1, p);
  return res;
}

FpVec FpAlgebraTable::multiply(const FpVec& a, const FpVec& b) const {
  std::vector<std::uint64_t> acc(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!b[j]) continue;
      const std::uint64_t s = std::uint64_t(a[i]) * b[j] % p;
      const std::uint32_t* prod = product(i, j);
      for (std::size_t k = 0; k < dim; ++k)
        if (prod[k]) acc[k] += s * prod[k];
    }
    for (auto& x : acc) x %= p;
  }
  FpVec out(dim);
  for (std::size_t k = 0; k < dim; ++k) out[k] = static_cast<std::uint32_t>(acc[k] % p);
  return out;
}

FpVec FpAlgebraTable::power(const FpVec& a, std::uint64_t e) const {
  // Caller guarantees e >= 1; the unit is not needed.
  FpVec base = a, acc;
  bool have = false;
  while (e) {
    if (e & 1) {
      acc = have ? multiply(acc, base) : base;
      have = true;
    }
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return acc;
}

namespace {

bool power_is_central(const FpAlgebraTable& alg, std::span<const std::size_t> support, std::uint64_t u,
                      std::uint64_t exponent, const FpSubspace& center) {
  auto digits = point_digits(u, support.size(), alg.p);
  FpVec w(alg.dim, 0);
  for (std::size_t i = 0; i < support.size(); ++i) w[support[i]] = digits[i];
  return center.contains(alg.power(w, exponent));
}

}  // namespace

std::optional<std::uint64_t> scan_power_central_serial(const FpAlgebraTable& alg,
                                                       std::span<const std::size_t> support,
                                                       std::uint64_t exponent, const FpSubspace& center) {
  const std::uint64_t total = total_points(support.size(), alg.p);
  for (std::uint64_t u = 1; u < total; ++u) {
    if (!is_line_representative(u, alg.p)) continue;
    if (!power_is_central(alg, support, u, exponent, center)) return u;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> scan_power_central_omp(const FpAlgebraTable& alg,
                                                    std::span<const std::size_t> support,
                                                    std::uint64_t exponent, const FpSubspace& center) {
  const std::uint64_t total = total_points(support.size(), alg.p);
  std::atomic<std::uint64_t> first_bad{std::numeric_limits<std::uint64_t>::max()};
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t su = 1; su < static_cast<std::int64_t>(total); ++su) {
    const auto u = static_cast<std::uint64_t>(su);
    if (u > first_bad.load(std::memory_order_relaxed)) continue;
    if (!is_line_representative(u, alg.p)) continue;
    if (!power_is_central(alg, support, u, exponent, center)) {
      std::uint64_t cur = first_bad.load();
      while (u < cur && !first_bad.compare_exchange_weak(cur, u)) {
      }
    }
  }
  const std::uint64_t bad = first_bad.load();
  if (bad == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return bad;
}

}  // namespace superengel::kernels
