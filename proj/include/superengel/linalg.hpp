#ifndef SUPERENGEL_LINALG_HPP
#define SUPERENGEL_LINALG_HPP

// Dense exact linear algebra over a field policy. Two policies exist:
// CoeffField (runtime-tagged Coeff values; F_p or Q) for the Lie superalgebra
// layer, and FpField (raw residues) for the much larger enveloping-algebra
// carriers where speed matters.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "superengel/coeffs.hpp"

namespace superengel {

struct FpField {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long n) const {
    long long r = n % static_cast<long long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t(a) * b % p);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const { return field_inverse(Coeff::fp(a, p)).residue(); }
  bool is_zero(value_type a) const { return a == 0; }
};

struct CoeffField {
  using value_type = Coeff;
  Ring ring;

  value_type zero() const { return ring.zero(); }
  value_type one() const { return ring.one(); }
  value_type from_int(long long n) const { return ring.from_int(n); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return field_inverse(a); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
};

template <class F>
using BasicVec = std::vector<typename F::value_type>;

template <class F>
bool is_zero_vec(const F& f, const BasicVec<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

/// Square or rectangular dense matrix, row-major.
template <class F>
class DenseMatrix {
 public:
  using value_type = typename F::value_type;

  DenseMatrix(F field, std::size_t rows, std::size_t cols)
      : f_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static DenseMatrix identity(F field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Builds a matrix from its columns.
  static DenseMatrix from_columns(F field, std::size_t rows, std::span<const BasicVec<F>> cols) {
    DenseMatrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  const F& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  value_type& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<value_type>& data() const { return a_; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [&](const auto& x) { return f_.is_zero(x); });
  }

  BasicVec<F> column(std::size_t j) const {
    BasicVec<F> v(rows_, f_.zero());
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  BasicVec<F> apply(const BasicVec<F>& v) const {
    BasicVec<F> out(rows_, f_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!f_.is_zero(v[j])) out[i] = f_.add(out[i], f_.mul((*this)(i, j), v[j]));
    return out;
  }

  DenseMatrix operator*(const DenseMatrix& b) const {
    if (cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
    DenseMatrix out(f_, rows_, b.cols_);
    if constexpr (std::is_same_v<F, FpField>) {
      // Accumulate unreduced; p < 2^20 keeps every partial sum inside 64 bits.
      std::vector<std::uint64_t> acc(b.cols_);
      for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
          std::uint64_t aik = (*this)(i, k);
          if (!aik) continue;
          const value_type* brow = &b.a_[k * b.cols_];
          for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += aik * brow[j];
        }
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<value_type>(acc[j] % f_.p);
      }
    } else {
      for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
          const auto& aik = (*this)(i, k);
          if (f_.is_zero(aik)) continue;
          for (std::size_t j = 0; j < b.cols_; ++j)
            out(i, j) = f_.add(out(i, j), f_.mul(aik, b(k, j)));
        }
    }
    return out;
  }

  DenseMatrix operator+(const DenseMatrix& b) const {
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.add(a_[i], b.a_[i]);
    return out;
  }

  DenseMatrix operator-(const DenseMatrix& b) const {
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.sub(a_[i], b.a_[i]);
    return out;
  }

  DenseMatrix scaled(const value_type& c) const {
    DenseMatrix out = *this;
    for (auto& x : out.a_) x = f_.mul(x, c);
    return out;
  }

  void add_scaled(const DenseMatrix& b, const value_type& c) {
    if (f_.is_zero(c)) return;
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = f_.add(a_[i], f_.mul(b.a_[i], c));
  }

  DenseMatrix pow(std::uint64_t e) const {
    DenseMatrix acc = identity(f_, rows_), base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

  /// Least k with M^k = 0, or nullopt when M is not nilpotent. The zero
  /// matrix has index 1 (and the empty 0x0 matrix too).
  std::optional<std::size_t> nilpotency_index() const {
    if (is_zero()) return 1;
    DenseMatrix powk = *this;
    for (std::size_t k = 2; k <= rows_; ++k) {
      powk = powk * (*this);
      if (powk.is_zero()) return k;
    }
    return std::nullopt;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!a.f_.is_zero(a.f_.sub(a.a_[i], b.a_[i]))) return false;
    return true;
  }

 private:
  F f_;
  std::size_t rows_, cols_;
  std::vector<value_type> a_;
};

/// Subspace of F^n kept in reduced row echelon form, so equal subspaces have
/// identical representations.
template <class F>
class BasicSubspace {
 public:
  using value_type = typename F::value_type;
  using Vec = BasicVec<F>;

  BasicSubspace(F field, std::size_t ambient) : f_(field), n_(ambient) {}

  static BasicSubspace span(F field, std::size_t ambient, std::span<const Vec> gens) {
    BasicSubspace s(field, ambient);
    for (const auto& g : gens) s.insert(g);
    return s;
  }

  static BasicSubspace whole(F field, std::size_t ambient) {
    BasicSubspace s(field, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      Vec e(ambient, field.zero());
      e[i] = field.one();
      s.insert(e);
    }
    return s;
  }

  const F& field() const { return f_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the echelon rows in place; returns true when v ends up zero.
  bool reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto c = v[pivots_[r]];
      if (f_.is_zero(c)) continue;
      const Vec& row = rows_[r];
      for (std::size_t j = pivots_[r]; j < n_; ++j)
        if (!f_.is_zero(row[j])) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
    }
    return is_zero_vec(f_, v);
  }

  bool contains(const Vec& v) const {
    Vec w = v;
    return reduce(w);
  }

  bool contains(const BasicSubspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vec& v) { return contains(v); });
  }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(Vec v) {
    if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length vs ambient");
    if (reduce(v)) return false;
    std::size_t piv = 0;
    while (f_.is_zero(v[piv])) ++piv;
    const auto inv = f_.inv(v[piv]);
    for (std::size_t j = piv; j < n_; ++j) v[j] = f_.mul(v[j], inv);
    for (auto& row : rows_) {
      const auto c = row[piv];
      if (f_.is_zero(c)) continue;
      for (std::size_t j = piv; j < n_; ++j)
        if (!f_.is_zero(v[j])) row[j] = f_.sub(row[j], f_.mul(c, v[j]));
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  BasicSubspace sum(const BasicSubspace& o) const {
    BasicSubspace s = *this;
    for (const auto& v : o.rows_) s.insert(v);
    return s;
  }

  /// Coordinates of v in the echelon basis (v must lie in the subspace).
  std::vector<value_type> coordinates(const Vec& v) const {
    std::vector<value_type> c(rows_.size(), f_.zero());
    for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    if (a.n_ != b.n_ || a.pivots_ != b.pivots_) return false;
    for (std::size_t r = 0; r < a.rows_.size(); ++r)
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!a.f_.is_zero(a.f_.sub(a.rows_[r][j], b.rows_[r][j]))) return false;
    return true;
  }

 private:
  F f_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Joint kernel { v : A v = 0 for every A in ops }.
template <class F>
BasicSubspace<F> joint_kernel(const F& f, std::size_t n, std::span<const DenseMatrix<F>> ops) {
  BasicSubspace<F> eqs(f, n);
  for (const auto& a : ops) {
    if (a.cols() != n) throw Error(ErrorCode::DimensionMismatch, "kernel operand width");
    for (std::size_t i = 0; i < a.rows() && eqs.dim() < n; ++i) {
      BasicVec<F> row(n, f.zero());
      for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
      eqs.insert(std::move(row));
    }
  }
  // Free columns of the RREF parametrize the kernel.
  std::vector<bool> is_pivot(n, false);
  for (auto p : eqs.pivots()) is_pivot[p] = true;
  BasicSubspace<F> ker(f, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BasicVec<F> v(n, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < eqs.dim(); ++r) v[eqs.pivots()[r]] = f.neg(eqs.basis()[r][free]);
    ker.insert(std::move(v));
  }
  return ker;
}

using FpMatrix = DenseMatrix<FpField>;
using FpSubspace = BasicSubspace<FpField>;
using FpVec = BasicVec<FpField>;

}  // namespace superengel

#endif  // SUPERENGEL_LINALG_HPP
