#pragma once

// Dense matrices over GF(p), p prime, with exact row reduction. Vectors are
// rows and matrices act on the right: v -> v * A.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "solrad/error.hpp"
#include "solrad/numeric.hpp"

namespace solrad {

using gf_t = std::uint32_t;
using GfVector = std::vector<gf_t>;

inline gf_t gf_inverse(gf_t a, gf_t p) {
  // Fermat: a^(p-2).
  std::uint64_t r = 1, b = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1u) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<gf_t>(r);
}

class GfMatrix {
 public:
  GfMatrix() = default;
  GfMatrix(gf_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!is_prime(p)) throw Error(ErrorCode::ParameterOutOfRange, std::to_string(p) + " is not prime");
  }

  static GfMatrix identity(gf_t p, std::size_t n) {
    GfMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows given as vectors of equal length; entries are reduced mod p.
  static GfMatrix from_rows(gf_t p, std::size_t cols, const std::vector<GfVector>& rows) {
    GfMatrix m(p, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::DegreeMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j] % p;
    }
    return m;
  }

  gf_t modulus() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const std::vector<gf_t>& entries() const noexcept { return a_; }

  gf_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  gf_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  GfVector row(std::size_t r) const {
    return GfVector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                    a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

  friend GfMatrix operator*(const GfMatrix& x, const GfMatrix& y) {
    if (x.cols_ != y.rows_ || x.p_ != y.p_) throw Error(ErrorCode::DegreeMismatch, "matrix shapes do not match");
    GfMatrix r(x.p_, x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        std::uint64_t xik = x(i, k);
        if (!xik) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = static_cast<gf_t>((r(i, j) + xik * y(k, j)) % x.p_);
      }
    return r;
  }

  friend GfMatrix operator+(GfMatrix x, const GfMatrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] = (x.a_[i] + y.a_[i]) % x.p_;
    return x;
  }

  friend GfMatrix operator-(GfMatrix x, const GfMatrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] = (x.a_[i] + x.p_ - y.a_[i]) % x.p_;
    return x;
  }

  GfMatrix scaled(gf_t s) const {
    GfMatrix r = *this;
    for (auto& e : r.a_) e = static_cast<gf_t>(std::uint64_t{e} * s % p_);
    return r;
  }

  GfMatrix transpose() const {
    GfMatrix r(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_identity() const { return square() && *this == identity(p_, rows_); }

  bool is_scalar() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? (*this)(0, 0) : 0)) return false;
    return true;
  }

  bool is_zero() const {
    for (gf_t e : a_)
      if (e) return false;
    return true;
  }

 private:
  gf_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<gf_t> a_;
};

inline GfVector times(const GfVector& v, const GfMatrix& a) {
  GfVector r(a.cols(), 0);
  const std::uint64_t p = a.modulus();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k]) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] = static_cast<gf_t>((r[j] + std::uint64_t{v[k]} * a(k, j)) % p);
  }
  return r;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(GfMatrix& m) {
  const gf_t p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    gf_t inv = gf_inverse(m(r, c), p);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = static_cast<gf_t>(std::uint64_t{m(r, j)} * inv % p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      std::uint64_t f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = static_cast<gf_t>((m(i, j) + (p - f) * m(r, j)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(GfMatrix m) { return row_reduce(m).size(); }

/// Basis (as rows) of {x : m * x^T = 0}.
inline GfMatrix right_nullspace(GfMatrix m) {
  const gf_t p = m.modulus();
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<GfVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    GfVector x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = (p - m(i, free)) % p;
    basis.push_back(std::move(x));
  }
  return GfMatrix::from_rows(p, m.cols(), basis);
}

/// Basis (as rows) of {v : v * m = 0}.
inline GfMatrix left_nullspace(const GfMatrix& m) { return right_nullspace(m.transpose()); }

inline GfMatrix inverse(const GfMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::DegreeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  GfMatrix aug(m.modulus(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorCode::ParameterOutOfRange, "matrix is singular");
  GfMatrix r(m.modulus(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

inline gf_t determinant(GfMatrix m) {
  if (!m.square()) throw Error(ErrorCode::DegreeMismatch, "determinant of a non-square matrix");
  const gf_t p = m.modulus();
  std::uint64_t det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = (p - det) % p;
    }
    det = det * m(c, c) % p;
    gf_t inv = gf_inverse(m(c, c), p);
    for (std::size_t i = c + 1; i < n; ++i) {
      std::uint64_t f = std::uint64_t{m(i, c)} * inv % p;
      if (!f) continue;
      for (std::size_t j = c; j < n; ++j) m(i, j) = static_cast<gf_t>((m(i, j) + (p - f) * m(c, j)) % p);
    }
  }
  return static_cast<gf_t>(det);
}

/// Incrementally maintained echelon basis of a subspace of GF(p)^n.
class EchelonBasis {
 public:
  EchelonBasis(gf_t p, std::size_t n) : p_(p), n_(n) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return n_; }

  /// Residue of v after eliminating the pivots of the basis.
  GfVector reduce(GfVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::uint64_t f = v[pivots_[i]];
      if (!f) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = static_cast<gf_t>((v[j] + (p_ - f) * rows_[i][j]) % p_);
    }
    return v;
  }

  bool contains(const GfVector& v) const {
    for (gf_t e : reduce(v))
      if (e) return false;
    return true;
  }

  /// Adds v if independent; returns whether the dimension grew.
  bool add(const GfVector& v) {
    GfVector r = reduce(v);
    std::size_t piv = 0;
    while (piv < n_ && r[piv] == 0) ++piv;
    if (piv == n_) return false;
    gf_t inv = gf_inverse(r[piv], p_);
    for (auto& e : r) e = static_cast<gf_t>(std::uint64_t{e} * inv % p_);
    // Keep existing rows reduced at the new pivot.
    for (auto& row : rows_) {
      std::uint64_t f = row[piv];
      if (!f) continue;
      for (std::size_t j = 0; j < n_; ++j) row[j] = static_cast<gf_t>((row[j] + (p_ - f) * r[j]) % p_);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
  }

  const std::vector<GfVector>& rows() const noexcept { return rows_; }
  GfMatrix matrix() const { return GfMatrix::from_rows(p_, n_, rows_); }

 private:
  gf_t p_;
  std::size_t n_;
  std::vector<GfVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace solrad
