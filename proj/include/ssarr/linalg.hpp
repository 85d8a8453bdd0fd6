#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ssarr/matrix.hpp"

namespace ssarr {

// Exact dense linear algebra over a field object F (see fields.hpp).  Inner
// loops skip zero entries via per-pivot-row nonzero column lists, which is a
// large win on the sparse incidence-style matrices produced by chain
// complexes.

namespace detail {

template <class F>
std::vector<std::size_t> nonzero_cols(const F& f,
                                      const typename F::Elem* row,
                                      std::size_t cols) {
  std::vector<std::size_t> nz;
  nz.reserve(cols / 4 + 4);
  for (std::size_t j = 0; j < cols; ++j) {
    if (!f.is_zero(row[j])) nz.push_back(j);
  }
  return nz;
}

// Prefer pivots that are +-1: they keep fraction growth down and make the
// scale step free.
template <class F>
bool is_unit_entry(const F& f, const typename F::Elem& v) {
  return f.eq(v, f.one()) || f.eq(v, f.neg(f.one()));
}

}  // namespace detail

/// Forward elimination only; destroys `m`.  Returns the rank.
template <class F>
std::size_t row_echelon_rank(const F& f, Mat<typename F::Elem>& m) {
  using Elem = typename F::Elem;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = m.rows;
    for (std::size_t i = r; i < m.rows; ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      if (detail::is_unit_entry(f, m.at(i, c))) {
        piv = i;
        break;
      }
      if (piv == m.rows) piv = i;
    }
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    }
    const Elem* prow = m.row(r);
    const Elem pivinv = f.inv(prow[c]);
    std::vector<std::size_t> nz;
    for (std::size_t j = c + 1; j < m.cols; ++j) {
      if (!f.is_zero(prow[j])) nz.push_back(j);
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      Elem* row = m.row(i);
      if (f.is_zero(row[c])) continue;
      const Elem factor = f.mul(row[c], pivinv);
      row[c] = f.zero();
      for (std::size_t j : nz) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
    }
    ++r;
  }
  return r;
}

template <class F>
std::size_t rank(const F& f, Mat<typename F::Elem> m) {
  return row_echelon_rank(f, m);
}

/// Gauss-Jordan to reduced row echelon form.  Returns pivot column indices in
/// increasing order; rank is their count.
template <class F>
std::vector<std::size_t> rref_in_place(const F& f, Mat<typename F::Elem>& m) {
  using Elem = typename F::Elem;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = m.rows;
    for (std::size_t i = r; i < m.rows; ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      if (detail::is_unit_entry(f, m.at(i, c))) {
        piv = i;
        break;
      }
      if (piv == m.rows) piv = i;
    }
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    }
    Elem* prow = m.row(r);
    if (!f.eq(prow[c], f.one())) {
      const Elem pivinv = f.inv(prow[c]);
      prow[c] = f.one();
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        if (!f.is_zero(prow[j])) prow[j] = f.mul(prow[j], pivinv);
      }
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = c + 1; j < m.cols; ++j) {
      if (!f.is_zero(prow[j])) nz.push_back(j);
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Elem* row = m.row(i);
      if (f.is_zero(row[c])) continue;
      const Elem factor = row[c];
      row[c] = f.zero();
      for (std::size_t j : nz) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of the right kernel, returned as columns of an n x nullity matrix.
/// The construction has the standard property that the submatrix indexed by
/// the free columns is the identity, so a kernel vector's coordinates in this
/// basis can be read off at the free positions.
template <class F>
Mat<typename F::Elem> kernel_basis(const F& f, const Mat<typename F::Elem>& m,
                                   std::vector<std::size_t>* free_cols_out = nullptr) {
  Mat<typename F::Elem> w = m;
  const std::vector<std::size_t> pivots = rref_in_place(f, w);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Mat<typename F::Elem> ker(m.cols, free_cols.size(), f.zero());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    ker.at(fc, k) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (!f.is_zero(w.at(i, fc))) ker.at(pivots[i], k) = f.neg(w.at(i, fc));
    }
  }
  if (free_cols_out) *free_cols_out = std::move(free_cols);
  return ker;
}

/// Solve B * X = R column by column where B has full column rank.  Throws
/// std::logic_error if B is column-deficient or any system is inconsistent;
/// callers rely on this as an internal invariant check.
template <class F>
Mat<typename F::Elem> solve_columns(const F& f, const Mat<typename F::Elem>& b,
                                    const Mat<typename F::Elem>& r) {
  if (b.rows != r.rows) throw std::logic_error("solve_columns: shape mismatch");
  Mat<typename F::Elem> aug(b.rows, b.cols + r.cols, f.zero());
  for (std::size_t i = 0; i < b.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) aug.at(i, j) = b.at(i, j);
    for (std::size_t j = 0; j < r.cols; ++j) aug.at(i, b.cols + j) = r.at(i, j);
  }
  const std::vector<std::size_t> pivots = rref_in_place(f, aug);
  if (pivots.size() != b.cols || (b.cols > 0 && pivots.back() != b.cols - 1)) {
    for (std::size_t c : pivots) {
      if (c >= b.cols) throw std::logic_error("solve_columns: inconsistent system");
    }
    throw std::logic_error("solve_columns: basis matrix is column-deficient");
  }
  Mat<typename F::Elem> x(b.cols, r.cols, f.zero());
  for (std::size_t i = 0; i < b.cols; ++i) {
    for (std::size_t j = 0; j < r.cols; ++j) x.at(i, j) = aug.at(i, b.cols + j);
  }
  return x;
}

template <class F>
Mat<typename F::Elem> mat_mul(const F& f, const Mat<typename F::Elem>& a,
                              const Mat<typename F::Elem>& b) {
  if (a.cols != b.rows) throw std::logic_error("mat_mul: shape mismatch");
  Mat<typename F::Elem> out(a.rows, b.cols, f.zero());
  for (std::size_t i = 0; i < a.rows; ++i) {
    const typename F::Elem* arow = a.row(i);
    typename F::Elem* orow = out.row(i);
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (f.is_zero(arow[k])) continue;
      const typename F::Elem v = arow[k];
      const typename F::Elem* brow = b.row(k);
      for (std::size_t j = 0; j < b.cols; ++j) {
        if (!f.is_zero(brow[j])) orow[j] = f.add(orow[j], f.mul(v, brow[j]));
      }
    }
  }
  return out;
}

template <class F>
Mat<typename F::Elem> identity_matrix(const F& f, std::size_t n) {
  Mat<typename F::Elem> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <class F>
bool mat_is_zero(const F& f, const Mat<typename F::Elem>& m) {
  for (const auto& v : m.a) {
    if (!f.is_zero(v)) return false;
  }
  return true;
}

template <class F>
Mat<typename F::Elem> mat_sub(const F& f, const Mat<typename F::Elem>& a,
                              const Mat<typename F::Elem>& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::logic_error("mat_sub: shape mismatch");
  Mat<typename F::Elem> out(a.rows, a.cols, f.zero());
  for (std::size_t i = 0; i < a.a.size(); ++i) out.a[i] = f.sub(a.a[i], b.a[i]);
  return out;
}

}  // namespace ssarr
