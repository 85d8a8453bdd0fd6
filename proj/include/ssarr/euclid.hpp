#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ssarr/matrix.hpp"
#include "ssarr/poly.hpp"
#include "ssarr/rational.hpp"

namespace ssarr {

// Euclidean ring adapters for Smith normal form: arbitrary-precision integers
// and K[t] over a field.  A ring object R provides Elem, ring ops, divmod
// with a strictly norm-decreasing remainder, unit handling and a norm order.

struct IntegerRing {
  using Elem = Int;
  static Elem zero() { return Int(0); }
  static Elem one() { return Int(1); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static bool is_zero(const Elem& a) { return a == 0; }
  static bool eq(const Elem& a, const Elem& b) { return a == b; }
  static bool is_unit(const Elem& a) { return a == 1 || a == -1; }
  static std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) {
    Elem q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    return {q, r};
  }
  static bool divides(const Elem& a, const Elem& b) { return b % a == 0; }
  /// Unit u with a*u canonical (nonnegative).
  static Elem canonical_unit(const Elem& a) { return a < 0 ? Int(-1) : Int(1); }
  static Elem unit_inverse(const Elem& u) { return u; }  // +-1 are involutions
  static bool norm_less(const Elem& a, const Elem& b) {
    return boost::multiprecision::abs(a) < boost::multiprecision::abs(b);
  }
  static std::string to_string(const Elem& a) { return a.str(); }
};

template <class F>
struct PolyRing {
  F f;
  using Elem = Poly<F>;
  explicit PolyRing(F field) : f(std::move(field)) {}

  Elem zero() const { return Poly<F>{}; }
  Elem one() const { return poly_constant(f, f.one()); }
  Elem add(const Elem& a, const Elem& b) const { return poly_add(f, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return poly_sub(f, a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return poly_mul(f, a, b); }
  Elem neg(const Elem& a) const { return poly_neg(f, a); }
  bool is_zero(const Elem& a) const { return poly_is_zero(a); }
  bool eq(const Elem& a, const Elem& b) const { return poly_eq(f, a, b); }
  bool is_unit(const Elem& a) const { return poly_degree(a) == 0; }
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
    PolyDivmod<F> d = poly_divmod(f, a, b);
    return {std::move(d.q), std::move(d.r)};
  }
  bool divides(const Elem& a, const Elem& b) const {
    return poly_is_zero(poly_divmod(f, b, a).r);
  }
  Elem canonical_unit(const Elem& a) const {
    return poly_constant(f, f.inv(a.c.back()));  // makes a monic
  }
  Elem unit_inverse(const Elem& u) const {
    return poly_constant(f, f.inv(u.c[0]));
  }
  bool norm_less(const Elem& a, const Elem& b) const {
    return poly_degree(a) < poly_degree(b);
  }
  std::string to_string(const Elem& a) const { return poly_to_string(f, a); }
};

/// Smith normal form result: U * A * V = diag(factors) up to the trailing
/// zero block, each factor canonical (positive resp. monic) and dividing the
/// next.  V_inv is maintained alongside V so kernel/image coordinates can be
/// transported without a separate inversion.
template <class R>
struct SnfResult {
  std::vector<typename R::Elem> factors;
  std::size_t rank = 0;
  bool with_transforms = false;
  Mat<typename R::Elem> u;      // rows x rows
  Mat<typename R::Elem> v;      // cols x cols
  Mat<typename R::Elem> v_inv;  // cols x cols
};

template <class R>
SnfResult<R> snf_euclidean(const R& ring, Mat<typename R::Elem> a,
                           bool with_transforms = false) {
  using Elem = typename R::Elem;
  const std::size_t rows = a.rows, cols = a.cols;
  SnfResult<R> out;
  out.with_transforms = with_transforms;
  Mat<Elem>&u = out.u, &v = out.v, &vinv = out.v_inv;
  if (with_transforms) {
    u = Mat<Elem>(rows, rows, ring.zero());
    v = Mat<Elem>(cols, cols, ring.zero());
    vinv = Mat<Elem>(cols, cols, ring.zero());
    for (std::size_t i = 0; i < rows; ++i) u.at(i, i) = ring.one();
    for (std::size_t i = 0; i < cols; ++i) {
      v.at(i, i) = ring.one();
      vinv.at(i, i) = ring.one();
    }
  }

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols; ++k) std::swap(a.at(i, k), a.at(j, k));
    if (with_transforms) {
      for (std::size_t k = 0; k < rows; ++k) std::swap(u.at(i, k), u.at(j, k));
    }
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap(a.at(k, i), a.at(k, j));
    if (with_transforms) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(v.at(k, i), v.at(k, j));
      for (std::size_t k = 0; k < cols; ++k) std::swap(vinv.at(i, k), vinv.at(j, k));
    }
  };
  // row_i -= q * row_j
  auto row_sub = [&](std::size_t i, std::size_t j, const Elem& q) {
    if (ring.is_zero(q)) return;
    for (std::size_t k = 0; k < cols; ++k) {
      a.at(i, k) = ring.sub(a.at(i, k), ring.mul(q, a.at(j, k)));
    }
    if (with_transforms) {
      for (std::size_t k = 0; k < rows; ++k) {
        u.at(i, k) = ring.sub(u.at(i, k), ring.mul(q, u.at(j, k)));
      }
    }
  };
  // col_i -= q * col_j; inverse op on v_inv is row_j += q * row_i
  auto col_sub = [&](std::size_t i, std::size_t j, const Elem& q) {
    if (ring.is_zero(q)) return;
    for (std::size_t k = 0; k < rows; ++k) {
      a.at(k, i) = ring.sub(a.at(k, i), ring.mul(q, a.at(k, j)));
    }
    if (with_transforms) {
      for (std::size_t k = 0; k < cols; ++k) {
        v.at(k, i) = ring.sub(v.at(k, i), ring.mul(q, v.at(k, j)));
      }
      for (std::size_t k = 0; k < cols; ++k) {
        vinv.at(j, k) = ring.add(vinv.at(j, k), ring.mul(q, vinv.at(i, k)));
      }
    }
  };
  auto scale_row = [&](std::size_t i, const Elem& unit) {
    if (ring.eq(unit, ring.one())) return;
    for (std::size_t k = 0; k < cols; ++k) a.at(i, k) = ring.mul(a.at(i, k), unit);
    if (with_transforms) {
      for (std::size_t k = 0; k < rows; ++k) u.at(i, k) = ring.mul(u.at(i, k), unit);
    }
  };

  const std::size_t bound = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < bound; ++t) {
    // Locate a minimal-norm nonzero pivot in the trailing submatrix.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (ring.is_zero(a.at(i, j))) continue;
        if (!pivot || ring.norm_less(a.at(i, j), a.at(pivot->first, pivot->second))) {
          pivot = {{i, j}};
        }
      }
    }
    if (!pivot) break;
    swap_rows(t, pivot->first);
    swap_cols(t, pivot->second);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (ring.is_zero(a.at(i, t))) continue;
        auto [q, r] = ring.divmod(a.at(i, t), a.at(t, t));
        row_sub(i, t, q);
        if (!ring.is_zero(r)) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (ring.is_zero(a.at(t, j))) continue;
        auto [q, r] = ring.divmod(a.at(t, j), a.at(t, t));
        col_sub(j, t, q);
        if (!ring.is_zero(r)) dirty = true;
      }
      if (dirty) {
        // A strictly smaller remainder appeared somewhere in row/column t;
        // promote the smallest entry and go again.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i) {
          if (!ring.is_zero(a.at(i, t)) && ring.norm_less(a.at(i, t), a.at(bi, bj))) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t; j < cols; ++j) {
          if (!ring.is_zero(a.at(t, j)) && ring.norm_less(a.at(t, j), a.at(bi, bj))) {
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; enforce that the pivot divides the rest of
      // the submatrix so the diagonal comes out in divisibility order.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i) {
        for (std::size_t j = t + 1; j < cols && fixed; ++j) {
          if (!ring.is_zero(a.at(i, j)) && !ring.divides(a.at(t, t), a.at(i, j))) {
            row_sub(t, i, ring.neg(ring.one()));  // row_t += row_i
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
    scale_row(t, ring.canonical_unit(a.at(t, t)));
    out.factors.push_back(a.at(t, t));
  }
  out.rank = out.factors.size();
  return out;
}

}  // namespace ssarr
