#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ssarr/fields.hpp"
#include "ssarr/linalg.hpp"
#include "ssarr/poly.hpp"
#include "ssarr/typevec.hpp"

namespace ssarr {

// The minimal free resolution underlying every chain-level oracle: the tensor
// product over blocks i of  0 -> A^{m_i} -> A -> 0  with the generator of the
// j-th summand mapping to x_j^i - 1.  Degree-k basis elements are indexed by
// a strictly increasing block subset i_1 < ... < i_k together with one line
// choice j_p per block; there are sigma_k of them, enumerated in
// lexicographic order.

struct BasisElement {
  // (block, line) pairs with blocks strictly increasing; lines are 1-based.
  std::vector<std::pair<int, int>> factors;
};

/// One formal term of the differential: entry (row, col) of d_k picks up
/// sign * (x_line^block - 1).
struct FormalEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  int block = 0;
  int line = 0;
  int sign = 1;
};

struct BasedComplex {
  TypeVector m{std::vector<long>{1}};
  std::vector<std::vector<BasisElement>> basis;  // degree 0..r
  std::vector<std::vector<FormalEntry>> diff;    // diff[k] : C_k -> C_{k-1}; diff[0] empty
  bool sign_flipped = false;

  int top() const { return static_cast<int>(basis.size()) - 1; }
  long dim(int k) const { return static_cast<long>(basis[static_cast<std::size_t>(k)].size()); }
};

/// Builds the based complex for m.  When flip_one_sign is set, the sign of
/// the first degree-2 formal entry is negated — a deliberately corrupted
/// differential used by the mutation sanity check (requires r >= 2).
/// A clean build verifies d o d = 0 formally and throws std::logic_error on
/// failure.
BasedComplex build_tensor_complex(const TypeVector& m, bool flip_one_sign = false);

/// Scalar values of a rank-one representation: values[i-1][j-1] = rho(x_j^i).
template <class F>
struct Rep {
  std::vector<std::vector<typename F::Elem>> values;

  BlockSet support(const F& f) const {
    BlockSet supp;
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (const auto& v : values[i]) {
        if (!f.eq(v, f.one())) supp.insert(static_cast<int>(i) + 1);
      }
    }
    return supp;
  }
};

/// Draws a representation with the exact support `supp`: every value in a
/// support block differs from 1, all other values equal 1.  Throws
/// std::invalid_argument when the field has no scalar other than 0 and 1
/// (GF(2)) and supp is nonempty.  Deterministic in the RNG state.
template <class F>
Rep<F> sample_rep(const F& f, const TypeVector& m, const BlockSet& supp,
                  std::mt19937_64& rng) {
  validate_block_set(m, supp);
  Rep<F> rep;
  rep.values.resize(static_cast<std::size_t>(m.r()));
  for (int i = 1; i <= m.r(); ++i) {
    auto& block = rep.values[static_cast<std::size_t>(i - 1)];
    const long mi = m.parts[static_cast<std::size_t>(i - 1)];
    if (!supp.count(i)) {
      block.assign(static_cast<std::size_t>(mi), f.one());
      continue;
    }
    if (f.characteristic() == 2) {
      throw std::invalid_argument(
          "GF(2) has no unit other than 1: nonempty support is not realizable");
    }
    for (long j = 0; j < mi; ++j) {
      // Nonzero, non-one scalar.  Over the rationals draw small fractions;
      // over GF(p) draw uniformly from {2..p-1}.
      if (f.characteristic() == 0) {
        const long num = static_cast<long>(rng() % 13) - 6;  // -6..6
        const long den = static_cast<long>(rng() % 5) + 1;   // 1..5
        typename F::Elem v = f.div(f.from_int(num), f.from_int(den));
        if (f.is_zero(v) || f.eq(v, f.one())) v = f.from_int(2);
        block.push_back(v);
      } else {
        const std::uint64_t span = f.characteristic() - 2;
        typename F::Elem v = f.from_int(static_cast<long>(2 + rng() % span));
        block.push_back(v);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Specializations.  All matrices are C_k -> C_{k-1}; index k = 1..trunc.
// ---------------------------------------------------------------------------

template <class F>
struct FieldComplex {
  std::vector<long> dims;                  // dim C_0..C_trunc
  std::vector<Mat<typename F::Elem>> d;    // d[0] unused placeholder
  int top() const { return static_cast<int>(dims.size()) - 1; }
};

/// Expanded form of the complex over K[tau]/(tau^d - 1): each group-ring
/// entry becomes a d x d circulant block, so dims are d * sigma_k and the
/// deck transformation tau acts per basis element as the cyclic shift
/// c -> c+1 (expanded index = base * d + c).
template <class F>
struct CyclicComplex {
  long order = 1;
  std::vector<long> base_dims;
  FieldComplex<F> fc;
};

template <class F>
struct LaurentComplex {
  std::vector<long> dims;
  std::vector<Mat<Poly<F>>> d;
  int top() const { return static_cast<int>(dims.size()) - 1; }
};

struct IntComplex {
  std::vector<long> dims;
  std::vector<Mat<Int>> d;
  int top() const { return static_cast<int>(dims.size()) - 1; }
};

void validate_truncation(const BasedComplex& c, int trunc);

/// (x_j^i - 1) |-> rho(x_j^i) - 1, truncated to degrees 0..trunc.
template <class F>
FieldComplex<F> specialize_local_system(const F& f, const BasedComplex& c,
                                        const Rep<F>& rep, int trunc) {
  validate_truncation(c, trunc);
  if (static_cast<int>(rep.values.size()) != c.m.r()) {
    throw std::invalid_argument("representation block count mismatch");
  }
  for (int i = 0; i < c.m.r(); ++i) {
    const auto& block = rep.values[static_cast<std::size_t>(i)];
    if (static_cast<long>(block.size()) != c.m.parts[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("representation block size mismatch");
    }
    for (const auto& v : block) {
      if (f.is_zero(v)) throw std::invalid_argument("representation value not invertible");
    }
  }
  FieldComplex<F> out;
  out.dims.resize(static_cast<std::size_t>(trunc) + 1);
  out.d.resize(static_cast<std::size_t>(trunc) + 1);
  for (int k = 0; k <= trunc; ++k) out.dims[static_cast<std::size_t>(k)] = c.dim(k);
  // d[0] is the zero map out of C_0 (no rows); kernel computations rely on
  // its column count.
  out.d[0] = Mat<typename F::Elem>(0, static_cast<std::size_t>(c.dim(0)), f.zero());
  for (int k = 1; k <= trunc; ++k) {
    Mat<typename F::Elem> mat(static_cast<std::size_t>(c.dim(k - 1)),
                              static_cast<std::size_t>(c.dim(k)), f.zero());
    for (const FormalEntry& e : c.diff[static_cast<std::size_t>(k)]) {
      const auto& value = rep.values[static_cast<std::size_t>(e.block - 1)][static_cast<std::size_t>(e.line - 1)];
      typename F::Elem term = f.sub(value, f.one());
      if (e.sign < 0) term = f.neg(term);
      mat.at(e.row, e.col) = f.add(mat.at(e.row, e.col), term);
    }
    out.d[static_cast<std::size_t>(k)] = std::move(mat);
  }
  return out;
}

/// (x - 1) |-> (tau - 1) in K[tau]/(tau^d - 1), expanded over K.
template <class F>
CyclicComplex<F> specialize_cyclic(const F& f, const BasedComplex& c, long d, int trunc) {
  validate_truncation(c, trunc);
  if (d < 1) throw std::invalid_argument("cyclic order must be >= 1");
  CyclicComplex<F> out;
  out.order = d;
  out.base_dims.resize(static_cast<std::size_t>(trunc) + 1);
  out.fc.dims.resize(static_cast<std::size_t>(trunc) + 1);
  out.fc.d.resize(static_cast<std::size_t>(trunc) + 1);
  for (int k = 0; k <= trunc; ++k) {
    out.base_dims[static_cast<std::size_t>(k)] = c.dim(k);
    out.fc.dims[static_cast<std::size_t>(k)] = c.dim(k) * d;
  }
  out.fc.d[0] = Mat<typename F::Elem>(0, static_cast<std::size_t>(c.dim(0) * d), f.zero());
  for (int k = 1; k <= trunc; ++k) {
    Mat<typename F::Elem> mat(static_cast<std::size_t>(c.dim(k - 1) * d),
                              static_cast<std::size_t>(c.dim(k) * d), f.zero());
    const std::size_t ud = static_cast<std::size_t>(d);
    for (const FormalEntry& e : c.diff[static_cast<std::size_t>(k)]) {
      const typename F::Elem plus = e.sign > 0 ? f.one() : f.neg(f.one());
      const typename F::Elem minus = f.neg(plus);
      for (std::size_t cc = 0; cc < ud; ++cc) {
        const std::size_t col = e.col * ud + cc;
        const std::size_t row_shift = e.row * ud + (cc + 1) % ud;
        const std::size_t row_same = e.row * ud + cc;
        mat.at(row_shift, col) = f.add(mat.at(row_shift, col), plus);
        mat.at(row_same, col) = f.add(mat.at(row_same, col), minus);
      }
    }
    out.fc.d[static_cast<std::size_t>(k)] = std::move(mat);
  }
  return out;
}

/// Applies the deck shift tau to an expanded column vector (dim = d * base).
template <class F>
std::vector<typename F::Elem> apply_shift(const F& f, long d,
                                          const std::vector<typename F::Elem>& v) {
  (void)f;
  const std::size_t ud = static_cast<std::size_t>(d);
  std::vector<typename F::Elem> out(v.size());
  for (std::size_t b = 0; b < v.size() / ud; ++b) {
    for (std::size_t c = 0; c < ud; ++c) {
      out[b * ud + (c + 1) % ud] = v[b * ud + c];
    }
  }
  return out;
}

/// (x - 1) |-> (t - 1) over K[t].
template <class F>
LaurentComplex<F> specialize_laurent(const F& f, const BasedComplex& c, int trunc) {
  validate_truncation(c, trunc);
  LaurentComplex<F> out;
  out.dims.resize(static_cast<std::size_t>(trunc) + 1);
  out.d.resize(static_cast<std::size_t>(trunc) + 1);
  for (int k = 0; k <= trunc; ++k) out.dims[static_cast<std::size_t>(k)] = c.dim(k);
  out.d[0] = Mat<Poly<F>>(0, static_cast<std::size_t>(c.dim(0)));
  const Poly<F> tminus1 = poly_from_ints(f, {-1, 1});
  for (int k = 1; k <= trunc; ++k) {
    Mat<Poly<F>> mat(static_cast<std::size_t>(c.dim(k - 1)),
                     static_cast<std::size_t>(c.dim(k)), Poly<F>{});
    for (const FormalEntry& e : c.diff[static_cast<std::size_t>(k)]) {
      Poly<F> term = e.sign > 0 ? tminus1 : poly_neg(f, tminus1);
      mat.at(e.row, e.col) = poly_add(f, mat.at(e.row, e.col), term);
    }
    out.d[static_cast<std::size_t>(k)] = std::move(mat);
  }
  return out;
}

/// Augmentation (x - 1) |-> 1 over the integers; always the full complex
/// (degrees 0..r).
IntComplex specialize_augmentation(const BasedComplex& c);

}  // namespace ssarr
