#pragma once

#include "ssarr/euclid.hpp"
#include "ssarr/opclass.hpp"
#include "ssarr/report.hpp"
#include "ssarr/tensor_complex.hpp"

namespace ssarr {

/// Betti numbers of a specialized complex: dim C_k - rank d_k - rank d_{k+1},
/// with the truncated top degree contributing its full kernel.
template <class F>
std::vector<long> homology_dims_field(const F& f, const FieldComplex<F>& fc) {
  const int top = fc.top();
  std::vector<long> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 1; k <= top; ++k) {
    ranks[static_cast<std::size_t>(k)] = static_cast<long>(rank(f, fc.d[static_cast<std::size_t>(k)]));
  }
  std::vector<long> h(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k) {
    const long image_rank = k == top ? 0 : ranks[static_cast<std::size_t>(k) + 1];
    h[static_cast<std::size_t>(k)] =
        fc.dims[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k)] - image_rank;
    if (h[static_cast<std::size_t>(k)] < 0) {
      throw std::logic_error("negative homology dimension: complex is not a complex");
    }
  }
  return h;
}

/// Does every composite d_k o d_{k+1} vanish?
template <class F>
bool complex_squares_to_zero(const F& f, const FieldComplex<F>& fc) {
  for (int k = 1; k + 1 <= fc.top(); ++k) {
    const auto prod = mat_mul(f, fc.d[static_cast<std::size_t>(k)],
                              fc.d[static_cast<std::size_t>(k) + 1]);
    if (!mat_is_zero(f, prod)) return false;
  }
  return true;
}

namespace detail {

template <class T>
std::vector<T> matrix_column(const Mat<T>& m, std::size_t j) {
  std::vector<T> out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) out[i] = m.at(i, j);
  return out;
}

/// Summary entry from an invariant-factor chain over K[x]/(x^d - 1).
template <class F>
ModuleSummary summarize_cyclic_chain(const F& f, const std::vector<Poly<F>>& chain, long d) {
  ModuleSummary s;
  const Poly<F> xminus1 = poly_from_ints(f, {-1, 1});
  const Poly<F> full = poly_x_pow_plus_const(f, static_cast<int>(d), -1);
  for (const Poly<F>& factor : chain) {
    if (poly_eq(f, factor, xminus1)) {
      s.trivial_mult += 1;
    } else if (poly_eq(f, factor, full)) {
      s.free_mult += 1;
    } else {
      s.other_dim += poly_degree(factor);
    }
    s.invariant_factors.push_back(poly_to_string(f, factor));
  }
  s.factors_known = true;
  return s;
}

}  // namespace detail

/// Full module classification of the expanded cyclic complex: per degree,
/// compute the homology as a K-space, the induced action of the deck shift,
/// and its invariant factors.  verify_order additionally checks T^d = I.
template <class F>
GradedModuleReport module_classify_cyclic(const F& f, const CyclicComplex<F>& cc,
                                          bool verify_order = false) {
  const int top = cc.fc.top();
  const long d = cc.order;
  GradedModuleReport report;
  report.coeff = GradedModuleReport::Coeff::cyclic;
  report.order_d = d;
  report.min_degree = 0;
  report.provenance = "oracle";
  report.degrees.resize(static_cast<std::size_t>(top) + 1);

  for (int k = 0; k <= top; ++k) {
    const Mat<typename F::Elem>& dk = cc.fc.d[static_cast<std::size_t>(k)];
    std::vector<std::size_t> free_cols;
    const Mat<typename F::Elem> ker = kernel_basis(f, dk, &free_cols);
    const std::size_t n = ker.rows;
    Mat<typename F::Elem> t_op;

    if (k == top) {
      // Kernel-only degree: coordinates in the kernel basis are read off at
      // the free columns, so the shift operator costs no elimination.
      t_op = Mat<typename F::Elem>(ker.cols, ker.cols, f.zero());
      for (std::size_t j = 0; j < ker.cols; ++j) {
        const auto shifted = apply_shift(f, d, detail::matrix_column(ker, j));
        for (std::size_t i = 0; i < ker.cols; ++i) {
          t_op.at(i, j) = shifted[free_cols[i]];
        }
      }
    } else {
      const Mat<typename F::Elem>& dnext = cc.fc.d[static_cast<std::size_t>(k) + 1];
      // Select independent image columns and kernel representatives jointly.
      Mat<typename F::Elem> combined(n, dnext.cols + ker.cols, f.zero());
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dnext.cols; ++j) combined.at(i, j) = dnext.at(i, j);
        for (std::size_t j = 0; j < ker.cols; ++j) combined.at(i, dnext.cols + j) = ker.at(i, j);
      }
      const std::vector<std::size_t> pivots = rref_in_place(f, combined);
      std::vector<std::size_t> image_cols, rep_cols;
      for (std::size_t c : pivots) {
        if (c < dnext.cols) {
          image_cols.push_back(c);
        } else {
          rep_cols.push_back(c - dnext.cols);
        }
      }
      const std::size_t b = image_cols.size(), h = rep_cols.size();
      Mat<typename F::Elem> basis(n, b + h, f.zero());
      Mat<typename F::Elem> rhs(n, h, f.zero());
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < b; ++j) basis.at(i, j) = dnext.at(i, image_cols[j]);
        for (std::size_t j = 0; j < h; ++j) basis.at(i, b + j) = ker.at(i, rep_cols[j]);
      }
      for (std::size_t j = 0; j < h; ++j) {
        const auto shifted = apply_shift(f, d, detail::matrix_column(ker, rep_cols[j]));
        for (std::size_t i = 0; i < n; ++i) rhs.at(i, j) = shifted[i];
      }
      const Mat<typename F::Elem> x = solve_columns(f, basis, rhs);
      t_op = Mat<typename F::Elem>(h, h, f.zero());
      for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < h; ++j) t_op.at(i, j) = x.at(b + i, j);
      }
    }

    const std::vector<Poly<F>> chain =
        classify_finite_order_operator(f, t_op, d, verify_order);
    report.degrees[static_cast<std::size_t>(k)] = detail::summarize_cyclic_chain(f, chain, d);
  }
  return report;
}

namespace detail {

/// Laurent units are c * t^k: strip the t-power and renormalize.
template <class F>
Poly<F> strip_t_units(const F& f, const Poly<F>& p) {
  std::size_t v = 0;
  while (v < p.c.size() && f.is_zero(p.c[v])) ++v;
  Poly<F> out;
  out.c.assign(p.c.begin() + static_cast<std::ptrdiff_t>(v), p.c.end());
  return poly_monic(f, out);
}

template <class F>
void add_laurent_torsion(const F& f, const std::vector<Poly<F>>& factors,
                         ModuleSummary& s) {
  const Poly<F> tminus1 = poly_from_ints(f, {-1, 1});
  for (const Poly<F>& factor : factors) {
    const Poly<F> stripped = strip_t_units(f, factor);
    if (poly_degree(stripped) == 0) continue;  // Laurent unit
    if (poly_eq(f, stripped, tminus1)) {
      s.trivial_mult += 1;
    } else {
      s.other_dim += poly_degree(stripped);
    }
    s.invariant_factors.push_back(poly_to_string(f, stripped, "t"));
  }
  s.factors_known = true;
}

}  // namespace detail

/// Module classification over the Laurent ring, routed through Smith normal
/// form in K[t] followed by stripping t-power units.
template <class F>
GradedModuleReport module_classify_laurent(const F& f, const LaurentComplex<F>& lc) {
  const int top = lc.top();
  const PolyRing<F> ring(f);
  std::vector<SnfResult<PolyRing<F>>> snf(static_cast<std::size_t>(top) + 2);
  for (int k = 1; k <= top; ++k) {
    snf[static_cast<std::size_t>(k)] = snf_euclidean(ring, lc.d[static_cast<std::size_t>(k)]);
  }
  GradedModuleReport report;
  report.coeff = GradedModuleReport::Coeff::laurent;
  report.min_degree = 0;
  report.provenance = "oracle";
  report.degrees.resize(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    ModuleSummary& s = report.degrees[static_cast<std::size_t>(k)];
    const long rank_k = k == 0 ? 0 : static_cast<long>(snf[static_cast<std::size_t>(k)].rank);
    const long rank_next = k == top ? 0 : static_cast<long>(snf[static_cast<std::size_t>(k) + 1].rank);
    const long free = lc.dims[static_cast<std::size_t>(k)] - rank_k - rank_next;
    if (free < 0) throw std::logic_error("negative free rank: complex is not a complex");
    s.free_mult = free;
    s.factors_known = true;
    if (k < top) {
      detail::add_laurent_torsion(f, snf[static_cast<std::size_t>(k) + 1].factors, s);
    }
    if (s.free_mult > 0) report.infinite_dimensional = true;
  }
  return report;
}

/// Coinvariants of pi_s from the presentation by the next two terms of the
/// resolution: cokernel of (t - 1) * d'_{s+2} over K[t, t^-1].  When
/// s + 2 exceeds r the map is zero and the cokernel is free on C_{s+1}.
template <class F>
GradedModuleReport coinvariants_oracle_report(const F& f, const BasedComplex& c, int s) {
  validate_section(c.m, SectionSpec{s});
  if (s >= c.m.r()) {
    throw std::invalid_argument("coinvariants need s < r (pi_s vanishes when s = r)");
  }
  const long n_rows = c.dim(s + 1);
  const long n_cols = s + 2 <= c.top() ? c.dim(s + 2) : 0;
  Mat<Poly<F>> mat(static_cast<std::size_t>(n_rows), static_cast<std::size_t>(n_cols), Poly<F>{});
  if (n_cols > 0) {
    const Poly<F> tminus1 = poly_from_ints(f, {-1, 1});
    for (const FormalEntry& e : c.diff[static_cast<std::size_t>(s) + 2]) {
      const Poly<F> term = e.sign > 0 ? tminus1 : poly_neg(f, tminus1);
      mat.at(e.row, e.col) = poly_add(f, mat.at(e.row, e.col), term);
    }
  }
  const PolyRing<F> ring(f);
  const auto snf = snf_euclidean(ring, std::move(mat));
  GradedModuleReport report;
  report.coeff = GradedModuleReport::Coeff::laurent;
  report.min_degree = s;
  report.provenance = "oracle";
  report.degrees.resize(1);
  ModuleSummary& sum = report.degrees[0];
  sum.free_mult = n_rows - static_cast<long>(snf.rank);
  detail::add_laurent_torsion(f, snf.factors, sum);
  report.infinite_dimensional = sum.free_mult > 0;
  return report;
}

/// Integral homology of the augmentation complex via Smith normal form.
struct IntHomology {
  std::vector<long> free_ranks;          // degree 0..r
  std::vector<std::vector<Int>> torsion; // non-unit invariant factors per degree
};

IntHomology dprime_homology_check(const BasedComplex& c);
IntHomology dprime_homology_check(const TypeVector& m);

}  // namespace ssarr
