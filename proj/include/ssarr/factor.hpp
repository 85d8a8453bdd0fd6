#pragma once

#include <vector>

#include "ssarr/linalg.hpp"
#include "ssarr/poly.hpp"

namespace ssarr {

std::vector<long> divisors_of(long n);

/// Integer coefficients of the n-th cyclotomic polynomial, computed by
/// repeated exact division of x^n - 1 by the lower cyclotomics.
std::vector<long> cyclotomic_coeffs(long n);

/// Deterministic Berlekamp factorization of a squarefree monic polynomial
/// over a small prime field.  Returns monic irreducible factors (unsorted).
template <class F>
std::vector<Poly<F>> berlekamp_squarefree(const F& f, const Poly<F>& input) {
  const int n = poly_degree(input);
  if (n <= 0) return {};
  if (n == 1) return {input};
  const std::uint32_t p = f.characteristic();
  if (p == 0) throw std::logic_error("berlekamp needs positive characteristic");

  // Frobenius matrix: column i holds x^(p*i) mod input.
  const Poly<F> xp = poly_powmod(f, poly_from_ints(f, {0, 1}),
                                 static_cast<unsigned long>(p), input);
  Mat<typename F::Elem> frob(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                             f.zero());
  Poly<F> cur = poly_constant(f, f.one());
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= poly_degree(cur); ++k) {
      frob.at(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) =
          cur.c[static_cast<std::size_t>(k)];
    }
    cur = poly_mulmod(f, cur, xp, input);
  }
  for (int i = 0; i < n; ++i) {
    auto& diag = frob.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
    diag = f.sub(diag, f.one());
  }
  const Mat<typename F::Elem> ker = kernel_basis(f, frob);
  const std::size_t target = ker.cols;  // number of irreducible factors

  std::vector<Poly<F>> factors{poly_monic(f, input)};
  for (std::size_t b = 0; b < ker.cols && factors.size() < target; ++b) {
    std::vector<typename F::Elem> coeffs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) coeffs[static_cast<std::size_t>(i)] = ker.at(static_cast<std::size_t>(i), b);
    const Poly<F> v = poly_from_coeffs(f, std::move(coeffs));
    if (poly_degree(v) < 1) continue;
    for (std::uint32_t c = 0; c < p && factors.size() < target; ++c) {
      const Poly<F> vc = poly_sub(f, v, poly_constant(f, f.from_int(static_cast<long>(c))));
      for (std::size_t idx = 0; idx < factors.size(); ++idx) {
        if (poly_degree(factors[idx]) <= 1) continue;
        const Poly<F> g = poly_gcd(f, factors[idx], vc);
        const int dg = poly_degree(g);
        if (dg > 0 && dg < poly_degree(factors[idx])) {
          const Poly<F> rest = poly_divmod(f, factors[idx], g).q;
          factors[idx] = g;
          factors.push_back(poly_monic(f, rest));
        }
      }
    }
  }
  if (factors.size() != target) {
    throw std::logic_error("berlekamp: incomplete split");
  }
  return factors;
}

template <class F>
struct IrreducibleFactor {
  Poly<F> q;  // monic irreducible
  int mult;   // multiplicity in x^d - 1
};

/// Factors x^d - 1 into monic irreducibles over F.  Over characteristic 0
/// the factors are the cyclotomics Phi_e for e | d; over GF(p), write
/// d = p^a * d' and factor x^{d'} - 1 (squarefree), every factor appearing
/// with multiplicity p^a.
template <class F>
std::vector<IrreducibleFactor<F>> factor_x_pow_d_minus_one(const F& f, long d) {
  if (d < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<IrreducibleFactor<F>> out;
  if (f.characteristic() == 0) {
    for (long e : divisors_of(d)) {
      out.push_back({poly_from_ints(f, cyclotomic_coeffs(e)), 1});
    }
    return out;
  }
  const long p = static_cast<long>(f.characteristic());
  long dprime = d;
  int mult = 1;
  while (dprime % p == 0) {
    dprime /= p;
    mult *= static_cast<int>(p);
  }
  const Poly<F> base = poly_x_pow_plus_const(f, static_cast<int>(dprime), -1);
  for (Poly<F>& q : berlekamp_squarefree(f, base)) {
    out.push_back({std::move(q), mult});
  }
  return out;
}

}  // namespace ssarr
