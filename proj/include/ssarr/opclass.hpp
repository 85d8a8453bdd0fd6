#pragma once

#include <algorithm>
#include <functional>
#include <map>

#include "ssarr/factor.hpp"
#include "ssarr/linalg.hpp"
#include "ssarr/poly.hpp"

namespace ssarr {

// Classification of a finite-order operator: given T with T^d = I acting on
// K^n, compute the invariant-factor decomposition of K^n as a K[x]-module
// (x acts by T).  Since x^d - 1 annihilates, every elementary divisor is a
// power q^e of an irreducible factor q of x^d - 1, and the multiplicities
// are determined by kernel dimensions of powers q(T)^e.

namespace detail {

/// Memoized matrix powers sharing a binary chain (T^13 costs 5 products).
template <class F>
class PowerCache {
 public:
  PowerCache(const F& f, const Mat<typename F::Elem>& t) : f_(f) {
    powers_[1] = t;
  }
  const Mat<typename F::Elem>& get(long e) {
    if (e == 0) {
      if (!powers_.count(0)) powers_[0] = identity_matrix(f_, powers_[1].rows);
      return powers_[0];
    }
    const auto it = powers_.find(e);
    if (it != powers_.end()) return it->second;
    Mat<typename F::Elem> result;
    if (e % 2 == 0) {
      const auto& half = get(e / 2);
      result = mat_mul(f_, half, half);
    } else {
      result = mat_mul(f_, get(e - 1), powers_[1]);
    }
    return powers_.emplace(e, std::move(result)).first->second;
  }

 private:
  F f_;
  std::map<long, Mat<typename F::Elem>> powers_;
};

template <class F>
Poly<F> poly_pow(const F& f, const Poly<F>& base, int e) {
  Poly<F> out = poly_constant(f, f.one());
  for (int i = 0; i < e; ++i) out = poly_mul(f, out, base);
  return out;
}

/// q(T) from cached powers of T.
template <class F>
Mat<typename F::Elem> eval_poly_at_operator(const F& f, const Poly<F>& q,
                                            PowerCache<F>& powers, std::size_t n) {
  Mat<typename F::Elem> out(n, n, f.zero());
  for (int i = 0; i <= poly_degree(q); ++i) {
    const auto& coeff = q.c[static_cast<std::size_t>(i)];
    if (f.is_zero(coeff)) continue;
    const Mat<typename F::Elem>& p = powers.get(i);
    for (std::size_t a = 0; a < n * n; ++a) {
      out.a[a] = f.add(out.a[a], f.mul(coeff, p.a[a]));
    }
  }
  return out;
}

}  // namespace detail

/// Invariant factors (ascending divisibility) of (K^n, T) with T^d = I.
/// Throws std::logic_error when the kernel bookkeeping is inconsistent with
/// T^d = I; with verify_order set, additionally checks T^d = I directly.
template <class F>
std::vector<Poly<F>> classify_finite_order_operator(const F& f,
                                                    const Mat<typename F::Elem>& t,
                                                    long d, bool verify_order = false) {
  if (t.rows != t.cols) throw std::invalid_argument("operator matrix must be square");
  if (d < 1) throw std::invalid_argument("order must be >= 1");
  const std::size_t n = t.rows;
  if (n == 0) return {};

  detail::PowerCache<F> powers(f, t);
  if (verify_order) {
    Mat<typename F::Elem> diff = mat_sub(f, powers.get(d), identity_matrix(f, n));
    if (!mat_is_zero(f, diff)) throw std::logic_error("operator order does not divide d");
  }

  const std::vector<IrreducibleFactor<F>> irreducibles = factor_x_pow_d_minus_one(f, d);
  // exponent multiset per irreducible factor index
  std::vector<std::vector<int>> exponents(irreducibles.size());

  if (f.characteristic() == 0) {
    // Over characteristic zero x^d - 1 is squarefree, so T is diagonalizable
    // and dim ker(T^e - I) = sum over f | e of dim ker Phi_f(T).  Walk the
    // divisor lattice and leave the most expensive kernel (e = d) implied.
    const std::vector<long> divs = divisors_of(d);
    std::map<long, long> nu;  // e -> dim ker Phi_e(T)
    long accounted = 0;
    for (long e : divs) {
      if (e == d) continue;
      Mat<typename F::Elem> shifted = mat_sub(f, powers.get(e), identity_matrix(f, n));
      const long ker_dim = static_cast<long>(n) - static_cast<long>(rank(f, std::move(shifted)));
      long lower = 0;
      for (long g : divisors_of(e)) {
        if (g != e) lower += nu[g];
      }
      nu[e] = ker_dim - lower;
      accounted += nu[e];
    }
    nu[d] = static_cast<long>(n) - accounted;
    for (std::size_t qi = 0; qi < irreducibles.size(); ++qi) {
      const long e = divs[qi];  // factor list is ordered by divisor
      const long nu_e = nu[e];
      const int deg = poly_degree(irreducibles[qi].q);
      if (nu_e < 0 || nu_e % deg != 0) {
        throw std::logic_error("inconsistent eigenspace dimensions (operator order?)");
      }
      exponents[qi].assign(static_cast<std::size_t>(nu_e / deg), 1);
    }
  } else {
    long total = 0;
    for (std::size_t qi = 0; qi < irreducibles.size(); ++qi) {
      const Poly<F>& q = irreducibles[qi].q;
      const int max_mult = irreducibles[qi].mult;
      const int deg = poly_degree(q);
      const Mat<typename F::Elem> q_of_t = detail::eval_poly_at_operator(f, q, powers, n);
      std::vector<long> ker_dims{0};  // N_0 = 0
      Mat<typename F::Elem> power = q_of_t;
      for (int e = 1; e <= max_mult; ++e) {
        ker_dims.push_back(static_cast<long>(n) - static_cast<long>(rank(f, power)));
        if (ker_dims[static_cast<std::size_t>(e)] == ker_dims[static_cast<std::size_t>(e - 1)]) {
          break;  // stabilized: no larger blocks
        }
        if (e < max_mult) power = mat_mul(f, power, q_of_t);
      }
      const int computed = static_cast<int>(ker_dims.size()) - 1;
      std::vector<long> ge(static_cast<std::size_t>(computed) + 2, 0);
      for (int e = 1; e <= computed; ++e) {
        const long delta = ker_dims[static_cast<std::size_t>(e)] - ker_dims[static_cast<std::size_t>(e - 1)];
        if (delta < 0 || delta % deg != 0) {
          throw std::logic_error("inconsistent kernel filtration");
        }
        ge[static_cast<std::size_t>(e)] = delta / deg;
      }
      for (int e = 1; e <= computed; ++e) {
        const long count = ge[static_cast<std::size_t>(e)] - ge[static_cast<std::size_t>(e) + 1];
        if (count < 0) throw std::logic_error("non-monotone kernel filtration");
        for (long c = 0; c < count; ++c) exponents[qi].push_back(e);
        total += count * e * deg;
      }
    }
    if (total != static_cast<long>(n)) {
      throw std::logic_error("elementary divisors do not fill the space (operator order?)");
    }
  }

  // Assemble the invariant-factor chain: sort each exponent list descending,
  // then the j-th largest factor multiplies q^(j-th largest exponent) over
  // all q.
  std::size_t chain_len = 0;
  for (auto& list : exponents) {
    std::sort(list.begin(), list.end(), std::greater<int>());
    chain_len = std::max(chain_len, list.size());
  }
  std::vector<Poly<F>> chain;
  for (std::size_t j = 0; j < chain_len; ++j) {
    Poly<F> factor = poly_constant(f, f.one());
    for (std::size_t qi = 0; qi < irreducibles.size(); ++qi) {
      if (j < exponents[qi].size()) {
        factor = poly_mul(f, factor,
                          detail::poly_pow(f, irreducibles[qi].q, exponents[qi][j]));
      }
    }
    chain.push_back(std::move(factor));
  }
  std::reverse(chain.begin(), chain.end());  // ascending divisibility
  long degree_sum = 0;
  for (const auto& factor : chain) degree_sum += poly_degree(factor);
  if (degree_sum != static_cast<long>(n)) {
    throw std::logic_error("invariant factor degrees do not sum to the dimension");
  }
  return chain;
}

}  // namespace ssarr
