#pragma once

#include <string>
#include <vector>

#include "ssarr/fields.hpp"

namespace ssarr {

/// Dense univariate polynomial over a field F; coefficient of x^i at c[i],
/// no trailing zeros (the zero polynomial has an empty vector).
template <class F>
struct Poly {
  std::vector<typename F::Elem> c;
};

template <class F>
void poly_trim(const F& f, Poly<F>& p) {
  while (!p.c.empty() && f.is_zero(p.c.back())) p.c.pop_back();
}

template <class F>
Poly<F> poly_from_coeffs(const F& f, std::vector<typename F::Elem> coeffs) {
  Poly<F> p{std::move(coeffs)};
  poly_trim(f, p);
  return p;
}

template <class F>
Poly<F> poly_from_ints(const F& f, const std::vector<long>& coeffs) {
  Poly<F> p;
  p.c.reserve(coeffs.size());
  for (long v : coeffs) p.c.push_back(f.from_int(v));
  poly_trim(f, p);
  return p;
}

template <class F>
bool poly_is_zero(const Poly<F>& p) {
  return p.c.empty();
}

template <class F>
int poly_degree(const Poly<F>& p) {
  return static_cast<int>(p.c.size()) - 1;
}

template <class F>
Poly<F> poly_constant(const F& f, const typename F::Elem& v) {
  Poly<F> p;
  if (!f.is_zero(v)) p.c.push_back(v);
  return p;
}

/// x^d + sign (helpers for x^d - 1 and friends).
template <class F>
Poly<F> poly_x_pow_plus_const(const F& f, int d, long constant) {
  Poly<F> p;
  p.c.assign(static_cast<std::size_t>(d) + 1, f.zero());
  p.c[0] = f.from_int(constant);
  p.c[static_cast<std::size_t>(d)] = f.one();
  poly_trim(f, p);
  return p;
}

template <class F>
bool poly_eq(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!f.eq(a.c[i], b.c[i])) return false;
  }
  return true;
}

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> out;
  out.c.resize(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = f.add(out.c[i], b.c[i]);
  poly_trim(f, out);
  return out;
}

template <class F>
Poly<F> poly_neg(const F& f, const Poly<F>& a) {
  Poly<F> out = a;
  for (auto& v : out.c) v = f.neg(v);
  return out;
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return poly_add(f, a, poly_neg(f, b));
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (poly_is_zero(a) || poly_is_zero(b)) return Poly<F>{};
  Poly<F> out;
  out.c.assign(a.c.size() + b.c.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (f.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (!f.is_zero(b.c[j])) out.c[i + j] = f.add(out.c[i + j], f.mul(a.c[i], b.c[j]));
    }
  }
  poly_trim(f, out);
  return out;
}

template <class F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, const typename F::Elem& v) {
  if (f.is_zero(v)) return Poly<F>{};
  Poly<F> out = a;
  for (auto& x : out.c) x = f.mul(x, v);
  return out;
}

template <class F>
struct PolyDivmod {
  Poly<F> q;
  Poly<F> r;
};

template <class F>
PolyDivmod<F> poly_divmod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (poly_is_zero(b)) throw std::domain_error("polynomial division by zero");
  PolyDivmod<F> out;
  out.r = a;
  const int db = poly_degree(b);
  const typename F::Elem lead_inv = f.inv(b.c.back());
  while (poly_degree(out.r) >= db) {
    const int shift = poly_degree(out.r) - db;
    const typename F::Elem coeff = f.mul(out.r.c.back(), lead_inv);
    if (static_cast<int>(out.q.c.size()) < shift + 1) out.q.c.resize(static_cast<std::size_t>(shift) + 1, f.zero());
    out.q.c[static_cast<std::size_t>(shift)] = f.add(out.q.c[static_cast<std::size_t>(shift)], coeff);
    for (int i = 0; i <= db; ++i) {
      auto& target = out.r.c[static_cast<std::size_t>(i + shift)];
      target = f.sub(target, f.mul(coeff, b.c[static_cast<std::size_t>(i)]));
    }
    poly_trim(f, out.r);
  }
  poly_trim(f, out.q);
  return out;
}

template <class F>
Poly<F> poly_monic(const F& f, const Poly<F>& a) {
  if (poly_is_zero(a)) return a;
  return poly_scale(f, a, f.inv(a.c.back()));
}

template <class F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!poly_is_zero(b)) {
    Poly<F> r = poly_divmod(f, a, b).r;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

/// Remainder of a*b mod modulus; used by the finite-field factorizer.
template <class F>
Poly<F> poly_mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& modulus) {
  return poly_divmod(f, poly_mul(f, a, b), modulus).r;
}

template <class F>
Poly<F> poly_powmod(const F& f, Poly<F> base, unsigned long e, const Poly<F>& modulus) {
  Poly<F> result = poly_constant(f, f.one());
  base = poly_divmod(f, base, modulus).r;
  while (e) {
    if (e & 1UL) result = poly_mulmod(f, result, base, modulus);
    base = poly_mulmod(f, base, base, modulus);
    e >>= 1UL;
  }
  return result;
}

/// Pretty printer: "x^3 - 2x + 1" with the given variable name.
template <class F>
std::string poly_to_string(const F& f, const Poly<F>& p, const std::string& var = "x") {
  if (poly_is_zero(p)) return "0";
  std::string out;
  for (int i = poly_degree(p); i >= 0; --i) {
    const auto& coeff = p.c[static_cast<std::size_t>(i)];
    if (f.is_zero(coeff)) continue;
    std::string cs = f.to_string(coeff);
    bool negative = false;
    if (!cs.empty() && cs[0] == '-') {
      negative = true;
      cs = cs.substr(1);
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit_coeff = cs == "1";
    if (i == 0) {
      out += cs;
    } else {
      if (!unit_coeff) out += cs;
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace ssarr
