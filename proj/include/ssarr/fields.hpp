#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ssarr/rational.hpp"

namespace ssarr {

// ---------------------------------------------------------------------------
// Runtime field descriptor: the rationals or a prime field GF(p).
// ---------------------------------------------------------------------------

struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
  static FieldSpec prime(std::uint32_t p);

  /// Accepts "q" / "Q" / "0" for the rationals and "gf:p" / "p" for GF(p).
  static FieldSpec parse(std::string_view text);

  std::uint32_t characteristic() const { return kind == Kind::prime ? p : 0; }
  std::string label() const {
    return kind == Kind::prime ? "gf:" + std::to_string(p) : "q";
  }
  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
};

// ---------------------------------------------------------------------------
// Field implementations.  Algorithms are templated on a field object F with:
//   typename F::Elem, zero(), one(), from_int(long), add, sub, mul, div, neg,
//   inv, is_zero, eq, to_string, characteristic().
// ---------------------------------------------------------------------------

struct RationalField {
  using Elem = Rat;
  static Elem zero() { return Rat(0); }
  static Elem one() { return Rat(1); }
  static Elem from_int(long v) { return Rat(v); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem inv(const Elem& a) {
    if (a == 0) throw std::domain_error("division by zero");
    return Rat(1) / a;
  }
  static Elem div(const Elem& a, const Elem& b) { return mul(a, inv(b)); }
  static bool is_zero(const Elem& a) { return a == 0; }
  static bool eq(const Elem& a, const Elem& b) { return a == b; }
  static std::string to_string(const Elem& a) { return rational_to_string(a); }
  static std::uint32_t characteristic() { return 0; }
};

struct PrimeField {
  std::uint32_t p;
  using Elem = std::uint64_t;  // always stored reduced mod p

  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (prime < 2) throw std::invalid_argument("field characteristic must be >= 2");
    for (std::uint64_t q = 2; q * q <= prime; ++q) {
      if (prime % q == 0) {
        throw std::invalid_argument("field order " + std::to_string(prime) + " is not prime");
      }
    }
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long v) const {
    long m = v % static_cast<long>(p);
    if (m < 0) m += p;
    return static_cast<Elem>(m);
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // Fermat: a^(p-2) mod p.
    Elem result = 1, base = a;
    std::uint32_t e = p - 2;
    while (e) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return result;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  static bool is_zero(Elem a) { return a == 0; }
  static bool eq(Elem a, Elem b) { return a == b; }
  static std::string to_string(Elem a) { return std::to_string(a); }
  std::uint32_t characteristic() const { return p; }
};

// ---------------------------------------------------------------------------
// Fraction fast path: exact rationals in int64, every operation overflow
// checked.  Algorithms run here first and fall back to RationalField when a
// frac64_overflow escapes; results agree exactly whenever no overflow occurs.
// ---------------------------------------------------------------------------

struct frac64_overflow : std::runtime_error {
  frac64_overflow() : std::runtime_error("int64 fraction overflow") {}
};

struct Frac64 {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0, gcd(|num|, den) == 1
};

struct Frac64Field {
  using Elem = Frac64;

  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw frac64_overflow();
    return r;
  }
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw frac64_overflow();
    return r;
  }
  static std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw frac64_overflow();
    return -a;
  }
  static Elem make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("division by zero");
    if (d < 0) {
      n = checked_neg(n);
      d = checked_neg(d);
    }
    if (n == 0) return Frac64{0, 1};
    if (n == INT64_MIN) throw frac64_overflow();
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    return Frac64{n / g, d / g};
  }

  static Elem zero() { return Frac64{0, 1}; }
  static Elem one() { return Frac64{1, 1}; }
  static Elem from_int(long v) { return Frac64{static_cast<std::int64_t>(v), 1}; }
  static Elem add(const Elem& a, const Elem& b) {
    // Reduce cross terms first to limit growth: standard gcd trick.
    std::int64_t g = std::gcd(a.den, b.den);
    std::int64_t da = a.den / g, db = b.den / g;
    std::int64_t n = checked_add(checked_mul(a.num, db), checked_mul(b.num, da));
    std::int64_t d = checked_mul(checked_mul(da, g), db);
    return make(n, d);
  }
  static Elem neg(const Elem& a) { return Frac64{checked_neg(a.num), a.den}; }
  static Elem sub(const Elem& a, const Elem& b) { return add(a, neg(b)); }
  static Elem mul(const Elem& a, const Elem& b) {
    if (a.num == 0 || b.num == 0) return zero();
    std::int64_t an = a.num, bd = b.den, bn = b.num, ad = a.den;
    std::int64_t g1 = std::gcd(an < 0 ? -an : an, bd);
    std::int64_t g2 = std::gcd(bn < 0 ? -bn : bn, ad);
    return make(checked_mul(an / g1, bn / g2), checked_mul(ad / g2, bd / g1));
  }
  static Elem inv(const Elem& a) {
    if (a.num == 0) throw std::domain_error("division by zero");
    return make(a.den, a.num);
  }
  static Elem div(const Elem& a, const Elem& b) { return mul(a, inv(b)); }
  static bool is_zero(const Elem& a) { return a.num == 0; }
  static bool eq(const Elem& a, const Elem& b) {
    return a.num == b.num && a.den == b.den;
  }
  static std::string to_string(const Elem& a) {
    return a.den == 1 ? std::to_string(a.num)
                      : std::to_string(a.num) + "/" + std::to_string(a.den);
  }
  static std::uint32_t characteristic() { return 0; }

  static Rat to_rat(const Elem& a) { return Rat(Int(a.num), Int(a.den)); }
  static Elem from_rat(const Rat& v) {
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (num < INT64_MIN || num > INT64_MAX || den > INT64_MAX) throw frac64_overflow();
    return Frac64{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
  }
};

/// Runs `fn(field)` for the field described by `spec`.  For the rationals the
/// int64 fraction field is tried first; on overflow the computation restarts
/// with arbitrary-precision rationals.  `fn` must therefore be deterministic
/// and field-generic, and must return a field-independent result type.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::prime) return fn(PrimeField(spec.p));
  try {
    return fn(Frac64Field{});
  } catch (const frac64_overflow&) {
    return fn(RationalField{});
  }
}

}  // namespace ssarr
