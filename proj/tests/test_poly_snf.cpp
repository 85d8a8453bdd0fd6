#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ssarr/euclid.hpp"
#include "ssarr/factor.hpp"

using namespace ssarr;

namespace {

Mat<Int> int_matrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values) {
  Mat<Int> m(rows, cols, Int(0));
  auto it = values.begin();
  for (auto& v : m.a) v = Int(*it++);
  return m;
}

// Independent oracle: k-th determinant divisor = gcd of all k x k minors;
// invariant factors are their successive quotients.
Int det_of(const Mat<Int>& m, const std::vector<std::size_t>& rows,
           const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  Int acc = 0;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < k; ++c) {
      if (c != j) sub_cols.push_back(cols[c]);
    }
    const Int minor = det_of(m, sub_rows, sub_cols);
    const Int term = m.at(rows[0], cols[j]) * minor;
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

std::vector<Int> factors_by_minor_gcds(const Mat<Int>& m) {
  using boost::multiprecision::gcd;
  std::vector<Int> dets{Int(1)};  // d_0 = 1
  const std::size_t bound = std::min(m.rows, m.cols);
  for (std::size_t k = 1; k <= bound; ++k) {
    Int g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    auto enum_cols = [&](auto&& self, std::size_t pos, std::size_t next) -> void {
      if (pos == k) {
        g = gcd(g, det_of(m, rows, cols));
        return;
      }
      for (std::size_t c = next; c < m.cols; ++c) {
        cols[pos] = c;
        self(self, pos + 1, c + 1);
      }
    };
    auto enum_rows = [&](auto&& self, std::size_t pos, std::size_t next) -> void {
      if (pos == k) {
        enum_cols(enum_cols, 0, 0);
        return;
      }
      for (std::size_t rr = next; rr < m.rows; ++rr) {
        rows[pos] = rr;
        self(self, pos + 1, rr + 1);
      }
    };
    enum_rows(enum_rows, 0, 0);
    if (g == 0) break;
    dets.push_back(g);
  }
  std::vector<Int> factors;
  for (std::size_t k = 1; k < dets.size(); ++k) factors.push_back(dets[k] / dets[k - 1]);
  return factors;
}

template <class R>
void check_recomposition(const R& ring, const Mat<typename R::Elem>& a) {
  const auto snf = snf_euclidean(ring, a, true);
  // U * A * V must be the diagonal of factors.
  using E = typename R::Elem;
  auto mul = [&](const Mat<E>& x, const Mat<E>& y) {
    Mat<E> out(x.rows, y.cols, ring.zero());
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t k = 0; k < x.cols; ++k)
        for (std::size_t j = 0; j < y.cols; ++j)
          out.at(i, j) = ring.add(out.at(i, j), ring.mul(x.at(i, k), y.at(k, j)));
    return out;
  };
  const Mat<E> diag = mul(mul(snf.u, a), snf.v);
  for (std::size_t i = 0; i < diag.rows; ++i) {
    for (std::size_t j = 0; j < diag.cols; ++j) {
      if (i == j && i < snf.factors.size()) {
        CHECK(ring.eq(diag.at(i, j), snf.factors[i]));
      } else {
        CHECK(ring.is_zero(diag.at(i, j)));
      }
    }
  }
  // V * V_inv = I
  const Mat<E> vv = mul(snf.v, snf.v_inv);
  for (std::size_t i = 0; i < vv.rows; ++i) {
    for (std::size_t j = 0; j < vv.cols; ++j) {
      CHECK(ring.eq(vv.at(i, j), i == j ? ring.one() : ring.zero()));
    }
  }
  // divisibility chain
  for (std::size_t i = 0; i + 1 < snf.factors.size(); ++i) {
    CHECK(ring.divides(snf.factors[i], snf.factors[i + 1]));
  }
}

}  // namespace

TEST_CASE("snf of the classic 2x2 example") {
  const auto snf = snf_euclidean(IntegerRing{}, int_matrix(2, 2, {2, 4, 6, 8}), true);
  REQUIRE(snf.factors.size() == 2);
  CHECK(snf.factors[0] == 2);
  CHECK(snf.factors[1] == 4);
  check_recomposition(IntegerRing{}, int_matrix(2, 2, {2, 4, 6, 8}));
}

TEST_CASE("snf matches the minor-gcd oracle on random integer matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    Mat<Int> m(rows, cols, Int(0));
    for (auto& v : m.a) v = Int(static_cast<long>(rng() % 19) - 9);
    const auto snf = snf_euclidean(IntegerRing{}, m);
    const std::vector<Int> expected = factors_by_minor_gcds(m);
    REQUIRE(snf.factors.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(snf.factors[i] == expected[i]);
  }
}

TEST_CASE("snf is invariant under row and column permutations") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 2 + rng() % 3, cols = 2 + rng() % 3;
    Mat<Int> m(rows, cols, Int(0));
    for (auto& v : m.a) v = Int(static_cast<long>(rng() % 15) - 7);
    std::vector<std::size_t> rp(rows), cp(cols);
    for (std::size_t i = 0; i < rows; ++i) rp[i] = i;
    for (std::size_t j = 0; j < cols; ++j) cp[j] = j;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    Mat<Int> shuffled(rows, cols, Int(0));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) shuffled.at(i, j) = m.at(rp[i], cp[j]);
    }
    const auto a = snf_euclidean(IntegerRing{}, m);
    const auto b = snf_euclidean(IntegerRing{}, shuffled);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) CHECK(a.factors[i] == b.factors[i]);
  }
}

TEST_CASE("snf recomposition certificates on random matrices") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    Mat<Int> m(rows, cols, Int(0));
    for (auto& v : m.a) v = Int(static_cast<long>(rng() % 21) - 10);
    check_recomposition(IntegerRing{}, m);
  }
}

TEST_CASE("polynomial arithmetic basics") {
  RationalField f;
  const Poly<RationalField> a = poly_from_ints(f, {-1, 0, 1});  // x^2 - 1
  const Poly<RationalField> b = poly_from_ints(f, {-1, 1});     // x - 1
  const auto dm = poly_divmod(f, a, b);
  CHECK(poly_eq(f, dm.q, poly_from_ints(f, {1, 1})));
  CHECK(poly_is_zero(dm.r));
  CHECK(poly_eq(f, poly_gcd(f, a, b), b));
  CHECK(poly_to_string(f, a) == "x^2 - 1");
  CHECK(poly_to_string(f, poly_from_ints(f, {2, -3, 0, 1}), "t") == "t^3 - 3t + 2");
}

TEST_CASE("snf over a polynomial ring") {
  RationalField f;
  const PolyRing<RationalField> ring(f);
  // diag-able example: [[t-1, 0], [0, (t-1)(t+1)]] scrambled by row op
  Mat<Poly<RationalField>> m(2, 2, Poly<RationalField>{});
  m.at(0, 0) = poly_from_ints(f, {-1, 1});
  m.at(1, 0) = poly_from_ints(f, {-1, 1});
  m.at(1, 1) = poly_from_ints(f, {-1, 0, 1});
  const auto snf = snf_euclidean(ring, m, true);
  REQUIRE(snf.factors.size() == 2);
  CHECK(poly_to_string(f, snf.factors[0]) == "x - 1");
  CHECK(poly_to_string(f, snf.factors[1]) == "x^2 - 1");
  check_recomposition(ring, m);
}

TEST_CASE("snf over GF(2)[t]") {
  PrimeField f(2);
  const PolyRing<PrimeField> ring(f);
  Mat<Poly<PrimeField>> m(2, 3, Poly<PrimeField>{});
  m.at(0, 0) = poly_from_ints(f, {1, 1});
  m.at(0, 2) = poly_from_ints(f, {1, 0, 1});  // t^2 + 1 = (t+1)^2
  m.at(1, 1) = poly_from_ints(f, {1, 1});
  check_recomposition(ring, m);
  // Over GF(2), t^2 + 1 = (t+1)^2, so t+1 divides every entry:
  // factors are (t+1, t+1).
  const auto snf = snf_euclidean(ring, m);
  REQUIRE(snf.factors.size() == 2);
  CHECK(poly_to_string(f, snf.factors[0], "t") == "t + 1");
  CHECK(poly_to_string(f, snf.factors[1], "t") == "t + 1");
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_coeffs(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_coeffs(2) == std::vector<long>{1, 1});
  CHECK(cyclotomic_coeffs(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_coeffs(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_coeffs(12) == std::vector<long>{1, 0, -1, 0, 1});
  // prod over divisors reassembles x^n - 1
  for (long n : {6L, 12L, 13L}) {
    RationalField f;
    Poly<RationalField> prod = poly_constant(f, f.one());
    for (long e : divisors_of(n)) {
      prod = poly_mul(f, prod, poly_from_ints(f, cyclotomic_coeffs(e)));
    }
    CHECK(poly_eq(f, prod, poly_x_pow_plus_const(f, static_cast<int>(n), -1)));
  }
}

TEST_CASE("berlekamp factorization of x^d - 1") {
  // GF(2): x^7 - 1 = (x+1)(x^3+x+1)(x^3+x^2+1)
  PrimeField f2(2);
  const auto factors7 = factor_x_pow_d_minus_one(f2, 7);
  CHECK(factors7.size() == 3);
  long total = 0;
  for (const auto& [q, mult] : factors7) {
    CHECK(mult == 1);
    total += poly_degree(q);
  }
  CHECK(total == 7);

  // GF(2): x^12 - 1 = ((x^3 - 1))^4 -> factors x+1, x^2+x+1 each with mult 4
  const auto factors12 = factor_x_pow_d_minus_one(f2, 12);
  CHECK(factors12.size() == 2);
  for (const auto& [q, mult] : factors12) CHECK(mult == 4);

  // GF(3): x^13 - 1: 13 | 3^3 - 1, so degrees are 1 plus four cubics
  PrimeField f3(3);
  const auto factors13 = factor_x_pow_d_minus_one(f3, 13);
  CHECK(factors13.size() == 5);
  std::vector<int> degs;
  for (const auto& [q, mult] : factors13) degs.push_back(poly_degree(q));
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{1, 3, 3, 3, 3});

  // product of q^mult reassembles x^d - 1 over GF(5)
  PrimeField f5(5);
  for (long d : {6L, 10L, 13L}) {
    Poly<PrimeField> prod = poly_constant(f5, f5.one());
    for (const auto& [q, mult] : factor_x_pow_d_minus_one(f5, d)) {
      for (int e = 0; e < mult; ++e) prod = poly_mul(f5, prod, q);
    }
    CHECK(poly_eq(f5, prod, poly_x_pow_plus_const(f5, static_cast<int>(d), -1)));
  }
}
