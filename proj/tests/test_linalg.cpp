#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ssarr/fields.hpp"
#include "ssarr/linalg.hpp"

using namespace ssarr;

namespace {

template <class F>
Mat<typename F::Elem> from_ints(const F& f, std::size_t rows, std::size_t cols,
                                std::initializer_list<long> values) {
  Mat<typename F::Elem> m(rows, cols, f.zero());
  auto it = values.begin();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f.from_int(*it++);
  }
  return m;
}

template <class F>
Mat<typename F::Elem> random_int_matrix(const F& f, std::mt19937_64& rng,
                                        std::size_t rows, std::size_t cols, long span) {
  Mat<typename F::Elem> m(rows, cols, f.zero());
  for (auto& v : m.a) {
    v = f.from_int(static_cast<long>(rng() % (2 * span + 1)) - span);
  }
  return m;
}

}  // namespace

TEST_CASE("rank over the rationals") {
  RationalField f;
  CHECK(rank(f, from_ints(f, 2, 2, {1, 2, 2, 4})) == 1);
  CHECK(rank(f, from_ints(f, 2, 2, {1, 2, 3, 4})) == 2);
  CHECK(rank(f, from_ints(f, 3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 0})) == 0);
  CHECK(rank(f, from_ints(f, 3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 0, 1})) == 2);
}

TEST_CASE("rank over prime fields sees characteristic effects") {
  // det = 10: invertible over Q and GF(3), singular over GF(2) and GF(5).
  auto check_rank = [](auto f, std::size_t expect) {
    CHECK(rank(f, from_ints(f, 2, 2, {3, 1, 2, 4})) == expect);
  };
  check_rank(RationalField{}, 2);
  check_rank(PrimeField{3}, 2);
  check_rank(PrimeField{2}, 1);
  check_rank(PrimeField{5}, 1);
}

TEST_CASE("kernel basis has identity pattern on free columns") {
  RationalField f;
  const Mat<Rat> m = from_ints(f, 2, 4, {1, 2, 0, 1, 0, 0, 1, 3});
  std::vector<std::size_t> free_cols;
  const Mat<Rat> ker = kernel_basis(f, m, &free_cols);
  CHECK(ker.cols == 2);
  REQUIRE(free_cols.size() == 2);
  // m * ker == 0
  for (std::size_t j = 0; j < ker.cols; ++j) {
    for (std::size_t i = 0; i < m.rows; ++i) {
      Rat acc = 0;
      for (std::size_t k = 0; k < m.cols; ++k) acc += m.at(i, k) * ker.at(k, j);
      CHECK(acc == 0);
    }
  }
  // identity pattern at the free rows
  for (std::size_t a = 0; a < free_cols.size(); ++a) {
    for (std::size_t b = 0; b < ker.cols; ++b) {
      CHECK(ker.at(free_cols[a], b) == (a == b ? Rat(1) : Rat(0)));
    }
  }
}

TEST_CASE("kernel basis randomized: dimension + membership") {
  RationalField f;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const Mat<Rat> m = random_int_matrix(f, rng, rows, cols, 4);
    const std::size_t r = rank(f, m);
    const Mat<Rat> ker = kernel_basis(f, m);
    CHECK(ker.cols == cols - r);
    for (std::size_t j = 0; j < ker.cols; ++j) {
      for (std::size_t i = 0; i < rows; ++i) {
        Rat acc = 0;
        for (std::size_t k = 0; k < cols; ++k) acc += m.at(i, k) * ker.at(k, j);
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("solve_columns reproduces known solutions") {
  RationalField f;
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t k = 1 + rng() % n;
    // Random full-column-rank B (resample until rank k).
    Mat<Rat> b(1, 1);
    do {
      b = random_int_matrix(f, rng, n, k, 3);
    } while (rank(f, b) != k);
    const Mat<Rat> x_true = random_int_matrix(f, rng, k, 2, 5);
    const Mat<Rat> r = mat_mul(f, b, x_true);
    const Mat<Rat> x = solve_columns(f, b, r);
    REQUIRE(x.rows == k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < 2; ++j) CHECK(x.at(i, j) == x_true.at(i, j));
    }
  }
}

TEST_CASE("solve_columns rejects inconsistent systems") {
  RationalField f;
  const Mat<Rat> b = from_ints(f, 2, 1, {1, 0});
  const Mat<Rat> r = from_ints(f, 2, 1, {0, 1});
  CHECK_THROWS_AS(solve_columns(f, b, r), std::logic_error);
}

TEST_CASE("int64 fraction field agrees with exact rationals") {
  Frac64Field ff;
  RationalField rf;
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    Mat<Frac64> a(rows, cols);
    Mat<Rat> b(rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
      const long v = static_cast<long>(rng() % 19) - 9;
      a.a[i] = ff.from_int(v);
      b.a[i] = rf.from_int(v);
    }
    CHECK(rank(ff, a) == rank(rf, b));
    const Mat<Frac64> ka = kernel_basis(ff, a);
    const Mat<Rat> kb = kernel_basis(rf, b);
    REQUIRE(ka.cols == kb.cols);
    for (std::size_t i = 0; i < ka.a.size(); ++i) {
      CHECK(Frac64Field::to_rat(ka.a[i]) == kb.a[i]);
    }
  }
}

TEST_CASE("int64 fraction overflow is detected, not wrapped") {
  Frac64Field f;
  const Frac64 big = f.from_int((1L << 62));
  CHECK_THROWS_AS(f.mul(big, big), frac64_overflow);
  CHECK_THROWS_AS(f.add(big, big), frac64_overflow);
  // with_field retries the rational path on overflow
  const FieldSpec q = FieldSpec::rationals();
  const std::string result = with_field(q, [](auto fld) -> std::string {
    if constexpr (std::is_same_v<decltype(fld), Frac64Field>) {
      throw frac64_overflow();
    }
    return "fallback";
  });
  CHECK(result == "fallback");
}

TEST_CASE("prime field arithmetic") {
  PrimeField f(5);
  CHECK(f.add(3, 4) == 2);
  CHECK(f.mul(3, 4) == 2);
  CHECK(f.inv(2) == 3);
  CHECK(f.from_int(-1) == 4);
  CHECK(f.div(1, 4) == 4);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
}

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("gf:5") == FieldSpec::prime(5));
  CHECK(FieldSpec::parse("3") == FieldSpec::prime(3));
  CHECK(FieldSpec::parse("gf:2").label() == "gf:2");
  CHECK(FieldSpec::rationals().label() == "q");
  CHECK_THROWS_AS(FieldSpec::parse("gf:6"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("abc"), std::invalid_argument);
}

TEST_CASE("rational parse and canonical format") {
  CHECK(parse_rational("3/6") == Rat(1, 2));
  CHECK(parse_rational("-4/2") == Rat(-2));
  CHECK(parse_rational(" 7 ") == Rat(7));
  CHECK(rational_to_string(Rat(-3, 9)) == "-1/3");
  CHECK(rational_to_string(Rat(8, 4)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}
