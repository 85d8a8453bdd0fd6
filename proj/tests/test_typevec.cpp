#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssarr/typevec.hpp"

using namespace ssarr;

namespace {

// Independent oracle: sigma_k by literal enumeration of k-subsets.
std::vector<Int> sigma_by_subsets(const std::vector<long>& m) {
  const int r = static_cast<int>(m.size());
  std::vector<Int> sigma(static_cast<std::size_t>(r) + 1, Int(0));
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    Int prod = 1;
    int bits = 0;
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) {
        prod *= m[static_cast<std::size_t>(i)];
        ++bits;
      }
    }
    sigma[static_cast<std::size_t>(bits)] += prod;
  }
  return sigma;
}

std::vector<long> longs(const std::vector<Int>& v) {
  std::vector<long> out;
  for (const Int& x : v) out.push_back(static_cast<long>(x));
  return out;
}

}  // namespace

TEST_CASE("elementary symmetric values") {
  CHECK(longs(elementary_symmetric(TypeVector({2, 2}))) == std::vector<long>{1, 4, 4});
  CHECK(longs(elementary_symmetric(TypeVector({1, 1, 1}))) == std::vector<long>{1, 3, 3, 1});
  // Frozen from the subset-enumeration oracle.
  CHECK(longs(elementary_symmetric(TypeVector({2, 3, 4}))) == std::vector<long>{1, 9, 26, 24});
}

TEST_CASE("elementary symmetric agrees with subset enumeration") {
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b)
      for (long c = 1; c <= 4; ++c)
        for (long d = 1; d <= 4; ++d) {
          const std::vector<long> m{a, b, c, d};
          CHECK(elementary_symmetric(TypeVector(m)) == sigma_by_subsets(m));
        }
}

TEST_CASE("z vector values") {
  CHECK(longs(z_vector(TypeVector({2, 2}))) == std::vector<long>{1, 3, 1});
  CHECK(longs(z_vector(TypeVector({1, 2}))) == std::vector<long>{1, 2, 0});
  CHECK(longs(z_vector(TypeVector({2, 3, 4}))) == std::vector<long>{1, 8, 18, 6});
}

TEST_CASE("z identities over all types with r <= 6, m_i <= 5") {
  // Exhaustive sweep: z_j + z_{j-1} = sigma_j, z_r = prod(m_i - 1),
  // z_j > 0 for j < r.
  std::vector<long> m;
  auto run = [&](auto&& self, int depth) -> void {
    if (depth > 0) {
      const TypeVector tv(m);
      const SymmetricData sym = symmetric_data(tv);
      REQUIRE(sym.sigma.size() == m.size() + 1);
      REQUIRE(sym.z.size() == m.size() + 1);
      CHECK(sym.z[0] == 1);
      CHECK(sym.sigma[0] == 1);
      for (std::size_t j = 1; j < sym.z.size(); ++j) {
        CHECK(sym.z[j] + sym.z[j - 1] == sym.sigma[j]);
      }
      Int prod = 1;
      for (long mi : m) prod *= Int(mi - 1);
      CHECK(sym.z.back() == prod);
      for (std::size_t j = 0; j + 1 < sym.z.size(); ++j) {
        CHECK(sym.z[j] > 0);
      }
    }
    if (depth == 6) return;
    for (long v = 1; v <= 5; ++v) {
      m.push_back(v);
      self(self, depth + 1);
      m.pop_back();
    }
  };
  run(run, 0);
}

TEST_CASE("type vector validation") {
  CHECK_THROWS_AS(TypeVector({}), std::invalid_argument);
  CHECK_THROWS_AS(TypeVector({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(TypeVector({-1}), std::invalid_argument);
  CHECK(TypeVector({1}).r() == 1);  // degenerate pencil case is accepted
}

TEST_CASE("type vector parse and format") {
  CHECK(TypeVector::parse("2,3,4") == TypeVector({2, 3, 4}));
  CHECK(TypeVector::parse("5") == TypeVector({5}));
  CHECK(TypeVector({2, 3, 4}).to_string() == "2,3,4");
  CHECK_THROWS_AS(TypeVector::parse("2,,3"), std::invalid_argument);
  CHECK_THROWS_AS(TypeVector::parse("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(TypeVector::parse("2,0"), std::invalid_argument);
}

TEST_CASE("line count and monodromy order") {
  CHECK(TypeVector({2, 2}).line_count() == 5);
  CHECK(TypeVector({2, 3}).order_d() == 6);
  CHECK(TypeVector({3, 3, 3, 3}).order_d() == 13);
}

TEST_CASE("section validation") {
  const TypeVector m({2, 2, 2});
  CHECK_NOTHROW(validate_section(m, SectionSpec{2}));
  CHECK_NOTHROW(validate_section(m, SectionSpec{3}));
  CHECK_THROWS_AS(validate_section(m, SectionSpec{1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_section(m, SectionSpec{4}), std::invalid_argument);
}
