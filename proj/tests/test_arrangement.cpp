#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ssarr/arrangement.hpp"
#include "ssarr/lattice.hpp"

using namespace ssarr;

namespace {

std::vector<Rat> rats(std::vector<std::string> toks) {
  std::vector<Rat> out;
  for (const auto& t : toks) out.push_back(parse_rational(t));
  return out;
}

}  // namespace

TEST_CASE("projective normalization scales the first nonzero entry to 1") {
  CHECK(normalize_projective(rats({"-2", "1", "0"})) == rats({"1", "-1/2", "0"}));
  CHECK(normalize_projective(rats({"0", "3", "6"})) == rats({"0", "1", "2"}));
  CHECK_THROWS_AS(normalize_projective(rats({"0", "0", "0"})), std::invalid_argument);
}

TEST_CASE("arrangement construction validates shape and reducedness") {
  CHECK_THROWS_AS(make_arrangement(2, {rats({"1", "0"})}), std::invalid_argument);
  // Proportional rows collapse to the same normalized form.
  CHECK_THROWS_AS(make_arrangement(1, {rats({"1", "2"}), rats({"2", "4"})}),
                  std::invalid_argument);
  const Arrangement a = make_arrangement(1, {rats({"1", "2"}), rats({"2", "5"})});
  CHECK(a.size() == 2);
  CHECK(a.hyperplanes[1] == rats({"1", "5/2"}));
}

TEST_CASE("model arrangements follow the block ordering") {
  const Arrangement a = model_arrangement(TypeVector({1, 1}));
  REQUIRE(a.size() == 3);
  CHECK(a.hyperplanes[0] == rats({"1", "0", "0"}));
  CHECK(a.hyperplanes[1] == rats({"1", "-1", "0"}));
  CHECK(a.hyperplanes[2] == rats({"1", "0", "-1"}));

  const Arrangement b = model_arrangement(TypeVector({2}));
  REQUIRE(b.size() == 3);
  CHECK(b.ambient == 1);
  CHECK(b.hyperplanes[1] == rats({"1", "-1"}));
  CHECK(b.hyperplanes[2] == rats({"1", "-1/2"}));

  CHECK(model_arrangement(TypeVector({2, 2})).size() == 5);
  CHECK(model_arrangement(TypeVector({2, 3, 4})).ambient == 3);
  CHECK(model_arrangement(TypeVector({2, 3, 4})).size() == 10);
}

TEST_CASE("text round trip with comments and rational entries") {
  const std::string text =
      "# a trapezoid of lines\n"
      "ambient 2\n"
      "1 0 0\n"
      "1 -1 0   # z1 = z0, normalized\n"
      "\n"
      "1 -1/2 0\n"
      "0 1 -3\n";
  const Arrangement a = parse_arrangement_text(text);
  REQUIRE(a.size() == 4);
  CHECK(a.hyperplanes[2] == rats({"1", "-1/2", "0"}));
  CHECK(a.hyperplanes[3] == rats({"0", "1", "-3"}));
  const Arrangement b = parse_arrangement_text(arrangement_to_text(a));
  CHECK(b.hyperplanes == a.hyperplanes);
  CHECK(b.ambient == a.ambient);
}

TEST_CASE("parse errors carry line numbers") {
  auto fails_with = [](const std::string& text, const std::string& needle) {
    try {
      parse_arrangement_text(text);
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  fails_with("hello 2\n", "line 1");
  fails_with("ambient 0\n", "line 1");
  fails_with("ambient two\n", "line 1");
  fails_with("ambient 2\n1 0\n", "line 2");
  fails_with("ambient 2\n1 0 0\n1 0/0 0\n", "line 3");
  fails_with("ambient 2\n1 0 0\n1 x 0\n", "line 3");
  fails_with("", "ambient");
}

TEST_CASE("identity section is accepted when s equals the ambient dimension") {
  const Arrangement a = model_arrangement(TypeVector({2, 2}));
  const SectionResult sec = generic_section(a, 2, 1);
  CHECK(sec.attempts == 1);
  CHECK(sec.arrangement.hyperplanes == a.hyperplanes);
  for (std::size_t i = 0; i < sec.embedding.rows; ++i) {
    for (std::size_t j = 0; j < sec.embedding.cols; ++j) {
      CHECK(sec.embedding.at(i, j) == Rat(i == j ? 1 : 0));
    }
  }
}

TEST_CASE("a degenerate embedding is rejected with a witness") {
  const Arrangement a = model_arrangement(TypeVector({2, 2}));
  // Image lies inside z0 = 0: the pullback of hyperplane 0 vanishes.
  Mat<Rat> e(3, 3, Rat(0));
  e.at(1, 0) = 1;
  e.at(2, 1) = 1;
  e.at(1, 2) = 1;
  const auto witness = genericity_witness(a, e);
  REQUIRE(witness.has_value());
  CHECK(*witness == std::vector<int>{0});
}

TEST_CASE("random sections of the model are generic and detect back") {
  for (const std::vector<long>& mv :
       {std::vector<long>{2, 2}, {2, 3}, {1, 2, 2}, {2, 2, 2}, {3, 1, 2}}) {
    const TypeVector m(mv);
    const Arrangement a = model_arrangement(m);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const SectionResult sec = generic_section(a, 2, seed);
      CHECK(sec.arrangement.ambient == 2);
      CHECK(sec.arrangement.size() == a.size());
      CHECK(!genericity_witness(a, sec.embedding).has_value());
      const DetectionResult det = detect_split_solvable(sec.arrangement);
      REQUIRE_MESSAGE(det.type.has_value(), det.reason << " for " << m.to_string());
      CHECK(*det.type == m);
    }
  }
}

TEST_CASE("sections are deterministic in the seed") {
  const Arrangement a = model_arrangement(TypeVector({2, 2, 2}));
  const SectionResult s1 = generic_section(a, 2, 11);
  const SectionResult s2 = generic_section(a, 2, 11);
  const SectionResult s3 = generic_section(a, 2, 12);
  CHECK(s1.arrangement.hyperplanes == s2.arrangement.hyperplanes);
  CHECK(s1.arrangement.hyperplanes != s3.arrangement.hyperplanes);
}

TEST_CASE("section validation") {
  const Arrangement a = model_arrangement(TypeVector({2, 2, 2}));
  CHECK_THROWS_AS(generic_section(a, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(generic_section(a, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(generic_section(a, 2, 1, 0), std::invalid_argument);
}

TEST_CASE("genericity errors carry their witness subset") {
  const genericity_error err("no generic section found", {0, 2, 5});
  CHECK(err.witness == std::vector<int>{0, 2, 5});
  CHECK(std::string(err.what()).find("generic") != std::string::npos);
}
