#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssarr/matrix.hpp"
#include "ssarr/rational.hpp"
#include "ssarr/typevec.hpp"

namespace ssarr {

/// An ordered, reduced list of hyperplanes in P^N, each stored as its exact
/// rational coefficient vector of length N+1, scaled so the first nonzero
/// entry is 1.  The order is part of the identity; index 0 plays the role of
/// the line at infinity wherever that distinction matters.
struct Arrangement {
  int ambient = 0;                            // N
  std::vector<std::vector<Rat>> hyperplanes;  // each of length N+1

  std::size_t size() const { return hyperplanes.size(); }
};

/// Scale a nonzero vector so its first nonzero entry is 1.  Throws on the
/// zero vector.
std::vector<Rat> normalize_projective(std::vector<Rat> v);

/// Validate + normalize: every vector has length ambient+1, is nonzero, and
/// no two are proportional.  Throws std::invalid_argument otherwise.
Arrangement make_arrangement(int ambient, std::vector<std::vector<Rat>> raw);

/// The model arrangement of a type vector in P^r: z_0 first, then for each
/// block i the hyperplanes z_i - k z_0, k = 1..m_i, in that order.
Arrangement model_arrangement(const TypeVector& m);

/// Text format: first significant line `ambient <N>`, then one hyperplane per
/// line as N+1 whitespace-separated rationals; `#` starts a comment.  Parse
/// errors carry the 1-based line number.
Arrangement parse_arrangement(std::istream& in);
Arrangement parse_arrangement_text(const std::string& text);
std::string arrangement_to_text(const Arrangement& a);

/// Raised when no random embedding passes the genericity certificate within
/// the retry budget; carries the last witness subset.
class genericity_error : public std::runtime_error {
 public:
  genericity_error(std::string msg, std::vector<int> witness_in)
      : std::runtime_error(std::move(msg)), witness(std::move(witness_in)) {}
  std::vector<int> witness;
};

/// Certificate check for an embedding P^s -> P^N given by an (N+1) x (s+1)
/// matrix: for every hyperplane-index subset S with |S| <= s+1, the pulled
/// back forms must have rank min(rank over S, s+1).  Returns the first
/// violating subset, or nullopt when the embedding is generic.
std::optional<std::vector<int>> genericity_witness(const Arrangement& a,
                                                   const Mat<Rat>& embedding);

/// Pull the arrangement back along the embedding; call only after the
/// genericity check (the result is guaranteed reduced exactly then).
Arrangement apply_section(const Arrangement& a, const Mat<Rat>& embedding);

struct SectionResult {
  Arrangement arrangement;
  Mat<Rat> embedding;
  std::uint64_t seed = 0;
  int attempts = 0;
};

/// Seeded random rational s-plane section with a verified certificate.
/// s == ambient uses the identity embedding.  After max_attempts failures
/// throws genericity_error with the last witness.
SectionResult generic_section(const Arrangement& a, int s, std::uint64_t seed,
                              int max_attempts = 16);

}  // namespace ssarr
