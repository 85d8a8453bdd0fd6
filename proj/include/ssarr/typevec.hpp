#pragma once

#include <set>
#include <string>
#include <vector>

#include "ssarr/rational.hpp"

namespace ssarr {

/// The combinatorial seed (m_1, ..., m_r): block sizes of a split-solvable
/// arrangement.  Every m_i >= 1 and r >= 1; r == 1 is accepted as the
/// degenerate pencil case but most invariants additionally require a section
/// dimension 2 <= s <= r.
struct TypeVector {
  std::vector<long> parts;

  explicit TypeVector(std::vector<long> parts_in);

  int r() const { return static_cast<int>(parts.size()); }
  /// Number of hyperplanes of the model arrangement: 1 + m_1 + ... + m_r.
  long line_count() const;
  /// Monodromy order d = 1 + sigma_1.
  long order_d() const { return line_count(); }

  /// Same multiset of block sizes, sorted ascending.
  TypeVector sorted() const;

  std::string to_string() const;  // "2,3,4"
  static TypeVector parse(std::string_view text);

  bool operator==(const TypeVector& o) const { return parts == o.parts; }
};

/// sigma_0..sigma_r and the derived alternating sums z_0..z_r with
/// z_j = sigma_j - sigma_{j-1} + ... +- sigma_0 (so z_j + z_{j-1} = sigma_j,
/// reading z_{-1} = 0).
struct SymmetricData {
  std::vector<Int> sigma;
  std::vector<Int> z;
};

/// sigma_0..sigma_r of the block sizes, computed by the usual one-row
/// recurrence; sigma_0 = 1.
std::vector<Int> elementary_symmetric(const TypeVector& m);

std::vector<Int> z_vector(const TypeVector& m);

SymmetricData symmetric_data(const TypeVector& m);

/// Section dimension for a generic s-plane slice; valid range 2 <= s <= r.
struct SectionSpec {
  int s = 2;
};

/// Throws std::invalid_argument unless 2 <= spec.s <= m.r().
void validate_section(const TypeVector& m, const SectionSpec& spec);

/// A subset of {1..r} identifying blocks; used as the support of a rank-one
/// representation.  Stored 1-based to match block numbering.
using BlockSet = std::set<int>;

/// Throws std::invalid_argument unless every element lies in 1..r.
void validate_block_set(const TypeVector& m, const BlockSet& supp);

}  // namespace ssarr
