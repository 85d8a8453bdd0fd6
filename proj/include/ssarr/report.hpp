#pragma once

#include <string>
#include <vector>

#include "ssarr/rational.hpp"

namespace ssarr {

/// Summary of one graded piece of a module over K[Z_d] (= K[x]/(x^d - 1)) or
/// over the Laurent ring K[Z] (= K[t, t^-1]).
///
/// trivial_mult counts trivial one-dimensional summands (factor x - 1 resp.
/// t - 1); free_mult counts full free summands (K[Z_d] resp. K[Z]);
/// other_dim is the K-dimension of everything else (always 0 in the closed
/// forms; a nonzero value from the oracle is a mismatch by itself).
/// invariant_factors optionally carries oracle detail as monic polynomial
/// strings, each dividing the next.
struct ModuleSummary {
  Int trivial_mult{0};
  Int free_mult{0};
  Int other_dim{0};
  std::vector<std::string> invariant_factors;
  bool factors_known = false;

  bool same_summary(const ModuleSummary& o) const {
    return trivial_mult == o.trivial_mult && free_mult == o.free_mult &&
           other_dim == o.other_dim;
  }
};

struct GradedModuleReport {
  enum class Coeff { cyclic, laurent };
  Coeff coeff = Coeff::cyclic;
  long order_d = 0;   // d for the cyclic case; 0 for Laurent
  int min_degree = 0; // degree of degrees[0]
  std::vector<ModuleSummary> degrees;
  /// Set when a free Laurent summand makes the module infinite dimensional
  /// over K (only meaningful in the Laurent case).
  bool infinite_dimensional = false;
  std::string provenance;  // "closed-form" or "oracle"

  int top_degree() const {
    return min_degree + static_cast<int>(degrees.size()) - 1;
  }
  /// Total K-dimension of degree j; only valid when the piece is finite
  /// dimensional (cyclic case, or Laurent with free_mult = 0).
  Int k_dimension(int j) const;
};

/// Compares the (trivial, free, other) summaries degree by degree together
/// with the coefficient ring data.  Returns an empty string on match,
/// otherwise a one-line description of the first difference.
std::string summary_diff(const GradedModuleReport& a, const GradedModuleReport& b);

inline bool summaries_match(const GradedModuleReport& a, const GradedModuleReport& b) {
  return summary_diff(a, b).empty();
}

/// Finitely presented group with a distinguished grouping of the generators
/// into blocks (the 1-marking).  Generators are named "x_j^i" with i the
/// block and j the position inside the block.
struct GroupPresentation {
  std::vector<std::string> generators;           // marking order
  std::vector<int> generator_block;              // block index (1-based) per generator
  std::vector<std::pair<int, int>> commutators;  // generator index pairs, [g_a, g_b] = 1
};

}  // namespace ssarr
