#pragma once

#include "ssarr/fields.hpp"
#include "ssarr/report.hpp"
#include "ssarr/typevec.hpp"

namespace ssarr {

// Closed-form topological invariants of a generic s-plane section of the
// split-solvable arrangement of type m.  Everything here is a polynomial /
// integer formula in the block sizes; the independent chain-level
// computations live in homology.hpp for cross-checking.

/// Poincare polynomial of the rank-one local system with support `supp`:
/// prod_{i not in supp} (1 + m_i t) * prod_{i in supp} (m_i - 1) t.
/// Returned as coefficient list b_0..b_r (trailing zeros kept).
std::vector<Int> twisted_poincare(const TypeVector& m, const BlockSet& supp);

/// Twisted Betti numbers of the s-section: b_j for j < s, and in degree s the
/// correction sigma_s + sum_{i<s} (-1)^{i+s} (sigma_i - b_i).
std::vector<Int> twisted_betti_section(const TypeVector& m, const SectionSpec& s,
                                       const BlockSet& supp);

/// Euler characteristic of the s-section: sum_{j<=s} (-1)^j sigma_j.
Int euler_section(const TypeVector& m, const SectionSpec& s);

/// Homology of the Milnor fiber of the s-section as a module over K[Z_d],
/// d = 1 + sigma_1: degree j < s is trivial^(z_j + z_{j-1}); degree s is
/// trivial^(z_{s-1}) + free^(z_s).  Independent of the field.
GradedModuleReport milnor_module(const TypeVector& m, const SectionSpec& s,
                                 const FieldSpec& field);

/// Homology of the total-linking-number (Alexander) cover as a module over
/// K[Z]: degree j < s is trivial^(z_j); degree s is free^(z_s).
GradedModuleReport alexander_module(const TypeVector& m, const SectionSpec& s,
                                    const FieldSpec& field);

/// Coinvariants of the first higher homotopy group pi_s, as a single-degree
/// K[Z]-module: free^(z_s) + trivial^(z_{s+1}) when s < r-1, free^(sigma_r)
/// when s = r-1.  Requires 2 <= s < r; the flag infinite_dimensional is set
/// whenever the free part is nonzero.
GradedModuleReport coinvariants_module(const TypeVector& m, const SectionSpec& s,
                                       const FieldSpec& field);

/// Marked presentation of the section's fundamental group: generators x_j^i
/// grouped by block, cross-block commutator relations only.
GroupPresentation marked_group_presentation(const TypeVector& m);

}  // namespace ssarr
