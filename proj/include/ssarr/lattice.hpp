#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ssarr/arrangement.hpp"

namespace ssarr {

/// A rank-2 flat of a line arrangement: the point, the exact set of lines
/// through it, and multiplicity = number of those lines.
struct Rank2Flat {
  std::vector<Rat> point;    // normalized projective coordinates
  std::vector<int> incident; // sorted hyperplane indices
  int multiplicity() const { return static_cast<int>(incident.size()); }
};

/// Rank-2 flats plus (optionally) the dependent-subset enumeration up to a
/// cardinality bound.
struct LatticeData {
  std::vector<Rank2Flat> rank2_flats;
  std::vector<std::vector<int>> dependent_subsets;  // each sorted; list sorted
  int dependent_bound = 0;  // subsets of size <= dependent_bound+1 enumerated
};

/// All pairwise intersection points of a line arrangement in P^2, merged when
/// coincident, with exact incident sets.  Flats are ordered by point
/// coordinates.
LatticeData intersection_points(const Arrangement& a);

/// Enumerate every index subset of size <= p+1 whose coefficient vectors are
/// linearly dependent (rank < size).  Any ambient dimension.
LatticeData dependent_subsets(const Arrangement& a, int p);

/// Both of the above in one structure.
LatticeData lattice_data(const Arrangement& a, int p);

/// True iff every rank-2 flat of the line arrangement has multiplicity 2.
bool is_nodal(const Arrangement& a);

/// Outcome of split-solvable recognition.  When the lattice matches, `type`
/// lists the block sizes in hyperplane order (blocks ordered by their
/// smallest line index) and `canonical` is the same multiset sorted; when it
/// does not, `reason` says which condition failed.
struct DetectionResult {
  std::optional<TypeVector> type;
  std::optional<TypeVector> canonical;
  std::string reason;
};

/// Decide whether the line arrangement is split solvable with hyperplane 0 as
/// the line at infinity: the affine part (flats off line 0) must be nodal,
/// and there must be r >= 2 intersection points on line 0 — their
/// multiplicities are then m_i + 1 and every other line passes through
/// exactly one of them.
DetectionResult detect_split_solvable(const Arrangement& a);

/// The graph on flats of multiplicity >= 3: an edge joins two flats lying on
/// a common line.  Incident line sets are kept so local subgraphs (edges
/// collinear with a given vertex) can be answered exactly.
struct MultiplicityGraph {
  std::vector<int> flat_index;             // positions in LatticeData.rank2_flats
  std::vector<std::set<int>> lines;        // incident lines per vertex
  int size() const { return static_cast<int>(lines.size()); }
  bool edge(int u, int v) const;           // share a line
  bool collinear(int u, int v, int w) const;  // all three share one line
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
};

MultiplicityGraph multiplicity_graph(const LatticeData& l);

/// Witness that a multiplicity graph is nice: the chosen vertex set V', the
/// surviving edges after deleting V' and every edge collinear with a member
/// of V', and the (always true) forest flag.
struct NicenessCertificate {
  std::vector<int> chosen;                        // vertex ids, sorted
  std::vector<std::pair<int, int>> reduced_edges; // edges of the pruned graph
  bool forest = true;
};

/// Exhaustive search for a valid V' (closed neighborhoods pairwise disjoint,
/// pruned graph acyclic), by subset size then lexicographic order; nullopt
/// when no subset works.
std::optional<NicenessCertificate> is_nice(const MultiplicityGraph& g);

/// Betti numbers (b0, b1, b2) of the projective complement from the rank-2
/// data of an arrangement of n+1 lines: (1, n, sum(mult - 1) - n).
struct ProjectiveBetti {
  long b0 = 1;
  long b1 = 0;
  long b2 = 0;
};

ProjectiveBetti projective_betti(const LatticeData& l, int n);

}  // namespace ssarr
