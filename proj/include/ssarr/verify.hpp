#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssarr/fields.hpp"
#include "ssarr/typevec.hpp"

namespace ssarr {

/// Which invariants the sweep cross-checks against their closed forms.
struct SweepKinds {
  bool twisted = true;
  bool milnor = true;
  bool alexander = true;
  bool coinvariants = true;
  bool resolution = true;  // integral homology of the bare resolution
};

struct SweepOptions {
  int max_r = 3;
  long max_m = 3;
  std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(2),
                                   FieldSpec::prime(3), FieldSpec::prime(5)};
  std::uint64_t seed = 1;
  int assignments = 3;  // random representation values per support
  int jobs = 1;
  SweepKinds kinds;
  /// Test hook: build every oracle complex with one differential sign flipped
  /// so the sweep must report mismatches.
  bool inject_sign_flip = false;
};

struct SweepStats {
  long comparisons = 0;
  long mismatches = 0;
  /// Support subsets with no realizable representation (a nontrivial value
  /// does not exist in GF(2)); these are skipped, not compared.
  long unrealizable = 0;
  std::vector<std::string> failures;  // first few mismatch descriptions

  void merge(const SweepStats& o);
};

/// Every type vector with 1 <= r <= max_r and 1 <= m_i <= max_m, in
/// lexicographic order by (r, parts).
std::vector<TypeVector> sweep_types(int max_r, long max_m);

/// Cross-check all requested invariants against the oracle over the whole
/// type sweep.  Deterministic for a fixed seed, independent of job count.
SweepStats run_verify_sweep(const SweepOptions& opt);

/// Twisted homology dims from the oracle for `count` different sampled
/// representation values on a fixed support; returns the distinct outcomes
/// (size 1 means value-independent, as the closed form requires).
std::vector<std::vector<long>> rep_value_outcomes(const TypeVector& m, int s,
                                                  const BlockSet& supp, const FieldSpec& field,
                                                  std::uint64_t seed, int count);

}  // namespace ssarr
