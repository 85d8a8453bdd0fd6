// Acceptance gate: every shipped claim re-verified end to end, one line per
// criterion, zero tolerance (exact arithmetic; a single mismatch fails the
// run).  Exit 0 iff all criteria pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ssarr/arrangement.hpp"
#include "ssarr/closed_form.hpp"
#include "ssarr/homology.hpp"
#include "ssarr/lattice.hpp"
#include "ssarr/verify.hpp"

using namespace ssarr;

namespace {

int g_passed = 0;
int g_failed = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << std::endl;
  (ok ? g_passed : g_failed) += 1;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SweepOptions sweep_base() {
  SweepOptions opt;
  opt.max_r = 4;
  opt.max_m = 3;
  opt.seed = 1;
  opt.assignments = 3;
  opt.kinds = SweepKinds{false, false, false, false, false};
  return opt;
}

std::string sweep_detail(const SweepStats& st, double elapsed) {
  std::ostringstream out;
  out << st.comparisons << " comparisons, " << st.mismatches << " mismatches";
  if (st.unrealizable > 0) out << ", " << st.unrealizable << " unrealizable supports skipped";
  out.setf(std::ios::fixed);
  out.precision(1);
  out << ", " << elapsed << "s";
  return out.str();
}

std::string first_failure(const SweepStats& st) {
  return st.failures.empty() ? std::string("no transcript") : st.failures.front();
}

// 1. Twisted local-system homology: chain-level dims equal the closed form on
// the full sweep, within the stated time budget.
void criterion_twisted() {
  const auto start = std::chrono::steady_clock::now();
  SweepOptions opt = sweep_base();
  opt.kinds.twisted = true;
  const SweepStats st = run_verify_sweep(opt);
  const double elapsed = seconds_since(start);
  const bool ok = st.mismatches == 0 && st.comparisons > 0 && elapsed < 60.0;
  std::string detail = sweep_detail(st, elapsed) + " (budget 60s)";
  if (st.mismatches > 0) detail += "; first: " + first_failure(st);
  report(1, "twisted homology equals closed form (r<=4, m<=3, 4 fields)", ok, detail);
}

// 2. Milnor fiber as a K[Z_d]-module: classification equals the closed form,
// low degrees carry only the trivial factor, reports agree across fields,
// Euler characteristic is d times the section Euler number; the sweep must
// include cases with char(K) dividing d.
void criterion_milnor() {
  const auto start = std::chrono::steady_clock::now();
  SweepOptions opt = sweep_base();
  opt.kinds.milnor = true;
  const SweepStats st = run_verify_sweep(opt);
  const double elapsed = seconds_since(start);

  long char_divides_d = 0;
  for (const TypeVector& m : sweep_types(opt.max_r, opt.max_m)) {
    if (m.r() < 2) continue;  // no section, no Milnor tuple
    const long d = m.order_d();
    for (const FieldSpec& f : opt.fields) {
      if (f.characteristic() != 0 && d % f.characteristic() == 0) ++char_divides_d;
    }
  }
  const bool ok = st.mismatches == 0 && st.comparisons > 0 && char_divides_d >= 3;
  std::string detail = sweep_detail(st, elapsed) + ", " + std::to_string(char_divides_d) +
                       " (type, field) pairs with char | d";
  if (st.mismatches > 0) detail += "; first: " + first_failure(st);
  report(2, "Milnor fiber module equals closed form, field independent", ok, detail);
}

// 3. Alexander cover as a K[Z]-module, all torsion (t - 1).
void criterion_alexander() {
  const auto start = std::chrono::steady_clock::now();
  SweepOptions opt = sweep_base();
  opt.kinds.alexander = true;
  const SweepStats st = run_verify_sweep(opt);
  const double elapsed = seconds_since(start);
  const bool ok = st.mismatches == 0 && st.comparisons > 0;
  std::string detail = sweep_detail(st, elapsed);
  if (st.mismatches > 0) detail += "; first: " + first_failure(st);
  report(3, "Alexander cover module equals closed form, torsion all (t-1)", ok, detail);
}

// 4. Homotopy coinvariants: cokernel oracle equals the closed form on every
// 2 <= s < r, both branches exercised, with the documented (2,2,2,2) values.
void criterion_coinvariants() {
  const auto start = std::chrono::steady_clock::now();
  SweepOptions opt = sweep_base();
  opt.kinds.coinvariants = true;
  const SweepStats st = run_verify_sweep(opt);

  long top_branch = 0, low_branch = 0;  // s = r-1 vs s < r-1
  for (const TypeVector& m : sweep_types(opt.max_r, opt.max_m)) {
    for (int s = 2; s < m.r(); ++s) (s == m.r() - 1 ? top_branch : low_branch) += 1;
  }

  const TypeVector spot({2, 2, 2, 2});
  const SectionSpec spot_s{2};
  const GradedModuleReport closed = coinvariants_module(spot, spot_s, FieldSpec::rationals());
  const GradedModuleReport oracle = with_field(FieldSpec::rationals(), [&](auto f) {
    return coinvariants_oracle_report(f, build_tensor_complex(spot), spot_s.s);
  });
  bool spot_ok = closed.degrees.size() == 1 && closed.degrees[0].free_mult == 17 &&
                 closed.degrees[0].trivial_mult == 15 && summaries_match(closed, oracle);
  for (const std::string& factor : oracle.degrees[0].invariant_factors) {
    if (factor != "t - 1") spot_ok = false;
  }

  const double elapsed = seconds_since(start);
  const bool ok = st.mismatches == 0 && st.comparisons > 0 && top_branch > 0 &&
                  low_branch > 0 && spot_ok;
  std::string detail = sweep_detail(st, elapsed) + ", branches s=r-1/" +
                       std::to_string(top_branch) + " s<r-1/" + std::to_string(low_branch) +
                       ", (2,2,2,2) s=2: free 17 + 15 x (t-1) " +
                       (spot_ok ? "confirmed" : "WRONG");
  if (st.mismatches > 0) detail += "; first: " + first_failure(st);
  report(4, "coinvariants oracle equals closed form, both branches", ok, detail);
}

// 5. The bare resolution over Z is exact except in degree r, where the
// homology is free of rank prod(m_i - 1).
void criterion_resolution() {
  const auto start = std::chrono::steady_clock::now();
  SweepOptions opt = sweep_base();
  opt.kinds.resolution = true;
  const SweepStats st = run_verify_sweep(opt);
  const double elapsed = seconds_since(start);
  const bool ok = st.mismatches == 0 && st.comparisons > 0;
  std::string detail = sweep_detail(st, elapsed);
  if (st.mismatches > 0) detail += "; first: " + first_failure(st);
  report(5, "augmented resolution concentrated in degree r, rank prod(m_i-1)", ok, detail);
}

// 6. The alternating-sum identities behind every closed form, exhaustively on
// a family strictly larger than the oracle sweep.
void criterion_z_identities() {
  const auto start = std::chrono::steady_clock::now();
  long checked = 0;
  std::string complaint;
  for (const TypeVector& m : sweep_types(6, 5)) {
    const SymmetricData sd = symmetric_data(m);
    const int r = m.r();
    Int prod = 1;
    for (long mi : m.parts) prod *= (mi - 1);
    bool ok = sd.z[0] == 1;
    for (int j = 1; j <= r && ok; ++j) {
      ok = sd.z[static_cast<std::size_t>(j)] + sd.z[static_cast<std::size_t>(j - 1)] ==
           sd.sigma[static_cast<std::size_t>(j)];
    }
    if (ok) ok = sd.z[static_cast<std::size_t>(r)] == prod;
    for (int j = 0; j < r && ok; ++j) ok = sd.z[static_cast<std::size_t>(j)] > 0;
    if (!ok && complaint.empty()) complaint = "first failure at m=(" + m.to_string() + ")";
    checked += 1;
    if (!ok) break;
  }
  const double elapsed = seconds_since(start);
  const bool ok = complaint.empty() && checked == 19530;
  std::ostringstream detail;
  detail << checked << " types (r<=6, m<=5)";
  detail.setf(std::ios::fixed);
  detail.precision(1);
  detail << ", " << elapsed << "s";
  if (!complaint.empty()) detail << "; " << complaint;
  report(6, "z-vector identities (z_j + z_{j-1} = sigma_j, z_r = prod, z_j > 0)", ok,
         detail.str());
}

// 7. Geometry round trip: model -> generic plane section -> lattice detection
// recovers the type; every such lattice is nice; b2 = sigma_2; and nodal
// arrangements attain the nodal maximum b2 = n(n-1)/2.
void criterion_geometry() {
  const auto start = std::chrono::steady_clock::now();
  long round_trips = 0;
  std::string complaint;

  for (const TypeVector& m : sweep_types(4, 3)) {
    if (m.r() < 2) continue;  // a plane section needs ambient >= 2
    const SectionResult sec = generic_section(model_arrangement(m), 2, 1);
    const DetectionResult det = detect_split_solvable(sec.arrangement);
    if (!det.type || !(*det.type == m)) {
      complaint = "detection failed for m=(" + m.to_string() + ")";
      break;
    }
    const LatticeData l = intersection_points(sec.arrangement);
    if (!is_nice(multiplicity_graph(l))) {
      complaint = "lattice of m=(" + m.to_string() + ") is not nice";
      break;
    }
    const int n = static_cast<int>(sec.arrangement.size()) - 1;
    const ProjectiveBetti b = projective_betti(l, n);
    const std::vector<Int> sigma = elementary_symmetric(m);
    if (Int(b.b2) != sigma[2]) {
      complaint = "b2 != sigma_2 for m=(" + m.to_string() + ")";
      break;
    }
    round_trips += 1;
  }

  // Nodal corpus: lines tangent-free along the moment curve (slope i,
  // intercept i^2) have distinct pairwise intersections, so every rank-2 flat
  // is double and b2 must hit the nodal maximum.
  long nodal_checked = 0;
  for (int k = 3; k <= 7 && complaint.empty(); ++k) {
    std::vector<std::vector<Rat>> lines;
    for (int i = 1; i <= k; ++i) {
      lines.push_back({Rat(i) * Rat(i), Rat(i), Rat(-1)});
    }
    const Arrangement a = make_arrangement(2, lines);
    if (!is_nodal(a)) {
      complaint = "moment-curve corpus with " + std::to_string(k) + " lines is not nodal";
      break;
    }
    const long n = k - 1;
    const ProjectiveBetti b = projective_betti(intersection_points(a), static_cast<int>(n));
    if (b.b2 != n * (n - 1) / 2) {
      complaint = "nodal b2 " + std::to_string(b.b2) + " != " + std::to_string(n * (n - 1) / 2);
      break;
    }
    nodal_checked += 1;
  }

  const double elapsed = seconds_since(start);
  const bool ok = complaint.empty() && round_trips == 117 && nodal_checked == 5;
  std::ostringstream detail;
  detail << round_trips << " round trips (r 2..4), " << nodal_checked << " nodal corpora";
  detail.setf(std::ios::fixed);
  detail.precision(1);
  detail << ", " << elapsed << "s";
  if (!complaint.empty()) detail << "; " << complaint;
  report(7, "geometry round trip, niceness, b2 = sigma_2, nodal maximum", ok, detail.str());
}

// 8. Twisted Betti numbers depend only on the support: 10 random value
// assignments per (m, s, supp, field) give one outcome, and that outcome is
// the closed form.
void criterion_rep_independence() {
  const auto start = std::chrono::steady_clock::now();
  long tuples = 0;
  std::string complaint;

  const std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(3),
                                         FieldSpec::prime(5)};
  std::vector<TypeVector> family = sweep_types(3, 3);
  family.push_back(TypeVector({3, 3, 3, 3}));  // one heavy spot check

  for (const TypeVector& m : family) {
    for (int s = 2; s <= m.r() && complaint.empty(); ++s) {
      // Every support subset of {1..r}.
      for (unsigned mask = 0; mask < (1U << m.r()) && complaint.empty(); ++mask) {
        BlockSet supp;
        for (int i = 0; i < m.r(); ++i) {
          if (mask & (1U << i)) supp.insert(i + 1);
        }
        if (m.r() == 4 && !(s == 4 && supp == BlockSet{1, 2})) continue;
        const std::vector<Int> closed = twisted_betti_section(m, SectionSpec{s}, supp);
        for (const FieldSpec& field : fields) {
          const auto outcomes = rep_value_outcomes(m, s, supp, field, 1, 10);
          if (outcomes.size() != 1) {
            complaint = "m=(" + m.to_string() + ") s=" + std::to_string(s) + " field=" +
                        field.label() + ": " + std::to_string(outcomes.size()) +
                        " distinct outcomes";
            break;
          }
          bool same = outcomes[0].size() == closed.size();
          for (std::size_t j = 0; same && j < closed.size(); ++j) {
            same = Int(outcomes[0][j]) == closed[j];
          }
          if (!same) {
            complaint = "m=(" + m.to_string() + ") s=" + std::to_string(s) +
                        ": outcome differs from the closed form";
            break;
          }
          tuples += 1;
        }
      }
    }
    if (!complaint.empty()) break;
  }

  const double elapsed = seconds_since(start);
  const bool ok = complaint.empty() && tuples > 0;
  std::ostringstream detail;
  detail << tuples << " (m, s, supp, field) tuples x 10 assignments";
  detail.setf(std::ios::fixed);
  detail.precision(1);
  detail << ", " << elapsed << "s";
  if (!complaint.empty()) detail << "; " << complaint;
  report(8, "twisted dims independent of representation values", ok, detail.str());
}

// 9. The harness detects a corrupted differential: the real binary, run with
// the hidden fault-injection flag, must exit 3 and count at least one
// mismatch.
void criterion_mutation() {
  const std::string cmd =
      std::string(SSARR_CLI_PATH) + " verify --max-r 2 --max-m 2 --inject-sign-flip 2>&1";
  std::string output;
  int exit_code = -1;
  if (FILE* pipe = popen(cmd.c_str(), "r")) {
    char buf[4096];
    while (fgets(buf, sizeof buf, pipe)) output += buf;
    const int status = pclose(pipe);
    if (WIFEXITED(status)) exit_code = WEXITSTATUS(status);
  }

  long mismatches = -1;
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("mismatches: ", 0) == 0) mismatches = std::stol(line.substr(12));
  }
  const bool ok = exit_code == 3 && mismatches >= 1;
  std::ostringstream detail;
  detail << "cmd_verify with one flipped differential sign: exit " << exit_code << ", "
         << mismatches << " mismatches reported";
  report(9, "mutation sanity: the sweep catches a corrupted differential", ok, detail.str());
}

}  // namespace

int main() {
  std::cout << "acceptance gate: 9 criteria, exact arithmetic, zero tolerance\n";
  const auto start = std::chrono::steady_clock::now();

  criterion_twisted();
  criterion_milnor();
  criterion_alexander();
  criterion_coinvariants();
  criterion_resolution();
  criterion_z_identities();
  criterion_geometry();
  criterion_rep_independence();
  criterion_mutation();

  std::cout.setf(std::ios::fixed);
  std::cout.precision(1);
  std::cout << "acceptance: " << g_passed << "/" << (g_passed + g_failed) << " passed in "
            << seconds_since(start) << "s\n";
  return g_failed == 0 ? 0 : 1;
}
