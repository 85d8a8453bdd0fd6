#include "ssarr/verify.hpp"

#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "ssarr/closed_form.hpp"
#include "ssarr/homology.hpp"

namespace ssarr {

void SweepStats::merge(const SweepStats& o) {
  comparisons += o.comparisons;
  mismatches += o.mismatches;
  unrealizable += o.unrealizable;
  for (const std::string& f : o.failures) {
    if (failures.size() >= 25) break;
    failures.push_back(f);
  }
}

std::vector<TypeVector> sweep_types(int max_r, long max_m) {
  if (max_r < 1 || max_m < 1) throw std::invalid_argument("sweep bounds must be >= 1");
  std::vector<TypeVector> out;
  for (int r = 1; r <= max_r; ++r) {
    std::vector<long> parts(static_cast<std::size_t>(r), 1);
    while (true) {
      out.push_back(TypeVector(parts));
      int pos = r - 1;
      while (pos >= 0 && parts[static_cast<std::size_t>(pos)] == max_m) --pos;
      if (pos < 0) break;
      ++parts[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < r; ++i) parts[static_cast<std::size_t>(i)] = 1;
    }
  }
  return out;
}

namespace {

std::vector<BlockSet> all_supports(int r) {
  std::vector<BlockSet> out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    BlockSet s;
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) s.insert(i + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string support_label(const BlockSet& supp) {
  std::string s = "{";
  for (int i : supp) {
    if (s.size() > 1) s += ',';
    s += std::to_string(i);
  }
  return s + "}";
}

std::vector<long> longs(const std::vector<Int>& v) {
  std::vector<long> out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(static_cast<long>(x));
  return out;
}

std::string dims_label(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

/// One comparison: empty string = pass, otherwise the mismatch description.
class Recorder {
 public:
  explicit Recorder(SweepStats& stats) : stats_(stats) {}

  void record(const std::string& context, const std::string& diff) {
    ++stats_.comparisons;
    if (diff.empty()) return;
    ++stats_.mismatches;
    if (stats_.failures.size() < 25) stats_.failures.push_back(context + ": " + diff);
  }

  /// Runs a whole case; any exception counts as a mismatch for that case.
  template <class Fn>
  void guarded(const std::string& context, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      record(context, std::string("exception: ") + e.what());
    }
  }

 private:
  SweepStats& stats_;
};

/// The factor (var - 1) as the classifier prints it: coefficients are reduced
/// mod p, so GF(p) shows "var + (p-1)".
std::string unit_root_factor(const FieldSpec& spec, char var) {
  const std::uint32_t p = spec.characteristic();
  const std::string v(1, var);
  return p == 0 ? v + " - 1" : v + " + " + std::to_string(p - 1);
}

/// All invariant factors in a report (used for the pure-factor checks).
std::string stray_factor(const GradedModuleReport& rep, int below_degree,
                         const std::string& allowed) {
  for (int j = rep.min_degree; j <= rep.top_degree() && j < below_degree; ++j) {
    const ModuleSummary& s = rep.degrees[static_cast<std::size_t>(j - rep.min_degree)];
    for (const std::string& f : s.invariant_factors) {
      if (f != allowed) return "degree " + std::to_string(j) + " factor " + f;
    }
  }
  return "";
}

void verify_type(const TypeVector& m, const SweepOptions& opt, std::uint64_t type_seed,
                 SweepStats& stats) {
  Recorder rec(stats);
  const std::string mlab = "m=(" + m.to_string() + ")";
  const int r = m.r();
  // The sign flip lives in the degree-2 differential, so it only exists for
  // r >= 2; degenerate single-block types always get the clean complex.
  const BasedComplex bc = build_tensor_complex(m, opt.inject_sign_flip && r >= 2);
  std::mt19937_64 rng(type_seed);

  if (opt.kinds.resolution) {
    rec.guarded(mlab + " resolution", [&] {
      const IntHomology h = dprime_homology_check(bc);
      Int expect_top = 1;
      for (long mi : m.parts) expect_top *= Int(mi - 1);
      std::string diff;
      for (int k = 0; k <= r; ++k) {
        const long free = h.free_ranks[static_cast<std::size_t>(k)];
        const Int want = k == r ? expect_top : Int(0);
        if (Int(free) != want) {
          diff = "degree " + std::to_string(k) + " free rank " + std::to_string(free) +
                 ", expected " + int_to_string(want);
          break;
        }
        if (!h.torsion[static_cast<std::size_t>(k)].empty()) {
          diff = "degree " + std::to_string(k) + " has torsion";
          break;
        }
      }
      rec.record(mlab + " resolution", diff);
    });
  }

  const auto supports = all_supports(r);
  for (int s = 2; s <= r; ++s) {
    const std::string slab = mlab + " s=" + std::to_string(s);
    const long d = m.order_d();

    if (opt.kinds.twisted) {
      for (const FieldSpec& spec : opt.fields) {
        for (const BlockSet& supp : supports) {
          if (spec.characteristic() == 2 && !supp.empty()) {
            ++stats.unrealizable;
            continue;
          }
          const std::vector<long> expect = longs(twisted_betti_section(m, {s}, supp));
          for (int a = 0; a < opt.assignments; ++a) {
            const std::string lab = slab + " twisted field=" + spec.label() +
                                    " supp=" + support_label(supp) +
                                    " assignment=" + std::to_string(a + 1);
            rec.guarded(lab, [&] {
              const auto dims = with_field(spec, [&](const auto& f) {
                const auto rep = sample_rep(f, m, supp, rng);
                return homology_dims_field(f, specialize_local_system(f, bc, rep, s));
              });
              rec.record(lab, dims == expect ? ""
                                             : "oracle " + dims_label(dims) + " vs formula " +
                                                   dims_label(expect));
            });
          }
        }
      }
    }

    if (opt.kinds.milnor) {
      const GradedModuleReport expect = milnor_module(m, {s}, FieldSpec::rationals());
      std::vector<GradedModuleReport> got(opt.fields.size());
      std::vector<bool> have(opt.fields.size(), false);
      for (std::size_t fi = 0; fi < opt.fields.size(); ++fi) {
        const FieldSpec& spec = opt.fields[fi];
        const std::string lab = slab + " milnor field=" + spec.label();
        rec.guarded(lab, [&] {
          got[fi] = with_field(spec, [&](const auto& f) {
            return module_classify_cyclic(f, specialize_cyclic(f, bc, d, s));
          });
          have[fi] = true;
          rec.record(lab, summary_diff(expect, got[fi]));
          rec.record(lab + " low-degree factors",
                     stray_factor(got[fi], s, unit_root_factor(spec, 'x')));
        });
        rec.guarded(lab + " euler", [&] {
          const auto dims = with_field(spec, [&](const auto& f) {
            return homology_dims_field(f, specialize_cyclic(f, bc, d, s).fc);
          });
          long alt = 0;
          for (int j = 0; j <= s; ++j) {
            alt += j % 2 == 0 ? dims[static_cast<std::size_t>(j)]
                              : -dims[static_cast<std::size_t>(j)];
          }
          const Int want = Int(d) * euler_section(m, {s});
          rec.record(lab + " euler",
                     Int(alt) == want ? ""
                                      : "alternating sum " + std::to_string(alt) +
                                            " != " + int_to_string(want));
        });
      }
      for (std::size_t fi = 1; fi < opt.fields.size(); ++fi) {
        if (!have[0] || !have[fi]) continue;
        const std::string lab = slab + " milnor " + opt.fields[0].label() + " vs " +
                                opt.fields[fi].label();
        rec.record(lab, summary_diff(got[0], got[fi]));
      }
    }

    if (opt.kinds.alexander) {
      const GradedModuleReport expect = alexander_module(m, {s}, FieldSpec::rationals());
      for (const FieldSpec& spec : opt.fields) {
        const std::string lab = slab + " alexander field=" + spec.label();
        rec.guarded(lab, [&] {
          const GradedModuleReport got = with_field(spec, [&](const auto& f) {
            return module_classify_laurent(f, specialize_laurent(f, bc, s));
          });
          rec.record(lab, summary_diff(expect, got));
          rec.record(lab + " torsion factors",
                     stray_factor(got, got.top_degree() + 1, unit_root_factor(spec, 't')));
        });
      }
    }

    if (opt.kinds.coinvariants && s < r) {
      const GradedModuleReport expect = coinvariants_module(m, {s}, FieldSpec::rationals());
      for (const FieldSpec& spec : opt.fields) {
        const std::string lab = slab + " coinvariants field=" + spec.label();
        rec.guarded(lab, [&] {
          const GradedModuleReport got = with_field(spec, [&](const auto& f) {
            return coinvariants_oracle_report(f, bc, s);
          });
          rec.record(lab, summary_diff(expect, got));
        });
      }
    }
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::size_t index) {
  std::uint64_t x = base + 0x9e3779b97f4a7c15ull * (index + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  return x;
}

}  // namespace

SweepStats run_verify_sweep(const SweepOptions& opt) {
  if (opt.assignments < 1) throw std::invalid_argument("need at least one assignment");
  if (opt.jobs < 1) throw std::invalid_argument("need at least one job");
  if (opt.fields.empty()) throw std::invalid_argument("need at least one field");
  const std::vector<TypeVector> types = sweep_types(opt.max_r, opt.max_m);
  std::vector<SweepStats> per_type(types.size());
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(opt.jobs), types.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < types.size(); ++i) {
      verify_type(types[i], opt, derive_seed(opt.seed, i), per_type[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next.fetch_add(1); i < types.size(); i = next.fetch_add(1)) {
        verify_type(types[i], opt, derive_seed(opt.seed, i), per_type[i]);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  SweepStats total;
  for (const SweepStats& s : per_type) total.merge(s);
  return total;
}

std::vector<std::vector<long>> rep_value_outcomes(const TypeVector& m, int s,
                                                  const BlockSet& supp, const FieldSpec& field,
                                                  std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("need at least one assignment");
  const BasedComplex bc = build_tensor_complex(m);
  std::mt19937_64 rng(seed);
  std::set<std::vector<long>> distinct;
  for (int a = 0; a < count; ++a) {
    distinct.insert(with_field(field, [&](const auto& f) {
      const auto rep = sample_rep(f, m, supp, rng);
      return homology_dims_field(f, specialize_local_system(f, bc, rep, s));
    }));
  }
  return {distinct.begin(), distinct.end()};
}

}  // namespace ssarr
