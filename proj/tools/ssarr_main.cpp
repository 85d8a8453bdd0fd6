// ssarr — invariants of generic sections of split-solvable line arrangements.
//
// Subcommands:
//   invariants   closed-form twisted/Milnor/Alexander/coinvariants data,
//                optionally cross-checked against the chain-level oracle
//   verify       the full oracle-vs-formula sweep over a family of types
//   lattice      intersection-lattice predicates of an arrangement file
//   section      seeded generic s-plane section with certificate
//
// Exit codes: 0 success, 2 validation/parse error, 3 oracle mismatch,
// 4 genericity failure.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssarr/arrangement.hpp"
#include "ssarr/closed_form.hpp"
#include "ssarr/homology.hpp"
#include "ssarr/lattice.hpp"
#include "ssarr/report_json.hpp"
#include "ssarr/tensor_complex.hpp"
#include "ssarr/verify.hpp"

namespace {

using namespace ssarr;

BlockSet parse_block_set(const std::string& text) {
  BlockSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("support: '" + item + "' is not an integer");
    }
    if (used != item.size()) {
      throw std::invalid_argument("support: '" + item + "' is not an integer");
    }
    out.insert(value);
  }
  return out;
}

std::vector<FieldSpec> parse_field_list(const std::string& text) {
  std::vector<FieldSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(FieldSpec::parse(item));
  }
  if (out.empty()) throw std::invalid_argument("--fields: empty field list");
  return out;
}

std::string block_set_to_string(const BlockSet& supp) {
  std::string out = "{";
  bool first = true;
  for (int i : supp) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string dims_to_string(const std::vector<Int>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ", ";
    out += int_to_string(dims[i]);
  }
  return out;
}

std::string dims_to_string(const std::vector<long>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(dims[i]);
  }
  return out;
}

/// Writes the document to `path` ("-" = stdout).
void write_json_doc(const Json& doc, const std::string& path) {
  if (path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

struct InvariantsArgs {
  std::string type_str;
  int section = 0;
  std::string field_str = "q";
  std::string supp_str;
  std::string which = "all";
  bool oracle = false;
  std::string json_path;
  std::uint64_t seed = 1;
};

void print_module_section(const std::string& name, const std::string& provenance,
                          const GradedModuleReport& closed,
                          const GradedModuleReport* oracle_rep,
                          const std::string& diff) {
  std::cout << name << "  [" << provenance << "]\n";
  for (const std::string& line : module_report_lines(closed)) {
    std::cout << "  " << line << "\n";
  }
  if (oracle_rep && !diff.empty()) {
    std::cout << "  oracle disagrees: " << diff << "\n";
    for (const std::string& line : module_report_lines(*oracle_rep)) {
      std::cout << "  oracle: " << line << "\n";
    }
  }
}

int run_invariants(const InvariantsArgs& args) {
  const TypeVector m = TypeVector::parse(args.type_str);
  const SectionSpec s{args.section};
  validate_section(m, s);
  const FieldSpec field = FieldSpec::parse(args.field_str);
  const BlockSet supp = parse_block_set(args.supp_str);
  validate_block_set(m, supp);

  const bool all = args.which == "all";
  const bool want_twisted = all || args.which == "twisted";
  const bool want_milnor = all || args.which == "milnor";
  const bool want_alexander = all || args.which == "alexander";
  // pi_s vanishes when s = r; in "all" mode the coinvariants section is
  // simply absent, an explicit request is a validation error.
  const bool want_coinv = args.which == "coinvariants" || (all && s.s < m.r());
  if (!all && !want_twisted && !want_milnor && !want_alexander && !want_coinv) {
    throw std::invalid_argument("unknown invariant '" + args.which +
                                "' (twisted|milnor|alexander|coinvariants|all)");
  }

  const long d = m.order_d();
  const bool quiet = args.json_path == "-";
  if (!quiet) {
    std::cout << "type (" << m.to_string() << ")  s = " << s.s << "  field "
              << field.label() << "  d = " << d << "  support "
              << block_set_to_string(supp) << "\n\n";
  }

  Json doc;
  doc["schema"] = 1;
  doc["command"] = "invariants";
  doc["type"] = m.parts;
  doc["section"] = s.s;
  doc["field"] = field.label();
  doc["support"] = std::vector<int>(supp.begin(), supp.end());
  doc["order"] = d;
  doc["seed"] = args.seed;
  Json sections;

  BasedComplex complex;
  if (args.oracle) complex = build_tensor_complex(m);
  bool any_mismatch = false;

  if (want_twisted) {
    const std::vector<Int> dims = twisted_betti_section(m, s, supp);
    Json sec;
    sec["dims"] = dims_json(dims);
    std::string prov = "closed-form";
    std::vector<long> oracle_dims;
    if (args.oracle) {
      oracle_dims = with_field(field, [&](auto f) {
        std::mt19937_64 rng(args.seed);
        const auto rep = sample_rep(f, m, supp, rng);
        const auto fc = specialize_local_system(f, complex, rep, s.s);
        return homology_dims_field(f, fc);
      });
      bool match = oracle_dims.size() == dims.size();
      for (std::size_t j = 0; match && j < dims.size(); ++j) {
        match = Int(oracle_dims[j]) == dims[j];
      }
      prov = match ? "both:match" : "both:MISMATCH";
      if (!match) any_mismatch = true;
      sec["oracle_dims"] = dims_json(oracle_dims);
    }
    sec["provenance"] = prov;
    sections["twisted"] = std::move(sec);
    if (!quiet) {
      std::cout << "twisted  [" << prov << "]\n";
      std::cout << "  dims H_0..H_" << s.s << ": " << dims_to_string(dims) << "\n";
      if (args.oracle && prov == "both:MISMATCH") {
        std::cout << "  oracle dims: " << dims_to_string(oracle_dims) << "\n";
      }
      std::cout << "\n";
    }
  }

  struct ModuleJob {
    const char* name;
    GradedModuleReport closed;
  };
  std::vector<ModuleJob> jobs;
  if (want_milnor) jobs.push_back({"milnor", milnor_module(m, s, field)});
  if (want_alexander) jobs.push_back({"alexander", alexander_module(m, s, field)});
  if (want_coinv) jobs.push_back({"coinvariants", coinvariants_module(m, s, field)});

  for (const ModuleJob& job : jobs) {
    Json sec;
    sec["closed_form"] = module_report_json(job.closed);
    std::string prov = "closed-form";
    GradedModuleReport oracle_rep;
    std::string diff;
    if (args.oracle) {
      const std::string name = job.name;
      oracle_rep = with_field(field, [&](auto f) {
        if (name == "milnor") {
          return module_classify_cyclic(f, specialize_cyclic(f, complex, d, s.s));
        }
        if (name == "alexander") {
          return module_classify_laurent(f, specialize_laurent(f, complex, s.s));
        }
        return coinvariants_oracle_report(f, complex, s.s);
      });
      diff = summary_diff(job.closed, oracle_rep);
      prov = diff.empty() ? "both:match" : "both:MISMATCH";
      if (!diff.empty()) any_mismatch = true;
      sec["oracle"] = module_report_json(oracle_rep);
    }
    sec["provenance"] = prov;
    sections[job.name] = std::move(sec);
    if (!quiet) {
      print_module_section(job.name, prov, job.closed,
                           args.oracle ? &oracle_rep : nullptr, diff);
      std::cout << "\n";
    }
  }

  doc["invariants"] = std::move(sections);
  if (!args.json_path.empty()) write_json_doc(doc, args.json_path);
  return any_mismatch ? 3 : 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
  int max_r = 3;
  long max_m = 3;
  std::string fields_str = "q,gf:2,gf:3,gf:5";
  std::uint64_t seed = 1;
  int jobs = 1;
  int assignments = 3;
  std::string json_path;
  bool inject_sign_flip = false;
};

int run_verify(const VerifyArgs& args) {
  SweepOptions opt;
  opt.max_r = args.max_r;
  opt.max_m = args.max_m;
  opt.fields = parse_field_list(args.fields_str);
  opt.seed = args.seed;
  opt.jobs = args.jobs;
  opt.assignments = args.assignments;
  opt.inject_sign_flip = args.inject_sign_flip;

  const std::size_t type_count = sweep_types(opt.max_r, opt.max_m).size();
  const SweepStats stats = run_verify_sweep(opt);

  const bool quiet = args.json_path == "-";
  if (!quiet) {
    std::cout << "type sweep: r <= " << opt.max_r << ", m_i <= " << opt.max_m
              << " (" << type_count << " types)\n";
    std::cout << "fields: " << args.fields_str << "; seed " << opt.seed << "; "
              << opt.assignments << " value assignments per support; jobs "
              << opt.jobs << "\n";
    if (opt.inject_sign_flip) {
      std::cout << "NOTE: differentials deliberately corrupted (--inject-sign-flip)\n";
    }
    std::cout << "comparisons: " << stats.comparisons << "\n";
    std::cout << "unrealizable supports skipped: " << stats.unrealizable << "\n";
    std::cout << "mismatches: " << stats.mismatches << "\n";
    if (!stats.failures.empty()) {
      std::cout << "first failing cases:\n";
      for (const std::string& f : stats.failures) std::cout << "  " << f << "\n";
      if (stats.mismatches > static_cast<long>(stats.failures.size())) {
        std::cout << "  ... and " << stats.mismatches - static_cast<long>(stats.failures.size())
                  << " more\n";
      }
    }
  }

  if (!args.json_path.empty()) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = "verify";
    doc["max_r"] = opt.max_r;
    doc["max_m"] = opt.max_m;
    Json fields = Json::array();
    for (const FieldSpec& f : opt.fields) fields.push_back(f.label());
    doc["fields"] = std::move(fields);
    doc["seed"] = opt.seed;
    doc["assignments"] = opt.assignments;
    doc["types"] = type_count;
    doc["injected_sign_flip"] = opt.inject_sign_flip;
    doc["stats"] = sweep_stats_json(stats);
    write_json_doc(doc, args.json_path);
  }
  return stats.mismatches > 0 ? 3 : 0;
}

// ---------------------------------------------------------------------------
// lattice
// ---------------------------------------------------------------------------

struct LatticeArgs {
  std::string file;
  bool nice = false;
  bool nodal = false;
  bool detect = false;
  bool betti = false;
  int dependents = -1;  // -1 = not requested
  std::string json_path;
};

Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open arrangement file: " + path);
  return parse_arrangement(in);
}

int run_lattice(const LatticeArgs& args) {
  const Arrangement a = read_arrangement_file(args.file);
  const int n = static_cast<int>(a.size()) - 1;
  const bool quiet = args.json_path == "-";

  Json doc;
  doc["schema"] = 1;
  doc["command"] = "lattice";
  doc["file"] = args.file;
  doc["ambient"] = a.ambient;
  doc["hyperplanes"] = a.size();

  if (!quiet) {
    std::cout << "arrangement: " << a.size() << " hyperplanes in P^" << a.ambient
              << " (" << args.file << ")\n";
  }

  // Explicit rank-2 predicates require a line arrangement and surface the
  // intersection_points validation error; the bare summary is best effort.
  const bool no_flags =
      !args.nice && !args.nodal && !args.detect && !args.betti && args.dependents < 0;
  const bool need_points =
      args.nice || args.nodal || args.betti || (no_flags && a.ambient == 2);
  LatticeData points;
  if (need_points) {
    points = intersection_points(a);
    std::map<int, int> by_mult;
    for (const Rank2Flat& f : points.rank2_flats) by_mult[f.multiplicity()]++;
    if (!quiet) {
      std::cout << "rank-2 flats: " << points.rank2_flats.size();
      for (const auto& [mult, count] : by_mult) {
        std::cout << "  [mult " << mult << "] x" << count;
      }
      std::cout << "\n";
    }
    doc["lattice"] = lattice_json(points);
  }

  if (args.nodal) {
    int max_mult = 0;
    for (const Rank2Flat& f : points.rank2_flats) max_mult = std::max(max_mult, f.multiplicity());
    const bool nodal = max_mult <= 2;
    if (!quiet) {
      std::cout << (nodal ? "nodal\n"
                          : "not nodal (maximal multiplicity " + std::to_string(max_mult) + ")\n");
    }
    doc["nodal"] = nodal;
  }

  if (args.betti) {
    const ProjectiveBetti b = projective_betti(points, n);
    if (!quiet) {
      std::cout << "projective complement betti: b0 = " << b.b0 << ", b1 = " << b.b1
                << ", b2 = " << b.b2 << "\n";
    }
    Json bj;
    bj["b0"] = b.b0;
    bj["b1"] = b.b1;
    bj["b2"] = b.b2;
    doc["betti"] = std::move(bj);
  }

  if (args.detect) {
    const DetectionResult det = detect_split_solvable(a);
    if (!quiet) {
      if (det.type) {
        std::cout << "split-solvable of type (" << det.type->to_string() << ")";
        if (!(*det.type == *det.canonical)) {
          std::cout << ", canonical (" << det.canonical->to_string() << ")";
        }
        std::cout << "\n";
      } else {
        std::cout << "not split solvable: " << det.reason << "\n";
      }
    }
    doc["detect"] = detection_json(det);
  }

  if (args.nice) {
    const MultiplicityGraph g = multiplicity_graph(points);
    const auto cert = is_nice(g);
    if (!quiet) {
      std::cout << "multiplicity >= 3 graph: " << g.size() << " vertices, "
                << g.edges().size() << " edges\n";
      if (cert) {
        std::cout << "nice: V' = {";
        for (std::size_t i = 0; i < cert->chosen.size(); ++i) {
          if (i) std::cout << ",";
          std::cout << cert->chosen[i];
        }
        std::cout << "}, reduced graph has " << cert->reduced_edges.size()
                  << " edges (forest)\n";
      } else {
        std::cout << "not nice: no vertex subset leaves an acyclic reduced graph\n";
      }
    }
    Json nj;
    nj["vertices"] = g.size();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    nj["edges"] = std::move(edges);
    nj["nice"] = cert.has_value();
    if (cert) {
      nj["chosen"] = cert->chosen;
      Json reduced = Json::array();
      for (const auto& [u, v] : cert->reduced_edges) reduced.push_back({u, v});
      nj["reduced_edges"] = std::move(reduced);
    }
    doc["nice"] = std::move(nj);
  }

  if (args.dependents >= 0) {
    const LatticeData dep = dependent_subsets(a, args.dependents);
    if (!quiet) {
      std::cout << "dependent subsets of size <= " << args.dependents + 1 << ": "
                << dep.dependent_subsets.size() << "\n";
      const std::size_t shown = std::min<std::size_t>(dep.dependent_subsets.size(), 40);
      for (std::size_t i = 0; i < shown; ++i) {
        std::cout << "  {";
        const auto& sub = dep.dependent_subsets[i];
        for (std::size_t j = 0; j < sub.size(); ++j) {
          if (j) std::cout << ",";
          std::cout << sub[j];
        }
        std::cout << "}\n";
      }
      if (shown < dep.dependent_subsets.size()) {
        std::cout << "  ... and " << dep.dependent_subsets.size() - shown << " more\n";
      }
    }
    Json dj;
    dj["bound"] = dep.dependent_bound;
    dj["subsets"] = dep.dependent_subsets;
    doc["dependents"] = std::move(dj);
  }

  if (!args.json_path.empty()) write_json_doc(doc, args.json_path);
  return 0;
}

// ---------------------------------------------------------------------------
// section
// ---------------------------------------------------------------------------

struct SectionArgs {
  std::string type_str;
  std::string file;
  int s = 0;
  std::uint64_t seed = 1;
  std::string out;
  int max_attempts = 16;
};

int run_section(const SectionArgs& args) {
  if (args.type_str.empty() == args.file.empty()) {
    throw std::invalid_argument("exactly one of --type and --file is required");
  }
  const Arrangement a = args.type_str.empty()
                            ? read_arrangement_file(args.file)
                            : model_arrangement(TypeVector::parse(args.type_str));
  const SectionResult res = generic_section(a, args.s, args.seed, args.max_attempts);

  std::ostringstream body;
  body << "# generic " << args.s << "-plane section of " << a.size()
       << " hyperplanes in P^" << a.ambient << "\n";
  if (!args.type_str.empty()) body << "# source: model arrangement of type (" << args.type_str << ")\n";
  if (!args.file.empty()) body << "# source: " << args.file << "\n";
  body << "# seed " << res.seed << ", accepted on attempt " << res.attempts << "\n";
  body << "# certificate: every hyperplane subset of size <= " << args.s + 1
       << " keeps its rank under restriction\n";
  body << "# embedding (rows = original coordinates, columns = section coordinates):\n";
  for (std::size_t i = 0; i < res.embedding.rows; ++i) {
    body << "#  ";
    for (std::size_t j = 0; j < res.embedding.cols; ++j) {
      body << " " << rational_to_string(res.embedding.at(i, j));
    }
    body << "\n";
  }
  body << arrangement_to_text(res.arrangement);

  if (args.out.empty() || args.out == "-") {
    std::cout << body.str();
  } else {
    std::ofstream out(args.out);
    if (!out) throw std::invalid_argument("cannot open output file: " + args.out);
    out << body.str();
    std::cout << "wrote " << res.arrangement.size() << " hyperplanes in P^" << args.s
              << " to " << args.out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of generic sections of split-solvable arrangements"};
  app.require_subcommand(1);

  InvariantsArgs inv;
  CLI::App* inv_cmd = app.add_subcommand(
      "invariants", "closed-form invariants of a sectioned type, with optional oracle check");
  inv_cmd->add_option("--type", inv.type_str, "block sizes m1,m2,...")->required();
  inv_cmd->add_option("--section", inv.section, "section dimension s (2 <= s <= r)")->required();
  inv_cmd->add_option("--field", inv.field_str, "coefficient field: q or gf:p")
      ->capture_default_str();
  inv_cmd->add_option("--supp", inv.supp_str, "support blocks of the local system, e.g. 1,3");
  inv_cmd->add_option("--invariant", inv.which,
                      "twisted|milnor|alexander|coinvariants|all")
      ->capture_default_str();
  inv_cmd->add_flag("--oracle", inv.oracle, "cross-check against the chain-level computation");
  inv_cmd->add_option("--json", inv.json_path, "write JSON report to this path ('-' = stdout)");
  inv_cmd->add_option("--seed", inv.seed, "seed for sampled representation values")
      ->capture_default_str();

  VerifyArgs ver;
  CLI::App* ver_cmd =
      app.add_subcommand("verify", "cross-check every closed form against the oracle");
  ver_cmd->add_option("--max-r", ver.max_r, "largest number of blocks")->capture_default_str();
  ver_cmd->add_option("--max-m", ver.max_m, "largest block size")->capture_default_str();
  ver_cmd->add_option("--fields", ver.fields_str, "comma-separated field list")
      ->capture_default_str();
  ver_cmd->add_option("--seed", ver.seed, "sweep seed")->capture_default_str();
  ver_cmd->add_option("--jobs", ver.jobs, "worker threads")->capture_default_str();
  ver_cmd->add_option("--assignments", ver.assignments,
                      "random value assignments per support")
      ->capture_default_str();
  ver_cmd->add_option("--json", ver.json_path, "write JSON summary to this path ('-' = stdout)");
  ver_cmd
      ->add_flag("--inject-sign-flip", ver.inject_sign_flip,
                 "corrupt one differential sign (harness self-test; must report mismatches)")
      ->group("");  // hidden

  LatticeArgs lat;
  CLI::App* lat_cmd = app.add_subcommand("lattice", "intersection-lattice report of a file");
  lat_cmd->add_option("--file", lat.file, "arrangement file")->required();
  lat_cmd->add_flag("--nice", lat.nice, "search for a niceness certificate");
  lat_cmd->add_flag("--nodal", lat.nodal, "test whether all intersection points are double");
  lat_cmd->add_flag("--detect-type", lat.detect, "recognize a split-solvable lattice");
  lat_cmd->add_flag("--betti", lat.betti, "betti numbers of the projective complement");
  lat_cmd->add_option("--dependents", lat.dependents,
                      "list dependent subsets of size <= p+1 for this p");
  lat_cmd->add_option("--json", lat.json_path, "write JSON report to this path ('-' = stdout)");

  SectionArgs sec;
  CLI::App* sec_cmd =
      app.add_subcommand("section", "write a certified generic s-plane section");
  sec_cmd->add_option("--type", sec.type_str, "block sizes m1,m2,... (model arrangement)");
  sec_cmd->add_option("--file", sec.file, "arrangement file to section");
  sec_cmd->add_option("--s", sec.s, "section dimension")->required();
  sec_cmd->add_option("--seed", sec.seed, "embedding seed")->capture_default_str();
  sec_cmd->add_option("--out", sec.out, "output path (default stdout)");
  sec_cmd->add_option("--max-attempts", sec.max_attempts, "retry budget for the certificate")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (inv_cmd->parsed()) return run_invariants(inv);
    if (ver_cmd->parsed()) return run_verify(ver);
    if (lat_cmd->parsed()) return run_lattice(lat);
    if (sec_cmd->parsed()) return run_section(sec);
  } catch (const genericity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
