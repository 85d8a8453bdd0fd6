#include "ssarr/report_json.hpp"

namespace ssarr {

std::string module_summary_text(const ModuleSummary& s) {
  std::vector<std::string> parts;
  if (s.trivial_mult > 0) parts.push_back("trivial^" + int_to_string(s.trivial_mult));
  if (s.free_mult > 0) parts.push_back("free^" + int_to_string(s.free_mult));
  if (s.other_dim > 0) parts.push_back("other[dim " + int_to_string(s.other_dim) + "]");
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::vector<std::string> module_report_lines(const GradedModuleReport& rep) {
  std::vector<std::string> lines;
  const std::string ring = rep.coeff == GradedModuleReport::Coeff::cyclic
                               ? "K[Z_" + std::to_string(rep.order_d) + "]"
                               : "K[Z]";
  for (std::size_t i = 0; i < rep.degrees.size(); ++i) {
    const int degree = rep.min_degree + static_cast<int>(i);
    std::string line = "H_" + std::to_string(degree) + " = " +
                       module_summary_text(rep.degrees[i]) + "  over " + ring;
    const auto& factors = rep.degrees[i].invariant_factors;
    if (rep.degrees[i].factors_known && !factors.empty()) {
      line += "  [";
      for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j) line += ", ";
        line += factors[j];
      }
      line += "]";
    }
    lines.push_back(std::move(line));
  }
  if (rep.infinite_dimensional) {
    lines.push_back("(infinite dimensional over K: free part is nonzero)");
  }
  return lines;
}

Json module_summary_json(const ModuleSummary& s) {
  Json j;
  j["trivial"] = int_to_string(s.trivial_mult);
  j["free"] = int_to_string(s.free_mult);
  j["other_dim"] = int_to_string(s.other_dim);
  if (s.factors_known) j["invariant_factors"] = s.invariant_factors;
  return j;
}

Json module_report_json(const GradedModuleReport& rep) {
  Json j;
  j["coefficients"] = rep.coeff == GradedModuleReport::Coeff::cyclic ? "cyclic" : "laurent";
  if (rep.coeff == GradedModuleReport::Coeff::cyclic) j["order"] = rep.order_d;
  j["min_degree"] = rep.min_degree;
  Json degrees = Json::array();
  for (std::size_t i = 0; i < rep.degrees.size(); ++i) {
    Json piece = module_summary_json(rep.degrees[i]);
    piece["degree"] = rep.min_degree + static_cast<int>(i);
    degrees.push_back(std::move(piece));
  }
  j["degrees"] = std::move(degrees);
  j["infinite_dimensional"] = rep.infinite_dimensional;
  return j;
}

Json dims_json(const std::vector<Int>& dims) {
  Json j = Json::array();
  for (const Int& d : dims) j.push_back(int_to_string(d));
  return j;
}

Json dims_json(const std::vector<long>& dims) {
  Json j = Json::array();
  for (long d : dims) j.push_back(std::to_string(d));
  return j;
}

Json flat_json(const Rank2Flat& f) {
  Json j;
  Json point = Json::array();
  for (const Rat& c : f.point) point.push_back(rational_to_string(c));
  j["point"] = std::move(point);
  j["incident"] = f.incident;
  j["multiplicity"] = f.multiplicity();
  return j;
}

Json lattice_json(const LatticeData& l) {
  Json j;
  Json flats = Json::array();
  for (const Rank2Flat& f : l.rank2_flats) flats.push_back(flat_json(f));
  j["rank2_flats"] = std::move(flats);
  if (l.dependent_bound > 0) {
    j["dependent_bound"] = l.dependent_bound;
    j["dependent_subsets"] = l.dependent_subsets;
  }
  return j;
}

Json detection_json(const DetectionResult& d) {
  Json j;
  j["split_solvable"] = d.type.has_value();
  if (d.type) {
    j["type"] = d.type->parts;
    j["type_sorted"] = d.canonical->parts;
  } else {
    j["reason"] = d.reason;
  }
  return j;
}

Json sweep_stats_json(const SweepStats& st) {
  Json j;
  j["comparisons"] = st.comparisons;
  j["mismatches"] = st.mismatches;
  j["unrealizable_supports"] = st.unrealizable;
  j["failures"] = st.failures;
  return j;
}

}  // namespace ssarr
