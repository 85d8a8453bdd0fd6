#pragma once

#include <json.hpp>

#include "ssarr/lattice.hpp"
#include "ssarr/report.hpp"
#include "ssarr/verify.hpp"

namespace ssarr {

using Json = nlohmann::ordered_json;

/// Single-line human form of one graded piece, e.g. "trivial^3 + free^1" or
/// "0"; exact multiplicities, no field-size dependence.
std::string module_summary_text(const ModuleSummary& s);

/// Human form of a whole report: "H_j = ..." per degree plus the coefficient
/// ring, one line per degree.
std::vector<std::string> module_report_lines(const GradedModuleReport& rep);

Json module_summary_json(const ModuleSummary& s);
Json module_report_json(const GradedModuleReport& rep);
Json dims_json(const std::vector<Int>& dims);
Json dims_json(const std::vector<long>& dims);
Json flat_json(const Rank2Flat& f);
Json lattice_json(const LatticeData& l);
Json detection_json(const DetectionResult& d);
Json sweep_stats_json(const SweepStats& st);

}  // namespace ssarr
