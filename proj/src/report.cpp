#include "ssarr/report.hpp"

#include <sstream>

namespace ssarr {

Int GradedModuleReport::k_dimension(int j) const {
  const int idx = j - min_degree;
  if (idx < 0 || idx >= static_cast<int>(degrees.size())) return Int(0);
  const ModuleSummary& p = degrees[static_cast<std::size_t>(idx)];
  if (coeff == Coeff::laurent && p.free_mult != 0) {
    throw std::logic_error("k_dimension: infinite-dimensional Laurent piece");
  }
  const Int per_free = coeff == Coeff::cyclic ? Int(order_d) : Int(0);
  return p.trivial_mult + per_free * p.free_mult + p.other_dim;
}

std::string summary_diff(const GradedModuleReport& a, const GradedModuleReport& b) {
  std::ostringstream out;
  if (a.coeff != b.coeff) return "coefficient ring kind differs";
  if (a.order_d != b.order_d) {
    out << "cyclic order differs: " << a.order_d << " vs " << b.order_d;
    return out.str();
  }
  if (a.min_degree != b.min_degree || a.degrees.size() != b.degrees.size()) {
    out << "graded range differs: [" << a.min_degree << ".." << a.top_degree()
        << "] vs [" << b.min_degree << ".." << b.top_degree() << "]";
    return out.str();
  }
  for (std::size_t k = 0; k < a.degrees.size(); ++k) {
    const ModuleSummary& x = a.degrees[k];
    const ModuleSummary& y = b.degrees[k];
    if (!x.same_summary(y)) {
      out << "degree " << (a.min_degree + static_cast<int>(k)) << ": (trivial,free,other) = ("
          << x.trivial_mult.str() << "," << x.free_mult.str() << "," << x.other_dim.str()
          << ") vs (" << y.trivial_mult.str() << "," << y.free_mult.str() << ","
          << y.other_dim.str() << ")";
      return out.str();
    }
  }
  if (a.coeff == GradedModuleReport::Coeff::laurent &&
      a.infinite_dimensional != b.infinite_dimensional) {
    return "finiteness flag differs";
  }
  return std::string();
}

}  // namespace ssarr
