#include "ssarr/closed_form.hpp"

namespace ssarr {

std::vector<Int> twisted_poincare(const TypeVector& m, const BlockSet& supp) {
  validate_block_set(m, supp);
  const int r = m.r();
  std::vector<Int> poly{Int(1)};
  poly.reserve(static_cast<std::size_t>(r) + 1);
  for (int i = 1; i <= r; ++i) {
    const long mi = m.parts[static_cast<std::size_t>(i - 1)];
    if (supp.count(i)) {
      // Factor (m_i - 1) t: shift by one degree and scale.
      poly.insert(poly.begin(), Int(0));
      for (Int& c : poly) c *= Int(mi - 1);
    } else {
      // Factor 1 + m_i t.
      poly.push_back(Int(0));
      for (std::size_t j = poly.size() - 1; j >= 1; --j) {
        poly[j] += Int(mi) * poly[j - 1];
      }
    }
  }
  poly.resize(static_cast<std::size_t>(r) + 1, Int(0));
  return poly;
}

std::vector<Int> twisted_betti_section(const TypeVector& m, const SectionSpec& s,
                                       const BlockSet& supp) {
  validate_section(m, s);
  const std::vector<Int> b = twisted_poincare(m, supp);
  const std::vector<Int> sigma = elementary_symmetric(m);
  std::vector<Int> dims(static_cast<std::size_t>(s.s) + 1);
  for (int j = 0; j < s.s; ++j) dims[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j)];
  Int top = sigma[static_cast<std::size_t>(s.s)];
  for (int i = 0; i < s.s; ++i) {
    const Int diff = sigma[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
    top += ((s.s - i) % 2 == 0) ? diff : -diff;
  }
  dims[static_cast<std::size_t>(s.s)] = top;
  return dims;
}

Int euler_section(const TypeVector& m, const SectionSpec& s) {
  validate_section(m, s);
  const std::vector<Int> sigma = elementary_symmetric(m);
  Int chi = 0;
  for (int j = 0; j <= s.s; ++j) {
    const Int& v = sigma[static_cast<std::size_t>(j)];
    chi += (j % 2 == 0) ? v : -v;
  }
  return chi;
}

GradedModuleReport milnor_module(const TypeVector& m, const SectionSpec& s,
                                 const FieldSpec& field) {
  validate_section(m, s);
  (void)field;  // the closed form is field independent (torsion-freeness)
  const std::vector<Int> z = z_vector(m);
  GradedModuleReport rep;
  rep.coeff = GradedModuleReport::Coeff::cyclic;
  rep.order_d = m.order_d();
  rep.min_degree = 0;
  rep.provenance = "closed-form";
  rep.degrees.resize(static_cast<std::size_t>(s.s) + 1);
  for (int j = 0; j < s.s; ++j) {
    const Int zprev = j == 0 ? Int(0) : z[static_cast<std::size_t>(j - 1)];
    rep.degrees[static_cast<std::size_t>(j)].trivial_mult = z[static_cast<std::size_t>(j)] + zprev;
  }
  rep.degrees[static_cast<std::size_t>(s.s)].trivial_mult = z[static_cast<std::size_t>(s.s - 1)];
  rep.degrees[static_cast<std::size_t>(s.s)].free_mult = z[static_cast<std::size_t>(s.s)];
  return rep;
}

GradedModuleReport alexander_module(const TypeVector& m, const SectionSpec& s,
                                    const FieldSpec& field) {
  validate_section(m, s);
  (void)field;
  const std::vector<Int> z = z_vector(m);
  GradedModuleReport rep;
  rep.coeff = GradedModuleReport::Coeff::laurent;
  rep.min_degree = 0;
  rep.provenance = "closed-form";
  rep.degrees.resize(static_cast<std::size_t>(s.s) + 1);
  for (int j = 0; j < s.s; ++j) {
    rep.degrees[static_cast<std::size_t>(j)].trivial_mult = z[static_cast<std::size_t>(j)];
  }
  rep.degrees[static_cast<std::size_t>(s.s)].free_mult = z[static_cast<std::size_t>(s.s)];
  rep.infinite_dimensional = z[static_cast<std::size_t>(s.s)] > 0;
  return rep;
}

GradedModuleReport coinvariants_module(const TypeVector& m, const SectionSpec& s,
                                       const FieldSpec& field) {
  validate_section(m, s);
  (void)field;
  if (s.s >= m.r()) {
    throw std::invalid_argument("coinvariants need s < r (pi_s vanishes when s = r)");
  }
  const SymmetricData sym = symmetric_data(m);
  GradedModuleReport rep;
  rep.coeff = GradedModuleReport::Coeff::laurent;
  rep.min_degree = s.s;
  rep.provenance = "closed-form";
  rep.degrees.resize(1);
  if (s.s < m.r() - 1) {
    rep.degrees[0].free_mult = sym.z[static_cast<std::size_t>(s.s)];
    rep.degrees[0].trivial_mult = sym.z[static_cast<std::size_t>(s.s) + 1];
  } else {
    rep.degrees[0].free_mult = sym.sigma[static_cast<std::size_t>(m.r())];
  }
  rep.infinite_dimensional = rep.degrees[0].free_mult > 0;
  return rep;
}

GroupPresentation marked_group_presentation(const TypeVector& m) {
  GroupPresentation pres;
  const int r = m.r();
  for (int i = 1; i <= r; ++i) {
    const long mi = m.parts[static_cast<std::size_t>(i - 1)];
    for (long j = 1; j <= mi; ++j) {
      pres.generators.push_back("x_" + std::to_string(j) + "^" + std::to_string(i));
      pres.generator_block.push_back(i);
    }
  }
  const int total = static_cast<int>(pres.generators.size());
  for (int a = 0; a < total; ++a) {
    for (int b = a + 1; b < total; ++b) {
      if (pres.generator_block[static_cast<std::size_t>(a)] !=
          pres.generator_block[static_cast<std::size_t>(b)]) {
        pres.commutators.emplace_back(a, b);
      }
    }
  }
  return pres;
}

}  // namespace ssarr
