#include "ssarr/homology.hpp"

namespace ssarr {

IntHomology dprime_homology_check(const BasedComplex& c) {
  const IntComplex ic = specialize_augmentation(c);
  const int r = ic.top();
  const IntegerRing ring;
  std::vector<SnfResult<IntegerRing>> snf(static_cast<std::size_t>(r) + 2);
  for (int k = 1; k <= r; ++k) {
    snf[static_cast<std::size_t>(k)] = snf_euclidean(ring, ic.d[static_cast<std::size_t>(k)]);
  }
  IntHomology out;
  out.free_ranks.resize(static_cast<std::size_t>(r) + 1);
  out.torsion.resize(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) {
    const long rank_k = k == 0 ? 0 : static_cast<long>(snf[static_cast<std::size_t>(k)].rank);
    const long rank_next = k == r ? 0 : static_cast<long>(snf[static_cast<std::size_t>(k) + 1].rank);
    out.free_ranks[static_cast<std::size_t>(k)] =
        ic.dims[static_cast<std::size_t>(k)] - rank_k - rank_next;
    if (k < r) {
      for (const Int& factor : snf[static_cast<std::size_t>(k) + 1].factors) {
        if (factor != 1 && factor != -1) {
          out.torsion[static_cast<std::size_t>(k)].push_back(factor);
        }
      }
    }
  }
  return out;
}

IntHomology dprime_homology_check(const TypeVector& m) {
  return dprime_homology_check(build_tensor_complex(m));
}

}  // namespace ssarr
