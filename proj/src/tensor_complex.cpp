#include "ssarr/tensor_complex.hpp"

#include <algorithm>
#include <map>

namespace ssarr {

namespace {

// Enumerate the degree-k basis: block subsets i_1 < ... < i_k in lexicographic
// order, and for each subset all line tuples in row-major order.
std::vector<BasisElement> enumerate_basis(const TypeVector& m, int k) {
  std::vector<BasisElement> out;
  const int r = m.r();
  std::vector<int> blocks(static_cast<std::size_t>(k));
  auto rec_blocks = [&](auto&& self, int pos, int next) -> void {
    if (pos == k) {
      std::vector<int> lines(static_cast<std::size_t>(k), 1);
      for (;;) {
        BasisElement el;
        el.factors.reserve(static_cast<std::size_t>(k));
        for (int p = 0; p < k; ++p) {
          el.factors.emplace_back(blocks[static_cast<std::size_t>(p)],
                                  lines[static_cast<std::size_t>(p)]);
        }
        out.push_back(std::move(el));
        int p = k - 1;
        while (p >= 0) {
          const long cap = m.parts[static_cast<std::size_t>(blocks[static_cast<std::size_t>(p)] - 1)];
          if (lines[static_cast<std::size_t>(p)] < cap) {
            ++lines[static_cast<std::size_t>(p)];
            break;
          }
          lines[static_cast<std::size_t>(p)] = 1;
          --p;
        }
        if (p < 0) break;
      }
      return;
    }
    for (int b = next; b <= r - (k - pos - 1); ++b) {
      blocks[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, b + 1);
    }
  };
  if (k == 0) {
    out.push_back(BasisElement{});
  } else {
    rec_blocks(rec_blocks, 0, 1);
  }
  return out;
}

using BasisIndex = std::map<std::vector<std::pair<int, int>>, std::size_t>;

BasisIndex index_basis(const std::vector<BasisElement>& basis) {
  BasisIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i].factors, i);
  return idx;
}

// Formal d o d check in the group ring.  Each composite term is
// sign1*sign2 * (x_a - 1)(x_b - 1) landing on a face with two factors
// removed; since distinct-block generators commute, everything must cancel.
void check_formal_square_zero(const BasedComplex& c) {
  for (int k = 2; k <= c.top(); ++k) {
    // terms[(row of C_{k-2}, col of C_k)][sorted pair of (block,line)] -> coeff
    std::map<std::pair<std::size_t, std::size_t>,
             std::map<std::vector<std::pair<int, int>>, long>>
        acc;
    // Index the degree-(k-1) entries by column for composition.
    std::vector<std::vector<const FormalEntry*>> by_col(
        static_cast<std::size_t>(c.dim(k - 1)));
    for (const FormalEntry& e : c.diff[static_cast<std::size_t>(k - 1)]) {
      by_col[e.col].push_back(&e);
    }
    for (const FormalEntry& outer : c.diff[static_cast<std::size_t>(k)]) {
      for (const FormalEntry* inner : by_col[outer.row]) {
        std::vector<std::pair<int, int>> key{{outer.block, outer.line},
                                             {inner->block, inner->line}};
        std::sort(key.begin(), key.end());
        acc[{inner->row, outer.col}][key] += outer.sign * inner->sign;
      }
    }
    for (const auto& [pos, terms] : acc) {
      for (const auto& [key, coeff] : terms) {
        if (coeff != 0) {
          throw std::logic_error("tensor complex differential does not square to zero");
        }
      }
    }
  }
}

}  // namespace

BasedComplex build_tensor_complex(const TypeVector& m, bool flip_one_sign) {
  BasedComplex c;
  c.m = m;
  const int r = m.r();
  c.basis.resize(static_cast<std::size_t>(r) + 1);
  c.diff.resize(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) {
    c.basis[static_cast<std::size_t>(k)] = enumerate_basis(m, k);
  }
  for (int k = 1; k <= r; ++k) {
    const auto& basis_k = c.basis[static_cast<std::size_t>(k)];
    const BasisIndex prev_index = index_basis(c.basis[static_cast<std::size_t>(k - 1)]);
    auto& entries = c.diff[static_cast<std::size_t>(k)];
    for (std::size_t col = 0; col < basis_k.size(); ++col) {
      const BasisElement& el = basis_k[col];
      for (int p = 0; p < k; ++p) {
        std::vector<std::pair<int, int>> face = el.factors;
        face.erase(face.begin() + p);
        const auto it = prev_index.find(face);
        if (it == prev_index.end()) {
          throw std::logic_error("tensor complex: face not found in basis");
        }
        FormalEntry e;
        e.row = it->second;
        e.col = col;
        e.block = el.factors[static_cast<std::size_t>(p)].first;
        e.line = el.factors[static_cast<std::size_t>(p)].second;
        e.sign = (p % 2 == 0) ? 1 : -1;  // (-1)^(p-1) with p counted from 1
        entries.push_back(e);
      }
    }
  }
  if (flip_one_sign) {
    if (r < 2 || c.diff[2].empty()) {
      throw std::invalid_argument("sign flip needs a degree-2 differential (r >= 2)");
    }
    c.diff[2][0].sign = -c.diff[2][0].sign;
    c.sign_flipped = true;
  } else {
    check_formal_square_zero(c);
  }
  return c;
}

void validate_truncation(const BasedComplex& c, int trunc) {
  if (trunc < 0 || trunc > c.top()) {
    throw std::invalid_argument("truncation degree " + std::to_string(trunc) +
                                " out of range 0.." + std::to_string(c.top()));
  }
}

IntComplex specialize_augmentation(const BasedComplex& c) {
  IntComplex out;
  const int r = c.top();
  out.dims.resize(static_cast<std::size_t>(r) + 1);
  out.d.resize(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) out.dims[static_cast<std::size_t>(k)] = c.dim(k);
  out.d[0] = Mat<Int>(0, static_cast<std::size_t>(c.dim(0)), Int(0));
  for (int k = 1; k <= r; ++k) {
    Mat<Int> mat(static_cast<std::size_t>(c.dim(k - 1)),
                 static_cast<std::size_t>(c.dim(k)), Int(0));
    for (const FormalEntry& e : c.diff[static_cast<std::size_t>(k)]) {
      mat.at(e.row, e.col) += Int(e.sign);
    }
    out.d[static_cast<std::size_t>(k)] = std::move(mat);
  }
  return out;
}

}  // namespace ssarr
