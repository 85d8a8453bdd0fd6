#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ssarr {

/// Dense row-major matrix over an arbitrary element type.  Arithmetic lives
/// in the field/ring objects, not here.
template <class T>
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, const T& fill = T{})
      : rows(r), cols(c), a(r * c, fill) {}

  T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  T* row(std::size_t i) { return a.data() + i * cols; }
  const T* row(std::size_t i) const { return a.data() + i * cols; }
};

template <class T, class Fn>
Mat<decltype(std::declval<Fn>()(std::declval<const T&>()))> map_matrix(
    const Mat<T>& m, Fn&& fn) {
  Mat<decltype(fn(std::declval<const T&>()))> out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = fn(m.a[i]);
  return out;
}

}  // namespace ssarr
