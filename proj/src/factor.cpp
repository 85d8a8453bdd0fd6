#include "ssarr/factor.hpp"

#include <algorithm>
#include <map>

namespace ssarr {

std::vector<long> divisors_of(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Exact division of integer polynomials (monic divisor), used only for the
// cyclotomic recurrence where the quotient is known to be integral.
std::vector<long> int_poly_div(const std::vector<long>& num, const std::vector<long>& den) {
  std::vector<long> rem = num;
  std::vector<long> quot(num.size() - den.size() + 1, 0);
  for (int shift = static_cast<int>(quot.size()) - 1; shift >= 0; --shift) {
    const long coeff = rem[static_cast<std::size_t>(shift) + den.size() - 1];
    quot[static_cast<std::size_t>(shift)] = coeff;
    if (coeff == 0) continue;
    for (std::size_t i = 0; i < den.size(); ++i) {
      rem[static_cast<std::size_t>(shift) + i] -= coeff * den[i];
    }
  }
  for (long v : rem) {
    if (v != 0) throw std::logic_error("cyclotomic division not exact");
  }
  return quot;
}

}  // namespace

std::vector<long> cyclotomic_coeffs(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  thread_local std::map<long, std::vector<long>> cache;
  const auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;

  std::vector<long> result(static_cast<std::size_t>(n) + 1, 0);
  result[0] = -1;
  result[static_cast<std::size_t>(n)] = 1;  // x^n - 1
  for (long e : divisors_of(n)) {
    if (e == n) continue;
    result = int_poly_div(result, cyclotomic_coeffs(e));
  }
  cache.emplace(n, result);
  return result;
}

}  // namespace ssarr
