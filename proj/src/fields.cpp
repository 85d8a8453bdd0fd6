#include "ssarr/fields.hpp"

#include <cctype>

namespace ssarr {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field order " + std::to_string(p) + " is not prime");
  }
  return FieldSpec{Kind::prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s(text);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "q" || s == "0" || s == "rationals") return rationals();
  std::string digits = s;
  if (s.rfind("gf:", 0) == 0) digits = s.substr(3);
  if (digits.empty()) throw std::invalid_argument("bad field '" + std::string(text) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad field '" + std::string(text) + "'");
    }
  }
  unsigned long value = std::stoul(digits);
  if (value > 0xffffffffUL) throw std::invalid_argument("field order out of range");
  return prime(static_cast<std::uint32_t>(value));
}

}  // namespace ssarr
