#include "ssarr/rational.hpp"

#include <cctype>

namespace ssarr {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  // Strip surrounding whitespace; embedded whitespace is rejected.
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  const std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(s)) {
      throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
    }
    return Rat(Int(std::string(s)));
  }
  std::string_view num = s.substr(0, slash);
  std::string_view den = s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
  }
  Int d{std::string(den)};
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rat(Int(std::string(num)), d);
}

std::string rational_to_string(const Rat& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string int_to_string(const Int& value) { return value.str(); }

}  // namespace ssarr
