#include "ssarr/typevec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ssarr {

TypeVector::TypeVector(std::vector<long> parts_in) : parts(std::move(parts_in)) {
  if (parts.empty()) throw std::invalid_argument("type vector must have r >= 1");
  for (long v : parts) {
    if (v < 1) throw std::invalid_argument("type vector entries must be >= 1");
  }
}

long TypeVector::line_count() const {
  long n = 1;
  for (long v : parts) n += v;
  return n;
}

TypeVector TypeVector::sorted() const {
  std::vector<long> p = parts;
  std::sort(p.begin(), p.end());
  return TypeVector(std::move(p));
}

std::string TypeVector::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  return out.str();
}

TypeVector TypeVector::parse(std::string_view text) {
  std::vector<long> parts;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    long value = 0;
    try {
      value = std::stol(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad type vector '" + std::string(text) + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size()) {
      throw std::invalid_argument("bad type vector '" + std::string(text) + "'");
    }
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("bad type vector '" + std::string(text) + "'");
  return TypeVector(std::move(parts));
}

std::vector<Int> elementary_symmetric(const TypeVector& m) {
  const int r = m.r();
  std::vector<Int> sigma(static_cast<std::size_t>(r) + 1, Int(0));
  sigma[0] = 1;
  for (int i = 0; i < r; ++i) {
    // Fold in m_{i+1}: sigma_j += m_{i+1} * sigma_{j-1}, descending j.
    for (int j = i + 1; j >= 1; --j) {
      sigma[j] += Int(m.parts[i]) * sigma[j - 1];
    }
  }
  return sigma;
}

std::vector<Int> z_vector(const TypeVector& m) {
  const std::vector<Int> sigma = elementary_symmetric(m);
  std::vector<Int> z(sigma.size());
  z[0] = sigma[0];
  for (std::size_t j = 1; j < sigma.size(); ++j) z[j] = sigma[j] - z[j - 1];
  return z;
}

SymmetricData symmetric_data(const TypeVector& m) {
  return SymmetricData{elementary_symmetric(m), z_vector(m)};
}

void validate_section(const TypeVector& m, const SectionSpec& spec) {
  if (spec.s < 2 || spec.s > m.r()) {
    throw std::invalid_argument("section dimension s=" + std::to_string(spec.s) +
                                " out of range 2.." + std::to_string(m.r()));
  }
}

void validate_block_set(const TypeVector& m, const BlockSet& supp) {
  for (int i : supp) {
    if (i < 1 || i > m.r()) {
      throw std::invalid_argument("block index " + std::to_string(i) +
                                  " out of range 1.." + std::to_string(m.r()));
    }
  }
}

}  // namespace ssarr
