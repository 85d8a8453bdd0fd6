#include "ssarr/arrangement.hpp"

#include <istream>
#include <random>
#include <sstream>

#include "ssarr/fields.hpp"
#include "ssarr/linalg.hpp"

namespace ssarr {

std::vector<Rat> normalize_projective(std::vector<Rat> v) {
  for (const Rat& x : v) {
    if (x != 0) {
      const Rat lead = x;
      for (Rat& y : v) y /= lead;
      return v;
    }
  }
  throw std::invalid_argument("zero vector is not a hyperplane");
}

Arrangement make_arrangement(int ambient, std::vector<std::vector<Rat>> raw) {
  if (ambient < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  Arrangement a;
  a.ambient = ambient;
  a.hyperplanes.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != static_cast<std::size_t>(ambient) + 1) {
      throw std::invalid_argument("hyperplane " + std::to_string(i) + " has " +
                                  std::to_string(raw[i].size()) + " coefficients, expected " +
                                  std::to_string(ambient + 1));
    }
    a.hyperplanes.push_back(normalize_projective(std::move(raw[i])));
  }
  for (std::size_t i = 0; i < a.hyperplanes.size(); ++i) {
    for (std::size_t j = i + 1; j < a.hyperplanes.size(); ++j) {
      if (a.hyperplanes[i] == a.hyperplanes[j]) {
        throw std::invalid_argument("hyperplanes " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are proportional");
      }
    }
  }
  return a;
}

Arrangement model_arrangement(const TypeVector& m) {
  const int r = m.r();
  std::vector<std::vector<Rat>> raw;
  std::vector<Rat> z0(static_cast<std::size_t>(r) + 1, Rat(0));
  z0[0] = 1;
  raw.push_back(z0);
  for (int i = 1; i <= r; ++i) {
    for (long k = 1; k <= m.parts[static_cast<std::size_t>(i) - 1]; ++k) {
      std::vector<Rat> v(static_cast<std::size_t>(r) + 1, Rat(0));
      v[0] = Rat(-k);
      v[static_cast<std::size_t>(i)] = 1;
      raw.push_back(std::move(v));
    }
  }
  return make_arrangement(r, std::move(raw));
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Arrangement parse_arrangement(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_ambient = false;
  int ambient = 0;
  std::vector<std::vector<Rat>> raw;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream row(line);
    std::string tok;
    std::vector<std::string> tokens;
    while (row >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (!have_ambient) {
      if (tokens.size() != 2 || tokens[0] != "ambient") {
        parse_fail(line_no, "expected header `ambient <N>`");
      }
      try {
        std::size_t used = 0;
        ambient = std::stoi(tokens[1], &used);
        if (used != tokens[1].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        parse_fail(line_no, "bad ambient dimension `" + tokens[1] + "`");
      }
      if (ambient < 1) parse_fail(line_no, "ambient dimension must be >= 1");
      have_ambient = true;
      continue;
    }
    if (tokens.size() != static_cast<std::size_t>(ambient) + 1) {
      parse_fail(line_no, "expected " + std::to_string(ambient + 1) + " coefficients, got " +
                              std::to_string(tokens.size()));
    }
    std::vector<Rat> coeffs;
    coeffs.reserve(tokens.size());
    for (const std::string& t : tokens) {
      try {
        coeffs.push_back(parse_rational(t));
      } catch (const std::exception& e) {
        parse_fail(line_no, std::string(e.what()));
      }
    }
    raw.push_back(std::move(coeffs));
  }
  if (!have_ambient) throw std::invalid_argument("missing `ambient <N>` header");
  return make_arrangement(ambient, std::move(raw));
}

Arrangement parse_arrangement_text(const std::string& text) {
  std::istringstream in(text);
  return parse_arrangement(in);
}

std::string arrangement_to_text(const Arrangement& a) {
  std::string out = "ambient " + std::to_string(a.ambient) + "\n";
  for (const auto& h : a.hyperplanes) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (j) out += ' ';
      out += rational_to_string(h[j]);
    }
    out += '\n';
  }
  return out;
}

namespace {

long rat_rank(Mat<Rat> m) { return rank(RationalField{}, std::move(m)); }

Mat<Rat> rows_from(const std::vector<std::vector<Rat>>& src, const std::vector<int>& which,
                   std::size_t width) {
  Mat<Rat> m(which.size(), width, Rat(0));
  for (std::size_t i = 0; i < which.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      m.at(i, j) = src[static_cast<std::size_t>(which[i])][j];
    }
  }
  return m;
}

/// c^T E for every hyperplane form c.
std::vector<std::vector<Rat>> pulled_back_forms(const Arrangement& a, const Mat<Rat>& e) {
  std::vector<std::vector<Rat>> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].assign(e.cols, Rat(0));
    for (std::size_t j = 0; j < e.cols; ++j) {
      Rat acc(0);
      for (std::size_t k = 0; k < e.rows; ++k) acc += a.hyperplanes[i][k] * e.at(k, j);
      out[i][j] = acc;
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<int>> genericity_witness(const Arrangement& a,
                                                   const Mat<Rat>& embedding) {
  if (embedding.rows != static_cast<std::size_t>(a.ambient) + 1 || embedding.cols == 0 ||
      embedding.cols > embedding.rows) {
    throw std::invalid_argument("embedding must be (N+1) x (s+1) with s <= N");
  }
  const int s = static_cast<int>(embedding.cols) - 1;
  const auto restricted = pulled_back_forms(a, embedding);
  const int count = static_cast<int>(a.size());
  const int max_size = std::min(count, s + 1);
  // Lexicographic subsets of each size 1..s+1.
  std::vector<int> subset;
  for (int size = 1; size <= max_size; ++size) {
    subset.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
      const long orig = rat_rank(rows_from(a.hyperplanes, subset,
                                           static_cast<std::size_t>(a.ambient) + 1));
      const long restr = rat_rank(rows_from(restricted, subset, embedding.cols));
      if (restr != std::min<long>(orig, s + 1)) return subset;
      int pos = size - 1;
      while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == count - size + pos) --pos;
      if (pos < 0) break;
      ++subset[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i) {
        subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i) - 1] + 1;
      }
    }
  }
  return std::nullopt;
}

Arrangement apply_section(const Arrangement& a, const Mat<Rat>& embedding) {
  return make_arrangement(static_cast<int>(embedding.cols) - 1, pulled_back_forms(a, embedding));
}

SectionResult generic_section(const Arrangement& a, int s, std::uint64_t seed,
                              int max_attempts) {
  if (s < 2 || s > a.ambient) {
    throw std::invalid_argument("section dimension must satisfy 2 <= s <= ambient");
  }
  if (max_attempts < 1) throw std::invalid_argument("need at least one attempt");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::vector<int> last_witness;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    Mat<Rat> e(static_cast<std::size_t>(a.ambient) + 1, static_cast<std::size_t>(s) + 1,
               Rat(0));
    if (s == a.ambient) {
      for (std::size_t i = 0; i < e.rows; ++i) e.at(i, i) = 1;
    } else {
      for (std::size_t i = 0; i < e.rows; ++i) {
        for (std::size_t j = 0; j < e.cols; ++j) e.at(i, j) = entry(rng);
      }
    }
    const auto witness = genericity_witness(a, e);
    if (!witness) {
      return SectionResult{apply_section(a, e), std::move(e), seed, attempt};
    }
    last_witness = *witness;
    if (s == a.ambient) break;  // identity embedding is deterministic
  }
  std::string msg = "no generic section found; witness subset {";
  for (std::size_t i = 0; i < last_witness.size(); ++i) {
    if (i) msg += ',';
    msg += std::to_string(last_witness[i]);
  }
  msg += '}';
  throw genericity_error(std::move(msg), std::move(last_witness));
}

}  // namespace ssarr
