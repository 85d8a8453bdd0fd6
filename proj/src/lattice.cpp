#include "ssarr/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ssarr/fields.hpp"
#include "ssarr/linalg.hpp"

namespace ssarr {

namespace {

std::vector<Rat> cross_product(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool vanishes_at(const std::vector<Rat>& form, const std::vector<Rat>& point) {
  Rat acc(0);
  for (std::size_t k = 0; k < form.size(); ++k) acc += form[k] * point[k];
  return acc == 0;
}

}  // namespace

LatticeData intersection_points(const Arrangement& a) {
  if (a.ambient != 2) throw std::invalid_argument("intersection points need a line arrangement in P^2");
  std::map<std::vector<Rat>, std::vector<int>> flats;
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = u + 1; v < a.size(); ++v) {
      auto p = normalize_projective(cross_product(a.hyperplanes[u], a.hyperplanes[v]));
      flats.emplace(std::move(p), std::vector<int>{});
    }
  }
  LatticeData l;
  for (auto& [point, incident] : flats) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (vanishes_at(a.hyperplanes[i], point)) incident.push_back(static_cast<int>(i));
    }
    l.rank2_flats.push_back(Rank2Flat{point, incident});
  }
  return l;
}

LatticeData dependent_subsets(const Arrangement& a, int p) {
  if (p < 1) throw std::invalid_argument("dependent-subset bound must be >= 1");
  LatticeData l;
  l.dependent_bound = p;
  const int count = static_cast<int>(a.size());
  const int max_size = std::min(count, p + 1);
  RationalField q;
  std::vector<int> subset;
  for (int size = 1; size <= max_size; ++size) {
    subset.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
      Mat<Rat> m(static_cast<std::size_t>(size), static_cast<std::size_t>(a.ambient) + 1,
                 Rat(0));
      for (int i = 0; i < size; ++i) {
        const auto& h = a.hyperplanes[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])];
        for (std::size_t j = 0; j < h.size(); ++j) m.at(static_cast<std::size_t>(i), j) = h[j];
      }
      if (rank(q, std::move(m)) < size) l.dependent_subsets.push_back(subset);
      int pos = size - 1;
      while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == count - size + pos) --pos;
      if (pos < 0) break;
      ++subset[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i) {
        subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i) - 1] + 1;
      }
    }
  }
  return l;
}

LatticeData lattice_data(const Arrangement& a, int p) {
  LatticeData l = a.ambient == 2 ? intersection_points(a) : LatticeData{};
  LatticeData dep = dependent_subsets(a, p);
  l.dependent_subsets = std::move(dep.dependent_subsets);
  l.dependent_bound = p;
  return l;
}

bool is_nodal(const Arrangement& a) {
  const LatticeData l = intersection_points(a);
  return std::all_of(l.rank2_flats.begin(), l.rank2_flats.end(),
                     [](const Rank2Flat& f) { return f.multiplicity() == 2; });
}

DetectionResult detect_split_solvable(const Arrangement& a) {
  DetectionResult res;
  if (a.ambient != 2) {
    res.reason = "ambient dimension is not 2";
    return res;
  }
  if (a.size() < 2) {
    res.reason = "fewer than 2 intersection points on the infinity line";
    return res;
  }
  const LatticeData l = intersection_points(a);
  std::vector<const Rank2Flat*> at_infinity;
  for (const Rank2Flat& f : l.rank2_flats) {
    const bool on_h0 = std::binary_search(f.incident.begin(), f.incident.end(), 0);
    if (on_h0) {
      at_infinity.push_back(&f);
    } else if (f.multiplicity() >= 3) {
      res.reason = "a point of multiplicity >= 3 lies off the infinity line";
      return res;
    }
  }
  if (at_infinity.size() < 2) {
    res.reason = "fewer than 2 intersection points on the infinity line";
    return res;
  }
  // Blocks in hyperplane order: sort the infinity points by their smallest
  // non-infinity line.  Every other line passes through exactly one of them
  // (it meets line 0 somewhere), so the block sizes partition the lines.
  std::vector<std::pair<int, long>> blocks;  // (smallest line, size)
  std::vector<bool> seen(a.size(), false);
  seen[0] = true;
  for (const Rank2Flat* f : at_infinity) {
    int least = -1;
    long size = 0;
    for (int line : f->incident) {
      if (line == 0) continue;
      if (seen[static_cast<std::size_t>(line)]) {
        res.reason = "a line passes through two infinity intersection points";
        return res;
      }
      seen[static_cast<std::size_t>(line)] = true;
      if (least < 0) least = line;
      ++size;
    }
    blocks.emplace_back(least, size);
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    res.reason = "a line misses every infinity intersection point";
    return res;
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<long> parts;
  parts.reserve(blocks.size());
  for (const auto& [least, size] : blocks) parts.push_back(size);
  res.type = TypeVector(parts);
  res.canonical = res.type->sorted();
  return res;
}

bool MultiplicityGraph::edge(int u, int v) const {
  const auto& a = lines[static_cast<std::size_t>(u)];
  const auto& b = lines[static_cast<std::size_t>(v)];
  return std::any_of(a.begin(), a.end(), [&](int x) { return b.count(x) > 0; });
}

bool MultiplicityGraph::collinear(int u, int v, int w) const {
  const auto& a = lines[static_cast<std::size_t>(u)];
  const auto& b = lines[static_cast<std::size_t>(v)];
  const auto& c = lines[static_cast<std::size_t>(w)];
  return std::any_of(a.begin(), a.end(),
                     [&](int x) { return b.count(x) > 0 && c.count(x) > 0; });
}

std::vector<std::pair<int, int>> MultiplicityGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

MultiplicityGraph multiplicity_graph(const LatticeData& l) {
  MultiplicityGraph g;
  for (std::size_t i = 0; i < l.rank2_flats.size(); ++i) {
    const Rank2Flat& f = l.rank2_flats[i];
    if (f.multiplicity() >= 3) {
      g.flat_index.push_back(static_cast<int>(i));
      g.lines.emplace_back(f.incident.begin(), f.incident.end());
    }
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
  /// Returns false when x and y were already connected (joining closes a cycle).
  bool join(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[static_cast<std::size_t>(x)] = y;
    return true;
  }
};

}  // namespace

std::optional<NicenessCertificate> is_nice(const MultiplicityGraph& g) {
  const int n = g.size();
  if (n > 25) throw std::invalid_argument("multiplicity graph too large for exhaustive search");
  const auto all_edges = g.edges();
  // Closed neighborhoods, used for the pairwise-disjointness condition.
  std::vector<std::set<int>> hood(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) hood[static_cast<std::size_t>(v)].insert(v);
  for (const auto& [u, v] : all_edges) {
    hood[static_cast<std::size_t>(u)].insert(v);
    hood[static_cast<std::size_t>(v)].insert(u);
  }
  auto disjoint = [&](int u, int v) {
    const auto& a = hood[static_cast<std::size_t>(u)];
    const auto& b = hood[static_cast<std::size_t>(v)];
    return std::none_of(a.begin(), a.end(), [&](int x) { return b.count(x) > 0; });
  };

  std::vector<int> subset;
  for (int size = 0; size <= n; ++size) {
    subset.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
      bool ok = true;
      for (int i = 0; ok && i < size; ++i) {
        for (int j = i + 1; ok && j < size; ++j) {
          ok = disjoint(subset[static_cast<std::size_t>(i)], subset[static_cast<std::size_t>(j)]);
        }
      }
      if (ok) {
        std::vector<bool> removed(static_cast<std::size_t>(n), false);
        for (int v : subset) removed[static_cast<std::size_t>(v)] = true;
        NicenessCertificate cert;
        cert.chosen = subset;
        UnionFind uf(n);
        bool forest = true;
        for (const auto& [u, v] : all_edges) {
          if (removed[static_cast<std::size_t>(u)] || removed[static_cast<std::size_t>(v)]) {
            continue;
          }
          const bool collinear_with_chosen =
              std::any_of(subset.begin(), subset.end(),
                          [&](int w) { return g.collinear(u, v, w); });
          if (collinear_with_chosen) continue;
          cert.reduced_edges.emplace_back(u, v);
          if (!uf.join(u, v)) {
            forest = false;
            break;
          }
        }
        if (forest) {
          cert.forest = true;
          return cert;
        }
      }
      if (size == 0) break;
      int pos = size - 1;
      while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
      if (pos < 0) break;
      ++subset[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i) {
        subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i) - 1] + 1;
      }
    }
  }
  return std::nullopt;
}

ProjectiveBetti projective_betti(const LatticeData& l, int n) {
  if (n < 0) throw std::invalid_argument("need n >= 0");
  ProjectiveBetti b;
  b.b1 = n;
  long sum = 0;
  for (const Rank2Flat& f : l.rank2_flats) sum += f.multiplicity() - 1;
  b.b2 = sum - n;
  return b;
}

}  // namespace ssarr
