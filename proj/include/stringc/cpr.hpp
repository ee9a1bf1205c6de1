#pragma once

// CPR graphs: vertices are the points 1..m, and {i, j} carries label k
// when s_k swaps i and j.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "stringc/cstring.hpp"
#include "stringc/errors.hpp"

namespace stringc {

struct CPREdge {
  Point from = 0;  // 1-based, from < to
  Point to = 0;
  std::size_t label = 0;  // 1-based generator index
  friend auto operator<=>(const CPREdge&, const CPREdge&) = default;
};

struct CPRGraph {
  std::size_t vertices = 0;
  std::vector<CPREdge> edges;  // sorted by (label, from, to)
  friend bool operator==(const CPRGraph&, const CPRGraph&) = default;
};

inline CPRGraph cpr_graph(const GeneratorString& s) {
  CPRGraph g{s.degree(), {}};
  for (std::size_t k = 0; k < s.rank(); ++k)
    for (Point i = 1; i <= s.degree(); ++i) {
      Point j = s[k].image(i);
      if (i < j) g.edges.push_back({i, j, k + 1});
    }
  std::sort(g.edges.begin(), g.edges.end(), [](const CPREdge& a, const CPREdge& b) {
    return std::tie(a.label, a.from, a.to) < std::tie(b.label, b.from, b.to);
  });
  return g;
}

/// Rebuilds s_1..s_rank from the labelled edges. Each label must form a
/// matching and every label 1..rank must occur (generators are involutions).
inline GeneratorString from_cpr(const CPRGraph& g, std::size_t rank) {
  std::vector<std::vector<Point>> images(rank, std::vector<Point>(g.vertices));
  for (auto& im : images) std::iota(im.begin(), im.end(), Point{0});
  std::vector<std::size_t> count(rank, 0);
  for (const auto& e : g.edges) {
    if (e.label < 1 || e.label > rank)
      throw InvalidArgument("edge label " + std::to_string(e.label) + " outside 1.." +
                            std::to_string(rank));
    if (e.from < 1 || e.to > g.vertices || e.from >= e.to)
      throw InvalidArgument("bad edge {" + std::to_string(e.from) + "," + std::to_string(e.to) +
                            "}");
    auto& im = images[e.label - 1];
    const Point a = e.from - 1, b = e.to - 1;
    if (im[a] != a || im[b] != b)
      throw InvalidArgument("label " + std::to_string(e.label) + " edges are not a matching at {" +
                            std::to_string(e.from) + "," + std::to_string(e.to) + "}");
    im[a] = b;
    im[b] = a;
    ++count[e.label - 1];
  }
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < rank; ++k) {
    if (count[k] == 0)
      throw InvalidArgument("label " + std::to_string(k + 1) + " has no edges; s_" +
                            std::to_string(k + 1) + " would be the identity");
    gens.push_back(Permutation::from_images(std::move(images[k])));
  }
  return GeneratorString(g.vertices, std::move(gens));
}

/// Connected components of the underlying simple graph, as a representative
/// per vertex (1-based, least vertex of its component).
inline std::vector<Point> cpr_components(const CPRGraph& g) {
  std::vector<Point> root(g.vertices + 1);
  std::iota(root.begin(), root.end(), Point{0});
  auto find = [&](Point x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    auto a = find(e.from), b = find(e.to);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Point> out(g.vertices);
  for (Point v = 1; v <= g.vertices; ++v) out[v - 1] = find(v);
  return out;
}

inline bool is_connected(const CPRGraph& g) {
  auto c = cpr_components(g);
  return std::all_of(c.begin(), c.end(), [](Point r) { return r == 1; });
}

inline std::string to_dot(const CPRGraph& g) {
  static constexpr std::array<const char*, 8> kPalette{
      "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  std::ostringstream out;
  out << "graph cpr {\n  node [shape=circle];\n";
  for (std::size_t v = 1; v <= g.vertices; ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges)
    out << "  " << e.from << " -- " << e.to << " [label=" << e.label << ", color=\""
        << kPalette[(e.label - 1) % kPalette.size()] << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace stringc
