#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "sepenum/graph.hpp"
#include "sepenum/oracle.hpp"

namespace sepenum::testing {

inline VertexSet ids(const Graph& g, std::initializer_list<const char*> labels) {
  std::vector<VertexId> out;
  for (const char* l : labels) out.push_back(g.find(l).value());
  return VertexSet::from_unsorted(std::move(out));
}

inline VertexId id(const Graph& g, const char* label) {
  return g.find(label).value();
}

inline std::string names(const Graph& g, const VertexSet& x) {
  std::string out;
  for (VertexId v : x) {
    if (!out.empty()) out += ',';
    out += g.label(v);
  }
  return out;
}

inline std::set<std::string> names(const Graph& g,
                                   const std::set<Separator>& family) {
  std::set<std::string> out;
  for (const auto& x : family) out.insert(names(g, x));
  return out;
}

inline bool connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return component_of(g, {}, 0).size() == g.vertex_count();
}

/// One random connected instance together with the seed that produced it.
struct Instance {
  Graph graph;
  std::uint64_t seed;
  double p;
};

/// Deterministic corpus of connected G(n, p) graphs: n cycles through
/// [n_min, n_max], p through `probabilities`; disconnected draws are
/// rejected by advancing the seed.
inline std::vector<Instance> connected_corpus(
    std::size_t count, std::size_t n_min, std::size_t n_max,
    std::vector<double> probabilities = {0.2, 0.35, 0.5},
    std::uint64_t base_seed = 20240601) {
  std::vector<Instance> out;
  std::uint64_t seed = base_seed;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = n_min + i % (n_max - n_min + 1);
    double p = probabilities[(i / (n_max - n_min + 1)) % probabilities.size()];
    for (;; ++seed) {
      Graph g = oracle::random_graph(n, p, seed);
      if (connected(g)) {
        out.push_back({std::move(g), seed, p});
        ++seed;
        break;
      }
    }
  }
  return out;
}

/// All ordered terminal pairs (s, t), s != t, with s and t non-adjacent.
inline std::vector<Terminals> separable_pairs(const Graph& g) {
  std::vector<Terminals> out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    for (VertexId t = 0; t < g.vertex_count(); ++t) {
      if (s != t && !g.has_edge(s, t)) out.push_back({s, t});
    }
  }
  return out;
}

}  // namespace sepenum::testing
