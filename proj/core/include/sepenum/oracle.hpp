#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepenum/graph.hpp"

// Exhaustive reference implementations. They deliberately avoid the flow,
// branching, and enumeration code they are used to check: apart from Graph
// and is_minimal_separator, everything here is plain subset or path search.

namespace sepenum::oracle {

using SeparatorFamily = std::set<Separator>;

/// Every X subset of V \ {s,t} passing the full-component test. n <= 16.
SeparatorFamily brute_minimal_separators(const Graph& g, Terminals term);

/// Important separators of size <= k straight from the definition: a
/// minimal S is dropped if some minimal S' with |S'| <= |S| has a strictly
/// smaller s-component. n <= 14.
SeparatorFamily brute_important(const Graph& g, Terminals term, std::size_t k);

/// All separating sets of minimum cardinality. n <= 16.
SeparatorFamily brute_minimum_separators(const Graph& g, Terminals term);

/// All induced (chordless) s,t-paths through v. n <= 14.
std::vector<std::vector<VertexId>> brute_chordless_paths_through(
    const Graph& g, Terminals term, VertexId v);

/// First chordless s,t-path through v in depth-first order, if any.
/// Exponential; refuses graphs with more than max_n vertices.
std::optional<std::vector<VertexId>> find_chordless_path_through(
    const Graph& g, Terminals term, VertexId v, std::size_t max_n);

/// Erdos-Renyi G(n, p); identical output for identical (n, p, seed).
Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

struct Fixture {
  std::string name;
  Graph graph;
  Terminals terminals;
};

Fixture p4();       // s-a-b-t
Fixture diamond();  // s-{a,b}-t
Fixture theta();    // s-a-t and s-b-c-t
std::vector<Fixture> fixtures();

/// Edge-list text of the named fixture, as shipped in tests/fixtures.
std::string fixture_text(const std::string& name);

}  // namespace sepenum::oracle
