#pragma once

#include <compare>
#include <cstddef>
#include <functional>

#include "sepenum/graph.hpp"

namespace sepenum {

/// Receives each separator as it is produced. Returning false stops the
/// enumeration. A sink must not re-enter the enumerator that calls it.
using SeparatorSink = std::function<bool(const Separator&)>;

/// Linear extension of the order S < T iff C_s(G-S) is a proper subset of
/// C_s(G-T): compare s-component sizes first, then members.
struct OrderKey {
  std::size_t component_size = 0;
  Separator members;

  friend bool operator==(const OrderKey&, const OrderKey&) = default;
  friend std::strong_ordering operator<=>(const OrderKey&,
                                          const OrderKey&) = default;
};

OrderKey pop_key(const Graph& g, VertexId s, const Separator& set);

/// Streams every minimal s,t-separator of size <= k exactly once, in
/// non-decreasing |C_s(G - S)| order.
///
/// The queue is seeded with the important separators of size <= k. After
/// emitting S, the graph H_S (s joined to all of S) is formed, and for each
/// v in S the important separators of H_S with v absorbed into s are pushed
/// unless seen before. Keys are always computed in the input graph.
///
/// Throws kTerminalsAdjacent when (s,t) is an edge (no separator exists)
/// and kAlreadySeparated when t is unreachable. Returns the emission count.
std::size_t enumerate_small_minimal(const Graph& g, Terminals term,
                                    std::size_t k, const SeparatorSink& sink);

}  // namespace sepenum
