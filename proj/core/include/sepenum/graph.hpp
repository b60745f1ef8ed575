#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepenum/vertex_set.hpp"

namespace sepenum {

/// Undirected simple graph over dense vertex ids [0, vertex_count()).
///
/// Adjacency lists are kept sorted, so membership tests are logarithmic and
/// two graphs compare equal iff they have the same labels and edge sets.
/// The label table is shared between copies; transforms that keep the
/// vertex set (saturate, absorb, ...) never duplicate it.
class Graph {
 public:
  Graph() : labels_(std::make_shared<const std::vector<std::string>>()) {}

  /// n vertices labelled "0" .. "n-1", no edges.
  explicit Graph(std::size_t n);

  /// One vertex per label, no edges. Labels must be distinct.
  explicit Graph(std::vector<std::string> labels);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;
  bool contains(VertexId v) const noexcept { return v < vertex_count(); }

  /// Inserts {u,v}. Returns false if the edge already existed.
  /// Throws kSelfLoop for u == v and kInvalidVertex for unknown ids.
  bool add_edge(VertexId u, VertexId v);

  /// Removes every edge incident to v; v stays a (now isolated) vertex.
  void isolate(VertexId v);

  const std::string& label(VertexId v) const { return labels_->at(v); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  std::optional<VertexId> find(std::string_view label) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ &&
           (a.labels_ == b.labels_ || *a.labels_ == *b.labels_);
  }

 private:
  void check_vertex(VertexId v) const;

  std::shared_ptr<const std::vector<std::string>> labels_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct Terminals {
  VertexId s;
  VertexId t;
};

/// Throws kInvalidTerminals unless s != t and both are vertices of g.
void check_terminals(const Graph& g, Terminals term);

/// Parses whitespace-separated "u v" label pairs, one edge per line. Lines
/// starting with '#' and blank lines are skipped. Labels receive dense ids in
/// order of first appearance; repeated edges are merged.
Graph parse_graph(std::string_view text);

/// Edge-list text accepted by parse_graph. Isolated vertices are not
/// representable and are dropped.
std::string format_graph(const Graph& g);

/// N_G(T): vertices outside T adjacent to some member of T.
VertexSet neighborhood(const Graph& g, const VertexSet& set);

/// G - X on the same id space: every vertex of X becomes isolated.
Graph remove_vertices(const Graph& g, const VertexSet& removed);

/// Connected component of v in G - removed.
VertexSet component_of(const Graph& g, const VertexSet& removed, VertexId v);

/// True iff s and t lie in different components of G - x.
bool is_separator(const Graph& g, Terminals term, const Separator& x);

/// Full-component test: x separates and N(C_s) = N(C_t) = x.
bool is_minimal_separator(const Graph& g, Terminals term, const Separator& x);

/// Sat(G, U): the result of making N[u] a clique for each u in U in turn.
/// That closure is order-free: N_G[C] ends up a clique for every connected
/// component C of G[U], which is what is computed.
Graph saturate(const Graph& g, const VertexSet& u);

/// H_S: adds every edge (s, v) for v in S.
Graph add_star(const Graph& g, VertexId s, const Separator& set);

/// H^v: adds (s, y) for every neighbor y of v. Requires v adjacent to s.
Graph absorb(const Graph& g, VertexId s, VertexId v);

/// Contracts edge {e.first, e.second} into `target`. The other endpoint is
/// deleted and the remaining vertices are renumbered densely, keeping their
/// relative order and labels.
Graph contract_into(const Graph& g, std::pair<VertexId, VertexId> e,
                    VertexId target);

/// The unique minimal s,t-separator contained in N(s).
Separator close_separator(const Graph& g, Terminals term);

/// A minimal separator inside x, chosen as N(C_t(G - N(C_s(G - x)))).
Separator minimalize(const Graph& g, Terminals term, const Separator& x);

/// Given a chordless s,t-path through v, returns a minimal s,t-separator
/// containing v: the s-prefix of the path is merged into s, the t-suffix
/// into t, and the close-to-s separator of the merged graph is returned.
Separator chordless_path_to_separator(const Graph& g, Terminals term,
                                      std::span<const VertexId> path,
                                      VertexId v);

/// Throws kTerminalsAdjacent or kAlreadySeparated unless some s,t-separator
/// exists and is nonempty.
void require_separable(const Graph& g, Terminals term);

}  // namespace sepenum
