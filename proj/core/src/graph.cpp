#include "sepenum/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "sepenum/errors.hpp"

namespace sepenum {
namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  return labels;
}

void check_members(const Graph& g, const VertexSet& set) {
  if (!set.empty() && set.members().back() >= g.vertex_count()) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex id " + std::to_string(set.members().back()) +
                    " out of range");
  }
}

void check_terminal_free(const Graph& g, Terminals term, const VertexSet& x) {
  check_terminals(g, term);
  check_members(g, x);
  if (x.contains(term.s) || x.contains(term.t)) {
    throw Error(ErrorCode::kTerminalInSet, "set contains a terminal");
  }
}

// Breadth-first search from `start`, never entering a vertex marked blocked.
// Returns the visited mask.
std::vector<bool> reach(const Graph& g, const std::vector<bool>& blocked,
                        VertexId start) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<bool> mask_of(const Graph& g, const VertexSet& set) {
  std::vector<bool> mask(g.vertex_count(), false);
  for (VertexId v : set) mask[v] = true;
  return mask;
}

void merge_into(Graph& g, VertexId keep, VertexId gone) {
  std::vector<VertexId> nbrs(g.neighbors(gone).begin(),
                             g.neighbors(gone).end());
  for (VertexId y : nbrs) {
    if (y != keep) g.add_edge(keep, y);
  }
  g.isolate(gone);
}

}  // namespace

Graph::Graph(std::size_t n) : Graph(numeric_labels(n)) {}

Graph::Graph(std::vector<std::string> labels)
    : adjacency_(labels.size()) {
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_count()) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex id " + std::to_string(v) + " out of range");
  }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error(ErrorCode::kSelfLoop, "self-loop on " + label(u));
  }
  auto& lu = adjacency_[u];
  auto it = std::lower_bound(lu.begin(), lu.end(), v);
  if (it != lu.end() && *it == v) return false;
  lu.insert(it, v);
  auto& lv = adjacency_[v];
  lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
  ++edge_count_;
  return true;
}

void Graph::isolate(VertexId v) {
  check_vertex(v);
  for (VertexId w : adjacency_[v]) {
    auto& lw = adjacency_[w];
    lw.erase(std::lower_bound(lw.begin(), lw.end(), v));
  }
  edge_count_ -= adjacency_[v].size();
  adjacency_[v].clear();
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  const auto& labels = *labels_;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == label) return static_cast<VertexId>(v);
  }
  return std::nullopt;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void check_terminals(const Graph& g, Terminals term) {
  if (!g.contains(term.s) || !g.contains(term.t)) {
    throw Error(ErrorCode::kInvalidTerminals, "terminal is not a vertex");
  }
  if (term.s == term.t) {
    throw Error(ErrorCode::kInvalidTerminals, "source equals target");
  }
}

Graph parse_graph(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto id_of = [&](const std::string& token) {
    auto [it, inserted] =
        index.emplace(token, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(std::move(tok));
    if (tokens.size() != 2) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": expected 2 tokens, got " +
                      std::to_string(tokens.size()));
    }
    if (tokens[0] == tokens[1]) {
      throw Error(ErrorCode::kSelfLoop, "line " + std::to_string(line_no) +
                                            ": self-loop on " + tokens[0]);
    }
    VertexId u = id_of(tokens[0]);
    VertexId v = id_of(tokens[1]);
    edges.emplace_back(u, v);
  }

  Graph g(std::move(labels));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::string format_graph(const Graph& g) {
  // Edges ordered by their larger endpoint, so re-parsing assigns ids in the
  // same order whenever each vertex has a lower-numbered neighbour.
  auto edges = g.edges();
  std::stable_sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;
  });
  std::string out;
  for (auto [u, v] : edges) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& set) {
  std::vector<VertexId> out;
  for (VertexId u : set) {
    for (VertexId w : g.neighbors(u)) {
      if (!set.contains(w)) out.push_back(w);
    }
  }
  return VertexSet::from_unsorted(std::move(out));
}

Graph remove_vertices(const Graph& g, const VertexSet& removed) {
  check_members(g, removed);
  Graph out = g;
  for (VertexId v : removed) out.isolate(v);
  return out;
}

VertexSet component_of(const Graph& g, const VertexSet& removed, VertexId v) {
  check_members(g, removed);
  if (!g.contains(v)) {
    throw Error(ErrorCode::kInvalidVertex, "vertex id out of range");
  }
  if (removed.contains(v)) {
    throw Error(ErrorCode::kVertexRemoved,
                "vertex " + g.label(v) + " is in the removed set");
  }
  return VertexSet::from_mask(reach(g, mask_of(g, removed), v));
}

bool is_separator(const Graph& g, Terminals term, const Separator& x) {
  check_terminal_free(g, term, x);
  return !reach(g, mask_of(g, x), term.s)[term.t];
}

bool is_minimal_separator(const Graph& g, Terminals term, const Separator& x) {
  check_terminal_free(g, term, x);
  auto blocked = mask_of(g, x);
  auto side_s = reach(g, blocked, term.s);
  if (side_s[term.t]) return false;
  auto side_t = reach(g, blocked, term.t);
  // Every member of x needs a neighbor in both terminal components.
  for (VertexId v : x) {
    bool touches_s = false;
    bool touches_t = false;
    for (VertexId w : g.neighbors(v)) {
      touches_s = touches_s || side_s[w];
      touches_t = touches_t || side_t[w];
    }
    if (!touches_s || !touches_t) return false;
  }
  return true;
}

Graph saturate(const Graph& g, const VertexSet& u) {
  check_members(g, u);
  // Saturating u makes every U-neighbour of u adjacent to all of N[u], so
  // the vertex-by-vertex closure turns N[C] into a clique for each component
  // C of G[U]. Doing it per component gives that closure in one pass.
  Graph out = g;
  std::vector<char> done(g.vertex_count(), 0);
  for (VertexId root : u) {
    if (done[root]) continue;
    std::vector<VertexId> stack{root};
    std::vector<VertexId> closed;
    done[root] = 1;
    while (!stack.empty()) {
      VertexId c = stack.back();
      stack.pop_back();
      closed.push_back(c);
      for (VertexId w : g.neighbors(c)) {
        closed.push_back(w);
        if (u.contains(w) && !done[w]) {
          done[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      for (std::size_t j = i + 1; j < closed.size(); ++j) {
        out.add_edge(closed[i], closed[j]);
      }
    }
  }
  return out;
}

Graph add_star(const Graph& g, VertexId s, const Separator& set) {
  check_members(g, set);
  if (set.contains(s)) {
    throw Error(ErrorCode::kTerminalInSet, "star centre lies in the set");
  }
  Graph out = g;
  for (VertexId v : set) out.add_edge(s, v);
  return out;
}

Graph absorb(const Graph& g, VertexId s, VertexId v) {
  if (!g.has_edge(s, v)) {
    throw Error(ErrorCode::kNotANeighbor,
                "vertex is not adjacent to the absorbing terminal");
  }
  Graph out = g;
  for (VertexId y : g.neighbors(v)) {
    if (y != s) out.add_edge(s, y);
  }
  return out;
}

Graph contract_into(const Graph& g, std::pair<VertexId, VertexId> e,
                    VertexId target) {
  auto [a, b] = e;
  if (!g.has_edge(a, b)) {
    throw Error(ErrorCode::kNotAnEdge, "contracted pair is not an edge");
  }
  if (target != a && target != b) {
    throw Error(ErrorCode::kInvalidArgument,
                "contraction target is not an endpoint");
  }
  VertexId gone = target == a ? b : a;

  Graph merged = g;
  merge_into(merged, target, gone);

  auto new_id = [gone](VertexId v) { return v < gone ? v : v - 1; };
  std::vector<std::string> labels;
  labels.reserve(g.vertex_count() - 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != gone) labels.push_back(g.label(v));
  }
  Graph out(std::move(labels));
  for (auto [u, v] : merged.edges()) out.add_edge(new_id(u), new_id(v));
  return out;
}

void require_separable(const Graph& g, Terminals term) {
  check_terminals(g, term);
  if (g.has_edge(term.s, term.t)) {
    throw Error(ErrorCode::kTerminalsAdjacent, "terminals are adjacent");
  }
  std::vector<bool> none(g.vertex_count(), false);
  if (!reach(g, none, term.s)[term.t]) {
    throw Error(ErrorCode::kAlreadySeparated,
                "target is unreachable from source");
  }
}

Separator close_separator(const Graph& g, Terminals term) {
  require_separable(g, term);
  VertexSet ns = neighborhood(g, VertexSet{term.s});
  return neighborhood(g, component_of(g, ns, term.t));
}

Separator minimalize(const Graph& g, Terminals term, const Separator& x) {
  if (!is_separator(g, term, x)) {
    throw Error(ErrorCode::kNotASeparator, "set does not separate s from t");
  }
  VertexSet inner = neighborhood(g, component_of(g, x, term.s));
  return neighborhood(g, component_of(g, inner, term.t));
}

Separator chordless_path_to_separator(const Graph& g, Terminals term,
                                      std::span<const VertexId> path,
                                      VertexId v) {
  check_terminals(g, term);
  if (path.size() < 2 || path.front() != term.s || path.back() != term.t) {
    throw Error(ErrorCode::kNotAPath, "path must run from s to t");
  }
  std::vector<bool> on_path(g.vertex_count(), false);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.contains(path[i]) || on_path[path[i]]) {
      throw Error(ErrorCode::kNotAPath, "path repeats or leaves the graph");
    }
    on_path[path[i]] = true;
    if (i > 0 && !g.has_edge(path[i - 1], path[i])) {
      throw Error(ErrorCode::kNotAPath, "consecutive path vertices not adjacent");
    }
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 2; j < path.size(); ++j) {
      if (g.has_edge(path[i], path[j])) {
        throw Error(ErrorCode::kNotChordless,
                    "chord " + g.label(path[i]) + "-" + g.label(path[j]));
      }
    }
  }
  auto pos = std::find(path.begin(), path.end(), v);
  if (pos == path.end() || v == term.s || v == term.t) {
    throw Error(ErrorCode::kVertexNotOnPath,
                "vertex is not an interior path vertex");
  }

  Graph merged = g;
  for (auto it = path.begin() + 1; it != pos; ++it) {
    merge_into(merged, term.s, *it);
  }
  for (auto it = pos + 1; it + 1 != path.end(); ++it) {
    merge_into(merged, term.t, *it);
  }
  return close_separator(merged, term);
}

}  // namespace sepenum
