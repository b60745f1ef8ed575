#include "sepenum/oracle.hpp"

#include <deque>
#include <random>

#include "sepenum/errors.hpp"

namespace sepenum::oracle {
namespace {

void guard(const Graph& g, std::size_t limit) {
  if (g.vertex_count() > limit) {
    throw Error(ErrorCode::kTooLarge,
                "oracle limited to " + std::to_string(limit) + " vertices, got " +
                    std::to_string(g.vertex_count()));
  }
}

std::vector<VertexId> non_terminals(const Graph& g, Terminals term) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != term.s && v != term.t) out.push_back(v);
  }
  return out;
}

VertexSet subset(const std::vector<VertexId>& pool, std::uint64_t mask) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mask >> i & 1U) out.push_back(pool[i]);
  }
  return VertexSet::from_unsorted(std::move(out));
}

// Bitmask of vertices reachable from `start` avoiding `removed`.
std::uint64_t side_mask(const Graph& g, const VertexSet& removed,
                        VertexId start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::deque<VertexId> queue{start};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if ((seen >> w & 1U) == 0 && !removed.contains(w)) {
        seen |= std::uint64_t{1} << w;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

void check_pair(const Graph& g, Terminals term) {
  if (!g.contains(term.s) || !g.contains(term.t) || term.s == term.t) {
    throw Error(ErrorCode::kInvalidTerminals, "bad terminal pair");
  }
}

template <typename Visit>
bool chordless_search(const Graph& g, Terminals term,
                      std::vector<VertexId>& path, std::vector<bool>& on_path,
                      const Visit& visit) {
  VertexId last = path.back();
  if (last == term.t) return visit(path);
  for (VertexId w : g.neighbors(last)) {
    if (on_path[w]) continue;
    bool chord = false;
    for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) {
      chord = g.has_edge(path[i], w);
    }
    if (chord) continue;
    path.push_back(w);
    on_path[w] = true;
    bool stop = chordless_search(g, term, path, on_path, visit);
    on_path[w] = false;
    path.pop_back();
    if (stop) return true;
  }
  return false;
}

}  // namespace

SeparatorFamily brute_minimal_separators(const Graph& g, Terminals term) {
  guard(g, 16);
  check_pair(g, term);
  auto pool = non_terminals(g, term);
  SeparatorFamily out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size());
       ++mask) {
    VertexSet x = subset(pool, mask);
    if (is_minimal_separator(g, term, x)) out.insert(std::move(x));
  }
  return out;
}

SeparatorFamily brute_important(const Graph& g, Terminals term,
                                std::size_t k) {
  guard(g, 14);
  auto minimal = brute_minimal_separators(g, term);
  std::vector<std::pair<Separator, std::uint64_t>> sides;
  for (const auto& x : minimal) sides.emplace_back(x, side_mask(g, x, term.s));

  SeparatorFamily out;
  for (const auto& [x, cx] : sides) {
    if (x.size() > k) continue;
    bool important = true;
    for (const auto& [y, cy] : sides) {
      bool strictly_inside = (cy & cx) == cy && cy != cx;
      if (strictly_inside && y.size() <= x.size()) {
        important = false;
        break;
      }
    }
    if (important) out.insert(x);
  }
  return out;
}

SeparatorFamily brute_minimum_separators(const Graph& g, Terminals term) {
  guard(g, 16);
  check_pair(g, term);
  auto pool = non_terminals(g, term);
  std::vector<std::vector<VertexSet>> by_size(pool.size() + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size());
       ++mask) {
    VertexSet x = subset(pool, mask);
    if ((side_mask(g, x, term.s) >> term.t & 1U) == 0) {
      by_size[x.size()].push_back(std::move(x));
    }
  }
  for (auto& level : by_size) {
    if (!level.empty()) return SeparatorFamily(level.begin(), level.end());
  }
  return {};
}

std::vector<std::vector<VertexId>> brute_chordless_paths_through(
    const Graph& g, Terminals term, VertexId v) {
  guard(g, 14);
  check_pair(g, term);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path{term.s};
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[term.s] = true;
  chordless_search(g, term, path, on_path, [&](const auto& p) {
    if (on_path[v]) out.push_back(p);
    return false;
  });
  return out;
}

std::optional<std::vector<VertexId>> find_chordless_path_through(
    const Graph& g, Terminals term, VertexId v, std::size_t max_n) {
  guard(g, max_n);
  check_pair(g, term);
  std::optional<std::vector<VertexId>> found;
  std::vector<VertexId> path{term.s};
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[term.s] = true;
  chordless_search(g, term, path, on_path, [&](const auto& p) {
    if (!on_path[v]) return false;
    found = p;
    return true;
  });
  return found;
}

Graph random_graph(std::size_t n, double edge_probability,
                   std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      // 53 random bits -> uniform double in [0, 1), same on every platform.
      double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < edge_probability) g.add_edge(u, v);
    }
  }
  return g;
}

std::string fixture_text(const std::string& name) {
  if (name == "P4") return "s a\na b\nb t\n";
  if (name == "DIAMOND") return "s a\ns b\na t\nb t\n";
  if (name == "THETA") return "s a\na t\ns b\nb c\nc t\n";
  throw Error(ErrorCode::kInvalidArgument, "unknown fixture " + name);
}

namespace {
Fixture make_fixture(const std::string& name) {
  Graph g = parse_graph(fixture_text(name));
  Terminals term{*g.find("s"), *g.find("t")};
  return Fixture{name, std::move(g), term};
}
}  // namespace

Fixture p4() { return make_fixture("P4"); }
Fixture diamond() { return make_fixture("DIAMOND"); }
Fixture theta() { return make_fixture("THETA"); }

std::vector<Fixture> fixtures() { return {p4(), diamond(), theta()}; }

}  // namespace sepenum::oracle
