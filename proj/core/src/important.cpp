#include "sepenum/important.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "sepenum/errors.hpp"
#include "sepenum/mincut.hpp"

namespace sepenum {
namespace {

// Vertices reachable from `sources` without entering `blocked`.
VertexSet reach_from(const Graph& g, const VertexSet& blocked,
                     const VertexSet& sources) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue;
  for (VertexId a : sources) {
    seen[a] = true;
    queue.push_back(a);
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (!seen[w] && !blocked.contains(w)) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return VertexSet::from_mask(seen);
}

// Textbook branching for important (sources, sink)-separators. The measure
// 2 * budget - cut size drops in both branches, so there are at most
// 4^budget leaves. Every emitted set separates the sources from the sink in
// the input graph.
void branch(const Graph& g, VertexId sink, const VertexSet& sources,
            std::size_t budget, const VertexSet& chosen,
            std::vector<Separator>& out) {
  auto cut = vertex_cut(g, sources, sink);
  if (!cut) return;
  if (cut->size == 0) {
    out.push_back(chosen);
    return;
  }
  if (cut->size > budget) return;

  VertexSet grown = reach_from(g, cut->furthest, sources);
  VertexId v = cut->furthest.front();
  branch(remove_vertices(g, VertexSet{v}), sink, grown, budget - 1,
         chosen.with(v), out);
  branch(g, sink, grown.with(v), budget, chosen, out);
}

}  // namespace

bool is_important(const Graph& g, Terminals term, const Separator& x) {
  if (!is_minimal_separator(g, term, x)) {
    throw Error(ErrorCode::kNotMinimal, "set is not a minimal s,t-separator");
  }
  if (x.empty()) return true;
  VertexSet t_side = component_of(g, x, term.t);
  auto cut = vertex_cut(g, t_side, term.s);
  return cut->size == x.size() && cut->furthest == x;
}

ImportantSet enumerate_important(const Graph& g, Terminals term,
                                 std::size_t k) {
  require_separable(g, term);
  if (k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "size bound must be at least 1");
  }

  std::vector<Separator> candidates;
  branch(g, term.s, VertexSet{term.t}, k, VertexSet{}, candidates);

  ImportantSet result;
  result.k = k;
  std::unordered_set<Separator, VertexSetHash> seen;
  for (auto& x : candidates) {
    if (!seen.insert(x).second) continue;
    if (is_minimal_separator(g, term, x) && is_important(g, term, x)) {
      result.separators.push_back(std::move(x));
    }
  }
  std::sort(result.separators.begin(), result.separators.end(),
            size_then_lex_less);
  return result;
}

Separator min_important(const Graph& g, Terminals term) {
  return kappa(g, term).separator;
}

}  // namespace sepenum
