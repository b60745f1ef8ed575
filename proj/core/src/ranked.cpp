#include "sepenum/ranked.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "sepenum/mincut.hpp"

namespace sepenum {
namespace {

using RankKey = std::pair<std::size_t, Separator>;

// Shared Lawler loop. With `required_size` set, a child cell is kept only if
// its best separator has exactly that many vertices.
std::size_t lawler(const Graph& g, Terminals term, const SeparatorSink& sink,
                   std::optional<std::size_t> required_size) {
  CutResult root = kappa(g, term);
  if (required_size) required_size = root.kappa;

  std::map<RankKey, RankedEntry> queue;
  queue.emplace(RankKey{root.kappa, root.separator},
                RankedEntry{g, root.separator, {}, {}});

  std::size_t emitted = 0;
  while (!queue.empty()) {
    auto node = queue.extract(queue.begin());
    const RankedEntry& entry = node.mapped();
    ++emitted;
    if (!sink(entry.separator)) break;

    VertexSet committed = entry.include;
    for (VertexId v : entry.separator.minus(entry.include)) {
      Graph saturated = saturate(entry.working_graph, VertexSet{v});
      VertexSet excluded = entry.excluded.with(v);
      const VertexSet include = committed;
      committed = committed.with(v);

      if (saturated.has_edge(term.s, term.t)) continue;
      auto cut = vertex_cut(remove_vertices(saturated, include),
                            VertexSet{term.s}, term.t);
      if (!cut || cut->size == 0) continue;
      if (required_size && cut->size + include.size() != *required_size) {
        continue;
      }

      Separator separator = cut->closest.united(include);
      if (separator.intersects(excluded)) {
        throw std::logic_error("Lawler cell emits an excluded vertex");
      }
      RankKey key{separator.size(), separator};
      auto [it, inserted] = queue.emplace(
          std::move(key), RankedEntry{std::move(saturated), separator,
                                      include, std::move(excluded)});
      if (!inserted) {
        throw std::logic_error("Lawler cells overlap");
      }
    }
  }
  return emitted;
}

}  // namespace

std::size_t ranked_separators(const Graph& g, Terminals term,
                              const SeparatorSink& sink) {
  return lawler(g, term, sink, std::nullopt);
}

std::size_t minimum_separators(const Graph& g, Terminals term,
                               const SeparatorSink& sink) {
  return lawler(g, term, sink, std::size_t{0});
}

}  // namespace sepenum
