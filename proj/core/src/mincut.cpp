#include "sepenum/mincut.hpp"

#include "sepenum/errors.hpp"
#include "sepenum/flow_network.hpp"

namespace sepenum {
namespace {

thread_local FlowCallCounter* active_counter = nullptr;

void check_terminal_free(Terminals term, const VertexSet& set) {
  if (set.contains(term.s) || set.contains(term.t)) {
    throw Error(ErrorCode::kTerminalInSet, "set contains a terminal");
  }
}

}  // namespace

FlowCallCounter::FlowCallCounter() : previous_(active_counter) {
  active_counter = this;
}

FlowCallCounter::~FlowCallCounter() { active_counter = previous_; }

void note_flow_call() noexcept {
  if (active_counter != nullptr) ++active_counter->count_;
}

std::optional<VertexCut> vertex_cut(const Graph& g, const VertexSet& sources,
                                    VertexId sink) {
  if (sources.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty source set");
  }
  if (!g.contains(sink) || sources.members().back() >= g.vertex_count()) {
    throw Error(ErrorCode::kInvalidVertex, "vertex id out of range");
  }
  if (sources.contains(sink)) {
    throw Error(ErrorCode::kInvalidArgument, "sink lies in the source set");
  }
  for (VertexId a : sources) {
    if (g.has_edge(a, sink)) return std::nullopt;
  }

  note_flow_call();
  FlowNetwork net(g, sources, sink);
  VertexCut cut;
  cut.size = net.run();
  cut.closest = net.closest_cut();
  cut.furthest = net.furthest_cut();
  cut.paths = net.paths();
  return cut;
}

CutResult kappa(const Graph& g, Terminals term) {
  require_separable(g, term);
  auto cut = vertex_cut(g, VertexSet{term.s}, term.t);
  return CutResult{cut->size, std::move(cut->closest), std::move(cut->paths)};
}

Separator min_separator_between(const Graph& g, const VertexSet& a,
                                VertexId t, CutSide side) {
  auto cut = vertex_cut(g, a, t);
  if (!cut) {
    throw Error(ErrorCode::kSourceSinkAdjacent,
                "source set is adjacent to the sink");
  }
  if (cut->size == 0) {
    throw Error(ErrorCode::kAlreadySeparated,
                "sink is unreachable from the source set");
  }
  return side == CutSide::kClosest ? std::move(cut->closest)
                                   : std::move(cut->furthest);
}

std::optional<Separator> min_separator_containing(const Graph& g,
                                                  Terminals term,
                                                  const VertexSet& include) {
  check_terminal_free(term, include);
  const std::size_t k = kappa(g, term).kappa;
  if (include.size() > k) return std::nullopt;
  auto rest = vertex_cut(remove_vertices(g, include), VertexSet{term.s},
                         term.t);
  if (rest->size != k - include.size()) return std::nullopt;
  return include.united(rest->closest);
}

std::optional<Separator> min_separator_excluding(const Graph& g,
                                                 Terminals term,
                                                 const VertexSet& exclude) {
  check_terminals(g, term);
  check_terminal_free(term, exclude);
  Graph saturated = saturate(g, exclude);
  auto cut = vertex_cut(saturated, VertexSet{term.s}, term.t);
  if (!cut || cut->size == 0) return std::nullopt;
  return std::move(cut->closest);
}

}  // namespace sepenum
