#include "sepenum/flow_network.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace sepenum {
namespace {
constexpr std::uint32_t kNoArc = std::numeric_limits<std::uint32_t>::max();
}  // namespace

FlowNetwork::FlowNetwork(const Graph& g, const VertexSet& sources,
                         VertexId sink)
    : vertex_count_(g.vertex_count()),
      sink_(sink),
      out_arcs_(2 * g.vertex_count() + 1),
      internal_arc_(g.vertex_count(), kNoArc) {
  const auto infinity = static_cast<std::int64_t>(vertex_count_ + 1);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (v == sink_) continue;
    internal_arc_[v] = static_cast<std::uint32_t>(arcs_.size());
    add_arc(in_node(v), out_node(v), sources.contains(v) ? infinity : 1);
  }
  for (auto [u, v] : g.edges()) {
    add_arc(out_node(u), in_node(v), infinity);
    add_arc(out_node(v), in_node(u), infinity);
  }
  for (VertexId a : sources) add_arc(super_source(), out_node(a), infinity);
}

void FlowNetwork::add_arc(std::uint32_t from, std::uint32_t to,
                          std::int64_t capacity) {
  out_arcs_[from].push_back(static_cast<std::uint32_t>(arcs_.size()));
  arcs_.push_back({to, capacity, 0});
  out_arcs_[to].push_back(static_cast<std::uint32_t>(arcs_.size()));
  arcs_.push_back({from, 0, 0});
}

bool FlowNetwork::augment() {
  const std::uint32_t target = in_node(sink_);
  std::vector<std::uint32_t> parent(out_arcs_.size(), kNoArc);
  std::vector<bool> seen(out_arcs_.size(), false);
  std::deque<std::uint32_t> queue{super_source()};
  seen[super_source()] = true;
  while (!queue.empty() && !seen[target]) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::uint32_t id : out_arcs_[x]) {
      const Arc& arc = arcs_[id];
      if (!seen[arc.to] && arc.capacity - arc.flow > 0) {
        seen[arc.to] = true;
        parent[arc.to] = id;
        queue.push_back(arc.to);
      }
    }
  }
  if (!seen[target]) return false;

  std::int64_t push = std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t x = target; x != super_source();) {
    const Arc& arc = arcs_[parent[x]];
    push = std::min(push, arc.capacity - arc.flow);
    x = arcs_[parent[x] ^ 1].to;
  }
  for (std::uint32_t x = target; x != super_source();) {
    std::uint32_t id = parent[x];
    arcs_[id].flow += push;
    arcs_[id ^ 1].flow -= push;
    x = arcs_[id ^ 1].to;
  }
  value_ += static_cast<std::size_t>(push);
  return true;
}

std::size_t FlowNetwork::run() {
  while (augment()) {
  }
  return value_;
}

std::vector<bool> FlowNetwork::source_reach() const {
  std::vector<bool> seen(out_arcs_.size(), false);
  std::deque<std::uint32_t> queue{super_source()};
  seen[super_source()] = true;
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::uint32_t id : out_arcs_[x]) {
      const Arc& arc = arcs_[id];
      if (!seen[arc.to] && arc.capacity - arc.flow > 0) {
        seen[arc.to] = true;
        queue.push_back(arc.to);
      }
    }
  }
  return seen;
}

std::vector<bool> FlowNetwork::sink_coreach() const {
  // x can reach the sink iff some residual arc x -> y has y in the set; walk
  // the reverse arcs stored at y to find such x.
  std::vector<bool> seen(out_arcs_.size(), false);
  std::deque<std::uint32_t> queue{in_node(sink_)};
  seen[in_node(sink_)] = true;
  while (!queue.empty()) {
    std::uint32_t y = queue.front();
    queue.pop_front();
    for (std::uint32_t id : out_arcs_[y]) {
      std::uint32_t x = arcs_[id].to;
      const Arc& forward = arcs_[id ^ 1];  // x -> y
      if (!seen[x] && forward.capacity - forward.flow > 0) {
        seen[x] = true;
        queue.push_back(x);
      }
    }
  }
  return seen;
}

Separator FlowNetwork::closest_cut() const {
  auto reach = source_reach();
  std::vector<VertexId> cut;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (v != sink_ && reach[in_node(v)] && !reach[out_node(v)]) {
      cut.push_back(v);
    }
  }
  return VertexSet::from_unsorted(std::move(cut));
}

Separator FlowNetwork::furthest_cut() const {
  auto coreach = sink_coreach();
  std::vector<VertexId> cut;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (v != sink_ && coreach[out_node(v)] && !coreach[in_node(v)]) {
      cut.push_back(v);
    }
  }
  return VertexSet::from_unsorted(std::move(cut));
}

std::vector<std::vector<VertexId>> FlowNetwork::paths() const {
  std::vector<std::int64_t> flow(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) flow[i] = arcs_[i].flow;

  std::vector<std::vector<VertexId>> out;
  const std::uint32_t target = in_node(sink_);
  for (std::size_t unit = 0; unit < value_; ++unit) {
    std::vector<VertexId> path;
    std::uint32_t x = super_source();
    while (x != target) {
      std::uint32_t next_arc = kNoArc;
      for (std::uint32_t id : out_arcs_[x]) {
        if (arcs_[id].capacity > 0 && flow[id] > 0) {
          next_arc = id;
          break;
        }
      }
      if (next_arc == kNoArc) break;  // unreachable under conservation
      --flow[next_arc];
      x = arcs_[next_arc].to;
      auto v = static_cast<VertexId>(x / 2);
      if (!path.empty() && path.back() == v) continue;
      // Erase cycles through infinite-capacity source vertices.
      auto seen = std::find(path.begin(), path.end(), v);
      if (seen != path.end()) {
        path.erase(seen + 1, path.end());
      } else {
        path.push_back(v);
      }
    }
    out.push_back(std::move(path));
  }
  return out;
}

bool FlowNetwork::is_consistent() const {
  std::vector<std::int64_t> balance(out_arcs_.size(), 0);
  for (std::size_t i = 0; i < arcs_.size(); i += 2) {
    const Arc& arc = arcs_[i];
    const std::uint32_t from = arcs_[i + 1].to;
    if (arc.flow < 0 || arc.flow > arc.capacity) return false;
    balance[from] -= arc.flow;
    balance[arc.to] += arc.flow;
  }
  for (std::uint32_t x = 0; x < balance.size(); ++x) {
    if (x == super_source() || x == in_node(sink_)) continue;
    if (balance[x] != 0) return false;
  }
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (internal_arc_[v] == kNoArc) continue;
    const Arc& arc = arcs_[internal_arc_[v]];
    if (arc.capacity == 1 && arc.flow != 0 && arc.flow != 1) return false;
  }
  return true;
}

}  // namespace sepenum
