#include "sepenum/small_minimal.hpp"

#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "sepenum/errors.hpp"
#include "sepenum/important.hpp"

namespace sepenum {

OrderKey pop_key(const Graph& g, VertexId s, const Separator& set) {
  return OrderKey{component_of(g, set, s).size(), set};
}

std::size_t enumerate_small_minimal(const Graph& g, Terminals term,
                                    std::size_t k, const SeparatorSink& sink) {
  require_separable(g, term);
  if (k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "size bound must be at least 1");
  }

  std::priority_queue<OrderKey, std::vector<OrderKey>, std::greater<>> queue;
  std::unordered_set<Separator, VertexSetHash> seen;

  auto push = [&](const Separator& candidate, std::size_t floor) {
    OrderKey key = pop_key(g, term.s, candidate);
    if (key.component_size <= floor) {
      throw std::logic_error("candidate does not grow the s-component");
    }
    if (seen.insert(candidate).second) queue.push(std::move(key));
  };

  for (const auto& s : enumerate_important(g, term, k).separators) {
    push(s, 0);
  }

  std::size_t emitted = 0;
  while (!queue.empty()) {
    OrderKey top = queue.top();
    queue.pop();
    const Separator& current = top.members;
    if (current.size() > k || !is_minimal_separator(g, term, current)) {
      throw std::logic_error("queued set is not a small minimal separator");
    }
    ++emitted;
    if (!sink(current)) break;

    Graph star = add_star(g, term.s, current);
    for (VertexId v : current) {
      Graph absorbed = absorb(star, term.s, v);
      if (absorbed.has_edge(term.s, term.t)) continue;
      for (const auto& next :
           enumerate_important(absorbed, term, k).separators) {
        push(next, top.component_size);
      }
    }
  }
  return emitted;
}

}  // namespace sepenum
