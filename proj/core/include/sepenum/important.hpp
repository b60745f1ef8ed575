#pragma once

#include <cstddef>
#include <vector>

#include "sepenum/graph.hpp"

namespace sepenum {

/// Important s,t-separators of size at most k.
///
/// Convention: a minimal separator S is important when every minimal S'
/// whose s-component is strictly contained in that of S is strictly larger.
/// Important separators are therefore extremal toward s; the textbook
/// notion (extremal toward t) is this one with the terminals swapped.
struct ImportantSet {
  std::vector<Separator> separators;  // ordered by (size, members)
  std::size_t k = 0;
};

/// Flow-based importance test. With R = C_t(G - x), x is important iff it
/// is the unique minimum (R, s)-separator, i.e. |x| equals the (R, s) cut
/// size and x is the minimum cut furthest from R.
/// Throws kNotMinimal if x is not a minimal s,t-separator.
bool is_important(const Graph& g, Terminals term, const Separator& x);

/// All important separators of size <= k. Candidates come from the 2-way
/// branching on a furthest minimum cut (grow the t-side or commit the cut
/// vertex), which visits at most 4^k leaves; each candidate is then checked
/// with is_important.
ImportantSet enumerate_important(const Graph& g, Terminals term,
                                 std::size_t k);

/// The unique important separator of size kappa_{s,t}(G): the minimum
/// separator closest to s.
Separator min_important(const Graph& g, Terminals term);

}  // namespace sepenum
