#pragma once

#include <cstdint>
#include <optional>

#include "ascnum/diagram.hpp"
#include "ascnum/moves.hpp"

namespace ascnum {

struct SearchBudget {
  int crossing_cap = 0;
  std::int64_t node_cap = 1000000;
};

struct SearchOptions {
  bool r1 = true;
  bool r2 = true;
  bool r3 = true;
  // Stop as soon as best_value <= target (a known lower bound makes further
  // exploration pointless).
  std::optional<int> target;
};

struct SearchReport {
  int best_value = 0;
  LinkDiagram witness_diagram;
  Marking witness_marking;
  std::int64_t nodes = 0;  // distinct diagrams evaluated
  bool frontier_exhausted = false;
  SearchBudget budget;
};

// Best-first exploration of the Reidemeister move graph from d, deduplicated
// by canonical code, minimizing min_ascending over the visited diagrams.
// Node priority: ascending value, then crossing count, then insertion order.
// The witness is the first diagram/marking attaining best_value.
SearchReport search_upper_bound(const LinkDiagram& d, const SearchBudget& budget,
                                const SearchOptions& opts = {});

}  // namespace ascnum
