#include "ascnum/search.hpp"

#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_set>
#include <vector>

namespace ascnum {

SearchReport search_upper_bound(const LinkDiagram& d, const SearchBudget& budget,
                                const SearchOptions& opts) {
  if (budget.crossing_cap < d.crossing_count())
    throw std::invalid_argument("search: crossing cap below the start diagram");
  if (budget.node_cap < 1) throw std::invalid_argument("search: caps must be positive");

  SearchReport report;
  report.budget = budget;

  struct Entry {
    int value;
    int crossings;
    std::int64_t seq;
    bool operator>(const Entry& o) const {
      return std::tie(value, crossings, seq) > std::tie(o.value, o.crossings, o.seq);
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> frontier;
  std::vector<LinkDiagram> diagrams;
  std::unordered_set<std::string> seen;
  bool capped = false;

  auto visit = [&](LinkDiagram&& nd) {
    if (!seen.insert(canonical_code(nd)).second) return;
    MinAscendingResult best = min_ascending(nd);
    std::int64_t seq = static_cast<std::int64_t>(diagrams.size());
    ++report.nodes;
    if (report.nodes == 1 || best.value < report.best_value) {
      report.best_value = best.value;
      report.witness_diagram = nd;
      report.witness_marking = std::move(best.witness);
    }
    frontier.push({best.value, nd.crossing_count(), seq});
    diagrams.push_back(std::move(nd));
  };

  visit(LinkDiagram(d));
  MoveOptions mopts;
  mopts.crossing_cap = budget.crossing_cap;
  mopts.r1 = opts.r1;
  mopts.r2 = opts.r2;
  mopts.r3 = opts.r3;

  while (!frontier.empty()) {
    if (opts.target && report.best_value <= *opts.target) break;
    Entry cur = frontier.top();
    frontier.pop();
    const LinkDiagram node = std::move(diagrams[static_cast<size_t>(cur.seq)]);
    diagrams[static_cast<size_t>(cur.seq)] = LinkDiagram();
    for (const Move& mv : legal_moves(node, mopts)) {
      if (report.nodes >= budget.node_cap) { capped = true; break; }
      visit(apply_move(node, mv));
      if (opts.target && report.best_value <= *opts.target) break;
    }
    if (capped) break;
  }
  report.frontier_exhausted = frontier.empty() && !capped;
  return report;
}

}  // namespace ascnum
