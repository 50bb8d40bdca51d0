#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ascnum/moves.hpp"

namespace ascnum {

namespace {

// Breadth-first relabeling trace of one connected part rooted at `root`.
// Crossings are discovered in queue order; each emits its over-bit relative
// to the entry dart, then for the four ports counterclockwise from the entry
// the neighbour's id and the offset of the landing port from that
// neighbour's entry port. Equal traces = isomorphic rooted decorated maps.
std::string bfs_trace(const LinkDiagram& d, Dart root) {
  std::vector<int> id(static_cast<size_t>(d.crossing_count()), -1);
  std::vector<int> entry(static_cast<size_t>(d.crossing_count()), -1);
  std::vector<int> queue;
  auto discover = [&](Dart at) {
    int c = crossing_of(at);
    id[static_cast<size_t>(c)] = static_cast<int>(queue.size());
    entry[static_cast<size_t>(c)] = pos_of(at);
    queue.push_back(c);
  };
  discover(root);

  std::string trace;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int c = queue[qi];
    Dart entry_dart = make_dart(c, entry[static_cast<size_t>(c)]);
    trace.push_back(d.is_over(entry_dart) ? '\1' : '\0');
    for (int k = 0; k < 4; ++k) {
      Dart landing = d.pair(rot(entry_dart, k));
      int y = crossing_of(landing);
      if (id[static_cast<size_t>(y)] < 0) discover(landing);
      trace.push_back(static_cast<char>(id[static_cast<size_t>(y)]));
      trace.push_back(static_cast<char>((pos_of(landing) - entry[static_cast<size_t>(y)]) & 3));
    }
  }
  return trace;
}

}  // namespace

std::string canonical_code(const LinkDiagram& d) {
  if (d.crossing_count() > 250)
    throw std::invalid_argument("canonical_code: diagram too large for byte trace");
  std::vector<std::string> part_codes(static_cast<size_t>(d.part_count()));
  for (Dart root = 0; root < d.dart_count(); ++root) {
    std::string t = bfs_trace(d, root);
    std::string& best = part_codes[static_cast<size_t>(d.part_of(crossing_of(root)))];
    if (best.empty() || t < best) best = std::move(t);
  }
  std::sort(part_codes.begin(), part_codes.end());
  std::string code;
  code.push_back(static_cast<char>(d.free_loop_count()));
  code.push_back(static_cast<char>(d.part_count()));
  for (const auto& p : part_codes) {
    code.push_back(static_cast<char>(p.size() / 9));  // crossing count of the part
    code += p;
  }
  return code;
}

}  // namespace ascnum
