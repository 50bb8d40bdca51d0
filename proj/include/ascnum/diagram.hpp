#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ascnum {

// A dart is a half-edge slot at a crossing: dart = 4*crossing + position,
// positions 0..3 in counterclockwise order around the vertex.
using Dart = std::int32_t;

constexpr Dart kNoDart = -1;

inline int crossing_of(Dart d) { return d >> 2; }
inline int pos_of(Dart d) { return d & 3; }
inline Dart make_dart(int crossing, int pos) { return 4 * crossing + pos; }
inline Dart rot(Dart d, int k) { return 4 * (d >> 2) + (((d & 3) + k) & 3); }
inline Dart straight(Dart d) { return rot(d, 2); }

struct Crossing {
  int id = 0;
  std::array<Dart, 4> darts{};  // counterclockwise
  bool over_odd = true;         // true: darts 1,3 form the over-strand
};

/// A link diagram as an over/under-decorated 4-valent planar map.
/// Immutable after construction; construction validates the planar
/// embedding (Euler check per connected part) and component structure.
class LinkDiagram {
 public:
  LinkDiagram() = default;  // the empty diagram

  // Assembles and validates a diagram from raw map data. `pairing` must be a
  // fixed-point-free involution on the 4*n_crossings darts.
  static LinkDiagram assemble(std::vector<bool> over_odd,
                              std::vector<Dart> pairing, int free_loops);

  static LinkDiagram parse_pd(std::string_view text);
  std::string to_pd() const;

  int crossing_count() const { return static_cast<int>(over_odd_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  int dart_count() const { return 4 * crossing_count(); }
  int free_loop_count() const { return free_loops_; }

  Dart pair(Dart d) const { return pairing_[static_cast<size_t>(d)]; }
  bool over_odd_at(int crossing) const { return over_odd_[static_cast<size_t>(crossing)]; }
  bool is_over(Dart d) const {
    return ((d & 1) != 0) == over_odd_[static_cast<size_t>(d >> 2)];
  }
  Crossing crossing(int id) const;

  // Components holding at least one crossing come first (ordered by smallest
  // dart, each listed as the alternating entry/exit dart walk from that
  // dart); crossingless components follow as empty sequences.
  const std::vector<std::vector<Dart>>& components() const { return components_; }
  int component_count() const { return static_cast<int>(components_.size()); }
  int map_component_count() const {
    return static_cast<int>(components_.size()) - free_loops_;
  }
  int component_of(Dart d) const { return component_of_[static_cast<size_t>(d)]; }

  // Connected parts of the underlying 4-valent graph.
  int part_count() const { return part_count_; }
  int part_of(int crossing) const { return part_of_[static_cast<size_t>(crossing)]; }

  LinkDiagram switch_crossing(int id) const;

  const std::vector<Dart>& pairing() const { return pairing_; }
  const std::vector<bool>& over_flags() const { return over_odd_; }

 private:
  std::vector<bool> over_odd_;
  std::vector<Dart> pairing_;
  int free_loops_ = 0;

  std::vector<std::vector<Dart>> components_;  // map components only, then padded empties
  std::vector<int> component_of_;
  std::vector<int> part_of_;
  int part_count_ = 0;
};

/// Basepoint, orientation and component order of a diagram, fused into one
/// start dart per component: the traversal leaves the basepoint along that
/// dart's edge, entering the dart's crossing first. Crossingless components
/// carry kNoDart.
struct Marking {
  std::vector<Dart> basepoints;  // indexed by component id
  std::vector<int> order;        // order[i] = component visited i-th
};

struct Visit {
  int crossing;
  bool over;
  bool first;
};

void validate_marking(const LinkDiagram& d, const Marking& m);

// Visits components in m.order; within a component walks from the basepoint
// dart. Every crossing appears exactly twice, once per strand.
std::vector<Visit> traverse(const LinkDiagram& d, const Marking& m);

struct DescendingResult {
  LinkDiagram descending;
  std::vector<int> changed;  // crossing ids, ascending order
  int ascending_count = 0;
};

// Switches every crossing whose first encounter along the traversal is on
// the under-strand, so that the result is descending for this marking.
DescendingResult make_descending(const LinkDiagram& d, const Marking& m);

int ascending_count(const LinkDiagram& d, const Marking& m);

// All (basepoint choice) x (component order) markings, in lexicographic
// order: component-order permutations first, then basepoint tuples by dart
// id. Count: n! * prod over components of their dart count (empty -> 1).
std::vector<Marking> enumerate_markings(const LinkDiagram& d);
std::uint64_t marking_count(const LinkDiagram& d);

struct MinAscendingResult {
  int value = 0;
  Marking witness;  // first marking attaining value in enumeration order
};

MinAscendingResult min_ascending(const LinkDiagram& d);

// Same basepoints, reversed traversal directions, reversed component order.
Marking reverse_marking(const LinkDiagram& d, const Marking& m);

// True when over and under passages alternate along every component.
bool is_alternating(const LinkDiagram& d);

}  // namespace ascnum
