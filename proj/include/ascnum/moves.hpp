#pragma once

#include <array>
#include <string>
#include <vector>

#include "ascnum/diagram.hpp"

namespace ascnum {

struct Face {
  std::vector<Dart> darts;  // cyclic, face kept on the left of each leaving dart
};

// Complete face partition; V - E + F = 2 holds per connected part.
std::vector<Face> faces(const LinkDiagram& d);

enum class MoveKind { R1Up, R1Down, R2Up, R2Down, R3 };

struct Move {
  MoveKind kind{};
  // R1Down: site[0] = a monogon dart at the kink crossing.
  // R2Down: site[0], site[1] = the bigon face darts.
  // R3:     site[0..2] = the triangle face darts.
  // R1Up:   site[0] = edge anchor dart; side picks the loop corner, over the
  //         kink sign.
  // R2Up:   site[0] pushed across site[1] (darts on a common face); over
  //         picks which strand ends on top.
  std::array<Dart, 3> site{kNoDart, kNoDart, kNoDart};
  bool over = false;
  bool side = false;
};

struct MoveOptions {
  int crossing_cap = 0;  // R1Up/R2Up offered only while below the cap
  bool r1 = true;
  bool r2 = true;
  bool r3 = true;
};

std::vector<Move> legal_moves(const LinkDiagram& d, const MoveOptions& opts);

// Applies a move, validating its site first. New crossings are appended at
// the end; removals keep the surviving crossings' relative order.
LinkDiagram apply_move(const LinkDiagram& d, const Move& mv);

// Equal byte strings exactly for diagrams isomorphic as over/under-decorated
// planar maps under orientation-preserving sphere maps (mirror images get
// distinct codes). Lexicographic minimum over all start darts of a
// breadth-first relabeling trace, per connected part.
std::string canonical_code(const LinkDiagram& d);

}  // namespace ascnum
