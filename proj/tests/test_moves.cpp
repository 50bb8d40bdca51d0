#include "ascnum/moves.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ascnum/generators.hpp"
#include "support/random_corpus.hpp"

using namespace ascnum;

namespace {
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

int count_kind(const std::vector<Move>& moves, MoveKind k) {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(),
                                        [&](const Move& m) { return m.kind == k; }));
}
}  // namespace

TEST_CASE("faces: counts match Euler formula") {
  CHECK(faces(LinkDiagram::parse_pd(kTrefoil)).size() == 5);
  CHECK(faces(LinkDiagram::parse_pd("X(2,1,1,2)")).size() == 3);  // kink unknot
  CHECK(faces(LinkDiagram::parse_pd("X(1,3,2,4) X(3,1,4,2)")).size() == 4);  // hopf
}

TEST_CASE("faces: partition all darts") {
  for (const auto& d : test_support::random_corpus(25, 3)) {
    std::set<Dart> seen;
    size_t total = 0;
    for (const auto& f : faces(d)) {
      total += f.darts.size();
      seen.insert(f.darts.begin(), f.darts.end());
    }
    CHECK(total == static_cast<size_t>(d.dart_count()));
    CHECK(seen.size() == static_cast<size_t>(d.dart_count()));
  }
}

TEST_CASE("legal_moves: kink has exactly one decreasing move") {
  LinkDiagram kink = LinkDiagram::parse_pd("X(2,1,1,2)");
  MoveOptions opts;
  opts.crossing_cap = 1;  // at cap: no increasing moves offered
  auto moves = legal_moves(kink, opts);
  CHECK(moves.size() == 1);
  REQUIRE(count_kind(moves, MoveKind::R1Down) == 1);
  LinkDiagram un = apply_move(kink, moves.front());
  CHECK(un.crossing_count() == 0);
  CHECK(un.free_loop_count() == 1);
  CHECK(un.component_count() == 1);
}

TEST_CASE("legal_moves: reduced alternating trefoil has no decreasing moves") {
  LinkDiagram d = LinkDiagram::parse_pd(kTrefoil);
  MoveOptions opts;
  opts.crossing_cap = 3;
  auto moves = legal_moves(d, opts);
  CHECK(count_kind(moves, MoveKind::R1Down) == 0);
  CHECK(count_kind(moves, MoveKind::R2Down) == 0);
  CHECK(count_kind(moves, MoveKind::R3) == 0);  // alternating triangle pattern is cyclic
  CHECK(count_kind(moves, MoveKind::R1Up) == 0);
  CHECK(count_kind(moves, MoveKind::R2Up) == 0);

  opts.crossing_cap = 4;
  CHECK(count_kind(legal_moves(d, opts), MoveKind::R1Up) == 24);  // 6 edges x 4 kinds
  CHECK(count_kind(legal_moves(d, opts), MoveKind::R2Up) == 0);   // needs cap c+2

  opts.crossing_cap = 5;
  CHECK(count_kind(legal_moves(d, opts), MoveKind::R2Up) > 0);
}

TEST_CASE("R1 pair inverts under canonical code") {
  LinkDiagram d = LinkDiagram::parse_pd(kTrefoil);
  std::string code = canonical_code(d);
  MoveOptions opts;
  opts.crossing_cap = 4;
  for (const Move& mv : legal_moves(d, opts)) {
    if (mv.kind != MoveKind::R1Up) continue;
    LinkDiagram kinked = apply_move(d, mv);
    CHECK(kinked.crossing_count() == 4);
    auto downs = legal_moves(kinked, opts);
    REQUIRE(count_kind(downs, MoveKind::R1Down) == 1);
    for (const Move& dn : downs)
      if (dn.kind == MoveKind::R1Down) {
        CHECK(crossing_of(dn.site[0]) == 3);  // the appended crossing
        CHECK(canonical_code(apply_move(kinked, dn)) == code);
      }
  }
}

TEST_CASE("R2 pair inverts under canonical code") {
  LinkDiagram d = LinkDiagram::parse_pd(kTrefoil);
  std::string code = canonical_code(d);
  MoveOptions opts;
  opts.crossing_cap = 5;
  int checked = 0;
  for (const Move& mv : legal_moves(d, opts)) {
    if (mv.kind != MoveKind::R2Up) continue;
    LinkDiagram poked = apply_move(d, mv);
    CHECK(poked.crossing_count() == 5);
    CHECK(poked.component_count() == d.component_count());
    // The poke created a removable bigon between the two new crossings.
    bool restored = false;
    for (const Move& dn : legal_moves(poked, opts)) {
      if (dn.kind != MoveKind::R2Down) continue;
      if (crossing_of(dn.site[0]) < 3 || crossing_of(dn.site[1]) < 3) continue;
      restored = canonical_code(apply_move(poked, dn)) == code;
      if (restored) break;
    }
    CHECK(restored);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("R3 flips twice back to itself") {
  int verified = 0;
  for (const auto& d : test_support::random_corpus(120, 5, 8)) {
    MoveOptions opts;
    opts.crossing_cap = d.crossing_count();
    opts.r1 = opts.r2 = false;
    std::string code = canonical_code(d);
    for (const Move& mv : legal_moves(d, opts)) {
      LinkDiagram once = apply_move(d, mv);
      CHECK(once.crossing_count() == d.crossing_count());
      // The flipped triangle lives on the strand-opposite ports.
      Move back{MoveKind::R3,
                {straight(mv.site[0]), straight(mv.site[1]), straight(mv.site[2])},
                false, false};
      while (back.site[0] != std::min({back.site[0], back.site[1], back.site[2]}))
        back.site = {back.site[1], back.site[2], back.site[0]};
      CHECK(canonical_code(apply_move(once, back)) == code);
      ++verified;
    }
  }
  CHECK(verified >= 10);
}

TEST_CASE("moves preserve validity and component count across corpus") {
  std::mt19937_64 rng(99);
  int applications = 0;
  for (const auto& d : test_support::random_corpus(30, 17, 8)) {
    MoveOptions opts;
    opts.crossing_cap = d.crossing_count() + 2;
    auto moves = legal_moves(d, opts);
    if (moves.empty()) continue;
    for (int rep = 0; rep < 4 && rep < static_cast<int>(moves.size()); ++rep) {
      const Move& mv = moves[std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng)];
      LinkDiagram next = apply_move(d, mv);  // assemble() rechecks planarity
      CHECK(next.component_count() == d.component_count());
      ++applications;
    }
  }
  CHECK(applications > 40);
}

TEST_CASE("canonical_code: invariant under relabeling, separates mirror") {
  LinkDiagram d = LinkDiagram::parse_pd(kTrefoil);
  // Same diagram with the crossing list permuted and edges relabeled.
  LinkDiagram relab = LinkDiagram::parse_pd("X(2,5,3,6) X(4,1,5,2) X(6,3,1,4)");
  CHECK(canonical_code(relab) == canonical_code(d));

  LinkDiagram mirror = d;
  for (int c = 0; c < 3; ++c) mirror = mirror.switch_crossing(c);
  CHECK(canonical_code(mirror) != canonical_code(d));

  LinkDiagram fig8 = twist_knot_diagram(2);
  CHECK(canonical_code(fig8) != canonical_code(d));
}

TEST_CASE("canonical_code: collides exactly on serialized round trips") {
  for (const auto& d : test_support::random_corpus(25, 29)) {
    LinkDiagram d2 = LinkDiagram::parse_pd(d.to_pd());
    CHECK(canonical_code(d2) == canonical_code(d));
  }
}

TEST_CASE("apply_move: stale site rejected") {
  LinkDiagram d = LinkDiagram::parse_pd(kTrefoil);
  Move bogus{MoveKind::R1Down, {0, kNoDart, kNoDart}, false, false};
  CHECK_THROWS_AS(apply_move(d, bogus), std::invalid_argument);
  Move bad_r3{MoveKind::R3, {0, 1, 2}, false, false};
  CHECK_THROWS_AS(apply_move(d, bad_r3), std::invalid_argument);
}
