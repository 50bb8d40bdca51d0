#include "ascnum/moves.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ascnum {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

Dart face_next(const LinkDiagram& d, Dart x) { return rot(d.pair(x), -1); }

struct MapData {
  std::vector<bool> over_odd;
  std::vector<Dart> pairing;
  int free_loops;

  explicit MapData(const LinkDiagram& d)
      : over_odd(d.over_flags()), pairing(d.pairing()), free_loops(d.free_loop_count()) {}

  void join(Dart a, Dart b) {
    pairing[static_cast<size_t>(a)] = b;
    pairing[static_cast<size_t>(b)] = a;
  }
  int add_crossing(bool over) {
    over_odd.push_back(over);
    pairing.resize(pairing.size() + 4, kNoDart);
    return static_cast<int>(over_odd.size()) - 1;
  }
  LinkDiagram build() {
    return LinkDiagram::assemble(std::move(over_odd), std::move(pairing), free_loops);
  }
};

// Removes a set of crossings, splicing the strands that ran through them and
// turning strand cycles lying entirely inside the set into free loops.
LinkDiagram remove_crossings(const LinkDiagram& d, const std::vector<int>& removed_ids) {
  std::vector<char> removed(static_cast<size_t>(d.crossing_count()), 0);
  for (int id : removed_ids) removed[static_cast<size_t>(id)] = 1;

  std::vector<int> remap(static_cast<size_t>(d.crossing_count()), -1);
  std::vector<bool> over;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (!removed[static_cast<size_t>(c)]) {
      remap[static_cast<size_t>(c)] = static_cast<int>(over.size());
      over.push_back(d.over_odd_at(c));
    }
  auto remap_dart = [&](Dart x) {
    return make_dart(remap[static_cast<size_t>(crossing_of(x))], pos_of(x));
  };

  std::vector<Dart> pairing(over.size() * 4, kNoDart);
  std::vector<char> consumed(static_cast<size_t>(d.dart_count()), 0);
  for (Dart u = 0; u < d.dart_count(); ++u) {
    if (removed[static_cast<size_t>(crossing_of(u))]) continue;
    if (pairing[static_cast<size_t>(remap_dart(u))] != kNoDart) continue;
    Dart v = d.pair(u);
    while (removed[static_cast<size_t>(crossing_of(v))]) {
      consumed[static_cast<size_t>(v)] = 1;
      consumed[static_cast<size_t>(straight(v))] = 1;
      v = d.pair(straight(v));
    }
    pairing[static_cast<size_t>(remap_dart(u))] = remap_dart(v);
    pairing[static_cast<size_t>(remap_dart(v))] = remap_dart(u);
  }

  int free_loops = d.free_loop_count();
  for (Dart w = 0; w < d.dart_count(); ++w) {
    if (!removed[static_cast<size_t>(crossing_of(w))] || consumed[static_cast<size_t>(w)]) continue;
    ++free_loops;
    Dart cur = w;
    do {
      consumed[static_cast<size_t>(cur)] = 1;
      consumed[static_cast<size_t>(straight(cur))] = 1;
      cur = d.pair(straight(cur));
    } while (cur != w);
  }

  return LinkDiagram::assemble(std::move(over), std::move(pairing), free_loops);
}

bool is_monogon_dart(const LinkDiagram& d, Dart x) { return d.pair(x) == rot(x, 1); }

// Over/under pattern of a bigon face dart pair: removable when the strand
// through site[0]'s edge runs over (or under) at both crossings.
bool bigon_removable(const LinkDiagram& d, Dart a, Dart b) {
  if (crossing_of(a) == crossing_of(b)) return false;
  return d.is_over(a) == d.is_over(rot(b, 1));
}

bool triangle_slidable(const LinkDiagram& d, Dart a, Dart b, Dart c) {
  int ca = crossing_of(a), cb = crossing_of(b), cc = crossing_of(c);
  if (ca == cb || cb == cc || ca == cc) return false;
  bool o1 = d.is_over(a), o2 = d.is_over(b), o3 = d.is_over(c);
  return !(o1 == o2 && o2 == o3);  // a cyclic over-pattern cannot slide
}

}  // namespace

std::vector<Face> faces(const LinkDiagram& d) {
  std::vector<Face> out;
  std::vector<char> seen(static_cast<size_t>(d.dart_count()), 0);
  for (Dart s = 0; s < d.dart_count(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    Face f;
    Dart cur = s;
    do {
      seen[static_cast<size_t>(cur)] = 1;
      f.darts.push_back(cur);
      cur = face_next(d, cur);
    } while (cur != s);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Move> legal_moves(const LinkDiagram& d, const MoveOptions& opts) {
  std::vector<Move> out;
  const auto all_faces = faces(d);

  if (opts.r1) {
    std::set<int> kink_crossings;
    for (Dart x = 0; x < d.dart_count(); ++x)
      if (is_monogon_dart(d, x)) kink_crossings.insert(crossing_of(x));
    for (int c : kink_crossings) {
      for (int p = 0; p < 4; ++p) {
        Dart x = make_dart(c, p);
        if (is_monogon_dart(d, x)) {
          out.push_back({MoveKind::R1Down, {x, kNoDart, kNoDart}, false, false});
          break;  // one removal per kink crossing; either monogon gives the same result
        }
      }
    }
  }
  if (opts.r2) {
    std::set<std::pair<int, int>> seen_pairs;
    for (const Face& f : all_faces) {
      if (f.darts.size() != 2) continue;
      Dart a = f.darts[0], b = f.darts[1];
      if (!bigon_removable(d, a, b)) continue;
      std::pair<int, int> key = std::minmax(crossing_of(a), crossing_of(b));
      if (!seen_pairs.insert(key).second) continue;
      out.push_back({MoveKind::R2Down, {std::min(a, b), std::max(a, b), kNoDart}, false, false});
    }
  }
  if (opts.r3) {
    for (const Face& f : all_faces) {
      if (f.darts.size() != 3) continue;
      // Normalize the cyclic triple to start at the smallest dart.
      std::array<Dart, 3> t{f.darts[0], f.darts[1], f.darts[2]};
      while (t[0] != std::min({t[0], t[1], t[2]})) t = {t[1], t[2], t[0]};
      if (triangle_slidable(d, t[0], t[1], t[2]))
        out.push_back({MoveKind::R3, t, false, false});
    }
  }
  if (opts.r1 && d.crossing_count() + 1 <= opts.crossing_cap) {
    for (Dart x = 0; x < d.dart_count(); ++x) {
      if (d.pair(x) < x) continue;  // one anchor per edge
      for (bool side : {false, true})
        for (bool over : {false, true})
          out.push_back({MoveKind::R1Up, {x, kNoDart, kNoDart}, over, side});
    }
  }
  if (opts.r2 && d.crossing_count() + 2 <= opts.crossing_cap) {
    for (const Face& f : all_faces) {
      if (f.darts.size() < 2) continue;
      std::vector<Dart> fd = f.darts;
      std::rotate(fd.begin(), std::min_element(fd.begin(), fd.end()), fd.end());
      for (size_t i = 0; i < fd.size(); ++i)
        for (size_t j = 0; j < fd.size(); ++j) {
          if (i == j) continue;
          for (bool over : {false, true})
            out.push_back({MoveKind::R2Up, {fd[i], fd[j], kNoDart}, over, false});
        }
    }
  }
  return out;
}

namespace {

LinkDiagram apply_r1_up(const LinkDiagram& d, const Move& mv) {
  Dart x = mv.site[0];
  if (x < 0 || x >= d.dart_count()) fail("R1Up: bad anchor dart");
  MapData m(d);
  Dart mate = d.pair(x);
  int y = m.add_crossing(mv.over);
  // Through-strand runs ports 0 -> 2; the loop edge closes a monogon on the
  // chosen side.
  if (!mv.side) {
    m.join(x, make_dart(y, 0));
    m.join(make_dart(y, 2), make_dart(y, 3));
    m.join(make_dart(y, 1), mate);
  } else {
    m.join(x, make_dart(y, 0));
    m.join(make_dart(y, 1), make_dart(y, 2));
    m.join(make_dart(y, 3), mate);
  }
  return m.build();
}

LinkDiagram apply_r2_up(const LinkDiagram& d, const Move& mv) {
  Dart d1 = mv.site[0], d2 = mv.site[1];
  if (d1 < 0 || d2 < 0 || d1 >= d.dart_count() || d2 >= d.dart_count() || d1 == d2)
    fail("R2Up: bad site darts");
  // The poke is only planar across a shared face.
  {
    Dart cur = d1;
    bool shared = false;
    do {
      if (cur == d2) { shared = true; break; }
      cur = face_next(d, cur);
    } while (cur != d1);
    if (!shared) fail("R2Up: darts do not lie on a common face");
  }
  MapData m(d);
  int u = m.add_crossing(mv.over);
  int v = m.add_crossing(mv.over);
  // Ports counterclockwise: 0 = E, 1 = N, 2 = W, 3 = S. The pushed strand
  // runs vertically (N/S, the odd diagonal), the crossed strand horizontally.
  Dart v1 = m.pairing[static_cast<size_t>(d1)];
  m.join(d1, make_dart(u, 3));
  m.join(make_dart(u, 1), make_dart(v, 1));
  m.join(make_dart(v, 3), v1);
  Dart v2 = m.pairing[static_cast<size_t>(d2)];
  m.join(d2, make_dart(v, 0));
  m.join(make_dart(v, 2), make_dart(u, 0));
  m.join(make_dart(u, 2), v2);
  return m.build();
}

LinkDiagram apply_r3(const LinkDiagram& d, const Move& mv) {
  std::array<Dart, 3> delta = mv.site;
  for (Dart x : delta)
    if (x < 0 || x >= d.dart_count()) fail("R3: bad site dart");
  if (face_next(d, delta[0]) != delta[1] || face_next(d, delta[1]) != delta[2] ||
      face_next(d, delta[2]) != delta[0])
    fail("R3: site is not a triangular face");
  if (!triangle_slidable(d, delta[0], delta[1], delta[2]))
    fail("R3: cyclic over/under pattern cannot slide");

  // Corner i uses face ports delta[i] (leaving) and eps[i] (arriving); their
  // strand-opposite ports form the flipped triangle. Each outer edge end at
  // an old outward port moves to the matching inner port of the next corner.
  std::array<Dart, 3> eps, dp, ep;
  for (int i = 0; i < 3; ++i) {
    eps[static_cast<size_t>(i)] = rot(delta[static_cast<size_t>(i)], 1);
    dp[static_cast<size_t>(i)] = straight(delta[static_cast<size_t>(i)]);
    ep[static_cast<size_t>(i)] = straight(eps[static_cast<size_t>(i)]);
  }
  auto moved = [&](Dart x) -> Dart {
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3;
      if (x == dp[static_cast<size_t>(i)]) return eps[static_cast<size_t>(j)];
      if (x == ep[static_cast<size_t>(j)]) return delta[static_cast<size_t>(i)];
    }
    return x;
  };

  MapData m(d);
  std::vector<char> rewired(static_cast<size_t>(d.dart_count()), 0);
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    m.join(dp[static_cast<size_t>(i)], ep[static_cast<size_t>(j)]);
    rewired[static_cast<size_t>(dp[static_cast<size_t>(i)])] = 1;
    rewired[static_cast<size_t>(ep[static_cast<size_t>(j)])] = 1;
  }
  for (int i = 0; i < 3; ++i) {
    for (Dart old_port : {dp[static_cast<size_t>(i)], ep[static_cast<size_t>(i)]}) {
      Dart far = d.pair(old_port);
      bool far_is_outward = false;
      for (int k = 0; k < 3 && !far_is_outward; ++k)
        far_is_outward = far == dp[static_cast<size_t>(k)] || far == ep[static_cast<size_t>(k)];
      Dart a = moved(old_port);
      Dart b = far_is_outward ? moved(far) : far;
      if (!rewired[static_cast<size_t>(a)]) {
        m.join(a, b);
        rewired[static_cast<size_t>(a)] = 1;
        rewired[static_cast<size_t>(b)] = 1;
      }
    }
  }
  return m.build();
}

}  // namespace

LinkDiagram apply_move(const LinkDiagram& d, const Move& mv) {
  switch (mv.kind) {
    case MoveKind::R1Down: {
      Dart x = mv.site[0];
      if (x < 0 || x >= d.dart_count() || !is_monogon_dart(d, x))
        fail("R1Down: site is not a monogon");
      return remove_crossings(d, {crossing_of(x)});
    }
    case MoveKind::R2Down: {
      Dart a = mv.site[0], b = mv.site[1];
      if (a < 0 || b < 0 || a >= d.dart_count() || b >= d.dart_count() ||
          face_next(d, a) != b || face_next(d, b) != a)
        fail("R2Down: site is not a bigon face");
      if (!bigon_removable(d, a, b)) fail("R2Down: clasp bigon cannot be removed");
      return remove_crossings(d, {crossing_of(a), crossing_of(b)});
    }
    case MoveKind::R1Up:
      return apply_r1_up(d, mv);
    case MoveKind::R2Up:
      return apply_r2_up(d, mv);
    case MoveKind::R3:
      return apply_r3(d, mv);
  }
  fail("unknown move kind");
}

}  // namespace ascnum
