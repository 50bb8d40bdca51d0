#include "ascnum/generators.hpp"

#include <numeric>
#include <stdexcept>

namespace ascnum {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// Crossing port layout used by the builders, stored counterclockwise:
// position 0 = NE, 1 = NW, 2 = SW, 3 = SE.
constexpr int kNE = 0, kNW = 1, kSW = 2, kSE = 3;

struct MapBuilder {
  std::vector<bool> over_odd;
  std::vector<Dart> pairing;
  int free_loops = 0;

  int add_crossing(bool over) {
    int id = static_cast<int>(over_odd.size());
    over_odd.push_back(over);
    pairing.resize(pairing.size() + 4, kNoDart);
    return id;
  }
  void join(Dart a, Dart b) {
    pairing[static_cast<size_t>(a)] = b;
    pairing[static_cast<size_t>(b)] = a;
  }
  LinkDiagram build() const {
    return LinkDiagram::assemble(over_odd, pairing, free_loops);
  }
};

}  // namespace

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) fail("braid_closure: need at least one strand");
  MapBuilder b;
  // Dangling darts per column: top ends (closed at the end) and the current
  // open bottom ends.
  std::vector<Dart> top(static_cast<size_t>(strands), kNoDart);
  std::vector<Dart> open(static_cast<size_t>(strands), kNoDart);

  for (int letter : word) {
    int i = std::abs(letter);
    if (letter == 0 || i >= strands) fail("braid_closure: bad letter in word");
    size_t li = static_cast<size_t>(i - 1), ri = static_cast<size_t>(i);
    // Positive letter: the strand arriving from column i (the NW port) runs
    // over, i.e. the NW-SE diagonal.
    int c = b.add_crossing(letter > 0);
    Dart nw = make_dart(c, kNW), ne = make_dart(c, kNE);
    Dart sw = make_dart(c, kSW), se = make_dart(c, kSE);
    if (open[li] == kNoDart) top[li] = nw; else b.join(open[li], nw);
    if (open[ri] == kNoDart) top[ri] = ne; else b.join(open[ri], ne);
    open[li] = sw;
    open[ri] = se;
  }
  for (int j = 0; j < strands; ++j) {
    if (open[static_cast<size_t>(j)] == kNoDart)
      ++b.free_loops;
    else
      b.join(open[static_cast<size_t>(j)], top[static_cast<size_t>(j)]);
  }
  return b.build();
}

LinkDiagram torus_diagram(int p, int q) {
  if (p < 2 || q < 2) fail("torus_diagram: need p,q >= 2");
  if (std::gcd(p, q) != 1) fail("torus_diagram: p and q must be coprime");
  std::vector<int> word;
  word.reserve(static_cast<size_t>((p - 1) * q));
  for (int row = 0; row < q; ++row)
    for (int i = 1; i < p; ++i) word.push_back(i);
  return braid_closure(p, word);
}

std::pair<Marking, Marking> torus_proof_markings(const LinkDiagram& torus, int p, int q) {
  if (torus.crossing_count() != (p - 1) * q || torus.component_count() != 1)
    fail("torus_proof_markings: diagram does not match (p,q)");
  // Crossings are laid out row-major by braid_closure: the leading sweep
  // enters crossing 0 at NW, runs over all of row one, and leaves crossing
  // p-2 at SE. Entering forward at NW of crossing 0, or backward at SE of
  // crossing p-2, meets those p-1 crossings first, as over-crossings.
  Marking fwd{{make_dart(0, kNW)}, {0}};
  Marking rev{{make_dart(p - 2, kSE)}, {0}};
  return {fwd, rev};
}

// ---------------------------------------------------------------------------
// Rational tangles.
//
// A tangle is tracked by its four boundary darts. twist_right appends a
// horizontal chain at the (ne,se) side, twist_bottom a vertical chain at the
// (sw,se) side. Over/under is fixed per chain so that twist regions
// alternate internally; sign > 0 keeps the NW-SE diagonal on top.

namespace {

struct Tangle {
  Dart nw = kNoDart, ne = kNoDart, sw = kNoDart, se = kNoDart;
};

// Horizontal chain of k crossings, left ports (NW,SW) to right ports (NE,SE).
Tangle horizontal_chain(MapBuilder& b, int k, bool over) {
  int first = -1, last = -1;
  for (int j = 0; j < k; ++j) {
    int c = b.add_crossing(over);
    if (j == 0) first = c;
    if (last >= 0) {
      b.join(make_dart(last, kNE), make_dart(c, kNW));
      b.join(make_dart(last, kSE), make_dart(c, kSW));
    }
    last = c;
  }
  return {make_dart(first, kNW), make_dart(last, kNE),
          make_dart(first, kSW), make_dart(last, kSE)};
}

// Vertical chain of k crossings, top ports (NW,NE) to bottom ports (SW,SE).
Tangle vertical_chain(MapBuilder& b, int k, bool over) {
  int first = -1, last = -1;
  for (int j = 0; j < k; ++j) {
    int c = b.add_crossing(over);
    if (j == 0) first = c;
    if (last >= 0) {
      b.join(make_dart(last, kSW), make_dart(c, kNW));
      b.join(make_dart(last, kSE), make_dart(c, kNE));
    }
    last = c;
  }
  return {make_dart(first, kNW), make_dart(first, kNE),
          make_dart(last, kSW), make_dart(last, kSE)};
}

Tangle twist_right(MapBuilder& b, Tangle t, int k, bool over) {
  if (k == 0) return t;
  Tangle chain = horizontal_chain(b, k, over);
  b.join(t.ne, chain.nw);
  b.join(t.se, chain.sw);
  t.ne = chain.ne;
  t.se = chain.se;
  return t;
}

Tangle twist_bottom(MapBuilder& b, Tangle t, int k, bool over) {
  if (k == 0) return t;
  Tangle chain = vertical_chain(b, k, over);
  b.join(t.sw, chain.nw);
  b.join(t.se, chain.ne);
  t.sw = chain.sw;
  t.se = chain.se;
  return t;
}

// Builds the rational tangle of [a1; a2, ..., an] = a1 + 1/(a2 + 1/(...)).
// Coefficients are consumed innermost-first; regions alternate so that a1
// lands on a right-twist region, or on a bottom-twist region when
// vertical_first is set (giving the reciprocal tangle, as used by the
// montesinos columns). A uniform handedness keeps positive-coefficient
// diagrams alternating.
Tangle rational_tangle(MapBuilder& b, const std::vector<int>& coeffs, bool mirror,
                       bool vertical_first = false) {
  const int n = static_cast<int>(coeffs.size());
  if (n == 0) fail("rational tangle: empty coefficient list");
  for (int a : coeffs)
    if (a < 1) fail("rational tangle: coefficients must be positive");

  Tangle t;
  bool right_region = (n % 2 == 1) != vertical_first;
  for (int i = n - 1; i >= 0; --i) {
    int k = coeffs[static_cast<size_t>(i)];
    bool over = !mirror;
    if (t.nw == kNoDart) {
      Tangle chain = right_region ? horizontal_chain(b, k, over)
                                  : vertical_chain(b, k, over);
      t = chain;
    } else {
      t = right_region ? twist_right(b, t, k, over) : twist_bottom(b, t, k, over);
    }
    right_region = !right_region;
  }
  return t;
}

}  // namespace

LinkDiagram rational_knot_diagram(const std::vector<int>& coeffs) {
  MapBuilder b;
  Tangle t = rational_tangle(b, coeffs, false);
  // Numerator closure: join the top ends and the bottom ends.
  b.join(t.nw, t.ne);
  b.join(t.sw, t.se);
  return b.build();
}

LinkDiagram twist_knot_diagram(int k) {
  if (k < 1) fail("twist_knot_diagram: need k >= 1");
  return rational_knot_diagram({k, 2});
}

LinkDiagram montesinos_diagram(const std::vector<std::vector<int>>& slots,
                               const std::vector<int>& signs) {
  if (slots.empty()) fail("montesinos_diagram: no tangle slots");
  if (signs.size() != slots.size()) fail("montesinos_diagram: slot/sign mismatch");
  MapBuilder b;
  std::vector<Tangle> ts;
  ts.reserve(slots.size());
  for (size_t i = 0; i < slots.size(); ++i)
    ts.push_back(rational_tangle(b, slots[i], signs[i] < 0, /*vertical_first=*/true));
  for (size_t i = 0; i < ts.size(); ++i) {
    const Tangle& cur = ts[i];
    const Tangle& next = ts[(i + 1) % ts.size()];
    b.join(cur.ne, next.nw);
    b.join(cur.se, next.sw);
  }
  return b.build();
}

LinkDiagram hopf_diagram() { return braid_closure(2, {1, 1}); }

LinkDiagram trivial_link_diagram(int n) {
  if (n < 1) fail("trivial_link_diagram: need n >= 1");
  return LinkDiagram::assemble({}, {}, n);
}

LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<bool> over = a.over_flags();
  over.insert(over.end(), b.over_flags().begin(), b.over_flags().end());
  std::vector<Dart> pairing = a.pairing();
  const Dart base = static_cast<Dart>(a.dart_count());
  for (Dart d : b.pairing()) pairing.push_back(d + base);
  return LinkDiagram::assemble(std::move(over), std::move(pairing),
                               a.free_loop_count() + b.free_loop_count());
}

std::pair<LinkDiagram, Marking> connected_sum(const LinkDiagram& d1, const Marking& m1,
                                              const LinkDiagram& d2, const Marking& m2) {
  if (d1.component_count() != 1 || d2.component_count() != 1)
    fail("connected_sum: inputs must be one-component diagrams");
  if (d1.crossing_count() == 0 || d2.crossing_count() == 0) {
    // Summing with a crossingless unknot is the identity.
    const LinkDiagram& knot = d1.crossing_count() ? d1 : d2;
    const Marking& m = d1.crossing_count() ? m1 : m2;
    validate_marking(knot, m);
    return {knot, m};
  }
  validate_marking(d1, m1);
  validate_marking(d2, m2);

  std::vector<bool> over = d1.over_flags();
  over.insert(over.end(), d2.over_flags().begin(), d2.over_flags().end());
  std::vector<Dart> pairing = d1.pairing();
  const Dart base = static_cast<Dart>(d1.dart_count());
  for (Dart d : d2.pairing()) pairing.push_back(d + base);

  // Cut both basepoint edges and cross-join so the traversal runs all of d1
  // from m1's start dart, then all of d2 from m2's.
  Dart y1 = m1.basepoints[0], x1 = d1.pair(y1);
  Dart y2 = m2.basepoints[0] + base, x2 = d2.pair(m2.basepoints[0]) + base;
  pairing[static_cast<size_t>(x1)] = y2;
  pairing[static_cast<size_t>(y2)] = x1;
  pairing[static_cast<size_t>(x2)] = y1;
  pairing[static_cast<size_t>(y1)] = x2;

  LinkDiagram sum = LinkDiagram::assemble(std::move(over), std::move(pairing), 0);
  return {sum, Marking{{y1}, {0}}};
}

LinkDiagram random_diagram(std::mt19937_64& rng, int max_crossings, int max_components) {
  for (;;) {
    int strands = std::uniform_int_distribution<int>(2, 4)(rng);
    int length = std::uniform_int_distribution<int>(1, max_crossings)(rng);
    std::vector<int> word(static_cast<size_t>(length));
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::bernoulli_distribution flip(0.5);
    for (int& w : word) w = flip(rng) ? gen(rng) : -gen(rng);
    LinkDiagram d = braid_closure(strands, word);
    if (d.component_count() <= max_components) return d;
  }
}

}  // namespace ascnum
