#include "ascnum/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ascnum {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// Face permutation: next dart along the face = clockwise rotation at the
// vertex of the edge partner. Orbits are the faces of the embedding.
Dart face_next(const std::vector<Dart>& pairing, Dart d) {
  return rot(pairing[static_cast<size_t>(d)], -1);
}

}  // namespace

Crossing LinkDiagram::crossing(int id) const {
  if (id < 0 || id >= crossing_count()) fail("crossing id out of range");
  Crossing c;
  c.id = id;
  for (int p = 0; p < 4; ++p) c.darts[static_cast<size_t>(p)] = make_dart(id, p);
  c.over_odd = over_odd_[static_cast<size_t>(id)];
  return c;
}

LinkDiagram LinkDiagram::assemble(std::vector<bool> over_odd,
                                  std::vector<Dart> pairing, int free_loops) {
  LinkDiagram d;
  d.over_odd_ = std::move(over_odd);
  d.pairing_ = std::move(pairing);
  d.free_loops_ = free_loops;

  const int nc = d.crossing_count();
  const int nd = 4 * nc;
  if (free_loops < 0) fail("negative free loop count");
  if (static_cast<int>(d.pairing_.size()) != nd) fail("pairing size mismatch");
  for (Dart a = 0; a < nd; ++a) {
    Dart b = d.pairing_[static_cast<size_t>(a)];
    if (b < 0 || b >= nd) fail("pairing out of range");
    if (b == a) fail("edge pairing has a fixed point");
    if (d.pairing_[static_cast<size_t>(b)] != a) fail("edge pairing is not an involution");
  }

  // Components: orbits of straight-through + edge hops.
  d.component_of_.assign(static_cast<size_t>(nd), -1);
  for (Dart start = 0; start < nd; ++start) {
    if (d.component_of_[static_cast<size_t>(start)] >= 0) continue;
    int comp = static_cast<int>(d.components_.size());
    std::vector<Dart> walk;
    Dart cur = start;  // entry dart
    do {
      walk.push_back(cur);
      d.component_of_[static_cast<size_t>(cur)] = comp;
      Dart out = straight(cur);
      walk.push_back(out);
      d.component_of_[static_cast<size_t>(out)] = comp;
      cur = d.pairing_[static_cast<size_t>(out)];
    } while (cur != start);
    d.components_.push_back(std::move(walk));
  }

  for (int i = 0; i < free_loops; ++i) d.components_.emplace_back();

  // Connected parts of the 4-valent graph.
  d.part_of_.assign(static_cast<size_t>(nc), -1);
  d.part_count_ = 0;
  for (int c = 0; c < nc; ++c) {
    if (d.part_of_[static_cast<size_t>(c)] >= 0) continue;
    int part = d.part_count_++;
    std::vector<int> stack{c};
    d.part_of_[static_cast<size_t>(c)] = part;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        int y = crossing_of(d.pairing_[static_cast<size_t>(make_dart(x, p))]);
        if (d.part_of_[static_cast<size_t>(y)] < 0) {
          d.part_of_[static_cast<size_t>(y)] = part;
          stack.push_back(y);
        }
      }
    }
  }

  // Planarity: V - E + F = 2 on each connected part.
  if (nc > 0) {
    std::vector<int> faces_per_part(static_cast<size_t>(d.part_count_), 0);
    std::vector<char> seen(static_cast<size_t>(nd), 0);
    for (Dart s = 0; s < nd; ++s) {
      if (seen[static_cast<size_t>(s)]) continue;
      ++faces_per_part[static_cast<size_t>(d.part_of_[static_cast<size_t>(s >> 2)])];
      Dart cur = s;
      do {
        seen[static_cast<size_t>(cur)] = 1;
        cur = face_next(d.pairing_, cur);
      } while (cur != s);
    }
    std::vector<int> v_per_part(static_cast<size_t>(d.part_count_), 0);
    for (int c = 0; c < nc; ++c) ++v_per_part[static_cast<size_t>(d.part_of_[static_cast<size_t>(c)])];
    for (int p = 0; p < d.part_count_; ++p) {
      int v = v_per_part[static_cast<size_t>(p)];
      int e = 2 * v;
      int f = faces_per_part[static_cast<size_t>(p)];
      if (v - e + f != 2) fail("planarity violation: V-E+F = " +
                               std::to_string(v - e + f) + " on a connected part");
    }
  }
  return d;
}

LinkDiagram LinkDiagram::switch_crossing(int id) const {
  if (id < 0 || id >= crossing_count()) fail("switch_crossing: unknown crossing id");
  LinkDiagram d = *this;
  d.over_odd_[static_cast<size_t>(id)] = !d.over_odd_[static_cast<size_t>(id)];
  return d;
}

// ---------------------------------------------------------------------------
// PD-code parsing

namespace {

struct Token {
  enum Kind { X, O, Sep } kind;
  std::array<int, 4> labels{};
  size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  auto syntax = [&](size_t at, const std::string& what) {
    fail("PD syntax error at position " + std::to_string(at) + ": " + what);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    size_t start = i;
    char c = text[i];
    if (c == 'O') {
      out.push_back({Token::O, {}, start});
      ++i;
    } else if (c == '|') {
      out.push_back({Token::Sep, {}, start});
      ++i;
    } else if (c == 'X') {
      ++i;
      if (i >= text.size() || text[i] != '(') syntax(i, "expected '(' after X");
      ++i;
      Token t{Token::X, {}, start};
      for (int k = 0; k < 4; ++k) {
        size_t num_start = i;
        long val = 0;
        bool any = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          val = val * 10 + (text[i] - '0');
          if (val > 1000000) syntax(num_start, "edge label too large");
          any = true;
          ++i;
        }
        if (!any) syntax(i, "expected edge label");
        if (val < 1) syntax(num_start, "edge labels must be positive");
        t.labels[static_cast<size_t>(k)] = static_cast<int>(val);
        if (k < 3) {
          if (i >= text.size() || text[i] != ',') syntax(i, "expected ','");
          ++i;
        }
      }
      if (i >= text.size() || text[i] != ')') syntax(i, "expected ')'");
      ++i;
      out.push_back(t);
    } else {
      syntax(i, std::string("unexpected character '") + c + "'");
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      syntax(i, "tokens must be whitespace-separated");
  }
  return out;
}

struct RawPart {
  std::vector<std::array<int, 4>> tuples;
  size_t pos = 0;  // position of first token, for error messages
};

// Validates edge labels and strand orientations of one '|'-separated part and
// returns (over_odd flags, local pairing) for its crossings.
void validate_part(const RawPart& part, std::vector<bool>& over_odd,
                   std::vector<Dart>& pairing) {
  const int nc = static_cast<int>(part.tuples.size());
  const int nlab = 2 * nc;

  std::vector<std::vector<Dart>> slots(static_cast<size_t>(nlab + 1));
  for (int c = 0; c < nc; ++c)
    for (int p = 0; p < 4; ++p) {
      int lab = part.tuples[static_cast<size_t>(c)][static_cast<size_t>(p)];
      if (lab < 1 || lab > nlab)
        fail("edge label " + std::to_string(lab) + " out of range 1.." +
             std::to_string(nlab) + " in part with " + std::to_string(nc) + " crossings");
      slots[static_cast<size_t>(lab)].push_back(make_dart(c, p));
    }
  for (int lab = 1; lab <= nlab; ++lab) {
    if (slots[static_cast<size_t>(lab)].size() != 2)
      fail("non-involutive edge labels: label " + std::to_string(lab) + " appears " +
           std::to_string(slots[static_cast<size_t>(lab)].size()) + " times (expected 2)");
  }

  const int nd = 4 * nc;
  pairing.assign(static_cast<size_t>(nd), kNoDart);
  for (int lab = 1; lab <= nlab; ++lab) {
    Dart a = slots[static_cast<size_t>(lab)][0], b = slots[static_cast<size_t>(lab)][1];
    if (a == b) fail("edge label " + std::to_string(lab) + " pairs a dart with itself");
    pairing[static_cast<size_t>(a)] = b;
    pairing[static_cast<size_t>(b)] = a;
  }
  over_odd.assign(static_cast<size_t>(nc), true);

  auto label_at = [&](Dart d) {
    return part.tuples[static_cast<size_t>(crossing_of(d))][static_cast<size_t>(pos_of(d))];
  };

  // Orientation check per component: each component's edge labels must form a
  // consecutive block traversed in successor order (x -> x+1, max -> min), the
  // under-strand entering at position 0. Components lying entirely on
  // over-strands admit either direction.
  std::vector<char> visited(static_cast<size_t>(nd), 0);
  for (Dart start = 0; start < nd; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    std::vector<Dart> entries;  // entry darts in one walk direction
    Dart cur = start;
    do {
      entries.push_back(cur);
      visited[static_cast<size_t>(cur)] = 1;
      Dart out = straight(cur);
      visited[static_cast<size_t>(out)] = 1;
      cur = pairing[static_cast<size_t>(out)];
    } while (cur != start);

    int lo = nlab + 1, hi = 0;
    for (Dart e : entries) {
      int lab = label_at(e);
      lo = std::min(lo, lab);
      hi = std::max(hi, lab);
    }
    if (hi - lo + 1 != static_cast<int>(entries.size()))
      fail("component edge labels are not consecutive (" + std::to_string(lo) +
           ".." + std::to_string(hi) + " over " + std::to_string(entries.size()) +
           " edges)");
    auto succ = [&](int x) { return x == hi ? lo : x + 1; };

    auto direction_ok = [&](bool forward) {
      // In the chosen direction, each passage must exit on the successor edge
      // and under-strand passages must enter at position 0.
      const size_t k = entries.size();
      for (size_t i = 0; i < k; ++i) {
        Dart entry = forward ? entries[i] : straight(entries[(i + 1) % k]);
        Dart exit = straight(entry);
        if (succ(label_at(entry)) != label_at(exit)) return false;
        if (pos_of(entry) == 2 || pos_of(exit) == 0) return false;  // under runs 0 -> 2
      }
      return true;
    };
    if (!direction_ok(true) && !direction_ok(false))
      fail("strand orientation inconsistent with edge label successor rule near label " +
           std::to_string(label_at(entries.front())));
  }
}

}  // namespace

LinkDiagram LinkDiagram::parse_pd(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) fail("empty PD code: expected X(...) and O tokens");

  std::vector<RawPart> parts(1);
  int free_loops = 0;
  for (const Token& t : tokens) {
    switch (t.kind) {
      case Token::X:
        if (parts.back().tuples.empty()) parts.back().pos = t.pos;
        parts.back().tuples.push_back(t.labels);
        break;
      case Token::O:
        ++free_loops;
        break;
      case Token::Sep:
        if (!parts.back().tuples.empty()) parts.emplace_back();
        break;
    }
  }
  if (parts.back().tuples.empty()) parts.pop_back();
  if (parts.empty() && free_loops == 0) fail("empty PD code: no components");

  std::vector<bool> over_odd;
  std::vector<Dart> pairing;
  for (const RawPart& part : parts) {
    std::vector<bool> part_over;
    std::vector<Dart> part_pairing;
    validate_part(part, part_over, part_pairing);
    const Dart base = static_cast<Dart>(4 * over_odd.size());
    over_odd.insert(over_odd.end(), part_over.begin(), part_over.end());
    for (Dart p : part_pairing) pairing.push_back(p + base);
  }
  return assemble(std::move(over_odd), std::move(pairing), free_loops);
}

// ---------------------------------------------------------------------------
// Serialization: canonical PD text. Within each connected part, edges are
// labeled 1..2c in traversal order and the crossing lines sorted; the text is
// minimized over the component order and all start darts, so isomorphic dart
// numberings serialize identically. Parts are sorted, free loops appended.

namespace {

std::string render_part(const LinkDiagram& d, const std::vector<int>& part_crossings,
                        const std::vector<Dart>& starts) {
  std::vector<int> edge_label(static_cast<size_t>(d.dart_count()), 0);
  std::vector<char> is_entry(static_cast<size_t>(d.dart_count()), 0);
  int next_label = 1;
  for (Dart start : starts) {
    Dart cur = start;
    do {
      is_entry[static_cast<size_t>(cur)] = 1;
      int lab = next_label++;
      edge_label[static_cast<size_t>(cur)] = lab;
      edge_label[static_cast<size_t>(d.pair(cur))] = lab;
      cur = d.pair(straight(cur));
    } while (cur != start);
  }
  std::vector<std::array<int, 4>> lines;
  lines.reserve(part_crossings.size());
  for (int c : part_crossings) {
    int under_parity = d.over_odd_at(c) ? 0 : 1;
    Dart under_in = kNoDart;
    for (int p = under_parity; p < 4; p += 2)
      if (is_entry[static_cast<size_t>(make_dart(c, p))]) under_in = make_dart(c, p);
    std::array<int, 4> line{};
    for (int k = 0; k < 4; ++k)
      line[static_cast<size_t>(k)] = edge_label[static_cast<size_t>(rot(under_in, k))];
    lines.push_back(line);
  }
  std::sort(lines.begin(), lines.end());
  std::string s;
  for (const auto& line : lines) {
    if (!s.empty()) s += ' ';
    s += "X(" + std::to_string(line[0]) + ',' + std::to_string(line[1]) + ',' +
         std::to_string(line[2]) + ',' + std::to_string(line[3]) + ')';
  }
  return s;
}

}  // namespace

std::string LinkDiagram::to_pd() const {
  std::vector<std::string> part_strings;
  for (int part = 0; part < part_count_; ++part) {
    std::vector<int> part_crossings;
    for (int c = 0; c < crossing_count(); ++c)
      if (part_of_[static_cast<size_t>(c)] == part) part_crossings.push_back(c);
    std::vector<const std::vector<Dart>*> comps;
    for (const auto& comp : components_)
      if (!comp.empty() && part_of_[static_cast<size_t>(comp.front() >> 2)] == part)
        comps.push_back(&comp);

    // Minimize over the component visiting order and one start dart per
    // component (a start dart fixes the traversal direction).
    std::vector<size_t> perm(comps.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      std::vector<size_t> idx(comps.size(), 0);
      for (;;) {
        std::vector<Dart> starts(comps.size());
        for (size_t i = 0; i < comps.size(); ++i)
          starts[i] = (*comps[perm[i]])[idx[i]];
        std::string s = render_part(*this, part_crossings, starts);
        if (best.empty() || s < best) best = std::move(s);
        size_t i = comps.size();
        while (i > 0) {
          --i;
          if (++idx[i] < comps[perm[i]]->size()) break;
          idx[i] = 0;
          if (i == 0) { idx.clear(); break; }
        }
        if (idx.empty()) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    part_strings.push_back(std::move(best));
  }

  std::sort(part_strings.begin(), part_strings.end(),
            [](const std::string& a, const std::string& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  std::string out;
  for (const auto& s : part_strings) {
    if (!out.empty()) out += " | ";
    out += s;
  }
  for (int i = 0; i < free_loops_; ++i) {
    if (!out.empty()) out += ' ';
    out += 'O';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Traversal and markings

void validate_marking(const LinkDiagram& d, const Marking& m) {
  const int n = d.component_count();
  if (static_cast<int>(m.basepoints.size()) != n) fail("marking: basepoint count mismatch");
  if (static_cast<int>(m.order.size()) != n) fail("marking: order size mismatch");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int c : m.order) {
    if (c < 0 || c >= n || seen[static_cast<size_t>(c)]) fail("marking: order is not a permutation");
    seen[static_cast<size_t>(c)] = 1;
  }
  const int n_map = d.map_component_count();
  for (int c = 0; c < n; ++c) {
    Dart b = m.basepoints[static_cast<size_t>(c)];
    if (c >= n_map) {
      if (b != kNoDart) fail("marking: crossingless component cannot carry a basepoint dart");
      continue;
    }
    if (b < 0 || b >= d.dart_count() || d.component_of(b) != c)
      fail("marking: basepoint dart not on the claimed component");
  }
}

std::vector<Visit> traverse(const LinkDiagram& d, const Marking& m) {
  validate_marking(d, m);
  std::vector<Visit> out;
  out.reserve(static_cast<size_t>(2 * d.crossing_count()));
  std::vector<char> seen(static_cast<size_t>(d.crossing_count()), 0);
  const int n_map = d.map_component_count();
  for (int comp : m.order) {
    if (comp >= n_map) continue;
    Dart start = m.basepoints[static_cast<size_t>(comp)];
    Dart cur = start;
    do {
      int c = crossing_of(cur);
      out.push_back({c, d.is_over(cur), !seen[static_cast<size_t>(c)]});
      seen[static_cast<size_t>(c)] = 1;
      cur = d.pair(straight(cur));
    } while (cur != start);
  }
  return out;
}

DescendingResult make_descending(const LinkDiagram& d, const Marking& m) {
  DescendingResult res;
  res.changed.clear();
  for (const Visit& v : traverse(d, m))
    if (v.first && !v.over) res.changed.push_back(v.crossing);
  std::sort(res.changed.begin(), res.changed.end());
  res.ascending_count = static_cast<int>(res.changed.size());
  std::vector<bool> flags = d.over_flags();
  for (int c : res.changed) flags[static_cast<size_t>(c)] = !flags[static_cast<size_t>(c)];
  res.descending = LinkDiagram::assemble(std::move(flags), d.pairing(), d.free_loop_count());
  return res;
}

int ascending_count(const LinkDiagram& d, const Marking& m) {
  int count = 0;
  for (const Visit& v : traverse(d, m))
    if (v.first && !v.over) ++count;
  return count;
}

std::uint64_t marking_count(const LinkDiagram& d) {
  std::uint64_t total = 1;
  for (int i = 2; i <= d.component_count(); ++i) total *= static_cast<std::uint64_t>(i);
  for (const auto& comp : d.components())
    if (!comp.empty()) total *= comp.size();
  return total;
}

namespace {

template <typename Fn>
void for_each_marking(const LinkDiagram& d, Fn&& fn) {
  const int n = d.component_count();
  const int n_map = d.map_component_count();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Marking m;
  m.basepoints.assign(static_cast<size_t>(n), kNoDart);
  do {
    m.order = order;
    // Odometer over the map components' dart choices, component 0 slowest.
    std::vector<size_t> idx(static_cast<size_t>(n_map), 0);
    for (;;) {
      for (int c = 0; c < n_map; ++c)
        m.basepoints[static_cast<size_t>(c)] = d.components()[static_cast<size_t>(c)][idx[static_cast<size_t>(c)]];
      fn(m);
      int c = n_map - 1;
      while (c >= 0) {
        if (++idx[static_cast<size_t>(c)] < d.components()[static_cast<size_t>(c)].size()) break;
        idx[static_cast<size_t>(c)] = 0;
        --c;
      }
      if (c < 0) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace

std::vector<Marking> enumerate_markings(const LinkDiagram& d) {
  std::vector<Marking> out;
  out.reserve(marking_count(d));
  for_each_marking(d, [&](const Marking& m) { out.push_back(m); });
  return out;
}

MinAscendingResult min_ascending(const LinkDiagram& d) {
  MinAscendingResult best;
  best.value = d.crossing_count() + 1;
  for_each_marking(d, [&](const Marking& m) {
    if (best.value == 0) return;
    int v = ascending_count(d, m);
    if (v < best.value) {
      best.value = v;
      best.witness = m;
    }
  });
  if (best.value > d.crossing_count()) {  // no crossings at all
    best.value = 0;
    best.witness.basepoints.assign(static_cast<size_t>(d.component_count()), kNoDart);
    best.witness.order.resize(static_cast<size_t>(d.component_count()));
    std::iota(best.witness.order.begin(), best.witness.order.end(), 0);
  }
  return best;
}

bool is_alternating(const LinkDiagram& d) {
  for (const auto& comp : d.components()) {
    for (size_t i = 0; i + 1 < comp.size(); i += 2) {
      Dart entry = comp[i];
      Dart next_entry = comp[(i + 2) % comp.size()];
      if (d.is_over(entry) == d.is_over(next_entry)) return false;
    }
  }
  return true;
}

Marking reverse_marking(const LinkDiagram& d, const Marking& m) {
  validate_marking(d, m);
  Marking r;
  r.basepoints.reserve(m.basepoints.size());
  for (Dart b : m.basepoints)
    r.basepoints.push_back(b == kNoDart ? kNoDart : d.pair(b));
  r.order.assign(m.order.rbegin(), m.order.rend());
  return r;
}

}  // namespace ascnum
