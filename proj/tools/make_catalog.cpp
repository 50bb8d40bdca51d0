// Regenerates data/knots.jsonl: the prime knots with at most 8 crossings,
// their table data, and witness diagrams realizing the upper value of each
// known ascending-number range. Diagrams come from systematic constructions
// (continued fractions, montesinos joins, braid closures, the torus braid)
// and every one is checked against a frozen determinant before it is
// written, so a transcription slip cannot silently relabel a knot.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <vector>

#include "ascnum/bounds.hpp"
#include "ascnum/catalog.hpp"
#include "ascnum/generators.hpp"
#include "ascnum/moves.hpp"
#include "ascnum/search.hpp"
#include "json.hpp"
#include "support/determinant.hpp"

using namespace ascnum;
using test_support::knot_determinant;

namespace {

struct Row {
  std::string name;
  int u, b;
  bool twist;
  int a_lo, a_hi;
  std::int64_t det;
  bool alternating;
  LinkDiagram (*build)();
};

LinkDiagram cf(std::initializer_list<int> v) { return rational_knot_diagram(v); }

// Alternating-sign 3-braid closures s1^{a1} s2^{-b1} s1^{a2} ... of total
// length 8, matched by determinant. Among all knots with at most 8
// crossings the determinants 35, 37 and 45 each occur exactly once.
LinkDiagram braid_knot_by_det(std::int64_t target) {
  std::vector<std::vector<int>> stack{{}};
  for (int regions = 1; regions <= 4; ++regions) {
    std::vector<std::vector<int>> words;
    std::vector<int> parts(static_cast<size_t>(2 * regions), 1);
    // Enumerate compositions of 8 into 2*regions positive parts.
    int total = 2 * regions;
    std::vector<int> comp(static_cast<size_t>(total), 1);
    int remaining = 8 - total;
    std::function<void(int, int)> rec = [&](int idx, int left) {
      if (idx == total) {
        if (left != 0) return;
        std::vector<int> word;
        for (int i = 0; i < total; ++i)
          for (int j = 0; j < comp[static_cast<size_t>(i)]; ++j)
            word.push_back(i % 2 == 0 ? 1 : -2);
        LinkDiagram d = braid_closure(3, word);
        if (d.component_count() != 1 || d.crossing_count() != 8) return;
        if (!is_alternating(d)) return;
        if (knot_determinant(d) == target) words.push_back(word);
        return;
      }
      for (int add = 0; add <= left; ++add) {
        comp[static_cast<size_t>(idx)] = 1 + add;
        rec(idx + 1, left - add);
      }
    };
    rec(0, remaining);
    if (!words.empty()) return braid_closure(3, words.front());
  }
  throw std::runtime_error("no 3-braid closure with determinant " + std::to_string(target));
}

// Montesinos sign patterns searched by determinant, for the non-alternating
// pretzel-style knots.
LinkDiagram montesinos_by_det(const std::vector<std::vector<int>>& slots,
                              std::int64_t target) {
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> signs;
    for (size_t i = 0; i < slots.size(); ++i) signs.push_back((mask >> i) & 1 ? -1 : 1);
    LinkDiagram d = montesinos_diagram(slots, signs);
    if (d.component_count() != 1) continue;
    if (is_alternating(d)) continue;
    if (knot_determinant(d) == target) return d;
  }
  throw std::runtime_error("no montesinos sign pattern with determinant " +
                           std::to_string(target));
}

const std::vector<Row>& table() {
  static const std::vector<Row> rows = {
      {"3_1", 1, 2, true, 1, 1, 3, true, [] { return cf({3}); }},
      {"4_1", 1, 2, true, 1, 1, 5, true, [] { return cf({2, 2}); }},
      {"5_1", 2, 2, false, 2, 2, 5, true, [] { return cf({5}); }},
      {"5_2", 1, 2, true, 1, 1, 7, true, [] { return cf({3, 2}); }},
      {"6_1", 1, 2, true, 1, 1, 9, true, [] { return cf({4, 2}); }},
      {"6_2", 1, 2, false, 2, 2, 11, true, [] { return cf({3, 1, 2}); }},
      {"6_3", 1, 2, false, 2, 2, 13, true, [] { return cf({2, 1, 1, 2}); }},
      {"7_1", 3, 2, false, 3, 3, 7, true, [] { return cf({7}); }},
      {"7_2", 1, 2, true, 1, 1, 11, true, [] { return cf({5, 2}); }},
      {"7_3", 2, 2, false, 2, 2, 13, true, [] { return cf({4, 3}); }},
      {"7_4", 2, 2, false, 2, 2, 15, true, [] { return cf({3, 1, 3}); }},
      {"7_5", 2, 2, false, 2, 2, 17, true, [] { return cf({3, 2, 2}); }},
      {"7_6", 1, 2, false, 2, 2, 19, true, [] { return cf({2, 2, 1, 2}); }},
      {"7_7", 1, 2, false, 2, 2, 21, true, [] { return cf({2, 1, 1, 1, 2}); }},
      {"8_1", 1, 2, true, 1, 1, 13, true, [] { return cf({6, 2}); }},
      {"8_2", 2, 2, false, 2, 3, 17, true, [] { return cf({5, 1, 2}); }},
      {"8_3", 2, 2, false, 2, 2, 17, true, [] { return cf({4, 4}); }},
      {"8_4", 2, 2, false, 2, 2, 19, true, [] { return cf({4, 1, 3}); }},
      {"8_5", 2, 3, false, 2, 3, 21, true,
       [] { return montesinos_diagram({{3}, {3}, {2}}, {1, 1, 1}); }},
      {"8_6", 2, 2, false, 2, 2, 23, true, [] { return cf({3, 3, 2}); }},
      {"8_7", 1, 2, false, 2, 3, 23, true, [] { return cf({4, 1, 1, 2}); }},
      {"8_8", 2, 2, false, 2, 2, 25, true, [] { return cf({2, 3, 1, 2}); }},
      {"8_9", 1, 2, false, 2, 3, 25, true, [] { return cf({3, 1, 1, 3}); }},
      {"8_10", 2, 3, false, 2, 3, 27, true,
       [] { return montesinos_diagram({{3}, {1, 2}, {2}}, {1, 1, 1}); }},
      {"8_11", 1, 2, false, 2, 2, 27, true, [] { return cf({3, 2, 1, 2}); }},
      {"8_12", 2, 2, false, 2, 2, 29, true, [] { return cf({2, 2, 2, 2}); }},
      {"8_13", 1, 2, false, 2, 2, 29, true, [] { return cf({3, 1, 1, 1, 2}); }},
      {"8_14", 1, 2, false, 2, 2, 31, true, [] { return cf({2, 2, 1, 1, 2}); }},
      {"8_15", 2, 3, false, 2, 2, 33, true,
       [] { return montesinos_diagram({{1, 2}, {1, 2}, {2}}, {1, 1, 1}); }},
      {"8_16", 2, 3, false, 2, 3, 35, true, [] { return braid_knot_by_det(35); }},
      {"8_17", 1, 3, false, 2, 3, 37, true, [] { return braid_knot_by_det(37); }},
      {"8_18", 2, 2, false, 2, 2, 45, true, [] { return braid_knot_by_det(45); }},
      {"8_19", 3, 3, false, 3, 3, 3, false, [] { return torus_diagram(3, 4); }},
      {"8_20", 1, 3, false, 2, 2, 9, false,
       [] { return montesinos_by_det({{3}, {3}, {2}}, 9); }},
      {"8_21", 1, 3, false, 2, 2, 15, false,
       [] { return montesinos_by_det({{1, 2}, {1, 2}, {2}}, 15); }},
  };
  return rows;
}

// Re-derives a marking attaining `value` on the freshly re-parsed canonical
// serialization, so stored darts line up with the stored PD text.
std::pair<std::string, Marking> freeze_witness(const LinkDiagram& w, int value) {
  std::string pd = w.to_pd();
  LinkDiagram reparsed = LinkDiagram::parse_pd(pd);
  for (const Marking& m : enumerate_markings(reparsed))
    if (ascending_count(reparsed, m) == value) return {pd, m};
  throw std::runtime_error("witness serialization lost the attaining marking");
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "data/knots.jsonl";
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }

  int expected_crossings[9] = {};
  for (const Row& row : table()) {
    LinkDiagram d = row.build();
    int c = row.name[0] - '0';
    ++expected_crossings[c];

    if (d.crossing_count() != c || d.component_count() != 1) {
      std::cerr << row.name << ": bad construction shape\n";
      return 1;
    }
    if (is_alternating(d) != row.alternating) {
      std::cerr << row.name << ": alternation mismatch\n";
      return 1;
    }
    if (knot_determinant(d) != row.det) {
      std::cerr << row.name << ": determinant " << knot_determinant(d) << " != " << row.det
                << "\n";
      return 1;
    }

    MinAscendingResult direct = min_ascending(d);
    LinkDiagram witness_diagram = d;
    int witness_value = direct.value;
    std::int64_t nodes = 1;
    if (direct.value > row.a_hi) {
      SearchOptions opts;
      opts.target = row.a_hi;
      SearchReport r = search_upper_bound(d, {d.crossing_count() + 2, 2000000}, opts);
      if (r.best_value > row.a_hi) {
        std::cerr << row.name << ": search stalled at " << r.best_value << " (want "
                  << row.a_hi << ", nodes " << r.nodes << ")\n";
        return 1;
      }
      witness_diagram = r.witness_diagram;
      witness_value = r.best_value;
      nodes = r.nodes;
    }
    if (witness_value != row.a_hi) {
      // A value below a_hi would contradict the published range.
      std::cerr << row.name << ": witness value " << witness_value << " below a_hi "
                << row.a_hi << "\n";
      return 1;
    }
    auto [wpd, wmarking] = freeze_witness(witness_diagram, witness_value);

    CatalogEntry entry;
    entry.name = row.name;
    entry.pd = d.to_pd();
    entry.crossing_number = c;
    entry.unknotting = row.u;
    entry.bridge = row.b;
    entry.is_twist = row.twist;
    entry.a_lo = row.a_lo;
    entry.a_hi = row.a_hi;
    BoundSet bounds = certify(entry.certify_input(witness_value));
    if (bounds.lower != row.a_lo || bounds.upper != row.a_hi) {
      std::cerr << row.name << ": certification [" << bounds.lower << "," << bounds.upper
                << "] disagrees with table [" << row.a_lo << "," << row.a_hi << "]\n";
      return 1;
    }

    nlohmann::json j;
    j["name"] = entry.name;
    j["pd"] = entry.pd;
    j["c"] = entry.crossing_number;
    j["u"] = entry.unknotting;
    j["b"] = entry.bridge;
    j["twist"] = entry.is_twist;
    j["a_lo"] = entry.a_lo;
    j["a_hi"] = entry.a_hi;
    j["witness_pd"] = wpd;
    j["witness_marking"] = nlohmann::json::parse(marking_to_json(wmarking));
    out << j.dump() << "\n";

    std::printf("%-5s c=%d det=%-2lld min(minimal)=%d witness=%d (c=%d, nodes=%lld)\n",
                row.name.c_str(), c, static_cast<long long>(row.det), direct.value,
                witness_value, witness_diagram.crossing_count(),
                static_cast<long long>(nodes));
  }
  if (expected_crossings[3] != 1 || expected_crossings[4] != 1 || expected_crossings[5] != 2 ||
      expected_crossings[6] != 3 || expected_crossings[7] != 7 || expected_crossings[8] != 21) {
    std::cerr << "table row count mismatch\n";
    return 1;
  }
  std::printf("wrote %s\n", out_path.c_str());
  return 0;
}
