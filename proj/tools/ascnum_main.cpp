#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ascnum/bounds.hpp"
#include "ascnum/catalog.hpp"
#include "ascnum/generators.hpp"
#include "ascnum/moves.hpp"
#include "ascnum/search.hpp"
#include "json.hpp"

using namespace ascnum;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContradiction = 1;
constexpr int kExitInputError = 2;

struct GlobalFlags {
  bool json_output = false;
  unsigned long long seed = 20081031;
  int threads = 1;
  std::string catalog_path = "data/knots.jsonl";
};

template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

std::string read_input(const std::string& pd_arg, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return pd_arg;
}

json marking_json(const Marking& m) { return json::parse(marking_to_json(m)); }

void emit_witness_file(const std::string& path, const LinkDiagram& d, const Marking& m,
                       int value) {
  std::string pd = d.to_pd();
  LinkDiagram reparsed = LinkDiagram::parse_pd(pd);
  for (const Marking& rm : enumerate_markings(reparsed)) {
    if (ascending_count(reparsed, rm) != value) continue;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    json j;
    j["pd"] = pd;
    j["marking"] = marking_json(rm);
    j["value"] = value;
    out << j.dump(2) << "\n";
    return;
  }
  throw std::runtime_error("witness serialization lost the attaining marking");
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries,
                               const std::string& name) {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw std::invalid_argument("no catalog entry named " + name);
}

int witness_value_of(const CatalogEntry& e) {
  LinkDiagram w = LinkDiagram::parse_pd(e.witness_pd);
  return ascending_count(w, e.witness_marking);
}

// ---------------------------------------------------------------------------

int cmd_ascend(const GlobalFlags& g, const std::string& pd_text) {
  LinkDiagram d = LinkDiagram::parse_pd(pd_text);
  MinAscendingResult best = min_ascending(d);
  bool is_knot = d.component_count() == 1;
  int bound = crossing_upper_bound(d.crossing_count(), is_knot);
  int rev = d.crossing_count() == 0
                ? 0
                : ascending_count(d, reverse_marking(d, best.witness));
  bool reversal_ok = best.value + rev == d.crossing_count();

  if (g.json_output) {
    json j;
    j["c"] = d.crossing_count();
    j["n"] = d.component_count();
    j["a_min"] = best.value;
    j["witness_marking"] = marking_json(best.witness);
    j["crossing_bound"] = bound;
    j["reversal_ok"] = reversal_ok;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "c = " << d.crossing_count() << ", components = " << d.component_count()
              << "\n";
    std::cout << "a_min(diagram) = " << best.value << "\n";
    std::cout << "witness marking: " << marking_to_json(best.witness) << "\n";
    std::cout << "crossing bound: a <= " << bound << "\n";
    std::cout << "reversal identity: " << best.value << " + " << rev << " = "
              << d.crossing_count() << (reversal_ok ? " (ok)" : " (FAILED)") << "\n";
  }
  return reversal_ok ? kExitOk : kExitContradiction;
}

int cmd_search(const GlobalFlags& g, const std::string& pd_text, int crossing_cap,
               long long node_cap, const std::string& moves_csv,
               const std::string& emit_path, std::optional<int> target) {
  LinkDiagram d = LinkDiagram::parse_pd(pd_text);
  SearchBudget budget;
  budget.crossing_cap = crossing_cap > 0 ? crossing_cap : d.crossing_count() + 2;
  budget.node_cap = node_cap;
  SearchOptions opts;
  opts.target = target;
  if (!moves_csv.empty()) {
    opts.r1 = moves_csv.find("r1") != std::string::npos;
    opts.r2 = moves_csv.find("r2") != std::string::npos;
    opts.r3 = moves_csv.find("r3") != std::string::npos;
    if (!opts.r1 && !opts.r2 && !opts.r3)
      throw std::invalid_argument("--moves selects none of r1,r2,r3");
  }
  SearchReport r = search_upper_bound(d, budget, opts);
  if (!emit_path.empty())
    emit_witness_file(emit_path, r.witness_diagram, r.witness_marking, r.best_value);

  if (g.json_output) {
    json j;
    j["best_value"] = r.best_value;
    j["nodes"] = r.nodes;
    j["frontier_exhausted"] = r.frontier_exhausted;
    j["crossing_cap"] = r.budget.crossing_cap;
    j["node_cap"] = r.budget.node_cap;
    j["witness_pd"] = r.witness_diagram.to_pd();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "best ascending value: " << r.best_value << "\n";
    std::cout << "nodes explored: " << r.nodes
              << (r.frontier_exhausted ? " (frontier exhausted)" : " (budget stop)") << "\n";
    std::cout << "witness diagram: " << r.witness_diagram.to_pd() << "\n";
  }
  return kExitOk;
}

int cmd_bounds(const GlobalFlags& g, const std::string& name) {
  auto entries = load_catalog(g.catalog_path);
  const CatalogEntry& e = find_entry(entries, name);
  std::optional<int> wv;
  if (e.has_witness()) wv = witness_value_of(e);
  BoundSet b = certify(e.certify_input(wv));
  if (g.json_output) {
    json j;
    j["name"] = e.name;
    j["lower"] = b.lower;
    j["lower_rule"] = to_string(b.lower_rule);
    j["upper"] = b.upper;
    j["upper_rule"] = to_string(b.upper_rule);
    j["exact"] = b.exact;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << e.name << ": a in [" << b.lower << ", " << b.upper << "]"
              << (b.exact ? " (exact)" : "") << "  lower from " << to_string(b.lower_rule)
              << ", upper from " << to_string(b.upper_rule) << "\n";
  }
  return kExitOk;
}

int cmd_table(const GlobalFlags& g) {
  auto entries = load_catalog(g.catalog_path);
  bool all_ok = true;
  json rows = json::array();
  if (!g.json_output)
    std::cout << "knot   certified   expected    u  b  status\n";
  for (const auto& e : entries) {
    std::string status = "ok";
    int lower = 0, upper = 0;
    try {
      std::optional<int> wv;
      if (e.has_witness()) wv = witness_value_of(e);
      BoundSet b = certify(e.certify_input(wv));
      lower = b.lower;
      upper = b.upper;
      if (lower != e.a_lo || upper != e.a_hi) {
        status = "MISMATCH";
        all_ok = false;
      }
    } catch (const IntegrityError& err) {
      status = std::string("INTEGRITY: ") + err.what();
      all_ok = false;
    }
    auto range_str = [](int lo, int hi) {
      return lo == hi ? std::to_string(lo) : std::to_string(lo) + " or " + std::to_string(hi);
    };
    if (g.json_output) {
      json j;
      j["name"] = e.name;
      j["lower"] = lower;
      j["upper"] = upper;
      j["expected_lo"] = e.a_lo;
      j["expected_hi"] = e.a_hi;
      j["u"] = e.unknotting;
      j["b"] = e.bridge;
      j["ok"] = status == "ok";
      rows.push_back(j);
    } else {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%-6s %-11s %-11s %d  %d  %s", e.name.c_str(),
                    range_str(lower, upper).c_str(), range_str(e.a_lo, e.a_hi).c_str(),
                    e.unknotting, e.bridge, status.c_str());
      std::cout << buf << "\n";
    }
  }
  if (g.json_output) std::cout << rows.dump() << "\n";
  return all_ok ? kExitOk : kExitContradiction;
}

int cmd_validate(const GlobalFlags& g) {
  auto entries = load_catalog(g.catalog_path);
  WitnessReport report = validate_witnesses(entries);
  if (g.json_output) {
    json j;
    j["entries"] = entries.size();
    j["mismatches"] = report.mismatches;
    j["missing"] = report.missing;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& c : report.checks) {
      if (!c.present)
        std::cout << c.name << ": witness missing (flagged for search backfill)\n";
      else if (!c.ok)
        std::cout << c.name << ": witness recomputes to " << c.recomputed << ", expected "
                  << c.expected << "\n";
    }
    std::cout << entries.size() << " entries, " << report.mismatches << " mismatches, "
              << report.missing << " missing\n";
  }
  return report.mismatches == 0 ? kExitOk : kExitContradiction;
}

int cmd_experiment_connected_sum(const GlobalFlags& g, const std::string& knot, int copies) {
  auto entries = load_catalog(g.catalog_path);
  const CatalogEntry& e = find_entry(entries, knot);
  LinkDiagram base = LinkDiagram::parse_pd(e.pd);
  MinAscendingResult base_best = min_ascending(base);

  LinkDiagram sum = base;
  Marking marking = base_best.witness;
  for (int i = 1; i < copies; ++i)
    std::tie(sum, marking) = connected_sum(sum, marking, base, base_best.witness);

  int count = ascending_count(sum, marking);
  bool additive = count == copies * base_best.value;
  int bridge_sum = copies * e.bridge - (copies - 1);
  int lower = bridge_lower_bound(bridge_sum, 1);
  int u_upper = copies * e.unknotting;

  if (g.json_output) {
    json j;
    j["knot"] = knot;
    j["copies"] = copies;
    j["spliced_count"] = count;
    j["summand_count"] = base_best.value;
    j["bridge"] = bridge_sum;
    j["lower_bound"] = lower;
    j["u_upper_bound"] = u_upper;
    j["gap_at_least"] = lower - u_upper;
    j["subadditivity_ok"] = additive;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << copies << "-fold sum of " << knot << ": spliced ascending count = " << count
              << " (" << copies << " x " << base_best.value << ")\n";
    std::cout << "bridge number " << bridge_sum << " gives a >= " << lower
              << "; unknotting number <= " << u_upper << "; gap >= " << lower - u_upper
              << "\n";
  }
  return additive ? kExitOk : kExitContradiction;
}

int cmd_experiment_torus(const GlobalFlags& g, const std::vector<std::string>& pq_list) {
  bool all_ok = true;
  json rows = json::array();
  for (const std::string& pq : pq_list) {
    auto comma = pq.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--pq expects p,q");
    int p = std::stoi(pq.substr(0, comma));
    int q = std::stoi(pq.substr(comma + 1));
    LinkDiagram d = torus_diagram(p, q);
    auto [ma, mb] = torus_proof_markings(d, p, q);
    int ca = ascending_count(d, ma), cb = ascending_count(d, mb);
    int formula = torus_ascending(p, q);
    bool ok = ca + cb == (p - 1) * (q - 1) && std::min(ca, cb) >= formula;
    // The construction's markings certify the exact value with the cited
    // unknotting number as the lower bound.
    CertifyInput in;
    in.name = "torus(" + std::to_string(p) + "," + std::to_string(q) + ")";
    in.crossing_number = d.crossing_count();
    in.unknotting = formula;
    in.bridge = std::min(p, q);
    in.is_twist = formula == 1;
    in.witness_value = std::min(ca, cb);
    in.witness_source = UpperRule::TorusFormula;
    BoundSet b = certify(in);
    ok = ok && b.exact && b.lower == formula;
    all_ok = all_ok && ok;
    if (g.json_output) {
      json j;
      j["p"] = p;
      j["q"] = q;
      j["count_a"] = ca;
      j["count_b"] = cb;
      j["sum"] = ca + cb;
      j["formula"] = formula;
      j["exact"] = b.exact;
      j["ok"] = ok;
      rows.push_back(j);
    } else {
      std::cout << "torus(" << p << "," << q << "): counts " << ca << " + " << cb << " = "
                << ca + cb << ", formula value " << formula
                << (ok ? " (certified exact)" : " (FAILED)") << "\n";
    }
  }
  if (g.json_output) std::cout << rows.dump() << "\n";
  return all_ok ? kExitOk : kExitContradiction;
}

int cmd_experiment_reversal(const GlobalFlags& g, int count, int max_crossings,
                            int max_components) {
  std::mt19937_64 rng(g.seed);
  std::vector<LinkDiagram> diagrams;
  diagrams.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    diagrams.push_back(random_diagram(rng, max_crossings, max_components));

  std::vector<char> ok(static_cast<size_t>(count), 0);
  parallel_for(count, g.threads, [&](int i) {
    const LinkDiagram& d = diagrams[static_cast<size_t>(i)];
    bool good = true;
    for (const Marking& m : enumerate_markings(d)) {
      int a = ascending_count(d, m);
      int b = ascending_count(d, reverse_marking(d, m));
      if (a + b != d.crossing_count()) {
        good = false;
        break;
      }
    }
    ok[static_cast<size_t>(i)] = good;
  });
  int passed = 0;
  for (char c : ok) passed += c;
  if (g.json_output) {
    json j;
    j["diagrams"] = count;
    j["passed"] = passed;
    j["seed"] = g.seed;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "reversal identity: " << passed << "/" << count
              << " random diagrams verified over all markings\n";
  }
  return passed == count ? kExitOk : kExitContradiction;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ascending number toolkit for knot and link diagrams"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_flag("--json", g.json_output, "machine-readable output");
  app.add_option("--seed", g.seed, "random seed for experiments");
  app.add_option("--threads", g.threads, "worker cap for experiment loops");
  app.add_option("--catalog", g.catalog_path, "catalog file (JSONL)");

  std::string pd_arg, file_arg;
  auto* ascend = app.add_subcommand("ascend", "minimum ascending count over all markings");
  ascend->add_option("pd", pd_arg, "PD code");
  ascend->add_option("--file", file_arg, "read the PD code from a file");

  int crossing_cap = 0;
  long long node_cap = 1000000;
  std::string moves_csv, emit_path;
  int target_int = -1;
  auto* search = app.add_subcommand("search", "search diagram space for a better witness");
  search->add_option("pd", pd_arg, "PD code");
  search->add_option("--file", file_arg, "read the PD code from a file");
  search->add_option("--crossing-cap", crossing_cap, "largest diagram explored (default c+2)");
  search->add_option("--node-cap", node_cap, "node budget");
  search->add_option("--moves", moves_csv, "subset of r1,r2,r3");
  search->add_option("--emit-witness", emit_path, "write the witness as JSON");
  search->add_option("--target", target_int, "stop when this value is reached");

  std::string bounds_name;
  auto* bounds = app.add_subcommand("bounds", "certified bounds for a catalog knot");
  bounds->add_option("name", bounds_name, "knot name, e.g. 8_17")->required();

  auto* table = app.add_subcommand("table", "reproduce the full catalog table");
  auto* validate = app.add_subcommand("validate", "recompute all stored witnesses");

  auto* experiment = app.add_subcommand("experiment", "constructions and identities");
  experiment->require_subcommand(1);
  std::string sum_knot = "8_17";
  int sum_copies = 2;
  auto* exp_sum = experiment->add_subcommand("connected-sum", "gap between a and u");
  exp_sum->add_option("--knot", sum_knot, "catalog knot to sum");
  exp_sum->add_option("--copies", sum_copies, "number of summands")->check(CLI::Range(1, 6));
  std::vector<std::string> pq_list{"4,7"};
  auto* exp_torus = experiment->add_subcommand("torus", "paired sweep markings of torus knots");
  exp_torus->add_option("--pq", pq_list, "torus parameters p,q (repeatable)");
  int rev_count = 100, rev_max_c = 10, rev_max_n = 3;
  auto* exp_rev = experiment->add_subcommand("reversal", "marking reversal identity");
  exp_rev->add_option("--count", rev_count, "number of random diagrams");
  exp_rev->add_option("--max-crossings", rev_max_c, "crossing limit");
  exp_rev->add_option("--max-components", rev_max_n, "component limit");

  for (CLI::App* sub : {ascend, search, bounds, table, validate, experiment, exp_sum, exp_torus, exp_rev})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*ascend) return cmd_ascend(g, read_input(pd_arg, file_arg));
    if (*search)
      return cmd_search(g, read_input(pd_arg, file_arg), crossing_cap, node_cap, moves_csv,
                        emit_path, target_int >= 0 ? std::optional<int>(target_int)
                                                   : std::nullopt);
    if (*bounds) return cmd_bounds(g, bounds_name);
    if (*table) return cmd_table(g);
    if (*validate) return cmd_validate(g);
    if (*experiment) {
      if (*exp_sum) return cmd_experiment_connected_sum(g, sum_knot, sum_copies);
      if (*exp_torus) return cmd_experiment_torus(g, pq_list);
      if (*exp_rev) return cmd_experiment_reversal(g, rev_count, rev_max_c, rev_max_n);
    }
  } catch (const IntegrityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
