#include "ascnum/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ascnum {

using nlohmann::json;

CertifyInput CatalogEntry::certify_input(std::optional<int> witness_value) const {
  CertifyInput in;
  in.name = name;
  in.crossing_number = crossing_number;
  in.n_components = 1;
  in.unknotting = unknotting;
  in.bridge = bridge;
  in.is_twist = is_twist;
  in.nontrivial = true;
  in.witness_value = witness_value;
  in.witness_source = UpperRule::StoredWitness;
  return in;
}

std::string marking_to_json(const Marking& m) {
  json j;
  j["order"] = m.order;
  j["start_darts"] = m.basepoints;
  return j.dump();
}

Marking marking_from_json(const std::string& text) {
  json j = json::parse(text);
  Marking m;
  m.order = j.at("order").get<std::vector<int>>();
  m.basepoints = j.at("start_darts").get<std::vector<Dart>>();
  return m;
}

namespace {

[[noreturn]] void entry_fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("catalog " + where + ": " + what);
}

Marking marking_from(const json& j) {
  Marking m;
  m.order = j.at("order").get<std::vector<int>>();
  m.basepoints = j.at("start_darts").get<std::vector<Dart>>();
  return m;
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("catalog: cannot open " + path);

  std::vector<CatalogEntry> entries;
  std::set<std::string> names;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      entry_fail(where, std::string("bad JSON: ") + e.what());
    }
    CatalogEntry e;
    try {
      e.name = j.at("name").get<std::string>();
      e.pd = j.at("pd").get<std::string>();
      e.crossing_number = j.at("c").get<int>();
      e.unknotting = j.at("u").get<int>();
      e.bridge = j.at("b").get<int>();
      e.is_twist = j.at("twist").get<bool>();
      e.a_lo = j.at("a_lo").get<int>();
      e.a_hi = j.at("a_hi").get<int>();
      if (j.contains("witness_pd") && !j.at("witness_pd").is_null()) {
        e.witness_pd = j.at("witness_pd").get<std::string>();
        e.witness_marking = marking_from(j.at("witness_marking"));
      }
    } catch (const json::exception& ex) {
      entry_fail(where, std::string("missing or mistyped field: ") + ex.what());
    }

    if (!names.insert(e.name).second) entry_fail(where, "duplicate name " + e.name);
    if (e.a_lo > e.a_hi) entry_fail(where + " (" + e.name + ")", "a_lo exceeds a_hi");

    LinkDiagram d;
    try {
      d = LinkDiagram::parse_pd(e.pd);
    } catch (const std::exception& ex) {
      entry_fail(where + " (" + e.name + ")", std::string("pd does not parse: ") + ex.what());
    }
    if (d.crossing_count() != e.crossing_number)
      entry_fail(where + " (" + e.name + ")", "crossing count mismatch");
    if (d.component_count() != 1)
      entry_fail(where + " (" + e.name + ")", "pd is not a knot diagram");

    if (e.has_witness()) {
      LinkDiagram w;
      try {
        w = LinkDiagram::parse_pd(e.witness_pd);
      } catch (const std::exception& ex) {
        entry_fail(where + " (" + e.name + ")",
                   std::string("witness pd does not parse: ") + ex.what());
      }
      int got = 0;
      try {
        got = ascending_count(w, e.witness_marking);
      } catch (const std::exception& ex) {
        entry_fail(where + " (" + e.name + ")",
                   std::string("witness marking invalid: ") + ex.what());
      }
      if (got != e.a_hi)
        entry_fail(where + " (" + e.name + ")",
                   "witness recomputes to " + std::to_string(got) + ", expected a_hi=" +
                       std::to_string(e.a_hi));
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

WitnessReport validate_witnesses(const std::vector<CatalogEntry>& entries) {
  WitnessReport report;
  for (const CatalogEntry& e : entries) {
    WitnessCheck check;
    check.name = e.name;
    check.expected = e.a_hi;
    if (!e.has_witness()) {
      ++report.missing;
      report.checks.push_back(check);
      continue;
    }
    check.present = true;
    try {
      LinkDiagram w = LinkDiagram::parse_pd(e.witness_pd);
      check.recomputed = ascending_count(w, e.witness_marking);
      check.ok = check.recomputed == check.expected;
    } catch (const std::exception&) {
      check.ok = false;
    }
    if (!check.ok) ++report.mismatches;
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace ascnum
