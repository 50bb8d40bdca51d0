#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ascnum/bounds.hpp"
#include "ascnum/diagram.hpp"

namespace ascnum {

struct CatalogEntry {
  std::string name;
  std::string pd;          // minimal diagram
  int crossing_number = 0;
  int unknotting = 0;
  int bridge = 0;
  bool is_twist = false;
  int a_lo = 0;
  int a_hi = 0;
  std::string witness_pd;  // diagram attaining a_hi; empty when absent
  Marking witness_marking;

  bool has_witness() const { return !witness_pd.empty(); }
  bool exact() const { return a_lo == a_hi; }
  CertifyInput certify_input(std::optional<int> witness_value) const;
};

// Loads and validates a one-JSON-object-per-line catalog: PD codes must
// parse as knots with the stated crossing number, names must be unique, and
// stored witnesses must recompute to a_hi.
std::vector<CatalogEntry> load_catalog(const std::string& path);

std::string marking_to_json(const Marking& m);
Marking marking_from_json(const std::string& text);

struct WitnessCheck {
  std::string name;
  bool present = false;
  bool ok = false;
  int expected = 0;
  int recomputed = 0;
};

struct WitnessReport {
  std::vector<WitnessCheck> checks;
  int mismatches = 0;
  int missing = 0;  // flagged for search backfill
};

WitnessReport validate_witnesses(const std::vector<CatalogEntry>& entries);

}  // namespace ascnum
