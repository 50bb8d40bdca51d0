#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ascnum {

// Provenance of the winning lower bound. Trivial is the nontriviality rule
// (ascending number zero exactly for trivial links).
enum class LowerRule { Unknotting, Bridge, TwistClassification, Trivial, None };

enum class UpperRule { CrossingBound, StoredWitness, SearchWitness, TorusFormula, None };

struct BoundSet {
  int lower = 0;
  LowerRule lower_rule = LowerRule::None;
  int upper = 0;
  UpperRule upper_rule = UpperRule::None;
  bool exact = false;
};

struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// floor((c-1)/2) for a nontrivial knot, floor(c/2) for a link, where c is
// the minimum crossing number.
int crossing_upper_bound(int c, bool is_knot);

// max(0, b - n) from the bridge inequality a >= b - n.
int bridge_lower_bound(int b, int n);

// (p-1)(q-1)/2 for coprime p,q >= 1.
int torus_ascending(int p, int q);

struct CertifyInput {
  std::string name;
  int crossing_number = 0;
  int n_components = 1;
  int unknotting = 0;
  int bridge = 1;
  bool is_twist = false;
  bool nontrivial = true;
  std::optional<int> witness_value;
  UpperRule witness_source = UpperRule::StoredWitness;
};

// Certified bounds: lower from the unknotting number, the bridge inequality
// and the classification rules; upper from the crossing bound and a
// validated witness. Throws IntegrityError when lower > upper.
BoundSet certify(const CertifyInput& in);

const char* to_string(LowerRule r);
const char* to_string(UpperRule r);

}  // namespace ascnum
