#include "ascnum/bounds.hpp"

#include <numeric>

namespace ascnum {

int crossing_upper_bound(int c, bool is_knot) {
  if (c < 0) throw std::invalid_argument("crossing_upper_bound: negative crossing count");
  return is_knot ? (c > 0 ? (c - 1) / 2 : 0) : c / 2;
}

int bridge_lower_bound(int b, int n) {
  if (n < 1 || b < n)
    throw std::invalid_argument("bridge_lower_bound: need b >= n >= 1");
  return b - n;
}

int torus_ascending(int p, int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw std::invalid_argument("torus_ascending: p,q must be coprime positive integers");
  return (p - 1) * (q - 1) / 2;
}

BoundSet certify(const CertifyInput& in) {
  BoundSet out;
  auto consider_lower = [&](int value, LowerRule rule) {
    if (out.lower_rule == LowerRule::None || value > out.lower) {
      out.lower = value;
      out.lower_rule = rule;
    }
  };
  consider_lower(in.unknotting, LowerRule::Unknotting);
  consider_lower(bridge_lower_bound(in.bridge, in.n_components), LowerRule::Bridge);
  if (in.nontrivial && !in.is_twist && in.n_components == 1)
    consider_lower(2, LowerRule::TwistClassification);
  if (in.nontrivial) consider_lower(1, LowerRule::Trivial);

  out.upper = crossing_upper_bound(in.crossing_number, in.n_components == 1);
  out.upper_rule = UpperRule::CrossingBound;
  if (in.witness_value && *in.witness_value <= out.upper) {
    out.upper = *in.witness_value;
    out.upper_rule = in.witness_source;
  }

  if (out.lower > out.upper)
    throw IntegrityError("catalog integrity failure for " + in.name + ": lower bound " +
                         std::to_string(out.lower) + " exceeds upper bound " +
                         std::to_string(out.upper));
  out.exact = out.lower == out.upper;
  return out;
}

const char* to_string(LowerRule r) {
  switch (r) {
    case LowerRule::Unknotting: return "unknotting";
    case LowerRule::Bridge: return "bridge";
    case LowerRule::TwistClassification: return "twist-classification";
    case LowerRule::Trivial: return "trivial";
    case LowerRule::None: return "none";
  }
  return "none";
}

const char* to_string(UpperRule r) {
  switch (r) {
    case UpperRule::CrossingBound: return "crossing-bound";
    case UpperRule::StoredWitness: return "stored-witness";
    case UpperRule::SearchWitness: return "search-witness";
    case UpperRule::TorusFormula: return "torus-formula";
    case UpperRule::None: return "none";
  }
  return "none";
}

}  // namespace ascnum
