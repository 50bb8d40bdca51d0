#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ascnum/diagram.hpp"

namespace ascnum {

// Closure of a braid word on `strands` strands. Letters are +-i for the
// generator crossing strand positions i and i+1 (1-based), positive letters
// putting the strand arriving from position i on top. Unused strands close
// into free loops.
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

// Standard (p-1)q-crossing diagram of the (p,q)-torus knot: closure of
// (s1 s2 ... s_{p-1})^q. Requires p,q >= 2 coprime.
LinkDiagram torus_diagram(int p, int q);

// The two based oriented markings from the torus construction: the forward
// one first meets the p-1 crossings of the leading sweep as over-crossings,
// the reversed-and-slid one meets the same crossings first, also as
// over-crossings. Their ascending counts sum to (p-1)(q-1).
std::pair<Marking, Marking> torus_proof_markings(const LinkDiagram& torus, int p, int q);

// Alternating rational knot/link diagram from a positive continued-fraction
// coefficient list (sum of coefficients = crossing count).
LinkDiagram rational_knot_diagram(const std::vector<int>& coeffs);

// Twist knot: k half-twists closed by a 2-crossing clasp. k=1 is a trefoil,
// k=2 the figure-eight.
LinkDiagram twist_knot_diagram(int k);

// Montesinos-style join of rational tangles: tangle i is built from its
// continued-fraction coefficients, mirrored when signs[i] < 0, and the
// tangles are closed in a cycle. pretzel(p,q,r) = slots {{p},{q},{r}}.
LinkDiagram montesinos_diagram(const std::vector<std::vector<int>>& slots,
                               const std::vector<int>& signs);

LinkDiagram hopf_diagram();
LinkDiagram trivial_link_diagram(int n);

// Disjoint union: component counts add, parts stay separate.
LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b);

// Splice of two one-component diagrams at their basepoint edges. The combined
// marking traverses d1 exactly as m1 then d2 exactly as m2, so
// ascending_count(sum) = ascending_count(d1,m1) + ascending_count(d2,m2).
std::pair<LinkDiagram, Marking> connected_sum(const LinkDiagram& d1, const Marking& m1,
                                              const LinkDiagram& d2, const Marking& m2);

// Seeded random braid closure with at most `max_crossings` crossings and at
// most `max_components` components.
LinkDiagram random_diagram(std::mt19937_64& rng, int max_crossings, int max_components);

}  // namespace ascnum
