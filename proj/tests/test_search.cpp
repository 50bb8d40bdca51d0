#include "ascnum/search.hpp"

#include <stdexcept>

#include "doctest.h"
#include "ascnum/generators.hpp"

using namespace ascnum;

TEST_CASE("search: root bound and kinked unknot") {
  LinkDiagram kinked = braid_closure(2, {1, -1});  // 2-crossing unknot diagram
  SearchReport r = search_upper_bound(kinked, {4, 10000});
  CHECK(r.best_value == 0);
  CHECK(r.nodes >= 1);
  CHECK(ascending_count(r.witness_diagram, r.witness_marking) == 0);
}

TEST_CASE("search: trefoil stays at 1 and exhausts a small cap") {
  LinkDiagram tref = LinkDiagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  SearchReport r = search_upper_bound(tref, {4, 100000});
  CHECK(r.best_value == 1);
  CHECK(r.frontier_exhausted);
  CHECK(r.best_value <= min_ascending(tref).value);
  CHECK(ascending_count(r.witness_diagram, r.witness_marking) == 1);
}

TEST_CASE("search: caps validated, budget exhaustion is a result") {
  LinkDiagram tref = LinkDiagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  CHECK_THROWS_AS(search_upper_bound(tref, {2, 100}), std::invalid_argument);
  CHECK_THROWS_AS(search_upper_bound(tref, {5, 0}), std::invalid_argument);
  SearchReport tiny = search_upper_bound(tref, {5, 3});
  CHECK(tiny.nodes == 3);
  CHECK_FALSE(tiny.frontier_exhausted);
}

TEST_CASE("search: monotone in caps") {
  LinkDiagram d = twist_knot_diagram(3);
  SearchReport small = search_upper_bound(d, {d.crossing_count(), 100000});
  SearchReport big = search_upper_bound(d, {d.crossing_count() + 2, 100000});
  CHECK(big.best_value <= small.best_value);
}

TEST_CASE("search: target stop short-circuits") {
  LinkDiagram d = twist_knot_diagram(3);
  SearchOptions opts;
  opts.target = 1;
  SearchReport r = search_upper_bound(d, {d.crossing_count() + 2, 1000000}, opts);
  CHECK(r.best_value == 1);
  CHECK(ascending_count(r.witness_diagram, r.witness_marking) == 1);
}

TEST_CASE("search: twist knots reach 1 within default-style budgets") {
  for (int k = 3; k <= 4; ++k) {
    LinkDiagram d = twist_knot_diagram(k);
    CHECK(min_ascending(d).value > 1);  // the minimal diagram does not realize it
    SearchOptions opts;
    opts.target = 1;
    SearchReport r = search_upper_bound(d, {d.crossing_count() + 2, 1000000}, opts);
    CHECK(r.best_value == 1);
  }
}

TEST_CASE("search: move subset restriction") {
  LinkDiagram d = twist_knot_diagram(3);
  SearchOptions r1_only;
  r1_only.r2 = r1_only.r3 = false;
  SearchReport r = search_upper_bound(d, {d.crossing_count() + 1, 20000}, r1_only);
  CHECK(r.best_value == min_ascending(d).value);  // kinks alone cannot help here
}

TEST_CASE("search: 7_3 reaches 2 within default budgets") {
  LinkDiagram d = rational_knot_diagram({4, 3});
  SearchOptions opts;
  opts.target = 2;
  SearchReport r = search_upper_bound(d, {d.crossing_count() + 2, 1000000}, opts);
  CHECK(r.best_value == 2);
  CHECK(ascending_count(r.witness_diagram, r.witness_marking) == 2);
}
