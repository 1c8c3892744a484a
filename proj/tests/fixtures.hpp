#ifndef HGPFD_TESTS_FIXTURES_HPP
#define HGPFD_TESTS_FIXTURES_HPP

#include <string>

#include "hgpfd/hypergraph.hpp"

namespace hgpfd::testing {

// The 8-vertex prime hypergraph used across the suites. Vertex names are
// its 2x4 grid positions; arcs come in the order e1..e8 referenced by the
// canonical-order and merge-graph tests.
inline DirectedHypergraph fig1() {
  DirectedHypergraph h;
  for (const char* name : {"11", "12", "13", "14", "21", "22", "23", "24"}) {
    h.add_vertex(name);
  }
  auto id = [&](const char* n) { return h.find_vertex(n); };
  h.add_arc({id("11"), id("12"), id("13")}, {id("12"), id("13"), id("14")});  // e1
  h.add_arc({id("21"), id("22"), id("23")}, {id("22"), id("23"), id("24")});  // e2
  h.add_arc({id("14")}, {id("12")});                                          // e3
  h.add_arc({id("11")}, {id("21")});                                          // e4
  h.add_arc({id("12")}, {id("22")});                                          // e5
  h.add_arc({id("13"), id("23")}, {id("13"), id("23")});                      // e6
  h.add_arc({id("14")}, {id("24")});                                          // e7
  h.add_arc({id("13")}, {id("23")});                                          // e8
  return h;
}

// Two vertices, one undirected hyperedge.
inline DirectedHypergraph m2() {
  DirectedHypergraph h;
  h.add_vertex("1");
  h.add_vertex("2");
  h.add_arc({0, 1}, {0, 1});
  return h;
}

inline DirectedHypergraph k1() {
  DirectedHypergraph h;
  h.add_vertex("a");
  return h;
}

// fig1 x m2: 16 vertices, 24 arcs, exactly two prime factors.
inline DirectedHypergraph fig2() { return cartesian_product(fig1(), m2()); }

// Single directed arc on two vertices.
inline DirectedHypergraph single_arc() {
  DirectedHypergraph h;
  h.add_vertex("1");
  h.add_vertex("2");
  h.add_arc({0}, {1});
  return h;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(HGPFD_FIXTURE_DIR) + "/" + name;
}

}  // namespace hgpfd::testing

#endif  // HGPFD_TESTS_FIXTURES_HPP
