#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hgpfd/graph.hpp"
#include "hgpfd/hypergraph.hpp"
#include "hgpfd/isomorphism.hpp"
#include "hgpfd/oracle.hpp"

using namespace hgpfd;
using hgpfd::testing::fig1;
using hgpfd::testing::fig2;
using hgpfd::testing::k1;
using hgpfd::testing::m2;

namespace {

bool has_issue(const std::vector<ValidationIssue>& issues, IssueKind kind) {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const ValidationIssue& i) { return i.kind == kind; });
}

}  // namespace

TEST_CASE("validate flags a loop arc") {
  auto h = DirectedHypergraph::unchecked({"1"}, {Hyperarc{{0}, {0}}});
  auto issues = validate(h);
  REQUIRE(has_issue(issues, IssueKind::loop));
  CHECK(issues.front().arc_index == 0);
}

TEST_CASE("validate flags duplicate arcs") {
  auto h = DirectedHypergraph::unchecked({"1", "2"}, {Hyperarc{{0}, {1}}, Hyperarc{{0}, {1}}});
  CHECK(has_issue(validate(h), IssueKind::multi_arc));
}

TEST_CASE("validate flags empty sides, dangling ids and repeated names") {
  auto empty_side = DirectedHypergraph::unchecked({"1", "2"}, {Hyperarc{{}, {1}}});
  CHECK(has_issue(validate(empty_side), IssueKind::empty_side));

  auto dangling = DirectedHypergraph::unchecked({"1", "2"}, {Hyperarc{{0}, {5}}});
  CHECK(has_issue(validate(dangling), IssueKind::dangling_vertex));

  auto dup_name = DirectedHypergraph::unchecked({"x", "x"}, {});
  CHECK(has_issue(validate(dup_name), IssueKind::duplicate_name));

  auto dup_vertex = DirectedHypergraph::unchecked({"1", "2"}, {Hyperarc{{0, 0}, {1}}});
  CHECK(has_issue(validate(dup_vertex), IssueKind::duplicate_vertex_in_side));
}

TEST_CASE("fig1 is valid, connected, rank 4") {
  auto h = fig1();
  CHECK(validate(h).empty());
  CHECK(is_connected(h));
  CHECK(h.rank() == 4);
  CHECK(h.arc_count() == 8);
}

TEST_CASE("arcs properly contained in other arcs are valid") {
  DirectedHypergraph h;
  for (int i = 0; i < 4; ++i) h.add_vertex(std::to_string(i + 1));
  h.add_arc({0, 1, 2}, {1, 2, 3});
  h.add_arc({0}, {1});  // tail and head nested inside the first arc
  CHECK(validate(h).empty());
  CHECK(is_connected(h));
}

TEST_CASE("connectivity: K1 yes, split arcs no") {
  CHECK(is_connected(k1()));
  auto split = DirectedHypergraph::unchecked({"1", "2", "3", "4"},
                                             {Hyperarc{{0}, {1}}, Hyperarc{{2}, {3}}});
  CHECK_FALSE(is_connected(split));
}

TEST_CASE("K1 is the product unit") {
  auto h = fig1();
  auto p = cartesian_product(h, k1());
  CHECK(p.vertex_count() == h.vertex_count());
  CHECK(p.arc_count() == h.arc_count());
  CHECK(isomorphic(p, h).ok());

  auto q = cartesian_product(k1(), k1());
  CHECK(q.vertex_count() == 1);
  CHECK(q.arc_count() == 0);
}

TEST_CASE("fig1 x m2 has 16 vertices and 24 arcs") {
  auto p = fig2();
  CHECK(p.vertex_count() == 16);
  CHECK(p.arc_count() == 8 * 2 + 1 * 8);
  CHECK(is_connected(p));
}

TEST_CASE("product arc count formula |E1||V2| + |V1||E2|") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorConfig a{seed, 2 + static_cast<int>(seed % 5), 3, 1.2, 0.5};
    GeneratorConfig b{seed + 1000, 2 + static_cast<int>((seed * 7) % 4), 4, 1.5, 0.3};
    auto ha = random_connected_hypergraph(a);
    auto hb = random_connected_hypergraph(b);
    auto p = cartesian_product(ha, hb);
    CHECK(p.arc_count() ==
          ha.arc_count() * hb.vertex_count() + ha.vertex_count() * hb.arc_count());
  }
}

TEST_CASE("product is connected iff both factors are") {
  auto connected = testing::single_arc();
  auto split = DirectedHypergraph::unchecked({"1", "2", "3", "4"},
                                             {Hyperarc{{0}, {1}}, Hyperarc{{2}, {3}}});
  CHECK(is_connected(cartesian_product(connected, connected)));
  CHECK_FALSE(is_connected(cartesian_product(connected, split)));
  CHECK_FALSE(is_connected(cartesian_product(split, connected)));
}

TEST_CASE("two_section of a single arc is a complete graph") {
  DirectedHypergraph h;
  h.add_vertex("1");
  h.add_vertex("2");
  h.add_vertex("3");
  h.add_arc({0}, {1, 2});
  auto g = two_section(h);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("two_section of fig1 is K4 x K2") {
  auto g = two_section(fig1());
  CHECK(g.edge_count() == 16);  // 2 * 6 + 4 * 1
  auto expected = graph_cartesian_product(complete_graph(4), complete_graph(2));
  CHECK(isomorphic(to_hypergraph(g), to_hypergraph(expected)).ok());
}

TEST_CASE("two_section commutes with the product, identity on pairs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GeneratorConfig a{seed * 3 + 1, 2 + static_cast<int>(seed % 6), 3, 1.4, 0.5};
    GeneratorConfig b{seed * 3 + 2, 2 + static_cast<int>((seed * 5) % 5), 4, 1.2, 0.4};
    auto ha = random_connected_hypergraph(a);
    auto hb = random_connected_hypergraph(b);
    auto lhs = two_section(cartesian_product(ha, hb));
    auto rhs = graph_cartesian_product(two_section(ha), two_section(hb));
    CHECK(lhs.edges == rhs.edges);  // same vertex layout on both sides
  }
}
