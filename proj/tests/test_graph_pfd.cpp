#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <variant>

#include "fixtures.hpp"
#include "hgpfd/graph_pfd.hpp"
#include "hgpfd/hyper_pfd.hpp"
#include "hgpfd/isomorphism.hpp"
#include "hgpfd/oracle.hpp"

using namespace hgpfd;

namespace {

std::vector<int> factor_sizes(const GraphPfd& pfd) {
  std::vector<int> sizes;
  for (const auto& f : pfd.factors) sizes.push_back(f.vertex_count);
  return sizes;
}

// Every edge changes exactly the coordinate matching its color.
void check_coloring_consistency(const UndirectedGraph& g, const GraphPfd& pfd) {
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const auto [u, v] = g.edges[ei];
    const int c = pfd.coloring.colors[ei];
    int differing = 0;
    for (int axis = 0; axis < pfd.coords.axis_count(); ++axis) {
      if (pfd.coords.coord(u, axis) != pfd.coords.coord(v, axis)) {
        ++differing;
        CHECK(axis == c);
      }
    }
    CHECK(differing == 1);
  }
}

void check_reconstruction(const UndirectedGraph& g, const GraphPfd& pfd) {
  UndirectedGraph rebuilt = UndirectedGraph::from_edges(1, {});
  rebuilt.vertex_count = 1;
  bool first = true;
  for (const auto& f : pfd.factors) {
    rebuilt = first ? f : graph_cartesian_product(rebuilt, f);
    first = false;
  }
  if (pfd.factors.empty()) return;
  CHECK(rebuilt.vertex_count == g.vertex_count);
  CHECK(rebuilt.edge_count() == g.edge_count());
  CHECK(isomorphic(to_hypergraph(rebuilt), to_hypergraph(g)).ok());
}

}  // namespace

TEST_CASE("pfd_graph rejects disconnected input") {
  auto g = UndirectedGraph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(pfd_graph(g), std::invalid_argument);
}

TEST_CASE("K4 x K2 splits into K2 and K4") {
  auto g = graph_cartesian_product(complete_graph(4), complete_graph(2));
  auto pfd = pfd_graph(g);
  REQUIRE(factor_sizes(pfd) == std::vector<int>{2, 4});
  CHECK(pfd.factors[0].edge_count() == 1);
  CHECK(pfd.factors[1].edge_count() == 6);
  CHECK(pfd.coords.sizes() == std::vector<int>{2, 4});
  check_coloring_consistency(g, pfd);
  check_reconstruction(g, pfd);
}

TEST_CASE("C4 is K2 x K2, C5 and K4 are prime, the 3-prism is K3 x K2") {
  auto c4 = pfd_graph(cycle_graph(4));
  CHECK(factor_sizes(c4) == std::vector<int>{2, 2});

  auto c5 = pfd_graph(cycle_graph(5));
  CHECK(c5.factors.size() == 1);

  auto k4 = pfd_graph(complete_graph(4));
  CHECK(k4.factors.size() == 1);

  auto prism = pfd_graph(graph_cartesian_product(complete_graph(3), complete_graph(2)));
  REQUIRE(factor_sizes(prism) == std::vector<int>{2, 3});
  CHECK(prism.factors[1].edge_count() == 3);
}

TEST_CASE("hypercubes split into K2 factors") {
  for (int d = 1; d <= 6; ++d) {
    auto g = hypercube_graph(d);
    auto pfd = pfd_graph(g);
    REQUIRE(static_cast<int>(pfd.factors.size()) == d);
    for (const auto& f : pfd.factors) {
      CHECK(f.vertex_count == 2);
      CHECK(f.edge_count() == 1);
    }
    check_coloring_consistency(g, pfd);
    if (d <= 3) {
      auto oracle = brute_force_pfd_graph(g);
      CHECK(graph_multisets_isomorphic(pfd.factors, oracle));
    }
  }
}

TEST_CASE("factor count never exceeds log2(n)") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = random_connected_graph(seed, 2 + static_cast<int>(seed % 9), 1.6);
    auto pfd = pfd_graph(g);
    CHECK(static_cast<double>(pfd.factors.size()) <=
          std::log2(static_cast<double>(g.vertex_count)) + 1e-9);
    check_coloring_consistency(g, pfd);
    check_reconstruction(g, pfd);
  }
}

TEST_CASE("round trip: products of certified prime graphs are recovered") {
  int done = 0;
  for (std::uint64_t seed = 0; done < 20; ++seed) {
    auto g1 = random_connected_graph(seed * 2 + 1, 2 + static_cast<int>(seed % 5), 1.5);
    auto g2 = random_connected_graph(seed * 2 + 2, 2 + static_cast<int>((seed * 3) % 5), 1.5);
    if (brute_force_pfd_graph(g1).size() != 1) continue;
    if (brute_force_pfd_graph(g2).size() != 1) continue;
    auto product = graph_cartesian_product(g1, g2);
    auto pfd = pfd_graph(product);
    CHECK(graph_multisets_isomorphic(pfd.factors, {g1, g2}));
    ++done;
  }
}

TEST_CASE("layers of one color through different vertices are isomorphic") {
  auto g = graph_cartesian_product(cycle_graph(3), path_graph(3));
  auto pfd = pfd_graph(g);
  REQUIRE(pfd.factors.size() == 2);
  for (int c = 0; c < pfd.coords.axis_count(); ++c) {
    // layer through v: edges of color c whose endpoints agree with v elsewhere
    auto layer_of = [&](int v) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        if (pfd.coloring.colors[ei] != c) continue;
        const auto [a, b] = g.edges[ei];
        bool same = true;
        for (int axis = 0; axis < pfd.coords.axis_count(); ++axis) {
          if (axis != c && pfd.coords.coord(a, axis) != pfd.coords.coord(v, axis)) same = false;
        }
        if (same) edges.emplace_back(pfd.coords.coord(a, c), pfd.coords.coord(b, c));
      }
      return UndirectedGraph::from_edges(pfd.coords.sizes()[static_cast<std::size_t>(c)],
                                         std::move(edges));
    };
    auto base = layer_of(0);
    for (int v = 1; v < g.vertex_count; ++v) {
      auto other = layer_of(v);
      CHECK(isomorphic(to_hypergraph(base), to_hypergraph(other)).ok());
    }
  }
}

TEST_CASE("coordinates_from_coloring on the product coloring of K4 x K2") {
  auto g = graph_cartesian_product(complete_graph(4), complete_graph(2));
  auto pfd = pfd_graph(g);
  auto res = coordinates_from_coloring(g, pfd.coloring);
  REQUIRE(std::holds_alternative<Coordinatization>(res));
  const auto& coords = std::get<Coordinatization>(res);
  CHECK(coords.sizes() == std::vector<int>{2, 4});
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const auto [u, v] = g.edges[ei];
    auto axis = coords.single_differing_axis(u, v);
    REQUIRE(axis.has_value());
    CHECK(*axis == pfd.coloring.colors[ei]);
  }
}

TEST_CASE("a single color class spreads coordinates 1..n on one axis") {
  auto g = path_graph(5);
  EdgeColoring mono{1, std::vector<int>(static_cast<std::size_t>(g.edge_count()), 0)};
  auto res = coordinates_from_coloring(g, mono);
  REQUIRE(std::holds_alternative<Coordinatization>(res));
  const auto& coords = std::get<Coordinatization>(res);
  REQUIRE(coords.sizes() == std::vector<int>{5});
  for (int v = 0; v < 5; ++v) CHECK(coords.coord(v, 0) == v);  // BFS order on a path
}

TEST_CASE("merging the fig2 colors per the factor partition stays valid") {
  auto p = hgpfd::testing::fig2();
  auto pre = preprocessing(p);
  REQUIRE(pre.axis_count == 3);
  // merge axes 0 and 2 (the two fig1 directions), keep axis 1
  EdgeColoring merged;
  merged.color_count = 2;
  merged.colors.resize(pre.section_pfd.coloring.colors.size());
  for (std::size_t ei = 0; ei < merged.colors.size(); ++ei) {
    const int c = pre.section_pfd.coloring.colors[ei];
    merged.colors[ei] = (c == 1) ? 1 : 0;
  }
  auto res = coordinates_from_coloring(pre.section, merged);
  REQUIRE(std::holds_alternative<Coordinatization>(res));
  auto sizes = std::get<Coordinatization>(res).sizes();
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{2, 8});
}

TEST_CASE("diagnostics: an edge that separates nothing") {
  // triangle with colors {1}, {2, 2}: removing color 1 leaves its endpoints
  // connected through the other two edges
  auto g = complete_graph(3);
  EdgeColoring coloring{2, {0, 1, 1}};
  auto res = coordinates_from_coloring(g, coloring);
  REQUIRE(std::holds_alternative<ColoringDiagnostic>(res));
  CHECK(std::get<ColoringDiagnostic>(res).kind ==
        ColoringDiagnostic::Kind::edge_not_separated);
}

TEST_CASE("diagnostics: injective but incomplete grid") {
  // path a-b-c with two colors: vectors live in a 2x2 grid, n = 3
  auto g = path_graph(3);
  EdgeColoring coloring{2, {0, 1}};
  auto res = coordinates_from_coloring(g, coloring);
  REQUIRE(std::holds_alternative<ColoringDiagnostic>(res));
  CHECK(std::get<ColoringDiagnostic>(res).kind == ColoringDiagnostic::Kind::grid_incomplete);
}

TEST_CASE("diagnostics: coordinate clash") {
  // K2,3 with its three matchings as colors: the two degree-3 vertices agree
  // on every component split, so they collide
  auto g = UndirectedGraph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EdgeColoring coloring{3, std::vector<int>(6, -1)};
  coloring.colors[static_cast<std::size_t>(g.edge_index(0, 2))] = 0;
  coloring.colors[static_cast<std::size_t>(g.edge_index(1, 2))] = 0;
  coloring.colors[static_cast<std::size_t>(g.edge_index(0, 3))] = 1;
  coloring.colors[static_cast<std::size_t>(g.edge_index(1, 3))] = 1;
  coloring.colors[static_cast<std::size_t>(g.edge_index(0, 4))] = 2;
  coloring.colors[static_cast<std::size_t>(g.edge_index(1, 4))] = 2;
  auto res = coordinates_from_coloring(g, coloring);
  REQUIRE(std::holds_alternative<ColoringDiagnostic>(res));
  const auto& diag = std::get<ColoringDiagnostic>(res);
  CHECK(diag.kind == ColoringDiagnostic::Kind::coordinate_clash);
  CHECK(diag.u == 0);
  CHECK(diag.v == 1);
}

TEST_CASE("agreement with the graph oracle on random small graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = random_connected_graph(seed + 4000, 2 + static_cast<int>(seed % 6), 1.4);
    auto pfd = pfd_graph(g);
    auto oracle = brute_force_pfd_graph(g);
    CHECK(graph_multisets_isomorphic(pfd.factors, oracle));
  }
}
