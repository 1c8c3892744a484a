#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "hgpfd/hyper_pfd.hpp"
#include "hgpfd/io.hpp"
#include "hgpfd/isomorphism.hpp"
#include "hgpfd/oracle.hpp"

using namespace hgpfd;
using hgpfd::testing::fig1;
using hgpfd::testing::fig2;
using hgpfd::testing::k1;
using hgpfd::testing::m2;

namespace {

// product of two single-arc hypergraphs: 4 vertices, 4 arcs, C4 2-section
DirectedHypergraph two_arrows_product() {
  return cartesian_product(hgpfd::testing::single_arc(), hgpfd::testing::single_arc());
}

void check_partition(const Factorization& fact, int axis_count) {
  std::vector<char> seen(static_cast<std::size_t>(axis_count), 0);
  for (const auto& part : fact.partition) {
    for (int axis : part) {
      REQUIRE(axis >= 0);
      REQUIRE(axis < axis_count);
      CHECK_FALSE(seen[static_cast<std::size_t>(axis)]);
      seen[static_cast<std::size_t>(axis)] = 1;
    }
  }
  for (char s : seen) CHECK(s == 1);
}

}  // namespace

TEST_CASE("preprocessing of fig1: two axes, 2x4 grid, expected arc order") {
  auto pre = preprocessing(fig1());
  CHECK(pre.axis_count == 2);
  CHECK(pre.coords().sizes() == std::vector<int>{2, 4});
  CHECK(pre.canon.arc_source == std::vector<int>{3, 0, 4, 7, 5, 2, 6, 1});
}

TEST_CASE("preprocessing of fig2 finds three 2-section factors") {
  auto pre = preprocessing(fig2());
  CHECK(pre.axis_count == 3);
  std::vector<int> sizes = pre.coords().sizes();
  CHECK(sizes == std::vector<int>{2, 2, 4});
}

TEST_CASE("preprocessing of a single arc: one axis") {
  auto pre = preprocessing(hgpfd::testing::single_arc());
  CHECK(pre.axis_count == 1);
  CHECK(pre.canon.arcs.size() == 1);
}

TEST_CASE("preprocessing rejects invalid or disconnected input") {
  auto split = DirectedHypergraph::unchecked({"1", "2", "3", "4"},
                                             {Hyperarc{{0}, {1}}, Hyperarc{{2}, {3}}});
  CHECK_THROWS_AS(preprocessing(split), std::invalid_argument);
  auto loop = DirectedHypergraph::unchecked({"1"}, {Hyperarc{{0}, {0}}});
  CHECK_THROWS_AS(preprocessing(loop), std::invalid_argument);
}

TEST_CASE("fig1 merge graph: edge {1,2} triggered twice, first by e6") {
  auto pre = preprocessing(fig1());
  auto mg = build_merge_graph(pre);
  CHECK(mg.axis_count == 2);
  REQUIRE(mg.edges == std::vector<std::pair<int, int>>{{0, 1}});

  // Sweep order is e4,e1,e5,e8,e6,e3,e7,e2. The undirected arc {13,23} (e6)
  // fails first: its K4-direction increment {14,24} is not an arc. The
  // second failure is e3 = ({14},{12}), whose K2-direction increment
  // ({24},{22}) is missing. All other increments wrap around to existing
  // arcs, e.g. inc(e7, 2) = ({11},{21}) = e4.
  REQUIRE(mg.triggers.size() == 2);
  CHECK(pre.canon.arc_source[static_cast<std::size_t>(mg.triggers[0].arc_index)] == 5);  // e6
  CHECK(mg.triggers[0].differing_axis == 0);
  CHECK(mg.triggers[0].missing_axis == 1);
  CHECK(pre.canon.arc_source[static_cast<std::size_t>(mg.triggers[1].arc_index)] == 2);  // e3
  CHECK(mg.triggers[1].differing_axis == 1);
  CHECK(mg.triggers[1].missing_axis == 0);

  CHECK(mg.components() == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("fig2 merge graph: exactly the edge between the fig1 axes") {
  auto pre = preprocessing(fig2());
  auto mg = build_merge_graph(pre);
  CHECK(mg.axis_count == 3);
  CHECK(mg.edges == std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(mg.components() == std::vector<std::vector<int>>{{0, 2}, {1}});
  for (const auto& trig : mg.triggers) {
    const int lo = std::min(trig.differing_axis, trig.missing_axis);
    const int hi = std::max(trig.differing_axis, trig.missing_axis);
    CHECK(lo == 0);
    CHECK(hi == 2);
  }
}

TEST_CASE("product of two single arcs: every increment present, no merges") {
  auto p = two_arrows_product();
  CHECK(p.vertex_count() == 4);
  CHECK(p.arc_count() == 4);
  auto pre = preprocessing(p);
  REQUIRE(pre.axis_count == 2);
  auto mg = build_merge_graph(pre);
  CHECK(mg.edges.empty());
  CHECK(mg.triggers.empty());

  SUBCASE("combine returns two single-arc factors, matching the oracle") {
    auto fact = combine(p, pre, mg);
    REQUIRE(fact.factors.size() == 2);
    for (const auto& f : fact.factors) {
      CHECK(f.vertex_count() == 2);
      CHECK(f.arc_count() == 1);
    }
    CHECK(multisets_isomorphic(fact.factors, brute_force_pfd_hypergraph(p)));
    // an edgeless merge graph means the pre-coordinatization already
    // realizes the product, so the reconstruction check holds as-is
    verify_factorization(p, fact);
    CHECK(fact.partition == std::vector<std::vector<int>>{{0}, {1}});
  }
}

TEST_CASE("combine on fig1: one factor, the input itself") {
  auto h = fig1();
  auto pre = preprocessing(h);
  auto fact = combine(h, pre, build_merge_graph(pre));
  REQUIRE(fact.factors.size() == 1);
  CHECK(isomorphic(fact.factors[0], h).ok());
  verify_factorization(h, fact);
  check_partition(fact, pre.axis_count);
}

TEST_CASE("combine on fig2: factors isomorphic to fig1 and m2, in component order") {
  auto p = fig2();
  auto pre = preprocessing(p);
  auto fact = combine(p, pre, build_merge_graph(pre));
  REQUIRE(fact.factors.size() == 2);
  CHECK(fact.partition == std::vector<std::vector<int>>{{0, 2}, {1}});
  CHECK(isomorphic(fact.factors[0], fig1()).ok());
  CHECK(isomorphic(fact.factors[1], m2()).ok());
  verify_factorization(p, fact);
}

TEST_CASE("pfd_hypergraph end to end on the fixtures") {
  auto f1 = pfd_hypergraph(fig1());
  CHECK(f1.factors.size() == 1);

  auto f2 = pfd_hypergraph(fig2());
  REQUIRE(f2.factors.size() == 2);
  CHECK(multisets_isomorphic(f2.factors, {fig1(), m2()}));

  auto f0 = pfd_hypergraph(k1());
  CHECK(f0.factors.empty());
  CHECK(f0.coords.axis_count() == 0);
}

TEST_CASE("every arc lives in exactly one pre-layer") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto sample = random_product(GeneratorConfig{seed + 70, 6, 3, 1.3, 0.5}, 2);
    auto pre = preprocessing(sample.product);
    for (const Hyperarc& arc : pre.canon.arcs) {
      auto vs = arc.vertices();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          auto axis = pre.coords().single_differing_axis(vs[i], vs[j]);
          CHECK(axis.has_value());
        }
      }
    }
  }
}

TEST_CASE("round trip: shuffled products of certified primes are recovered") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int factor_count = 2 + static_cast<int>(seed % 2);
    auto sample = random_product(GeneratorConfig{seed + 900, 5, 3, 1.4, 0.5}, factor_count);
    auto fact = pfd_hypergraph(sample.product);
    CHECK(multisets_isomorphic(fact.factors, sample.factors));
    int axes = 0;
    for (const auto& part : fact.partition) axes += static_cast<int>(part.size());
    check_partition(fact, axes);
    CHECK(static_cast<double>(fact.factors.size()) <=
          std::log2(static_cast<double>(sample.product.vertex_count())) + 1e-9);
  }
}

TEST_CASE("factor output is byte-deterministic") {
  auto run = [](const DirectedHypergraph& h) {
    auto fact = pfd_hypergraph(h);
    std::string out;
    for (const auto& f : fact.factors) out += serialize(f);
    out += serialize(h, &fact.coords);
    return out;
  };
  auto p = fig2();
  CHECK(run(p) == run(p));
  auto sample = random_product(GeneratorConfig{123, 6, 4, 1.5, 0.5}, 2);
  CHECK(run(sample.product) == run(sample.product));
}

TEST_CASE("pfd rejects invalid and disconnected inputs") {
  auto split = DirectedHypergraph::unchecked({"1", "2", "3", "4"},
                                             {Hyperarc{{0}, {1}}, Hyperarc{{2}, {3}}});
  CHECK_THROWS_AS(pfd_hypergraph(split), std::invalid_argument);
}
