#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "hgpfd/isomorphism.hpp"
#include "hgpfd/oracle.hpp"

using namespace hgpfd;
using hgpfd::testing::fig1;

namespace {

// Exhaustive permutation check, the independent yardstick for small n.
bool exhaustive_isomorphic(const DirectedHypergraph& a, const DirectedHypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
  const int n = a.vertex_count();
  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Hyperarc& arc : a.arcs()) {
      Hyperarc image;
      for (VertexId v : arc.tail) image.tail.push_back(perm[static_cast<std::size_t>(v)]);
      for (VertexId v : arc.head) image.head.push_back(perm[static_cast<std::size_t>(v)]);
      if (!b.has_arc(canonical_arc(std::move(image)))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool is_valid_mapping(const DirectedHypergraph& a, const DirectedHypergraph& b,
                      const std::vector<VertexId>& mapping) {
  for (const Hyperarc& arc : a.arcs()) {
    Hyperarc image;
    for (VertexId v : arc.tail) image.tail.push_back(mapping[static_cast<std::size_t>(v)]);
    for (VertexId v : arc.head) image.head.push_back(mapping[static_cast<std::size_t>(v)]);
    if (!b.has_arc(canonical_arc(std::move(image)))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("identity isomorphism") {
  auto h = fig1();
  auto result = isomorphic(h, h);
  REQUIRE(result.ok());
  CHECK(is_valid_mapping(h, h, result.mapping));
}

TEST_CASE("directed and undirected arcs are not isomorphic") {
  auto directed = hgpfd::testing::single_arc();
  auto undirected = hgpfd::testing::m2();
  CHECK(isomorphic(directed, undirected).status == IsoStatus::not_isomorphic);
}

TEST_CASE("agrees with the exhaustive check for n <= 6") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratorConfig cfg{seed, 2 + static_cast<int>(seed % 5), 3, 1.5, 0.5};
    auto a = random_connected_hypergraph(cfg);
    GeneratorConfig cfg2{seed + 500, a.vertex_count(), 3, 1.5, 0.5};
    auto b = random_connected_hypergraph(cfg2);
    auto fast = isomorphic(a, b);
    REQUIRE(fast.status != IsoStatus::budget_exceeded);
    CHECK(fast.ok() == exhaustive_isomorphic(a, b));
    if (fast.ok()) CHECK(is_valid_mapping(a, b, fast.mapping));
  }
}

TEST_CASE("reflexive and symmetric on a randomized suite") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    GeneratorConfig cfg{seed, 2 + static_cast<int>(seed % 7), 4, 1.4, 0.5};
    auto a = random_connected_hypergraph(cfg);
    CHECK(isomorphic(a, a).ok());

    GeneratorConfig cfg2{seed * 31, 2 + static_cast<int>((seed + 3) % 7), 4, 1.4, 0.5};
    auto b = random_connected_hypergraph(cfg2);
    auto ab = isomorphic(a, b);
    auto ba = isomorphic(b, a);
    REQUIRE(ab.status != IsoStatus::budget_exceeded);
    CHECK(ab.ok() == ba.ok());
  }
}

TEST_CASE("a tiny budget is reported as exceeded, not as a mismatch") {
  auto big = hgpfd::testing::fig2();
  auto result = isomorphic(big, big, 2);
  CHECK(result.status == IsoStatus::budget_exceeded);
}

TEST_CASE("multiset comparison is order-insensitive") {
  std::vector<DirectedHypergraph> a{fig1(), hgpfd::testing::m2()};
  std::vector<DirectedHypergraph> b{hgpfd::testing::m2(), fig1()};
  CHECK(multisets_isomorphic(a, b));
  std::vector<DirectedHypergraph> c{fig1(), fig1()};
  CHECK_FALSE(multisets_isomorphic(a, c));
  CHECK_FALSE(multisets_isomorphic(a, {fig1()}));
}
