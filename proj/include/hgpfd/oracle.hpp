#ifndef HGPFD_ORACLE_HPP
#define HGPFD_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "hgpfd/graph.hpp"
#include "hgpfd/hypergraph.hpp"

namespace hgpfd {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int n = 4;                       // target vertex count
  int r = 3;                       // maximum rank
  double arc_density = 1.5;        // expected arcs per vertex
  double directed_fraction = 0.5;  // probability an arc has tail != head
};

/// Exhaustive prime factor multiset for a tiny connected hypergraph.
/// Tries every a x b grid assignment (vertex 0 anchored, assignments grown
/// along weak adjacency, branches cut at the first arc leaving both axes),
/// accepts a grid when every arc is axis-pure and both layer families
/// rebuild the input, then recurses on the parts. Hard cap n <= 8.
/// K1 yields the empty multiset. Entirely independent of the PFD pipeline.
std::vector<DirectedHypergraph> brute_force_pfd_hypergraph(const DirectedHypergraph& h);

/// Same grid search for connected undirected graphs, cap n <= 12.
std::vector<UndirectedGraph> brute_force_pfd_graph(const UndirectedGraph& g);

/// Seeded connected valid hypergraph; same seed, same instance. Mixes
/// undirected and directed arcs and sometimes nests an arc properly inside
/// an existing one.
DirectedHypergraph random_connected_hypergraph(const GeneratorConfig& cfg);

/// Rejection-samples until the oracle certifies primality (skipped when n is
/// prime). Composite n > 8 cannot be certified and is rejected. Throws after
/// an attempt budget.
DirectedHypergraph random_prime_hypergraph(const GeneratorConfig& cfg);

struct ProductSample {
  DirectedHypergraph product;                // vertex ids shuffled, names "1".."N"
  std::vector<DirectedHypergraph> factors;   // certified primes, ground truth
};

/// Product of `factor_count` (2 or 3) certified primes with the vertex order
/// shuffled so the input order leaks nothing about the factors.
ProductSample random_product(const GeneratorConfig& cfg, int factor_count);

/// Product of rank-bounded primes of 2 or 4 vertices with exactly
/// 2^log2_n vertices; used by the benchmark series.
ProductSample random_bounded_rank_product(std::uint64_t seed, int log2_n, int max_rank = 3);

/// Seeded connected graph for graph-level oracle sweeps.
UndirectedGraph random_connected_graph(std::uint64_t seed, int n, double density);

bool graph_multisets_isomorphic(const std::vector<UndirectedGraph>& a,
                                const std::vector<UndirectedGraph>& b);

}  // namespace hgpfd

#endif  // HGPFD_ORACLE_HPP
