#include "hgpfd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "hgpfd/isomorphism.hpp"
#include "hgpfd/union_find.hpp"

namespace hgpfd {

namespace {

bool is_prime_number(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Backtracking search for one a x b grid that realizes h as a product.
struct GridSearch {
  const DirectedHypergraph& h;
  int rows, cols;
  std::vector<std::pair<int, int>> cell;     // per vertex; (-1,-1) unassigned
  std::vector<char> cell_used;               // rows * cols
  std::vector<VertexId> order;               // weak-BFS assignment order
  std::vector<std::vector<int>> arcs_of;     // vertex -> arc indices
  std::vector<VertexId> vertex_at_cell;

  explicit GridSearch(const DirectedHypergraph& hg, int a, int b)
      : h(hg), rows(a), cols(b) {
    const int n = h.vertex_count();
    cell.assign(static_cast<std::size_t>(n), {-1, -1});
    cell_used.assign(static_cast<std::size_t>(rows * cols), 0);
    vertex_at_cell.assign(static_cast<std::size_t>(rows * cols), -1);
    arcs_of.resize(static_cast<std::size_t>(n));
    for (std::size_t ai = 0; ai < h.arcs().size(); ++ai) {
      for (VertexId v : h.arcs()[ai].vertices()) {
        arcs_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(ai));
      }
    }
    UndirectedGraph section = two_section(h);
    auto rank = bfs_ranks(section, 0);
    order.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(rank[static_cast<std::size_t>(v)])] = v;
  }

  int cell_id(int r, int c) const { return r * cols + c; }

  // All assigned vertices of every arc of v must share a row or a column.
  bool arcs_still_pure(VertexId v) const {
    for (int ai : arcs_of[static_cast<std::size_t>(v)]) {
      int row = -1, col = -1;
      bool rows_equal = true, cols_equal = true;
      for (VertexId u : h.arcs()[static_cast<std::size_t>(ai)].vertices()) {
        const auto [r, c] = cell[static_cast<std::size_t>(u)];
        if (r < 0) continue;
        if (row < 0) {
          row = r;
          col = c;
          continue;
        }
        if (r != row) rows_equal = false;
        if (c != col) cols_equal = false;
      }
      if (!rows_equal && !cols_equal) return false;
    }
    return true;
  }

  bool grid_is_product() const {
    std::set<Hyperarc> row_arcs, col_arcs;  // projections onto rows / cols
    long long row_count = 0, col_count = 0;
    for (const Hyperarc& arc : h.arcs()) {
      auto vs = arc.vertices();
      const auto [r0, c0] = cell[static_cast<std::size_t>(vs.front())];
      bool same_row = true, same_col = true;
      for (VertexId v : vs) {
        const auto [r, c] = cell[static_cast<std::size_t>(v)];
        same_row = same_row && r == r0;
        same_col = same_col && c == c0;
      }
      Hyperarc proj;
      if (same_col) {  // varies along rows
        for (VertexId v : arc.tail) proj.tail.push_back(cell[static_cast<std::size_t>(v)].first);
        for (VertexId v : arc.head) proj.head.push_back(cell[static_cast<std::size_t>(v)].first);
        row_arcs.insert(canonical_arc(std::move(proj)));
        ++row_count;
      } else if (same_row) {  // varies along columns
        for (VertexId v : arc.tail) proj.tail.push_back(cell[static_cast<std::size_t>(v)].second);
        for (VertexId v : arc.head) proj.head.push_back(cell[static_cast<std::size_t>(v)].second);
        col_arcs.insert(canonical_arc(std::move(proj)));
        ++col_count;
      } else {
        return false;
      }
    }
    // every arc must be a lift of its projection at every slice
    if (row_count != static_cast<long long>(row_arcs.size()) * cols) return false;
    if (col_count != static_cast<long long>(col_arcs.size()) * rows) return false;
    for (const Hyperarc& proj : row_arcs) {
      for (int c = 0; c < cols; ++c) {
        Hyperarc lifted;
        for (VertexId r : proj.tail) lifted.tail.push_back(vertex_at_cell[static_cast<std::size_t>(cell_id(r, c))]);
        for (VertexId r : proj.head) lifted.head.push_back(vertex_at_cell[static_cast<std::size_t>(cell_id(r, c))]);
        if (!h.has_arc(canonical_arc(std::move(lifted)))) return false;
      }
    }
    for (const Hyperarc& proj : col_arcs) {
      for (int r = 0; r < rows; ++r) {
        Hyperarc lifted;
        for (VertexId c : proj.tail) lifted.tail.push_back(vertex_at_cell[static_cast<std::size_t>(cell_id(r, c))]);
        for (VertexId c : proj.head) lifted.head.push_back(vertex_at_cell[static_cast<std::size_t>(cell_id(r, c))]);
        if (!h.has_arc(canonical_arc(std::move(lifted)))) return false;
      }
    }
    return true;
  }

  bool search(std::size_t pos) {
    if (pos == order.size()) return grid_is_product();
    const VertexId v = order[pos];
    // vertex 0 is anchored at the origin; row/column relabelings make this safe
    const bool anchored = pos == 0;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (anchored && (r != 0 || c != 0)) continue;
        const int id = cell_id(r, c);
        if (cell_used[static_cast<std::size_t>(id)]) continue;
        cell[static_cast<std::size_t>(v)] = {r, c};
        cell_used[static_cast<std::size_t>(id)] = 1;
        vertex_at_cell[static_cast<std::size_t>(id)] = v;
        if (arcs_still_pure(v) && search(pos + 1)) return true;
        cell[static_cast<std::size_t>(v)] = {-1, -1};
        cell_used[static_cast<std::size_t>(id)] = 0;
        vertex_at_cell[static_cast<std::size_t>(id)] = -1;
      }
    }
    return false;
  }

  // Factors of the found grid, vertices named "1".."rows"/"1".."cols".
  std::pair<DirectedHypergraph, DirectedHypergraph> materialize() const {
    DirectedHypergraph a, b;
    for (int r = 0; r < rows; ++r) a.add_vertex(std::to_string(r + 1));
    for (int c = 0; c < cols; ++c) b.add_vertex(std::to_string(c + 1));
    for (const Hyperarc& arc : h.arcs()) {
      auto vs = arc.vertices();
      const auto [r0, c0] = cell[static_cast<std::size_t>(vs.front())];
      bool same_col = true;
      for (VertexId v : vs) same_col = same_col && cell[static_cast<std::size_t>(v)].second == c0;
      std::vector<VertexId> tail, head;
      if (same_col) {
        for (VertexId v : arc.tail) tail.push_back(cell[static_cast<std::size_t>(v)].first);
        for (VertexId v : arc.head) head.push_back(cell[static_cast<std::size_t>(v)].first);
        a.add_arc(std::move(tail), std::move(head));
      } else {
        for (VertexId v : arc.tail) tail.push_back(cell[static_cast<std::size_t>(v)].second);
        for (VertexId v : arc.head) head.push_back(cell[static_cast<std::size_t>(v)].second);
        b.add_arc(std::move(tail), std::move(head));
      }
    }
    return {std::move(a), std::move(b)};
  }
};

void brute_force_rec(const DirectedHypergraph& h, std::vector<DirectedHypergraph>& out) {
  const int n = h.vertex_count();
  if (n == 1) return;  // K1 contributes nothing
  for (int a = 2; a * a <= n; ++a) {
    if (n % a != 0) continue;
    GridSearch search(h, a, n / a);
    if (search.search(0)) {
      auto [fa, fb] = search.materialize();
      brute_force_rec(fa, out);
      brute_force_rec(fb, out);
      return;
    }
  }
  out.push_back(h);  // prime
}

std::vector<DirectedHypergraph> brute_force_capped(const DirectedHypergraph& h, int cap) {
  ensure_valid(h);
  if (!is_connected(h)) throw std::invalid_argument("oracle requires a connected hypergraph");
  if (h.vertex_count() > cap) {
    throw std::invalid_argument("oracle cap exceeded: n = " + std::to_string(h.vertex_count()) +
                                " > " + std::to_string(cap));
  }
  std::vector<DirectedHypergraph> out;
  brute_force_rec(h, out);
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

std::vector<VertexId> sample_distinct(std::mt19937_64& rng, int n, int count) {
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
  }
  pool.resize(static_cast<std::size_t>(count));
  return pool;
}

// Splits a vertex set into tail/head; every vertex lands in at least one
// side and both sides are non-empty.
std::pair<std::vector<VertexId>, std::vector<VertexId>> split_sides(std::mt19937_64& rng,
                                                                    const std::vector<VertexId>& vs) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<VertexId> tail, head;
    std::uniform_int_distribution<int> role(0, 2);
    for (VertexId v : vs) {
      switch (role(rng)) {
        case 0: tail.push_back(v); break;
        case 1: head.push_back(v); break;
        default:
          tail.push_back(v);
          head.push_back(v);
      }
    }
    if (!tail.empty() && !head.empty()) return {tail, head};
  }
  return {vs, vs};  // fall back to an undirected arc
}

}  // namespace

std::vector<DirectedHypergraph> brute_force_pfd_hypergraph(const DirectedHypergraph& h) {
  return brute_force_capped(h, 8);
}

std::vector<UndirectedGraph> brute_force_pfd_graph(const UndirectedGraph& g) {
  if (g.vertex_count > 12) {
    throw std::invalid_argument("graph oracle cap exceeded: n = " + std::to_string(g.vertex_count));
  }
  if (!graph_connected(g)) throw std::invalid_argument("oracle requires a connected graph");
  auto factors = brute_force_capped(to_hypergraph(g), 12);
  std::vector<UndirectedGraph> out;
  out.reserve(factors.size());
  for (const auto& f : factors) {
    std::vector<std::pair<int, int>> edges;
    for (const Hyperarc& arc : f.arcs()) {
      auto vs = arc.vertices();
      edges.emplace_back(vs[0], vs[1]);
    }
    out.push_back(UndirectedGraph::from_edges(f.vertex_count(), std::move(edges)));
  }
  return out;
}

DirectedHypergraph random_connected_hypergraph(const GeneratorConfig& cfg) {
  if (cfg.n < 1 || cfg.r < 2 || cfg.arc_density <= 0.0) {
    throw std::invalid_argument("generator config violates n >= 1, r >= 2, density > 0");
  }
  std::mt19937_64 rng(cfg.seed);
  DirectedHypergraph h;
  for (int v = 0; v < cfg.n; ++v) h.add_vertex(std::to_string(v + 1));
  if (cfg.n == 1) return h;

  const int target = std::max(1, static_cast<int>(std::llround(cfg.arc_density * cfg.n)));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int attempts = 50 * target + 100;
  while (h.arc_count() < target && attempts-- > 0) {
    // occasionally nest a new arc properly inside an existing one
    if (h.arc_count() > 0 && coin(rng) < 0.3) {
      std::uniform_int_distribution<int> pick(0, h.arc_count() - 1);
      const Hyperarc& outer = h.arcs()[static_cast<std::size_t>(pick(rng))];
      if (outer.vertex_count() >= 3) {
        auto subset = [&](const std::vector<VertexId>& side) {
          std::vector<VertexId> sub;
          for (VertexId v : side) {
            if (coin(rng) < 0.6) sub.push_back(v);
          }
          if (sub.empty()) sub.push_back(side[static_cast<std::size_t>(
              std::uniform_int_distribution<int>(0, static_cast<int>(side.size()) - 1)(rng))]);
          return sub;
        };
        Hyperarc inner{subset(outer.tail), subset(outer.head)};
        inner = canonical_arc(std::move(inner));
        if (inner.vertex_count() >= 2 && inner != outer) {
          h.add_arc(inner.tail, inner.head);
        }
        continue;
      }
    }
    std::uniform_int_distribution<int> size_dist(2, std::min(cfg.r, cfg.n));
    auto vs = sample_distinct(rng, cfg.n, size_dist(rng));
    std::sort(vs.begin(), vs.end());
    if (coin(rng) < 1.0 - cfg.directed_fraction) {
      h.add_arc(vs, vs);
    } else {
      auto [tail, head] = split_sides(rng, vs);
      h.add_arc(std::move(tail), std::move(head));
    }
  }

  // bridge remaining weak components, smallest representatives first
  for (;;) {
    UnionFind uf(cfg.n);
    for (const Hyperarc& arc : h.arcs()) {
      auto vs = arc.vertices();
      for (std::size_t i = 1; i < vs.size(); ++i) uf.merge(vs[0], vs[i]);
    }
    std::vector<VertexId> reps;
    std::vector<char> seen(static_cast<std::size_t>(cfg.n), 0);
    for (int v = 0; v < cfg.n; ++v) {
      int root = uf.find(v);
      if (!seen[static_cast<std::size_t>(root)]) {
        seen[static_cast<std::size_t>(root)] = 1;
        reps.push_back(v);
      }
    }
    if (reps.size() <= 1) break;
    if (coin(rng) < 1.0 - cfg.directed_fraction) {
      h.add_arc({reps[0], reps[1]}, {reps[0], reps[1]});
    } else {
      h.add_arc({reps[0]}, {reps[1]});
    }
  }
  return h;
}

DirectedHypergraph random_prime_hypergraph(const GeneratorConfig& cfg) {
  if (cfg.n > 8 && !is_prime_number(cfg.n)) {
    throw std::invalid_argument("primality certification needs n <= 8 or prime n");
  }
  constexpr int kBudget = 10'000;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    GeneratorConfig sub = cfg;
    sub.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(attempt));
    DirectedHypergraph h = random_connected_hypergraph(sub);
    if (is_prime_number(cfg.n)) return h;  // no grid of sizes >= 2 exists
    if (brute_force_pfd_hypergraph(h).size() == 1) return h;
  }
  throw std::runtime_error("prime sampling budget exhausted");
}

namespace {

DirectedHypergraph shuffle_vertices(const DirectedHypergraph& h, std::mt19937_64& rng) {
  const int n = h.vertex_count();
  std::vector<VertexId> old_of_new(static_cast<std::size_t>(n));
  std::iota(old_of_new.begin(), old_of_new.end(), 0);
  std::shuffle(old_of_new.begin(), old_of_new.end(), rng);
  std::vector<VertexId> new_of_old(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) new_of_old[static_cast<std::size_t>(old_of_new[static_cast<std::size_t>(v)])] = v;

  DirectedHypergraph out;
  for (int v = 0; v < n; ++v) out.add_vertex(std::to_string(v + 1));
  for (const Hyperarc& arc : h.arcs()) {
    std::vector<VertexId> tail, head;
    tail.reserve(arc.tail.size());
    head.reserve(arc.head.size());
    for (VertexId v : arc.tail) tail.push_back(new_of_old[static_cast<std::size_t>(v)]);
    for (VertexId v : arc.head) head.push_back(new_of_old[static_cast<std::size_t>(v)]);
    out.add_arc(std::move(tail), std::move(head));
  }
  return out;
}

}  // namespace

ProductSample random_product(const GeneratorConfig& cfg, int factor_count) {
  if (factor_count < 2 || factor_count > 3) {
    throw std::invalid_argument("random_product supports 2 or 3 factors");
  }
  std::mt19937_64 rng(mix_seed(cfg.seed, 0xF0));
  ProductSample sample;
  for (int i = 0; i < factor_count; ++i) {
    GeneratorConfig sub = cfg;
    sub.n = std::uniform_int_distribution<int>(2, std::min(cfg.n, 8))(rng);
    sub.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(i) + 1);
    sample.factors.push_back(random_prime_hypergraph(sub));
  }
  DirectedHypergraph product = sample.factors[0];
  for (std::size_t i = 1; i < sample.factors.size(); ++i) {
    product = cartesian_product(product, sample.factors[i]);
  }
  sample.product = shuffle_vertices(product, rng);
  return sample;
}

ProductSample random_bounded_rank_product(std::uint64_t seed, int log2_n, int max_rank) {
  std::mt19937_64 rng(mix_seed(seed, 0xB0));
  ProductSample sample;
  int remaining = log2_n;
  int index = 0;
  while (remaining > 0) {
    int bits = (remaining >= 2 && std::uniform_int_distribution<int>(0, 1)(rng) == 1) ? 2 : 1;
    GeneratorConfig sub;
    sub.seed = mix_seed(seed, static_cast<std::uint64_t>(++index));
    sub.n = 1 << bits;
    sub.r = std::min(max_rank, sub.n);
    sub.arc_density = 1.0;
    sub.directed_fraction = 0.5;
    sample.factors.push_back(random_prime_hypergraph(sub));
    remaining -= bits;
  }
  DirectedHypergraph product = sample.factors[0];
  for (std::size_t i = 1; i < sample.factors.size(); ++i) {
    product = cartesian_product(product, sample.factors[i]);
  }
  sample.product = shuffle_vertices(product, rng);
  return sample;
}

UndirectedGraph random_connected_graph(std::uint64_t seed, int n, double density) {
  std::mt19937_64 rng(mix_seed(seed, 0x60));
  std::vector<std::pair<int, int>> edges;
  if (n > 1) {
    const int target = std::max(n - 1, static_cast<int>(std::llround(density * n)));
    std::uniform_int_distribution<int> pick(0, n - 1);
    int attempts = 50 * target + 100;
    while (static_cast<int>(edges.size()) < target && attempts-- > 0) {
      int u = pick(rng), v = pick(rng);
      if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    for (;;) {
      UnionFind uf(n);
      for (auto [u, v] : edges) uf.merge(u, v);
      std::vector<VertexId> reps;
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      for (int v = 0; v < n; ++v) {
        int root = uf.find(v);
        if (!seen[static_cast<std::size_t>(root)]) {
          seen[static_cast<std::size_t>(root)] = 1;
          reps.push_back(v);
        }
      }
      if (reps.size() <= 1) break;
      edges.emplace_back(std::min(reps[0], reps[1]), std::max(reps[0], reps[1]));
      std::sort(edges.begin(), edges.end());
    }
  }
  return UndirectedGraph::from_edges(n, std::move(edges));
}

bool graph_multisets_isomorphic(const std::vector<UndirectedGraph>& a,
                                const std::vector<UndirectedGraph>& b) {
  std::vector<DirectedHypergraph> ha, hb;
  ha.reserve(a.size());
  hb.reserve(b.size());
  for (const auto& g : a) ha.push_back(to_hypergraph(g));
  for (const auto& g : b) hb.push_back(to_hypergraph(g));
  return multisets_isomorphic(ha, hb);
}

}  // namespace hgpfd
