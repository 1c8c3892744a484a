#include "hgpfd/hyper_pfd.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "hgpfd/union_find.hpp"

namespace hgpfd {

namespace {

std::pair<VertexId, VertexId> first_two_distinct(const Hyperarc& arc) {
  const VertexId x = arc.tail.front();
  for (VertexId v : arc.tail) {
    if (v != x) return {x, v};
  }
  for (VertexId v : arc.head) {
    if (v != x) return {x, v};
  }
  throw InternalError("arc covers a single vertex");
}

// Direction of an arc: the one coordinate its vertices vary in. Any two
// distinct vertices determine it; in debug builds all pairs are checked.
int arc_axis(const Coordinatization& coords, const Hyperarc& arc) {
  auto [x, y] = first_two_distinct(arc);
  auto axis = coords.single_differing_axis(x, y);
  if (!axis) {
    throw InternalError("arc spans more than one pre-layer; pre-coordinatization is broken");
  }
#ifndef NDEBUG
  auto vs = arc.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto a = coords.single_differing_axis(vs[i], vs[j]);
      assert(a && *a == *axis);
    }
  }
#endif
  return *axis;
}

}  // namespace

Preprocessed preprocessing(const DirectedHypergraph& h) {
  ensure_valid(h);
  if (!is_connected(h)) {
    throw std::invalid_argument("preprocessing requires a connected hypergraph");
  }
  Preprocessed pre;
  pre.section = two_section(h);
  pre.section_pfd = pfd_graph(pre.section);
  pre.axis_count = pre.section_pfd.coords.axis_count();
  pre.canon = canonical_order(h, pre.section_pfd.coords);
  return pre;
}

MergeGraph build_merge_graph(const Preprocessed& pre) {
  MergeGraph mg;
  mg.axis_count = pre.axis_count;
  const int k = pre.axis_count;
  if (k <= 1) return mg;  // nothing to merge

  const Coordinatization& coords = pre.coords();
  std::set<std::pair<int, int>> edges;
  for (std::size_t ai = 0; ai < pre.canon.arcs.size(); ++ai) {
    const Hyperarc& arc = pre.canon.arcs[ai];
    const int j = arc_axis(coords, arc);
    for (int i = 0; i < k; ++i) {
      if (i == j) continue;
      Hyperarc inc = coords.increment_arc(arc, i);
      if (!arc_in_set(pre.canon.arcs, pre.canon.vertex_rank, inc)) {
        edges.insert({std::min(i, j), std::max(i, j)});
        mg.triggers.push_back({static_cast<int>(ai), j, i});
      }
    }
  }
  mg.edges.assign(edges.begin(), edges.end());
  return mg;
}

std::vector<std::vector<int>> MergeGraph::components() const {
  UnionFind uf(axis_count);
  for (const auto& [i, j] : edges) uf.merge(i, j);
  std::vector<int> slot(static_cast<std::size_t>(axis_count), -1);
  std::vector<std::vector<int>> comps;
  for (int a = 0; a < axis_count; ++a) {
    int root = uf.find(a);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(a);
  }
  return comps;
}

Factorization combine(const DirectedHypergraph& h, const Preprocessed& pre,
                      const MergeGraph& merges) {
  Factorization out;
  const int n = h.vertex_count();
  const int k = pre.axis_count;
  const Coordinatization& fine = pre.coords();

  out.partition = merges.components();
  const int parts = static_cast<int>(out.partition.size());
  std::vector<int> part_of(static_cast<std::size_t>(k), -1);
  for (int s = 0; s < parts; ++s) {
    for (int a : out.partition[static_cast<std::size_t>(s)]) part_of[static_cast<std::size_t>(a)] = s;
  }

  if (parts == 0) {
    // K1: no axes, no factors
    out.coords = Coordinatization::trivial_k1();
    return out;
  }

  // Arc colors: the component of the arc's direction.
  std::vector<int> arc_part(pre.canon.arcs.size());
  for (std::size_t ai = 0; ai < pre.canon.arcs.size(); ++ai) {
    arc_part[ai] = part_of[static_cast<std::size_t>(arc_axis(fine, pre.canon.arcs[ai]))];
  }

  // The 2-section inherits each arc's color; two arcs sharing an edge always
  // share a direction, so a clash would mean a broken pre-coordinatization.
  {
    EdgeColoring merged;
    merged.color_count = parts;
    merged.colors.assign(static_cast<std::size_t>(pre.section.edge_count()), -1);
    for (std::size_t ai = 0; ai < pre.canon.arcs.size(); ++ai) {
      auto vs = pre.canon.arcs[ai].vertices();
      for (std::size_t x = 0; x < vs.size(); ++x) {
        for (std::size_t y = x + 1; y < vs.size(); ++y) {
          const int ei = pre.section.edge_index(vs[x], vs[y]);
          int& slot = merged.colors[static_cast<std::size_t>(ei)];
          if (slot >= 0 && slot != arc_part[ai]) {
            throw InternalError("2-section edge claimed by two factor colors");
          }
          slot = arc_part[ai];
        }
      }
    }
    for (int c : merged.colors) {
      if (c < 0) throw InternalError("2-section edge not covered by any arc");
    }
    // Coordinates for the merged coloring must exist; this is the
    // product-relation check for the combined classes.
    auto res = coordinates_from_coloring(pre.section, merged);
    if (!std::holds_alternative<Coordinatization>(res)) {
      throw InternalError("combined coloring is not a product relation: " +
                          std::get<ColoringDiagnostic>(res).describe());
    }
  }

  // Canonical merged coordinates: the value of a vertex on merged axis s is
  // the lexicographic rank of its fine coordinates projected onto that
  // component's axes. Gives deterministic factor vertex names.
  std::vector<std::vector<int>> merged_coords(static_cast<std::size_t>(n),
                                              std::vector<int>(static_cast<std::size_t>(parts)));
  std::vector<int> merged_sizes(static_cast<std::size_t>(parts));
  for (int s = 0; s < parts; ++s) {
    const auto& axes = out.partition[static_cast<std::size_t>(s)];
    std::vector<std::vector<int>> projections(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& p = projections[static_cast<std::size_t>(v)];
      p.reserve(axes.size());
      for (int a : axes) p.push_back(fine.coord(v, a));
    }
    std::vector<std::vector<int>> distinct = projections;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    merged_sizes[static_cast<std::size_t>(s)] = static_cast<int>(distinct.size());
    for (int v = 0; v < n; ++v) {
      const auto& p = projections[static_cast<std::size_t>(v)];
      const auto it = std::lower_bound(distinct.begin(), distinct.end(), p);
      merged_coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] =
          static_cast<int>(it - distinct.begin());
    }
  }
  out.coords = Coordinatization(n, merged_sizes, merged_coords);

  // Factor s: the layer through the all-ones vertex, vertices renamed by
  // their coordinate value on axis s.
  std::vector<int> zero(static_cast<std::size_t>(parts), 0);
  const VertexId root = out.coords.vertex_at(zero);
  for (int s = 0; s < parts; ++s) {
    const int size = merged_sizes[static_cast<std::size_t>(s)];
    std::vector<VertexId> vertex_of_value(static_cast<std::size_t>(size), -1);
    std::vector<char> member(static_cast<std::size_t>(n), 0);
    std::vector<int> value_of(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
      bool inside = true;
      for (int t = 0; t < parts; ++t) {
        if (t != s && out.coords.coord(v, t) != out.coords.coord(root, t)) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      member[static_cast<std::size_t>(v)] = 1;
      const int value = out.coords.coord(v, s);
      vertex_of_value[static_cast<std::size_t>(value)] = v;
      value_of[static_cast<std::size_t>(v)] = value;
    }
    DirectedHypergraph factor;
    for (int value = 0; value < size; ++value) {
      if (vertex_of_value[static_cast<std::size_t>(value)] < 0) {
        throw InternalError("factor layer misses a coordinate value");
      }
      factor.add_vertex(std::to_string(value + 1));
    }
    for (const Hyperarc& arc : pre.canon.arcs) {
      bool inside = true;
      for (VertexId v : arc.vertices()) {
        if (!member[static_cast<std::size_t>(v)]) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      std::vector<VertexId> tail, head;
      tail.reserve(arc.tail.size());
      head.reserve(arc.head.size());
      for (VertexId v : arc.tail) tail.push_back(value_of[static_cast<std::size_t>(v)]);
      for (VertexId v : arc.head) head.push_back(value_of[static_cast<std::size_t>(v)]);
      factor.add_arc(std::move(tail), std::move(head));
    }
    out.factors.push_back(std::move(factor));
  }
  return out;
}

void verify_factorization(const DirectedHypergraph& h, const Factorization& f) {
  const int n = h.vertex_count();
  long long grid = 1;
  for (const auto& factor : f.factors) grid *= factor.vertex_count();
  if (grid != n) throw InternalError("factor sizes do not multiply to the vertex count");
  if (f.coords.vertex_count() != n || f.coords.axis_count() != static_cast<int>(f.factors.size())) {
    throw InternalError("coordinatization shape does not match the factors");
  }
  for (std::size_t s = 0; s < f.factors.size(); ++s) {
    if (f.coords.sizes()[s] != f.factors[s].vertex_count()) {
      throw InternalError("factor size disagrees with its coordinate range");
    }
    if (!validate(f.factors[s]).empty()) throw InternalError("factor fails validation");
    if (!is_connected(f.factors[s])) throw InternalError("factor is disconnected");
  }

  long long expected_arcs = 0;
  for (std::size_t s = 0; s < f.factors.size(); ++s) {
    expected_arcs += static_cast<long long>(f.factors[s].arc_count()) *
                     (n / f.factors[s].vertex_count());
  }
  if (expected_arcs != h.arc_count()) {
    throw InternalError("arc count does not match the product of the factors");
  }

  for (const Hyperarc& arc : h.arcs()) {
    auto [x, y] = first_two_distinct(arc);
    auto axis = f.coords.single_differing_axis(x, y);
    if (!axis) throw InternalError("arc changes more than one factor coordinate");
    const int s = *axis;
    Hyperarc projected;
    projected.tail.reserve(arc.tail.size());
    projected.head.reserve(arc.head.size());
    for (VertexId v : arc.tail) projected.tail.push_back(f.coords.coord(v, s));
    for (VertexId v : arc.head) projected.head.push_back(f.coords.coord(v, s));
    projected = canonical_arc(std::move(projected));
    if (!f.factors[static_cast<std::size_t>(s)].has_arc(projected)) {
      throw InternalError("projected arc missing from its factor");
    }
  }
}

Factorization pfd_hypergraph(const DirectedHypergraph& h) {
  ensure_valid(h);
  if (!is_connected(h)) {
    throw std::invalid_argument("prime factorization requires a connected hypergraph");
  }
  Factorization f;
  if (h.vertex_count() == 1) {
    f.coords = Coordinatization::trivial_k1();
    verify_factorization(h, f);
    return f;
  }
  Preprocessed pre = preprocessing(h);
  MergeGraph merges = build_merge_graph(pre);
  f = combine(h, pre, merges);
  verify_factorization(h, f);
  return f;
}

}  // namespace hgpfd
