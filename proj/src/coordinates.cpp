#include "hgpfd/coordinates.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hgpfd {

Coordinatization::Coordinatization(int n, std::vector<int> sizes,
                                   std::vector<std::vector<int>> coords)
    : n_(n), sizes_(std::move(sizes)) {
  const int k = static_cast<int>(sizes_.size());
  if (n_ < 1) throw std::invalid_argument("coordinatization needs at least one vertex");
  if (static_cast<int>(coords.size()) != n_) {
    throw std::invalid_argument("coordinate table size mismatch");
  }
  long long grid = 1;
  for (int l : sizes_) {
    if (l < 2) throw std::invalid_argument("factor size must be at least 2");
    grid *= l;
    if (grid > n_) throw std::invalid_argument("grid larger than vertex set");
  }
  if (grid != n_) throw std::invalid_argument("grid does not cover the vertex set");

  strides_.assign(static_cast<std::size_t>(k), 1);
  for (int i = k - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * sizes_[i + 1];

  flat_.resize(static_cast<std::size_t>(n_) * k);
  grid_index_.resize(static_cast<std::size_t>(n_));
  vertex_at_.assign(static_cast<std::size_t>(n_), -1);
  for (int v = 0; v < n_; ++v) {
    const auto& row = coords[static_cast<std::size_t>(v)];
    if (static_cast<int>(row.size()) != k) {
      throw std::invalid_argument("coordinate vector arity mismatch");
    }
    int idx = 0;
    for (int i = 0; i < k; ++i) {
      if (row[i] < 0 || row[i] >= sizes_[i]) {
        throw std::invalid_argument("coordinate value out of range");
      }
      flat_[static_cast<std::size_t>(v) * k + i] = row[i];
      idx += row[i] * strides_[i];
    }
    if (vertex_at_[static_cast<std::size_t>(idx)] != -1) {
      throw std::invalid_argument("coordinate map is not a bijection");
    }
    vertex_at_[static_cast<std::size_t>(idx)] = v;
    grid_index_[static_cast<std::size_t>(v)] = idx;
  }
}

Coordinatization Coordinatization::trivial_k1() {
  return Coordinatization(1, {}, {{}});
}

VertexId Coordinatization::vertex_at(std::span<const int> vec) const {
  assert(static_cast<int>(vec.size()) == axis_count());
  int idx = 0;
  for (std::size_t i = 0; i < vec.size(); ++i) idx += vec[i] * strides_[i];
  return vertex_at_[static_cast<std::size_t>(idx)];
}

VertexId Coordinatization::increment(VertexId v, int axis) const {
  const int value = coord(v, axis);
  int idx = grid_index_[static_cast<std::size_t>(v)];
  if (value + 1 < sizes_[static_cast<std::size_t>(axis)]) {
    idx += strides_[static_cast<std::size_t>(axis)];
  } else {
    idx -= strides_[static_cast<std::size_t>(axis)] * (sizes_[static_cast<std::size_t>(axis)] - 1);
  }
  return vertex_at_[static_cast<std::size_t>(idx)];
}

Hyperarc Coordinatization::increment_arc(const Hyperarc& arc, int axis) const {
  Hyperarc out;
  out.tail.reserve(arc.tail.size());
  out.head.reserve(arc.head.size());
  for (VertexId v : arc.tail) out.tail.push_back(increment(v, axis));
  for (VertexId v : arc.head) out.head.push_back(increment(v, axis));
  return out;
}

std::optional<int> Coordinatization::single_differing_axis(VertexId a, VertexId b) const {
  auto ca = coords_of(a);
  auto cb = coords_of(b);
  int axis = -1;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) {
      if (axis >= 0) return std::nullopt;
      axis = static_cast<int>(i);
    }
  }
  if (axis < 0) throw InternalError("identical coordinate vectors for distinct vertices");
  return axis;
}

bool Coordinatization::coords_less(VertexId a, VertexId b) const {
  auto ca = coords_of(a);
  auto cb = coords_of(b);
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

namespace {

bool rank_side_less(const std::vector<VertexId>& a, const std::vector<VertexId>& b,
                    std::span<const int> rank) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [&](VertexId x, VertexId y) { return rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(y)]; });
}

bool rank_side_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  return a == b;  // same ids means same ranks
}

}  // namespace

bool rank_arc_less(const Hyperarc& a, const Hyperarc& b, std::span<const int> vertex_rank) {
  if (!rank_side_equal(a.tail, b.tail)) return rank_side_less(a.tail, b.tail, vertex_rank);
  return rank_side_less(a.head, b.head, vertex_rank);
}

CanonicalForm canonical_order(const DirectedHypergraph& h, const Coordinatization& c) {
  CanonicalForm out;
  const int n = h.vertex_count();
  out.vertex_order.resize(static_cast<std::size_t>(n));
  std::iota(out.vertex_order.begin(), out.vertex_order.end(), 0);
  std::sort(out.vertex_order.begin(), out.vertex_order.end(),
            [&](VertexId a, VertexId b) { return c.coords_less(a, b); });
  out.vertex_rank.resize(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    out.vertex_rank[static_cast<std::size_t>(out.vertex_order[static_cast<std::size_t>(r)])] = r;
  }

  auto by_rank = [&](VertexId a, VertexId b) {
    return out.vertex_rank[static_cast<std::size_t>(a)] < out.vertex_rank[static_cast<std::size_t>(b)];
  };
  out.arcs.reserve(h.arcs().size());
  out.arc_source.resize(h.arcs().size());
  std::iota(out.arc_source.begin(), out.arc_source.end(), 0);
  for (const Hyperarc& arc : h.arcs()) {
    Hyperarc sorted = arc;
    std::sort(sorted.tail.begin(), sorted.tail.end(), by_rank);
    std::sort(sorted.head.begin(), sorted.head.end(), by_rank);
    out.arcs.push_back(std::move(sorted));
  }
  std::sort(out.arc_source.begin(), out.arc_source.end(), [&](int i, int j) {
    return rank_arc_less(out.arcs[static_cast<std::size_t>(i)], out.arcs[static_cast<std::size_t>(j)],
                         out.vertex_rank);
  });
  std::vector<Hyperarc> sorted_arcs;
  sorted_arcs.reserve(out.arcs.size());
  for (int src : out.arc_source) sorted_arcs.push_back(std::move(out.arcs[static_cast<std::size_t>(src)]));
  out.arcs = std::move(sorted_arcs);
  return out;
}

bool arc_in_set(std::span<const Hyperarc> arcs, std::span<const int> vertex_rank,
                const Hyperarc& probe) {
  auto less = [&](const Hyperarc& a, const Hyperarc& b) { return rank_arc_less(a, b, vertex_rank); };
  return std::binary_search(arcs.begin(), arcs.end(), probe, less);
}

DirectedHypergraph extract_layer(const DirectedHypergraph& h, const Coordinatization& c,
                                 const std::vector<int>& axes, VertexId through) {
  const int n = h.vertex_count();
  std::vector<char> in_axes(static_cast<std::size_t>(c.axis_count()), 0);
  for (int a : axes) in_axes.at(static_cast<std::size_t>(a)) = 1;

  std::vector<char> member(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> remap(static_cast<std::size_t>(n), -1);
  DirectedHypergraph layer;
  for (int v = 0; v < n; ++v) {
    bool keep = true;
    for (int i = 0; i < c.axis_count(); ++i) {
      if (!in_axes[static_cast<std::size_t>(i)] && c.coord(v, i) != c.coord(through, i)) {
        keep = false;
        break;
      }
    }
    if (keep) {
      member[static_cast<std::size_t>(v)] = 1;
      remap[static_cast<std::size_t>(v)] = layer.add_vertex(h.name(v));
    }
  }
  for (const Hyperarc& arc : h.arcs()) {
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
    for (VertexId v : arc.tail) tail.push_back(remap[static_cast<std::size_t>(v)]);
    for (VertexId v : arc.head) head.push_back(remap[static_cast<std::size_t>(v)]);
    layer.add_arc(std::move(tail), std::move(head));
  }
  return layer;
}

}  // namespace hgpfd
