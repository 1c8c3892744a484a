#include "hgpfd/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "hgpfd/graph.hpp"

namespace hgpfd {

namespace {

// Role of a vertex inside one arc plus the arc's shape.
using ArcMark = std::tuple<int, int, int>;  // (|tail|, |head|, role)

std::vector<std::vector<ArcMark>> base_signatures(const DirectedHypergraph& h) {
  std::vector<std::vector<ArcMark>> sig(static_cast<std::size_t>(h.vertex_count()));
  for (const Hyperarc& arc : h.arcs()) {
    const int t = static_cast<int>(arc.tail.size());
    const int hd = static_cast<int>(arc.head.size());
    for (VertexId v : arc.vertices()) {
      const bool in_tail = std::binary_search(arc.tail.begin(), arc.tail.end(), v);
      const bool in_head = std::binary_search(arc.head.begin(), arc.head.end(), v);
      sig[static_cast<std::size_t>(v)].emplace_back(t, hd, (in_tail ? 1 : 0) + (in_head ? 2 : 0));
    }
  }
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

// Dense colors from base signatures refined twice by sorted neighbor colors,
// shared between both hypergraphs so equal structures get equal colors.
std::pair<std::vector<int>, std::vector<int>> refined_colors(const DirectedHypergraph& a,
                                                             const DirectedHypergraph& b,
                                                             const UndirectedGraph& ga,
                                                             const UndirectedGraph& gb) {
  std::map<std::vector<ArcMark>, int> palette;
  auto assign = [&](const DirectedHypergraph& h) {
    std::vector<int> colors(static_cast<std::size_t>(h.vertex_count()));
    auto sigs = base_signatures(h);
    for (int v = 0; v < h.vertex_count(); ++v) {
      auto [it, inserted] = palette.emplace(sigs[static_cast<std::size_t>(v)],
                                            static_cast<int>(palette.size()));
      colors[static_cast<std::size_t>(v)] = it->second;
    }
    return colors;
  };
  std::vector<int> ca = assign(a);
  std::vector<int> cb = assign(b);

  for (int round = 0; round < 2; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> next_palette;
    auto refine = [&](const std::vector<int>& colors, const UndirectedGraph& g) {
      std::vector<std::pair<int, std::vector<int>>> keys(colors.size());
      for (std::size_t v = 0; v < colors.size(); ++v) {
        std::vector<int> nb;
        nb.reserve(g.adj[v].size());
        for (int w : g.adj[v]) nb.push_back(colors[static_cast<std::size_t>(w)]);
        std::sort(nb.begin(), nb.end());
        keys[v] = {colors[v], std::move(nb)};
      }
      std::vector<int> out(colors.size());
      for (std::size_t v = 0; v < colors.size(); ++v) {
        auto [it, inserted] = next_palette.emplace(keys[v], static_cast<int>(next_palette.size()));
        out[v] = it->second;
      }
      return out;
    };
    ca = refine(ca, ga);
    cb = refine(cb, gb);
  }
  return {ca, cb};
}

struct Searcher {
  const DirectedHypergraph& a;
  const DirectedHypergraph& b;
  const UndirectedGraph& ga;
  const UndirectedGraph& gb;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<std::vector<int>> arcs_of;  // vertex of a -> arc indices
  std::vector<int> remaining;             // unmapped vertices per arc of a
  std::vector<VertexId> order;            // assignment order over a's vertices
  std::vector<VertexId> mapping;
  std::vector<char> used;
  std::uint64_t budget;
  bool out_of_budget = false;

  bool arc_image_present(int arc_idx) const {
    const Hyperarc& arc = a.arcs()[static_cast<std::size_t>(arc_idx)];
    Hyperarc image;
    image.tail.reserve(arc.tail.size());
    image.head.reserve(arc.head.size());
    for (VertexId v : arc.tail) image.tail.push_back(mapping[static_cast<std::size_t>(v)]);
    for (VertexId v : arc.head) image.head.push_back(mapping[static_cast<std::size_t>(v)]);
    std::sort(image.tail.begin(), image.tail.end());
    std::sort(image.head.begin(), image.head.end());
    return b.has_arc(image);
  }

  bool assign(std::size_t pos) {
    if (pos == order.size()) return true;
    if (budget == 0) {
      out_of_budget = true;
      return false;
    }
    const VertexId v = order[pos];
    for (VertexId w = 0; w < b.vertex_count(); ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (cb[static_cast<std::size_t>(w)] != ca[static_cast<std::size_t>(v)]) continue;
      // adjacency with already-mapped vertices must carry over
      bool consistent = true;
      for (int u : ga.adj[static_cast<std::size_t>(v)]) {
        VertexId mu = mapping[static_cast<std::size_t>(u)];
        if (mu >= 0 && !gb.has_edge(mu, w)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      if (budget == 0) {
        out_of_budget = true;
        return false;
      }
      --budget;

      mapping[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      bool arcs_ok = true;
      std::vector<int> completed;
      for (int ai : arcs_of[static_cast<std::size_t>(v)]) {
        if (--remaining[static_cast<std::size_t>(ai)] == 0) {
          completed.push_back(ai);
          if (arcs_ok && !arc_image_present(ai)) arcs_ok = false;
        }
      }
      if (arcs_ok && assign(pos + 1)) return true;
      for (int ai : arcs_of[static_cast<std::size_t>(v)]) ++remaining[static_cast<std::size_t>(ai)];
      mapping[static_cast<std::size_t>(v)] = -1;
      used[static_cast<std::size_t>(w)] = 0;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

IsomorphismResult isomorphic(const DirectedHypergraph& a, const DirectedHypergraph& b,
                             std::uint64_t budget) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count() ||
      a.rank() != b.rank()) {
    return {IsoStatus::not_isomorphic, {}};
  }
  const int n = a.vertex_count();
  UndirectedGraph ga = two_section(a);
  UndirectedGraph gb = two_section(b);
  if (ga.edge_count() != gb.edge_count()) {
    return {IsoStatus::not_isomorphic, {}};
  }
  auto [ca, cb] = refined_colors(a, b, ga, gb);
  {
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return {IsoStatus::not_isomorphic, {}};
  }

  Searcher s{a, b, ga, gb, ca, cb, {}, {}, {}, {}, {}, budget};
  s.arcs_of.resize(static_cast<std::size_t>(n));
  s.remaining.resize(a.arcs().size());
  for (std::size_t ai = 0; ai < a.arcs().size(); ++ai) {
    auto vs = a.arcs()[ai].vertices();
    s.remaining[ai] = static_cast<int>(vs.size());
    for (VertexId v : vs) s.arcs_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(ai));
  }

  // Assignment order: BFS over the 2-section starting from the rarest color,
  // so arc checks trigger as early as possible.
  std::vector<int> color_freq;
  for (int c : ca) {
    if (c >= static_cast<int>(color_freq.size())) color_freq.resize(static_cast<std::size_t>(c) + 1, 0);
    ++color_freq[static_cast<std::size_t>(c)];
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (;;) {
    VertexId start = -1;
    for (int v = 0; v < n; ++v) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      if (start < 0 ||
          color_freq[static_cast<std::size_t>(ca[static_cast<std::size_t>(v)])] <
              color_freq[static_cast<std::size_t>(ca[static_cast<std::size_t>(start)])]) {
        start = v;
      }
    }
    if (start < 0) break;
    std::vector<VertexId> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      VertexId u = queue[qi];
      s.order.push_back(u);
      for (int w : ga.adj[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
  }

  s.mapping.assign(static_cast<std::size_t>(n), -1);
  s.used.assign(static_cast<std::size_t>(n), 0);
  if (s.assign(0)) return {IsoStatus::isomorphic, s.mapping};
  if (s.out_of_budget) return {IsoStatus::budget_exceeded, {}};
  return {IsoStatus::not_isomorphic, {}};
}

bool multisets_isomorphic(const std::vector<DirectedHypergraph>& a,
                          const std::vector<DirectedHypergraph>& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> ia(a.size()), ib(b.size());
  std::iota(ia.begin(), ia.end(), 0);
  std::iota(ib.begin(), ib.end(), 0);
  auto key = [](const DirectedHypergraph& h) {
    return std::tuple<int, int, int>(h.vertex_count(), h.arc_count(), h.rank());
  };
  auto by_key = [&](const std::vector<DirectedHypergraph>& hs) {
    return [&hs, key](int x, int y) { return key(hs[static_cast<std::size_t>(x)]) < key(hs[static_cast<std::size_t>(y)]); };
  };
  std::sort(ia.begin(), ia.end(), by_key(a));
  std::sort(ib.begin(), ib.end(), by_key(b));
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (key(a[static_cast<std::size_t>(ia[i])]) != key(b[static_cast<std::size_t>(ib[i])])) return false;
  }

  // exact matching inside each (n, m, rank) group; groups are tiny
  std::vector<char> taken(b.size(), 0);
  auto match = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == ia.size()) return true;
    const auto& ha = a[static_cast<std::size_t>(ia[pos])];
    for (std::size_t j = 0; j < ib.size(); ++j) {
      if (taken[j]) continue;
      const auto& hb = b[static_cast<std::size_t>(ib[j])];
      if (key(ha) != key(hb)) continue;
      if (isomorphic(ha, hb).ok()) {
        taken[j] = 1;
        if (self(self, pos + 1)) return true;
        taken[j] = 0;
      }
    }
    return false;
  };
  return match(match, 0);
}

}  // namespace hgpfd
