#include "hgpfd/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "hgpfd/union_find.hpp"

namespace hgpfd {

std::vector<VertexId> Hyperarc::vertices() const {
  std::vector<VertexId> all;
  all.reserve(tail.size() + head.size());
  all.insert(all.end(), tail.begin(), tail.end());
  all.insert(all.end(), head.begin(), head.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

int Hyperarc::vertex_count() const { return static_cast<int>(vertices().size()); }

Hyperarc canonical_arc(Hyperarc arc) {
  std::sort(arc.tail.begin(), arc.tail.end());
  arc.tail.erase(std::unique(arc.tail.begin(), arc.tail.end()), arc.tail.end());
  std::sort(arc.head.begin(), arc.head.end());
  arc.head.erase(std::unique(arc.head.begin(), arc.head.end()), arc.head.end());
  return arc;
}

DirectedHypergraph DirectedHypergraph::unchecked(std::vector<std::string> names,
                                                 std::vector<Hyperarc> arcs) {
  DirectedHypergraph h;
  h.names_ = std::move(names);
  for (std::size_t i = 0; i < h.names_.size(); ++i) {
    h.ids_.emplace(h.names_[i], static_cast<VertexId>(i));
  }
  h.arcs_ = std::move(arcs);
  for (const Hyperarc& a : h.arcs_) {
    h.arc_set_.insert(canonical_arc(a));
    h.rank_ = std::max(h.rank_, a.vertex_count());
  }
  return h;
}

VertexId DirectedHypergraph::add_vertex(std::string name) {
  if (ids_.contains(name)) {
    throw std::invalid_argument("duplicate vertex name: " + name);
  }
  VertexId id = static_cast<VertexId>(names_.size());
  ids_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

VertexId DirectedHypergraph::find_vertex(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  return it == ids_.end() ? VertexId{-1} : it->second;
}

bool DirectedHypergraph::add_arc(std::vector<VertexId> tail, std::vector<VertexId> head) {
  Hyperarc arc = canonical_arc({std::move(tail), std::move(head)});
  if (arc.tail.empty() || arc.head.empty()) {
    throw std::invalid_argument("arc side must be non-empty");
  }
  for (VertexId v : arc.tail) {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("arc references unknown vertex id");
  }
  for (VertexId v : arc.head) {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("arc references unknown vertex id");
  }
  if (arc.vertex_count() < 2) {
    throw std::invalid_argument("loop arc: |V(e)| must exceed 1");
  }
  if (!arc_set_.insert(arc).second) return false;
  rank_ = std::max(rank_, arc.vertex_count());
  arcs_.push_back(std::move(arc));
  return true;
}

bool DirectedHypergraph::has_arc(const Hyperarc& arc) const {
  return arc_set_.contains(arc);
}

std::vector<ValidationIssue> validate(const DirectedHypergraph& h) {
  std::vector<ValidationIssue> issues;
  if (h.vertex_count() == 0) {
    issues.push_back({IssueKind::no_vertices, -1, "hypergraph has no vertices"});
  }
  {
    std::vector<std::string> sorted_names = h.names();
    std::sort(sorted_names.begin(), sorted_names.end());
    for (std::size_t i = 1; i < sorted_names.size(); ++i) {
      if (sorted_names[i] == sorted_names[i - 1]) {
        issues.push_back({IssueKind::duplicate_name, -1,
                          "duplicate vertex name: " + sorted_names[i]});
      }
    }
  }

  std::set<Hyperarc> seen;
  const int n = h.vertex_count();
  for (int i = 0; i < h.arc_count(); ++i) {
    const Hyperarc& arc = h.arcs()[static_cast<std::size_t>(i)];
    const std::string tag = "arc " + std::to_string(i + 1);
    bool usable = true;
    if (arc.tail.empty()) {
      issues.push_back({IssueKind::empty_side, i, tag + " has an empty tail"});
      usable = false;
    }
    if (arc.head.empty()) {
      issues.push_back({IssueKind::empty_side, i, tag + " has an empty head"});
      usable = false;
    }
    for (VertexId v : arc.tail) {
      if (v < 0 || v >= n) {
        issues.push_back({IssueKind::dangling_vertex, i,
                          tag + " references unknown vertex id " + std::to_string(v)});
        usable = false;
      }
    }
    for (VertexId v : arc.head) {
      if (v < 0 || v >= n) {
        issues.push_back({IssueKind::dangling_vertex, i,
                          tag + " references unknown vertex id " + std::to_string(v)});
        usable = false;
      }
    }
    if (!usable) continue;

    auto check_side = [&](const std::vector<VertexId>& side, const char* which) {
      std::vector<VertexId> copy = side;
      std::sort(copy.begin(), copy.end());
      if (std::adjacent_find(copy.begin(), copy.end()) != copy.end()) {
        issues.push_back({IssueKind::duplicate_vertex_in_side, i,
                          tag + std::string(" repeats a vertex in its ") + which});
      }
    };
    check_side(arc.tail, "tail");
    check_side(arc.head, "head");

    Hyperarc canon = canonical_arc(arc);
    if (canon.vertex_count() < 2) {
      issues.push_back({IssueKind::loop, i, tag + " is a loop (|V(e)| = 1)"});
      continue;
    }
    if (!seen.insert(canon).second) {
      issues.push_back({IssueKind::multi_arc, i, tag + " duplicates an earlier arc"});
    }
  }
  return issues;
}

void ensure_valid(const DirectedHypergraph& h) {
  auto issues = validate(h);
  if (issues.empty()) return;
  std::ostringstream os;
  os << "invalid hypergraph:";
  for (const auto& issue : issues) os << ' ' << issue.message << ';';
  throw std::invalid_argument(os.str());
}

bool is_connected(const DirectedHypergraph& h) {
  const int n = h.vertex_count();
  if (n <= 1) return true;
  UnionFind uf(n);
  for (const Hyperarc& arc : h.arcs()) {
    auto vs = arc.vertices();
    for (std::size_t i = 1; i < vs.size(); ++i) uf.merge(vs[0], vs[i]);
  }
  const int root = uf.find(0);
  for (int v = 1; v < n; ++v) {
    if (uf.find(v) != root) return false;
  }
  return true;
}

DirectedHypergraph cartesian_product(const DirectedHypergraph& a,
                                     const DirectedHypergraph& b) {
  DirectedHypergraph p;
  const int na = a.vertex_count();
  const int nb = b.vertex_count();
  for (int y = 0; y < nb; ++y) {
    for (int x = 0; x < na; ++x) {
      p.add_vertex(a.name(x) + "|" + b.name(y));
    }
  }
  auto pid = [na](VertexId x, VertexId y) { return static_cast<VertexId>(y * na + x); };

  // Copies of a's arcs, one per vertex of b.
  for (const Hyperarc& e : a.arcs()) {
    for (int y = 0; y < nb; ++y) {
      std::vector<VertexId> tail, head;
      tail.reserve(e.tail.size());
      head.reserve(e.head.size());
      for (VertexId x : e.tail) tail.push_back(pid(x, y));
      for (VertexId x : e.head) head.push_back(pid(x, y));
      p.add_arc(std::move(tail), std::move(head));
    }
  }
  // Copies of b's arcs, one per vertex of a.
  for (const Hyperarc& f : b.arcs()) {
    for (int x = 0; x < na; ++x) {
      std::vector<VertexId> tail, head;
      tail.reserve(f.tail.size());
      head.reserve(f.head.size());
      for (VertexId y : f.tail) tail.push_back(pid(x, y));
      for (VertexId y : f.head) head.push_back(pid(x, y));
      p.add_arc(std::move(tail), std::move(head));
    }
  }
  return p;
}

}  // namespace hgpfd
