#include "hgpfd/io.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "hgpfd/graph.hpp"

namespace hgpfd {

DirectedHypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_hypergraph(in);
}

DirectedHypergraph read_hypergraph(std::istream& in) {
  DirectedHypergraph h;
  std::string line;
  int line_no = 0;
  bool saw_header = false;

  auto vertex_of = [&](const std::string& name) {
    VertexId id = h.find_vertex(name);
    return id >= 0 ? id : h.add_vertex(name);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;  // blank
    if (keyword[0] == '#') continue;

    if (!saw_header) {
      std::string version;
      if (keyword != "dhg" || !(ls >> version) || version != "1") {
        throw ParseError(line_no, "expected header \"dhg 1\"");
      }
      saw_header = true;
      continue;
    }

    if (keyword == "vertex") {
      std::string name, extra;
      if (!(ls >> name)) throw ParseError(line_no, "vertex line needs a name");
      if (ls >> extra) throw ParseError(line_no, "vertex line takes a single name");
      if (h.find_vertex(name) >= 0) throw ParseError(line_no, "duplicate vertex name: " + name);
      h.add_vertex(name);
      continue;
    }

    if (keyword == "arc") {
      std::vector<std::string> tail_names, head_names;
      bool after_arrow = false;
      std::string token;
      while (ls >> token) {
        if (token == "->") {
          if (after_arrow) throw ParseError(line_no, "arc line has two \"->\" separators");
          after_arrow = true;
        } else {
          (after_arrow ? head_names : tail_names).push_back(token);
        }
      }
      if (!after_arrow) throw ParseError(line_no, "arc line needs a \"->\" separator");
      if (tail_names.empty()) throw ParseError(line_no, "arc has an empty tail");
      if (head_names.empty()) throw ParseError(line_no, "arc has an empty head");

      std::vector<VertexId> tail, head;
      for (const auto& name : tail_names) tail.push_back(vertex_of(name));
      for (const auto& name : head_names) head.push_back(vertex_of(name));
      auto check_distinct = [&](std::vector<VertexId> side, const char* which) {
        std::sort(side.begin(), side.end());
        if (std::adjacent_find(side.begin(), side.end()) != side.end()) {
          throw ParseError(line_no, std::string("arc repeats a vertex in its ") + which);
        }
      };
      check_distinct(tail, "tail");
      check_distinct(head, "head");
      Hyperarc canon = canonical_arc({tail, head});
      if (canon.vertex_count() < 2) {
        throw ParseError(line_no, "loop arc: |V(e)| must exceed 1");
      }
      if (h.has_arc(canon)) throw ParseError(line_no, "duplicate arc");
      h.add_arc(std::move(tail), std::move(head));
      continue;
    }

    throw ParseError(line_no, "unknown keyword: " + keyword);
  }
  if (!saw_header) throw ParseError(line_no, "missing header \"dhg 1\"");
  if (h.vertex_count() == 0) throw ParseError(line_no, "hypergraph has no vertices");
  return h;
}

std::string serialize(const DirectedHypergraph& h, const Coordinatization* coords) {
  const int n = h.vertex_count();
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (coords != nullptr) {
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return coords->coords_less(a, b); });
  } else {
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return h.name(a) < h.name(b); });
  }
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;

  std::ostringstream os;
  os << "dhg 1\n";
  for (VertexId v : order) os << "vertex " << h.name(v) << '\n';

  auto by_rank = [&](VertexId a, VertexId b) {
    return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
  };
  std::vector<Hyperarc> arcs = h.arcs();
  for (Hyperarc& arc : arcs) {
    std::sort(arc.tail.begin(), arc.tail.end(), by_rank);
    std::sort(arc.head.begin(), arc.head.end(), by_rank);
  }
  std::sort(arcs.begin(), arcs.end(),
            [&](const Hyperarc& a, const Hyperarc& b) { return rank_arc_less(a, b, rank); });
  for (const Hyperarc& arc : arcs) {
    os << "arc";
    for (VertexId v : arc.tail) os << ' ' << h.name(v);
    os << " ->";
    for (VertexId v : arc.head) os << ' ' << h.name(v);
    os << '\n';
  }

  if (coords != nullptr) {
    for (VertexId v : order) {
      os << "# coord " << h.name(v) << " = (";
      auto row = coords->coords_of(v);
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) os << ',';
        os << row[i] + 1;
      }
      os << ")\n";
    }
  }
  return os.str();
}

std::string section_lines(const DirectedHypergraph& h) {
  UndirectedGraph g = two_section(h);
  std::vector<std::string> lines;
  lines.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) {
    const std::string& a = h.name(u);
    const std::string& b = h.name(v);
    lines.push_back(a <= b ? a + " " + b : b + " " + a);
  }
  std::sort(lines.begin(), lines.end());
  std::ostringstream os;
  for (const auto& l : lines) os << l << '\n';
  return os.str();
}

nlohmann::ordered_json hypergraph_to_json(const DirectedHypergraph& h) {
  const int n = h.vertex_count();
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return h.name(a) < h.name(b); });
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;

  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (VertexId v : order) j["vertices"].push_back(h.name(v));

  std::vector<Hyperarc> arcs = h.arcs();
  auto by_rank = [&](VertexId a, VertexId b) {
    return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
  };
  for (Hyperarc& arc : arcs) {
    std::sort(arc.tail.begin(), arc.tail.end(), by_rank);
    std::sort(arc.head.begin(), arc.head.end(), by_rank);
  }
  std::sort(arcs.begin(), arcs.end(),
            [&](const Hyperarc& a, const Hyperarc& b) { return rank_arc_less(a, b, rank); });
  j["arcs"] = nlohmann::ordered_json::array();
  for (const Hyperarc& arc : arcs) {
    nlohmann::ordered_json ja;
    ja["tail"] = nlohmann::ordered_json::array();
    ja["head"] = nlohmann::ordered_json::array();
    for (VertexId v : arc.tail) ja["tail"].push_back(h.name(v));
    for (VertexId v : arc.head) ja["head"].push_back(h.name(v));
    j["arcs"].push_back(std::move(ja));
  }
  return j;
}

}  // namespace hgpfd
