#ifndef HGPFD_IO_HPP
#define HGPFD_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hgpfd/coordinates.hpp"
#include "hgpfd/hypergraph.hpp"

namespace hgpfd {

/// Line-numbered diagnostic for the plain-text format.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Plain-text hypergraph format:
///   dhg 1
///   # comment
///   vertex <name>
///   arc <name>... -> <name>...
/// Names are whitespace-free tokens; ids follow first appearance. Undirected
/// hyperedges are written with both sides equal. Loops, repeated arcs,
/// repeated names, and empty sides are reported with their line number.
DirectedHypergraph parse_hypergraph(std::string_view text);

DirectedHypergraph read_hypergraph(std::istream& in);

/// Canonical serialization: vertices in coordinate-lexicographic order when
/// coords are given, otherwise by name; arc sides and arcs sorted under that
/// vertex order. With coords, one "# coord <name> = (v_1,...,v_k)" comment
/// per vertex (1-based values) follows the arcs. Parsing then serializing a
/// canonical file reproduces it byte for byte.
std::string serialize(const DirectedHypergraph& h, const Coordinatization* coords = nullptr);

/// The sorted "u v" edge lines of the 2-section, display names.
std::string section_lines(const DirectedHypergraph& h);

nlohmann::ordered_json hypergraph_to_json(const DirectedHypergraph& h);

}  // namespace hgpfd

#endif  // HGPFD_IO_HPP
