#ifndef HGPFD_ISOMORPHISM_HPP
#define HGPFD_ISOMORPHISM_HPP

#include <cstdint>
#include <vector>

#include "hgpfd/hypergraph.hpp"

namespace hgpfd {

enum class IsoStatus { isomorphic, not_isomorphic, budget_exceeded };

struct IsomorphismResult {
  IsoStatus status = IsoStatus::not_isomorphic;
  /// mapping[v in a] = image in b, meaningful only when isomorphic.
  std::vector<VertexId> mapping;

  bool ok() const { return status == IsoStatus::isomorphic; }
};

/// Backtracking isomorphism search for small instances. Prunes with per-vertex
/// signatures (arc sizes and tail/head membership roles) refined by neighbor
/// colors, and checks each arc as soon as all of its vertices are mapped.
/// `budget` caps the number of candidate expansions; running out is reported
/// as budget_exceeded, which is distinct from a negative answer.
IsomorphismResult isomorphic(const DirectedHypergraph& a, const DirectedHypergraph& b,
                             std::uint64_t budget = 1'000'000);

/// Multiset equality up to isomorphism, used to compare factor lists.
bool multisets_isomorphic(const std::vector<DirectedHypergraph>& a,
                          const std::vector<DirectedHypergraph>& b);

}  // namespace hgpfd

#endif  // HGPFD_ISOMORPHISM_HPP
