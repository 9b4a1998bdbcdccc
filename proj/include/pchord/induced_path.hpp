#ifndef PCHORD_INDUCED_PATH_HPP
#define PCHORD_INDUCED_PATH_HPP

#include <cstdint>
#include <vector>

#include "chordal.hpp"
#include "graph.hpp"

namespace pchord
{

constexpr unsigned max_path_limit = 25;

struct InducedPathOptions
{
  unsigned limit = 20;           // vertices; at most max_path_limit
  std::uint64_t node_budget = 0; // search nodes, 0 = unbounded
  /// If non-empty, only paths starting here are explored. Callers pass one
  /// vertex per automorphism orbit; the result is unchanged.
  std::vector<Vertex> start_candidates;
  /// Search the closed-twin quotient. Exact for paths on >= 3 vertices,
  /// since two twins on an induced path are its only two vertices.
  bool merge_twins = true;
};

struct InducedPathResult
{
  unsigned length = 0; // vertices on the longest path found, <= limit
  PathWitness witness;
  bool exact = true; // false when the node budget ran out
  std::uint64_t nodes = 0;
};

/// Longest induced path with at most `limit` vertices by depth-first
/// extension. Throws InvalidArgument for limit > max_path_limit.
InducedPathResult bounded_longest_induced_path(Graph const &g,
                                               InducedPathOptions const &options = {});

} // namespace pchord

#endif // PCHORD_INDUCED_PATH_HPP
