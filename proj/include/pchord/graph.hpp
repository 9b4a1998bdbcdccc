#ifndef PCHORD_GRAPH_HPP
#define PCHORD_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pchord
{

using Vertex = std::uint32_t;

/// Compressed adjacency: neighbours of v are adj[off[v] .. off[v+1]),
/// sorted ascending and duplicate free. Undirected graphs store each edge
/// in both lists and have no loops.
class Graph
{
public:
  Graph() : off_(1, 0) {}

  /// Loops and duplicates are dropped; undirected input is symmetrized.
  static Graph from_edges(std::uint32_t n, std::vector<std::pair<Vertex, Vertex>> edges,
                          bool directed = false);

  std::uint32_t n() const { return static_cast<std::uint32_t>(off_.size() - 1); }
  bool directed() const { return directed_; }

  std::span<const Vertex> neighbors(Vertex v) const
  { return {adj_.data() + off_[v], off_[v + 1] - off_[v]}; }
  std::uint32_t degree(Vertex v) const
  { return static_cast<std::uint32_t>(off_[v + 1] - off_[v]); }

  bool adjacent(Vertex u, Vertex v) const;

  /// Number of edges (undirected) or arcs (directed).
  std::uint64_t edge_count() const;

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  /// Underlying undirected graph of a directed graph.
  Graph undirected() const;

  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  bool operator==(Graph const &) const = default;

private:
  bool directed_ = false;
  std::vector<std::uint64_t> off_;
  std::vector<Vertex> adj_;
};

/// Graphviz text; labels optional.
std::string to_dot(Graph const &g, std::vector<std::string> const &labels = {});

} // namespace pchord

#endif // PCHORD_GRAPH_HPP
