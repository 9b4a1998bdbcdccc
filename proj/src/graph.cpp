#include "pchord/graph.hpp"

#include <algorithm>
#include <sstream>

#include "pchord/errors.hpp"

namespace pchord
{

Graph Graph::from_edges(std::uint32_t n, std::vector<std::pair<Vertex, Vertex>> edges,
                        bool directed)
{
  if (!directed) {
    std::size_t m = edges.size();
    edges.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i)
      edges.emplace_back(edges[i].second, edges[i].first);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.directed_ = directed;
  g.off_.assign(std::size_t{n} + 1, 0);
  g.adj_.reserve(edges.size());
  for (auto const &[u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidArgument("graph: edge endpoint out of range");
    if (u == v)
      continue;
    ++g.off_[u + 1];
    g.adj_.push_back(v);
  }
  for (std::uint32_t v = 0; v < n; ++v)
    g.off_[v + 1] += g.off_[v];
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::edge_count() const
{
  return directed_ ? adj_.size() : adj_.size() / 2;
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
  std::vector<std::uint32_t> pos(n(), UINT32_MAX);
  for (std::uint32_t i = 0; i < vertices.size(); ++i)
    pos[vertices[i]] = i;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : neighbors(vertices[i])) {
      if (pos[w] != UINT32_MAX)
        edges.emplace_back(i, pos[w]);
    }
  }
  return from_edges(static_cast<std::uint32_t>(vertices.size()), std::move(edges), directed_);
}

Graph Graph::undirected() const
{
  if (!directed_)
    return *this;
  return from_edges(n(), edge_list(), false);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const
{
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (directed_ || u < v)
        out.emplace_back(u, v);
    }
  }
  return out;
}

std::string to_dot(Graph const &g, std::vector<std::string> const &labels)
{
  std::ostringstream os;
  char const *arrow = g.directed() ? " -> " : " -- ";
  os << (g.directed() ? "digraph" : "graph") << " G {\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    os << "  " << v;
    if (v < labels.size()) {
      std::string l;
      for (char c : labels[v]) {
        if (c == '"' || c == '\\')
          l += '\\';
        l += c;
      }
      os << " [label=\"" << l << "\"]";
    }
    os << ";\n";
  }
  for (auto const &[u, v] : g.edge_list())
    os << "  " << u << arrow << v << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace pchord
