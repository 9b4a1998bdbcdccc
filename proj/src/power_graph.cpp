#include "pchord/power_graph.hpp"

namespace pchord
{

namespace
{

std::vector<std::pair<Vertex, Vertex>> power_arcs(CyclicSubgroupTable const &cyclic)
{
  std::size_t total = 0;
  for (auto const &c : cyclic.subgroups)
    total += c.generators.size() * (c.members.size() - 1);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(total);
  for (auto const &c : cyclic.subgroups) {
    for (ElemId x : c.generators) {
      for (ElemId y : c.members) {
        if (y != x)
          arcs.emplace_back(x, y);
      }
    }
  }
  return arcs;
}

} // namespace

Graph power_graph(FiniteGroup const &g, CyclicSubgroupTable const &cyclic)
{
  return Graph::from_edges(g.size(), power_arcs(cyclic), false);
}

Graph power_graph(FiniteGroup const &g)
{
  return power_graph(g, cyclic_subgroups(g));
}

Graph directed_power_graph(FiniteGroup const &g, CyclicSubgroupTable const &cyclic)
{
  return Graph::from_edges(g.size(), power_arcs(cyclic), true);
}

Graph directed_power_graph(FiniteGroup const &g)
{
  return directed_power_graph(g, cyclic_subgroups(g));
}

Graph commuting_graph(FiniteGroup const &g)
{
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (ElemId a = 0; a < g.size(); ++a) {
    for (ElemId b = a + 1; b < g.size(); ++b) {
      if (g.commute(a, b))
        edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(g.size(), std::move(edges), false);
}

std::vector<std::string> element_labels(FiniteGroup const &g)
{
  std::vector<std::string> out;
  out.reserve(g.size());
  for (ElemId x = 0; x < g.size(); ++x)
    out.push_back(g.label(x));
  return out;
}

} // namespace pchord
