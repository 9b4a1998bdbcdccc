#ifndef PCHORD_POWER_GRAPH_HPP
#define PCHORD_POWER_GRAPH_HPP

#include <string>
#include <vector>

#include "graph.hpp"
#include "group.hpp"
#include "group_queries.hpp"

namespace pchord
{

/// x ~ y iff one lies in the cyclic subgroup generated by the other.
Graph power_graph(FiniteGroup const &g);
Graph power_graph(FiniteGroup const &g, CyclicSubgroupTable const &cyclic);

/// Arc x -> y iff y in <x>, y != x.
Graph directed_power_graph(FiniteGroup const &g);
Graph directed_power_graph(FiniteGroup const &g, CyclicSubgroupTable const &cyclic);

/// x ~ y iff xy = yx. Quadratic in |G|.
Graph commuting_graph(FiniteGroup const &g);

std::vector<std::string> element_labels(FiniteGroup const &g);

} // namespace pchord

#endif // PCHORD_POWER_GRAPH_HPP
