#ifndef PCHORD_REDUCTION_HPP
#define PCHORD_REDUCTION_HPP

#include <optional>
#include <span>
#include <vector>

#include "chordal.hpp"
#include "group.hpp"

namespace pchord
{

/// x ~ y in Pow(G), decided from the group alone.
bool power_adjacent(FiniteGroup const &g, ElemId x, ElemId y);

/// In/out labels of an induced path (>= 3 vertices) or cycle (>= 4) of
/// Pow(G): true marks an in-vertex, i.e. a power of its neighbours. Throws
/// InvalidArgument if the sequence is not induced and InternalError if a
/// vertex has arcs in both directions or the labels do not alternate.
std::vector<bool> classify_in_out(FiniteGroup const &g, std::span<const ElemId> seq, bool cycle);

/// All in-vertices have prime order.
bool is_power_reduced(FiniteGroup const &g, std::span<const ElemId> seq, bool cycle);

/// A power-reduced induced cycle on >= 4 vertices, in canonical rotation.
/// In-vertices are processed in ascending position and replaced by powers
/// of prime order; when a replacement collapses the cycle, the shorter hole
/// inside the modified vertex set (or the four-vertex cycle through the
/// replaced vertex) is taken instead.
HoleWitness power_reduce_cycle(FiniteGroup const &g, HoleWitness const &hole);

struct PathReduction
{
  std::optional<PathWitness> path; // same vertex count, power-reduced
  std::optional<HoleWitness> hole; // length in [4, |path|]
};

/// Requires the element orders of g to pass order_screen; throws
/// PreconditionError otherwise, and InvalidArgument if the path contains
/// the identity.
PathReduction power_reduce_path(FiniteGroup const &g, PathWitness const &path);

struct CommutingWitness
{
  std::vector<ElemId> vertices;
  bool cycle = false;
  /// Whether the vertices induce a path (cycle) in Com(G) in this order.
  bool induced = false;
};

/// The in-vertex subsequence of a power-reduced witness.
CommutingWitness to_commuting(FiniteGroup const &g, std::span<const ElemId> seq, bool cycle);

/// Joins consecutive vertices x, y by the out-vertex xy. Requires at least
/// two vertices (three for a cycle), consecutive vertices commuting with
/// distinct prime orders, and an induced result; throws PreconditionError
/// otherwise.
PathWitness from_commuting_path(FiniteGroup const &g, std::span<const ElemId> vertices);
HoleWitness from_commuting_cycle(FiniteGroup const &g, std::span<const ElemId> vertices);

} // namespace pchord

#endif // PCHORD_REDUCTION_HPP
