#ifndef PCHORD_CHORDAL_HPP
#define PCHORD_CHORDAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graph.hpp"

namespace pchord
{

/// Induced cycle on at least four vertices, in cyclic order.
struct HoleWitness
{
  std::vector<Vertex> vertices;
};

/// Induced path. `in_vertex` is filled by the reduction module when the
/// path lives in a power graph; it is empty otherwise.
struct PathWitness
{
  std::vector<Vertex> vertices;
  std::vector<bool> in_vertex;
};

/// Maximum cardinality search visit order, ties to the least index. The
/// reverse of this order is a perfect elimination order iff g is chordal.
std::vector<Vertex> mcs_order(Graph const &g);

/// v has earlier-visited neighbours u (the latest of them) and w that are
/// not adjacent to each other.
struct PeoViolation
{
  Vertex v, u, w;
};

/// Checks that for every v the neighbours visited before v form a clique,
/// with `order` a visit order as returned by mcs_order.
std::optional<PeoViolation> check_peo(Graph const &g, std::span<const Vertex> order);

struct ChordalityResult
{
  bool chordal = true;
  std::optional<HoleWitness> hole;
};

ChordalityResult is_chordal(Graph const &g);

/// Shortest u-w path avoiding N[v] minus {u, w}, closed through v. Falls
/// back to an exhaustive search if no such path exists. Throws
/// InternalError if the result does not validate or no hole exists.
HoleWitness extract_hole(Graph const &g, PeoViolation const &violation);

template<typename Adjacent>
bool verify_induced_cycle_with(std::span<const Vertex> seq, Adjacent &&adjacent)
{
  std::size_t n = seq.size();
  if (n < 4)
    return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (seq[i] == seq[j])
        return false;
      bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent(seq[i], seq[j]) != consecutive)
        return false;
    }
  }
  return true;
}

template<typename Adjacent>
bool verify_induced_path_with(std::span<const Vertex> seq, Adjacent &&adjacent)
{
  std::size_t n = seq.size();
  if (n == 0)
    return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (seq[i] == seq[j])
        return false;
      if (adjacent(seq[i], seq[j]) != (j == i + 1))
        return false;
    }
  }
  return true;
}

bool verify_induced_cycle(Graph const &g, std::span<const Vertex> seq);
bool verify_induced_path(Graph const &g, std::span<const Vertex> seq);

/// Rotation to the least vertex, oriented towards its smaller neighbour.
std::vector<Vertex> canonical_cycle(std::span<const Vertex> seq);

/// Exhaustive search for an induced cycle on >= 4 vertices. Exponential;
/// intended as a test oracle for small graphs.
std::optional<HoleWitness> brute_force_hole(Graph const &g);

/// Finds an induced 4-cycle if one exists, by enumerating 2-paths from the
/// highest-degree vertex of each 4-cycle.
std::optional<HoleWitness> find_induced_c4(Graph const &g);

/// Closed twin classes (equal closed neighbourhoods) and the quotient
/// graph on them. class_rep[c] is the least vertex of class c.
struct TwinQuotient
{
  Graph quotient;
  std::vector<std::uint32_t> class_of;
  std::vector<Vertex> class_rep;
  std::vector<std::uint32_t> class_size;
};

TwinQuotient closed_twin_quotient(Graph const &g);

} // namespace pchord

#endif // PCHORD_CHORDAL_HPP
