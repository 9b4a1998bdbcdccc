#ifndef PCHORD_CRITERIA_HPP
#define PCHORD_CRITERIA_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"

namespace pchord
{

enum class Implied
{
  none,
  chordal,
  non_chordal
};

std::string to_string(Implied v);

struct CriterionReport
{
  std::string id;
  bool fires = false;
  /// False when the criterion's standing hypothesis fails; `detail` says why.
  bool applicable = true;
  std::vector<ElemId> witness;
  std::string detail;
  Implied implied = Implied::none;
};

/// Induced 4-cycle test: elements g, h of order q^m (m > 1) with
/// g^q = h^q, <g> != <h>, and a prime p != q dividing |C(<g,h>)|. Pairs
/// are searched with <g> up to conjugacy. Witness (g, h, z), z of order p.
/// Throws PreconditionError when an element order is divisible by p^2q^2
/// or pqr.
CriterionReport check_c4(FiniteGroup const &g);

/// Whether (g, h) satisfies the three conditions above.
bool c4_pair_holds(FiniteGroup const &g, ElemId a, ElemId b);

/// Sufficient condition for chordality: no element order divisible by
/// p^2q^2, and for every x of prime order p, C(x) is a p-group or Z x| P
/// with Z a cyclic q-group and P a p-group. Witness on firing: one element
/// per conjugacy class of prime-order elements; on failure to fire, the
/// first offending x (if any).
CriterionReport check_centralizer_sufficient(FiniteGroup const &g);

/// Sufficient condition for non-chordality: commuting x, y of coprime
/// prime orders with <y> not normal in C(x) and <x> not normal in C(y).
/// x runs over prime-order cyclic subgroups up to conjugacy.
CriterionReport check_conjugate_cyclic(FiniteGroup const &g);

/// The pair condition itself, for arbitrary commuting x, y of coprime orders.
bool conjugate_cyclic_pair_holds(FiniteGroup const &g, ElemId x, ElemId y);

struct GkGraph
{
  std::vector<std::uint64_t> primes;                       // ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges; // p < q
  /// Connected components as lists of primes.
  std::vector<std::vector<std::uint64_t>> components() const;
};

/// Primes dividing |G|; {p, q} is an edge iff some element order is
/// divisible by pq.
GkGraph gk_graph(FiniteGroup const &g);

/// Fires (non-chordal) iff some non-singleton component of the prime graph
/// has no prime p with an order-p element x such that C(x) = Z x| P, Z a
/// cyclic q-group, P a p-group, and C_P(Z) cyclic or of exponent p.
CriterionReport check_gk_necessary(FiniteGroup const &g);

struct Sl3Witness
{
  std::uint64_t q = 0;
  MatrixSpace space;
  MatrixSpace::Mat x, y, m_x, m_y;
  struct Check
  {
    std::string name;
    bool holds;
  };
  std::vector<Check> checks;
  bool all_hold() const;
};

/// The matrices X, Y, M_X, M_Y in SL_3(q) and the assertions on them:
/// |X| = p, |Y| = q - 1, M_Y centralizes Y, M_X centralizes X, M_Y does
/// not normalize <X>, M_X does not normalize <Y>; also that all four have
/// determinant 1 and that the two non-normalizations survive modulo the
/// scalar matrices. Throws InvalidArgument for q in {2, 4} or q not a
/// prime power.
Sl3Witness sl3_witness(std::uint64_t q);

} // namespace pchord

#endif // PCHORD_CRITERIA_HPP
