#ifndef PCHORD_GROUP_QUERIES_HPP
#define PCHORD_GROUP_QUERIES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "group.hpp"

namespace pchord
{

/// x^0, x^1, ..., x^(|x|-1).
std::vector<ElemId> powers(FiniteGroup const &g, ElemId x);

/// <x> as a sorted index set.
std::vector<ElemId> cyclic_subgroup(FiniteGroup const &g, ElemId x);

/// C_G(S) as a sorted index set.
std::vector<ElemId> centralizer(FiniteGroup const &g, std::span<const ElemId> s);
std::vector<ElemId> centralizer(FiniteGroup const &g, ElemId x);

/// Whether g^-1 sub g = sub for all g in `over`. `sub` must be a subgroup.
bool is_normal_in(FiniteGroup const &g, std::span<const ElemId> sub,
                  std::span<const ElemId> over);

/// The subgroup generated by `gens`, sorted.
std::vector<ElemId> subgroup_closure(FiniteGroup const &g, std::span<const ElemId> gens);

/// Closure of a sorted subset under multiplication (and hence inverses).
bool is_subgroup(FiniteGroup const &g, std::span<const ElemId> set);

bool is_abelian(FiniteGroup const &g);

struct ConjugacyClasses
{
  std::vector<std::uint32_t> class_of;
  std::vector<ElemId> reps; // least index in each class, ascending
  std::vector<std::uint32_t> sizes;
};

/// Orbits of conjugation by the generators.
ConjugacyClasses conjugacy_classes(FiniteGroup const &g);

struct CyclicSubgroupTable
{
  struct Entry
  {
    ElemId rep = 0; // least generating element
    std::uint32_t order = 1;
    std::vector<ElemId> members;    // sorted
    std::vector<ElemId> generators; // sorted
  };

  std::vector<std::uint32_t> id_of; // element -> cyclic subgroup it generates
  std::vector<Entry> subgroups;     // ordered by rep
};

CyclicSubgroupTable cyclic_subgroups(FiniteGroup const &g);

/// Element orders of the whole group, widened for the number-theory API.
std::vector<std::uint64_t> order_list(FiniteGroup const &g);

} // namespace pchord

#endif // PCHORD_GROUP_QUERIES_HPP
