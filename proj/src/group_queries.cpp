#include "pchord/group_queries.hpp"

#include <algorithm>
#include <numeric>

#include "pchord/errors.hpp"

namespace pchord
{

std::vector<ElemId> powers(FiniteGroup const &g, ElemId x)
{
  std::vector<ElemId> out;
  out.reserve(g.order_of(x));
  out.push_back(0);
  for (ElemId p = x; p != 0; p = g.mul(p, x))
    out.push_back(p);
  return out;
}

std::vector<ElemId> cyclic_subgroup(FiniteGroup const &g, ElemId x)
{
  auto out = powers(g, x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemId> centralizer(FiniteGroup const &g, std::span<const ElemId> s)
{
  std::vector<ElemId> out;
  for (ElemId y = 0; y < g.size(); ++y) {
    bool ok = std::all_of(s.begin(), s.end(), [&](ElemId x) { return g.commute(x, y); });
    if (ok)
      out.push_back(y);
  }
  return out;
}

std::vector<ElemId> centralizer(FiniteGroup const &g, ElemId x)
{
  ElemId s[] = {x};
  return centralizer(g, s);
}

bool is_normal_in(FiniteGroup const &g, std::span<const ElemId> sub,
                  std::span<const ElemId> over)
{
  std::vector<bool> in_sub(g.size(), false);
  for (ElemId x : sub)
    in_sub[x] = true;
  for (ElemId c : over) {
    for (ElemId x : sub) {
      if (!in_sub[g.conj(x, c)])
        return false;
    }
  }
  return true;
}

std::vector<ElemId> subgroup_closure(FiniteGroup const &g, std::span<const ElemId> gens)
{
  std::vector<bool> in(g.size(), false);
  std::vector<ElemId> out = {0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElemId s : gens) {
      ElemId y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(FiniteGroup const &g, std::span<const ElemId> set)
{
  if (set.empty())
    return false;
  std::vector<bool> in(g.size(), false);
  for (ElemId x : set)
    in[x] = true;
  for (ElemId a : set) {
    for (ElemId b : set) {
      if (!in[g.mul(a, b)])
        return false;
    }
  }
  return true;
}

bool is_abelian(FiniteGroup const &g)
{
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!g.commute(gens[i], gens[j]))
        return false;
    }
  }
  return true;
}

ConjugacyClasses conjugacy_classes(FiniteGroup const &g)
{
  constexpr std::uint32_t unset = 0xffffffffu;
  ConjugacyClasses cc;
  cc.class_of.assign(g.size(), unset);
  std::vector<ElemId> stack;
  for (ElemId x = 0; x < g.size(); ++x) {
    if (cc.class_of[x] != unset)
      continue;
    auto id = static_cast<std::uint32_t>(cc.reps.size());
    cc.reps.push_back(x);
    std::uint32_t size = 0;
    cc.class_of[x] = id;
    stack.assign(1, x);
    while (!stack.empty()) {
      ElemId y = stack.back();
      stack.pop_back();
      ++size;
      for (ElemId s : g.generators()) {
        ElemId z = g.conj(y, s);
        if (cc.class_of[z] == unset) {
          cc.class_of[z] = id;
          stack.push_back(z);
        }
      }
    }
    cc.sizes.push_back(size);
  }
  return cc;
}

CyclicSubgroupTable cyclic_subgroups(FiniteGroup const &g)
{
  constexpr std::uint32_t unset = 0xffffffffu;
  CyclicSubgroupTable t;
  t.id_of.assign(g.size(), unset);
  for (ElemId x = 0; x < g.size(); ++x) {
    if (t.id_of[x] != unset)
      continue;
    auto id = static_cast<std::uint32_t>(t.subgroups.size());
    CyclicSubgroupTable::Entry e;
    e.rep = x;
    e.members = powers(g, x);
    e.order = static_cast<std::uint32_t>(e.members.size());
    for (std::uint32_t k = 0; k < e.order; ++k) {
      if (std::gcd(k, e.order) == 1 || e.order == 1) {
        ElemId y = e.members[k];
        t.id_of[y] = id;
        e.generators.push_back(y);
      }
    }
    std::sort(e.members.begin(), e.members.end());
    std::sort(e.generators.begin(), e.generators.end());
    t.subgroups.push_back(std::move(e));
  }
  return t;
}

std::vector<std::uint64_t> order_list(FiniteGroup const &g)
{
  auto const &o = g.element_orders();
  return {o.begin(), o.end()};
}

} // namespace pchord
