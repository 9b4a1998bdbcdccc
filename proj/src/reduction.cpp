#include "pchord/reduction.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "pchord/errors.hpp"
#include "pchord/graph.hpp"
#include "pchord/numtheory.hpp"

namespace pchord
{

namespace
{

// y in <x>
bool in_cyclic(FiniteGroup const &g, ElemId y, ElemId x)
{
  std::uint32_t ox = g.order_of(x), oy = g.order_of(y);
  if (ox % oy != 0)
    return false;
  // The unique subgroup of <x> of order |y|.
  ElemId z = g.pow(x, ox / oy);
  ElemId cur = z;
  for (std::uint32_t i = 0; i < oy; ++i) {
    if (cur == y)
      return true;
    cur = g.mul(cur, z);
  }
  return false;
}

ElemId prime_power_of(FiniteGroup const &g, ElemId x, std::uint64_t p)
{
  return g.pow(x, g.order_of(x) / p);
}

bool induced_cycle(FiniteGroup const &g, std::span<const ElemId> seq)
{
  return verify_induced_cycle_with(seq, [&](ElemId a, ElemId b) { return power_adjacent(g, a, b); });
}

bool induced_path(FiniteGroup const &g, std::span<const ElemId> seq)
{
  return verify_induced_path_with(seq, [&](ElemId a, ElemId b) { return power_adjacent(g, a, b); });
}

// Hole of Pow(G)[set], if any, in group elements.
std::optional<std::vector<ElemId>> hole_within(FiniteGroup const &g, std::vector<ElemId> set)
{
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (power_adjacent(g, set[i], set[j]))
        edges.emplace_back(i, j);
  Graph sub = Graph::from_edges(static_cast<std::uint32_t>(set.size()), std::move(edges));
  auto res = is_chordal(sub);
  if (res.chordal)
    return std::nullopt;
  std::vector<ElemId> out;
  for (Vertex v : res.hole->vertices)
    out.push_back(set[v]);
  return out;
}

bool is_prime_order(FiniteGroup const &g, ElemId x)
{
  return nt::is_prime(g.order_of(x));
}

// The 4-cycle case: with in-vertices x, y, there are primes p, q with
// v_p(|x|) > v_p(|y|) and v_q(|y|) > v_q(|x|).
std::optional<std::vector<ElemId>> reduce_four_cycle(FiniteGroup const &g,
                                                     std::vector<ElemId> c,
                                                     std::vector<bool> const &in)
{
  std::size_t i = in[0] ? 0 : 1;
  std::size_t j = i + 2;
  ElemId x = c[i], y = c[j];
  auto fx = nt::factor(g.order_of(x));
  auto fy = nt::factor(g.order_of(y));
  auto pick = [](nt::FactoredInt const &a, nt::FactoredInt const &b) -> std::uint64_t {
    for (auto const &f : a.factors)
      if (f.exponent > b.multiplicity(f.prime))
        return f.prime;
    return 0;
  };
  std::uint64_t p = pick(fx, fy), q = pick(fy, fx);
  if (p == 0 || q == 0)
    return std::nullopt;
  c[i] = prime_power_of(g, x, p);
  c[j] = prime_power_of(g, y, q);
  if (!induced_cycle(g, c))
    return std::nullopt;
  return c;
}

// The collapse case: g' of prime order p is joined to every other vertex of
// c. Look for out-vertices h1, h2 around an in-vertex x of order not a
// power of p, and close the 4-cycle (g', h1, x', h2).
std::optional<std::vector<ElemId>> collapse_four_cycle(FiniteGroup const &g,
                                                       std::vector<ElemId> const &c,
                                                       std::vector<bool> const &in,
                                                       std::size_t gpos, std::uint64_t p)
{
  std::size_t n = c.size();
  ElemId gp = c[gpos];
  for (std::size_t k = 0; k < n; ++k) {
    if (!in[k] || k == gpos)
      continue;
    ElemId h1 = c[(k + n - 1) % n], h2 = c[(k + 1) % n];
    if (h1 == gp || h2 == gp || !power_adjacent(g, gp, h1) || !power_adjacent(g, gp, h2))
      continue;
    for (auto const &f : nt::factor(g.order_of(c[k])).factors) {
      if (f.prime == p)
        continue;
      std::vector<ElemId> cand{gp, h1, prime_power_of(g, c[k], f.prime), h2};
      if (induced_cycle(g, cand))
        return cand;
    }
  }
  return std::nullopt;
}

} // namespace

bool power_adjacent(FiniteGroup const &g, ElemId x, ElemId y)
{
  if (x == y)
    return false;
  return in_cyclic(g, y, x) || in_cyclic(g, x, y);
}

std::vector<bool> classify_in_out(FiniteGroup const &g, std::span<const ElemId> seq, bool cycle)
{
  std::size_t n = seq.size();
  if (cycle ? !induced_cycle(g, seq) : (n < 3 || !induced_path(g, seq)))
    throw InvalidArgument("classify_in_out: not an induced path or cycle of the power graph");

  // dir[v]: 1 = has an incoming arc, 2 = has an outgoing arc.
  std::vector<unsigned> dir(n, 0);
  std::size_t edges = cycle ? n : n - 1;
  for (std::size_t i = 0; i < edges; ++i) {
    std::size_t j = (i + 1) % n;
    bool ij = in_cyclic(g, seq[j], seq[i]); // arc i -> j
    bool ji = in_cyclic(g, seq[i], seq[j]);
    if (ij && ji)
      throw InternalError("classify_in_out: consecutive vertices generate the same cyclic subgroup");
    if (ij) {
      dir[i] |= 2;
      dir[j] |= 1;
    } else {
      dir[i] |= 1;
      dir[j] |= 2;
    }
  }
  std::vector<bool> in(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dir[i] == 3)
      throw InternalError("classify_in_out: vertex " + std::to_string(i) + " has mixed arc directions");
    in[i] = dir[i] == 1;
  }
  for (std::size_t i = 0; i < edges; ++i) {
    if (in[i] == in[(i + 1) % n])
      throw InternalError("classify_in_out: labels do not alternate");
  }
  return in;
}

bool is_power_reduced(FiniteGroup const &g, std::span<const ElemId> seq, bool cycle)
{
  auto in = classify_in_out(g, seq, cycle);
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (in[i] && !is_prime_order(g, seq[i]))
      return false;
  return true;
}

HoleWitness power_reduce_cycle(FiniteGroup const &g, HoleWitness const &hole)
{
  std::vector<ElemId> c = hole.vertices;
  if (!induced_cycle(g, c))
    throw InvalidArgument("power_reduce_cycle: not an induced cycle of the power graph");

  // Every step either lowers the number of in-vertices of composite order
  // at fixed length or shortens the cycle.
  for (std::size_t round = 0; round < 4 * hole.vertices.size() + 8; ++round) {
    auto in = classify_in_out(g, c, true);
    std::size_t pos = c.size();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (in[i] && !is_prime_order(g, c[i])) {
        pos = i;
        break;
      }
    }
    if (pos == c.size())
      return HoleWitness{canonical_cycle(c)};

    if (c.size() == 4) {
      if (auto r = reduce_four_cycle(g, c, in)) {
        c = *r;
        continue;
      }
    }

    bool progressed = false;
    auto primes = nt::factor(g.order_of(c[pos])).primes();
    for (std::uint64_t p : primes) {
      auto next = c;
      next[pos] = prime_power_of(g, c[pos], p);
      if (induced_cycle(g, next)) {
        c = std::move(next);
        progressed = true;
        break;
      }
    }
    if (progressed)
      continue;

    for (std::uint64_t p : primes) {
      auto next = c;
      next[pos] = prime_power_of(g, c[pos], p);
      if (auto h = hole_within(g, next)) {
        c = *h;
        progressed = true;
        break;
      }
      if (auto h = collapse_four_cycle(g, next, in, pos, p)) {
        c = *h;
        progressed = true;
        break;
      }
    }
    if (!progressed)
      throw InternalError("power_reduce_cycle: no reduced cycle found");
  }
  throw InternalError("power_reduce_cycle: iteration limit reached");
}

PathReduction power_reduce_path(FiniteGroup const &g, PathWitness const &path)
{
  std::vector<std::uint64_t> orders(g.element_orders().begin(), g.element_orders().end());
  if (!nt::order_screen(orders).clean())
    throw PreconditionError("power_reduce_path: element orders divisible by p^2q^2 or pqr");

  std::vector<ElemId> c = path.vertices;
  // The identity is adjacent to everything, so it only lies on paths of at
  // most three vertices, where it has no prime-order replacement.
  if (std::find(c.begin(), c.end(), ElemId{0}) != c.end())
    throw InvalidArgument("power_reduce_path: witnesses never contain the identity");
  if (c.size() < 3) {
    if (!induced_path(g, c))
      throw InvalidArgument("power_reduce_path: not an induced path of the power graph");
    // No in/out structure to speak of; nothing to reduce.
    PathWitness w{c, std::vector<bool>(c.size(), false)};
    return PathReduction{w, std::nullopt};
  }
  auto in = classify_in_out(g, c, false);

  // Replacing in-vertices one at a time in a fixed order can fail where
  // another order succeeds: in C_24 the path of orders (8, 4, 12, 6) gets
  // stuck on the order-4 vertex first but reduces after the order-6 end.
  // Search over replacement orders instead; the state space is small.
  std::set<std::vector<ElemId>> visited;
  std::function<bool(std::vector<ElemId> &)> search = [&](std::vector<ElemId> &cur) {
    bool done = true;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (!in[i] || is_prime_order(g, cur[i]))
        continue;
      done = false;
      for (std::uint64_t p : nt::factor(g.order_of(cur[i])).primes()) {
        auto next = cur;
        next[i] = prime_power_of(g, cur[i], p);
        if (!visited.insert(next).second || !induced_path(g, next))
          continue;
        if (search(next)) {
          cur = std::move(next);
          return true;
        }
      }
    }
    return done;
  };
  auto reduced = c;
  if (search(reduced)) {
    auto labels = classify_in_out(g, reduced, false);
    return PathReduction{PathWitness{reduced, labels}, std::nullopt};
  }

  // No order works: some single replacement closes a hole.
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!in[i] || is_prime_order(g, c[i]))
      continue;
    for (std::uint64_t p : nt::factor(g.order_of(c[i])).primes()) {
      auto next = c;
      next[i] = prime_power_of(g, c[i], p);
      if (auto h = hole_within(g, next))
        return PathReduction{std::nullopt, HoleWitness{canonical_cycle(*h)}};
    }
  }
  throw InternalError("power_reduce_path: replacement produced neither a path nor a cycle");
}

CommutingWitness to_commuting(FiniteGroup const &g, std::span<const ElemId> seq, bool cycle)
{
  auto in = classify_in_out(g, seq, cycle);
  CommutingWitness out;
  out.cycle = cycle;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (in[i])
      out.vertices.push_back(seq[i]);

  auto commute = [&](ElemId a, ElemId b) { return g.commute(a, b); };
  auto const &v = out.vertices;
  if (cycle && v.size() >= 4) {
    out.induced = verify_induced_cycle_with(std::span<const ElemId>(v), commute);
  } else if (cycle) {
    // Two or three in-vertices: every pair is consecutive.
    out.induced = true;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        out.induced = out.induced && commute(v[i], v[j]);
  } else {
    out.induced = verify_induced_path_with(std::span<const ElemId>(v), commute);
  }
  return out;
}

namespace
{

std::vector<ElemId> interleave(FiniteGroup const &g, std::span<const ElemId> v, bool cycle)
{
  std::size_t n = v.size();
  std::size_t pairs = cycle ? n : n - 1;
  std::vector<ElemId> out;
  for (std::size_t i = 0; i < pairs; ++i) {
    ElemId x = v[i], y = v[(i + 1) % n];
    if (!g.commute(x, y))
      throw PreconditionError("from_commuting: consecutive vertices do not commute");
    std::uint32_t ox = g.order_of(x), oy = g.order_of(y);
    if (!nt::is_prime(ox) || !nt::is_prime(oy) || ox == oy)
      throw PreconditionError("from_commuting: consecutive vertices need distinct prime orders");
    out.push_back(x);
    out.push_back(g.mul(x, y));
  }
  if (!cycle)
    out.push_back(v[n - 1]);
  return out;
}

} // namespace

PathWitness from_commuting_path(FiniteGroup const &g, std::span<const ElemId> vertices)
{
  if (vertices.size() < 2)
    throw PreconditionError("from_commuting_path: needs at least two vertices");
  auto seq = interleave(g, vertices, false);
  if (!induced_path(g, seq))
    throw PreconditionError("from_commuting_path: constructed path is not induced");
  auto in = classify_in_out(g, seq, false);
  return PathWitness{seq, in};
}

HoleWitness from_commuting_cycle(FiniteGroup const &g, std::span<const ElemId> vertices)
{
  if (vertices.size() < 3)
    throw PreconditionError("from_commuting_cycle: needs at least three vertices");
  auto seq = interleave(g, vertices, true);
  if (!induced_cycle(g, seq))
    throw PreconditionError("from_commuting_cycle: constructed cycle is not induced");
  return HoleWitness{seq};
}

} // namespace pchord
