#include <algorithm>
#include <map>
#include <numeric>

#include "pchord/chordal.hpp"
#include "pchord/classify.hpp"
#include "pchord/errors.hpp"
#include "pchord/group_queries.hpp"
#include "pchord/power_graph.hpp"

namespace pchord
{

namespace
{

bool is_power_of(std::uint64_t n, std::uint64_t p)
{
  while (n % p == 0)
    n /= p;
  return n == 1;
}

// Element-order facts about one factor, computed once per decision.
struct Facts
{
  FiniteGroup const *g = nullptr;
  nt::FactoredInt order;
  std::uint64_t exponent = 1;
  std::uint32_t max_order = 1;
  bool eppo = true;
  std::vector<std::uint32_t> distinct_orders;
  mutable std::optional<CyclicSubgroupTable> cyclic;

  explicit Facts(FiniteGroup const &grp) : g(&grp), order(nt::factor(grp.size()))
  {
    std::vector<bool> seen(grp.size() + 1, false);
    for (std::uint32_t o : grp.element_orders())
      seen[o] = true;
    for (std::uint32_t o = 1; o <= grp.size(); ++o) {
      if (!seen[o])
        continue;
      distinct_orders.push_back(o);
      exponent = std::lcm(exponent, std::uint64_t{o});
      max_order = o;
      if (o > 1 && !nt::is_prime_power(o))
        eppo = false;
    }
  }

  std::uint32_t size() const { return g->size(); }
  bool trivial() const { return size() == 1; }
  bool is_cyclic() const { return max_order == size(); }
  std::vector<std::uint64_t> primes() const { return order.primes(); }

  CyclicSubgroupTable const &cyclic_table() const
  {
    if (!cyclic)
      cyclic = cyclic_subgroups(*g);
    return *cyclic;
  }
};

// K = N x| U with N normal cyclic of order a, U cyclic of order b,
// N n U = 1, and no non-identity element of U centralizing soc(N).
bool split_faithful(Facts const &k, std::uint64_t a, std::uint64_t b)
{
  if (a * b != k.size())
    return false;
  FiniteGroup const &g = *k.g;
  auto const &t = k.cyclic_table();
  std::vector<std::uint32_t> normal_ns;
  for (std::uint32_t i = 0; i < t.subgroups.size(); ++i) {
    auto const &e = t.subgroups[i];
    if (e.order != a)
      continue;
    bool normal = true;
    for (ElemId s : g.generators()) {
      if (t.id_of[g.conj(e.rep, s)] != i) {
        normal = false;
        break;
      }
    }
    if (normal)
      normal_ns.push_back(i);
  }
  std::uint64_t rad = 1;
  for (auto p : nt::factor(a).primes())
    rad *= p;
  for (std::uint32_t ni : normal_ns) {
    auto const &n = t.subgroups[ni];
    ElemId soc = g.pow(n.rep, static_cast<std::int64_t>(a / rad));
    for (auto const &u : t.subgroups) {
      if (u.order != b)
        continue;
      std::vector<ElemId> common;
      std::set_intersection(n.members.begin(), n.members.end(), u.members.begin(),
                            u.members.end(), std::back_inserter(common));
      if (common.size() != 1)
        continue;
      bool faithful = std::none_of(u.members.begin(), u.members.end(),
                                   [&](ElemId x) { return x != 0 && g.commute(x, soc); });
      if (faithful)
        return true;
    }
  }
  return false;
}

// H = C_{p^m} x| C_{q^n} acting faithfully on the socle.
struct MetacyclicShape
{
  std::uint64_t p, m, q, n;
};

std::vector<MetacyclicShape> metacyclic_shapes(Facts const &h)
{
  std::vector<MetacyclicShape> out;
  if (h.order.factors.size() != 2)
    return out;
  for (int swap = 0; swap < 2; ++swap) {
    auto const &a = h.order.factors[swap];
    auto const &b = h.order.factors[1 - swap];
    std::uint64_t pa = nt::checked_pow(a.prime, a.exponent);
    std::uint64_t qb = nt::checked_pow(b.prime, b.exponent);
    if (split_faithful(h, pa, qb))
      out.push_back({a.prime, a.exponent, b.prime, b.exponent});
  }
  return out;
}

// 2d conditions on K for H = C_q.
bool case_2d(Facts const &k, std::uint64_t q)
{
  FiniteGroup const &g = *k.g;
  // Orders are prime powers or q r^j with r != q, j >= 1.
  for (std::uint32_t o : k.distinct_orders) {
    if (o == 1 || nt::is_prime_power(o))
      continue;
    if (o % q != 0 || (o / q) % q == 0 || !nt::is_prime_power(o / q))
      return false;
  }
  auto const &t = k.cyclic_table();
  for (std::uint64_t r : k.primes()) {
    if (r == q)
      continue;
    // Cyclic r-subgroups grouped by their subgroup of order r.
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_base;
    for (std::uint32_t i = 0; i < t.subgroups.size(); ++i) {
      auto const &e = t.subgroups[i];
      if (e.order == 1 || !is_power_of(e.order, r))
        continue;
      by_base[t.id_of[g.pow(e.rep, e.order / r)]].push_back(i);
    }
    for (auto const &[base, ids] : by_base) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          auto const *z1 = &t.subgroups[ids[i]];
          auto const *z2 = &t.subgroups[ids[j]];
          if (z1->order > z2->order)
            std::swap(z1, z2);
          if (!std::binary_search(z2->members.begin(), z2->members.end(), z1->rep))
            return false; // meet non-trivially without nesting
        }
      }
    }
    // Each non-identity q-element centralizes at most one cyclic
    // r-subgroup of each order.
    for (auto const &x : t.subgroups) {
      if (x.order == 1 || !is_power_of(x.order, q))
        continue;
      std::map<std::uint32_t, unsigned> per_order;
      for (auto const &z : t.subgroups) {
        if (z.order == 1 || !is_power_of(z.order, r))
          continue;
        if (g.commute(x.rep, z.rep) && ++per_order[z.order] > 1)
          return false;
      }
    }
  }
  return true;
}

// Case 1 condition on K: K = <w> x| P, |w| = q^n, P a p-group, and
// C_P(w^(q^(n-1))) trivial or of exponent p.
bool case_1(Facts const &k, std::uint64_t p)
{
  FiniteGroup const &g = *k.g;
  std::uint64_t q = 0;
  for (std::uint64_t r : k.primes()) {
    if (r == p)
      continue;
    if (q != 0)
      return false;
    q = r;
  }
  if (q == 0)
    return false;
  std::uint64_t qpart = nt::prime_part(k.size(), q);
  std::uint64_t count = 0;
  ElemId w = 0;
  for (ElemId x = 0; x < g.size(); ++x) {
    std::uint32_t o = g.order_of(x);
    if (is_power_of(o, q)) {
      ++count;
      if (o == qpart && w == 0)
        w = x;
    }
  }
  if (count != qpart || w == 0)
    return false;
  ElemId w0 = g.pow(w, static_cast<std::int64_t>(qpart / q));
  for (ElemId x = 0; x < g.size(); ++x) {
    std::uint32_t o = g.order_of(x);
    if (o > p && is_power_of(o, p) && g.commute(x, w0))
      return false;
  }
  return true;
}

void evaluate_roles(Facts const &h, Facts const &k, std::string const &prefix,
                    ProductDecision &out)
{
  auto hit = [&](std::string const &label, bool holds) {
    out.considered.push_back(prefix + label);
    if (!holds)
      return;
    out.matched.push_back(prefix + label);
    if (out.matched_case.empty()) {
      out.chordal = true;
      out.matched_case = prefix + label;
    }
  };

  // Case 1: H of exponent p, not cyclic.
  if (h.order.factors.size() == 1 && h.exponent == h.order.factors[0].prime && !h.is_cyclic())
    hit("1", case_1(k, h.exponent));

  // Case 2: H cyclic of order p^n q^m with n <= 1.
  if (h.is_cyclic()) {
    auto const &f = h.order.factors;
    if (f.size() == 1) {
      std::uint64_t q = f[0].prime;
      unsigned m = f[0].exponent;
      if (m > 1) {
        bool ok = k.eppo;
        for (std::uint64_t r : k.primes())
          if (r != q && nt::prime_part(k.exponent, r) > r)
            ok = false;
        hit("2c", ok);
      } else {
        hit("2d", case_2d(k, q));
      }
    } else if (f.size() == 2) {
      for (int swap = 0; swap < 2; ++swap) {
        auto const &pf = f[swap];
        auto const &qf = f[1 - swap];
        if (pf.exponent != 1)
          continue;
        std::uint64_t p = pf.prime, q = qf.prime;
        if (qf.exponent > 1) {
          hit("2a", k.exponent == p);
        } else {
          bool ok = k.eppo;
          for (std::uint32_t o : k.distinct_orders)
            ok = ok && (o == 1 || o == p || o == q);
          hit("2b", ok);
        }
      }
    }
  }

  // Case 3: H = C_{p^m} x| C_{q^n}, faithful on the socle.
  for (auto const &s : metacyclic_shapes(h)) {
    hit("3a", k.exponent == s.q);
    if (s.m == 1)
      hit("3b", k.is_cyclic() && is_power_of(k.size(), s.q));

    auto const &kf = k.order.factors;
    // 3c: |K| = r^d q^f with r outside {p, q}, d >= 1.
    {
      bool shape = false, ok = false;
      std::uint64_t r = 0;
      unsigned d = 0, fq = 0;
      bool other = false;
      for (auto const &pp : kf) {
        if (pp.prime == s.q) {
          fq = pp.exponent;
        } else if (pp.prime != s.p && r == 0) {
          r = pp.prime;
          d = pp.exponent;
        } else {
          other = true;
        }
      }
      if (r != 0 && !other) {
        shape = true;
        bool params = !(s.m > 1 && (d != 1 || fq > 1)) && !(s.n > 1 && d != 1);
        ok = params && split_faithful(k, nt::checked_pow(r, d), nt::checked_pow(s.q, fq));
      }
      if (shape)
        hit("3c", ok);
    }
    // 3d: |K| = p^d q^(e+f) with e in {0, 1}.
    {
      unsigned d = 0, g = 0;
      bool other = false;
      for (auto const &pp : kf) {
        if (pp.prime == s.p)
          d = pp.exponent;
        else if (pp.prime == s.q)
          g = pp.exponent;
        else
          other = true;
      }
      if (d >= 1 && !other) {
        bool ok = false;
        for (unsigned e = 0; e <= std::min(g, 1u) && !ok; ++e) {
          unsigned fq = g - e;
          bool params = e == 1 ? (s.m == 1 && s.n == 1 && d == 1)
                               : (!(s.m > 1 && fq > 1) && !(s.n > 1 && d != 1));
          if (params)
            ok = split_faithful(k, nt::checked_pow(s.p, d) * nt::checked_pow(s.q, e),
                                nt::checked_pow(s.q, fq));
        }
        hit("3d", ok);
      }
    }
  }
}

} // namespace

ProductDecision decide_direct_product_unchecked(FiniteGroup const &h, FiniteGroup const &k)
{
  ProductDecision out;
  Facts fh(h), fk(k);
  if (fh.trivial() || fk.trivial()) {
    out.chordal = true;
    out.matched_case = "trivial";
    out.considered.push_back("trivial");
    out.matched.push_back("trivial");
    return out;
  }
  auto ph = fh.primes(), pk = fk.primes();
  if (ph.size() == 1 && pk.size() == 1 && ph[0] == pk[0]) {
    out.chordal = true;
    out.matched_case = "4";
    out.considered.push_back("4");
    out.matched.push_back("4");
    return out;
  }
  evaluate_roles(fh, fk, "", out);
  evaluate_roles(fk, fh, "swapped:", out);
  return out;
}

ProductDecision decide_direct_product(FiniteGroup const &h, FiniteGroup const &k)
{
  for (FiniteGroup const *f : {&h, &k}) {
    if (!is_chordal(power_graph(*f)).chordal)
      throw PreconditionError("decide_direct_product: factor " + f->name()
                              + " is not power-chordal");
  }
  return decide_direct_product_unchecked(h, k);
}

} // namespace pchord
