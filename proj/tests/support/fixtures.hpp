#ifndef PCHORD_TESTS_FIXTURES_HPP
#define PCHORD_TESTS_FIXTURES_HPP

// Group families shared by the unit tests and the acceptance suite. Orders
// and isomorphism types are computed here from first principles (integer
// partitions, unit groups mod p^m) and never through the library's own
// classification code.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace fixtures
{

inline std::vector<std::pair<std::uint32_t, unsigned>> small_factor(std::uint32_t n)
{
  std::vector<std::pair<std::uint32_t, unsigned>> f;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e)
      f.emplace_back(p, e);
  }
  if (n > 1)
    f.emplace_back(n, 1);
  return f;
}

inline bool small_prime(std::uint32_t n)
{
  auto f = small_factor(n);
  return n > 1 && f.size() == 1 && f[0].second == 1;
}

inline std::vector<std::vector<unsigned>> partitions(unsigned n, unsigned max_part)
{
  if (n == 0)
    return {{}};
  std::vector<std::vector<unsigned>> out;
  for (unsigned first = std::min(n, max_part); first >= 1; --first)
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

/// Elementary divisor lists, one per isomorphism type of abelian group of
/// order n.
inline std::vector<std::vector<std::uint32_t>> abelian_types(std::uint32_t n)
{
  std::vector<std::vector<std::uint32_t>> out{{}};
  for (auto [p, e] : small_factor(n)) {
    std::vector<std::vector<std::uint32_t>> next;
    for (auto const &prefix : out)
      for (auto const &part : partitions(e, e)) {
        auto v = prefix;
        for (unsigned k : part) {
          std::uint32_t pk = 1;
          for (unsigned i = 0; i < k; ++i)
            pk *= p;
          v.push_back(pk);
        }
        next.push_back(v);
      }
    out = std::move(next);
  }
  if (n == 1)
    return {{1}};
  return out;
}

inline std::string abelian_spec(std::vector<std::uint32_t> const &moduli)
{
  if (moduli.size() == 1)
    return "cyclic:" + std::to_string(moduli[0]);
  std::string s = "ab:";
  for (std::size_t i = 0; i < moduli.size(); ++i)
    s += (i ? "x" : "") + std::to_string(moduli[i]);
  return s;
}

inline std::uint32_t pow_mod(std::uint32_t b, std::uint64_t e, std::uint32_t m)
{
  std::uint64_t r = 1 % m, x = b % m;
  for (; e; e >>= 1, x = x * x % m)
    if (e & 1)
      r = r * x % m;
  return static_cast<std::uint32_t>(r);
}

/// Specs sd:P^M,Q^N,K with p^m q^n <= max_order, one K per cyclic subgroup
/// of units it generates (distinct subgroups give distinct groups up to
/// isomorphism; the same subgroup gives isomorphic ones). K = 1 is
/// omitted since the direct product is cyclic.
inline std::vector<std::string> semidirect_specs(std::uint32_t max_order)
{
  std::vector<std::string> out;
  for (std::uint32_t p = 2; p <= max_order; ++p) {
    if (!small_prime(p))
      continue;
    std::uint32_t pm = p;
    for (unsigned m = 1; pm <= max_order / 2; ++m, pm *= p) {
      for (std::uint32_t q = 2; q <= max_order / pm; ++q) {
        if (!small_prime(q) || q == p)
          continue;
        std::uint32_t qn = q;
        for (unsigned n = 1; pm * qn <= max_order; ++n, qn *= q) {
          std::set<std::set<std::uint32_t>> seen;
          for (std::uint32_t k = 2; k < pm; ++k) {
            if (k % p == 0 || pow_mod(k, qn, pm) != 1)
              continue;
            std::set<std::uint32_t> sub;
            for (std::uint32_t i = 0; i < qn; ++i)
              sub.insert(pow_mod(k, i, pm));
            if (!seen.insert(sub).second)
              continue;
            out.push_back("sd:" + std::to_string(p) + "^" + std::to_string(m) + "," +
                          std::to_string(q) + "^" + std::to_string(n) + "," + std::to_string(k));
          }
        }
      }
    }
  }
  return out;
}

/// True iff the cyclic group of order n is power-chordal, decided by the
/// shape of n alone: at most two primes, at most one squared.
inline bool cyclic_shape_ok(std::uint32_t n)
{
  auto f = small_factor(n);
  unsigned squared = 0;
  for (auto [p, e] : f)
    squared += e > 1;
  return f.size() <= 2 && squared <= 1;
}

} // namespace fixtures

#endif // PCHORD_TESTS_FIXTURES_HPP
