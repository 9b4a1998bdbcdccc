#include <doctest.h>

#include <random>

#include "pchord/errors.hpp"
#include "pchord/numtheory.hpp"

#include "../support/fixtures.hpp"

using namespace pchord;
using namespace pchord::nt;

namespace
{

// Independent primality oracle: Miller-Rabin with 128-bit products and the
// first twelve primes as witnesses (deterministic below 3.3e24).
bool oracle_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0)
      return n == p;
  auto mulmod = [](unsigned __int128 a, unsigned __int128 b, std::uint64_t m) {
    return static_cast<std::uint64_t>(a * b % m);
  };
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = 1, base = a, e = d;
    for (; e; e >>= 1, base = mulmod(base, base, n))
      if (e & 1)
        x = mulmod(x, base, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      composite = x != n - 1;
    }
    if (composite)
      return false;
  }
  return true;
}

std::vector<PrimePower> pp(std::initializer_list<std::pair<std::uint64_t, unsigned>> l)
{
  std::vector<PrimePower> v;
  for (auto [p, e] : l)
    v.push_back({p, e});
  return v;
}

} // namespace

TEST_SUITE("numtheory")
{
  TEST_CASE("factor examples")
  {
    CHECK(factor(1).factors.empty());
    CHECK(factor(1).value == 1);
    CHECK(factor(12).factors == pp({{2, 2}, {3, 1}}));
    // 58800 = |PSL2(49)|, by trial division in the oracle below.
    CHECK(factor(58800).factors == pp({{2, 4}, {3, 1}, {5, 2}, {7, 2}}));
    CHECK_THROWS_AS(factor(0), InvalidArgument);
  }

  TEST_CASE("factor agrees with trial division up to 10^6")
  {
    for (std::uint32_t n = 1; n <= 1000000; ++n) {
      auto f = factor(n);
      auto o = fixtures::small_factor(n);
      REQUIRE(f.factors.size() == o.size());
      for (std::size_t i = 0; i < o.size(); ++i) {
        REQUIRE(f.factors[i].prime == o[i].first);
        REQUIRE(f.factors[i].exponent == o[i].second);
      }
      REQUIRE(f.recompose() == n);
    }
  }

  TEST_CASE("factor recomposes random 64-bit integers")
  {
    std::mt19937_64 rng(20240531);
    for (int i = 0; i < 300; ++i) {
      std::uint64_t n = rng() | 1;
      if (i % 3 == 0)
        n = (rng() >> 32) * (rng() >> 33); // products of two ~31-bit numbers
      if (n == 0)
        continue;
      auto f = factor(n);
      CHECK(f.recompose() == n);
      for (std::size_t k = 0; k < f.factors.size(); ++k) {
        CHECK(oracle_prime(f.factors[k].prime));
        if (k)
          CHECK(f.factors[k - 1].prime < f.factors[k].prime);
      }
    }
  }

  TEST_CASE("primality matches the oracle")
  {
    for (std::uint64_t n = 0; n < 20000; ++n)
      REQUIRE(is_prime(n) == oracle_prime(n));
    CHECK(is_prime(18446744073709551557ull)); // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ull)); // 2^64 - 1, divisible by 3
  }

  TEST_CASE("prime powers")
  {
    CHECK(as_prime_power(1) == std::nullopt);
    CHECK(as_prime_power(12) == std::nullopt);
    CHECK(as_prime_power(49) == PrimePower{7, 2});
    CHECK(is_prime_power(2));
    CHECK(prime_part(58800, 7) == 49);
    CHECK(prime_part(58800, 11) == 1);
  }

  TEST_CASE("checked arithmetic")
  {
    CHECK(checked_pow(2, 63) == (1ull << 63));
    CHECK_THROWS_AS(checked_pow(2, 64), RangeError);
    CHECK_THROWS_AS(checked_mul(1ull << 32, 1ull << 32), RangeError);
    CHECK_THROWS_AS(checked_add(~0ull, 1), RangeError);
  }

  TEST_CASE("cyclic chordal orders")
  {
    CHECK(is_chordal_cyclic_order(12));
    CHECK_FALSE(is_chordal_cyclic_order(30));
    CHECK_FALSE(is_chordal_cyclic_order(36));
    for (std::uint32_t n = 1; n <= 10000; ++n)
      REQUIRE(is_chordal_cyclic_order(n) == fixtures::cyclic_shape_ok(n));
  }

  TEST_CASE("PSL2 condition")
  {
    CHECK(psl2_condition(17));  // 8, 9
    CHECK_FALSE(psl2_condition(61)); // 30 = 2 3 5
    CHECK(psl2_condition(49));  // 24, 25
    CHECK_THROWS_AS(psl2_condition(6), InvalidArgument);
    CHECK_THROWS_AS(psl2_condition(3), InvalidArgument);
    // Oracle: both halves through the shape test.
    for (std::uint32_t q = 4; q <= 2000; ++q) {
      if (fixtures::small_factor(q).size() != 1)
        continue;
      std::uint32_t d = q % 2 ? 2 : 1;
      bool expect = fixtures::cyclic_shape_ok((q - 1) / d) && fixtures::cyclic_shape_ok((q + 1) / d);
      REQUIRE(psl2_condition(q) == expect);
    }
  }

  TEST_CASE("Suzuki condition")
  {
    CHECK(sz_condition(1)); // 7, 5, 13
    CHECK(sz_condition(2)); // 31, 25, 41
    CHECK(sz_condition(3)); // 127, 113, 145 = 5 29
    CHECK_THROWS_AS(sz_condition(0), InvalidArgument);
    CHECK_THROWS_AS(sz_condition(32), RangeError);
    CHECK(sz_condition(5) == sz_condition(5));
    // 2^11 - 1 = 23 89, 2^11 - 2^6 + 1 = 1985 = 5 397, 2^11 + 2^6 + 1 = 2113 prime.
    CHECK(sz_condition(5));
  }

  TEST_CASE("order screen")
  {
    std::vector<std::uint64_t> a{1, 2, 3, 6}, b{36}, c{30};
    CHECK(order_screen(a).clean());
    auto rb = order_screen(b);
    CHECK(rb.pattern == ScreenPattern::p2q2);
    CHECK(rb.primes == std::vector<std::uint64_t>{2, 3});
    auto rc = order_screen(c);
    CHECK(rc.pattern == ScreenPattern::pqr);
    CHECK(rc.offending_order == 30);
    CHECK(rc.primes == std::vector<std::uint64_t>{2, 3, 5});
  }

  TEST_CASE("EPPO")
  {
    std::vector<std::uint64_t> psl27{1, 2, 3, 4, 7}, c6{1, 2, 3, 6}, pk{1, 125};
    CHECK(is_eppo(psl27));
    CHECK_FALSE(is_eppo(c6));
    CHECK(is_eppo(pk));
  }

  TEST_CASE("EPPO implies a clean screen")
  {
    std::mt19937 rng(7);
    for (int t = 0; t < 2000; ++t) {
      std::vector<std::uint64_t> orders{1};
      for (int i = 0; i < 4; ++i)
        orders.push_back(1 + rng() % 400);
      if (is_eppo(orders))
        REQUIRE(order_screen(orders).clean());
    }
  }
}
