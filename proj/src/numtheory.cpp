#include "pchord/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "pchord/errors.hpp"

namespace pchord::nt
{

namespace
{

constexpr std::uint64_t trial_bound = 1000000;

std::vector<std::uint32_t> const &small_primes()
{
  static std::vector<std::uint32_t> const primes = [] {
    std::vector<bool> composite(trial_bound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= trial_bound; ++i) {
      if (composite[i])
        continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= trial_bound; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin(std::uint64_t n)
{
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }

  // This witness set is deterministic for all n < 2^64.
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (a % n == 0)
      continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

// Brent's cycle detection with batched gcds. n is odd, composite, and has no
// prime factor below trial_bound.
std::uint64_t pollard_brent(std::uint64_t n)
{
  for (std::uint64_t c = 1;; ++c) {
    auto f = [n, c](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };

    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t batch = 128;

    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i)
        y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);

    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }

    if (g != n)
      return g;
  }
}

void factor_large(std::uint64_t n, std::map<std::uint64_t, unsigned> &out)
{
  if (n == 1)
    return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_brent(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

} // namespace

std::uint64_t FactoredInt::recompose() const
{
  std::uint64_t v = 1;
  for (auto const &f : factors)
    v = checked_mul(v, checked_pow(f.prime, f.exponent));
  return v;
}

std::vector<std::uint64_t> FactoredInt::primes() const
{
  std::vector<std::uint64_t> out;
  for (auto const &f : factors)
    out.push_back(f.prime);
  return out;
}

unsigned FactoredInt::multiplicity(std::uint64_t prime) const
{
  for (auto const &f : factors) {
    if (f.prime == prime)
      return f.exponent;
  }
  return 0;
}

std::string FactoredInt::to_string() const
{
  if (factors.empty())
    return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0)
      os << '*';
    os << factors[i].prime;
    if (factors[i].exponent > 1)
      os << '^' << factors[i].exponent;
  }
  return os.str();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m)
{
  if (m == 1)
    return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1u)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw RangeError("integer overflow in multiplication");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw RangeError("integer overflow in addition");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent)
{
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i)
    r = checked_mul(r, base);
  return r;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0)
      return n == p;
  }
  return miller_rabin(n);
}

FactoredInt factor(std::uint64_t n)
{
  if (n == 0)
    throw InvalidArgument("factor: n must be positive");

  FactoredInt result;
  result.value = n;

  std::uint64_t rest = n;
  for (std::uint32_t p : small_primes()) {
    if (static_cast<std::uint64_t>(p) * p > rest)
      break;
    if (rest % p != 0)
      continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }

  if (rest > 1) {
    std::map<std::uint64_t, unsigned> large;
    factor_large(rest, large);
    for (auto const &[p, e] : large)
      result.factors.push_back({p, e});
  }

  return result;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n)
{
  if (n < 2)
    return std::nullopt;
  auto f = factor(n);
  if (f.factors.size() != 1)
    return std::nullopt;
  return f.factors.front();
}

bool is_prime_power(std::uint64_t n)
{
  return as_prime_power(n).has_value();
}

std::uint64_t prime_part(std::uint64_t n, std::uint64_t prime)
{
  std::uint64_t part = 1;
  while (n % prime == 0) {
    n /= prime;
    part *= prime;
  }
  return part;
}

bool is_chordal_cyclic_order(std::uint64_t n)
{
  auto f = factor(n);
  if (f.factors.size() > 2)
    return false;
  return std::count_if(f.factors.begin(), f.factors.end(),
                       [](PrimePower const &pp) { return pp.exponent > 1; }) <= 1;
}

bool psl2_condition(std::uint64_t q)
{
  if (q < 4 || q == UINT64_MAX || !is_prime_power(q))
    throw InvalidArgument("psl2_condition: q must be a prime power >= 4");

  std::uint64_t minus = (q - 1) / std::gcd(q - 1, std::uint64_t{2});
  std::uint64_t plus = (q + 1) / std::gcd(q + 1, std::uint64_t{2});
  return is_chordal_cyclic_order(minus) && is_chordal_cyclic_order(plus);
}

bool sz_condition(unsigned n)
{
  if (n < 1)
    throw InvalidArgument("sz_condition: n must be >= 1");
  if (2 * n + 1 >= 64)
    throw RangeError("sz_condition: q = 2^(2n+1) exceeds 64 bits");

  std::uint64_t q = std::uint64_t{1} << (2 * n + 1);
  std::uint64_t r = checked_pow(2, n + 1);
  std::uint64_t a = q - 1;
  std::uint64_t b = q - r + 1;
  std::uint64_t c = checked_add(checked_add(q, r), 1);
  return is_chordal_cyclic_order(a) && is_chordal_cyclic_order(b) &&
         is_chordal_cyclic_order(c);
}

ScreenResult order_screen(std::span<const std::uint64_t> orders)
{
  for (std::uint64_t o : orders) {
    if (o == 0)
      throw InvalidArgument("order_screen: orders must be positive");
    auto f = factor(o);
    if (f.factors.size() >= 3) {
      ScreenResult r;
      r.pattern = ScreenPattern::pqr;
      r.offending_order = o;
      r.primes = {f.factors[0].prime, f.factors[1].prime, f.factors[2].prime};
      return r;
    }
    std::vector<std::uint64_t> squared;
    for (auto const &pp : f.factors) {
      if (pp.exponent >= 2)
        squared.push_back(pp.prime);
    }
    if (squared.size() >= 2) {
      ScreenResult r;
      r.pattern = ScreenPattern::p2q2;
      r.offending_order = o;
      r.primes = {squared[0], squared[1]};
      return r;
    }
  }
  return {};
}

bool is_eppo(std::span<const std::uint64_t> orders)
{
  return std::all_of(orders.begin(), orders.end(),
                     [](std::uint64_t o) { return o == 1 || is_prime_power(o); });
}

} // namespace pchord::nt
