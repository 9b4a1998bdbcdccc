#ifndef PCHORD_NUMTHEORY_HPP
#define PCHORD_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pchord::nt
{

struct PrimePower
{
  std::uint64_t prime;
  unsigned exponent;

  bool operator==(PrimePower const &) const = default;
};

/// A positive integer with its prime factorization, primes ascending.
struct FactoredInt
{
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  std::uint64_t recompose() const;
  std::vector<std::uint64_t> primes() const;
  unsigned multiplicity(std::uint64_t prime) const;
  std::string to_string() const;
};

bool is_prime(std::uint64_t n);

/// Trial division below 10^6, then Brent's variant of Pollard rho.
/// Throws InvalidArgument for n = 0.
FactoredInt factor(std::uint64_t n);

/// (p, k) with n = p^k, k >= 1; nullopt for 1 and non prime powers.
std::optional<PrimePower> as_prime_power(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

/// Largest power of `prime` dividing n.
std::uint64_t prime_part(std::uint64_t n, std::uint64_t prime);

/// Throws RangeError on overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// At most two prime divisors, at most one of them with multiplicity > 1.
/// These are exactly the orders n for which the cyclic group C_n is
/// power-chordal.
bool is_chordal_cyclic_order(std::uint64_t n);

/// Both (q-1)/gcd(q-1,2) and (q+1)/gcd(q+1,2) pass is_chordal_cyclic_order.
/// Requires q >= 4 a prime power.
bool psl2_condition(std::uint64_t q);

/// For q = 2^(2n+1): q-1, q-2^(n+1)+1 and q+2^(n+1)+1 all pass
/// is_chordal_cyclic_order. Requires n >= 1; RangeError when q+2^(n+1)+1
/// does not fit in 64 bits.
bool sz_condition(unsigned n);

enum class ScreenPattern
{
  clean,
  p2q2, // divisible by p^2 q^2
  pqr   // divisible by p q r
};

struct ScreenResult
{
  ScreenPattern pattern = ScreenPattern::clean;
  std::uint64_t offending_order = 0;
  std::vector<std::uint64_t> primes; // the p, q (, r) witnessing the pattern

  bool clean() const { return pattern == ScreenPattern::clean; }
};

/// Looks for an order divisible by p^2 q^2 or by p q r (distinct primes).
/// The first offending order in input sequence is reported.
ScreenResult order_screen(std::span<const std::uint64_t> orders);

/// Every order is 1 or a prime power.
bool is_eppo(std::span<const std::uint64_t> orders);

} // namespace pchord::nt

#endif // PCHORD_NUMTHEORY_HPP
