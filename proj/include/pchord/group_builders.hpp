#ifndef PCHORD_GROUP_BUILDERS_HPP
#define PCHORD_GROUP_BUILDERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "group.hpp"

namespace pchord
{

GroupPtr cyclic(std::uint32_t n, std::uint64_t cap = default_order_cap);
GroupPtr abelian(std::vector<std::uint32_t> const &moduli, std::uint64_t cap = default_order_cap);
GroupPtr symmetric(unsigned n, std::uint64_t cap = default_order_cap);
GroupPtr alternating(unsigned n, std::uint64_t cap = default_order_cap);

/// Generalized quaternion group of order four_n = 4n, n >= 2.
GroupPtr quaternion(std::uint32_t four_n, std::uint64_t cap = default_order_cap);

/// SL_k(q), generated by the transvections I + lambda E_ij with lambda
/// running over the polynomial basis 1, w, ..., w^(m-1).
GroupPtr special_linear(unsigned k, std::uint64_t q, std::uint64_t cap = default_order_cap);
/// SL_k(q) modulo scalars, canonicalized per element.
GroupPtr projective_special_linear(unsigned k, std::uint64_t q,
                                   std::uint64_t cap = default_order_cap);

std::uint64_t sl_order(unsigned k, std::uint64_t q);
std::uint64_t psl_order(unsigned k, std::uint64_t q);

struct SemidirectResult
{
  GroupPtr group;
  /// Whether the complement acts faithfully on the socle of the normal
  /// cyclic factor, i.e. k^(q^(n-1)) != 1 mod p.
  bool faithful_on_socle = false;
};

/// C_{p^m} x| C_{q^n}, the generator of the complement acting as a -> a^k.
/// Requires p, q prime and k^(q^n) = 1 mod p^m with gcd(k, p) = 1.
SemidirectResult semidirect_cyclic(std::uint32_t p, unsigned m, std::uint32_t q, unsigned n,
                                   std::uint32_t k, std::uint64_t cap = default_order_cap);

/// A x| C_2 with inversion; rejects non-abelian A.
GroupPtr generalized_dihedral(GroupPtr a, std::uint64_t cap = default_order_cap);

GroupPtr direct_product(GroupPtr h, GroupPtr k, std::uint64_t cap = default_order_cap);

/// Known orders of the sporadic groups that fit a desk-scale enumeration.
std::optional<std::uint64_t> sporadic_order(std::string const &name);

/// Loads permutation generators: first line the degree, then one
/// permutation per line in cycle notation. Blank lines and lines starting
/// with '#' are skipped. Throws ParseError on malformed data and
/// InvalidArgument when the closure order differs from the known order.
GroupPtr load_sporadic(std::string const &name, std::string const &path,
                       std::uint64_t cap = default_order_cap);

/// The same from an in-memory description.
GroupPtr sporadic_from_text(std::string const &name, std::string const &text,
                            std::uint64_t cap = default_order_cap);

} // namespace pchord

#endif // PCHORD_GROUP_BUILDERS_HPP
