#ifndef PCHORD_CLASSIFY_HPP
#define PCHORD_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"
#include "numtheory.hpp"

namespace pchord
{

/// A finite simple group by family and parameters. Text forms:
///
///   cyclic:P  alt:N  psl:N,Q  sz:Q  psp:2N,Q  psu:N,Q  pomega:N,Q
///   pomega+:2N,Q  pomega-:2N,Q  g2:Q  ree:Q  f4:Q  2f4:Q  tits  3d4:Q
///   e6:Q  2e6:Q  e7:Q  e8:Q  sporadic:NAME
struct SimpleGroupId
{
  enum class Family
  {
    cyclic_prime,
    alt,
    psl,
    sz,
    psp,
    psu,
    pomega,
    pomega_plus,
    pomega_minus,
    g2,
    ree,
    f4,
    twisted_f4,
    tits,
    d4_triality,
    e6,
    twisted_e6,
    e7,
    e8,
    sporadic
  };
  Family family = Family::cyclic_prime;
  std::uint64_t n = 0; // degree or dimension, where the family has one
  std::uint64_t q = 0; // field order, or the prime for cyclic_prime
  std::string name;    // sporadic name
  std::string to_string() const;
  bool operator==(SimpleGroupId const &) const = default;
};

/// Throws ParseError on malformed text and InvalidArgument on parameters
/// that do not name a simple group (e.g. psu:3,2 or alt:4).
SimpleGroupId parse_simple_group_id(std::string const &text);

/// Applies the exceptional isomorphisms (psl:2,4 = psl:2,5 = alt:5,
/// psl:2,9 = alt:6, psl:3,2 = psl:2,7, psl:4,2 = alt:8, and the low-rank
/// coincidences among classical families). Throws InvalidArgument for
/// parameters outside the simple range.
SimpleGroupId normalize(SimpleGroupId id);

/// The 26 sporadic names accepted by sporadic:NAME.
std::vector<std::string> const &sporadic_names();

struct Verdict
{
  enum class Basis
  {
    predicate,
    brute_force,
    criterion
  };
  bool chordal = false;
  Basis basis = Basis::predicate;
  std::string certificate;
};

std::string to_string(Verdict::Basis b);

/// Power-chordality of a simple group: cyclic of prime order, Alt(5..7),
/// PSL_3(4), PSL_2(q) with psl2_condition(q), Sz(q) with sz_condition.
Verdict classify_simple(SimpleGroupId const &id);

/// Every element has prime-power order. Defined for the power-chordal
/// non-abelian simple groups; throws InvalidArgument otherwise.
bool simple_is_eppo(SimpleGroupId const &id);

/// Orders of the families that can be power-chordal; throws
/// InvalidArgument for others.
std::uint64_t simple_order(SimpleGroupId const &id);

struct SylowInfo
{
  std::uint64_t prime = 0;
  std::uint64_t order = 1;    // p-part of |G|
  std::uint64_t exponent = 1; // largest p-element order
  bool cyclic() const { return exponent == order; }
};

/// Sylow data of a nilpotent group, one entry per prime of |G|.
struct NilpotentStructure
{
  nt::FactoredInt order;
  std::vector<SylowInfo> sylows;
};

/// Every Sylow subgroup normal: the p-elements number exactly the p-part of
/// |G| for each prime. Throws PreconditionError otherwise.
NilpotentStructure recognize_nilpotent(FiniteGroup const &g);

/// A p-group, or C_{q^m} x P with P of exponent p.
bool nilpotent_predicate(NilpotentStructure const &s);

/// A x| C_2 is power-chordal iff A is. Throws InvalidArgument if A is not
/// abelian.
Verdict decide_generalized_dihedral(FiniteGroup const &a);

/// Q_{4n}: 2n = 2^a p^b for one odd prime p with a <= 1 or b <= 1.
Verdict decide_quaternion(std::uint64_t four_n);

struct ProductDecision
{
  bool chordal = false;
  /// "1", "2a" .. "2d", "3a" .. "3d", "4", "trivial", with a "swapped:"
  /// prefix when K plays the role of H. Empty for a "no" verdict.
  std::string matched_case;
  /// Every sub-case whose shape assumption on H held, whether or not the
  /// condition on K held.
  std::vector<std::string> considered;
  /// The sub-cases among `considered` whose condition on K held as well;
  /// matched_case is the first of them.
  std::vector<std::string> matched;
};

/// The case analysis for H x K with both factors power-chordal. Throws
/// PreconditionError when a factor is not power-chordal (checked by brute
/// force on its power graph).
ProductDecision decide_direct_product(FiniteGroup const &h, FiniteGroup const &k);

/// The same without re-checking the factors.
ProductDecision decide_direct_product_unchecked(FiniteGroup const &h, FiniteGroup const &k);

/// soc(G) described by the caller as C_p^m x C_q x T_1 x ... .
struct SocleDescriptor
{
  std::uint64_t p = 0;      // 0 when m = 0
  unsigned m = 0;
  std::uint64_t q = 0;      // optional extra C_q, 0 if absent
  std::vector<SimpleGroupId> simple;
};

/// soc(G) of a power-chordal G is C_p^m x C_q, C_p^m, T or C_p x T, with T
/// power-chordal, and T EPPO when p does not divide |T|.
bool check_socle_shape(SocleDescriptor const &d);

} // namespace pchord

#endif // PCHORD_CLASSIFY_HPP
