#include "pchord/classify.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "pchord/errors.hpp"
#include "pchord/group_queries.hpp"

namespace pchord
{

namespace
{

using Family = SimpleGroupId::Family;

struct FamilyName
{
  Family family;
  char const *tag;
  unsigned params; // 0, 1 (q or n) or 2 (n, q)
};

constexpr FamilyName family_names[] = {
  {Family::cyclic_prime, "cyclic", 1},
  {Family::alt, "alt", 1},
  {Family::psl, "psl", 2},
  {Family::sz, "sz", 1},
  {Family::psp, "psp", 2},
  {Family::psu, "psu", 2},
  {Family::pomega, "pomega", 2},
  {Family::pomega_plus, "pomega+", 2},
  {Family::pomega_minus, "pomega-", 2},
  {Family::g2, "g2", 1},
  {Family::ree, "ree", 1},
  {Family::f4, "f4", 1},
  {Family::twisted_f4, "2f4", 1},
  {Family::tits, "tits", 0},
  {Family::d4_triality, "3d4", 1},
  {Family::e6, "e6", 1},
  {Family::twisted_e6, "2e6", 1},
  {Family::e7, "e7", 1},
  {Family::e8, "e8", 1},
  {Family::sporadic, "sporadic", 0},
};

FamilyName const &family_info(Family f)
{
  for (auto const &fn : family_names)
    if (fn.family == f)
      return fn;
  throw InternalError("unknown simple group family");
}

std::uint64_t parse_uint(std::string const &s, std::string const &text)
{
  if (s.empty() || s.size() > 19 || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw ParseError("simple group id '" + text + "': expected a positive integer, got '" + s + "'");
  return std::stoull(s);
}

void require_prime_power(std::uint64_t q, std::string const &what)
{
  if (!nt::is_prime_power(q))
    throw InvalidArgument(what + ": q = " + std::to_string(q) + " is not a prime power");
}

// q = base^(2k+1) with k >= 1.
bool odd_power_at_least_cube(std::uint64_t q, std::uint64_t base)
{
  auto pp = nt::as_prime_power(q);
  return pp && pp->prime == base && pp->exponent % 2 == 1 && pp->exponent >= 3;
}

void validate(SimpleGroupId const &id)
{
  std::string s = id.to_string();
  switch (id.family) {
  case Family::cyclic_prime:
    if (!nt::is_prime(id.q))
      throw InvalidArgument(s + ": order must be prime");
    break;
  case Family::alt:
    if (id.n < 5)
      throw InvalidArgument(s + ": Alt(n) is simple only for n >= 5");
    break;
  case Family::psl:
    require_prime_power(id.q, s);
    if (id.n < 2 || (id.n == 2 && id.q <= 3))
      throw InvalidArgument(s + ": not simple");
    break;
  case Family::sz:
    if (!odd_power_at_least_cube(id.q, 2))
      throw InvalidArgument(s + ": Sz(q) needs q = 2^(2n+1) >= 8");
    break;
  case Family::psp:
    require_prime_power(id.q, s);
    if (id.n < 2 || id.n % 2 != 0 || (id.n == 2 && id.q <= 3) || (id.n == 4 && id.q == 2))
      throw InvalidArgument(s + ": not simple");
    break;
  case Family::psu:
    require_prime_power(id.q, s);
    if (id.n < 2 || (id.n == 2 && id.q <= 3) || (id.n == 3 && id.q == 2))
      throw InvalidArgument(s + ": not simple");
    break;
  case Family::pomega:
    require_prime_power(id.q, s);
    if (id.n < 3 || id.n % 2 == 0 || (id.n == 3 && id.q <= 3) || (id.n == 5 && id.q == 2))
      throw InvalidArgument(s + ": not simple");
    break;
  case Family::pomega_plus:
    require_prime_power(id.q, s);
    if (id.n < 6 || id.n % 2 != 0)
      throw InvalidArgument(s + ": not simple");
    break;
  case Family::pomega_minus:
    require_prime_power(id.q, s);
    if (id.n < 4 || id.n % 2 != 0)
      throw InvalidArgument(s + ": not simple");
    break;
  case Family::g2:
    require_prime_power(id.q, s);
    if (id.q == 2)
      throw InvalidArgument(s + ": G2(2) is not simple");
    break;
  case Family::ree:
    if (!odd_power_at_least_cube(id.q, 3))
      throw InvalidArgument(s + ": Ree(q) needs q = 3^(2n+1) >= 27");
    break;
  case Family::twisted_f4:
    if (!odd_power_at_least_cube(id.q, 2))
      throw InvalidArgument(s + ": 2F4(q) needs q = 2^(2n+1) >= 8; use tits for 2F4(2)'");
    break;
  case Family::f4:
  case Family::d4_triality:
  case Family::e6:
  case Family::twisted_e6:
  case Family::e7:
  case Family::e8:
    require_prime_power(id.q, s);
    break;
  case Family::tits:
    break;
  case Family::sporadic: {
    auto const &names = sporadic_names();
    if (std::find(names.begin(), names.end(), id.name) == names.end())
      throw InvalidArgument(s + ": unknown sporadic group");
    break;
  }
  }
}

SimpleGroupId make(Family f, std::uint64_t n, std::uint64_t q)
{
  SimpleGroupId id;
  id.family = f;
  id.n = n;
  id.q = q;
  return id;
}

// One rewriting step; returns false at a fixpoint.
bool normalize_step(SimpleGroupId &id)
{
  auto [f, n, q] = std::tuple{id.family, id.n, id.q};
  switch (f) {
  case Family::psl:
    if (n == 2 && (q == 4 || q == 5)) {
      id = make(Family::alt, 5, 0);
      return true;
    }
    if (n == 2 && q == 9) {
      id = make(Family::alt, 6, 0);
      return true;
    }
    if (n == 3 && q == 2) {
      id = make(Family::psl, 2, 7);
      return true;
    }
    if (n == 4 && q == 2) {
      id = make(Family::alt, 8, 0);
      return true;
    }
    return false;
  case Family::psp:
    if (n == 2) {
      id = make(Family::psl, 2, q);
      return true;
    }
    return false;
  case Family::psu:
    if (n == 2) {
      id = make(Family::psl, 2, q);
      return true;
    }
    return false;
  case Family::pomega:
    if (n == 3) {
      id = make(Family::psl, 2, q);
      return true;
    }
    if (q % 2 == 0 || n == 5) {
      // B_n(2^k) = C_n(2^k), and B_2(q) = C_2(q).
      id = make(Family::psp, n - 1, q);
      return true;
    }
    return false;
  case Family::pomega_plus:
    if (n == 6) {
      id = make(Family::psl, 4, q);
      return true;
    }
    return false;
  case Family::pomega_minus:
    if (n == 4) {
      id = make(Family::psl, 2, nt::checked_mul(q, q));
      return true;
    }
    if (n == 6) {
      id = make(Family::psu, 4, q);
      return true;
    }
    return false;
  default:
    return false;
  }
}

} // namespace

std::vector<std::string> const &sporadic_names()
{
  static std::vector<std::string> const names = {
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "Co1", "Co2", "Co3", "Fi22",
    "Fi23", "Fi24'", "HS", "McL", "He", "Ru", "Suz", "O'N", "HN", "Ly", "Th", "B", "M"};
  return names;
}

std::string SimpleGroupId::to_string() const
{
  auto const &fn = family_info(family);
  std::string out = fn.tag;
  switch (family) {
  case Family::tits:
    return out;
  case Family::sporadic:
    return out + ":" + name;
  case Family::alt:
    return out + ":" + std::to_string(n);
  default:
    break;
  }
  if (fn.params == 2)
    return out + ":" + std::to_string(n) + "," + std::to_string(q);
  return out + ":" + std::to_string(q);
}

SimpleGroupId parse_simple_group_id(std::string const &text)
{
  std::string tag = text, rest;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    tag = text.substr(0, colon);
    rest = text.substr(colon + 1);
  }
  FamilyName const *fn = nullptr;
  for (auto const &f : family_names)
    if (tag == f.tag)
      fn = &f;
  if (!fn)
    throw ParseError("simple group id '" + text + "': unknown family '" + tag + "'");

  SimpleGroupId id;
  id.family = fn->family;
  if (fn->family == Family::tits) {
    if (colon != std::string::npos)
      throw ParseError("simple group id '" + text + "': tits takes no parameters");
  } else if (fn->family == Family::sporadic) {
    if (rest.empty())
      throw ParseError("simple group id '" + text + "': missing sporadic name");
    id.name = rest;
  } else {
    if (colon == std::string::npos)
      throw ParseError("simple group id '" + text + "': missing parameters");
    std::vector<std::string> parts;
    std::stringstream ss(rest);
    for (std::string part; std::getline(ss, part, ',');)
      parts.push_back(part);
    if (!rest.empty() && rest.back() == ',')
      parts.push_back("");
    if (parts.size() != fn->params)
      throw ParseError("simple group id '" + text + "': expected " + std::to_string(fn->params)
                       + " parameter(s)");
    if (fn->params == 2) {
      id.n = parse_uint(parts[0], text);
      id.q = parse_uint(parts[1], text);
    } else if (fn->family == Family::alt) {
      id.n = parse_uint(parts[0], text);
    } else {
      id.q = parse_uint(parts[0], text);
    }
  }
  validate(id);
  return id;
}

SimpleGroupId normalize(SimpleGroupId id)
{
  validate(id);
  while (normalize_step(id))
    validate(id);
  return id;
}

std::string to_string(Verdict::Basis b)
{
  switch (b) {
  case Verdict::Basis::brute_force:
    return "brute-force";
  case Verdict::Basis::criterion:
    return "criterion";
  default:
    return "predicate";
  }
}

Verdict classify_simple(SimpleGroupId const &raw)
{
  SimpleGroupId id = normalize(raw);
  Verdict v;
  v.basis = Verdict::Basis::predicate;
  std::string name = id.to_string();
  switch (id.family) {
  case Family::cyclic_prime:
    v.chordal = true;
    v.certificate = "cyclic of prime order";
    break;
  case Family::alt:
    v.chordal = id.n <= 7;
    v.certificate = v.chordal ? "Alt(5), Alt(6) and Alt(7) are power-chordal"
                              : "Alt(n) with n >= 8 is not power-chordal";
    break;
  case Family::psl:
    if (id.n == 2) {
      v.chordal = nt::psl2_condition(id.q);
      v.certificate = "(q-1)/gcd(q-1,2) = " + std::to_string((id.q - 1) / (id.q % 2 ? 2 : 1))
                      + ", (q+1)/gcd(q+1,2) = " + std::to_string((id.q + 1) / (id.q % 2 ? 2 : 1));
    } else if (id.n == 3 && id.q == 4) {
      v.chordal = true;
      v.certificate = "PSL_3(4) is power-chordal";
    } else {
      v.chordal = false;
      v.certificate = "PSL_n(q) with n >= 3 other than PSL_3(2), PSL_3(4)";
    }
    break;
  case Family::sz: {
    unsigned e = nt::as_prime_power(id.q)->exponent;
    v.chordal = nt::sz_condition((e - 1) / 2);
    v.certificate = "q-1 and q +- 2^(n+1) + 1 against the cyclic-order condition";
    break;
  }
  default:
    v.chordal = false;
    v.certificate = "not in the list of power-chordal simple groups";
    break;
  }
  v.certificate = name + ": " + v.certificate;
  return v;
}

std::uint64_t simple_order(SimpleGroupId const &raw)
{
  SimpleGroupId id = normalize(raw);
  switch (id.family) {
  case Family::cyclic_prime:
    return id.q;
  case Family::alt: {
    if (id.n > 20)
      throw RangeError("simple_order: Alt(n) order overflows for n > 20");
    std::uint64_t f = 1;
    for (std::uint64_t i = 3; i <= id.n; ++i)
      f *= i;
    return f;
  }
  case Family::psl:
    if (id.n == 2) {
      std::uint64_t q = id.q;
      std::uint64_t o = nt::checked_mul(q, nt::checked_mul(q - 1, q + 1));
      return q % 2 ? o / 2 : o;
    }
    if (id.n == 3 && id.q == 4)
      return 20160;
    break;
  case Family::sz: {
    std::uint64_t q = id.q;
    std::uint64_t q2 = nt::checked_mul(q, q);
    return nt::checked_mul(q2, nt::checked_mul(q2 + 1, q - 1));
  }
  default:
    break;
  }
  throw InvalidArgument("simple_order: not available for " + id.to_string());
}

bool simple_is_eppo(SimpleGroupId const &raw)
{
  SimpleGroupId id = normalize(raw);
  auto pp_or_one = [](std::uint64_t n) { return n == 1 || nt::is_prime_power(n); };
  switch (id.family) {
  case Family::cyclic_prime:
    return true;
  case Family::alt:
    if (id.n <= 7)
      return id.n <= 6;
    break;
  case Family::psl:
    if (id.n == 2) {
      std::uint64_t d = id.q % 2 ? 2 : 1;
      return pp_or_one((id.q - 1) / d) && pp_or_one((id.q + 1) / d);
    }
    if (id.n == 3 && id.q == 4)
      return true;
    break;
  case Family::sz: {
    unsigned e = nt::as_prime_power(id.q)->exponent;
    std::uint64_t r = std::uint64_t{1} << ((e + 1) / 2);
    return pp_or_one(id.q - 1) && pp_or_one(id.q - r + 1) && pp_or_one(id.q + r + 1);
  }
  default:
    break;
  }
  throw InvalidArgument("simple_is_eppo: only defined for power-chordal simple groups, got "
                        + id.to_string());
}

NilpotentStructure recognize_nilpotent(FiniteGroup const &g)
{
  NilpotentStructure s;
  s.order = nt::factor(g.size());
  for (auto const &pp : s.order.factors) {
    SylowInfo info;
    info.prime = pp.prime;
    info.order = nt::checked_pow(pp.prime, pp.exponent);
    std::uint64_t count = 0;
    for (std::uint32_t o : g.element_orders()) {
      if (nt::prime_part(o, pp.prime) == o) {
        ++count;
        info.exponent = std::max<std::uint64_t>(info.exponent, o);
      }
    }
    if (count != info.order)
      throw PreconditionError("recognize_nilpotent: " + g.name() + " has a non-normal Sylow "
                              + std::to_string(pp.prime) + "-subgroup");
    s.sylows.push_back(info);
  }
  return s;
}

bool nilpotent_predicate(NilpotentStructure const &s)
{
  if (s.sylows.size() <= 1)
    return true;
  if (s.sylows.size() > 2)
    return false;
  auto const &a = s.sylows[0];
  auto const &b = s.sylows[1];
  return (a.cyclic() && b.exponent == b.prime) || (b.cyclic() && a.exponent == a.prime);
}

Verdict decide_generalized_dihedral(FiniteGroup const &a)
{
  if (!is_abelian(a))
    throw InvalidArgument("decide_generalized_dihedral: " + a.name() + " is not abelian");
  auto s = recognize_nilpotent(a);
  Verdict v;
  v.chordal = nilpotent_predicate(s);
  v.certificate = "A = " + a.name() + " of order " + s.order.to_string()
                  + (v.chordal ? " is power-chordal" : " is not power-chordal");
  return v;
}

Verdict decide_quaternion(std::uint64_t four_n)
{
  if (four_n < 8 || four_n % 4 != 0)
    throw InvalidArgument("decide_quaternion: order must be 4n with n >= 2");
  auto f = nt::factor(four_n / 2);
  unsigned a = f.multiplicity(2);
  std::vector<nt::PrimePower> odd;
  for (auto const &pp : f.factors)
    if (pp.prime != 2)
      odd.push_back(pp);
  Verdict v;
  v.chordal = odd.empty() || (odd.size() == 1 && (a <= 1 || odd[0].exponent <= 1));
  v.certificate = "2n = " + f.to_string();
  return v;
}

bool check_socle_shape(SocleDescriptor const &d0)
{
  SocleDescriptor d = d0;
  if (d.m > 0 && !nt::is_prime(d.p))
    throw InvalidArgument("check_socle_shape: p must be prime");
  if (d.q != 0 && !nt::is_prime(d.q))
    throw InvalidArgument("check_socle_shape: q must be prime");
  for (auto const &t : d.simple)
    if (normalize(t).family == Family::cyclic_prime)
      throw InvalidArgument("check_socle_shape: simple factors must be non-abelian");
  // Fold the extra C_q into the elementary abelian part where possible.
  if (d.q != 0 && (d.m == 0 || d.q == d.p)) {
    if (d.m == 0)
      d.p = d.q;
    ++d.m;
    d.q = 0;
  }

  if (d.simple.empty())
    return true;
  if (d.simple.size() > 1 || d.q != 0 || d.m > 1)
    return false;
  SimpleGroupId const &t = d.simple[0];
  if (!classify_simple(t).chordal)
    return false;
  if (d.m == 0)
    return true;
  if (simple_order(t) % d.p == 0)
    return true;
  return simple_is_eppo(t);
}

} // namespace pchord
