#include "pchord/group_builders.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "pchord/errors.hpp"
#include "pchord/finite_field.hpp"
#include "pchord/numtheory.hpp"
#include "pchord/representations.hpp"

namespace pchord
{

namespace
{

std::uint64_t factorial_or_max(unsigned n)
{
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (__builtin_mul_overflow(r, std::uint64_t{i}, &r))
      return UINT64_MAX;
  }
  return r;
}

std::string join_moduli(std::vector<std::uint32_t> const &moduli)
{
  std::string s;
  for (std::size_t i = 0; i < moduli.size(); ++i)
    s += (i ? "x" : "") + std::to_string(moduli[i]);
  return s;
}

std::vector<Word> cycle_image(unsigned n, std::vector<unsigned> const &cycle)
{
  std::vector<Word> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return img;
}

std::vector<unsigned> range_cycle(unsigned first, unsigned last)
{
  std::vector<unsigned> c;
  for (unsigned i = first; i <= last; ++i)
    c.push_back(i);
  return c;
}

GroupPtr linear_group(unsigned k, std::uint64_t q, bool projective, std::uint64_t cap)
{
  if (k < 2)
    throw InvalidArgument("linear group: dimension must be at least 2");
  auto pp = nt::as_prime_power(q);
  if (!pp)
    throw InvalidArgument("linear group: q = " + std::to_string(q) + " is not a prime power");

  std::uint64_t order = projective ? psl_order(k, q) : sl_order(k, q);
  std::string name = std::string(projective ? "psl:" : "sl:") + std::to_string(k) + "," +
                     std::to_string(q);
  if (order > cap) {
    throw CapExceeded("group " + name + ": order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(cap));
  }

  auto field = ff::Field::of_order(q);
  auto tables = std::make_shared<const ff::FieldTables>(field);
  MatrixSpace space(k, tables);
  auto rep = std::make_shared<MatRep>(space, projective);

  std::vector<std::vector<Word>> gens;
  std::uint32_t basis = 1;
  for (unsigned d = 0; d < field.degree(); ++d) {
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = 0; j < k; ++j) {
        if (i == j)
          continue;
        auto m = space.identity();
        m[i * k + j] = basis;
        gens.push_back(m);
      }
    }
    basis *= field.characteristic();
  }
  return FiniteGroup::generate(name, rep, gens, order, cap);
}

} // namespace

GroupPtr cyclic(std::uint32_t n, std::uint64_t cap)
{
  if (n == 0)
    throw InvalidArgument("cyclic group: order must be positive");
  auto rep = std::make_shared<AbelianRep>(std::vector<std::uint32_t>{n});
  std::vector<std::vector<Word>> gens;
  if (n > 1)
    gens.push_back({1});
  return FiniteGroup::generate("cyclic:" + std::to_string(n), rep, gens, n, cap);
}

GroupPtr abelian(std::vector<std::uint32_t> const &moduli, std::uint64_t cap)
{
  if (moduli.empty())
    throw InvalidArgument("abelian group: need at least one factor");
  std::uint64_t order = 1;
  for (std::uint32_t m : moduli) {
    if (m == 0)
      throw InvalidArgument("abelian group: moduli must be positive");
    order = nt::checked_mul(order, m);
  }
  auto rep = std::make_shared<AbelianRep>(moduli);
  std::vector<std::vector<Word>> gens;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] == 1)
      continue;
    std::vector<Word> g(moduli.size(), 0);
    g[i] = 1;
    gens.push_back(g);
  }
  return FiniteGroup::generate("ab:" + join_moduli(moduli), rep, gens, order, cap);
}

GroupPtr symmetric(unsigned n, std::uint64_t cap)
{
  if (n == 0)
    throw InvalidArgument("symmetric group: degree must be positive");
  auto rep = std::make_shared<PermRep>(n);
  std::vector<std::vector<Word>> gens;
  if (n >= 2) {
    gens.push_back(cycle_image(n, {0, 1}));
    if (n >= 3)
      gens.push_back(cycle_image(n, range_cycle(0, n - 1)));
  }
  return FiniteGroup::generate("sym:" + std::to_string(n), rep, gens, factorial_or_max(n), cap);
}

GroupPtr alternating(unsigned n, std::uint64_t cap)
{
  if (n == 0)
    throw InvalidArgument("alternating group: degree must be positive");
  auto rep = std::make_shared<PermRep>(n);
  std::vector<std::vector<Word>> gens;
  std::uint64_t order = n <= 2 ? 1 : factorial_or_max(n);
  if (n >= 3) {
    if (order != UINT64_MAX)
      order /= 2;
    gens.push_back(cycle_image(n, {0, 1, 2}));
    if (n >= 4)
      gens.push_back(cycle_image(n, n % 2 == 1 ? range_cycle(0, n - 1) : range_cycle(1, n - 1)));
  }
  return FiniteGroup::generate("alt:" + std::to_string(n), rep, gens, order, cap);
}

GroupPtr quaternion(std::uint32_t four_n, std::uint64_t cap)
{
  if (four_n < 8 || four_n % 4 != 0)
    throw InvalidArgument("quaternion group: order must be 4n with n >= 2");
  std::uint32_t n = four_n / 4;
  auto rep = std::make_shared<QuaternionRep>(n);
  std::vector<std::vector<Word>> gens = {{1, 0}, {0, 1}};
  return FiniteGroup::generate("q:" + std::to_string(four_n), rep, gens, four_n, cap);
}

std::uint64_t sl_order(unsigned k, std::uint64_t q)
{
  std::uint64_t order = nt::checked_pow(q, k * (k - 1) / 2);
  for (unsigned i = 2; i <= k; ++i)
    order = nt::checked_mul(order, nt::checked_pow(q, i) - 1);
  return order;
}

std::uint64_t psl_order(unsigned k, std::uint64_t q)
{
  return sl_order(k, q) / std::gcd(std::uint64_t{k}, q - 1);
}

GroupPtr special_linear(unsigned k, std::uint64_t q, std::uint64_t cap)
{
  return linear_group(k, q, false, cap);
}

GroupPtr projective_special_linear(unsigned k, std::uint64_t q, std::uint64_t cap)
{
  return linear_group(k, q, true, cap);
}

SemidirectResult semidirect_cyclic(std::uint32_t p, unsigned m, std::uint32_t q, unsigned n,
                                   std::uint32_t k, std::uint64_t cap)
{
  if (!nt::is_prime(p) || !nt::is_prime(q))
    throw InvalidArgument("semidirect product: p and q must be prime");
  if (m < 1 || n < 1)
    throw InvalidArgument("semidirect product: exponents must be positive");
  std::uint64_t pm = nt::checked_pow(p, m);
  std::uint64_t qn = nt::checked_pow(q, n);
  if (pm > UINT32_MAX || qn > UINT32_MAX)
    throw InvalidArgument("semidirect product: factor too large");
  if (k % p == 0 || nt::pow_mod(k, qn, pm) != 1 % pm) {
    throw InvalidArgument("semidirect product: a -> a^" + std::to_string(k) +
                          " is not an automorphism of order dividing " + std::to_string(qn));
  }

  std::string name = "sd:" + std::to_string(p) + "^" + std::to_string(m) + "," +
                     std::to_string(q) + "^" + std::to_string(n) + "," + std::to_string(k);
  auto rep = std::make_shared<SemidirectRep>(static_cast<std::uint32_t>(pm),
                                             static_cast<std::uint32_t>(qn), k % pm);
  std::vector<std::vector<Word>> gens = {{1, 0}, {0, 1}};
  if (pm == 1)
    gens.erase(gens.begin());

  SemidirectResult r;
  r.group = FiniteGroup::generate(name, rep, gens, nt::checked_mul(pm, qn), cap);
  r.faithful_on_socle = nt::pow_mod(k, qn / q, p) != 1;
  return r;
}

GroupPtr generalized_dihedral(GroupPtr a, std::uint64_t cap)
{
  if (!a)
    throw InvalidArgument("generalized dihedral: missing group");
  for (ElemId x : a->generators()) {
    for (ElemId y : a->generators()) {
      if (!a->commute(x, y))
        throw InvalidArgument("generalized dihedral: " + a->name() + " is not abelian");
    }
  }
  auto rep = std::make_shared<GenDihedralRep>(a);
  std::vector<std::vector<Word>> gens;
  for (ElemId x : a->generators())
    gens.push_back({x, 0});
  gens.push_back({0, 1});
  return FiniteGroup::generate("dih:" + a->name(), rep, gens,
                               nt::checked_mul(2, a->size()), cap);
}

GroupPtr direct_product(GroupPtr h, GroupPtr k, std::uint64_t cap)
{
  if (!h || !k)
    throw InvalidArgument("direct product: missing factor");
  auto rep = std::make_shared<ProductRep>(h, k);
  std::vector<std::vector<Word>> gens;
  for (ElemId x : h->generators())
    gens.push_back({x, 0});
  for (ElemId y : k->generators())
    gens.push_back({0, y});
  return FiniteGroup::generate("prod(" + h->name() + "," + k->name() + ")", rep, gens,
                               nt::checked_mul(h->size(), k->size()), cap);
}

std::optional<std::uint64_t> sporadic_order(std::string const &name)
{
  static std::map<std::string, std::uint64_t> const known = {
    {"M11", 7920},    {"M12", 95040},  {"M22", 443520}, {"J1", 175560},
    {"J2", 604800},   {"M23", 10200960}, {"HS", 44352000}, {"J3", 50232960},
    {"M24", 244823040},
  };
  auto it = known.find(name);
  if (it == known.end())
    return std::nullopt;
  return it->second;
}

GroupPtr sporadic_from_text(std::string const &name, std::string const &text, std::uint64_t cap)
{
  auto order = sporadic_order(name);
  if (!order)
    throw InvalidArgument("sporadic group: unknown name " + name);

  std::istringstream in(text);
  std::string line;
  std::optional<unsigned> degree;
  std::vector<std::string> perms;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (!degree) {
      std::size_t used = 0;
      unsigned long d = 0;
      try {
        d = std::stoul(line, &used);
      } catch (std::exception const &) {
        throw ParseError("sporadic data: first line must be the degree");
      }
      if (used != line.size() || d == 0 || d > 4096)
        throw ParseError("sporadic data: invalid degree line \"" + line + "\"");
      degree = static_cast<unsigned>(d);
      continue;
    }
    perms.push_back(line);
  }
  if (!degree)
    throw ParseError("sporadic data: missing degree line");
  if (perms.empty())
    throw ParseError("sporadic data: no generators");

  auto rep = std::make_shared<PermRep>(*degree);
  std::vector<std::vector<Word>> gens;
  for (auto const &p : perms)
    gens.push_back(rep->parse(p));

  if (*order > cap) {
    throw CapExceeded("group " + name + ": order " + std::to_string(*order) +
                      " exceeds cap " + std::to_string(cap));
  }
  GroupPtr g;
  try {
    g = FiniteGroup::generate("sporadic:" + name, rep, gens, std::nullopt, *order);
  } catch (CapExceeded const &) {
    throw InvalidArgument("sporadic data for " + name + ": generators produce more than " +
                          std::to_string(*order) + " elements");
  }
  if (g->size() != *order) {
    throw InvalidArgument("sporadic data for " + name + ": closure has " +
                          std::to_string(g->size()) + " elements, expected " +
                          std::to_string(*order));
  }
  return g;
}

GroupPtr load_sporadic(std::string const &name, std::string const &path, std::uint64_t cap)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("sporadic data: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return sporadic_from_text(name, buf.str(), cap);
}

} // namespace pchord
