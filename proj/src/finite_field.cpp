#include "pchord/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "pchord/errors.hpp"
#include "pchord/numtheory.hpp"

namespace pchord::ff
{

namespace
{

using Poly = std::vector<std::uint32_t>;

struct ModulusRow
{
  std::uint32_t p;
  unsigned m;
  Poly modulus;
};

// Least monic irreducible polynomial (by code) for every p^m <= 512, m >= 2.
// Constant term first. Reproduced in docs/fields.md.
std::vector<ModulusRow> const &modulus_table()
{
  static std::vector<ModulusRow> const table = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {2, 9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 2, {1, 0, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {5, 2, {2, 0, 1}},
    {5, 3, {1, 1, 0, 1}},
    {7, 2, {1, 0, 1}},
    {7, 3, {2, 0, 0, 1}},
    {11, 2, {1, 0, 1}},
    {13, 2, {2, 0, 1}},
    {17, 2, {3, 0, 1}},
    {19, 2, {1, 0, 1}},
  };
  return table;
}

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p)
{
  return static_cast<std::uint32_t>(nt::pow_mod(a, p - 2, p));
}

// Remainder of a modulo b over GF(p); b must be non-zero with trimmed form.
Poly poly_mod(Poly a, Poly const &b, std::uint32_t p)
{
  trim(a);
  std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = c * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_code(std::uint64_t code, unsigned len, std::uint32_t p)
{
  Poly out(len);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

} // namespace

std::uint32_t FieldSpec::order() const
{
  return static_cast<std::uint32_t>(nt::checked_pow(p, m));
}

bool FieldElem::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool is_irreducible(std::uint32_t p, std::vector<std::uint32_t> const &poly)
{
  Poly f = poly;
  trim(f);
  if (f.size() < 2)
    return false;
  unsigned m = static_cast<unsigned>(f.size() - 1);
  // Any factorization has a monic factor of degree <= m/2.
  for (unsigned d = 1; d <= m / 2; ++d) {
    std::uint64_t count = nt::checked_pow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = poly_from_code(code, d, p);
      g.push_back(1);
      if (poly_mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.order())
{}

Field Field::from_spec(FieldSpec spec)
{
  if (!nt::is_prime(spec.p))
    throw InvalidArgument("field: characteristic must be prime");
  if (spec.m < 1 || spec.modulus.size() != spec.m + 1 || spec.modulus.back() != 1)
    throw InvalidArgument("field: modulus must be monic of degree m");
  for (std::uint32_t c : spec.modulus) {
    if (c >= spec.p)
      throw InvalidArgument("field: modulus coefficient out of range");
  }
  if (spec.m > 1 && !is_irreducible(spec.p, spec.modulus))
    throw InvalidArgument("field: modulus is reducible");
  return Field(std::move(spec));
}

Field Field::make(std::uint32_t p, unsigned m)
{
  if (!nt::is_prime(p))
    throw InvalidArgument("field: p must be prime");
  if (m < 1 || m > 16)
    throw InvalidArgument("field: extension degree must be in [1, 16]");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > (std::uint64_t{1} << 20))
      throw InvalidArgument("field: p^m must not exceed 2^20");
  }

  FieldSpec spec;
  spec.p = p;
  spec.m = m;
  if (m == 1) {
    spec.modulus = {0, 1};
    return Field(std::move(spec));
  }
  for (auto const &row : modulus_table()) {
    if (row.p == p && row.m == m) {
      spec.modulus = row.modulus;
      return from_spec(std::move(spec));
    }
  }
  std::uint64_t count = nt::checked_pow(p, m);
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = poly_from_code(code, m, p);
    f.push_back(1);
    if (is_irreducible(p, f)) {
      spec.modulus = std::move(f);
      return Field(std::move(spec));
    }
  }
  throw InternalError("field: no irreducible polynomial found");
}

Field Field::of_order(std::uint64_t q)
{
  auto pp = nt::as_prime_power(q);
  if (!pp)
    throw InvalidArgument("field: order " + std::to_string(q) + " is not a prime power");
  return make(static_cast<std::uint32_t>(pp->prime), pp->exponent);
}

void Field::check(FieldElem const &a) const
{
  if (a.coefficients().size() != spec_.m)
    throw InvalidArgument("field element does not belong to this field");
}

FieldElem Field::zero() const
{
  return FieldElem(Poly(spec_.m, 0));
}

FieldElem Field::one() const
{
  Poly c(spec_.m, 0);
  c[0] = 1;
  return FieldElem(std::move(c));
}

FieldElem Field::from_int(std::int64_t v) const
{
  std::int64_t p = spec_.p;
  Poly c(spec_.m, 0);
  c[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
  return FieldElem(std::move(c));
}

FieldElem Field::generator_x() const
{
  if (spec_.m == 1)
    return zero(); // x reduces to 0 modulo the modulus x
  Poly c(spec_.m, 0);
  c[1] = 1;
  return FieldElem(std::move(c));
}

FieldElem Field::add(FieldElem const &a, FieldElem const &b) const
{
  check(a);
  check(b);
  Poly c(spec_.m);
  for (unsigned i = 0; i < spec_.m; ++i)
    c[i] = (a.coefficients()[i] + b.coefficients()[i]) % spec_.p;
  return FieldElem(std::move(c));
}

FieldElem Field::neg(FieldElem const &a) const
{
  check(a);
  Poly c(spec_.m);
  for (unsigned i = 0; i < spec_.m; ++i)
    c[i] = (spec_.p - a.coefficients()[i]) % spec_.p;
  return FieldElem(std::move(c));
}

FieldElem Field::sub(FieldElem const &a, FieldElem const &b) const
{
  return add(a, neg(b));
}

FieldElem Field::mul(FieldElem const &a, FieldElem const &b) const
{
  check(a);
  check(b);
  std::uint64_t p = spec_.p;
  unsigned m = spec_.m;
  std::vector<std::uint64_t> prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j)
      prod[i + j] = (prod[i + j] + std::uint64_t{a.coefficients()[i]} * b.coefficients()[j]) % p;
  }
  // Reduce using x^m = -(modulus without its leading term).
  for (unsigned d = 2 * m - 2; d >= m && d < 2 * m - 1; --d) {
    std::uint64_t c = prod[d];
    if (c == 0)
      continue;
    prod[d] = 0;
    for (unsigned i = 0; i < m; ++i) {
      std::uint64_t sub = c * spec_.modulus[i] % p;
      prod[d - m + i] = (prod[d - m + i] + p - sub) % p;
    }
  }
  Poly out(m);
  for (unsigned i = 0; i < m; ++i)
    out[i] = static_cast<std::uint32_t>(prod[i]);
  return FieldElem(std::move(out));
}

FieldElem Field::pow(FieldElem const &a, std::int64_t e) const
{
  if (e < 0)
    return pow(inv(a), -e);
  FieldElem result = one();
  FieldElem base = a;
  auto u = static_cast<std::uint64_t>(e);
  while (u > 0) {
    if (u & 1u)
      result = mul(result, base);
    base = mul(base, base);
    u >>= 1;
  }
  return result;
}

FieldElem Field::inv(FieldElem const &a) const
{
  check(a);
  if (a.is_zero())
    throw InvalidArgument("field: division by zero");
  return pow(a, static_cast<std::int64_t>(q_) - 2);
}

std::uint64_t Field::multiplicative_order(FieldElem const &a) const
{
  if (a.is_zero())
    throw InvalidArgument("field: zero has no multiplicative order");
  std::uint64_t n = q_ - 1;
  std::uint64_t order = n;
  for (auto const &pp : nt::factor(n).factors) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (pow(a, static_cast<std::int64_t>(order / pp.prime)) == one())
        order /= pp.prime;
      else
        break;
    }
  }
  return order;
}

FieldElem Field::primitive_element() const
{
  if (q_ == 2)
    return one();
  for (std::uint32_t code = 2; code < q_; ++code) {
    FieldElem e = decode(code);
    if (multiplicative_order(e) == q_ - 1)
      return e;
  }
  throw InternalError("field: no primitive element");
}

std::uint32_t Field::encode(FieldElem const &a) const
{
  check(a);
  std::uint32_t code = 0;
  for (unsigned i = spec_.m; i-- > 0;)
    code = code * spec_.p + a.coefficients()[i];
  return code;
}

FieldElem Field::decode(std::uint32_t code) const
{
  if (code >= q_)
    throw InvalidArgument("field: code out of range");
  return FieldElem(poly_from_code(code, spec_.m, spec_.p));
}

std::string Field::format(FieldElem const &a) const
{
  check(a);
  if (spec_.m == 1)
    return std::to_string(a.coefficients()[0]);
  if (a.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (unsigned i = spec_.m; i-- > 0;) {
    std::uint32_t c = a.coefficients()[i];
    if (c == 0)
      continue;
    if (!first)
      os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1)
      os << c;
    os << 'w';
    if (i > 1)
      os << '^' << i;
  }
  return os.str();
}

FieldTables::FieldTables(Field field) : field_(std::move(field)), q_(field_.order())
{
  if (q_ > 4096)
    throw InvalidArgument("field tables limited to q <= 4096");
  std::vector<FieldElem> elems;
  elems.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c)
    elems.push_back(field_.decode(c));

  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    neg_[a] = field_.encode(field_.neg(elems[a]));
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = field_.encode(field_.add(elems[a], elems[b]));
      mul_[a * q_ + b] = field_.encode(field_.mul(elems[a], elems[b]));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
}

std::uint32_t FieldTables::inv(std::uint32_t a) const
{
  if (a == 0)
    throw InvalidArgument("field: division by zero");
  return inv_[a];
}

std::uint32_t FieldTables::pow(std::uint32_t a, std::int64_t e) const
{
  if (e < 0)
    return pow(inv(a), -e);
  std::uint32_t r = 1;
  for (std::int64_t i = 0; i < e; ++i)
    r = mul(r, a);
  return r;
}

} // namespace pchord::ff
