#ifndef PCHORD_FINITE_FIELD_HPP
#define PCHORD_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pchord::ff
{

/// GF(p^m) as GF(p)[x]/(modulus). `modulus` holds m+1 coefficients,
/// constant term first, leading coefficient 1.
struct FieldSpec
{
  std::uint32_t p = 2;
  unsigned m = 1;
  std::vector<std::uint32_t> modulus;

  std::uint32_t order() const;
  bool operator==(FieldSpec const &) const = default;
};

/// Polynomial-basis coordinates, length m, each in [0, p).
class FieldElem
{
public:
  FieldElem() = default;
  explicit FieldElem(std::vector<std::uint32_t> coefficients)
  : coeffs_(std::move(coefficients))
  {}

  std::vector<std::uint32_t> const &coefficients() const { return coeffs_; }
  bool is_zero() const;

  bool operator==(FieldElem const &) const = default;

private:
  std::vector<std::uint32_t> coeffs_;
};

/// Every element also has an integer code sum c_i p^i in [0, q). Codes
/// give the fixed total order used for canonical forms and enumeration.
class Field
{
public:
  /// Deterministic field for p prime, 1 <= m <= 16, p^m <= 2^20: the
  /// shipped modulus table below 512 elements, otherwise the least
  /// irreducible polynomial by code.
  static Field make(std::uint32_t p, unsigned m);
  /// Field for the prime power q.
  static Field of_order(std::uint64_t q);
  /// Validates that `modulus` is monic and irreducible.
  static Field from_spec(FieldSpec spec);

  FieldSpec const &spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  unsigned degree() const { return spec_.m; }
  std::uint32_t order() const { return q_; }

  FieldElem zero() const;
  FieldElem one() const;
  /// The image of an integer under Z -> GF(p).
  FieldElem from_int(std::int64_t v) const;
  FieldElem generator_x() const; // the class of x (w in displays)

  FieldElem add(FieldElem const &a, FieldElem const &b) const;
  FieldElem sub(FieldElem const &a, FieldElem const &b) const;
  FieldElem neg(FieldElem const &a) const;
  FieldElem mul(FieldElem const &a, FieldElem const &b) const;
  /// Throws InvalidArgument (division by zero) for a = 0.
  FieldElem inv(FieldElem const &a) const;
  FieldElem pow(FieldElem const &a, std::int64_t e) const;

  std::uint64_t multiplicative_order(FieldElem const &a) const;
  /// First element in code order 2, 3, ... of multiplicative order q-1
  /// (for q = 2 the element 1).
  FieldElem primitive_element() const;

  std::uint32_t encode(FieldElem const &a) const;
  FieldElem decode(std::uint32_t code) const;

  /// Integers for prime fields; polynomials in w otherwise, e.g. "w+1".
  std::string format(FieldElem const &a) const;

private:
  explicit Field(FieldSpec spec);
  void check(FieldElem const &a) const;

  FieldSpec spec_;
  std::uint32_t q_ = 2;
};

bool is_irreducible(std::uint32_t p, std::vector<std::uint32_t> const &poly);

/// Dense add/mul/neg/inv lookup on codes, for q up to 4096.
class FieldTables
{
public:
  explicit FieldTables(Field field);

  Field const &field() const { return field_; }
  std::uint32_t order() const { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  /// Throws InvalidArgument for 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

  std::string format(std::uint32_t a) const { return field_.format(field_.decode(a)); }

private:
  Field field_;
  std::uint32_t q_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

using FieldTablesPtr = std::shared_ptr<const FieldTables>;

} // namespace pchord::ff

#endif // PCHORD_FINITE_FIELD_HPP
