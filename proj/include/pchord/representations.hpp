#ifndef PCHORD_REPRESENTATIONS_HPP
#define PCHORD_REPRESENTATIONS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"

namespace pchord
{

/// Permutations of {0..n-1}, composed left to right: (ab)(i) = b(a(i)).
/// Labels use disjoint cycles on 1..n.
class PermRep : public Representation
{
public:
  explicit PermRep(unsigned degree) : n_(degree) {}

  unsigned degree() const { return n_; }

  unsigned width() const override { return n_; }
  void identity(Word *out) const override;
  void mul(Word const *a, Word const *b, Word *out) const override;
  std::string label(Word const *x) const override;

  /// Parses "(1,2,3)(4,5)" or "()" into an image vector; throws ParseError.
  std::vector<Word> parse(std::string const &cycles) const;

private:
  unsigned n_;
};

/// k x k matrices over GF(q). With `projective`, words are reduced to the
/// least (row-major, by field code) member of {lambda M : lambda^k = 1}.
class MatRep : public Representation
{
public:
  MatRep(MatrixSpace space, bool projective);

  MatrixSpace const &space() const { return space_; }
  bool projective() const { return projective_; }
  std::vector<std::uint32_t> const &scalars() const { return scalars_; }

  unsigned width() const override { return space_.entries(); }
  void identity(Word *out) const override;
  void mul(Word const *a, Word const *b, Word *out) const override;
  void canonicalize(Word *x) const override;
  std::string label(Word const *x) const override;

private:
  MatrixSpace space_;
  bool projective_;
  std::vector<std::uint32_t> scalars_; // lambda != 1 with lambda^k = 1
};

/// Z/n1 x Z/n2 x ... written additively.
class AbelianRep : public Representation
{
public:
  explicit AbelianRep(std::vector<std::uint32_t> moduli);

  std::vector<std::uint32_t> const &moduli() const { return moduli_; }

  unsigned width() const override { return static_cast<unsigned>(moduli_.size()); }
  void identity(Word *out) const override;
  void mul(Word const *a, Word const *b, Word *out) const override;
  std::string label(Word const *x) const override;

private:
  std::vector<std::uint32_t> moduli_;
};

/// Q_4n: words (i, j) meaning x^i y^j with 0 <= i < 2n, j in {0,1};
/// y x = x^-1 y and y^2 = x^n.
class QuaternionRep : public Representation
{
public:
  explicit QuaternionRep(std::uint32_t n) : n_(n) {}

  unsigned width() const override { return 2; }
  void identity(Word *out) const override;
  void mul(Word const *a, Word const *b, Word *out) const override;
  std::string label(Word const *x) const override;

private:
  std::uint32_t n_;
};

/// C_n x| C_m: words (a, b) meaning x^a y^b with y x y^-1 = x^k, so
/// (a1,b1)(a2,b2) = (a1 + k^b1 a2, b1 + b2).
class SemidirectRep : public Representation
{
public:
  SemidirectRep(std::uint32_t normal_order, std::uint32_t complement_order, std::uint32_t k);

  unsigned width() const override { return 2; }
  void identity(Word *out) const override;
  void mul(Word const *a, Word const *b, Word *out) const override;
  std::string label(Word const *x) const override;

private:
  std::uint32_t n_, m_;
  std::vector<std::uint32_t> kpow_; // k^b mod n for b < m
};

/// A x| C_2 with the involution inverting the abelian group A. Words
/// (a, s) with a an element index of A.
class GenDihedralRep : public Representation
{
public:
  explicit GenDihedralRep(GroupPtr abelian) : a_(std::move(abelian)) {}

  unsigned width() const override { return 2; }
  void identity(Word *out) const override;
  void mul(Word const *a, Word const *b, Word *out) const override;
  std::string label(Word const *x) const override;

private:
  GroupPtr a_;
};

/// H x K over element indices of the factors.
class ProductRep : public Representation
{
public:
  ProductRep(GroupPtr h, GroupPtr k) : h_(std::move(h)), k_(std::move(k)) {}

  GroupPtr const &first() const { return h_; }
  GroupPtr const &second() const { return k_; }

  unsigned width() const override { return 2; }
  void identity(Word *out) const override;
  void mul(Word const *a, Word const *b, Word *out) const override;
  std::string label(Word const *x) const override;

private:
  GroupPtr h_, k_;
};

} // namespace pchord

#endif // PCHORD_REPRESENTATIONS_HPP
