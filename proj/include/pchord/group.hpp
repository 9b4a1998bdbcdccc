#ifndef PCHORD_GROUP_HPP
#define PCHORD_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pchord
{

using Word = std::uint32_t;
using ElemId = std::uint32_t;

/// How elements of one concrete group are encoded as fixed-width word
/// arrays and multiplied. Implementations are immutable.
class Representation
{
public:
  virtual ~Representation() = default;

  virtual unsigned width() const = 0;
  virtual void identity(Word *out) const = 0;
  /// out = a * b, where a acts first. `out` never aliases a or b.
  virtual void mul(Word const *a, Word const *b, Word *out) const = 0;
  /// Maps a word to the canonical representative of its class. Only
  /// quotient representations need this.
  virtual void canonicalize(Word *) const {}
  virtual std::string label(Word const *x) const = 0;
};

using RepresentationPtr = std::shared_ptr<const Representation>;

constexpr std::uint64_t default_order_cap = 2000000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A fully enumerated group. Element 0 is the identity; the remaining
/// elements appear in breadth-first discovery order under right
/// multiplication by the generators, in the order given.
class FiniteGroup
{
public:
  /// Throws CapExceeded if `predicted_order` (when known) or the running
  /// count exceeds `cap`, and InternalError when the closure size differs
  /// from a known predicted order.
  static GroupPtr generate(std::string name,
                           RepresentationPtr rep,
                           std::vector<std::vector<Word>> const &generators,
                           std::optional<std::uint64_t> predicted_order,
                           std::uint64_t cap = default_order_cap);

  std::string const &name() const { return name_; }
  Representation const &rep() const { return *rep_; }
  RepresentationPtr const &rep_ptr() const { return rep_; }

  std::uint32_t size() const { return size_; }
  unsigned width() const { return width_; }

  std::span<const Word> element(ElemId i) const
  { return {words_.data() + std::size_t{i} * width_, width_}; }

  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  ElemId pow(ElemId a, std::int64_t e) const;
  /// g^-1 x g
  ElemId conj(ElemId x, ElemId g) const { return mul(mul(inverse_[g], x), g); }
  bool commute(ElemId a, ElemId b) const;

  std::uint32_t order_of(ElemId a) const { return order_[a]; }
  std::vector<std::uint32_t> const &element_orders() const { return order_; }

  /// Lookup of an already canonical word.
  std::optional<ElemId> find(std::span<const Word> w) const;
  /// Canonicalizes a copy of `w` first.
  std::optional<ElemId> find_canonical(std::span<const Word> w) const;

  std::vector<ElemId> const &generators() const { return generators_; }
  std::string label(ElemId a) const { return rep_->label(element(a).data()); }

  bool has_table() const { return !table_.empty(); }

private:
  FiniteGroup() = default;

  ElemId mul_raw(ElemId a, ElemId b) const;
  std::uint64_t hash(Word const *w) const;
  std::optional<ElemId> lookup(Word const *w) const;
  void insert_slot(ElemId id);
  void rehash(std::size_t capacity);
  void compute_orders();

  std::string name_;
  RepresentationPtr rep_;
  unsigned width_ = 0;
  std::uint32_t size_ = 0;
  std::vector<Word> words_;
  std::vector<ElemId> slots_; // open addressing, empty_slot marks free
  std::vector<ElemId> generators_;
  std::vector<std::uint32_t> order_;
  std::vector<ElemId> inverse_;
  std::vector<ElemId> table_; // full Cayley table for small groups
};

} // namespace pchord

#endif // PCHORD_GROUP_HPP
