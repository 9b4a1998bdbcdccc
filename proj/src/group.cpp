#include "pchord/group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <numeric>

#include "pchord/errors.hpp"

namespace pchord
{

namespace
{

constexpr ElemId empty_slot = 0xffffffffu;
constexpr std::uint32_t table_threshold = 2048;

} // namespace

std::uint64_t FiniteGroup::hash(Word const *w) const
{
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (unsigned i = 0; i < width_; ++i) {
    h ^= w[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  h ^= h >> 33;
  return h;
}

std::optional<ElemId> FiniteGroup::lookup(Word const *w) const
{
  std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(w) & mask;; s = (s + 1) & mask) {
    ElemId id = slots_[s];
    if (id == empty_slot)
      return std::nullopt;
    if (std::memcmp(words_.data() + std::size_t{id} * width_, w, width_ * sizeof(Word)) == 0)
      return id;
  }
}

void FiniteGroup::insert_slot(ElemId id)
{
  std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(words_.data() + std::size_t{id} * width_) & mask;
  while (slots_[s] != empty_slot)
    s = (s + 1) & mask;
  slots_[s] = id;
}

void FiniteGroup::rehash(std::size_t capacity)
{
  slots_.assign(capacity, empty_slot);
  for (ElemId id = 0; id < size_; ++id)
    insert_slot(id);
}

GroupPtr FiniteGroup::generate(std::string name,
                               RepresentationPtr rep,
                               std::vector<std::vector<Word>> const &generators,
                               std::optional<std::uint64_t> predicted_order,
                               std::uint64_t cap)
{
  if (!rep)
    throw InvalidArgument("group: missing representation");
  if (predicted_order && *predicted_order > cap) {
    throw CapExceeded("group " + name + ": order " + std::to_string(*predicted_order) +
                      " exceeds cap " + std::to_string(cap));
  }

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->name_ = std::move(name);
  g->rep_ = std::move(rep);
  g->width_ = g->rep_->width();
  unsigned w = g->width_;

  std::size_t capacity = 1024;
  if (predicted_order) {
    while (capacity < 2 * *predicted_order)
      capacity *= 2;
    g->words_.reserve(*predicted_order * w);
  }
  g->slots_.assign(capacity, empty_slot);

  std::vector<Word> scratch(w);
  g->rep_->identity(scratch.data());
  g->rep_->canonicalize(scratch.data());
  g->words_.insert(g->words_.end(), scratch.begin(), scratch.end());
  g->size_ = 1;
  g->insert_slot(0);

  auto add = [&](Word const *x) -> ElemId {
    if (auto id = g->lookup(x))
      return *id;
    if (g->size_ >= cap) {
      throw CapExceeded("group " + g->name_ + ": enumeration exceeds cap " +
                        std::to_string(cap));
    }
    ElemId id = g->size_++;
    g->words_.insert(g->words_.end(), x, x + w);
    if (2 * std::size_t{g->size_} > g->slots_.size())
      g->rehash(g->slots_.size() * 2);
    else
      g->insert_slot(id);
    return id;
  };

  std::vector<std::vector<Word>> gens;
  for (auto const &gen : generators) {
    if (gen.size() != w)
      throw InvalidArgument("group " + g->name_ + ": generator has wrong width");
    std::vector<Word> c = gen;
    g->rep_->canonicalize(c.data());
    gens.push_back(c);
  }

  for (ElemId cur = 0; cur < g->size_; ++cur) {
    for (auto const &gen : gens) {
      g->rep_->mul(g->words_.data() + std::size_t{cur} * w, gen.data(), scratch.data());
      g->rep_->canonicalize(scratch.data());
      add(scratch.data());
    }
  }

  if (predicted_order && g->size_ != *predicted_order) {
    throw InternalError("group " + g->name_ + ": closure has " + std::to_string(g->size_) +
                        " elements, expected " + std::to_string(*predicted_order));
  }

  for (auto const &gen : gens)
    g->generators_.push_back(*g->lookup(gen.data()));

  if (g->size_ <= table_threshold) {
    std::uint32_t n = g->size_;
    g->table_.resize(std::size_t{n} * n);
    for (ElemId a = 0; a < n; ++a) {
      for (ElemId b = 0; b < n; ++b)
        g->table_[std::size_t{a} * n + b] = g->mul_raw(a, b);
    }
  }

  g->compute_orders();
  return g;
}

ElemId FiniteGroup::mul_raw(ElemId a, ElemId b) const
{
  thread_local std::vector<Word> scratch;
  scratch.resize(width_);
  rep_->mul(words_.data() + std::size_t{a} * width_, words_.data() + std::size_t{b} * width_,
            scratch.data());
  rep_->canonicalize(scratch.data());
  auto id = lookup(scratch.data());
  if (!id)
    throw InternalError("group " + name_ + ": product left the element table");
  return *id;
}

ElemId FiniteGroup::mul(ElemId a, ElemId b) const
{
  if (!table_.empty())
    return table_[std::size_t{a} * size_ + b];
  return mul_raw(a, b);
}

void FiniteGroup::compute_orders()
{
  order_.assign(size_, 0);
  inverse_.assign(size_, 0);
  std::vector<ElemId> powers;
  for (ElemId x = 0; x < size_; ++x) {
    if (order_[x] != 0)
      continue;
    powers.clear();
    powers.push_back(0);
    for (ElemId p = x; p != 0; p = mul(p, x))
      powers.push_back(p);
    auto n = static_cast<std::uint32_t>(powers.size());
    for (std::uint32_t k = 0; k < n; ++k) {
      ElemId y = powers[k];
      if (order_[y] != 0)
        continue;
      order_[y] = n / std::gcd(n, k == 0 ? n : k);
      inverse_[y] = powers[(n - k) % n];
    }
  }
}

ElemId FiniteGroup::pow(ElemId a, std::int64_t e) const
{
  std::int64_t n = order_[a];
  e %= n;
  if (e < 0)
    e += n;
  ElemId result = 0;
  ElemId base = a;
  auto u = static_cast<std::uint64_t>(e);
  while (u > 0) {
    if (u & 1u)
      result = mul(result, base);
    base = mul(base, base);
    u >>= 1;
  }
  return result;
}

bool FiniteGroup::commute(ElemId a, ElemId b) const
{
  if (!table_.empty())
    return mul(a, b) == mul(b, a);
  thread_local std::vector<Word> ab, ba;
  ab.resize(width_);
  ba.resize(width_);
  Word const *wa = words_.data() + std::size_t{a} * width_;
  Word const *wb = words_.data() + std::size_t{b} * width_;
  rep_->mul(wa, wb, ab.data());
  rep_->mul(wb, wa, ba.data());
  rep_->canonicalize(ab.data());
  rep_->canonicalize(ba.data());
  return ab == ba;
}

std::optional<ElemId> FiniteGroup::find(std::span<const Word> w) const
{
  if (w.size() != width_)
    return std::nullopt;
  return lookup(w.data());
}

std::optional<ElemId> FiniteGroup::find_canonical(std::span<const Word> w) const
{
  if (w.size() != width_)
    return std::nullopt;
  std::vector<Word> c(w.begin(), w.end());
  rep_->canonicalize(c.data());
  return lookup(c.data());
}

} // namespace pchord
