#include "pchord/representations.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pchord/errors.hpp"

namespace pchord
{

void PermRep::identity(Word *out) const
{
  for (unsigned i = 0; i < n_; ++i)
    out[i] = i;
}

void PermRep::mul(Word const *a, Word const *b, Word *out) const
{
  for (unsigned i = 0; i < n_; ++i)
    out[i] = b[a[i]];
}

std::string PermRep::label(Word const *x) const
{
  std::ostringstream os;
  std::vector<bool> seen(n_, false);
  bool any = false;
  for (unsigned i = 0; i < n_; ++i) {
    if (seen[i] || x[i] == i)
      continue;
    any = true;
    os << '(';
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first)
        os << ',';
      first = false;
      os << j + 1;
      j = x[j];
    }
    os << ')';
  }
  if (!any)
    return "()";
  return os.str();
}

std::vector<Word> PermRep::parse(std::string const &cycles) const
{
  std::vector<Word> img(n_);
  identity(img.data());
  std::vector<bool> used(n_, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos])))
      ++pos;
  };

  skip_ws();
  if (pos == cycles.size())
    throw ParseError("permutation: empty input");

  while (true) {
    skip_ws();
    if (pos == cycles.size())
      break;
    if (cycles[pos] != '(')
      throw ParseError("permutation: expected '(' in \"" + cycles + "\"");
    ++pos;
    std::vector<unsigned> cycle;
    while (true) {
      skip_ws();
      if (pos < cycles.size() && cycles[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos])))
        ++pos;
      if (start == pos)
        throw ParseError("permutation: expected a point in \"" + cycles + "\"");
      unsigned long point = std::stoul(cycles.substr(start, pos - start));
      if (point < 1 || point > n_)
        throw ParseError("permutation: point " + std::to_string(point) + " outside 1.." +
                         std::to_string(n_));
      if (used[point - 1])
        throw ParseError("permutation: point " + std::to_string(point) + " repeated");
      used[point - 1] = true;
      cycle.push_back(static_cast<unsigned>(point - 1));
      skip_ws();
      if (pos < cycles.size() && cycles[pos] == ',')
        ++pos;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return img;
}

MatRep::MatRep(MatrixSpace space, bool projective)
: space_(std::move(space)), projective_(projective)
{
  if (projective_) {
    auto const &f = space_.field();
    for (std::uint32_t lambda = 2; lambda < f.order(); ++lambda) {
      if (f.pow(lambda, space_.dim()) == 1)
        scalars_.push_back(lambda);
    }
  }
}

void MatRep::identity(Word *out) const
{
  auto id = space_.identity();
  std::copy(id.begin(), id.end(), out);
}

void MatRep::mul(Word const *a, Word const *b, Word *out) const
{
  space_.mul(a, b, out);
}

void MatRep::canonicalize(Word *x) const
{
  if (scalars_.empty())
    return;
  auto const &f = space_.field();
  unsigned n = space_.entries();
  thread_local std::vector<Word> best, cand;
  best.assign(x, x + n);
  cand.resize(n);
  for (std::uint32_t lambda : scalars_) {
    for (unsigned i = 0; i < n; ++i)
      cand[i] = f.mul(x[i], lambda);
    if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()))
      best.swap(cand);
  }
  std::copy(best.begin(), best.end(), x);
}

std::string MatRep::label(Word const *x) const
{
  return space_.format(x);
}

AbelianRep::AbelianRep(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli))
{
  for (std::uint32_t m : moduli_) {
    if (m == 0)
      throw InvalidArgument("abelian group: moduli must be positive");
  }
}

void AbelianRep::identity(Word *out) const
{
  std::fill(out, out + moduli_.size(), 0);
}

void AbelianRep::mul(Word const *a, Word const *b, Word *out) const
{
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    out[i] = (a[i] + b[i]) % moduli_[i];
}

std::string AbelianRep::label(Word const *x) const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    os << (i ? "," : "") << x[i];
  os << ')';
  return os.str();
}

void QuaternionRep::identity(Word *out) const
{
  out[0] = 0;
  out[1] = 0;
}

void QuaternionRep::mul(Word const *a, Word const *b, Word *out) const
{
  std::uint32_t two_n = 2 * n_;
  std::uint32_t i = a[1] ? (a[0] + two_n - b[0]) : (a[0] + b[0]);
  if (a[1] && b[1])
    i += n_;
  out[0] = i % two_n;
  out[1] = a[1] ^ b[1];
}

std::string QuaternionRep::label(Word const *x) const
{
  std::string s;
  if (x[0] == 1)
    s = "x";
  else if (x[0] > 1)
    s = "x^" + std::to_string(x[0]);
  if (x[1])
    s += "y";
  return s.empty() ? "1" : s;
}

SemidirectRep::SemidirectRep(std::uint32_t normal_order, std::uint32_t complement_order,
                             std::uint32_t k)
: n_(normal_order), m_(complement_order)
{
  kpow_.resize(m_);
  std::uint64_t v = 1 % n_;
  for (std::uint32_t b = 0; b < m_; ++b) {
    kpow_[b] = static_cast<std::uint32_t>(v);
    v = v * k % n_;
  }
}

void SemidirectRep::identity(Word *out) const
{
  out[0] = 0;
  out[1] = 0;
}

void SemidirectRep::mul(Word const *a, Word const *b, Word *out) const
{
  out[0] = static_cast<Word>((a[0] + std::uint64_t{kpow_[a[1]]} * b[0]) % n_);
  out[1] = (a[1] + b[1]) % m_;
}

std::string SemidirectRep::label(Word const *x) const
{
  std::string s;
  if (x[0] == 1)
    s = "x";
  else if (x[0] > 1)
    s = "x^" + std::to_string(x[0]);
  if (x[1] == 1)
    s += "y";
  else if (x[1] > 1)
    s += "y^" + std::to_string(x[1]);
  return s.empty() ? "1" : s;
}

void GenDihedralRep::identity(Word *out) const
{
  out[0] = 0;
  out[1] = 0;
}

void GenDihedralRep::mul(Word const *a, Word const *b, Word *out) const
{
  ElemId rhs = a[1] ? a_->inv(b[0]) : b[0];
  out[0] = a_->mul(a[0], rhs);
  out[1] = a[1] ^ b[1];
}

std::string GenDihedralRep::label(Word const *x) const
{
  std::string s = a_->label(x[0]);
  if (x[1])
    s += "t";
  return s;
}

void ProductRep::identity(Word *out) const
{
  out[0] = 0;
  out[1] = 0;
}

void ProductRep::mul(Word const *a, Word const *b, Word *out) const
{
  out[0] = h_->mul(a[0], b[0]);
  out[1] = k_->mul(a[1], b[1]);
}

std::string ProductRep::label(Word const *x) const
{
  return "[" + h_->label(x[0]) + ", " + k_->label(x[1]) + "]";
}

} // namespace pchord
