#include "pchord/matrix.hpp"

#include <sstream>

#include "pchord/errors.hpp"

namespace pchord
{

MatrixSpace::MatrixSpace(unsigned k, ff::FieldTablesPtr field)
: k_(k), field_(std::move(field))
{
  if (k_ == 0 || !field_)
    throw InvalidArgument("matrix space: need k >= 1 and a field");
}

MatrixSpace::Mat MatrixSpace::identity() const
{
  return scalar(1);
}

MatrixSpace::Mat MatrixSpace::scalar(std::uint32_t lambda) const
{
  Mat m(entries(), 0);
  for (unsigned i = 0; i < k_; ++i)
    m[i * k_ + i] = lambda;
  return m;
}

MatrixSpace::Mat MatrixSpace::from_rows(std::vector<std::vector<std::uint32_t>> const &rows) const
{
  if (rows.size() != k_)
    throw InvalidArgument("matrix: wrong number of rows");
  Mat m;
  m.reserve(entries());
  for (auto const &row : rows) {
    if (row.size() != k_)
      throw InvalidArgument("matrix: wrong row length");
    for (std::uint32_t c : row) {
      if (c >= field_->order())
        throw InvalidArgument("matrix: entry outside the field");
      m.push_back(c);
    }
  }
  return m;
}

void MatrixSpace::mul(std::uint32_t const *a, std::uint32_t const *b, std::uint32_t *out) const
{
  auto const &f = *field_;
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) {
      std::uint32_t acc = 0;
      for (unsigned l = 0; l < k_; ++l) {
        std::uint32_t x = a[i * k_ + l];
        std::uint32_t y = b[l * k_ + j];
        if (x != 0 && y != 0)
          acc = f.add(acc, f.mul(x, y));
      }
      out[i * k_ + j] = acc;
    }
  }
}

MatrixSpace::Mat MatrixSpace::mul(Mat const &a, Mat const &b) const
{
  Mat out(entries());
  mul(a.data(), b.data(), out.data());
  return out;
}

MatrixSpace::Mat MatrixSpace::scale(Mat const &a, std::uint32_t lambda) const
{
  Mat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = field_->mul(a[i], lambda);
  return out;
}

MatrixSpace::Mat MatrixSpace::pow(Mat const &a, std::uint64_t e) const
{
  Mat result = identity();
  Mat base = a;
  while (e > 0) {
    if (e & 1u)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

MatrixSpace::Mat MatrixSpace::inverse(Mat const &a) const
{
  auto const &f = *field_;
  Mat m = a;
  Mat inv = identity();
  for (unsigned col = 0; col < k_; ++col) {
    unsigned pivot = col;
    while (pivot < k_ && m[pivot * k_ + col] == 0)
      ++pivot;
    if (pivot == k_)
      throw InvalidArgument("matrix: singular");
    if (pivot != col) {
      for (unsigned j = 0; j < k_; ++j) {
        std::swap(m[pivot * k_ + j], m[col * k_ + j]);
        std::swap(inv[pivot * k_ + j], inv[col * k_ + j]);
      }
    }
    std::uint32_t s = f.inv(m[col * k_ + col]);
    for (unsigned j = 0; j < k_; ++j) {
      m[col * k_ + j] = f.mul(m[col * k_ + j], s);
      inv[col * k_ + j] = f.mul(inv[col * k_ + j], s);
    }
    for (unsigned r = 0; r < k_; ++r) {
      std::uint32_t c = m[r * k_ + col];
      if (r == col || c == 0)
        continue;
      for (unsigned j = 0; j < k_; ++j) {
        m[r * k_ + j] = f.sub(m[r * k_ + j], f.mul(c, m[col * k_ + j]));
        inv[r * k_ + j] = f.sub(inv[r * k_ + j], f.mul(c, inv[col * k_ + j]));
      }
    }
  }
  return inv;
}

std::uint32_t MatrixSpace::det(Mat const &a) const
{
  auto const &f = *field_;
  Mat m = a;
  std::uint32_t d = 1;
  for (unsigned col = 0; col < k_; ++col) {
    unsigned pivot = col;
    while (pivot < k_ && m[pivot * k_ + col] == 0)
      ++pivot;
    if (pivot == k_)
      return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < k_; ++j)
        std::swap(m[pivot * k_ + j], m[col * k_ + j]);
      d = f.neg(d);
    }
    std::uint32_t p = m[col * k_ + col];
    d = f.mul(d, p);
    std::uint32_t pinv = f.inv(p);
    for (unsigned r = col + 1; r < k_; ++r) {
      std::uint32_t c = f.mul(m[r * k_ + col], pinv);
      if (c == 0)
        continue;
      for (unsigned j = col; j < k_; ++j)
        m[r * k_ + j] = f.sub(m[r * k_ + j], f.mul(c, m[col * k_ + j]));
    }
  }
  return d;
}

std::uint64_t MatrixSpace::order(Mat const &a) const
{
  if (det(a) == 0)
    throw InvalidArgument("matrix: singular matrices have no order");
  Mat id = identity();
  Mat x = a;
  std::uint64_t n = 1;
  while (x != id) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::string MatrixSpace::format(std::uint32_t const *a) const
{
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < k_; ++i) {
    os << (i ? ",[" : "[");
    for (unsigned j = 0; j < k_; ++j) {
      if (j)
        os << ',';
      os << field_->format(a[i * k_ + j]);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

} // namespace pchord
