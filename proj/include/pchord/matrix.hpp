#ifndef PCHORD_MATRIX_HPP
#define PCHORD_MATRIX_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "finite_field.hpp"

namespace pchord
{

/// Square k x k matrices over a small field, stored row-major as field codes.
class MatrixSpace
{
public:
  MatrixSpace(unsigned k, ff::FieldTablesPtr field);

  unsigned dim() const { return k_; }
  unsigned entries() const { return k_ * k_; }
  ff::FieldTables const &field() const { return *field_; }
  ff::FieldTablesPtr const &field_ptr() const { return field_; }

  using Mat = std::vector<std::uint32_t>;

  Mat identity() const;
  Mat scalar(std::uint32_t lambda) const;
  /// Rows given as field codes.
  Mat from_rows(std::vector<std::vector<std::uint32_t>> const &rows) const;

  void mul(std::uint32_t const *a, std::uint32_t const *b, std::uint32_t *out) const;
  Mat mul(Mat const &a, Mat const &b) const;
  Mat scale(Mat const &a, std::uint32_t lambda) const;
  Mat pow(Mat const &a, std::uint64_t e) const;
  /// Throws InvalidArgument when singular.
  Mat inverse(Mat const &a) const;
  std::uint32_t det(Mat const &a) const;

  bool is_identity(Mat const &a) const { return a == identity(); }
  std::uint64_t order(Mat const &a) const;

  /// "[[1,w,0],[0,1,1],[0,0,1]]"
  std::string format(std::uint32_t const *a) const;
  std::string format(Mat const &a) const { return format(a.data()); }

private:
  unsigned k_;
  ff::FieldTablesPtr field_;
};

} // namespace pchord

#endif // PCHORD_MATRIX_HPP
