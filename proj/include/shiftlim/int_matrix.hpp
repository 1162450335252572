#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "shiftlim/errors.hpp"

namespace shiftlim {

// Exact arbitrary-precision integer. Everything in this library computes
// over these; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

/// Dense integer matrix, row-major, with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  // Row-major entry list.
  const std::vector<Int>& entries() const { return entries_; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  IntMatrix transposed() const;

  // Matrix times column vector.
  IntVector apply(const IntVector& v) const;

  // Elementary operations; each is unimodular on the corresponding side.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_multiple_of_row(std::size_t dst, std::size_t src, const Int& factor);
  void add_multiple_of_col(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> entries_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Int& c, const IntMatrix& a);

/// a^k by repeated squaring; a^0 is the identity.
IntMatrix mat_pow(const IntMatrix& a, std::size_t k);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

/// True iff the matrix is invertible over the integers (determinant ±1).
bool is_unimodular(const IntMatrix& m);

/// [left | right] side by side; row counts must agree.
IntMatrix hcat(const IntMatrix& left, const IntMatrix& right);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Exact vector helpers.
bool is_zero_vector(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector negated(const IntVector& a);
IntVector scaled(const Int& c, const IntVector& a);

}  // namespace shiftlim
