// Exact integer linear algebra over arbitrary-precision integers.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lefsec {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);
IntVector operator+(const IntVector& u, const IntVector& v);
IntVector operator-(const IntVector& u, const IntVector& v);
IntVector operator*(const Integer& s, const IntVector& v);
bool is_zero(const IntVector& v);
std::string format_vector(const IntVector& v);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  IntMatrix transpose() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
/// Horizontal concatenation [a | b]; row counts must agree.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
std::string format_matrix(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& a);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... and
/// all d_i >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
  Integer diagonal(std::size_t i) const;
};

/// Pivot is the smallest nonzero absolute value in the active block, ties
/// broken in row-major order.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Some x with A x = b over the integers, or nullopt when none exists.
/// Throws std::invalid_argument when b has the wrong length.
std::optional<IntVector> in_image(const IntMatrix& a, const IntVector& b);
std::optional<IntVector> in_image(const SmithDecomposition& snf, const IntVector& b);

/// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Z^rows / Im(A) presented as Z^rank + sum Z/torsion_i.
struct CokernelPresentation {
  std::size_t ambient = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  /// (rank + torsion.size()) x ambient; free coordinates first.
  IntMatrix projection;

  /// Normal-form coordinates: free part exact, torsion part reduced into [0, t).
  IntVector coordinates(const IntVector& v) const;
};

CokernelPresentation cokernel(const IntMatrix& a);
bool classes_equal(const CokernelPresentation& ck, const IntVector& u, const IntVector& v);

}  // namespace lefsec
