#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dyfrt/scalar.hpp"

namespace dyfrt {

struct Entry {
  std::size_t col;
  Scalar val;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar val;
};

/// Exact rational matrix with sorted sparse rows. Zeros are never stored.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Duplicate positions are summed.
  static Matrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> t);
  static Matrix from_dense(const std::vector<std::vector<Scalar>>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void add_to(std::size_t i, std::size_t j, const Scalar& v);
  const std::vector<Entry>& row(std::size_t i) const { return data_[i]; }

  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  Matrix transpose() const;
  /// Gauss-Jordan elimination; nullopt when singular or not square.
  std::optional<Matrix> inverse() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  std::vector<std::vector<Scalar>> to_dense() const;

  bool operator==(const Matrix& o) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  /// First (row, col) where the two differ, if any.
  static std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

}  // namespace dyfrt
