#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdisk/field.hpp"

namespace pdisk {

// Dense matrix over an exact field. Acts on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_ints(const Field& f, const std::vector<std::vector<long>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;

  bool is_zero() const;
  std::size_t rank() const;
  // Columns span the null space.
  Matrix kernel() const;
  // Some x with A x = b, if one exists.
  std::optional<Matrix> solve(const Matrix& b) const;

  Matrix block_diag(const Matrix& o) const;
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix column(std::size_t c) const;
  Matrix without_row(std::size_t r) const;
  Matrix without_col(std::size_t c) const;

  std::string str() const;

 private:
  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  void check_shape(const Matrix& o, const char* op) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace pdisk
