#include "pdisk/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace pdisk {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(f, rows[r][c]);
  }
  return m;
}

void Matrix::check_shape(const Matrix& o, const char* op) const {
  if (!(field_ == o.field_)) throw FieldError(std::string("field mismatch in ") + op);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument(std::string("shape mismatch in ") + op + ": " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                                std::to_string(o.cols_));
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!(field_ == o.field_)) throw FieldError("field mismatch in product");
  if (cols_ != o.rows_)
    throw std::invalid_argument("shape mismatch in product: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_shape(o, "sum");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_shape(o, "difference");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
    Scalar inv = Scalar::one(field_) / (*this)(row, c);
    for (std::size_t j = c; j < cols_; ++j) (*this)(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || (*this)(i, c).is_zero()) continue;
      Scalar f = (*this)(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (!(*this)(row, j).is_zero()) (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

Matrix Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(field_, cols_, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = Scalar::one(field_);
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], f) = -m(r, free[f]);
  }
  return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows_ != rows_) throw std::invalid_argument("shape mismatch in solve");
  Matrix aug = hstack(b);
  auto pivots = aug.rref();
  for (auto c : pivots)
    if (c >= cols_) return std::nullopt;
  Matrix x(field_, cols_, b.cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols_; ++j) x(pivots[r], j) = aug(r, cols_ + j);
  return x;
}

Matrix Matrix::block_diag(const Matrix& o) const {
  Matrix r(field_, rows_ + o.rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) r(rows_ + i, cols_ + j) = o(i, j);
  return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("shape mismatch in hstack");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("shape mismatch in vstack");
  Matrix r(field_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
  return r;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix r(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, c);
  return r;
}

Matrix Matrix::without_row(std::size_t skip) const {
  Matrix r(field_, rows_ - 1, cols_);
  for (std::size_t i = 0, k = 0; i < rows_; ++i) {
    if (i == skip) continue;
    for (std::size_t j = 0; j < cols_; ++j) r(k, j) = (*this)(i, j);
    ++k;
  }
  return r;
}

Matrix Matrix::without_col(std::size_t skip) const { return transpose().without_row(skip).transpose(); }

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

}  // namespace pdisk
