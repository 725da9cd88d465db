#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "homnambu/scalar.hpp"

namespace homnambu {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}
  Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}

  static Vector unit(std::size_t dim, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Scalar>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Scalar& c);

  friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Scalar> entries_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator-(Vector a);
Vector operator*(const Scalar& c, Vector v);
Scalar dot(const Vector& a, const Vector& b);
Vector concat(const Vector& a, const Vector& b);
Vector kronecker(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& c);
  static Matrix diagonal(const std::vector<Scalar>& diag);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_row_vectors(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Scalar& c, Matrix m);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& m, const Vector& v);

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix kronecker_power(const Matrix& m, std::size_t times);
// k >= 0; power(m, 0) is the identity.
Matrix power(const Matrix& m, std::size_t k);
Matrix commutator(const Matrix& a, const Matrix& b);

// Row-major flattening: entry (r, c) goes to index r * cols + c.
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

}  // namespace homnambu
