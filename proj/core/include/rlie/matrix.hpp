#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rlie/field.hpp"

namespace rlie {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Rows given as equal-length vectors; `cols` is used when `rows` is empty.
  static Matrix from_rows(Field field, const std::vector<std::vector<Elem>>& rows, std::size_t cols = 0);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(Elem c) const;
  Matrix transposed() const;
  /// Stacks `o` below this matrix.
  Matrix stacked(const Matrix& o) const;
  std::vector<Elem> apply(std::span<const Elem> v) const;
  Matrix pow(std::uint64_t k) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Reduced row echelon form; pivot columns are written to `pivots` when given.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of {v : M v = 0}, one vector per free column, in reduced form.
  std::vector<std::vector<Elem>> kernel() const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Coefficients c_0..c_n of det(t I - M), so c_n = 1. Hessenberg reduction, O(n^3).
std::vector<Elem> charpoly(const Matrix& m);

/// Coefficients x with sum_i x_i * vectors[i] == target, if the target lies in their span.
std::optional<std::vector<Elem>> solve_combination(const Field& field, const std::vector<std::vector<Elem>>& vectors,
                                                   std::span<const Elem> target);

/// Rank of a list of equal-length vectors.
std::size_t rank_of(const Field& field, const std::vector<std::vector<Elem>>& vectors, std::size_t dim);

}  // namespace rlie
