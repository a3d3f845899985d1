#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace monoquiv {

// Dense matrix over Q, row-major. Acts on column vectors, so a linear map
// V -> W with dim V = n and dim W = m is an m x n matrix, and g∘f is g * f.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::size_t rank() const;
  Matrix transpose() const;
  // Columns of `other` appended on the right.
  Matrix hconcat(const Matrix& other) const;
  Matrix column(std::size_t c) const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

// Throws std::invalid_argument on a shape mismatch.
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon row_reduce(const Matrix& m);

// Basis of the null space as the columns of an n x k matrix.
Matrix null_space(const Matrix& m);

// Quotient of k^n by the column span of `span` (an n x k matrix). The
// quotient basis is the standard vectors e_j for non-pivot j of the
// reduced span; `projection` maps k^n onto it and `section` embeds it back.
struct Quotient {
  Matrix projection;  // (n - r) x n
  Matrix section;     // n x (n - r)
};
Quotient quotient_by_span(const Matrix& span, std::size_t n);

// X with basis * X = m, for `basis` of full column rank whose column span
// contains the columns of m. Throws std::invalid_argument otherwise.
Matrix solve_in_span(const Matrix& basis, const Matrix& m);

// "p/q" (or "p" for integers).
std::string rational_string(const mpq_class& q);
mpq_class parse_rational(const std::string& text);

}  // namespace monoquiv
