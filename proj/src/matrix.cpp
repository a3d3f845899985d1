#include "monoquiv/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace monoquiv {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

std::size_t Matrix::rank() const { return row_reduce(*this).pivots.size(); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::hconcat(const Matrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hconcat: row mismatch");
  Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix m(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) m(r, 0) = (*this)(r, c);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << rational_string((*this)(r, c));
    }
  }
  os << ']';
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpq_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += x * b(k, j);
    }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) += b(i, j);
  }
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix difference: shape mismatch");
  }
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) -= b(i, j);
  }
  return m;
}

Echelon row_reduce(const Matrix& m) {
  Echelon e{m, {}};
  Matrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    const mpq_class inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const mpq_class f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

Matrix null_space(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], k) = -e.reduced(r, free[k]);
    }
  }
  return basis;
}

Quotient quotient_by_span(const Matrix& span, std::size_t n) {
  if (span.rows() != n) throw std::invalid_argument("quotient: span has wrong row count");
  // Rows of `reduced` form a basis of the span in reduced echelon form.
  Echelon e = row_reduce(span.transpose());
  std::vector<char> is_pivot(n, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) keep.push_back(j);
  }
  Quotient q{Matrix(keep.size(), n), Matrix(n, keep.size())};
  for (std::size_t k = 0; k < keep.size(); ++k) q.section(keep[k], k) = 1;
  // e_j reduces to e_j - sum_i [j == p_i] r_i; read off the kept coordinates.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < keep.size(); ++k) {
      mpq_class v = (j == keep[k]) ? 1 : 0;
      for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == j) v -= e.reduced(i, keep[k]);
      }
      q.projection(k, j) = v;
    }
  }
  return q;
}

Matrix solve_in_span(const Matrix& basis, const Matrix& m) {
  if (basis.rows() != m.rows()) throw std::invalid_argument("solve: row mismatch");
  Echelon e = row_reduce(basis.hconcat(m));
  const std::size_t k = basis.cols();
  if (e.pivots.size() != k) throw std::invalid_argument("solve: basis is not independent");
  for (auto p : e.pivots) {
    if (p >= k) throw std::invalid_argument("solve: target outside the span");
  }
  Matrix x(k, m.cols());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) x(i, c) = e.reduced(i, k + c);
  }
  return x;
}

std::string rational_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("bad rational \"" + text + "\"");
  }
  q.canonicalize();
  return q;
}

}  // namespace monoquiv
