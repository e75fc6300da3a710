#ifndef THICK_MATRIX_HPP
#define THICK_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "thick/groebner.hpp"
#include "thick/poly.hpp"

namespace thick {

using Column = std::vector<Poly>;

/// Dense rows x cols matrix of polynomials over one ring. Either dimension may
/// be zero.
class Matrix {
public:
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static Matrix from_rows(RingPtr ring, const std::vector<std::vector<Poly>>& rows, std::size_t cols = 0);
  static Matrix from_columns(RingPtr ring, std::size_t rows, const std::vector<Column>& cols);
  static Matrix identity(RingPtr ring, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Poly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Poly p) { data_[i * cols_ + j] = std::move(p); }

  Column column(std::size_t j) const;
  std::vector<Column> columns() const;

  Matrix transpose() const;
  Matrix select_columns(const std::vector<std::size_t>& keep) const;
  Matrix select_rows(const std::vector<std::size_t>& keep) const;
  Matrix without_row(std::size_t i) const;
  Matrix reduced(const Ideal& ideal) const;
  Matrix scaled(const FieldElem& c) const;

  bool is_zero() const;
  bool row_is_zero(std::size_t i) const;
  bool column_is_zero(std::size_t j) const;

  Matrix operator-() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> data_;
};

Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

Poly determinant(const Matrix& m);
/// All k x k minors (nonzero ones only); k == 0 yields {1}.
std::vector<Poly> minors(const Matrix& m, std::size_t k);

// ---- linear algebra over R = S/I -------------------------------------------

/// Drops columns lying in the span of earlier kept columns (plus I * S^rows),
/// scanning columns by increasing degree.
Matrix prune_columns(const Matrix& a, const Ideal& relations);

/// Generators of the kernel of a : R^cols -> R^rows, as the columns of a
/// cols x s matrix, pruned.
Matrix kernel_matrix(const Matrix& a, const Ideal& relations);

bool in_column_span(const Column& v, const Matrix& a, const Ideal& relations);

struct Minimalized {
  Matrix matrix;
  std::vector<std::size_t> kept_rows;
};

/// Repeatedly pivots on entries with nonzero constant term (units of the
/// local ring at the irrelevant ideal), deleting the pivot row and column,
/// then drops zero columns. Zero rows are kept.
Minimalized minimalize_matrix(const Matrix& a, const Ideal& relations);

/// True when every entry has zero constant term.
bool entries_in_maximal_ideal(const Matrix& a);

}  // namespace thick

#endif
