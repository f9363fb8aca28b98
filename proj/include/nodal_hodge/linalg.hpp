#pragma once

#include "nodal_hodge/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace nodal_hodge::linalg {

/// Sparse matrix over Q, stored by columns.
class SparseMatrix {
public:
  using Column = std::map<std::size_t, Rational>;

  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Column& column(std::size_t c) const { return columns_.at(c); }

  /// Accumulates v into entry (row, col).
  void add(std::size_t row, std::size_t col, const Rational& v);

private:
  std::size_t rows_;
  std::vector<Column> columns_;
};

/// Exact rank over Q.
///
/// The row/column incidence graph is split into connected components first
/// and each block is reduced on its own; the matrices arising from wedge
/// products by the symplectic form are block diagonal with tiny blocks.
std::size_t rank(const SparseMatrix& m);

/// Basis of the right kernel {v : m v = 0}. One vector per non-pivot column,
/// with a 1 in that column; vectors are ordered by that column index.
std::vector<std::vector<Rational>> nullspace(const SparseMatrix& m);

/// Rank of an integer matrix (given by rows) via Bareiss fraction-free
/// elimination. All intermediate divisions are exact.
std::size_t rank_fraction_free(std::vector<std::vector<BigInt>> rows);

/// Plain Gauss-Jordan rank over Q on a dense row-major matrix.
std::size_t rank_dense(std::vector<std::vector<Rational>> rows);

} // namespace nodal_hodge::linalg
