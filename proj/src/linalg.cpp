#include "nodal_hodge/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nodal_hodge::linalg {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

struct Block {
  std::vector<std::size_t> cols;
  std::vector<std::size_t> rows;
};

std::vector<Block> connected_blocks(const SparseMatrix& m) {
  const std::size_t nc = m.cols();
  DisjointSets sets(nc + m.rows());
  for (std::size_t c = 0; c < nc; ++c) {
    for (const auto& [r, v] : m.column(c)) sets.unite(c, nc + r);
  }
  std::map<std::size_t, Block> by_root;
  for (std::size_t c = 0; c < nc; ++c) by_root[sets.find(c)].cols.push_back(c);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto it = by_root.find(sets.find(nc + r));
    if (it != by_root.end()) it->second.rows.push_back(r);
  }
  std::vector<Block> blocks;
  blocks.reserve(by_root.size());
  for (auto& [root, block] : by_root) blocks.push_back(std::move(block));
  return blocks;
}

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce_rows(std::vector<std::vector<Rational>>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t nrows = a.size();
  const std::size_t ncols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t pivot = r;
    while (pivot < nrows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == nrows) continue;
    std::swap(a[r], a[pivot]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < ncols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> dense_block(const SparseMatrix& m, const Block& b) {
  std::map<std::size_t, std::size_t> local_row;
  for (std::size_t i = 0; i < b.rows.size(); ++i) local_row[b.rows[i]] = i;
  std::vector<std::vector<Rational>> a(b.rows.size(), std::vector<Rational>(b.cols.size()));
  for (std::size_t j = 0; j < b.cols.size(); ++j) {
    for (const auto& [r, v] : m.column(b.cols[j])) a[local_row.at(r)][j] = v;
  }
  return a;
}

} // namespace

void SparseMatrix::add(std::size_t row, std::size_t col, const Rational& v) {
  if (row >= rows_ || col >= columns_.size()) throw std::out_of_range("SparseMatrix::add");
  if (v.is_zero()) return;
  auto& column = columns_[col];
  auto [it, inserted] = column.try_emplace(row, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) column.erase(it);
  }
}

std::size_t rank(const SparseMatrix& m) {
  std::size_t total = 0;
  for (const Block& b : connected_blocks(m)) {
    if (b.rows.empty()) continue;
    auto a = dense_block(m, b);
    total += reduce_rows(a).size();
  }
  return total;
}

std::vector<std::vector<Rational>> nullspace(const SparseMatrix& m) {
  std::map<std::size_t, std::vector<Rational>> by_free_column;
  for (const Block& b : connected_blocks(m)) {
    auto a = dense_block(m, b);
    const auto pivots = reduce_rows(a);
    std::vector<bool> is_pivot(b.cols.size(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < b.cols.size(); ++f) {
      if (is_pivot[f]) continue;
      std::vector<Rational> v(m.cols());
      v[b.cols[f]] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[b.cols[pivots[i]]] = -a[i][f];
      by_free_column.emplace(b.cols[f], std::move(v));
    }
  }
  std::vector<std::vector<Rational>> basis;
  basis.reserve(by_free_column.size());
  for (auto& [c, v] : by_free_column) basis.push_back(std::move(v));
  return basis;
}

std::size_t rank_fraction_free(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t nrows = rows.size();
  const std::size_t ncols = rows.front().size();
  BigInt previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t pivot = r;
    while (pivot < nrows && rows[pivot][c] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        BigInt value = rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        rows[i][j] = std::move(value);
      }
      rows[i][c] = 0;
    }
    previous = rows[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_dense(std::vector<std::vector<Rational>> rows) { return reduce_rows(rows).size(); }

} // namespace nodal_hodge::linalg
