#pragma once

// Exact rank of sparse integer matrices by fraction-free row reduction.
//
// Rows are reduced incrementally against an echelon basis keyed by leading
// column. Each elimination step is r <- p*r - c*b followed by division by the
// row content, so entries stay integral and small in practice. Independent
// blocks (connected components of the row/column incidence graph) are
// reduced separately. A checked 64-bit path is tried first; on overflow the
// block is redone with arbitrary precision.

#include "nccr/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace nccr::linalg {

struct SparseEntry {
  int col;
  Integer value;
};

/// One sparse row, sorted by column with nonzero values.
using SparseRow = std::vector<SparseEntry>;

class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Adds `value` to entry (r, c).
  void add(int r, int c, const Integer& value);
  Integer at(int r, int c) const;

  const std::vector<SparseRow>& row_data() const { return data_; }
  SparseMatrix transposed() const;
  std::size_t nonzeros() const;

 private:
  int rows_;
  int cols_;
  std::vector<SparseRow> data_;
};

/// Rank over the rationals.
long rank(const SparseMatrix& m);

/// Rank over the rationals of a row list with `cols` columns. Rows may be
/// unsorted and contain duplicate columns; they are normalized first.
long rank(std::vector<std::vector<std::pair<int, std::int64_t>>> rows, int cols);

/// Dense fraction-free (Bareiss) rank; used as an independent check in tests.
long bareiss_rank(std::vector<std::vector<Integer>> dense);

/// Reduced row echelon form over the rationals.
struct Rref {
  std::vector<int> pivot_cols;                 // increasing
  std::vector<std::vector<Rational>> rows;     // one per pivot, pivot entry 1
};

/// Gauss-Jordan elimination of a dense rational matrix with `cols` columns.
Rref rref(std::vector<std::vector<Rational>> dense, int cols);

}  // namespace nccr::linalg
