#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tqdh/cyclotomic.hpp"

namespace tqdh {

/// Sparse vector as (column, value) pairs, sorted by column, no zeros.
using SparseVec = std::vector<std::pair<int, Cyclotomic>>;
using DenseVec = std::vector<Cyclotomic>;

struct SparseMatrix {
  int cols = 0;
  std::vector<SparseVec> rows;

  void add_row(SparseVec row);
  [[nodiscard]] DenseVec apply(const DenseVec& v) const;
};

/// Builds a sparse vector from unsorted terms, merging duplicates.
SparseVec make_sparse(std::vector<std::pair<int, Cyclotomic>> terms);
SparseVec to_sparse(const DenseVec& v);

/// Row echelon basis grown one row at a time. Pivots are the leading column
/// of each stored row and are scaled to 1.
class EchelonBasis {
 public:
  explicit EchelonBasis(int cols) : cols_(cols) {}

  /// Returns true when the row was independent of the rows seen so far.
  bool add(const SparseVec& row);
  [[nodiscard]] bool contains(const SparseVec& row) const;
  [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int cols() const { return cols_; }

  /// Basis of the right null space, one vector per free column in
  /// increasing column order, with a 1 in that column.
  [[nodiscard]] std::vector<DenseVec> kernel() const;

 private:
  [[nodiscard]] SparseVec reduce(const SparseVec& row) const;

  int cols_;
  std::map<int, SparseVec> rows_;  // pivot column -> row
};

std::vector<DenseVec> kernel_basis(const SparseMatrix& m);
int matrix_rank(const std::vector<SparseVec>& rows, int cols);
/// True when the two row sets span the same subspace of Q(zeta)^cols.
bool same_span(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b, int cols);

}  // namespace tqdh
