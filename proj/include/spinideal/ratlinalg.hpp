#pragma once

#include <vector>

#include "spinideal/multivector.hpp"
#include "spinideal/rational.hpp"

namespace spinideal {

// Dense rectangular matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

struct RowReduction {
  RationalMatrix rref;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per nonzero row, strictly increasing
};

// Reduced row echelon form over Q, exact Gauss-Jordan with pivot rows
// normalized to leading 1.
RowReduction row_reduce(RationalMatrix m);

// The first-seen greedy basis: the subsequence of input vectors that are
// pivot columns of the column-wise coordinate matrix. Duplicates and linear
// combinations of earlier vectors are dropped; input order is preserved.
// Returns the positions of the kept vectors.
std::vector<std::size_t> extract_basis_indices(const std::vector<Multivector>& vectors);

std::vector<Multivector> extract_basis(const std::vector<Multivector>& vectors);

int rank_of_span(const std::vector<Multivector>& vectors);

// Coordinate matrix whose rows are the blade coordinates of the vectors,
// columns in canonical blade order over the full 2^{p+q} basis.
RationalMatrix coordinate_matrix(const std::vector<Multivector>& vectors);

}  // namespace spinideal
