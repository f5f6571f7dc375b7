#include "spinideal/ratlinalg.hpp"

#include <map>

#include "spinideal/errors.hpp"

namespace spinideal {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw DimensionMismatch("matrix product of " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " and " + std::to_string(rhs.rows_) + "x" +
                            std::to_string(rhs.cols_));
  }
  RationalMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& lhs_entry = at(r, k);
      if (lhs_entry == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c) {
        const Rational& rhs_entry = rhs.at(k, c);
        if (rhs_entry == 0) continue;
        out.at(r, c) += lhs_entry * rhs_entry;
      }
    }
  }
  return out;
}

RowReduction row_reduce(RationalMatrix m) {
  int rows = m.rows();
  int cols = m.cols();
  std::vector<int> pivots;
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int src = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (m.at(r, col) != 0) {
        src = r;
        break;
      }
    }
    if (src < 0) continue;
    if (src != pivot_row) {
      for (int c = col; c < cols; ++c) std::swap(m.at(src, c), m.at(pivot_row, c));
    }
    Rational inv = m.at(pivot_row, col);
    for (int c = col; c < cols; ++c) m.at(pivot_row, c) /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      Rational factor = m.at(r, col);
      if (factor == 0) continue;
      for (int c = col; c < cols; ++c) m.at(r, c) -= factor * m.at(pivot_row, c);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(m), static_cast<int>(pivots.size()), std::move(pivots)};
}

namespace {

// Incremental forward elimination over sparse blade coordinates. Keeps one
// reduced row per pivot blade; a vector is independent iff a nonzero residual
// survives reduction. This realizes the same greedy pivot choice as dense
// row reduction of the column-wise coordinate matrix without materializing
// 2^{p+q} columns.
class SparseEliminator {
 public:
  // Returns true if the vector enlarged the span.
  bool insert(const Multivector& v) {
    Multivector residual = v;
    while (!residual.is_zero()) {
      Blade lead = residual.terms().begin()->first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        Rational inv = residual.terms().begin()->second;
        rows_.emplace(lead, residual.scaled(Rational(1) / inv));
        return true;
      }
      residual = residual - it->second.scaled(residual.terms().begin()->second);
    }
    return false;
  }

 private:
  std::map<Blade, Multivector, CanonicalBladeLess> rows_;
};

}  // namespace

std::vector<std::size_t> extract_basis_indices(const std::vector<Multivector>& vectors) {
  if (!vectors.empty()) {
    const Signature& sig = vectors.front().sig();
    for (const auto& v : vectors) {
      if (!(v.sig() == sig)) throw SignatureMismatch("extract_basis: mixed signatures");
    }
  }
  SparseEliminator elim;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (elim.insert(vectors[i])) kept.push_back(i);
  }
  return kept;
}

std::vector<Multivector> extract_basis(const std::vector<Multivector>& vectors) {
  std::vector<Multivector> out;
  for (std::size_t i : extract_basis_indices(vectors)) out.push_back(vectors[i]);
  return out;
}

int rank_of_span(const std::vector<Multivector>& vectors) {
  return static_cast<int>(extract_basis_indices(vectors).size());
}

RationalMatrix coordinate_matrix(const std::vector<Multivector>& vectors) {
  if (vectors.empty()) return RationalMatrix(0, 0);
  const Signature& sig = vectors.front().sig();
  std::vector<Blade> basis = all_blades(sig);
  std::map<Blade, int, CanonicalBladeLess> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = static_cast<int>(i);

  RationalMatrix m(static_cast<int>(vectors.size()), static_cast<int>(basis.size()));
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (!(vectors[r].sig() == sig)) throw SignatureMismatch("coordinate_matrix: mixed signatures");
    for (const auto& [b, c] : vectors[r].terms()) {
      m.at(static_cast<int>(r), column.at(b)) = c;
    }
  }
  return m;
}

}  // namespace spinideal
