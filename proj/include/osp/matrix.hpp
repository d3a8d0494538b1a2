#ifndef OSP_MATRIX_HPP
#define OSP_MATRIX_HPP

#include <map>
#include <string>
#include <vector>

#include "osp/ring.hpp"

namespace osp {

// Dense matrix of Laurent polynomials. Indices are 0-based.
class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  SymbolicMatrix(Registry reg, int rows, int cols);

  static SymbolicMatrix identity(Registry reg, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Registry& registry() const { return reg_; }

  const LaurentPoly& operator()(int i, int j) const { return cells_[index(i, j)]; }
  LaurentPoly& operator()(int i, int j) { return cells_[index(i, j)]; }

  // Drops one row and one column.
  SymbolicMatrix minor(int row, int col) const;
  SymbolicMatrix submatrix(int row, int row_count, int col, int col_count) const;
  std::vector<LaurentPoly> column(int j) const;
  std::vector<LaurentPoly> row(int i) const;
  SymbolicMatrix with_column(int j, const std::vector<LaurentPoly>& values) const;
  // Copies `block` with its top-left corner at (row, col).
  void place(int row, int col, const SymbolicMatrix& block);

  SymbolicMatrix substitute(const std::map<std::string, LaurentPoly>& images) const;
  SymbolicMatrix transposed() const;
  int nonzero_count() const;

  friend SymbolicMatrix operator+(const SymbolicMatrix& lhs, const SymbolicMatrix& rhs);
  friend SymbolicMatrix operator-(const SymbolicMatrix& lhs, const SymbolicMatrix& rhs);
  friend SymbolicMatrix operator*(const SymbolicMatrix& lhs, const SymbolicMatrix& rhs);
  SymbolicMatrix scaled(const LaurentPoly& c) const;
  friend bool operator==(const SymbolicMatrix& lhs, const SymbolicMatrix& rhs);

  // One row per line, entries separated by tabs.
  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const;

  Registry reg_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentPoly> cells_;
};

// Row vector times matrix.
std::vector<LaurentPoly> row_times(const std::vector<LaurentPoly>& v, const SymbolicMatrix& m);

// Column-by-column Laplace expansion; sub-determinants are memoized by the
// set of remaining rows. The 0x0 determinant is 1. Requires rows() <= 62.
LaurentPoly det_laplace(const SymbolicMatrix& m);
// Fraction-free Gaussian elimination with exact division by the previous
// pivot.
LaurentPoly det_bareiss(const SymbolicMatrix& m);
// Laplace for sparse matrices, Bareiss for dense ones.
LaurentPoly det(const SymbolicMatrix& m);

}  // namespace osp

#endif  // OSP_MATRIX_HPP
