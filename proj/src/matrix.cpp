#include "osp/matrix.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace osp {

SymbolicMatrix::SymbolicMatrix(Registry reg, int rows, int cols)
    : reg_(std::move(reg)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), LaurentPoly(reg_));
}

SymbolicMatrix SymbolicMatrix::identity(Registry reg, int n) {
  SymbolicMatrix m(reg, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(reg, 1);
  return m;
}

std::size_t SymbolicMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
}

SymbolicMatrix SymbolicMatrix::minor(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) throw std::out_of_range("minor index out of range");
  SymbolicMatrix out(reg_, rows_ - 1, cols_ - 1);
  for (int i = 0, oi = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (int j = 0, oj = 0; j < cols_; ++j) {
      if (j == col) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

SymbolicMatrix SymbolicMatrix::submatrix(int row, int row_count, int col, int col_count) const {
  if (row < 0 || col < 0 || row_count < 0 || col_count < 0 || row + row_count > rows_ || col + col_count > cols_) {
    throw std::out_of_range("submatrix out of range");
  }
  SymbolicMatrix out(reg_, row_count, col_count);
  for (int i = 0; i < row_count; ++i) {
    for (int j = 0; j < col_count; ++j) out(i, j) = (*this)(row + i, col + j);
  }
  return out;
}

std::vector<LaurentPoly> SymbolicMatrix::column(int j) const {
  std::vector<LaurentPoly> out;
  for (int i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

std::vector<LaurentPoly> SymbolicMatrix::row(int i) const {
  std::vector<LaurentPoly> out;
  for (int j = 0; j < cols_; ++j) out.push_back((*this)(i, j));
  return out;
}

SymbolicMatrix SymbolicMatrix::with_column(int j, const std::vector<LaurentPoly>& values) const {
  if (static_cast<int>(values.size()) != rows_) throw std::invalid_argument("with_column: length mismatch");
  SymbolicMatrix out = *this;
  for (int i = 0; i < rows_; ++i) out(i, j) = values[static_cast<std::size_t>(i)];
  return out;
}

void SymbolicMatrix::place(int row, int col, const SymbolicMatrix& block) {
  for (int i = 0; i < block.rows(); ++i) {
    for (int j = 0; j < block.cols(); ++j) (*this)(row + i, col + j) = block(i, j);
  }
}

SymbolicMatrix SymbolicMatrix::substitute(const std::map<std::string, LaurentPoly>& images) const {
  SymbolicMatrix out = *this;
  for (auto& c : out.cells_) c = c.substitute(images);
  return out;
}

SymbolicMatrix SymbolicMatrix::transposed() const {
  SymbolicMatrix out(reg_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

int SymbolicMatrix::nonzero_count() const {
  int count = 0;
  for (const auto& c : cells_) count += c.is_zero() ? 0 : 1;
  return count;
}

SymbolicMatrix operator+(const SymbolicMatrix& lhs, const SymbolicMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  SymbolicMatrix out = lhs;
  for (std::size_t i = 0; i < out.cells_.size(); ++i) out.cells_[i] += rhs.cells_[i];
  return out;
}

SymbolicMatrix operator-(const SymbolicMatrix& lhs, const SymbolicMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  SymbolicMatrix out = lhs;
  for (std::size_t i = 0; i < out.cells_.size(); ++i) out.cells_[i] -= rhs.cells_[i];
  return out;
}

SymbolicMatrix operator*(const SymbolicMatrix& lhs, const SymbolicMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  SymbolicMatrix out(lhs.reg_ ? lhs.reg_ : rhs.reg_, lhs.rows_, rhs.cols_);
  for (int i = 0; i < lhs.rows_; ++i) {
    for (int l = 0; l < lhs.cols_; ++l) {
      const LaurentPoly& a = lhs(i, l);
      if (a.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        if (!rhs(l, j).is_zero()) out(i, j) += a * rhs(l, j);
      }
    }
  }
  return out;
}

SymbolicMatrix SymbolicMatrix::scaled(const LaurentPoly& c) const {
  SymbolicMatrix out = *this;
  for (auto& cell : out.cells_) cell *= c;
  return out;
}

bool operator==(const SymbolicMatrix& lhs, const SymbolicMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.cells_ == rhs.cells_;
}

std::string SymbolicMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) out += '\t';
      out += (*this)(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

std::vector<LaurentPoly> row_times(const std::vector<LaurentPoly>& v, const SymbolicMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("row_times: length mismatch");
  std::vector<LaurentPoly> out(static_cast<std::size_t>(m.cols()), LaurentPoly(m.registry()));
  for (int i = 0; i < m.rows(); ++i) {
    if (v[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) out[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(i)] * m(i, j);
    }
  }
  return out;
}

namespace {

class LaplaceExpander {
 public:
  explicit LaplaceExpander(const SymbolicMatrix& m) : m_(m), n_(m.rows()) {}

  LaurentPoly run() {
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    return expand(all);
  }

 private:
  // Determinant of the rows in `mask` against the last popcount(mask) columns.
  LaurentPoly expand(std::uint64_t mask) {
    if (mask == 0) return LaurentPoly::constant(m_.registry(), 1);
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    const int col = n_ - std::popcount(mask);
    LaurentPoly total(m_.registry());
    int position = 0;
    for (int r = 0; r < n_; ++r) {
      const std::uint64_t bit = std::uint64_t{1} << r;
      if (!(mask & bit)) continue;
      const LaurentPoly& entry = m_(r, col);
      if (!entry.is_zero()) {
        LaurentPoly sub = expand(mask & ~bit);
        if (!sub.is_zero()) {
          LaurentPoly term = entry * sub;
          if (position % 2 == 0) {
            total += term;
          } else {
            total -= term;
          }
        }
      }
      ++position;
    }
    memo_.emplace(mask, total);
    return total;
  }

  const SymbolicMatrix& m_;
  int n_;
  std::unordered_map<std::uint64_t, LaurentPoly> memo_;
};

}  // namespace

LaurentPoly det_laplace(const SymbolicMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() > 62) throw std::invalid_argument("det_laplace: matrix too large");
  return LaplaceExpander(m).run();
}

LaurentPoly det_bareiss(const SymbolicMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return LaurentPoly::constant(m.registry(), 1);
  SymbolicMatrix a = m;
  LaurentPoly prev = LaurentPoly::constant(m.registry(), 1);
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!a(r, k).is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return LaurentPoly(m.registry());
      for (int j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = divexact(v, prev);
      }
      a(i, k) = LaurentPoly(m.registry());
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

LaurentPoly det(const SymbolicMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  // Dense matrices make the row-subset memo grow exponentially.
  if (n > 62 || (n > 8 && m.nonzero_count() * 2 > n * n)) return det_bareiss(m);
  return det_laplace(m);
}

}  // namespace osp
