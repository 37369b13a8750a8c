#pragma once

#include <optional>
#include <vector>

#include "rootlie/fp.hpp"

namespace rootlie {

/// Dense matrix over a prime field, row-major. Target dimensions are tiny
/// (<= ~60 rows), so everything is plain Gaussian elimination.
class FMatrix {
public:
  FMatrix(PrimeField f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, 0) {}

  static FMatrix identity(PrimeField f, int n) {
    FMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  const PrimeField& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (int x : a_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const FMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  FMatrix operator*(const FMatrix& o) const {
    FMatrix r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        int aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = f_.add(r.at(i, j), f_.mul(aik, o.at(k, j)));
      }
    return r;
  }

  FMatrix operator+(const FMatrix& o) const {
    FMatrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
    return r;
  }

  FMatrix operator-(const FMatrix& o) const {
    FMatrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], o.a_[i]);
    return r;
  }

  FMatrix scaled(int c) const {
    FMatrix r(f_, rows_, cols_);
    int cc = f_.reduce(c);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.mul(a_[i], cc);
    return r;
  }

  FMatrix transpose() const {
    FMatrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  /// Horizontal stack [this | o].
  FMatrix hstack(const FMatrix& o) const {
    FMatrix r(f_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int sel = -1;
      for (int i = row; i < rows_; ++i)
        if (at(i, col) != 0) { sel = i; break; }
      if (sel < 0) continue;
      if (sel != row)
        for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
      int piv_inv = f_.inv(at(row, col));
      for (int j = 0; j < cols_; ++j) at(row, j) = f_.mul(at(row, j), piv_inv);
      for (int i = 0; i < rows_; ++i) {
        if (i == row || at(i, col) == 0) continue;
        int c = at(i, col);
        for (int j = 0; j < cols_; ++j)
          at(i, j) = f_.sub(at(i, j), f_.mul(c, at(row, j)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    FMatrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  std::optional<FMatrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    FMatrix aug = hstack(identity(f_, rows_));
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ ||
        (rows_ > 0 && pivots.back() != rows_ - 1))
      return std::nullopt;
    FMatrix inv(f_, rows_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, rows_ + j);
    return inv;
  }

  /// Columns assembled into a matrix (convenience for bases).
  static FMatrix from_columns(PrimeField f, int rows,
                              const std::vector<std::vector<int>>& cols) {
    FMatrix m(f, rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
      for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    return m;
  }

private:
  PrimeField f_;
  int rows_, cols_;
  std::vector<int> a_;
};

struct RankKernel {
  int rank;
  FMatrix kernel;  // columns form a basis of the right kernel
};

/// Rank and a basis of {x : A x = 0};  rank + kernel.cols() == A.cols().
inline RankKernel rank_kernel(const FMatrix& a) {
  FMatrix m = a;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  int nfree = a.cols() - static_cast<int>(pivots.size());
  FMatrix ker(a.field(), a.cols(), nfree);
  int k = 0;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    ker.at(c, k) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      ker.at(pivots[r], k) = a.field().neg(m.at(static_cast<int>(r), c));
    ++k;
  }
  return {static_cast<int>(pivots.size()), std::move(ker)};
}

struct AffineSolution {
  FMatrix particular;  // one solution of A x = b (A.cols() x b.cols())
  FMatrix kernel;      // basis of the homogeneous solutions
};

/// Solution set of A x = b as a particular solution plus the kernel coset;
/// nullopt when b is not in the image.
inline std::optional<AffineSolution> solve_affine(const FMatrix& a,
                                                  const FMatrix& b) {
  FMatrix aug = a.hstack(b);
  std::vector<int> pivots = aug.rref();
  for (int c : pivots)
    if (c >= a.cols()) return std::nullopt;  // pivot in the b block
  FMatrix part(a.field(), a.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      part.at(pivots[r], j) = aug.at(static_cast<int>(r), a.cols() + j);
  return AffineSolution{std::move(part), rank_kernel(a).kernel};
}

/// Basis of the column space, read off the pivot columns.
inline FMatrix column_space(const FMatrix& a) {
  FMatrix red = a;
  std::vector<int> piv = red.rref();
  FMatrix basis(a.field(), a.rows(), static_cast<int>(piv.size()));
  for (size_t c = 0; c < piv.size(); ++c)
    for (int r = 0; r < a.rows(); ++r)
      basis.at(r, static_cast<int>(c)) = a.at(r, piv[c]);
  return basis;
}

}  // namespace rootlie
