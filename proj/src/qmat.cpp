#include "logsurf/qmat.hpp"

#include <stdexcept>

namespace logsurf {

QMat::QMat(std::vector<std::vector<Rat>> rows) : a_(std::move(rows)) {
  rows_ = a_.size();
  cols_ = rows_ ? a_[0].size() : 0;
  for (const auto& r : a_)
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
}

bool QMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (a_[i][j] != a_[j][i]) return false;
  return true;
}

QMat QMat::transposed() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.a_[j][i] = a_[i][j];
  return t;
}

QVec QMat::apply(const QVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("QMat::apply dimension");
  QVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat s(0);
    for (std::size_t j = 0; j < cols_; ++j) s += a_[i][j] * x[j];
    r[i] = s;
  }
  return r;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMat product dimension");
  QMat r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.a_[i][k] == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        r.a_[i][j] += a.a_[i][k] * b.a_[k][j];
    }
  return r;
}

namespace {

// Row-reduces [work | rhs] in place; returns pivot column per row.
std::vector<std::size_t> reduce(std::vector<std::vector<Rat>>& work) {
  const std::size_t m = work.size();
  const std::size_t n = m ? work[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && work[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(work[p], work[row]);
    const Rat inv = Rat(1) / work[row][col];
    for (std::size_t j = col; j < n; ++j) work[row][j] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || work[r][col] == 0) continue;
      const Rat f = work[r][col];
      for (std::size_t j = col; j < n; ++j) work[r][j] -= f * work[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<QVec> QMat::solve(const QVec& b) const {
  if (rows_ != cols_ || b.size() != rows_)
    throw std::invalid_argument("QMat::solve dimension");
  auto x = solve_consistent(b);
  if (!x) return std::nullopt;
  // Square systems are accepted only when uniquely solvable.
  if (!kernel().empty()) return std::nullopt;
  return x;
}

std::optional<QVec> QMat::solve_consistent(const QVec& b) const {
  if (b.size() != rows_)
    throw std::invalid_argument("QMat::solve_consistent dimension");
  std::vector<std::vector<Rat>> work(rows_, std::vector<Rat>(cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) work[i][j] = a_[i][j];
    work[i][cols_] = b[i];
  }
  std::vector<std::size_t> pivots = reduce(work);
  // Pivot in the augmented column means the system is inconsistent.
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == cols_) return std::nullopt;
  QVec x(cols_);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = work[k][cols_];
  return x;
}

std::vector<QVec> QMat::kernel() const {
  std::vector<std::vector<Rat>> work = a_;
  std::vector<std::size_t> pivots = reduce(work);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols_);
    v[free] = Rat(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -work[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat QMat::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square");
  std::vector<std::vector<Rat>> work = a_;
  Rat det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t p = col;
    while (p < rows_ && work[p][col] == 0) ++p;
    if (p == rows_) return Rat(0);
    if (p != col) {
      std::swap(work[p], work[col]);
      det = -det;
    }
    det *= work[col][col];
    const Rat inv = Rat(1) / work[col][col];
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (work[r][col] == 0) continue;
      const Rat f = work[r][col] * inv;
      for (std::size_t j = col; j < cols_; ++j) work[r][j] -= f * work[col][j];
    }
  }
  return det;
}

}  // namespace logsurf
