#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "logsurf/qvec.hpp"
#include "logsurf/rational.hpp"

namespace logsurf {

// Dense exact-rational matrix. Everything is desk scale; plain Gaussian
// elimination with first-nonzero pivoting keeps the results deterministic.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols, Rat(0))) {}
  explicit QMat(std::vector<std::vector<Rat>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  const std::vector<std::vector<Rat>>& data() const { return a_; }

  bool is_symmetric() const;
  QMat transposed() const;
  QVec apply(const QVec& x) const;  // matrix * column vector

  friend QMat operator*(const QMat& a, const QMat& b);
  friend bool operator==(const QMat& a, const QMat& b) {
    return a.a_ == b.a_;
  }

  // Solves A x = b for square invertible A. Empty result when singular.
  std::optional<QVec> solve(const QVec& b) const;

  // Solves A x = b for any A with a consistent system (least structure:
  // returns one particular solution; empty when inconsistent).
  std::optional<QVec> solve_consistent(const QVec& b) const;

  // Basis of the right kernel, deterministic (RREF free columns).
  std::vector<QVec> kernel() const;

  Rat determinant() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<Rat>> a_;
};

}  // namespace logsurf
