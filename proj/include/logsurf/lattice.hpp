#pragma once

#include <cstddef>
#include <vector>

#include "logsurf/qmat.hpp"
#include "logsurf/qvec.hpp"
#include "logsurf/rational.hpp"

namespace logsurf {

// Symmetric bilinear form on the ambient lattice, stored as the matrix of
// pairings between basis classes. Symmetry is a queried property rather
// than a constructor guarantee so that file validation can report it as a
// violation instead of refusing to load.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(QMat entries) : m_(std::move(entries)) {}
  explicit GramMatrix(std::vector<std::vector<Rat>> rows) : m_(QMat(std::move(rows))) {}

  std::size_t rank() const { return m_.rows(); }
  const Rat& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  const QMat& matrix() const { return m_; }
  bool is_symmetric() const { return m_.is_symmetric(); }

  friend bool operator==(const GramMatrix& a, const GramMatrix& b) {
    return a.m_ == b.m_;
  }

 private:
  QMat m_;
};

struct Signature {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Intersection number a.b of two classes.
Rat intersection(const GramMatrix& gram, const QVec& a, const QVec& b);

// Exact inertia by symmetric Gaussian elimination with diagonal pivoting;
// a congruence step handles an all-zero diagonal block. Sylvester-stable.
Signature signature(const GramMatrix& gram);

// True iff the principal submatrix on `subset` has signature (0, k, 0).
bool is_negative_definite(const GramMatrix& gram,
                          const std::vector<std::size_t>& subset);

// Same test on the Gram matrix of an arbitrary list of classes.
bool is_negative_definite_span(const GramMatrix& gram,
                               const std::vector<QVec>& classes);

// Numerical model of contracting a negative-definite configuration:
// classes push to their component orthogonal to the contracted span,
// expressed in a chosen basis of the orthogonal complement.
class QuotientMap {
 public:
  QuotientMap(const GramMatrix& ambient, std::vector<QVec> contracted);

  std::size_t ambient_rank() const { return ambient_.rank(); }
  std::size_t quotient_rank() const { return complement_.size(); }
  const GramMatrix& quotient_gram() const { return quotient_; }
  const std::vector<QVec>& complement_basis() const { return complement_; }

  // Component of x orthogonal to the contracted span (Mumford
  // pushforward-then-pullback), in ambient coordinates. Idempotent; kills
  // exactly the contracted span.
  QVec project_ambient(const QVec& x) const;

  // project_ambient(x) re-expressed in the complement basis.
  QVec push(const QVec& x) const;

 private:
  GramMatrix ambient_;
  std::vector<QVec> contracted_;
  QMat span_gram_;                 // pairings of the contracted classes
  std::vector<QVec> complement_;   // basis of the orthogonal complement
  GramMatrix quotient_;
};

QuotientMap contract_quotient(const GramMatrix& gram,
                              const std::vector<QVec>& contracted);
QuotientMap contract_quotient(const GramMatrix& gram,
                              const std::vector<std::size_t>& subset);

}  // namespace logsurf
