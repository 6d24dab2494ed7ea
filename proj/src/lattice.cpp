#include "logsurf/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace logsurf {

Rat intersection(const GramMatrix& gram, const QVec& a, const QVec& b) {
  const std::size_t n = gram.rank();
  if (a.size() != n || b.size() != n)
    throw std::invalid_argument("intersection: dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Rat row(0);
    for (std::size_t j = 0; j < n; ++j) row += gram.at(i, j) * b[j];
    s += a[i] * row;
  }
  return s;
}

Signature signature(const GramMatrix& gram) {
  if (!gram.is_symmetric())
    throw std::invalid_argument("signature: matrix not symmetric");
  const std::size_t n = gram.rank();
  std::vector<std::vector<Rat>> a = gram.matrix().data();
  Signature sig;
  std::size_t k = 0;
  while (k < n) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (a[i][i] != 0) { piv = i; break; }
    if (piv == n) {
      // All remaining diagonal entries vanish. Either the block is zero,
      // or a congruence e_i <- e_i + e_j creates the pivot 2*a[i][j].
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) { bi = i; bj = j; break; }
      if (bi == n) {
        sig.zeros += static_cast<int>(n - k);
        return sig;
      }
      for (std::size_t c = 0; c < n; ++c) a[bi][c] += a[bj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][bi] += a[r][bj];
      piv = bi;
    }
    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (std::size_t r = 0; r < n; ++r) std::swap(a[r][piv], a[r][k]);
    }
    const Rat d = a[k][k];
    if (d > 0) ++sig.positives; else ++sig.negatives;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      const Rat f = a[r][k] / d;
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      a[r][k] = 0;
    }
    for (std::size_t c = k + 1; c < n; ++c) a[k][c] = 0;
    // Row elimination already used the symmetric column entries; restore
    // symmetry of the trailing block explicitly.
    for (std::size_t r = k + 1; r < n; ++r)
      for (std::size_t c = k + 1; c < r; ++c) a[c][r] = a[r][c];
    ++k;
  }
  return sig;
}

bool is_negative_definite(const GramMatrix& gram,
                          const std::vector<std::size_t>& subset) {
  const std::size_t n = gram.rank();
  std::vector<std::vector<Rat>> sub(subset.size(),
                                    std::vector<Rat>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= n) throw std::out_of_range("subset index out of range");
    for (std::size_t j = 0; j < subset.size(); ++j)
      sub[i][j] = gram.at(subset[i], subset[j]);
  }
  Signature s = signature(GramMatrix(std::move(sub)));
  return s.positives == 0 && s.zeros == 0 &&
         s.negatives == static_cast<int>(subset.size());
}

bool is_negative_definite_span(const GramMatrix& gram,
                               const std::vector<QVec>& classes) {
  std::vector<std::vector<Rat>> sub(classes.size(),
                                    std::vector<Rat>(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      sub[i][j] = intersection(gram, classes[i], classes[j]);
  Signature s = signature(GramMatrix(std::move(sub)));
  return s.positives == 0 && s.zeros == 0 &&
         s.negatives == static_cast<int>(classes.size());
}

QuotientMap::QuotientMap(const GramMatrix& ambient, std::vector<QVec> contracted)
    : ambient_(ambient), contracted_(std::move(contracted)) {
  const std::size_t n = ambient_.rank();
  const std::size_t k = contracted_.size();
  if (k == 0) throw std::invalid_argument("contract_quotient: empty span");
  for (const QVec& v : contracted_)
    if (v.size() != n)
      throw std::invalid_argument("contract_quotient: dimension mismatch");

  std::vector<std::vector<Rat>> sg(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      sg[i][j] = intersection(ambient_, contracted_[i], contracted_[j]);
  span_gram_ = QMat(sg);
  {
    Signature s = signature(GramMatrix(span_gram_));
    if (s.positives != 0 || s.zeros != 0)
      throw std::invalid_argument(
          "contract_quotient: contracted span not negative definite");
  }

  // Orthogonal complement = kernel of the k x n matrix of pairings.
  QMat pairings(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rat s(0);
      for (std::size_t l = 0; l < n; ++l)
        s += contracted_[i][l] * ambient_.at(l, j);
      pairings.at(i, j) = s;
    }
  }
  complement_ = pairings.kernel();
  if (complement_.size() != n - k)
    throw std::invalid_argument(
        "contract_quotient: contracted classes linearly dependent");

  std::vector<std::vector<Rat>> qg(n - k, std::vector<Rat>(n - k));
  for (std::size_t i = 0; i < n - k; ++i)
    for (std::size_t j = 0; j < n - k; ++j)
      qg[i][j] = intersection(ambient_, complement_[i], complement_[j]);
  quotient_ = GramMatrix(std::move(qg));
}

QVec QuotientMap::project_ambient(const QVec& x) const {
  const std::size_t k = contracted_.size();
  QVec rhs(k);
  for (std::size_t i = 0; i < k; ++i)
    rhs[i] = intersection(ambient_, contracted_[i], x);
  auto y = span_gram_.solve(rhs);
  if (!y) throw std::logic_error("quotient projection: singular span gram");
  QVec sigma(x.size());
  for (std::size_t i = 0; i < k; ++i) sigma += (*y)[i] * contracted_[i];
  return x - sigma;
}

QVec QuotientMap::push(const QVec& x) const {
  const QVec p = project_ambient(x);
  const std::size_t n = ambient_.rank();
  const std::size_t q = complement_.size();
  QMat w(n, q);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t i = 0; i < n; ++i) w.at(i, j) = complement_[j][i];
  auto c = w.solve_consistent(p);
  if (!c) throw std::logic_error("quotient push: projection left the complement");
  return *c;
}

QuotientMap contract_quotient(const GramMatrix& gram,
                              const std::vector<QVec>& contracted) {
  return QuotientMap(gram, contracted);
}

QuotientMap contract_quotient(const GramMatrix& gram,
                              const std::vector<std::size_t>& subset) {
  std::vector<QVec> vs;
  vs.reserve(subset.size());
  for (std::size_t idx : subset) {
    if (idx >= gram.rank()) throw std::out_of_range("subset index out of range");
    QVec e(gram.rank());
    e[idx] = Rat(1);
    vs.push_back(std::move(e));
  }
  return QuotientMap(gram, vs);
}

}  // namespace logsurf
