#include "homlie/linalg.hpp"

#include <stdexcept>

namespace homlie {

bool isZeroMatrix(const Eigen::Ref<const RMatrix>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

bool sameMatrix(const Eigen::Ref<const RMatrix>& a,
                const Eigen::Ref<const RMatrix>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

RowEchelon rowReduce(RMatrix m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    if (m(r, c) != 1) m.row(r) /= m(r, c);
    for (Index i = 0; i < rows; ++i) {
      if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

Index rank(const Eigen::Ref<const RMatrix>& m) {
  return static_cast<Index>(rowReduce(m).pivotCols.size());
}

Rational determinant(const Eigen::Ref<const RMatrix>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Index n = m.rows();
  RMatrix a = m;
  Rational det = 1;
  for (Index c = 0; c < n; ++c) {
    Index p = -1;
    for (Index i = c; i < n; ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return Rational(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (a(i, c) != 0) {
        // Evaluate the factor before the row update: the expression reads
        // a(i, c), which the update overwrites.
        const Rational factor = a(i, c) / a(c, c);
        a.row(i) -= factor * a.row(c);
      }
    }
  }
  return det;
}

std::optional<RMatrix> inverse(const Eigen::Ref<const RMatrix>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Index n = m.rows();
  RMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RMatrix::Identity(n, n);
  RowEchelon e = rowReduce(std::move(aug));
  if (static_cast<Index>(e.pivotCols.size()) != n || (n > 0 && e.pivotCols.back() >= n))
    return std::nullopt;
  return RMatrix(e.mat.rightCols(n));
}

std::optional<RVector> solve(const Eigen::Ref<const RMatrix>& m,
                             const Eigen::Ref<const RVector>& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  RMatrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  RowEchelon e = rowReduce(std::move(aug));
  if (!e.pivotCols.empty() && e.pivotCols.back() == m.cols()) return std::nullopt;
  RVector x = RVector::Zero(m.cols());
  for (std::size_t r = 0; r < e.pivotCols.size(); ++r) {
    x(e.pivotCols[r]) = e.mat(static_cast<Index>(r), m.cols());
  }
  return x;
}

std::optional<RMatrix> solveMatrix(const Eigen::Ref<const RMatrix>& m,
                                   const Eigen::Ref<const RMatrix>& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solveMatrix: shape mismatch");
  RMatrix x(m.cols(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    auto col = solve(m, b.col(j));
    if (!col) return std::nullopt;
    x.col(j) = *col;
  }
  return x;
}

Subspace::Subspace(Index ambientDim) : ambientDim_(ambientDim), basis_(ambientDim, 0) {
  if (ambientDim < 0) throw std::invalid_argument("Subspace: negative dimension");
}

Subspace Subspace::span(Index ambientDim, const Eigen::Ref<const RMatrix>& generators) {
  if (generators.size() > 0 && generators.rows() != ambientDim)
    throw std::invalid_argument("Subspace::span: generator dimension mismatch");
  Subspace s(ambientDim);
  if (generators.cols() == 0) return s;
  // Canonicalize through the unique RREF of the transposed generators: the
  // nonzero rows, transposed back, are the reduced column echelon basis.
  RowEchelon e = rowReduce(generators.transpose());
  const Index d = static_cast<Index>(e.pivotCols.size());
  s.basis_ = e.mat.topRows(d).transpose();
  s.pivotRows_ = std::move(e.pivotCols);
  return s;
}

Subspace Subspace::full(Index ambientDim) {
  return span(ambientDim, RMatrix::Identity(ambientDim, ambientDim));
}

bool Subspace::contains(const Eigen::Ref<const RVector>& v) const {
  if (v.rows() != ambientDim_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  RVector r = v;
  for (Index j = 0; j < basis_.cols(); ++j) {
    const Rational& c = r(pivotRows_[j]);
    if (c != 0) r -= c * basis_.col(j);
  }
  return isZeroMatrix(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambientDim_ != ambientDim_)
    throw std::invalid_argument("Subspace::contains: ambient dimension mismatch");
  for (Index j = 0; j < other.basis_.cols(); ++j) {
    if (!contains(other.basis_.col(j))) return false;
  }
  return true;
}

std::optional<RVector> Subspace::coordinates(const Eigen::Ref<const RVector>& v) const {
  if (v.rows() != ambientDim_) throw std::invalid_argument("Subspace::coordinates: dimension mismatch");
  RVector r = v;
  RVector c = RVector::Zero(basis_.cols());
  for (Index j = 0; j < basis_.cols(); ++j) {
    // The basis is in reduced column echelon form, so each pivot row is hit
    // by exactly one basis column: coordinates read off directly.
    c(j) = r(pivotRows_[j]);
    if (c(j) != 0) r -= c(j) * basis_.col(j);
  }
  if (!isZeroMatrix(r)) return std::nullopt;
  return c;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambientDim_ == other.ambientDim_ && basis_.cols() == other.basis_.cols() &&
         sameMatrix(basis_, other.basis_);
}

Subspace kernel(const Eigen::Ref<const RMatrix>& m) {
  RowEchelon e = rowReduce(m);
  const Index cols = m.cols();
  const Index nPivots = static_cast<Index>(e.pivotCols.size());
  RMatrix gens(cols, cols - nPivots);
  Index g = 0;
  std::size_t nextPivot = 0;
  for (Index c = 0; c < cols; ++c) {
    if (nextPivot < e.pivotCols.size() && e.pivotCols[nextPivot] == c) {
      ++nextPivot;
      continue;
    }
    RVector v = RVector::Zero(cols);
    v(c) = 1;
    for (std::size_t r = 0; r < e.pivotCols.size(); ++r) {
      v(e.pivotCols[r]) = -e.mat(static_cast<Index>(r), c);
    }
    gens.col(g++) = v;
  }
  return Subspace::span(cols, gens);
}

Subspace image(const Eigen::Ref<const RMatrix>& m) {
  return Subspace::span(m.rows(), m);
}

Subspace sum(const Subspace& s1, const Subspace& s2) {
  if (s1.ambientDim() != s2.ambientDim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  RMatrix gens(s1.ambientDim(), s1.dim() + s2.dim());
  gens.leftCols(s1.dim()) = s1.basis();
  gens.rightCols(s2.dim()) = s2.basis();
  return Subspace::span(s1.ambientDim(), gens);
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
  if (s1.ambientDim() != s2.ambientDim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  // Kernel of [B1 B2]: a pair (u, w) with B1 u = -B2 w; the intersection is
  // spanned by the B1 u parts.
  RMatrix stacked(s1.ambientDim(), s1.dim() + s2.dim());
  stacked.leftCols(s1.dim()) = s1.basis();
  stacked.rightCols(s2.dim()) = s2.basis();
  Subspace k = kernel(stacked);
  RMatrix gens = s1.basis() * k.basis().topRows(s1.dim());
  return Subspace::span(s1.ambientDim(), gens);
}

QuotientSpace::QuotientSpace(Subspace relations) : relations_(std::move(relations)) {
  const Index n = relations_.ambientDim();
  const Index d = relations_.dim();
  const auto& pivots = relations_.pivotRows();
  std::vector<Index> freeRows;
  freeRows.reserve(n - d);
  {
    std::size_t nextPivot = 0;
    for (Index r = 0; r < n; ++r) {
      if (nextPivot < pivots.size() && pivots[nextPivot] == r) {
        ++nextPivot;
      } else {
        freeRows.push_back(r);
      }
    }
  }
  const Index q = static_cast<Index>(freeRows.size());
  // project(v) = (v - B * v[pivots]) restricted to the free rows: subtracting
  // the unique relation combination that matches v on the pivot rows leaves a
  // canonical representative supported on the free rows.
  projection_ = RMatrix::Zero(q, n);
  section_ = RMatrix::Zero(n, q);
  for (Index i = 0; i < q; ++i) {
    projection_(i, freeRows[i]) = 1;
    for (Index j = 0; j < d; ++j) {
      projection_(i, pivots[j]) -= relations_.basis()(freeRows[i], j);
    }
    section_(freeRows[i], i) = 1;
  }
}

Index binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Index result = 1;
  for (Index i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace homlie
