#ifndef HOMLIE_LINALG_HPP
#define HOMLIE_LINALG_HPP

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "homlie/rational.hpp"

namespace homlie {

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// True when every entry of m is exactly zero.
bool isZeroMatrix(const Eigen::Ref<const RMatrix>& m);

/// Exact entrywise equality (shapes must already agree).
bool sameMatrix(const Eigen::Ref<const RMatrix>& a,
                const Eigen::Ref<const RMatrix>& b);

/// Result of Gauss-Jordan elimination: the reduced row echelon form together
/// with the pivot column of each nonzero row.
struct RowEchelon {
  RMatrix mat;
  std::vector<Index> pivotCols;
};

/**
 * Reduced row echelon form over the rationals.  Deterministic: pivots are
 * chosen as the first nonzero entry in each column scan, every pivot is
 * normalized to 1 and its column cleared, so the output is the unique RREF
 * of the row space.
 */
RowEchelon rowReduce(RMatrix m);

/// Exact rank via Gauss-Jordan elimination.
Index rank(const Eigen::Ref<const RMatrix>& m);

/// Exact determinant via Gaussian elimination (square input).
Rational determinant(const Eigen::Ref<const RMatrix>& m);

/// Inverse of a square matrix; std::nullopt when singular.
std::optional<RMatrix> inverse(const Eigen::Ref<const RMatrix>& m);

/**
 * One particular solution x of m x = b, or std::nullopt when the system is
 * inconsistent.  Free variables are set to zero, so the solution is
 * deterministic.
 */
std::optional<RVector> solve(const Eigen::Ref<const RMatrix>& m,
                             const Eigen::Ref<const RVector>& b);

/// Column-wise solve: X with m X = b, or std::nullopt when any column fails.
std::optional<RMatrix> solveMatrix(const Eigen::Ref<const RMatrix>& m,
                                   const Eigen::Ref<const RMatrix>& b);

/**
 * A linear subspace of Q^n held in a canonical basis, so that two Subspace
 * values are equal as subspaces if and only if their basis matrices are
 * identical.
 *
 * The canonical basis is in reduced column echelon form: basis vectors are
 * the columns of an n x d matrix whose pivot rows strictly increase from
 * left to right, each pivot entry is 1, and every pivot row is zero in all
 * other columns.
 */
class Subspace {
 public:
  /// The zero subspace of Q^n.
  explicit Subspace(Index ambientDim = 0);

  /// Canonicalized span of the given generator columns (n x k, any k).
  static Subspace span(Index ambientDim, const Eigen::Ref<const RMatrix>& generators);

  /// The full space Q^n.
  static Subspace full(Index ambientDim);

  Index ambientDim() const { return ambientDim_; }
  Index dim() const { return basis_.cols(); }

  /// Canonical basis, an ambientDim x dim matrix in reduced column echelon form.
  const RMatrix& basis() const { return basis_; }

  /// Pivot row of each basis column, strictly increasing.
  const std::vector<Index>& pivotRows() const { return pivotRows_; }

  bool contains(const Eigen::Ref<const RVector>& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the canonical basis, if v lies in the subspace.
  std::optional<RVector> coordinates(const Eigen::Ref<const RVector>& v) const;

  /// Exact equality of subspaces (canonical form makes this structural).
  bool operator==(const Subspace& other) const;

 private:
  Index ambientDim_ = 0;
  RMatrix basis_;
  std::vector<Index> pivotRows_;
};

/// Kernel of m as a canonical subspace of Q^cols.
Subspace kernel(const Eigen::Ref<const RMatrix>& m);

/// Column space of m as a canonical subspace of Q^rows.
Subspace image(const Eigen::Ref<const RMatrix>& m);

/// Sum s1 + s2 of two subspaces of the same ambient space.
Subspace sum(const Subspace& s1, const Subspace& s2);

/// Intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& s1, const Subspace& s2);

/**
 * The quotient Q^n / R for a subspace R, held as an explicit projection /
 * section pair.  The representative coordinates are the ambient coordinates
 * at the non-pivot rows of R's canonical basis, so the construction is
 * deterministic.
 *
 * Invariants: projection * section is the identity on Q^q, and
 * projection * v == 0 exactly when v lies in R.
 */
class QuotientSpace {
 public:
  QuotientSpace() = default;
  explicit QuotientSpace(Subspace relations);

  Index ambientDim() const { return relations_.ambientDim(); }
  Index dim() const { return projection_.rows(); }

  const Subspace& relations() const { return relations_; }

  /// dim x ambientDim matrix sending a vector to its class coordinates.
  const RMatrix& projection() const { return projection_; }

  /// ambientDim x dim matrix choosing one representative per class.
  const RMatrix& section() const { return section_; }

 private:
  Subspace relations_;
  RMatrix projection_;
  RMatrix section_;
};

/// Binomial coefficient as an Index (exact for the small sizes used here).
Index binomial(Index n, Index k);

}  // namespace homlie

#endif  // HOMLIE_LINALG_HPP
