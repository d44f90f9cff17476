#ifndef HOMLIE_ALGEBRA_HPP
#define HOMLIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "homlie/linalg.hpp"

namespace homlie {

/**
 * A finite-dimensional Hom-Lie algebra over Q, presented by structure
 * constants on a fixed basis e_1..e_n together with a twist endomorphism.
 *
 * Data layout: ad(i) is the n x n matrix of [e_i, -], so column j of ad(i)
 * holds the coordinates of [e_i, e_j]; the structure constant c_{ij}^k is
 * ad(i)(k, j).  The twist alpha acts by coordinates v -> alpha * v, i.e.
 * column i of alpha holds the coordinates of alpha(e_i).
 *
 * Construction does not run the axiom checks; call validate() to test
 * skew-symmetry, the Hom-Jacobi identity and multiplicativity.
 */
class HomLieAlgebra {
 public:
  /// The zero-dimensional algebra.
  HomLieAlgebra() = default;

  HomLieAlgebra(std::vector<RMatrix> ad, RMatrix alpha,
                std::vector<std::string> labels = {});

  Index dim() const { return alpha_.rows(); }

  /// Matrix of [e_i, -].
  const RMatrix& ad(Index i) const { return ad_[static_cast<std::size_t>(i)]; }

  /// Matrix of [x, -] for an arbitrary element x.
  RMatrix adOf(const Eigen::Ref<const RVector>& x) const;

  /// Bracket of two coordinate vectors.
  RVector bracket(const Eigen::Ref<const RVector>& x,
                  const Eigen::Ref<const RVector>& y) const;

  /// Coordinates of [e_i, e_j].
  RVector bracketBasis(Index i, Index j) const { return ad_[static_cast<std::size_t>(i)].col(j); }

  /// Structure constant c_{ij}^k, the e_k coordinate of [e_i, e_j].
  const Rational& structureConstant(Index i, Index j, Index k) const {
    return ad_[static_cast<std::size_t>(i)](k, j);
  }

  const RMatrix& alpha() const { return alpha_; }

  /// Basis labels; empty when unnamed, otherwise one label per basis vector.
  const std::vector<std::string>& labels() const { return labels_; }

  /// Structural equality: same dimension, structure constants and twist.
  bool operator==(const HomLieAlgebra& other) const;

 private:
  std::vector<RMatrix> ad_;
  RMatrix alpha_{0, 0};
  std::vector<std::string> labels_;
};

/// Which axiom a validation failure belongs to.
enum class Check {
  SkewSymmetry,
  HomJacobi,
  Multiplicativity,
  MorphismBracket,
  MorphismTwist,
  ActionBracket,
  ActionModuleBracket,
  ActionTwist,
};

/// One failing identity instance: the axiom, the offending basis indices
/// (1-based, as reported to users) and the nonzero residual.
struct CheckFailure {
  Check check;
  std::vector<Index> indices;
  Rational residual;
};

/// Outcome of an axiom battery; ok() iff no identity instance failed.
struct ValidationReport {
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
  bool passed(Check check) const {
    for (const auto& f : failures)
      if (f.check == check) return false;
    return true;
  }
};

/**
 * Checks the Hom-Lie axioms in coordinates: skew-symmetry of the structure
 * constants, the Hom-Jacobi identity evaluated as the quadruple-indexed
 * scalar identity in (i, j, k, l), and multiplicativity of the twist.
 * Every failing index tuple is reported with its residual.
 */
ValidationReport validate(const HomLieAlgebra& alg);

/**
 * Yau twist: from a Lie algebra (given by its ad matrices; twist implicitly
 * the identity) and an algebra endomorphism phi, builds the multiplicative
 * Hom-Lie algebra with bracket phi([x, y]) and twist phi.
 *
 * Throws std::invalid_argument when the input brackets fail the Lie axioms
 * or phi is not an endomorphism of them.
 */
HomLieAlgebra yauTwist(const std::vector<RMatrix>& lieAd,
                       const Eigen::Ref<const RMatrix>& endo);

/**
 * Commutator bracket of a Hom-associative algebra: from multiplication
 * matrices mul[i] (column j = coordinates of e_i * e_j) and a twist alpha
 * satisfying Hom-associativity, builds the Hom-Lie algebra with bracket
 * xy - yx and the same twist.
 *
 * Throws std::invalid_argument when Hom-associativity or the endomorphism
 * property of alpha fails.
 */
HomLieAlgebra fromHomAssociative(const std::vector<RMatrix>& mul,
                                 const Eigen::Ref<const RMatrix>& alpha);

/// Center { x : [x, y] = 0 for all y } as a canonical subspace.
Subspace center(const HomLieAlgebra& alg);

/// True when S is closed under the bracket and under alpha.
bool isSubalgebra(const HomLieAlgebra& alg, const Subspace& s);

/// True when [S, L] lies in S and alpha(S) lies in S.
bool isHomIdeal(const HomLieAlgebra& alg, const Subspace& s);

/// Smallest Hom-ideal containing the given subspace.
Subspace idealClosure(const HomLieAlgebra& alg, const Subspace& seed);

/**
 * Commutator [H, K] of two Hom-ideals: the span of all pairwise brackets of
 * basis vectors, closed under alpha.  Throws std::invalid_argument when H or
 * K is not a Hom-ideal.
 */
Subspace commutator(const HomLieAlgebra& alg, const Subspace& h, const Subspace& k);

/// True when [L, L] spans L.
bool isPerfect(const HomLieAlgebra& alg);

/// A linear map between Hom-Lie algebras: matrix is target-dim x source-dim.
struct Morphism {
  HomLieAlgebra source;
  HomLieAlgebra target;
  RMatrix matrix;
};

/**
 * Checks that f is a morphism: f([x, y]) = [f(x), f(y)] on all basis pairs
 * and f o alpha = alpha o f.  Failures carry 1-based index tuples; bracket
 * failures are indexed (i, j, k), twist failures (r, c).
 */
ValidationReport checkMorphism(const Morphism& f);

/// True when f is a bijective morphism.
bool isIsomorphism(const Morphism& f);

/// Composition g o f (f first); shapes and algebras must be compatible.
Morphism composeMorphisms(const Morphism& g, const Morphism& f);

/**
 * The same algebra expressed in the new basis whose vectors are the columns
 * of the invertible matrix p (in old coordinates): structure constants
 * c'(i, j) = p^-1 [p e_i, p e_j] and twist p^-1 alpha p.
 */
HomLieAlgebra changeBasis(const HomLieAlgebra& alg, const Eigen::Ref<const RMatrix>& p);

/// A quotient algebra together with the canonical projection morphism.
struct QuotientAlgebra {
  HomLieAlgebra algebra;
  Morphism projection;
  QuotientSpace coordinates;
};

/**
 * Quotient of the algebra by a Hom-ideal, with induced bracket and twist on
 * canonical representative coordinates.  Throws std::invalid_argument when
 * the subspace is not a Hom-ideal.
 */
QuotientAlgebra quotientAlgebra(const HomLieAlgebra& alg, const Subspace& ideal);

/**
 * Largest multiplicative quotient: divides by the smallest Hom-ideal
 * containing all defects alpha([e_i, e_j]) - [alpha(e_i), alpha(e_j)].
 * The input must satisfy skew-symmetry and Hom-Jacobi (multiplicativity may
 * fail; that is the point).
 */
QuotientAlgebra multiplicativeQuotient(const HomLieAlgebra& alg);

/// A direct product with its two projection morphisms.
struct ProductAlgebra {
  HomLieAlgebra algebra;
  Morphism projLeft;
  Morphism projRight;
};

/// Componentwise bracket and twist on L1 x L2.
ProductAlgebra directProduct(const HomLieAlgebra& l1, const HomLieAlgebra& l2);

/// An action of a Hom-Lie algebra on a Hom-module (M, alphaM): rho[i] is the
/// m x m matrix of the action of e_i on M.
struct ActionData {
  Index moduleDim = 0;
  RMatrix alphaM{0, 0};
  std::vector<RMatrix> rho;
};

/**
 * Checks the Hom-module action axioms on all basis tuples: compatibility of
 * the action with the bracket (axiom a), with the module bracket (axiom b,
 * vacuous here since coefficient modules are abelian) and with the twists
 * (axiom c).
 */
ValidationReport checkAction(const HomLieAlgebra& alg, const ActionData& action);

/// Isomorphism class of a 2-dimensional multiplicative Hom-Lie algebra.
enum class TwoDimKind { Abelian, NonAbelianSingular, NonAbelianInvertible };

/**
 * Classification result: the class label, the canonical parameters, the
 * canonical-form algebra, and the change of basis p with
 * changeBasis(input, p) == canonical.
 *
 * Canonical forms on a basis (a1, a2):
 *  - Abelian: zero bracket, twist unconstrained (kept as given).
 *  - NonAbelianSingular: [a1, a2] = a1, twist ((0, t12), (0, t22)).
 *  - NonAbelianInvertible: [a1, a2] = a1, twist ((t11, t12), (0, 1)), t11 != 0.
 */
struct TwoDimClassification {
  TwoDimKind kind;
  std::vector<Rational> params;
  HomLieAlgebra canonical;
  RMatrix basisChange;
};

/**
 * Classifies a validated 2-dimensional multiplicative Hom-Lie algebra up to
 * isomorphism.  Throws std::invalid_argument when the input is not
 * 2-dimensional or fails validate().
 */
TwoDimClassification classify2dim(const HomLieAlgebra& alg);

}  // namespace homlie

#endif  // HOMLIE_ALGEBRA_HPP
