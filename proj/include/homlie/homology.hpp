#ifndef HOMLIE_HOMOLOGY_HPP
#define HOMLIE_HOMOLOGY_HPP

#include <map>
#include <vector>

#include "homlie/algebra.hpp"

namespace homlie {

/**
 * A Hom-module (M, alphaM) with an action of a Hom-Lie algebra L: rho(i) is
 * the moduleDim x moduleDim matrix of the left action of e_i on M.  The
 * module itself is abelian; validity of the action is checked by
 * checkAction(alg, module.action()).
 */
class HomModule {
 public:
  HomModule() = default;
  HomModule(Index algebraDim, RMatrix alphaM, std::vector<RMatrix> rho);

  /// Trivial action of an algebra of the given dimension, alphaM = identity.
  static HomModule trivial(Index algebraDim, Index moduleDim = 1);

  /// Trivial action with a prescribed module twist.
  static HomModule trivialWithTwist(Index algebraDim, RMatrix alphaM);

  /// The adjoint module of a multiplicative algebra: rho = ad, alphaM = alpha.
  static HomModule adjoint(const HomLieAlgebra& alg);

  Index algebraDim() const { return algebraDim_; }
  Index dim() const { return action_.moduleDim; }
  const RMatrix& alphaM() const { return action_.alphaM; }
  const RMatrix& rho(Index i) const { return action_.rho[static_cast<std::size_t>(i)]; }
  const ActionData& action() const { return action_; }

  /// Matrix of the action of an arbitrary algebra element x.
  RMatrix rhoOf(const Eigen::Ref<const RVector>& x) const;

 private:
  Index algebraDim_ = 0;
  ActionData action_;
};

/**
 * The ordered basis of the k-th exterior power of Q^n: strictly increasing
 * index tuples in lexicographic order.
 */
class WedgeBasis {
 public:
  WedgeBasis(Index ambientDim, Index degree);

  Index ambientDim() const { return n_; }
  Index degree() const { return k_; }
  Index size() const { return static_cast<Index>(tuples_.size()); }
  const std::vector<Index>& tuple(Index idx) const { return tuples_[static_cast<std::size_t>(idx)]; }

  /// Position of a strictly increasing tuple; throws when absent.
  Index indexOf(const std::vector<Index>& tuple) const;

 private:
  Index n_;
  Index k_;
  std::vector<std::vector<Index>> tuples_;
  std::map<std::vector<Index>, Index> lookup_;
};

/**
 * Coordinates of v_1 ∧ ... ∧ v_k in the wedge basis of degree k: the
 * coordinate at tuple T is the minor det(V[T, :]) of the column matrix of
 * the vectors.
 */
RVector wedgeExpand(const WedgeBasis& basis, const Eigen::Ref<const RMatrix>& vectors);
RVector wedgeExpand(Index ambientDim, const Eigen::Ref<const RMatrix>& vectors);

/// Matrix of the k-th exterior power of a square matrix a: entry (S, T) is
/// the minor det(a[S, T]).
RMatrix wedgePower(const Eigen::Ref<const RMatrix>& a, Index k);

/// Outcome of the five structural identities of the twisted complex at one
/// degree; all() iff every identity holds there.
struct CartanReport {
  bool homotopy = false;        // d i + i d = -theta
  bool thetaBracket = false;    // theta(alpha x) theta(y) - theta(alpha y) theta(x) = theta([x,y]) W
  bool thetaIota = false;       // theta(x) i(y) - i(alpha y) theta(x) = i([x,y]) W
  bool thetaBoundary = false;   // theta(alpha y) d = d theta(y)
  bool squareZero = false;      // d d = 0

  bool all() const { return homotopy && thetaBracket && thetaIota && thetaBoundary && squareZero; }
};

/// One homology space: dimension, cycle/boundary dimensions, and one cycle
/// representative per class (columns, in chain coordinates).
struct HomologySpace {
  Index dim = 0;
  Index cycleDim = 0;
  Index boundaryDim = 0;
  RMatrix representatives;
};

/**
 * The alpha-twisted chain complex C_n = M ⊗ Λ^n L of a Hom-Lie algebra with
 * coefficients in a Hom-module.  Chain coordinates: index (a, T) =
 * a * binom(n, deg) + position(T), i.e. the module index varies slowest.
 *
 * The module action enters the boundary through the right action
 * m · x = -rho(x, m).
 */
class ChainComplex {
 public:
  /// Builds boundaries d_1 .. d_maxDegree eagerly; maxDegree < 0 means dim L.
  ChainComplex(HomLieAlgebra alg, HomModule module, Index maxDegree = -1);

  const HomLieAlgebra& algebra() const { return alg_; }
  const HomModule& module() const { return module_; }
  Index maxDegree() const { return maxDegree_; }

  /// dim C_n = dim M * binom(dim L, n); zero for n > dim L.
  Index chainDim(Index n) const;

  const WedgeBasis& wedge(Index n) const;

  /**
   * The boundary d_n : C_n -> C_{n-1} for 1 <= n <= maxDegree.  Degrees
   * beyond maxDegree are available only when C_n is the zero space (then the
   * matrix is empty); otherwise throws std::out_of_range.
   */
  const RMatrix& boundary(Index n) const;

  /// Matrix of theta_n(y) : C_n -> C_n for an algebra element y.
  RMatrix theta(Index n, const Eigen::Ref<const RVector>& y) const;

  /// Matrix of the insertion i_n(alpha(y)) : C_n -> C_{n+1}; the parameter
  /// passed is y, the element whose image under alpha indexes the map.
  RMatrix iota(Index n, const Eigen::Ref<const RVector>& y) const;

  /// The twist alphaM ⊗ Λ^n(alpha) acting on C_n.
  RMatrix chainTwist(Index n) const;

  /// Checks the five structural identities at degree n >= 1 over all basis
  /// parameter choices.
  CartanReport verifyCartan(Index n) const;

  /// H_n = ker d_n / im d_{n+1} with canonical representatives.
  HomologySpace homology(Index n) const;

 private:
  RMatrix buildBoundary(Index n) const;

  HomLieAlgebra alg_;
  HomModule module_;
  Index maxDegree_ = 0;
  std::vector<WedgeBasis> wedges_;
  mutable std::vector<RMatrix> boundaries_;
  mutable std::vector<bool> built_;
};

/// dim H_0 in closed form: dim M - dim span{rho(x)(m)}.
Index h0ClosedForm(const HomLieAlgebra& alg, const HomModule& module);

/**
 * dim H_1 in closed form for trivial actions:
 * dim M * dim L - rank(alphaM) * dim [L, L].  Throws std::invalid_argument
 * when the action is not trivial.
 */
Index h1ClosedFormTrivialAction(const HomLieAlgebra& alg, const HomModule& module);

}  // namespace homlie

#endif  // HOMLIE_HOMOLOGY_HPP
