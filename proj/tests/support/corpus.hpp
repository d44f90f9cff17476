#ifndef HOMLIE_TESTS_SUPPORT_CORPUS_HPP
#define HOMLIE_TESTS_SUPPORT_CORPUS_HPP

#include <random>
#include <vector>

#include "homlie/extensions.hpp"
#include "homlie/homology.hpp"

/// Deterministic generators for the randomized test corpora.  Every sampler
/// takes an explicit engine so test cases stay reproducible.
namespace homlie::testsupport {

using Rng = std::mt19937;

/// Uniform integer in [lo, hi].
Index randomIndex(Rng& rng, Index lo, Index hi);

/// Uniform rational with numerator in [-bound, bound] and denominator in
/// [1, maxDen].
Rational randomRational(Rng& rng, int bound = 3, int maxDen = 2);

RVector randomVector(Rng& rng, Index n, int bound = 3, int maxDen = 2);
RMatrix randomMatrix(Rng& rng, Index rows, Index cols, int bound = 3, int maxDen = 2);

/// Random invertible matrix (rejection sampling).
RMatrix randomInvertible(Rng& rng, Index n, int bound = 2);

/// Abelian algebra with identity twist.
HomLieAlgebra abelianAlgebra(Index dim);

/// Abelian algebra with an arbitrary twist (always multiplicative).
HomLieAlgebra abelianWithTwist(RMatrix alpha);

/// The 2-dim solvable Lie algebra [e1, e2] = e1 (identity twist).
HomLieAlgebra solvable2();

/// The 3-dim Heisenberg Lie algebra [e1, e2] = e3 (identity twist).
HomLieAlgebra heisenberg3();

/// sl2 on the basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
HomLieAlgebra sl2();

/// Small catalog of Lie algebras (identity twist) of dimension <= maxDim.
std::vector<HomLieAlgebra> lieCatalog(Index maxDim = 4);

/// Copies of the ad matrices, as the raw bracket table of an algebra.
std::vector<RMatrix> adTable(const HomLieAlgebra& alg);

/// Random bracket endomorphism of solvable2 / heisenberg3, and a random
/// automorphism of sl2 (products of exponentials of nilpotent ad's).
RMatrix randomSolvable2Endo(Rng& rng);
RMatrix randomHeisenberg3Endo(Rng& rng);
RMatrix randomSl2Automorphism(Rng& rng);

/// Random multiplicative Hom-Lie algebra with zero twist: skew structure
/// constants are unconstrained there, so this samples the whole family.
HomLieAlgebra randomZeroTwist(Rng& rng, Index dim, int bound = 2);

/// Random Lie algebra (identity twist): a catalog member in a random basis.
HomLieAlgebra randomLie(Rng& rng, Index maxDim);

/// Random validated multiplicative Hom-Lie algebra of dimension <= maxDim:
/// a mix of zero-twist samples, Lie algebras, twisted catalog members and
/// abelian algebras with arbitrary twist, optionally in a random basis.
HomLieAlgebra randomMultiplicative(Rng& rng, Index maxDim);

/// Random validated module over the given algebra with dim <= maxModuleDim.
HomModule randomModule(Rng& rng, const HomLieAlgebra& alg, Index maxModuleDim);

/// Random perfect multiplicative algebra of the exact dimension (zero twist).
HomLieAlgebra randomPerfect(Rng& rng, Index dim);

/// Central extensions of a perfect algebra: its universal central extension,
/// quotients of that extension by random twist-invariant subspaces of the
/// kernel, and the projection from a direct product with an abelian factor.
std::vector<Extension> centralExtensionsOf(Rng& rng, const HomLieAlgebra& alg,
                                           int quotients = 2);

/// The lifting formula phi{x, y} = [section(x), section(y)] evaluated for an
/// explicitly given linear section (re-derived here so section-independence
/// can be tested against lift()).
RMatrix liftWithSection(const UceData& u, const Extension& target,
                        const Eigen::Ref<const RMatrix>& section);

}  // namespace homlie::testsupport

#endif  // HOMLIE_TESTS_SUPPORT_CORPUS_HPP
