#ifndef HOMLIE_TESTS_SUPPORT_ORACLES_HPP
#define HOMLIE_TESTS_SUPPORT_ORACLES_HPP

#include "homlie/homology.hpp"

/// Independent reference implementations used to cross-check the library.
/// Each one recomputes a quantity from first principles with different
/// mechanics than the production code.
namespace homlie::testsupport {

/// Determinant by cofactor expansion along the first row.
Rational detOracle(const Eigen::Ref<const RMatrix>& m);

/// Rank as the size of the largest nonzero minor (exhaustive search; only
/// sensible for small matrices).
Index rankOracle(const Eigen::Ref<const RMatrix>& m);

/// The Hom-Jacobi defect [alpha(x), [y, z]] + [alpha(z), [x, y]] +
/// [alpha(y), [z, x]] evaluated directly on coordinate vectors.
RVector homJacobiDefect(const HomLieAlgebra& alg, const Eigen::Ref<const RVector>& x,
                        const Eigen::Ref<const RVector>& y,
                        const Eigen::Ref<const RVector>& z);

/**
 * Untwisted Chevalley-Eilenberg boundary of a Lie algebra with coefficients
 * in a module, assuming both twists are the identity.  Signs come from
 * explicit tuple surgery (deletion positions and insertion parities) rather
 * than determinant minors, and the module convention matches the library:
 * m . x = -rho(x, m).
 *
 * Chain coordinates agree with ChainComplex: index (a, T) = a * binom + pos(T).
 */
RMatrix classicalBoundary(const HomLieAlgebra& alg, const HomModule& module, Index n);

}  // namespace homlie::testsupport

#endif  // HOMLIE_TESTS_SUPPORT_ORACLES_HPP
