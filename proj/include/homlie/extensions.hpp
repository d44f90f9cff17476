#ifndef HOMLIE_EXTENSIONS_HPP
#define HOMLIE_EXTENSIONS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "homlie/homology.hpp"

namespace homlie {

/// Thrown when a quotient construction that the theory predicts to be
/// well-defined fails its explicit representative-independence check; the
/// witness is the offending vector, serialized into the message as well.
class WellDefinednessError : public std::runtime_error {
 public:
  WellDefinednessError(const std::string& message, RVector witness);

  const RVector& witness() const { return witness_; }

 private:
  RVector witness_;
};

/**
 * A short exact sequence 0 -> M -> K -> L -> 0 of Hom-Lie algebras, stored
 * as the surjective projection together with its kernel data.  The kernel is
 * always alpha_K-invariant for a validated morphism; kernelTwist is the
 * restriction of alpha_K expressed in the kernel basis.
 */
struct Extension {
  HomLieAlgebra total;
  HomLieAlgebra base;
  Morphism proj;
  Subspace kernelSpace;
  RMatrix kernelTwist;
};

/**
 * Builds the Extension determined by a projection morphism.  Throws
 * std::invalid_argument when pi fails checkMorphism, is not surjective, or
 * (possible only for unvalidated inputs) its kernel is not alpha-invariant.
 */
Extension makeExtension(Morphism pi);

/// True when the kernel is contained in the center of the total algebra.
bool isCentral(const Extension& e);

/// True when alpha_K(kernel) is contained in the center of the total algebra.
bool isAlphaCentral(const Extension& e);

/**
 * The composite extension of outer (K -> L) with inner (F -> K): projection
 * pi_outer o pi_inner with its full kernel.  Throws std::invalid_argument
 * when inner.base and outer.total differ.
 */
Extension composeExtensions(const Extension& outer, const Extension& inner);

/// The pullback of two morphisms into a common target.
struct PullbackData {
  HomLieAlgebra algebra;                  // P = {(a, k) : tau(a) = pi(k)}
  Morphism toLeft;                        // P -> A
  Morphism toRight;                       // P -> K
  std::optional<Extension> extensionOverRight;  // present when toRight is surjective
};

/**
 * Pullback of tau: A -> L against pi: K -> L (pi surjective): the subalgebra
 * P of A x K on which the two maps agree, with both projections.  When tau
 * is surjective, P -> K is an extension with kernel isomorphic to ker(tau).
 */
PullbackData pullback(const Morphism& tau, const Morphism& pi);

/**
 * The universal central extension data of a perfect algebra: the relation
 * subspace inside the degree-2 wedge space, the quotient algebra on
 * canonical representatives, and the universal morphism onto the source.
 */
struct UceData {
  HomLieAlgebra source;
  Subspace relations;           // I_L inside Lambda^2 L
  QuotientSpace coordinates;    // Lambda^2 L / I_L
  HomLieAlgebra algebra;        // uce(L)
  Morphism uL;                  // uce(L) -> L

  const RMatrix& alphaTilde() const { return algebra.alpha(); }

  /// dim ker u_L, the homology H_2 of the source with trivial coefficients.
  Index kernelDim() const { return algebra.dim() - source.dim(); }
};

/**
 * Universal central extension of a perfect multiplicative Hom-Lie algebra.
 * The induced bracket's representative-independence and the invariance of
 * the relation space under the wedge-square of alpha are verified
 * explicitly; a failure throws WellDefinednessError with a witness.
 * Throws std::invalid_argument when the algebra is not perfect.
 */
UceData uce(const HomLieAlgebra& alg);

/// The extension (ker u_L -> uce(L) -> L) packaged from UceData.
Extension uceExtension(const UceData& u);

/**
 * The universal lift phi: uce(L) -> K onto an extension pi: K -> L of the
 * same base: phi{x, y} = [s(x), s(y)] for a linear section s of pi.  The
 * construction verifies representative-independence (WellDefinednessError
 * with witness on failure), the morphism axioms, and pi o phi = u_L.
 *
 * requireCentral selects the extension class the target must belong to:
 * central when true, alpha-central when false.  Throws std::invalid_argument
 * when the target fails that requirement or has a different base.
 */
Morphism lift(const UceData& u, const Extension& target, bool requireCentral = true);

/// True when sigma is a validated morphism base -> total with
/// proj o sigma = identity.
bool checkSection(const Extension& e, const Morphism& sigma);

/// Outcome of the universality certificate for a central extension.
enum class UniversalityVerdict { UniversalCentral, NotUniversal, Inconclusive };

/// The certificate: homology dimensions of the total algebra with trivial
/// coefficients and the perfectness flag behind the verdict.
struct CertificateReport {
  UniversalityVerdict verdict;
  Index h1 = 0;
  Index h2 = 0;
  bool totalPerfect = false;
};

/**
 * Homological universality certificate for a central extension: vanishing
 * H_1 and H_2 of the total algebra is sufficient for universality;
 * non-perfectness of the total algebra rules it out; anything else is
 * inconclusive.  Throws std::invalid_argument when e is not central.
 */
CertificateReport universalityCertificate(const Extension& e);

}  // namespace homlie

#endif  // HOMLIE_EXTENSIONS_HPP
