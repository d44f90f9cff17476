#include "homlie/extensions.hpp"

#include <sstream>
#include <utility>

namespace homlie {

namespace {

std::string describeWitness(const RVector& witness) {
  std::ostringstream out;
  out << "[";
  for (Index i = 0; i < witness.rows(); ++i) {
    if (i > 0) out << ", ";
    out << formatRational(witness(i));
  }
  out << "]";
  return out.str();
}

}  // namespace

WellDefinednessError::WellDefinednessError(const std::string& message, RVector witness)
    : std::runtime_error(message + "; witness " + describeWitness(witness)),
      witness_(std::move(witness)) {}

Extension makeExtension(Morphism pi) {
  if (!checkMorphism(pi).ok())
    throw std::invalid_argument("makeExtension: projection is not a morphism");
  if (rank(pi.matrix) != pi.target.dim())
    throw std::invalid_argument("makeExtension: projection is not surjective");
  Subspace ker = kernel(pi.matrix);
  const RMatrix& alphaK = pi.source.alpha();
  RMatrix twist(ker.dim(), ker.dim());
  for (Index j = 0; j < ker.dim(); ++j) {
    auto coords = ker.coordinates(RVector(alphaK * ker.basis().col(j)));
    if (!coords) throw std::invalid_argument("makeExtension: kernel is not alpha-invariant");
    twist.col(j) = *coords;
  }
  Extension e;
  e.total = pi.source;
  e.base = pi.target;
  e.kernelSpace = std::move(ker);
  e.kernelTwist = std::move(twist);
  e.proj = std::move(pi);
  return e;
}

bool isCentral(const Extension& e) {
  return center(e.total).contains(e.kernelSpace);
}

bool isAlphaCentral(const Extension& e) {
  Subspace twisted =
      Subspace::span(e.total.dim(), RMatrix(e.total.alpha() * e.kernelSpace.basis()));
  return center(e.total).contains(twisted);
}

Extension composeExtensions(const Extension& outer, const Extension& inner) {
  if (!(inner.base == outer.total))
    throw std::invalid_argument("composeExtensions: inner base and outer total disagree");
  return makeExtension(
      Morphism{inner.total, outer.base, outer.proj.matrix * inner.proj.matrix});
}

PullbackData pullback(const Morphism& tau, const Morphism& pi) {
  if (!(tau.target == pi.target))
    throw std::invalid_argument("pullback: morphisms have different targets");
  if (!checkMorphism(tau).ok() || !checkMorphism(pi).ok())
    throw std::invalid_argument("pullback: inputs are not morphisms");
  if (rank(pi.matrix) != pi.target.dim())
    throw std::invalid_argument("pullback: pi is not surjective");
  const Index na = tau.source.dim();
  const Index nk = pi.source.dim();
  ProductAlgebra product = directProduct(tau.source, pi.source);
  // P is the kernel of (tau, -pi) inside A x K.
  RMatrix agreement(tau.target.dim(), na + nk);
  agreement.leftCols(na) = tau.matrix;
  agreement.rightCols(nk) = -pi.matrix;
  Subspace sub = kernel(agreement);
  const Index np = sub.dim();
  std::vector<RMatrix> ad(static_cast<std::size_t>(np), RMatrix(np, np));
  for (Index a = 0; a < np; ++a) {
    for (Index b = 0; b < np; ++b) {
      RVector w = product.algebra.bracket(sub.basis().col(a), sub.basis().col(b));
      auto coords = sub.coordinates(w);
      if (!coords) throw std::logic_error("pullback: subspace not closed under the bracket");
      ad[static_cast<std::size_t>(a)].col(b) = *coords;
    }
  }
  RMatrix alphaP(np, np);
  for (Index a = 0; a < np; ++a) {
    auto coords = sub.coordinates(RVector(product.algebra.alpha() * sub.basis().col(a)));
    if (!coords) throw std::logic_error("pullback: subspace not closed under the twist");
    alphaP.col(a) = *coords;
  }
  PullbackData result;
  result.algebra = HomLieAlgebra(std::move(ad), std::move(alphaP));
  result.toLeft = Morphism{result.algebra, tau.source, RMatrix(sub.basis().topRows(na))};
  result.toRight = Morphism{result.algebra, pi.source, RMatrix(sub.basis().bottomRows(nk))};
  if (rank(result.toRight.matrix) == nk) {
    result.extensionOverRight = makeExtension(result.toRight);
  }
  return result;
}

UceData uce(const HomLieAlgebra& alg) {
  if (!isPerfect(alg)) throw std::invalid_argument("uce: algebra is not perfect");
  const Index n = alg.dim();
  const RMatrix& a = alg.alpha();
  WedgeBasis w2(n, 2);
  const Index n2 = w2.size();

  // The induced bracket map Lambda^2 L -> L on wedge coordinates.
  RMatrix lambda(n, n2);
  for (Index t = 0; t < n2; ++t) {
    const auto& tuple = w2.tuple(t);
    lambda.col(t) = alg.bracketBasis(tuple[0], tuple[1]);
  }

  auto wedge2 = [&](const RVector& x, const RVector& y) {
    RMatrix cols(n, 2);
    cols.col(0) = x;
    cols.col(1) = y;
    return wedgeExpand(w2, cols);
  };

  // Relation space: span of -[x1,x2]^alpha(x3) + [x1,x3]^alpha(x2)
  // - [x2,x3]^alpha(x1) over basis triples.
  RMatrix gens(n2, n * (n - 1) * (n - 2) / 6);
  Index g = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        gens.col(g++) = -wedge2(alg.bracketBasis(i, j), a.col(k)) +
                        wedge2(alg.bracketBasis(i, k), a.col(j)) -
                        wedge2(alg.bracketBasis(j, k), a.col(i));
      }
    }
  }
  Subspace relations = Subspace::span(n2, gens);

  // Representative-independence of the induced bracket: adding a relation to
  // one argument must not move the bracket value out of the relation space.
  for (Index r = 0; r < relations.dim(); ++r) {
    RVector rel = relations.basis().col(r);
    RVector lamRel = lambda * rel;
    for (Index t = 0; t < n2; ++t) {
      RVector shift = wedge2(lamRel, lambda.col(t));
      if (!relations.contains(shift))
        throw WellDefinednessError("uce: bracket is not constant on classes", rel);
    }
  }
  // The wedge-square of alpha must preserve the relation space for the
  // induced twist to descend.
  RMatrix alphaWedge = wedgePower(a, 2);
  for (Index r = 0; r < relations.dim(); ++r) {
    RVector rel = relations.basis().col(r);
    if (!relations.contains(RVector(alphaWedge * rel)))
      throw WellDefinednessError("uce: twist does not preserve the relation space", rel);
  }

  QuotientSpace coords(relations);
  const Index q = coords.dim();
  const RMatrix& proj = coords.projection();
  const RMatrix& sect = coords.section();
  std::vector<RMatrix> ad(static_cast<std::size_t>(q), RMatrix(q, q));
  for (Index x = 0; x < q; ++x) {
    RVector lamX = lambda * sect.col(x);
    for (Index y = 0; y < q; ++y) {
      ad[static_cast<std::size_t>(x)].col(y) = proj * wedge2(lamX, RVector(lambda * sect.col(y)));
    }
  }
  UceData result;
  result.source = alg;
  result.relations = std::move(relations);
  result.algebra = HomLieAlgebra(std::move(ad), proj * alphaWedge * sect);
  result.uL = Morphism{result.algebra, alg, lambda * sect};
  result.coordinates = std::move(coords);

  if (!validate(result.algebra).ok())
    throw std::logic_error("uce: constructed algebra fails the Hom-Lie axioms");
  if (!checkMorphism(result.uL).ok())
    throw std::logic_error("uce: universal morphism fails the morphism axioms");
  if (rank(result.uL.matrix) != n)
    throw std::logic_error("uce: universal morphism is not surjective");
  return result;
}

Extension uceExtension(const UceData& u) {
  return makeExtension(u.uL);
}

Morphism lift(const UceData& u, const Extension& target, bool requireCentral) {
  if (!(target.base == u.source))
    throw std::invalid_argument("lift: extension is over a different base algebra");
  if (requireCentral) {
    if (!isCentral(target)) throw std::invalid_argument("lift: extension is not central");
  } else if (!isAlphaCentral(target)) {
    throw std::invalid_argument("lift: extension is not alpha-central");
  }
  const Index n = u.source.dim();
  auto section = solveMatrix(target.proj.matrix, RMatrix(RMatrix::Identity(n, n)));
  if (!section) throw std::logic_error("lift: projection admits no linear section");

  // phi on wedge coordinates: the tuple (i, j) goes to [s(e_i), s(e_j)].
  WedgeBasis w2(n, 2);
  const Index n2 = w2.size();
  RMatrix phiWedge(target.total.dim(), n2);
  for (Index t = 0; t < n2; ++t) {
    const auto& tuple = w2.tuple(t);
    phiWedge.col(t) = target.total.bracket(section->col(tuple[0]), section->col(tuple[1]));
  }
  // Representative-independence: phi must vanish on the relation space.
  for (Index r = 0; r < u.relations.dim(); ++r) {
    RVector rel = u.relations.basis().col(r);
    if (!isZeroMatrix(RVector(phiWedge * rel)))
      throw WellDefinednessError("lift: map does not vanish on the relation space", rel);
  }
  Morphism phi{u.algebra, target.total, phiWedge * u.coordinates.section()};
  if (!checkMorphism(phi).ok())
    throw std::runtime_error("lift: constructed map fails the morphism axioms");
  if (!sameMatrix(RMatrix(target.proj.matrix * phi.matrix), u.uL.matrix))
    throw std::logic_error("lift: projection of the lift differs from the universal morphism");
  return phi;
}

bool checkSection(const Extension& e, const Morphism& sigma) {
  if (!(sigma.source == e.base) || !(sigma.target == e.total)) return false;
  if (sigma.matrix.rows() != e.total.dim() || sigma.matrix.cols() != e.base.dim()) return false;
  if (!checkMorphism(sigma).ok()) return false;
  return sameMatrix(RMatrix(e.proj.matrix * sigma.matrix),
                    RMatrix(RMatrix::Identity(e.base.dim(), e.base.dim())));
}

CertificateReport universalityCertificate(const Extension& e) {
  if (!isCentral(e)) throw std::invalid_argument("universalityCertificate: extension is not central");
  ChainComplex complex(e.total, HomModule::trivial(e.total.dim()), 3);
  CertificateReport report;
  report.h1 = complex.homology(1).dim;
  report.h2 = complex.homology(2).dim;
  report.totalPerfect = isPerfect(e.total);
  if (report.h1 == 0 && report.h2 == 0) {
    report.verdict = UniversalityVerdict::UniversalCentral;
  } else if (!report.totalPerfect) {
    report.verdict = UniversalityVerdict::NotUniversal;
  } else {
    report.verdict = UniversalityVerdict::Inconclusive;
  }
  return report;
}

}  // namespace homlie
