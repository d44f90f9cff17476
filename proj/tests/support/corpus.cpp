#include "support/corpus.hpp"

#include <stdexcept>

namespace homlie::testsupport {

Index randomIndex(Rng& rng, Index lo, Index hi) {
  std::uniform_int_distribution<Index> dist(lo, hi);
  return dist(rng);
}

Rational randomRational(Rng& rng, int bound, int maxDen) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, maxDen);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

RVector randomVector(Rng& rng, Index n, int bound, int maxDen) {
  RVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = randomRational(rng, bound, maxDen);
  return v;
}

RMatrix randomMatrix(Rng& rng, Index rows, Index cols, int bound, int maxDen) {
  RMatrix m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = randomRational(rng, bound, maxDen);
  return m;
}

RMatrix randomInvertible(Rng& rng, Index n, int bound) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    RMatrix m = randomMatrix(rng, n, n, bound, 1);
    if (rank(m) == n) return m;
  }
  throw std::logic_error("randomInvertible: no invertible sample found");
}

HomLieAlgebra abelianAlgebra(Index dim) {
  std::vector<RMatrix> ad(static_cast<std::size_t>(dim), RMatrix::Zero(dim, dim));
  return HomLieAlgebra(std::move(ad), RMatrix::Identity(dim, dim));
}

HomLieAlgebra abelianWithTwist(RMatrix alpha) {
  const Index dim = alpha.rows();
  std::vector<RMatrix> ad(static_cast<std::size_t>(dim), RMatrix::Zero(dim, dim));
  return HomLieAlgebra(std::move(ad), std::move(alpha));
}

HomLieAlgebra solvable2() {
  std::vector<RMatrix> ad(2, RMatrix::Zero(2, 2));
  ad[0](0, 1) = 1;   // [e1, e2] = e1
  ad[1](0, 0) = -1;
  return HomLieAlgebra(std::move(ad), RMatrix::Identity(2, 2));
}

HomLieAlgebra heisenberg3() {
  std::vector<RMatrix> ad(3, RMatrix::Zero(3, 3));
  ad[0](2, 1) = 1;   // [e1, e2] = e3
  ad[1](2, 0) = -1;
  return HomLieAlgebra(std::move(ad), RMatrix::Identity(3, 3));
}

HomLieAlgebra sl2() {
  std::vector<RMatrix> ad(3, RMatrix::Zero(3, 3));
  ad[0](2, 1) = 1;   // [e, f] = h
  ad[0](0, 2) = -2;  // [e, h] = -2e
  ad[1](2, 0) = -1;
  ad[1](1, 2) = 2;   // [f, h] = 2f
  ad[2](0, 0) = 2;   // [h, e] = 2e
  ad[2](1, 1) = -2;  // [h, f] = -2f
  return HomLieAlgebra(std::move(ad), RMatrix::Identity(3, 3));
}

std::vector<HomLieAlgebra> lieCatalog(Index maxDim) {
  std::vector<HomLieAlgebra> all;
  for (Index n = 1; n <= 4; ++n) all.push_back(abelianAlgebra(n));
  all.push_back(solvable2());
  all.push_back(heisenberg3());
  all.push_back(sl2());
  all.push_back(directProduct(solvable2(), abelianAlgebra(1)).algebra);
  all.push_back(directProduct(heisenberg3(), abelianAlgebra(1)).algebra);
  all.push_back(directProduct(solvable2(), solvable2()).algebra);
  all.push_back(directProduct(sl2(), abelianAlgebra(1)).algebra);

  std::vector<HomLieAlgebra> out;
  for (auto& alg : all)
    if (alg.dim() <= maxDim) out.push_back(std::move(alg));
  return out;
}

std::vector<RMatrix> adTable(const HomLieAlgebra& alg) {
  std::vector<RMatrix> ad;
  ad.reserve(static_cast<std::size_t>(alg.dim()));
  for (Index i = 0; i < alg.dim(); ++i) ad.push_back(alg.ad(i));
  return ad;
}

RMatrix randomSolvable2Endo(Rng& rng) {
  // Endomorphisms of [e1, e2] = e1 split in two families: phi(e1) = 0 with
  // phi(e2) arbitrary, or phi(e1) = a e1 with phi(e2) = c e1 + e2.
  RMatrix phi = RMatrix::Zero(2, 2);
  if (randomIndex(rng, 0, 1) == 0) {
    phi(0, 1) = randomRational(rng, 2, 2);
    phi(1, 1) = randomRational(rng, 2, 2);
  } else {
    phi(0, 0) = randomRational(rng, 2, 2);
    phi(0, 1) = randomRational(rng, 2, 2);
    phi(1, 1) = 1;
  }
  return phi;
}

RMatrix randomHeisenberg3Endo(Rng& rng) {
  // phi(e1), phi(e2) free; phi(e3) = (a1 b2 - a2 b1) e3 follows from
  // [e1, e2] = e3 and the centrality of e3.
  RMatrix phi = RMatrix::Zero(3, 3);
  for (Index r = 0; r < 3; ++r) {
    phi(r, 0) = randomRational(rng, 2, 2);
    phi(r, 1) = randomRational(rng, 2, 2);
  }
  phi(2, 2) = phi(0, 0) * phi(1, 1) - phi(1, 0) * phi(0, 1);
  return phi;
}

RMatrix randomSl2Automorphism(Rng& rng) {
  // Products of exponentials of the nilpotent operators ad_e and ad_f on the
  // basis (e, f, h); each factor is an automorphism over Q.
  auto expE = [](const Rational& t) {
    RMatrix m = RMatrix::Identity(3, 3);
    m(0, 1) = -t * t;
    m(2, 1) = t;
    m(0, 2) = -2 * t;
    return m;
  };
  auto expF = [](const Rational& s) {
    RMatrix m = RMatrix::Identity(3, 3);
    m(1, 0) = -s * s;
    m(2, 0) = -s;
    m(1, 2) = 2 * s;
    return m;
  };
  RMatrix result = RMatrix::Identity(3, 3);
  const Index factors = randomIndex(rng, 1, 3);
  for (Index f = 0; f < factors; ++f) {
    const Rational t = randomRational(rng, 2, 2);
    result = (randomIndex(rng, 0, 1) == 0 ? expE(t) : expF(t)) * result;
  }
  return result;
}

HomLieAlgebra randomZeroTwist(Rng& rng, Index dim, int bound) {
  std::vector<RMatrix> ad(static_cast<std::size_t>(dim), RMatrix::Zero(dim, dim));
  for (Index i = 0; i < dim; ++i)
    for (Index j = i + 1; j < dim; ++j) {
      const RVector c = randomVector(rng, dim, bound, 1);
      ad[static_cast<std::size_t>(i)].col(j) = c;
      ad[static_cast<std::size_t>(j)].col(i) = -c;
    }
  return HomLieAlgebra(std::move(ad), RMatrix::Zero(dim, dim));
}

HomLieAlgebra randomLie(Rng& rng, Index maxDim) {
  std::vector<HomLieAlgebra> catalog = lieCatalog(maxDim);
  const auto& base = catalog[static_cast<std::size_t>(
      randomIndex(rng, 0, static_cast<Index>(catalog.size()) - 1))];
  return changeBasis(base, randomInvertible(rng, base.dim()));
}

HomLieAlgebra randomMultiplicative(Rng& rng, Index maxDim) {
  Index family = randomIndex(rng, 0, 3);
  if (family == 2 && maxDim < 2) family = 0;
  switch (family) {
    case 0:
      return randomZeroTwist(rng, randomIndex(rng, 1, maxDim));
    case 1:
      return randomLie(rng, maxDim);
    case 2: {
      HomLieAlgebra twisted;
      const Index pick = maxDim >= 3 ? randomIndex(rng, 0, 2) : Index{0};
      if (pick == 0)
        twisted = yauTwist(adTable(solvable2()), randomSolvable2Endo(rng));
      else if (pick == 1)
        twisted = yauTwist(adTable(heisenberg3()), randomHeisenberg3Endo(rng));
      else
        twisted = yauTwist(adTable(sl2()), randomSl2Automorphism(rng));
      if (randomIndex(rng, 0, 1) == 0)
        twisted = changeBasis(twisted, randomInvertible(rng, twisted.dim()));
      return twisted;
    }
    default: {
      const Index dim = randomIndex(rng, 1, maxDim);
      return abelianWithTwist(randomMatrix(rng, dim, dim, 2, 2));
    }
  }
}

HomModule randomModule(Rng& rng, const HomLieAlgebra& alg, Index maxModuleDim) {
  Index choice = randomIndex(rng, 0, 3);
  if (choice == 2 && !isZeroMatrix(alg.alpha())) choice = 1;
  if (choice == 3 && alg.dim() > maxModuleDim) choice = 0;
  const Index m = randomIndex(rng, 1, maxModuleDim);
  switch (choice) {
    case 0:
      return HomModule::trivial(alg.dim(), m);
    case 1:
      return HomModule::trivialWithTwist(alg.dim(), randomMatrix(rng, m, m, 2, 2));
    case 2: {
      // With both twists zero, every linear action satisfies the axioms.
      std::vector<RMatrix> rho;
      for (Index i = 0; i < alg.dim(); ++i) rho.push_back(randomMatrix(rng, m, m, 2, 1));
      return HomModule(alg.dim(), RMatrix::Zero(m, m), std::move(rho));
    }
    default:
      return HomModule::adjoint(alg);
  }
}

HomLieAlgebra randomPerfect(Rng& rng, Index dim) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    HomLieAlgebra alg = randomZeroTwist(rng, dim, 1);
    if (isPerfect(alg)) return alg;
  }
  throw std::logic_error("randomPerfect: no perfect sample found");
}

std::vector<Extension> centralExtensionsOf(Rng& rng, const HomLieAlgebra& alg,
                                           int quotients) {
  std::vector<Extension> out;
  const UceData u = uce(alg);
  out.push_back(uceExtension(u));

  const Subspace z = kernel(u.uL.matrix);
  for (int q = 0; q < quotients && z.dim() > 0; ++q) {
    const Index take = randomIndex(rng, 1, z.dim());
    RMatrix combo = z.basis() * randomMatrix(rng, z.dim(), take, 2, 1);
    Subspace s = Subspace::span(u.algebra.dim(), combo);
    // Close under the twist; the closure stays inside the central kernel.
    for (;;) {
      Subspace next = sum(s, image(u.algebra.alpha() * s.basis()));
      if (next == s) break;
      s = std::move(next);
    }
    const QuotientAlgebra qa = quotientAlgebra(u.algebra, s);
    RMatrix proj = u.uL.matrix * qa.coordinates.section();
    out.push_back(makeExtension(Morphism{qa.algebra, alg, std::move(proj)}));
  }

  const ProductAlgebra p = directProduct(alg, abelianWithTwist(randomMatrix(rng, 1, 1, 2, 2)));
  out.push_back(makeExtension(p.projLeft));
  return out;
}

RMatrix liftWithSection(const UceData& u, const Extension& target,
                        const Eigen::Ref<const RMatrix>& section) {
  const Index n = u.source.dim();
  const WedgeBasis w2(n, 2);
  RMatrix phiWedge(target.total.dim(), w2.size());
  for (Index c = 0; c < w2.size(); ++c) {
    const auto& t = w2.tuple(c);
    phiWedge.col(c) =
        target.total.bracket(section.col(t[0]), section.col(t[1]));
  }
  return phiWedge * u.coordinates.section();
}

}  // namespace homlie::testsupport
