#include "homlie/algebra.hpp"

#include <stdexcept>
#include <utility>

namespace homlie {

HomLieAlgebra::HomLieAlgebra(std::vector<RMatrix> ad, RMatrix alpha,
                             std::vector<std::string> labels)
    : ad_(std::move(ad)), alpha_(std::move(alpha)), labels_(std::move(labels)) {
  const Index n = alpha_.rows();
  if (alpha_.cols() != n) throw std::invalid_argument("HomLieAlgebra: twist not square");
  if (static_cast<Index>(ad_.size()) != n)
    throw std::invalid_argument("HomLieAlgebra: need one ad matrix per basis vector");
  for (const RMatrix& a : ad_) {
    if (a.rows() != n || a.cols() != n)
      throw std::invalid_argument("HomLieAlgebra: ad matrix shape mismatch");
  }
  if (!labels_.empty() && static_cast<Index>(labels_.size()) != n)
    throw std::invalid_argument("HomLieAlgebra: need one label per basis vector");
}

RMatrix HomLieAlgebra::adOf(const Eigen::Ref<const RVector>& x) const {
  const Index n = dim();
  if (x.rows() != n) throw std::invalid_argument("adOf: dimension mismatch");
  RMatrix result = RMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    if (x(i) != 0) result += x(i) * ad_[static_cast<std::size_t>(i)];
  }
  return result;
}

RVector HomLieAlgebra::bracket(const Eigen::Ref<const RVector>& x,
                               const Eigen::Ref<const RVector>& y) const {
  const Index n = dim();
  if (x.rows() != n || y.rows() != n) throw std::invalid_argument("bracket: dimension mismatch");
  RVector result = RVector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    if (x(i) != 0) result += x(i) * (ad_[static_cast<std::size_t>(i)] * y);
  }
  return result;
}

bool HomLieAlgebra::operator==(const HomLieAlgebra& other) const {
  if (dim() != other.dim()) return false;
  if (!sameMatrix(alpha_, other.alpha_)) return false;
  for (std::size_t i = 0; i < ad_.size(); ++i) {
    if (!sameMatrix(ad_[i], other.ad_[i])) return false;
  }
  return true;
}

ValidationReport validate(const HomLieAlgebra& alg) {
  const Index n = alg.dim();
  const RMatrix& a = alg.alpha();
  ValidationReport report;

  // Skew-symmetry: c_{ij}^k + c_{ji}^k = 0 (i = j included, which over Q is
  // equivalent to c_{ii}^k = 0).
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        Rational r = alg.structureConstant(i, j, k) + alg.structureConstant(j, i, k);
        if (r != 0) report.failures.push_back({Check::SkewSymmetry, {i + 1, j + 1, k + 1}, r});
      }
    }
  }

  // Hom-Jacobi as the quadruple-indexed coordinate identity: for all i, j, k, l,
  //   sum_p a_{pi} sum_q c_{jk}^q c_{pq}^l
  // + sum_p a_{pk} sum_q c_{ij}^q c_{pq}^l
  // + sum_p a_{pj} sum_q c_{ki}^q c_{pq}^l = 0.
  // The inner double sums over (p, q) are assembled as matrix-vector
  // products: component l of adOf(a e_u) * c_{st}.
  std::vector<RMatrix> adAlpha;
  adAlpha.reserve(static_cast<std::size_t>(n));
  for (Index u = 0; u < n; ++u) adAlpha.push_back(alg.adOf(a.col(u)));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        RVector r = adAlpha[static_cast<std::size_t>(i)] * alg.bracketBasis(j, k) +
                    adAlpha[static_cast<std::size_t>(k)] * alg.bracketBasis(i, j) +
                    adAlpha[static_cast<std::size_t>(j)] * alg.bracketBasis(k, i);
        for (Index l = 0; l < n; ++l) {
          if (r(l) != 0)
            report.failures.push_back({Check::HomJacobi, {i + 1, j + 1, k + 1, l + 1}, r(l)});
        }
      }
    }
  }

  // Multiplicativity: alpha([e_i, e_j]) = [alpha(e_i), alpha(e_j)].
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      RVector defect = a * alg.bracketBasis(i, j) - alg.bracket(a.col(i), a.col(j));
      for (Index l = 0; l < n; ++l) {
        if (defect(l) != 0)
          report.failures.push_back({Check::Multiplicativity, {i + 1, j + 1, l + 1}, defect(l)});
      }
    }
  }

  return report;
}

HomLieAlgebra yauTwist(const std::vector<RMatrix>& lieAd,
                       const Eigen::Ref<const RMatrix>& endo) {
  HomLieAlgebra lie(lieAd, RMatrix::Identity(endo.rows(), endo.rows()));
  if (!validate(lie).ok())
    throw std::invalid_argument("yauTwist: input brackets are not a Lie algebra");
  const Index n = lie.dim();
  if (endo.rows() != n || endo.cols() != n)
    throw std::invalid_argument("yauTwist: endomorphism shape mismatch");
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      RVector defect = endo * lie.bracketBasis(i, j) - lie.bracket(endo.col(i), endo.col(j));
      if (!isZeroMatrix(defect))
        throw std::invalid_argument("yauTwist: map is not an algebra endomorphism");
    }
  }
  std::vector<RMatrix> twisted;
  twisted.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) twisted.push_back(endo * lie.ad(i));
  return HomLieAlgebra(std::move(twisted), endo);
}

HomLieAlgebra fromHomAssociative(const std::vector<RMatrix>& mul,
                                 const Eigen::Ref<const RMatrix>& alpha) {
  const Index n = alpha.rows();
  if (alpha.cols() != n) throw std::invalid_argument("fromHomAssociative: twist not square");
  if (static_cast<Index>(mul.size()) != n)
    throw std::invalid_argument("fromHomAssociative: need one multiplication matrix per basis vector");
  for (const RMatrix& m : mul) {
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("fromHomAssociative: multiplication matrix shape mismatch");
  }
  auto mulOf = [&](const RVector& v) {
    RMatrix result = RMatrix::Zero(n, n);
    for (Index p = 0; p < n; ++p) {
      if (v(p) != 0) result += v(p) * mul[static_cast<std::size_t>(p)];
    }
    return result;
  };
  // Hom-associativity: mu(mu(x, y), alpha(z)) = mu(alpha(x), mu(y, z)).
  for (Index i = 0; i < n; ++i) {
    RMatrix leftAlphaI = mulOf(alpha.col(i));
    for (Index j = 0; j < n; ++j) {
      RMatrix leftIJ = mulOf(mul[static_cast<std::size_t>(i)].col(j));
      for (Index k = 0; k < n; ++k) {
        RVector defect = leftIJ * alpha.col(k) - leftAlphaI * mul[static_cast<std::size_t>(j)].col(k);
        if (!isZeroMatrix(defect))
          throw std::invalid_argument("fromHomAssociative: multiplication is not Hom-associative");
      }
    }
  }
  // Multiplicativity of the twist: alpha(mu(x, y)) = mu(alpha(x), alpha(y)).
  for (Index i = 0; i < n; ++i) {
    RMatrix leftAlphaI = mulOf(alpha.col(i));
    for (Index j = 0; j < n; ++j) {
      RVector defect = alpha * mul[static_cast<std::size_t>(i)].col(j) - leftAlphaI * alpha.col(j);
      if (!isZeroMatrix(defect))
        throw std::invalid_argument("fromHomAssociative: twist is not multiplicative");
    }
  }
  std::vector<RMatrix> ad;
  ad.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    RMatrix m(n, n);
    for (Index j = 0; j < n; ++j) {
      m.col(j) = mul[static_cast<std::size_t>(i)].col(j) - mul[static_cast<std::size_t>(j)].col(i);
    }
    ad.push_back(std::move(m));
  }
  return HomLieAlgebra(std::move(ad), alpha);
}

Subspace center(const HomLieAlgebra& alg) {
  const Index n = alg.dim();
  // Stack the conditions [x, e_j] = 0 for all j: row (j*n + k), column i
  // holds c_{ij}^k.
  RMatrix conditions(n * n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      conditions.block(j * n, i, n, 1) = alg.bracketBasis(i, j);
    }
  }
  return kernel(conditions);
}

bool isSubalgebra(const HomLieAlgebra& alg, const Subspace& s) {
  if (s.ambientDim() != alg.dim()) throw std::invalid_argument("isSubalgebra: dimension mismatch");
  for (Index a = 0; a < s.dim(); ++a) {
    if (!s.contains(RVector(alg.alpha() * s.basis().col(a)))) return false;
    for (Index b = a + 1; b < s.dim(); ++b) {
      if (!s.contains(alg.bracket(s.basis().col(a), s.basis().col(b)))) return false;
    }
  }
  return true;
}

bool isHomIdeal(const HomLieAlgebra& alg, const Subspace& s) {
  if (s.ambientDim() != alg.dim()) throw std::invalid_argument("isHomIdeal: dimension mismatch");
  const Index n = alg.dim();
  for (Index a = 0; a < s.dim(); ++a) {
    if (!s.contains(RVector(alg.alpha() * s.basis().col(a)))) return false;
    for (Index j = 0; j < n; ++j) {
      RVector ej = RVector::Zero(n);
      ej(j) = 1;
      if (!s.contains(alg.bracket(s.basis().col(a), ej))) return false;
    }
  }
  return true;
}

Subspace idealClosure(const HomLieAlgebra& alg, const Subspace& seed) {
  if (seed.ambientDim() != alg.dim())
    throw std::invalid_argument("idealClosure: dimension mismatch");
  const Index n = alg.dim();
  Subspace s = seed;
  for (;;) {
    const Index before = s.dim();
    RMatrix gens(n, s.dim() * (n + 1));
    Index g = 0;
    for (Index a = 0; a < s.dim(); ++a) {
      gens.col(g++) = alg.alpha() * s.basis().col(a);
      for (Index j = 0; j < n; ++j) {
        RVector ej = RVector::Zero(n);
        ej(j) = 1;
        gens.col(g++) = alg.bracket(s.basis().col(a), ej);
      }
    }
    s = sum(s, Subspace::span(n, gens));
    if (s.dim() == before) return s;
  }
}

Subspace commutator(const HomLieAlgebra& alg, const Subspace& h, const Subspace& k) {
  if (!isHomIdeal(alg, h) || !isHomIdeal(alg, k))
    throw std::invalid_argument("commutator: inputs must be Hom-ideals");
  const Index n = alg.dim();
  RMatrix gens(n, h.dim() * k.dim());
  Index g = 0;
  for (Index a = 0; a < h.dim(); ++a) {
    for (Index b = 0; b < k.dim(); ++b) {
      gens.col(g++) = alg.bracket(h.basis().col(a), k.basis().col(b));
    }
  }
  Subspace s = Subspace::span(n, gens);
  for (;;) {
    const Index before = s.dim();
    s = sum(s, Subspace::span(n, RMatrix(alg.alpha() * s.basis())));
    if (s.dim() == before) return s;
  }
}

bool isPerfect(const HomLieAlgebra& alg) {
  const Index n = alg.dim();
  RMatrix gens(n, n * n);
  Index g = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      gens.col(g++) = alg.bracketBasis(i, j);
    }
  }
  return rank(gens) == n;
}

ValidationReport checkMorphism(const Morphism& f) {
  const Index ns = f.source.dim();
  const Index nt = f.target.dim();
  if (f.matrix.rows() != nt || f.matrix.cols() != ns)
    throw std::invalid_argument("checkMorphism: matrix shape mismatch");
  ValidationReport report;
  for (Index i = 0; i < ns; ++i) {
    for (Index j = 0; j < ns; ++j) {
      RVector defect =
          f.matrix * f.source.bracketBasis(i, j) - f.target.bracket(f.matrix.col(i), f.matrix.col(j));
      for (Index k = 0; k < nt; ++k) {
        if (defect(k) != 0)
          report.failures.push_back({Check::MorphismBracket, {i + 1, j + 1, k + 1}, defect(k)});
      }
    }
  }
  RMatrix twistDefect = f.matrix * f.source.alpha() - f.target.alpha() * f.matrix;
  for (Index r = 0; r < nt; ++r) {
    for (Index c = 0; c < ns; ++c) {
      if (twistDefect(r, c) != 0)
        report.failures.push_back({Check::MorphismTwist, {r + 1, c + 1}, twistDefect(r, c)});
    }
  }
  return report;
}

bool isIsomorphism(const Morphism& f) {
  if (f.source.dim() != f.target.dim()) return false;
  if (!checkMorphism(f).ok()) return false;
  return rank(f.matrix) == f.source.dim();
}

Morphism composeMorphisms(const Morphism& g, const Morphism& f) {
  if (!(f.target == g.source))
    throw std::invalid_argument("composeMorphisms: middle algebras disagree");
  return {f.source, g.target, g.matrix * f.matrix};
}

HomLieAlgebra changeBasis(const HomLieAlgebra& alg, const Eigen::Ref<const RMatrix>& p) {
  const Index n = alg.dim();
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("changeBasis: shape mismatch");
  auto pInv = inverse(p);
  if (!pInv) throw std::invalid_argument("changeBasis: matrix not invertible");
  std::vector<RMatrix> ad;
  ad.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    ad.push_back(*pInv * alg.adOf(p.col(i)) * p);
  }
  return HomLieAlgebra(std::move(ad), *pInv * alg.alpha() * p);
}

QuotientAlgebra quotientAlgebra(const HomLieAlgebra& alg, const Subspace& ideal) {
  if (!isHomIdeal(alg, ideal))
    throw std::invalid_argument("quotientAlgebra: subspace is not a Hom-ideal");
  QuotientSpace coords(ideal);
  const Index q = coords.dim();
  const RMatrix& proj = coords.projection();
  const RMatrix& sect = coords.section();
  std::vector<RMatrix> ad;
  ad.reserve(static_cast<std::size_t>(q));
  for (Index a = 0; a < q; ++a) {
    ad.push_back(proj * alg.adOf(sect.col(a)) * sect);
  }
  HomLieAlgebra quotient(std::move(ad), proj * alg.alpha() * sect);
  Morphism projection{alg, quotient, proj};
  return {std::move(quotient), std::move(projection), std::move(coords)};
}

QuotientAlgebra multiplicativeQuotient(const HomLieAlgebra& alg) {
  ValidationReport report = validate(alg);
  if (!report.passed(Check::SkewSymmetry) || !report.passed(Check::HomJacobi))
    throw std::invalid_argument(
        "multiplicativeQuotient: input must satisfy skew-symmetry and Hom-Jacobi");
  const Index n = alg.dim();
  const RMatrix& a = alg.alpha();
  RMatrix defects(n, n * (n - 1) / 2 > 0 ? n * (n - 1) / 2 : 0);
  Index g = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      defects.col(g++) = a * alg.bracketBasis(i, j) - alg.bracket(a.col(i), a.col(j));
    }
  }
  Subspace ideal = idealClosure(alg, Subspace::span(n, defects));
  return quotientAlgebra(alg, ideal);
}

ProductAlgebra directProduct(const HomLieAlgebra& l1, const HomLieAlgebra& l2) {
  const Index n1 = l1.dim();
  const Index n2 = l2.dim();
  const Index n = n1 + n2;
  std::vector<RMatrix> ad;
  ad.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n1; ++i) {
    RMatrix m = RMatrix::Zero(n, n);
    m.topLeftCorner(n1, n1) = l1.ad(i);
    ad.push_back(std::move(m));
  }
  for (Index i = 0; i < n2; ++i) {
    RMatrix m = RMatrix::Zero(n, n);
    m.bottomRightCorner(n2, n2) = l2.ad(i);
    ad.push_back(std::move(m));
  }
  RMatrix alpha = RMatrix::Zero(n, n);
  alpha.topLeftCorner(n1, n1) = l1.alpha();
  alpha.bottomRightCorner(n2, n2) = l2.alpha();
  HomLieAlgebra product(std::move(ad), std::move(alpha));
  RMatrix p1 = RMatrix::Zero(n1, n);
  p1.leftCols(n1) = RMatrix::Identity(n1, n1);
  RMatrix p2 = RMatrix::Zero(n2, n);
  p2.rightCols(n2) = RMatrix::Identity(n2, n2);
  Morphism left{product, l1, std::move(p1)};
  Morphism right{product, l2, std::move(p2)};
  return {std::move(product), std::move(left), std::move(right)};
}

ValidationReport checkAction(const HomLieAlgebra& alg, const ActionData& action) {
  const Index n = alg.dim();
  const Index m = action.moduleDim;
  if (action.alphaM.rows() != m || action.alphaM.cols() != m)
    throw std::invalid_argument("checkAction: module twist shape mismatch");
  if (static_cast<Index>(action.rho.size()) != n)
    throw std::invalid_argument("checkAction: need one action matrix per algebra basis vector");
  for (const RMatrix& r : action.rho) {
    if (r.rows() != m || r.cols() != m)
      throw std::invalid_argument("checkAction: action matrix shape mismatch");
  }
  auto rhoOf = [&](const RVector& v) {
    RMatrix result = RMatrix::Zero(m, m);
    for (Index p = 0; p < n; ++p) {
      if (v(p) != 0) result += v(p) * action.rho[static_cast<std::size_t>(p)];
    }
    return result;
  };
  ValidationReport report;
  const RMatrix& a = alg.alpha();
  // Axiom a: rho([x, y], alphaM(m)) = rho(alpha x, rho(y, m)) - rho(alpha y, rho(x, m)).
  for (Index i = 0; i < n; ++i) {
    RMatrix rai = rhoOf(a.col(i));
    for (Index j = 0; j < n; ++j) {
      RMatrix defect = rhoOf(alg.bracketBasis(i, j)) * action.alphaM - rai * action.rho[static_cast<std::size_t>(j)] +
                       rhoOf(a.col(j)) * action.rho[static_cast<std::size_t>(i)];
      for (Index c = 0; c < m; ++c) {
        for (Index r = 0; r < m; ++r) {
          if (defect(r, c) != 0)
            report.failures.push_back(
                {Check::ActionBracket, {i + 1, j + 1, c + 1, r + 1}, defect(r, c)});
        }
      }
    }
  }
  // Axiom b relates the action to the module's own bracket; coefficient
  // modules here are abelian, so every term vanishes identically.
  // Axiom c: rho(alpha x, alphaM(m)) = alphaM(rho(x, m)).
  for (Index i = 0; i < n; ++i) {
    RMatrix defect = rhoOf(a.col(i)) * action.alphaM - action.alphaM * action.rho[static_cast<std::size_t>(i)];
    for (Index c = 0; c < m; ++c) {
      for (Index r = 0; r < m; ++r) {
        if (defect(r, c) != 0)
          report.failures.push_back({Check::ActionTwist, {i + 1, c + 1, r + 1}, defect(r, c)});
      }
    }
  }
  return report;
}

TwoDimClassification classify2dim(const HomLieAlgebra& alg) {
  if (alg.dim() != 2) throw std::invalid_argument("classify2dim: algebra must be 2-dimensional");
  if (!validate(alg).ok())
    throw std::invalid_argument("classify2dim: algebra fails the Hom-Lie axioms");
  const RVector c = alg.bracketBasis(0, 1);
  if (c(0) == 0 && c(1) == 0) {
    return {TwoDimKind::Abelian, {}, alg, RMatrix::Identity(2, 2)};
  }
  RMatrix p(2, 2);
  if (c(0) != 0) {
    // New basis: a1' = [a1, a2], a2' = a2 / c1.
    p << c(0), 0, c(1), Rational(1) / c(0);
  } else {
    // c1 = 0, c2 != 0.  New basis: a1' = [a1, a2] = c2 a2, a2' = -a1 / c2.
    p << 0, Rational(-1) / c(1), c(1), 0;
  }
  HomLieAlgebra canonical = changeBasis(alg, p);
  if (canonical.bracketBasis(0, 1)(0) != 1 || canonical.bracketBasis(0, 1)(1) != 0)
    throw std::logic_error("classify2dim: normalization failed");
  const RMatrix& t = canonical.alpha();
  // Multiplicativity of the normalized algebra forces alpha(a1') to be a
  // multiple of a1' and, when that multiple is nonzero, t22 = 1.
  if (t(1, 0) != 0) throw std::logic_error("classify2dim: twist not triangular after normalization");
  if (t(0, 0) == 0) {
    return {TwoDimKind::NonAbelianSingular, {t(0, 1), t(1, 1)}, std::move(canonical), std::move(p)};
  }
  if (t(1, 1) != 1) throw std::logic_error("classify2dim: invertible class with t22 != 1");
  return {TwoDimKind::NonAbelianInvertible, {t(0, 0), t(0, 1)}, std::move(canonical), std::move(p)};
}

}  // namespace homlie
