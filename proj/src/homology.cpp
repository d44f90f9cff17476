#include "homlie/homology.hpp"

#include <stdexcept>
#include <utility>

namespace homlie {

HomModule::HomModule(Index algebraDim, RMatrix alphaM, std::vector<RMatrix> rho)
    : algebraDim_(algebraDim) {
  action_.moduleDim = alphaM.rows();
  action_.alphaM = std::move(alphaM);
  action_.rho = std::move(rho);
  const Index m = action_.moduleDim;
  if (action_.alphaM.cols() != m) throw std::invalid_argument("HomModule: twist not square");
  if (static_cast<Index>(action_.rho.size()) != algebraDim_)
    throw std::invalid_argument("HomModule: need one action matrix per algebra basis vector");
  for (const RMatrix& r : action_.rho) {
    if (r.rows() != m || r.cols() != m)
      throw std::invalid_argument("HomModule: action matrix shape mismatch");
  }
}

HomModule HomModule::trivial(Index algebraDim, Index moduleDim) {
  return trivialWithTwist(algebraDim, RMatrix::Identity(moduleDim, moduleDim));
}

HomModule HomModule::trivialWithTwist(Index algebraDim, RMatrix alphaM) {
  const Index m = alphaM.rows();
  std::vector<RMatrix> rho(static_cast<std::size_t>(algebraDim), RMatrix::Zero(m, m));
  return HomModule(algebraDim, std::move(alphaM), std::move(rho));
}

HomModule HomModule::adjoint(const HomLieAlgebra& alg) {
  std::vector<RMatrix> rho;
  rho.reserve(static_cast<std::size_t>(alg.dim()));
  for (Index i = 0; i < alg.dim(); ++i) rho.push_back(alg.ad(i));
  return HomModule(alg.dim(), alg.alpha(), std::move(rho));
}

RMatrix HomModule::rhoOf(const Eigen::Ref<const RVector>& x) const {
  if (x.rows() != algebraDim_) throw std::invalid_argument("rhoOf: dimension mismatch");
  RMatrix result = RMatrix::Zero(dim(), dim());
  for (Index i = 0; i < algebraDim_; ++i) {
    if (x(i) != 0) result += x(i) * action_.rho[static_cast<std::size_t>(i)];
  }
  return result;
}

WedgeBasis::WedgeBasis(Index ambientDim, Index degree) : n_(ambientDim), k_(degree) {
  if (n_ < 0 || k_ < 0) throw std::invalid_argument("WedgeBasis: negative parameter");
  if (k_ > n_) return;  // zero exterior power: no tuples
  std::vector<Index> current(static_cast<std::size_t>(k_));
  // Enumerate strictly increasing tuples in lexicographic order.
  for (Index i = 0; i < k_; ++i) current[static_cast<std::size_t>(i)] = i;
  for (;;) {
    lookup_.emplace(current, static_cast<Index>(tuples_.size()));
    tuples_.push_back(current);
    Index pos = k_ - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n_ - k_ + pos) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (Index i = pos + 1; i < k_; ++i)
      current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)] + 1;
  }
}

Index WedgeBasis::indexOf(const std::vector<Index>& tuple) const {
  auto it = lookup_.find(tuple);
  if (it == lookup_.end()) throw std::invalid_argument("WedgeBasis::indexOf: tuple not in basis");
  return it->second;
}

RVector wedgeExpand(const WedgeBasis& basis, const Eigen::Ref<const RMatrix>& vectors) {
  if (vectors.rows() != basis.ambientDim() || vectors.cols() != basis.degree())
    throw std::invalid_argument("wedgeExpand: shape mismatch");
  const Index k = basis.degree();
  RVector coords = RVector::Zero(basis.size());
  RMatrix minor(k, k);
  for (Index t = 0; t < basis.size(); ++t) {
    const auto& tuple = basis.tuple(t);
    for (Index r = 0; r < k; ++r) minor.row(r) = vectors.row(tuple[static_cast<std::size_t>(r)]);
    coords(t) = determinant(minor);
  }
  return coords;
}

RVector wedgeExpand(Index ambientDim, const Eigen::Ref<const RMatrix>& vectors) {
  return wedgeExpand(WedgeBasis(ambientDim, vectors.cols()), vectors);
}

RMatrix wedgePower(const Eigen::Ref<const RMatrix>& a, Index k) {
  if (a.rows() != a.cols()) throw std::invalid_argument("wedgePower: matrix not square");
  WedgeBasis basis(a.rows(), k);
  RMatrix result(basis.size(), basis.size());
  RMatrix minor(k, k);
  for (Index t = 0; t < basis.size(); ++t) {
    const auto& colTuple = basis.tuple(t);
    for (Index s = 0; s < basis.size(); ++s) {
      const auto& rowTuple = basis.tuple(s);
      for (Index r = 0; r < k; ++r) {
        for (Index c = 0; c < k; ++c) {
          minor(r, c) = a(rowTuple[static_cast<std::size_t>(r)], colTuple[static_cast<std::size_t>(c)]);
        }
      }
      result(s, t) = determinant(minor);
    }
  }
  return result;
}

ChainComplex::ChainComplex(HomLieAlgebra alg, HomModule module, Index maxDegree)
    : alg_(std::move(alg)), module_(std::move(module)) {
  if (module_.algebraDim() != alg_.dim())
    throw std::invalid_argument("ChainComplex: module is over a different algebra dimension");
  maxDegree_ = maxDegree < 0 ? alg_.dim() : maxDegree;
  for (Index n = 0; n <= maxDegree_ + 1; ++n) wedges_.emplace_back(alg_.dim(), n);
  boundaries_.resize(static_cast<std::size_t>(maxDegree_) + 2);
  built_.resize(static_cast<std::size_t>(maxDegree_) + 2, false);
  for (Index n = 1; n <= maxDegree_; ++n) boundary(n);
}

Index ChainComplex::chainDim(Index n) const {
  if (n < 0) return 0;
  return module_.dim() * binomial(alg_.dim(), n);
}

const WedgeBasis& ChainComplex::wedge(Index n) const {
  if (n < 0 || n >= static_cast<Index>(wedges_.size()))
    throw std::out_of_range("ChainComplex::wedge: degree out of range");
  return wedges_[static_cast<std::size_t>(n)];
}

const RMatrix& ChainComplex::boundary(Index n) const {
  if (n < 1) throw std::out_of_range("ChainComplex::boundary: degree must be positive");
  if (n > maxDegree_ + 1 || (n == maxDegree_ + 1 && chainDim(n) != 0))
    throw std::out_of_range("ChainComplex::boundary: degree exceeds max degree");
  auto& slot = boundaries_[static_cast<std::size_t>(n)];
  if (!built_[static_cast<std::size_t>(n)]) {
    slot = buildBoundary(n);
    built_[static_cast<std::size_t>(n)] = true;
  }
  return slot;
}

RMatrix ChainComplex::buildBoundary(Index n) const {
  const Index m = module_.dim();
  const WedgeBasis& source = wedge(n);
  const WedgeBasis& targetBasis = wedge(n - 1);
  const RMatrix& a = alg_.alpha();
  RMatrix d = RMatrix::Zero(m * targetBasis.size(), m * source.size());
  RMatrix alphaCols(alg_.dim(), n);
  RMatrix dropped(alg_.dim(), n - 1);
  RMatrix pairDropped(alg_.dim(), n - 1);
  for (Index t = 0; t < source.size(); ++t) {
    const auto& tuple = source.tuple(t);
    for (Index i = 0; i < n; ++i) alphaCols.col(i) = a.col(tuple[static_cast<std::size_t>(i)]);
    // First sum: (-1)^{i+1} (m . x_i) ⊗ alpha(x_1) ∧ .. omit i .. ∧ alpha(x_n),
    // with the right action m . x = -rho(x, m).
    for (Index i = 0; i < n; ++i) {
      Index c = 0;
      for (Index j = 0; j < n; ++j) {
        if (j != i) dropped.col(c++) = alphaCols.col(j);
      }
      RVector w = wedgeExpand(targetBasis, dropped);
      const RMatrix& action = module_.rho(tuple[static_cast<std::size_t>(i)]);
      const int sign = (i % 2 == 0) ? 1 : -1;  // (-1)^{i+1} for 1-based i
      for (Index col = 0; col < m; ++col) {
        RVector mdot = -action.col(col);
        for (Index s = 0; s < targetBasis.size(); ++s) {
          if (w(s) == 0) continue;
          for (Index row = 0; row < m; ++row) {
            if (mdot(row) == 0) continue;
            d(row * targetBasis.size() + s, col * source.size() + t) += sign * w(s) * mdot(row);
          }
        }
      }
    }
    // Second sum: (-1)^{i+j} alphaM(m) ⊗ [x_i, x_j] ∧ alpha(x_1) ∧ .. omit i, j ..
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        pairDropped.col(0) =
            alg_.bracketBasis(tuple[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>(j)]);
        Index c = 1;
        for (Index p = 0; p < n; ++p) {
          if (p != i && p != j) pairDropped.col(c++) = alphaCols.col(p);
        }
        RVector w = wedgeExpand(targetBasis, pairDropped);
        const int sign = ((i + j) % 2 == 0) ? 1 : -1;  // (-1)^{i+j} for 1-based indices
        for (Index col = 0; col < m; ++col) {
          for (Index s = 0; s < targetBasis.size(); ++s) {
            if (w(s) == 0) continue;
            for (Index row = 0; row < m; ++row) {
              const Rational& am = module_.alphaM()(row, col);
              if (am == 0) continue;
              d(row * targetBasis.size() + s, col * source.size() + t) += sign * w(s) * am;
            }
          }
        }
      }
    }
  }
  return d;
}

RMatrix ChainComplex::theta(Index n, const Eigen::Ref<const RVector>& y) const {
  if (y.rows() != alg_.dim()) throw std::invalid_argument("theta: dimension mismatch");
  if (n < 0) throw std::out_of_range("theta: negative degree");
  const Index m = module_.dim();
  const WedgeBasis& basis = wedge(n);
  const RMatrix& a = alg_.alpha();
  const RMatrix actionY = module_.rhoOf(y);
  RMatrix result = RMatrix::Zero(m * basis.size(), m * basis.size());
  RMatrix alphaCols(alg_.dim(), n);
  RMatrix replaced(alg_.dim(), n);
  for (Index t = 0; t < basis.size(); ++t) {
    const auto& tuple = basis.tuple(t);
    for (Index i = 0; i < n; ++i) alphaCols.col(i) = a.col(tuple[static_cast<std::size_t>(i)]);
    // Term 1: -(m . y) ⊗ alpha(x_1) ∧ ... ∧ alpha(x_n); with m . y = -rho(y, m)
    // this contributes +rho(y, m).
    {
      RVector w = wedgeExpand(basis, alphaCols);
      for (Index col = 0; col < m; ++col) {
        for (Index s = 0; s < basis.size(); ++s) {
          if (w(s) == 0) continue;
          for (Index row = 0; row < m; ++row) {
            if (actionY(row, col) == 0) continue;
            result(row * basis.size() + s, col * basis.size() + t) += w(s) * actionY(row, col);
          }
        }
      }
    }
    // Term 2: sum_i (-1)^i alphaM(m) ⊗ [x_i, y] ∧ alpha(x_1) ∧ .. omit i ..
    for (Index i = 0; i < n; ++i) {
      replaced.col(0) = alg_.ad(tuple[static_cast<std::size_t>(i)]) * y;
      Index c = 1;
      for (Index p = 0; p < n; ++p) {
        if (p != i) replaced.col(c++) = alphaCols.col(p);
      }
      RVector w = wedgeExpand(basis, replaced);
      const int sign = (i % 2 == 0) ? -1 : 1;  // (-1)^i for 1-based i
      for (Index col = 0; col < m; ++col) {
        for (Index s = 0; s < basis.size(); ++s) {
          if (w(s) == 0) continue;
          for (Index row = 0; row < m; ++row) {
            const Rational& am = module_.alphaM()(row, col);
            if (am == 0) continue;
            result(row * basis.size() + s, col * basis.size() + t) += sign * w(s) * am;
          }
        }
      }
    }
  }
  return result;
}

RMatrix ChainComplex::iota(Index n, const Eigen::Ref<const RVector>& y) const {
  if (y.rows() != alg_.dim()) throw std::invalid_argument("iota: dimension mismatch");
  if (n < 0) throw std::out_of_range("iota: negative degree");
  const Index m = module_.dim();
  const WedgeBasis& source = wedge(n);
  const WedgeBasis& targetBasis = wedge(n + 1);
  RMatrix result = RMatrix::Zero(m * targetBasis.size(), m * source.size());
  const int sign = (n % 2 == 0) ? 1 : -1;  // (-1)^n
  RMatrix appended(alg_.dim(), n + 1);
  for (Index t = 0; t < source.size(); ++t) {
    const auto& tuple = source.tuple(t);
    for (Index i = 0; i < n; ++i)
      appended.col(i) = RVector::Unit(alg_.dim(), tuple[static_cast<std::size_t>(i)]);
    appended.col(n) = y;
    RVector w = wedgeExpand(targetBasis, appended);
    for (Index s = 0; s < targetBasis.size(); ++s) {
      if (w(s) == 0) continue;
      for (Index a = 0; a < m; ++a) {
        result(a * targetBasis.size() + s, a * source.size() + t) += sign * w(s);
      }
    }
  }
  return result;
}

RMatrix ChainComplex::chainTwist(Index n) const {
  const Index m = module_.dim();
  const RMatrix power = wedgePower(alg_.alpha(), n);
  const Index w = power.rows();
  RMatrix result = RMatrix::Zero(m * w, m * w);
  for (Index br = 0; br < m; ++br) {
    for (Index bc = 0; bc < m; ++bc) {
      if (module_.alphaM()(br, bc) == 0) continue;
      result.block(br * w, bc * w, w, w) = module_.alphaM()(br, bc) * power;
    }
  }
  return result;
}

CartanReport ChainComplex::verifyCartan(Index n) const {
  if (n < 1) throw std::out_of_range("verifyCartan: degree must be at least 1");
  const Index dimL = alg_.dim();
  const RMatrix& a = alg_.alpha();
  const RMatrix& dn = boundary(n);
  const RMatrix& dn1 = boundary(n + 1);
  const RMatrix wN = chainTwist(n);
  const RMatrix wN1 = chainTwist(n - 1);

  CartanReport report;
  report.squareZero = isZeroMatrix(RMatrix(dn * dn1));

  bool homotopy = true;
  bool thetaBoundary = true;
  std::vector<RMatrix> thetaN, thetaN1, iotaN1;
  thetaN.reserve(static_cast<std::size_t>(dimL));
  thetaN1.reserve(static_cast<std::size_t>(dimL));
  iotaN1.reserve(static_cast<std::size_t>(dimL));
  for (Index k = 0; k < dimL; ++k) {
    RVector ek = RVector::Unit(dimL, k);
    thetaN.push_back(theta(n, ek));
    thetaN1.push_back(theta(n - 1, ek));
    iotaN1.push_back(iota(n - 1, ek));
  }
  auto thetaOfN = [&](const RVector& v) {
    RMatrix r = RMatrix::Zero(chainDim(n), chainDim(n));
    for (Index k = 0; k < dimL; ++k)
      if (v(k) != 0) r += v(k) * thetaN[static_cast<std::size_t>(k)];
    return r;
  };
  auto iotaOfN1 = [&](const RVector& v) {
    RMatrix r = RMatrix::Zero(chainDim(n), chainDim(n - 1));
    for (Index k = 0; k < dimL; ++k)
      if (v(k) != 0) r += v(k) * iotaN1[static_cast<std::size_t>(k)];
    return r;
  };

  for (Index k = 0; k < dimL; ++k) {
    RVector ek = RVector::Unit(dimL, k);
    // (a)  d_{n+1} i_n(alpha y) + i_{n-1}(alpha^2 y) d_n = -theta_n(y)
    if (homotopy) {
      RMatrix lhs = dn1 * iota(n, ek) + iotaOfN1(RVector(a * ek)) * dn;
      if (!sameMatrix(lhs, RMatrix(-thetaN[static_cast<std::size_t>(k)]))) homotopy = false;
    }
    // (d)  theta_{n-1}(alpha y) d_n = d_n theta_n(y)
    if (thetaBoundary) {
      RMatrix lhs = RMatrix::Zero(chainDim(n - 1), chainDim(n - 1));
      RVector ak = a * ek;
      for (Index p = 0; p < dimL; ++p)
        if (ak(p) != 0) lhs += ak(p) * thetaN1[static_cast<std::size_t>(p)];
      if (!sameMatrix(RMatrix(lhs * dn), RMatrix(dn * thetaN[static_cast<std::size_t>(k)])))
        thetaBoundary = false;
    }
  }
  report.homotopy = homotopy;
  report.thetaBoundary = thetaBoundary;

  bool thetaBracket = true;
  bool thetaIota = true;
  for (Index l = 0; l < dimL && (thetaBracket || thetaIota); ++l) {
    RVector el = RVector::Unit(dimL, l);
    RMatrix thetaAlphaL = thetaOfN(RVector(a * el));
    for (Index k = 0; k < dimL; ++k) {
      RVector ek = RVector::Unit(dimL, k);
      RVector lk = alg_.bracketBasis(l, k);
      // (b)  theta(alpha x) theta(y) - theta(alpha y) theta(x) = theta([x,y]) W_n
      if (thetaBracket) {
        RMatrix lhs = thetaAlphaL * thetaN[static_cast<std::size_t>(k)] -
                      thetaOfN(RVector(a * ek)) * thetaN[static_cast<std::size_t>(l)];
        if (!sameMatrix(lhs, RMatrix(thetaOfN(lk) * wN))) thetaBracket = false;
      }
      // (c)  theta_n(x) i_{n-1}(alpha y) - i_{n-1}(alpha^2 y) theta_{n-1}(x)
      //        = i_{n-1}(alpha [x,y]) W_{n-1}
      if (thetaIota) {
        RMatrix lhs = thetaN[static_cast<std::size_t>(l)] * iotaN1[static_cast<std::size_t>(k)] -
                      iotaOfN1(RVector(a * ek)) * thetaN1[static_cast<std::size_t>(l)];
        if (!sameMatrix(lhs, RMatrix(iotaOfN1(lk) * wN1))) thetaIota = false;
      }
    }
  }
  report.thetaBracket = thetaBracket;
  report.thetaIota = thetaIota;
  return report;
}

HomologySpace ChainComplex::homology(Index n) const {
  if (n < 0 || n > maxDegree_)
    throw std::out_of_range("homology: degree out of range");
  Subspace cycles = n == 0 ? Subspace::full(chainDim(0)) : kernel(boundary(n));
  Subspace boundaries = image(boundary(n + 1));
  // Boundaries are cycles (d d = 0), so their coordinates in the cycle basis
  // exist; the homology is the quotient of those coordinates.
  RMatrix coords(cycles.dim(), boundaries.dim());
  for (Index j = 0; j < boundaries.dim(); ++j) {
    auto c = cycles.coordinates(boundaries.basis().col(j));
    if (!c) throw std::logic_error("homology: boundary is not a cycle");
    coords.col(j) = *c;
  }
  QuotientSpace classes(Subspace::span(cycles.dim(), coords));
  HomologySpace result;
  result.cycleDim = cycles.dim();
  result.boundaryDim = boundaries.dim();
  result.dim = classes.dim();
  result.representatives = cycles.basis() * classes.section();
  return result;
}

Index h0ClosedForm(const HomLieAlgebra& alg, const HomModule& module) {
  const Index m = module.dim();
  const Index n = alg.dim();
  RMatrix stacked(m, m * n);
  for (Index i = 0; i < n; ++i) stacked.middleCols(i * m, m) = module.rho(i);
  return m - rank(stacked);
}

Index h1ClosedFormTrivialAction(const HomLieAlgebra& alg, const HomModule& module) {
  for (Index i = 0; i < alg.dim(); ++i) {
    if (!isZeroMatrix(module.rho(i)))
      throw std::invalid_argument("h1ClosedFormTrivialAction: action is not trivial");
  }
  const Index n = alg.dim();
  RMatrix brackets(n, n * n);
  Index g = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) brackets.col(g++) = alg.bracketBasis(i, j);
  const Index derived = rank(brackets);
  return module.dim() * n - rank(module.alphaM()) * derived;
}

}  // namespace homlie
