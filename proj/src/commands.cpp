#include "homlie/commands.hpp"

#include <functional>
#include <sstream>
#include <vector>

#include "homlie/homology.hpp"

namespace homlie {

namespace {

using nlohmann::ordered_json;

constexpr Index kFailureCap = 32;

std::vector<const Document*> docChain(const CommandContext& ctx) {
  std::vector<const Document*> chain;
  if (ctx.userDoc) chain.push_back(ctx.userDoc);
  chain.push_back(&builtinFixtures());
  return chain;
}

const Document& activeDocument(const CommandContext& ctx) {
  return ctx.userDoc ? *ctx.userDoc : builtinFixtures();
}

std::string scopeName(const CommandContext& ctx) {
  return ctx.userDoc ? "document" : "fixtures";
}

const HomLieAlgebra& requireAlgebra(const CommandContext& ctx, const std::string& name) {
  for (const Document* doc : docChain(ctx)) {
    auto it = doc->algebras.find(name);
    if (it != doc->algebras.end()) return it->second;
  }
  throw DocumentError("unresolved algebra \"" + name + "\"");
}

HomModule resolveModule(const CommandContext& ctx, const std::string& algebraName,
                        const HomLieAlgebra& alg, const std::string& moduleName) {
  if (moduleName == "trivial") return HomModule::trivial(alg.dim());
  for (const Document* doc : docChain(ctx)) {
    auto it = doc->modules.find(moduleName);
    if (it == doc->modules.end()) continue;
    if (it->second.algebraName != algebraName ||
        !(doc->algebras.at(it->second.algebraName) == alg))
      throw DocumentError("module \"" + moduleName + "\" is not a module over algebra \"" +
                          algebraName + "\"");
    return it->second.module;
  }
  throw DocumentError("unresolved module \"" + moduleName + "\"");
}

std::pair<const Document*, const Document::MorphismEntry*> requireMorphism(
    const CommandContext& ctx, const std::string& name) {
  for (const Document* doc : docChain(ctx)) {
    auto it = doc->morphisms.find(name);
    if (it != doc->morphisms.end()) return {doc, &it->second};
  }
  throw DocumentError("unresolved morphism \"" + name + "\"");
}

RVector unitVector(Index n, Index i) {
  RVector v = RVector::Zero(n);
  v(i) = 1;
  return v;
}

ordered_json jsonVector(const Eigen::Ref<const RVector>& v) {
  ordered_json arr = ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(formatRational(v(i)));
  return arr;
}

ordered_json jsonMatrix(const Eigen::Ref<const RMatrix>& m) {
  ordered_json rows = ordered_json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(formatRational(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json jsonColumns(const Eigen::Ref<const RMatrix>& m) {
  ordered_json cols = ordered_json::array();
  for (Index c = 0; c < m.cols(); ++c) cols.push_back(jsonVector(m.col(c)));
  return cols;
}

std::string humanVector(const Eigen::Ref<const RVector>& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += formatRational(v(i));
  }
  out += ")";
  return out;
}

std::string humanMatrixRows(const Eigen::Ref<const RMatrix>& m) {
  std::string out;
  for (Index r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    out += humanVector(m.row(r).transpose());
  }
  return out;
}

const char* boolWord(bool b) { return b ? "yes" : "no"; }

const char* checkLabel(Check c) {
  switch (c) {
    case Check::SkewSymmetry: return "skew-symmetry";
    case Check::HomJacobi: return "hom-jacobi";
    case Check::Multiplicativity: return "multiplicativity";
    case Check::MorphismBracket: return "morphism-bracket";
    case Check::MorphismTwist: return "morphism-twist";
    case Check::ActionBracket: return "action-bracket";
    case Check::ActionModuleBracket: return "action-module-bracket";
    case Check::ActionTwist: return "action-twist";
  }
  return "unknown";
}

ordered_json reportJson(const ValidationReport& report) {
  ordered_json out;
  out["ok"] = report.ok();
  out["failure_count"] = report.failures.size();
  ordered_json failures = ordered_json::array();
  Index shown = 0;
  for (const auto& f : report.failures) {
    if (shown == kFailureCap) break;
    ordered_json entry;
    entry["check"] = checkLabel(f.check);
    entry["indices"] = f.indices;
    entry["residual"] = formatRational(f.residual);
    failures.push_back(std::move(entry));
    ++shown;
  }
  out["failures"] = std::move(failures);
  out["truncated"] = static_cast<Index>(report.failures.size()) > kFailureCap;
  return out;
}

void reportHuman(std::ostringstream& out, const std::string& path,
                 const ValidationReport& report) {
  if (report.ok()) {
    out << path << ": ok\n";
    return;
  }
  out << path << ": FAIL (" << report.failures.size() << " failing identities)\n";
  Index shown = 0;
  for (const auto& f : report.failures) {
    if (shown == kFailureCap) {
      out << "  ... (" << (report.failures.size() - static_cast<std::size_t>(kFailureCap))
          << " more)\n";
      break;
    }
    out << "  " << checkLabel(f.check) << " at (";
    for (std::size_t i = 0; i < f.indices.size(); ++i) {
      if (i) out << ", ";
      out << f.indices[i];
    }
    out << "): residual " << formatRational(f.residual) << "\n";
    ++shown;
  }
}

/// The span of all basis brackets [e_i, e_j], without closing under alpha.
Subspace derivedSpan(const HomLieAlgebra& alg) {
  const Index n = alg.dim();
  RMatrix gens(n, n * (n - 1) / 2);
  Index col = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) gens.col(col++) = alg.bracketBasis(i, j);
  return Subspace::span(n, gens);
}

std::string trimTrailingNewline(std::ostringstream& out) {
  std::string s = out.str();
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

CommandResult cmdValidate(const CommandContext& ctx, const std::optional<std::string>& name) {
  struct Item {
    std::string path;
    ValidationReport report;
  };
  std::vector<Item> items;

  if (name) {
    bool found = false;
    for (const Document* doc : docChain(ctx)) {
      if (auto it = doc->algebras.find(*name); it != doc->algebras.end()) {
        items.push_back({"algebras." + *name, validate(it->second)});
        found = true;
      } else if (auto mt = doc->modules.find(*name); mt != doc->modules.end()) {
        items.push_back({"modules." + *name,
                         checkAction(doc->algebras.at(mt->second.algebraName),
                                     mt->second.module.action())});
        found = true;
      } else if (auto ft = doc->morphisms.find(*name); ft != doc->morphisms.end()) {
        items.push_back(
            {"morphisms." + *name, checkMorphism(resolveMorphism(*doc, ft->second))});
        found = true;
      }
      if (found) break;
    }
    if (!found) throw DocumentError("unresolved name \"" + *name + "\"");
  } else {
    const Document& doc = activeDocument(ctx);
    for (const auto& [n, alg] : doc.algebras) items.push_back({"algebras." + n, validate(alg)});
    for (const auto& [n, entry] : doc.modules)
      items.push_back({"modules." + n,
                       checkAction(doc.algebras.at(entry.algebraName), entry.module.action())});
    for (const auto& [n, entry] : doc.morphisms)
      items.push_back({"morphisms." + n, checkMorphism(resolveMorphism(doc, entry))});
  }

  bool ok = true;
  ordered_json objects = ordered_json::array();
  std::ostringstream human;
  for (const auto& item : items) {
    ok = ok && item.report.ok();
    ordered_json obj;
    obj["name"] = item.path;
    obj["report"] = reportJson(item.report);
    objects.push_back(std::move(obj));
    reportHuman(human, item.path, item.report);
  }
  human << "result: " << (ok ? "ok" : "FAIL") << "\n";

  ordered_json machine;
  machine["command"] = "validate";
  machine["inputs"] = {{"scope", scopeName(ctx)}};
  if (name) machine["inputs"]["name"] = *name;
  machine["results"] = {{"objects", std::move(objects)}, {"ok", ok}};
  return {std::move(machine), trimTrailingNewline(human), ok ? kExitOk : kExitValidation};
}

CommandResult cmdInvariants(const CommandContext& ctx, const std::string& algebra) {
  const HomLieAlgebra& alg = requireAlgebra(ctx, algebra);
  const Subspace z = center(alg);
  const Subspace derived = derivedSpan(alg);
  const bool perfect = isPerfect(alg);
  const bool multiplicative = validate(alg).passed(Check::Multiplicativity);

  ordered_json machine;
  machine["command"] = "invariants";
  machine["inputs"] = {{"scope", scopeName(ctx)}, {"algebra", algebra}};
  machine["results"] = {{"dim", alg.dim()},
                        {"center_dim", z.dim()},
                        {"center_basis", jsonColumns(z.basis())},
                        {"derived_dim", derived.dim()},
                        {"perfect", perfect},
                        {"multiplicative", multiplicative}};

  std::ostringstream human;
  human << "algebra: " << algebra << " (dim " << alg.dim() << ")\n";
  human << "center: dim " << z.dim();
  if (z.dim() > 0) {
    human << ", basis";
    for (Index c = 0; c < z.dim(); ++c) human << " " << humanVector(z.basis().col(c));
  }
  human << "\n";
  human << "derived subalgebra: dim " << derived.dim() << "\n";
  human << "perfect: " << boolWord(perfect) << "\n";
  human << "multiplicative: " << boolWord(multiplicative) << "\n";
  return {std::move(machine), trimTrailingNewline(human), kExitOk};
}

CommandResult cmdHomology(const CommandContext& ctx, const std::string& algebra,
                          const std::string& module, Index degree) {
  const HomLieAlgebra& alg = requireAlgebra(ctx, algebra);
  const HomModule mod = resolveModule(ctx, algebra, alg, module);

  HomologySpace h;
  Index chainDim = 0;
  if (degree <= alg.dim()) {
    ChainComplex complex(alg, mod, degree + 1);
    chainDim = complex.chainDim(degree);
    h = complex.homology(degree);
  }

  ordered_json machine;
  machine["command"] = "homology";
  machine["inputs"] = {{"scope", scopeName(ctx)},
                       {"algebra", algebra},
                       {"module", module},
                       {"degree", degree}};
  machine["results"] = {{"chain_dim", chainDim},
                        {"cycle_dim", h.cycleDim},
                        {"boundary_dim", h.boundaryDim},
                        {"homology_dim", h.dim},
                        {"representatives", jsonColumns(h.representatives)}};

  std::ostringstream human;
  human << "algebra: " << algebra << ", coefficients: " << module << ", degree: " << degree
        << "\n";
  human << "chain dim: " << chainDim << ", cycles: " << h.cycleDim
        << ", boundaries: " << h.boundaryDim << "\n";
  human << "homology dim: " << h.dim << "\n";
  for (Index c = 0; c < h.representatives.cols(); ++c)
    human << "  class " << (c + 1) << ": " << humanVector(h.representatives.col(c)) << "\n";
  return {std::move(machine), trimTrailingNewline(human), kExitOk};
}

CommandResult cmdCartan(const CommandContext& ctx, const std::string& algebra,
                        const std::string& module, Index maxDegree) {
  const HomLieAlgebra& alg = requireAlgebra(ctx, algebra);
  const HomModule mod = resolveModule(ctx, algebra, alg, module);
  ChainComplex complex(alg, mod, maxDegree + 1);

  bool ok = true;
  ordered_json degrees = ordered_json::array();
  std::ostringstream human;
  human << "algebra: " << algebra << ", coefficients: " << module << ", degrees 1.."
        << maxDegree << "\n";
  for (Index n = 1; n <= maxDegree; ++n) {
    const CartanReport r = complex.verifyCartan(n);
    ok = ok && r.all();
    degrees.push_back({{"degree", n},
                       {"homotopy", r.homotopy},
                       {"theta_bracket", r.thetaBracket},
                       {"theta_iota", r.thetaIota},
                       {"theta_boundary", r.thetaBoundary},
                       {"square_zero", r.squareZero},
                       {"ok", r.all()}});
    auto word = [](bool b) { return b ? "ok" : "FAIL"; };
    human << "degree " << n << ": homotopy " << word(r.homotopy) << ", theta-bracket "
          << word(r.thetaBracket) << ", theta-iota " << word(r.thetaIota)
          << ", theta-boundary " << word(r.thetaBoundary) << ", square-zero "
          << word(r.squareZero) << "\n";
  }
  human << "result: " << (ok ? "ok" : "FAIL") << "\n";

  ordered_json machine;
  machine["command"] = "cartan";
  machine["inputs"] = {{"scope", scopeName(ctx)},
                       {"algebra", algebra},
                       {"module", module},
                       {"max_degree", maxDegree}};
  machine["results"] = {{"degrees", std::move(degrees)}, {"ok", ok}};
  return {std::move(machine), trimTrailingNewline(human), ok ? kExitOk : kExitMath};
}

CommandResult cmdUce(const CommandContext& ctx, const std::string& algebra) {
  const HomLieAlgebra& alg = requireAlgebra(ctx, algebra);
  const UceData u = uce(alg);
  ChainComplex complex(alg, HomModule::trivial(alg.dim()), 3);
  const Index h2 = complex.homology(2).dim;
  const Extension ext = uceExtension(u);
  const bool agree = u.kernelDim() == h2;

  ordered_json machine;
  machine["command"] = "uce";
  machine["inputs"] = {{"scope", scopeName(ctx)}, {"algebra", algebra}};
  machine["results"] = {{"dim", alg.dim()},
                        {"wedge2_dim", u.coordinates.ambientDim()},
                        {"relations_dim", u.relations.dim()},
                        {"uce_dim", u.algebra.dim()},
                        {"kernel_dim", u.kernelDim()},
                        {"h2_dim", h2},
                        {"kernel_matches_h2", agree},
                        {"uce_perfect", isPerfect(u.algebra)},
                        {"extension_central", isCentral(ext)}};

  std::ostringstream human;
  human << "algebra: " << algebra << " (dim " << alg.dim() << ")\n";
  human << "wedge^2 dim: " << u.coordinates.ambientDim() << ", relations dim: "
        << u.relations.dim() << "\n";
  human << "uce dim: " << u.algebra.dim() << ", kernel dim: " << u.kernelDim() << "\n";
  human << "H_2 dim: " << h2 << ", kernel matches H_2: " << boolWord(agree) << "\n";
  human << "uce perfect: " << boolWord(isPerfect(u.algebra))
        << ", extension central: " << boolWord(isCentral(ext)) << "\n";
  return {std::move(machine), trimTrailingNewline(human), agree ? kExitOk : kExitMath};
}

CommandResult cmdExtCentral(const CommandContext& ctx, const std::string& morphism) {
  auto [owner, entry] = requireMorphism(ctx, morphism);
  const Extension ext = makeExtension(resolveMorphism(*owner, *entry));
  const bool central = isCentral(ext);
  const bool alphaCentral = isAlphaCentral(ext);

  ordered_json machine;
  machine["command"] = "ext-central";
  machine["inputs"] = {{"scope", scopeName(ctx)}, {"morphism", morphism}};
  machine["results"] = {{"total", entry->sourceName},
                        {"base", entry->targetName},
                        {"kernel_dim", ext.kernelSpace.dim()},
                        {"kernel_basis", jsonColumns(ext.kernelSpace.basis())},
                        {"central", central},
                        {"alpha_central", alphaCentral}};

  std::ostringstream human;
  human << "extension: " << entry->sourceName << " -> " << entry->targetName << " via "
        << morphism << "\n";
  human << "kernel: dim " << ext.kernelSpace.dim();
  for (Index c = 0; c < ext.kernelSpace.dim(); ++c)
    human << " " << humanVector(ext.kernelSpace.basis().col(c));
  human << "\n";
  human << "central: " << boolWord(central) << ", alpha-central: " << boolWord(alphaCentral)
        << "\n";
  return {std::move(machine), trimTrailingNewline(human), kExitOk};
}

CommandResult cmdExtCompose(const CommandContext& ctx, const std::string& outer,
                            const std::string& inner) {
  auto [outerOwner, outerEntry] = requireMorphism(ctx, outer);
  auto [innerOwner, innerEntry] = requireMorphism(ctx, inner);
  const Extension outerExt = makeExtension(resolveMorphism(*outerOwner, *outerEntry));
  const Extension innerExt = makeExtension(resolveMorphism(*innerOwner, *innerEntry));
  const Extension composite = composeExtensions(outerExt, innerExt);
  const bool central = isCentral(composite);
  const bool alphaCentral = isAlphaCentral(composite);

  ordered_json machine;
  machine["command"] = "ext-compose";
  machine["inputs"] = {{"scope", scopeName(ctx)}, {"outer", outer}, {"inner", inner}};
  machine["results"] = {{"total", innerEntry->sourceName},
                        {"base", outerEntry->targetName},
                        {"kernel_dim", composite.kernelSpace.dim()},
                        {"kernel_basis", jsonColumns(composite.kernelSpace.basis())},
                        {"central", central},
                        {"alpha_central", alphaCentral}};

  std::ostringstream human;
  human << "composite extension: " << innerEntry->sourceName << " -> "
        << outerEntry->targetName << " via " << outer << " after " << inner << "\n";
  human << "kernel: dim " << composite.kernelSpace.dim();
  for (Index c = 0; c < composite.kernelSpace.dim(); ++c)
    human << " " << humanVector(composite.kernelSpace.basis().col(c));
  human << "\n";
  human << "central: " << boolWord(central) << ", alpha-central: " << boolWord(alphaCentral)
        << "\n";
  return {std::move(machine), trimTrailingNewline(human), kExitOk};
}

CommandResult cmdExtPullback(const CommandContext& ctx, const std::string& tau,
                             const std::string& pi) {
  auto [tauOwner, tauEntry] = requireMorphism(ctx, tau);
  auto [piOwner, piEntry] = requireMorphism(ctx, pi);
  const PullbackData data =
      pullback(resolveMorphism(*tauOwner, *tauEntry), resolveMorphism(*piOwner, *piEntry));

  ordered_json machine;
  machine["command"] = "ext-pullback";
  machine["inputs"] = {{"scope", scopeName(ctx)}, {"tau", tau}, {"pi", pi}};
  ordered_json results = {{"dim", data.algebra.dim()},
                          {"to_left_rank", rank(data.toLeft.matrix)},
                          {"to_right_rank", rank(data.toRight.matrix)},
                          {"extension_over_right", data.extensionOverRight.has_value()}};
  std::ostringstream human;
  human << "pullback of " << tau << " and " << pi << ": dim " << data.algebra.dim() << "\n";
  human << "projection ranks: " << rank(data.toLeft.matrix) << " (left), "
        << rank(data.toRight.matrix) << " (right)\n";
  if (data.extensionOverRight) {
    const Extension& e = *data.extensionOverRight;
    results["kernel_dim"] = e.kernelSpace.dim();
    results["central"] = isCentral(e);
    results["alpha_central"] = isAlphaCentral(e);
    human << "extension over " << piEntry->sourceName << ": kernel dim "
          << e.kernelSpace.dim() << ", central " << boolWord(isCentral(e))
          << ", alpha-central " << boolWord(isAlphaCentral(e)) << "\n";
  } else {
    human << "no extension over " << piEntry->sourceName
          << " (projection not surjective)\n";
  }
  machine["results"] = std::move(results);
  return {std::move(machine), trimTrailingNewline(human), kExitOk};
}

CommandResult cmdExtCertificate(const CommandContext& ctx, const std::string& morphism) {
  auto [owner, entry] = requireMorphism(ctx, morphism);
  const Extension ext = makeExtension(resolveMorphism(*owner, *entry));
  const CertificateReport report = universalityCertificate(ext);
  const char* verdict = report.verdict == UniversalityVerdict::UniversalCentral
                            ? "universal-central"
                            : report.verdict == UniversalityVerdict::NotUniversal
                                  ? "not-universal"
                                  : "inconclusive";

  ordered_json machine;
  machine["command"] = "ext-certificate";
  machine["inputs"] = {{"scope", scopeName(ctx)}, {"morphism", morphism}};
  machine["results"] = {{"verdict", verdict},
                        {"h1", report.h1},
                        {"h2", report.h2},
                        {"total_perfect", report.totalPerfect}};

  std::ostringstream human;
  human << "extension: " << entry->sourceName << " -> " << entry->targetName << " via "
        << morphism << "\n";
  human << "verdict: " << verdict << "\n";
  human << "H_1: " << report.h1 << ", H_2: " << report.h2
        << ", total perfect: " << boolWord(report.totalPerfect) << "\n";
  return {std::move(machine), trimTrailingNewline(human), kExitOk};
}

CommandResult cmdClassify2(const CommandContext& ctx, const std::string& algebra) {
  const HomLieAlgebra& alg = requireAlgebra(ctx, algebra);
  const TwoDimClassification c = classify2dim(alg);
  const char* label = c.kind == TwoDimKind::Abelian
                          ? "a"
                          : c.kind == TwoDimKind::NonAbelianSingular ? "b" : "c";
  const char* kind = c.kind == TwoDimKind::Abelian
                         ? "abelian"
                         : c.kind == TwoDimKind::NonAbelianSingular ? "non-abelian-singular"
                                                                    : "non-abelian-invertible";
  ordered_json params = ordered_json::array();
  for (const auto& p : c.params) params.push_back(formatRational(p));

  ordered_json machine;
  machine["command"] = "classify2";
  machine["inputs"] = {{"scope", scopeName(ctx)}, {"algebra", algebra}};
  machine["results"] = {{"class", label},
                        {"kind", kind},
                        {"params", std::move(params)},
                        {"canonical_bracket", jsonVector(c.canonical.bracketBasis(0, 1))},
                        {"canonical_alpha", jsonMatrix(c.canonical.alpha())},
                        {"basis_change", jsonMatrix(c.basisChange)}};

  std::ostringstream human;
  human << "algebra: " << algebra << "\n";
  human << "class: " << label << " (" << kind << ")\n";
  human << "params:";
  if (c.params.empty()) human << " none";
  for (std::size_t i = 0; i < c.params.size(); ++i)
    human << (i ? ", " : " ") << formatRational(c.params[i]);
  human << "\n";
  human << "canonical [a1, a2] = " << humanVector(c.canonical.bracketBasis(0, 1)) << "\n";
  human << "canonical alpha: " << humanMatrixRows(c.canonical.alpha()) << "\n";
  human << "basis change: " << humanMatrixRows(c.basisChange) << "\n";
  return {std::move(machine), trimTrailingNewline(human), kExitOk};
}

namespace {

struct BatteryAssertion {
  std::string name;
  bool ok = true;
  std::string detail;
};

class Battery {
 public:
  void run(const std::string& name, const std::function<void(BatteryAssertion&)>& body) {
    BatteryAssertion a;
    a.name = name;
    try {
      body(a);
    } catch (const std::exception& e) {
      a.ok = false;
      a.detail = a.detail.empty() ? e.what() : a.detail + "; " + e.what();
    }
    assertions_.push_back(std::move(a));
  }

  const std::vector<BatteryAssertion>& assertions() const { return assertions_; }

 private:
  std::vector<BatteryAssertion> assertions_;
};

void check(BatteryAssertion& a, bool cond, const std::string& detail) {
  if (cond) return;
  a.ok = false;
  a.detail = a.detail.empty() ? detail : a.detail + "; " + detail;
}

}  // namespace

CommandResult cmdPaperExamples() {
  const Document& fx = builtinFixtures();
  Battery battery;

  battery.run("fixtures-validate", [&](BatteryAssertion& a) {
    auto issues = validateDocument(fx);
    check(a, issues.empty(), "validation issues in built-in fixtures");
  });

  battery.run("example-4.6-K-perfect", [&](BatteryAssertion& a) {
    check(a, isPerfect(fx.algebras.at("example-4.6-K")), "K is not perfect");
  });

  battery.run("example-4.6-K-center", [&](BatteryAssertion& a) {
    const Subspace z = center(fx.algebras.at("example-4.6-K"));
    check(a, z == Subspace::span(5, unitVector(5, 0)), "center of K is not span{b1}");
  });

  battery.run("example-4.6-F-center", [&](BatteryAssertion& a) {
    const Subspace z = center(fx.algebras.at("example-4.6-F"));
    check(a, z == Subspace::span(6, unitVector(6, 0)), "center of F is not span{e1}");
  });

  battery.run("example-4.6-pi-kernel", [&](BatteryAssertion& a) {
    const Extension e =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("example-4.6-pi")));
    check(a, e.kernelSpace == Subspace::span(5, unitVector(5, 0)),
          "Ker pi is not span{b1}");
  });

  battery.run("example-4.6-pi-central", [&](BatteryAssertion& a) {
    const Extension e =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("example-4.6-pi")));
    check(a, isCentral(e), "pi is not central");
  });

  battery.run("example-4.6-rho-central", [&](BatteryAssertion& a) {
    const Extension e =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("example-4.6-rho")));
    check(a, isCentral(e), "rho is not central");
  });

  battery.run("example-4.6-composite-kernel", [&](BatteryAssertion& a) {
    const Extension outer =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("example-4.6-pi")));
    const Extension inner =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("example-4.6-rho")));
    const Extension composite = composeExtensions(outer, inner);
    RMatrix expected(6, 2);
    expected.col(0) = unitVector(6, 0);
    expected.col(1) = unitVector(6, 1);
    check(a, composite.kernelSpace == Subspace::span(6, expected),
          "Ker(pi rho) is not span{e1, e2}");
  });

  battery.run("example-4.6-composite-not-central", [&](BatteryAssertion& a) {
    const Extension outer =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("example-4.6-pi")));
    const Extension inner =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("example-4.6-rho")));
    check(a, !isCentral(composeExtensions(outer, inner)), "pi rho is central");
  });

  battery.run("example-4.6-composite-alpha-central", [&](BatteryAssertion& a) {
    const Extension outer =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("example-4.6-pi")));
    const Extension inner =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("example-4.6-rho")));
    check(a, isAlphaCentral(composeExtensions(outer, inner)),
          "pi rho is not alpha-central");
  });

  battery.run("remark-4.2-pi-kernel", [&](BatteryAssertion& a) {
    const Extension e =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("remark-4.2-pi")));
    check(a, e.kernelSpace == Subspace::span(3, unitVector(3, 0)),
          "Ker pi is not span{b1}");
  });

  battery.run("remark-4.2-alpha-central-not-central", [&](BatteryAssertion& a) {
    const Extension e =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("remark-4.2-pi")));
    check(a, isAlphaCentral(e), "extension is not alpha-central");
    check(a, !isCentral(e), "extension is central");
  });

  battery.run("remark-4.2-kernel-commutator", [&](BatteryAssertion& a) {
    const HomLieAlgebra& k = fx.algebras.at("remark-4.2-K");
    const Extension e =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("remark-4.2-pi")));
    const Subspace c = commutator(k, e.kernelSpace, Subspace::full(3));
    check(a, c == Subspace::span(3, unitVector(3, 0)), "[Ker pi, K] is not span{b1}");
  });

  battery.run("prop-2.9-a-class", [&](BatteryAssertion& a) {
    check(a, classify2dim(fx.algebras.at("prop-2.9-a")).kind == TwoDimKind::Abelian,
          "expected class a");
  });

  battery.run("prop-2.9-b-class", [&](BatteryAssertion& a) {
    const TwoDimClassification c = classify2dim(fx.algebras.at("prop-2.9-b"));
    check(a, c.kind == TwoDimKind::NonAbelianSingular, "expected class b");
    check(a, c.params == std::vector<Rational>{Rational(0), Rational(1)},
          "unexpected parameters");
  });

  battery.run("prop-2.9-c-class", [&](BatteryAssertion& a) {
    const TwoDimClassification c = classify2dim(fx.algebras.at("prop-2.9-c"));
    check(a, c.kind == TwoDimKind::NonAbelianInvertible, "expected class c");
    check(a, c.params == std::vector<Rational>{Rational(2), Rational(3)},
          "unexpected parameters");
  });

  battery.run("example-2.16-c-class", [&](BatteryAssertion& a) {
    const TwoDimClassification c = classify2dim(fx.algebras.at("example-2.16-c"));
    check(a, c.kind == TwoDimKind::NonAbelianInvertible, "expected class c");
    check(a, c.params == std::vector<Rational>{Rational(1), Rational(1)},
          "unexpected parameters");
  });

  battery.run("example-4.6-K-uce-dims", [&](BatteryAssertion& a) {
    const UceData u = uce(fx.algebras.at("example-4.6-K"));
    check(a, u.coordinates.ambientDim() == 10, "wedge^2 dim is not 10");
    check(a, u.relations.dim() == 0, "relation space is not zero");
    check(a, u.algebra.dim() == 10, "uce dim is not 10");
    check(a, u.kernelDim() == 5, "kernel dim is not 5");
  });

  battery.run("example-4.6-K-uce-h2", [&](BatteryAssertion& a) {
    const HomLieAlgebra& k = fx.algebras.at("example-4.6-K");
    const UceData u = uce(k);
    ChainComplex complex(k, HomModule::trivial(k.dim()), 3);
    check(a, u.kernelDim() == complex.homology(2).dim, "kernel dim differs from H_2");
  });

  battery.run("example-4.6-K-uce-central", [&](BatteryAssertion& a) {
    const UceData u = uce(fx.algebras.at("example-4.6-K"));
    check(a, validate(u.algebra).ok(), "uce(K) fails validation");
    check(a, isPerfect(u.algebra), "uce(K) is not perfect");
    check(a, isCentral(uceExtension(u)), "uce extension is not central");
  });

  battery.run("example-4.6-L-uce-lift", [&](BatteryAssertion& a) {
    const UceData u = uce(fx.algebras.at("example-4.6-L"));
    const Extension target =
        makeExtension(resolveMorphism(fx, fx.morphisms.at("example-4.6-pi")));
    const Morphism phi = lift(u, target);
    check(a, checkMorphism(phi).ok(), "lift is not a morphism");
    check(a, sameMatrix(composeMorphisms(target.proj, phi).matrix, u.uL.matrix),
          "pi after lift differs from u_L");
  });

  battery.run("cartan-fixtures", [&](BatteryAssertion& a) {
    for (const auto& [name, alg] : fx.algebras) {
      ChainComplex complex(alg, HomModule::trivial(alg.dim()), 4);
      for (Index n = 1; n <= 3; ++n) {
        if (!complex.verifyCartan(n).all())
          check(a, false, name + " fails at degree " + std::to_string(n));
      }
    }
  });

  battery.run("example-4.6-L-h1-trivial", [&](BatteryAssertion& a) {
    const HomLieAlgebra& l = fx.algebras.at("example-4.6-L");
    const HomModule mod = HomModule::trivial(l.dim());
    ChainComplex complex(l, mod, 2);
    const Index h1 = complex.homology(1).dim;
    check(a, h1 == 0, "H_1 is not 0");
    check(a, h1 == h1ClosedFormTrivialAction(l, mod), "H_1 differs from closed form");
  });

  battery.run("remark-4.2-module-homology", [&](BatteryAssertion& a) {
    const HomLieAlgebra& l = fx.algebras.at("remark-4.2-L");
    const HomModule& mod = fx.modules.at("remark-4.2-kernel").module;
    ChainComplex complex(l, mod, 2);
    check(a, complex.homology(0).dim == 0, "H_0 is not 0");
    check(a, h0ClosedForm(l, mod) == 0, "H_0 closed form is not 0");
    check(a, complex.homology(1).dim == 1, "H_1 is not 1");
  });

  battery.run("abelian-3-h2", [&](BatteryAssertion& a) {
    const HomLieAlgebra& l = fx.algebras.at("abelian-3");
    ChainComplex complex(l, HomModule::trivial(3), 3);
    check(a, complex.homology(2).dim == 3, "H_2 is not 3");
  });

  battery.run("example-4.6-K-certificate", [&](BatteryAssertion& a) {
    const UceData u = uce(fx.algebras.at("example-4.6-K"));
    const CertificateReport r = universalityCertificate(uceExtension(u));
    check(a, r.verdict == UniversalityVerdict::Inconclusive, "verdict is not inconclusive");
    check(a, r.h1 == 0, "H_1 is not 0");
    check(a, r.h2 == 35, "H_2 is not 35");
    check(a, r.totalPerfect, "total algebra is not perfect");
  });

  Index passed = 0;
  ordered_json assertions = ordered_json::array();
  std::ostringstream human;
  for (const auto& a : battery.assertions()) {
    if (a.ok) ++passed;
    assertions.push_back({{"name", a.name}, {"ok", a.ok}, {"detail", a.detail}});
    if (a.ok)
      human << "ok   " << a.name << "\n";
    else
      human << "FAIL " << a.name << ": " << a.detail << "\n";
  }
  const Index total = static_cast<Index>(battery.assertions().size());
  const bool ok = passed == total;
  human << "passed " << passed << "/" << total << "\n";

  ordered_json machine;
  machine["command"] = "paper-examples";
  machine["inputs"] = ordered_json::object();
  machine["results"] = {{"assertions", std::move(assertions)},
                        {"passed", passed},
                        {"total", total},
                        {"ok", ok}};
  return {std::move(machine), trimTrailingNewline(human), ok ? kExitOk : kExitMath};
}

}  // namespace homlie
