#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <string>

#include "homlie/commands.hpp"
#include "homlie/extensions.hpp"
#include "homlie/homology.hpp"
#include "support/corpus.hpp"

using namespace homlie;
using namespace homlie::testsupport;
using nlohmann::ordered_json;

namespace {

// Parses, fails only the multiplicativity identity: the Heisenberg bracket
// with the non-compatible twist diag(1, 1, 2).
const char* kBadAlgebraDoc = R"({
  "schema_version": "1",
  "algebras": {
    "h3": {
      "dim": 3,
      "brackets": [{"i": 1, "j": 2, "coefficients": ["0", "0", "1"]}],
      "alpha": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]]
    }
  }
})";

// A perfect skew table violating the Hom-Jacobi identity: the structural
// identities of the chain complex genuinely fail on it.
const char* kJacobiViolatingDoc = R"({
  "schema_version": "1",
  "algebras": {
    "bad4": {
      "dim": 4,
      "brackets": [
        {"i": 1, "j": 2, "coefficients": ["-1", "0", "0", "1"]},
        {"i": 1, "j": 3, "coefficients": ["0", "-1", "1", "1"]},
        {"i": 1, "j": 4, "coefficients": ["0", "1", "0", "0"]},
        {"i": 2, "j": 3, "coefficients": ["1", "-1", "1", "0"]},
        {"i": 2, "j": 4, "coefficients": ["-1", "0", "-1", "-1"]},
        {"i": 3, "j": 4, "coefficients": ["-1", "0", "1", "-1"]}
      ],
      "alpha": [["0", "1", "1", "0"], ["-1", "1", "-1", "0"],
                ["-1", "0", "0", "-1"], ["-1", "1", "1", "1"]]
    }
  }
})";

// Shadows a bundled algebra name with a different (valid) algebra.
const char* kShadowDoc = R"({
  "schema_version": "1",
  "algebras": {
    "example-4.6-K": {
      "dim": 2,
      "brackets": [],
      "alpha": [["1", "0"], ["0", "1"]]
    }
  }
})";

// A pullback whose right projection is not surjective: the zero morphism
// pulled back along the identity on a 2-dimensional abelian algebra.
const char* kPullbackDoc = R"({
  "schema_version": "1",
  "algebras": {
    "plane": {
      "dim": 2,
      "brackets": [],
      "alpha": [["1", "0"], ["0", "1"]]
    }
  },
  "morphisms": {
    "collapse": {
      "source": "plane",
      "target": "plane",
      "matrix": [["0", "0"], ["0", "0"]]
    },
    "same": {
      "source": "plane",
      "target": "plane",
      "matrix": [["1", "0"], ["0", "1"]]
    }
  }
})";

// A trivial central extension of a simple algebra: identity on sl2.
const char* kSl2Doc = R"({
  "schema_version": "1",
  "algebras": {
    "simple3": {
      "dim": 3,
      "labels": ["e", "f", "h"],
      "brackets": [
        {"i": 1, "j": 2, "coefficients": ["0", "0", "1"]},
        {"i": 3, "j": 1, "coefficients": ["2", "0", "0"]},
        {"i": 3, "j": 2, "coefficients": ["0", "-2", "0"]}
      ],
      "alpha": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    }
  },
  "morphisms": {
    "iden": {
      "source": "simple3",
      "target": "simple3",
      "matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    }
  }
})";

ordered_json columnOfStrings(std::initializer_list<const char*> entries) {
  ordered_json col = ordered_json::array();
  for (const char* e : entries) col.push_back(e);
  return col;
}

}  // namespace

TEST_CASE("validate command covers every bundled object", "[commands][validate]") {
  const CommandContext ctx;
  const CommandResult res = cmdValidate(ctx, std::nullopt);

  REQUIRE(res.exitCode == kExitOk);
  REQUIRE(res.machine.at("command") == "validate");
  REQUIRE(res.machine.at("inputs").at("scope") == "fixtures");
  REQUIRE(res.machine.at("results").at("ok") == true);

  const Document& fx = builtinFixtures();
  const auto& objects = res.machine.at("results").at("objects");
  REQUIRE(objects.size() == fx.algebras.size() + fx.modules.size() + fx.morphisms.size());
  for (const auto& obj : objects) {
    INFO(obj.at("name").get<std::string>());
    REQUIRE(obj.at("report").at("ok") == true);
    REQUIRE(obj.at("report").at("failure_count") == 0);
    REQUIRE(obj.at("report").at("failures").empty());
  }
  REQUIRE_THAT(res.human, Catch::Matchers::ContainsSubstring("result: ok"));
}

TEST_CASE("validate command resolves single objects by name", "[commands][validate]") {
  const CommandContext ctx;

  const CommandResult alg = cmdValidate(ctx, std::optional<std::string>("example-4.6-K"));
  REQUIRE(alg.exitCode == kExitOk);
  REQUIRE(alg.machine.at("inputs").at("name") == "example-4.6-K");
  REQUIRE(alg.machine.at("results").at("objects").size() == 1);
  REQUIRE(alg.machine.at("results").at("objects").at(0).at("name") ==
          "algebras.example-4.6-K");

  const CommandResult mod =
      cmdValidate(ctx, std::optional<std::string>("remark-4.2-kernel"));
  REQUIRE(mod.machine.at("results").at("objects").at(0).at("name") ==
          "modules.remark-4.2-kernel");

  const CommandResult mor = cmdValidate(ctx, std::optional<std::string>("example-4.6-pi"));
  REQUIRE(mor.machine.at("results").at("objects").at(0).at("name") ==
          "morphisms.example-4.6-pi");

  REQUIRE_THROWS_AS(cmdValidate(ctx, std::optional<std::string>("no-such-object")),
                    DocumentError);
}

TEST_CASE("validate command flags an invalid user document", "[commands][validate]") {
  const Document doc = parseDocument(kBadAlgebraDoc);
  CommandContext ctx;
  ctx.userDoc = &doc;

  const CommandResult res = cmdValidate(ctx, std::nullopt);
  REQUIRE(res.exitCode == kExitValidation);
  REQUIRE(res.machine.at("inputs").at("scope") == "document");
  REQUIRE(res.machine.at("results").at("ok") == false);

  const auto& objects = res.machine.at("results").at("objects");
  REQUIRE(objects.size() == 1);
  REQUIRE(objects.at(0).at("name") == "algebras.h3");
  REQUIRE(objects.at(0).at("report").at("ok") == false);
  bool sawMultiplicativity = false;
  for (const auto& f : objects.at(0).at("report").at("failures"))
    sawMultiplicativity = sawMultiplicativity || f.at("check") == "multiplicativity";
  REQUIRE(sawMultiplicativity);
  REQUIRE_THAT(res.human, Catch::Matchers::ContainsSubstring("result: FAIL"));

  // Validating the document scope ignores the bundled objects entirely.
  for (const auto& obj : objects)
    REQUIRE_THAT(obj.at("name").get<std::string>(),
                 !Catch::Matchers::ContainsSubstring("example"));
}

TEST_CASE("invariants command reports the bundled values", "[commands][invariants]") {
  const CommandContext ctx;
  const CommandResult res = cmdInvariants(ctx, "example-4.6-K");

  REQUIRE(res.exitCode == kExitOk);
  REQUIRE(res.machine.at("command") == "invariants");
  const auto& r = res.machine.at("results");
  REQUIRE(r.at("dim") == 5);
  REQUIRE(r.at("center_dim") == 1);
  REQUIRE(r.at("center_basis") ==
          ordered_json::array({columnOfStrings({"1", "0", "0", "0", "0"})}));
  REQUIRE(r.at("derived_dim") == 5);
  REQUIRE(r.at("perfect") == true);
  REQUIRE(r.at("multiplicative") == true);
  REQUIRE_THAT(res.human, Catch::Matchers::ContainsSubstring("perfect: yes"));

  REQUIRE_THROWS_AS(cmdInvariants(ctx, "missing"), DocumentError);
}

TEST_CASE("homology command computes bundled module homology", "[commands][homology]") {
  const CommandContext ctx;
  const CommandResult res = cmdHomology(ctx, "remark-4.2-L", "remark-4.2-kernel", 1);

  REQUIRE(res.exitCode == kExitOk);
  const auto& r = res.machine.at("results");
  REQUIRE(r.at("chain_dim") == 2);
  REQUIRE(r.at("homology_dim") == 1);
  REQUIRE(r.at("cycle_dim").get<Index>() - r.at("boundary_dim").get<Index>() == 1);
  REQUIRE(r.at("representatives") == ordered_json::array({columnOfStrings({"1", "-1"})}));

  const CommandResult h0 = cmdHomology(ctx, "remark-4.2-L", "remark-4.2-kernel", 0);
  REQUIRE(h0.machine.at("results").at("homology_dim") == 0);

  // "trivial" always names the rank-one trivial module.
  const CommandResult ab = cmdHomology(ctx, "abelian-3", "trivial", 2);
  REQUIRE(ab.machine.at("results").at("chain_dim") == 3);
  REQUIRE(ab.machine.at("results").at("homology_dim") == 3);
  REQUIRE(ab.machine.at("results").at("boundary_dim") == 0);
}

TEST_CASE("homology command short-circuits degrees above the dimension",
          "[commands][homology]") {
  const CommandContext ctx;
  const CommandResult res = cmdHomology(ctx, "abelian-3", "trivial", 4);
  REQUIRE(res.exitCode == kExitOk);
  const auto& r = res.machine.at("results");
  REQUIRE(r.at("chain_dim") == 0);
  REQUIRE(r.at("cycle_dim") == 0);
  REQUIRE(r.at("boundary_dim") == 0);
  REQUIRE(r.at("homology_dim") == 0);
  REQUIRE(r.at("representatives").empty());

  // A module over a different algebra cannot be used by name.
  REQUIRE_THROWS_AS(cmdHomology(ctx, "abelian-3", "remark-4.2-kernel", 1), DocumentError);
}

TEST_CASE("cartan command verifies the bundled complexes", "[commands][cartan]") {
  const CommandContext ctx;
  const CommandResult res = cmdCartan(ctx, "example-4.6-K", "trivial", 3);

  REQUIRE(res.exitCode == kExitOk);
  REQUIRE(res.machine.at("results").at("ok") == true);
  const auto& degrees = res.machine.at("results").at("degrees");
  REQUIRE(degrees.size() == 3);
  for (const auto& d : degrees) {
    REQUIRE(d.at("homotopy") == true);
    REQUIRE(d.at("theta_bracket") == true);
    REQUIRE(d.at("theta_iota") == true);
    REQUIRE(d.at("theta_boundary") == true);
    REQUIRE(d.at("square_zero") == true);
    REQUIRE(d.at("ok") == true);
  }
}

TEST_CASE("cartan command mirrors the library report for a failing twist",
          "[commands][cartan]") {
  const Document doc = parseDocument(kBadAlgebraDoc);
  CommandContext ctx;
  ctx.userDoc = &doc;

  const CommandResult res = cmdCartan(ctx, "h3", "trivial", 2);

  const HomLieAlgebra& alg = doc.algebras.at("h3");
  ChainComplex complex(alg, HomModule::trivial(alg.dim()), 3);
  bool allOk = true;
  const auto& degrees = res.machine.at("results").at("degrees");
  REQUIRE(degrees.size() == 2);
  for (Index n = 1; n <= 2; ++n) {
    const CartanReport expect = complex.verifyCartan(n);
    const auto& got = degrees.at(static_cast<std::size_t>(n - 1));
    REQUIRE(got.at("degree") == n);
    REQUIRE(got.at("homotopy") == expect.homotopy);
    REQUIRE(got.at("theta_bracket") == expect.thetaBracket);
    REQUIRE(got.at("theta_iota") == expect.thetaIota);
    REQUIRE(got.at("theta_boundary") == expect.thetaBoundary);
    REQUIRE(got.at("square_zero") == expect.squareZero);
    allOk = allOk && expect.all();
  }
  REQUIRE(res.machine.at("results").at("ok") == allOk);
  REQUIRE(res.exitCode == (allOk ? kExitOk : kExitMath));
}

TEST_CASE("cartan command reports failures and exits with the math code",
          "[commands][cartan]") {
  const Document doc = parseDocument(kJacobiViolatingDoc);
  CommandContext ctx;
  ctx.userDoc = &doc;

  const CommandResult res = cmdCartan(ctx, "bad4", "trivial", 2);
  REQUIRE(res.exitCode == kExitMath);
  REQUIRE(res.machine.at("results").at("ok") == false);

  const auto& degrees = res.machine.at("results").at("degrees");
  REQUIRE(degrees.at(0).at("theta_bracket") == false);
  REQUIRE(degrees.at(0).at("square_zero") == true);
  REQUIRE(degrees.at(1).at("theta_bracket") == false);
  REQUIRE(degrees.at(1).at("theta_boundary") == false);
  REQUIRE(degrees.at(1).at("square_zero") == false);
  REQUIRE(degrees.at(1).at("ok") == false);
  REQUIRE_THAT(res.human, Catch::Matchers::ContainsSubstring("square-zero FAIL"));

  // The same report, recomputed directly against the library.
  const HomLieAlgebra& alg = doc.algebras.at("bad4");
  ChainComplex complex(alg, HomModule::trivial(alg.dim()), 3);
  for (Index n = 1; n <= 2; ++n) {
    const CartanReport expect = complex.verifyCartan(n);
    const auto& got = degrees.at(static_cast<std::size_t>(n - 1));
    REQUIRE(got.at("theta_bracket") == expect.thetaBracket);
    REQUIRE(got.at("theta_boundary") == expect.thetaBoundary);
    REQUIRE(got.at("square_zero") == expect.squareZero);
  }
}

TEST_CASE("uce command reports the canonical construction", "[commands][uce]") {
  const CommandContext ctx;
  const CommandResult res = cmdUce(ctx, "example-4.6-K");

  REQUIRE(res.exitCode == kExitOk);
  const auto& r = res.machine.at("results");
  REQUIRE(r.at("dim") == 5);
  REQUIRE(r.at("wedge2_dim") == 10);
  REQUIRE(r.at("relations_dim") == 0);
  REQUIRE(r.at("uce_dim") == 10);
  REQUIRE(r.at("kernel_dim") == 5);
  REQUIRE(r.at("h2_dim") == 5);
  REQUIRE(r.at("kernel_matches_h2") == true);
  REQUIRE(r.at("uce_perfect") == true);
  REQUIRE(r.at("extension_central") == true);

  REQUIRE_THROWS_AS(cmdUce(ctx, "remark-4.2-L"), std::invalid_argument);
}

TEST_CASE("ext-central command reports kernels and centrality", "[commands][ext]") {
  const CommandContext ctx;

  const CommandResult central = cmdExtCentral(ctx, "example-4.6-pi");
  REQUIRE(central.exitCode == kExitOk);
  const auto& c = central.machine.at("results");
  REQUIRE(c.at("total") == "example-4.6-K");
  REQUIRE(c.at("base") == "example-4.6-L");
  REQUIRE(c.at("kernel_dim") == 1);
  REQUIRE(c.at("kernel_basis") ==
          ordered_json::array({columnOfStrings({"1", "0", "0", "0", "0"})}));
  REQUIRE(c.at("central") == true);
  REQUIRE(c.at("alpha_central") == true);

  // A query command: a non-central extension still exits 0.
  const CommandResult loose = cmdExtCentral(ctx, "remark-4.2-pi");
  REQUIRE(loose.exitCode == kExitOk);
  REQUIRE(loose.machine.at("results").at("central") == false);
  REQUIRE(loose.machine.at("results").at("alpha_central") == true);
}

TEST_CASE("ext-compose command composes bundled extensions", "[commands][ext]") {
  const CommandContext ctx;
  const CommandResult res = cmdExtCompose(ctx, "example-4.6-pi", "example-4.6-rho");

  REQUIRE(res.exitCode == kExitOk);
  const auto& r = res.machine.at("results");
  REQUIRE(r.at("total") == "example-4.6-F");
  REQUIRE(r.at("base") == "example-4.6-L");
  REQUIRE(r.at("kernel_dim") == 2);
  REQUIRE(r.at("central") == false);
  REQUIRE(r.at("alpha_central") == true);

  REQUIRE_THROWS_AS(cmdExtCompose(ctx, "example-4.6-rho", "example-4.6-pi"),
                    std::invalid_argument);
}

TEST_CASE("ext-pullback command pulls an extension back along itself",
          "[commands][ext]") {
  const CommandContext ctx;
  const CommandResult res = cmdExtPullback(ctx, "example-4.6-pi", "example-4.6-pi");

  REQUIRE(res.exitCode == kExitOk);
  const auto& r = res.machine.at("results");
  REQUIRE(r.at("dim") == 6);
  REQUIRE(r.at("to_left_rank") == 5);
  REQUIRE(r.at("to_right_rank") == 5);
  REQUIRE(r.at("extension_over_right") == true);
  REQUIRE(r.at("kernel_dim") == 1);
  REQUIRE(r.at("central") == true);
  REQUIRE(r.at("alpha_central") == true);

  REQUIRE_THROWS_AS(cmdExtPullback(ctx, "example-4.6-pi", "example-4.6-rho"),
                    std::invalid_argument);
}

TEST_CASE("ext-pullback command reports a missing extension over the right leg",
          "[commands][ext]") {
  const Document doc = parseDocument(kPullbackDoc);
  CommandContext ctx;
  ctx.userDoc = &doc;

  const CommandResult res = cmdExtPullback(ctx, "collapse", "same");
  REQUIRE(res.exitCode == kExitOk);
  const auto& r = res.machine.at("results");
  REQUIRE(r.at("dim") == 2);
  REQUIRE(r.at("to_left_rank") == 2);
  REQUIRE(r.at("to_right_rank") == 0);
  REQUIRE(r.at("extension_over_right") == false);
  REQUIRE(!r.contains("kernel_dim"));
  REQUIRE_THAT(res.human, Catch::Matchers::ContainsSubstring("no extension over"));
}

TEST_CASE("ext-certificate command reports the verdict", "[commands][ext]") {
  const CommandContext ctx;
  const CommandResult res = cmdExtCertificate(ctx, "example-4.6-pi");

  REQUIRE(res.exitCode == kExitOk);
  const auto& r = res.machine.at("results");
  REQUIRE(r.at("verdict") == "inconclusive");
  REQUIRE(r.at("h1") == 0);
  REQUIRE(r.at("h2") == 5);
  REQUIRE(r.at("total_perfect") == true);

  // The certificate is defined only for central extensions.
  REQUIRE_THROWS_AS(cmdExtCertificate(ctx, "remark-4.2-pi"), std::invalid_argument);
}

TEST_CASE("ext-certificate command recognizes a universal central extension",
          "[commands][ext]") {
  const Document doc = parseDocument(kSl2Doc);
  CommandContext ctx;
  ctx.userDoc = &doc;

  const CommandResult res = cmdExtCertificate(ctx, "iden");
  REQUIRE(res.exitCode == kExitOk);
  const auto& r = res.machine.at("results");
  REQUIRE(r.at("verdict") == "universal-central");
  REQUIRE(r.at("h1") == 0);
  REQUIRE(r.at("h2") == 0);
  REQUIRE(r.at("total_perfect") == true);
}

TEST_CASE("classify2 command reports class data", "[commands][classify2]") {
  const CommandContext ctx;

  const CommandResult a = cmdClassify2(ctx, "prop-2.9-a");
  REQUIRE(a.exitCode == kExitOk);
  REQUIRE(a.machine.at("results").at("class") == "a");
  REQUIRE(a.machine.at("results").at("kind") == "abelian");
  REQUIRE(a.machine.at("results").at("params").empty());
  REQUIRE(a.machine.at("results").at("canonical_bracket") == columnOfStrings({"0", "0"}));

  const CommandResult b = cmdClassify2(ctx, "prop-2.9-b");
  REQUIRE(b.machine.at("results").at("class") == "b");
  REQUIRE(b.machine.at("results").at("kind") == "non-abelian-singular");
  REQUIRE(b.machine.at("results").at("params") == columnOfStrings({"0", "1"}));
  REQUIRE(b.machine.at("results").at("canonical_bracket") == columnOfStrings({"1", "0"}));
  REQUIRE(b.machine.at("results").at("canonical_alpha") ==
          ordered_json::array(
              {columnOfStrings({"0", "0"}), columnOfStrings({"0", "1"})}));

  const CommandResult c = cmdClassify2(ctx, "example-2.16-c");
  REQUIRE(c.machine.at("results").at("class") == "c");
  REQUIRE(c.machine.at("results").at("kind") == "non-abelian-invertible");
  REQUIRE(c.machine.at("results").at("params") == columnOfStrings({"1", "1"}));

  REQUIRE_THROWS_AS(cmdClassify2(ctx, "abelian-3"), std::invalid_argument);
}

TEST_CASE("paper-examples battery passes end to end", "[commands][battery]") {
  const CommandResult res = cmdPaperExamples();

  REQUIRE(res.exitCode == kExitOk);
  const auto& r = res.machine.at("results");
  REQUIRE(r.at("ok") == true);
  REQUIRE(r.at("total") == 26);
  REQUIRE(r.at("passed") == 26);
  REQUIRE(r.at("assertions").size() == 26);
  for (const auto& a : r.at("assertions")) {
    INFO(a.at("name").get<std::string>());
    REQUIRE(a.at("ok") == true);
    REQUIRE(a.at("detail").get<std::string>().empty());
  }
}

TEST_CASE("machine output is deterministic", "[commands]") {
  const CommandContext ctx;
  REQUIRE(cmdPaperExamples().machine.dump() == cmdPaperExamples().machine.dump());
  REQUIRE(cmdUce(ctx, "example-4.6-K").machine.dump() ==
          cmdUce(ctx, "example-4.6-K").machine.dump());
  REQUIRE(cmdHomology(ctx, "remark-4.2-L", "remark-4.2-kernel", 1).machine.dump() ==
          cmdHomology(ctx, "remark-4.2-L", "remark-4.2-kernel", 1).machine.dump());
}

TEST_CASE("user documents shadow bundled names and fall back otherwise",
          "[commands][document]") {
  const Document doc = parseDocument(kShadowDoc);
  CommandContext ctx;
  ctx.userDoc = &doc;

  // The user's 2-dimensional algebra wins over the bundled 5-dimensional one.
  const CommandResult shadowed = cmdInvariants(ctx, "example-4.6-K");
  REQUIRE(shadowed.machine.at("inputs").at("scope") == "document");
  REQUIRE(shadowed.machine.at("results").at("dim") == 2);
  REQUIRE(shadowed.machine.at("results").at("perfect") == false);

  // Names absent from the user document still resolve against the bundle.
  const CommandResult fallback = cmdInvariants(ctx, "example-4.6-F");
  REQUIRE(fallback.machine.at("results").at("dim") == 6);
}
