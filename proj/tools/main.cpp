#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "homlie/commands.hpp"

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw homlie::DocumentError("cannot open document file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emitError(bool json, const std::string& type, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  if (json) {
    nlohmann::ordered_json out;
    out["error"] = {{"type", type}, {"message", message}};
    std::cout << out.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homlie: exact-arithmetic calculator for finite-dimensional multiplicative "
               "Hom-Lie algebras over Q"};
  app.require_subcommand(1);

  std::string docPath;
  bool jsonOut = false;
  bool noValidate = false;
  app.add_option("--doc", docPath,
                 "JSON document with named algebras, modules and morphisms");
  app.add_flag("--json", jsonOut, "emit one machine-readable JSON object on stdout");
  app.add_flag("--no-validate", noValidate, "skip axiom validation of the loaded document");

  std::string validateName;
  std::string algebraName;
  std::string moduleName = "trivial";
  std::string morphismName;
  std::string outerName, innerName;
  std::string tauName, piName;
  long homologyDegree = 1;
  long cartanDegree = 3;

  CLI::App* validateCmd =
      app.add_subcommand("validate", "check the axioms of one named object or all objects");
  validateCmd->fallthrough();
  validateCmd->add_option("name", validateName, "object name (default: every object)");

  CLI::App* invariantsCmd = app.add_subcommand(
      "invariants", "center, derived subalgebra, perfectness and multiplicativity");
  invariantsCmd->fallthrough();
  invariantsCmd->add_option("algebra", algebraName, "algebra name")->required();

  CLI::App* homologyCmd =
      app.add_subcommand("homology", "twisted homology at one degree");
  homologyCmd->fallthrough();
  homologyCmd->add_option("algebra", algebraName, "algebra name")->required();
  homologyCmd->add_option("module", moduleName, "coefficient module name (default: trivial)");
  homologyCmd->add_option("--degree", homologyDegree, "homology degree (default: 1)")
      ->check(CLI::Range(0L, 64L));

  CLI::App* cartanCmd = app.add_subcommand(
      "cartan", "verify the structural identities of the twisted complex");
  cartanCmd->fallthrough();
  cartanCmd->add_option("algebra", algebraName, "algebra name")->required();
  cartanCmd->add_option("module", moduleName, "coefficient module name (default: trivial)");
  cartanCmd->add_option("--degree", cartanDegree, "largest degree to verify (default: 3)")
      ->check(CLI::Range(1L, 64L));

  CLI::App* uceCmd =
      app.add_subcommand("uce", "universal central extension of a perfect algebra");
  uceCmd->fallthrough();
  uceCmd->add_option("algebra", algebraName, "algebra name")->required();

  CLI::App* extCmd = app.add_subcommand("ext", "extension computations");
  extCmd->fallthrough();
  extCmd->require_subcommand(1);

  CLI::App* extCentralCmd =
      extCmd->add_subcommand("central", "centrality verdicts of one extension");
  extCentralCmd->fallthrough();
  extCentralCmd->add_option("morphism", morphismName, "projection morphism name")->required();

  CLI::App* extComposeCmd =
      extCmd->add_subcommand("compose", "composite of two extensions");
  extComposeCmd->fallthrough();
  extComposeCmd->add_option("outer", outerName, "outer projection (K -> L)")->required();
  extComposeCmd->add_option("inner", innerName, "inner projection (F -> K)")->required();

  CLI::App* extPullbackCmd =
      extCmd->add_subcommand("pullback", "pullback of two morphisms into a common target");
  extPullbackCmd->fallthrough();
  extPullbackCmd->add_option("tau", tauName, "morphism A -> L")->required();
  extPullbackCmd->add_option("pi", piName, "surjective morphism K -> L")->required();

  CLI::App* extCertificateCmd = extCmd->add_subcommand(
      "certificate", "homological universality certificate of a central extension");
  extCertificateCmd->fallthrough();
  extCertificateCmd->add_option("morphism", morphismName, "projection morphism name")
      ->required();

  CLI::App* classifyCmd =
      app.add_subcommand("classify2", "isomorphism class of a two-dimensional algebra");
  classifyCmd->fallthrough();
  classifyCmd->add_option("algebra", algebraName, "algebra name")->required();

  CLI::App* paperCmd = app.add_subcommand(
      "paper-examples", "run the built-in worked-example battery");
  paperCmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? homlie::kExitOk : homlie::kExitUsage;
  }

  std::optional<homlie::Document> userDoc;
  homlie::CommandContext ctx;
  try {
    if (!docPath.empty()) {
      userDoc = homlie::parseDocument(readFile(docPath));
      ctx.userDoc = &*userDoc;
      if (!noValidate && !validateCmd->parsed()) {
        const auto issues = homlie::validateDocument(*userDoc);
        if (!issues.empty()) {
          std::string names;
          for (const auto& issue : issues) {
            if (!names.empty()) names += ", ";
            names += issue.object;
          }
          throw std::invalid_argument("document fails validation: " + names);
        }
      }
    }

    homlie::CommandResult result;
    if (validateCmd->parsed()) {
      std::optional<std::string> name;
      if (!validateName.empty()) name = validateName;
      result = homlie::cmdValidate(ctx, name);
    } else if (invariantsCmd->parsed()) {
      result = homlie::cmdInvariants(ctx, algebraName);
    } else if (homologyCmd->parsed()) {
      result = homlie::cmdHomology(ctx, algebraName, moduleName, homologyDegree);
    } else if (cartanCmd->parsed()) {
      result = homlie::cmdCartan(ctx, algebraName, moduleName, cartanDegree);
    } else if (uceCmd->parsed()) {
      result = homlie::cmdUce(ctx, algebraName);
    } else if (extCmd->parsed()) {
      if (extCentralCmd->parsed()) {
        result = homlie::cmdExtCentral(ctx, morphismName);
      } else if (extComposeCmd->parsed()) {
        result = homlie::cmdExtCompose(ctx, outerName, innerName);
      } else if (extPullbackCmd->parsed()) {
        result = homlie::cmdExtPullback(ctx, tauName, piName);
      } else {
        result = homlie::cmdExtCertificate(ctx, morphismName);
      }
    } else if (classifyCmd->parsed()) {
      result = homlie::cmdClassify2(ctx, algebraName);
    } else {
      result = homlie::cmdPaperExamples();
    }

    if (jsonOut)
      std::cout << result.machine.dump(2) << "\n";
    else
      std::cout << result.human << "\n";
    return result.exitCode;
  } catch (const homlie::DocumentError& e) {
    emitError(jsonOut, "document", e.what());
    return homlie::kExitParse;
  } catch (const homlie::WellDefinednessError& e) {
    emitError(jsonOut, "well-definedness", e.what());
    return homlie::kExitMath;
  } catch (const std::invalid_argument& e) {
    emitError(jsonOut, "validation", e.what());
    return homlie::kExitValidation;
  } catch (const std::logic_error& e) {
    emitError(jsonOut, "internal", e.what());
    return homlie::kExitMath;
  } catch (const std::runtime_error& e) {
    emitError(jsonOut, "math", e.what());
    return homlie::kExitMath;
  } catch (const std::exception& e) {
    emitError(jsonOut, "error", e.what());
    return homlie::kExitUsage;
  }
}
