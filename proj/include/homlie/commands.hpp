#ifndef HOMLIE_COMMANDS_HPP
#define HOMLIE_COMMANDS_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "homlie/document.hpp"
#include "homlie/extensions.hpp"

namespace homlie {

/// Process exit codes shared by the CLI and its tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitMath = 4;

/// Outcome of one command: a machine report (one JSON object), the
/// human-readable rendering of the same data, and the process exit code.
struct CommandResult {
  nlohmann::ordered_json machine;
  std::string human;
  int exitCode = kExitOk;
};

/// Name-resolution scope for commands: an optional user document consulted
/// first, then the built-in fixtures.
struct CommandContext {
  const Document* userDoc = nullptr;
};

/// Validates one named object, or every object of the active document.
CommandResult cmdValidate(const CommandContext& ctx, const std::optional<std::string>& name);

/// Center (dimension and basis), derived subalgebra dimension, perfectness
/// and multiplicativity of one algebra.
CommandResult cmdInvariants(const CommandContext& ctx, const std::string& algebra);

/// Homology of an algebra with coefficients in a named module ("trivial" for
/// the one-dimensional trivial module) at one degree.
CommandResult cmdHomology(const CommandContext& ctx, const std::string& algebra,
                          const std::string& module, Index degree);

/// Verifies the five structural identities of the twisted complex at every
/// degree from 1 to maxDegree.
CommandResult cmdCartan(const CommandContext& ctx, const std::string& algebra,
                        const std::string& module, Index maxDegree);

/// Universal central extension summary of a perfect algebra, with the
/// independently computed degree-2 homology dimension for comparison.
CommandResult cmdUce(const CommandContext& ctx, const std::string& algebra);

/// Centrality verdicts of the extension determined by a named morphism.
CommandResult cmdExtCentral(const CommandContext& ctx, const std::string& morphism);

/// Composite of two named extension morphisms with its centrality verdicts.
CommandResult cmdExtCompose(const CommandContext& ctx, const std::string& outer,
                            const std::string& inner);

/// Pullback of two named morphisms into a common target.
CommandResult cmdExtPullback(const CommandContext& ctx, const std::string& tau,
                             const std::string& pi);

/// Homological universality certificate of a named central extension.
CommandResult cmdExtCertificate(const CommandContext& ctx, const std::string& morphism);

/// Isomorphism class of a two-dimensional algebra with canonical form and
/// change of basis.
CommandResult cmdClassify2(const CommandContext& ctx, const std::string& algebra);

/// Runs the built-in worked-example battery; exit 0 iff every assertion holds.
CommandResult cmdPaperExamples();

}  // namespace homlie

#endif  // HOMLIE_COMMANDS_HPP
