#ifndef HOMLIE_DOCUMENT_HPP
#define HOMLIE_DOCUMENT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "homlie/extensions.hpp"

namespace homlie {

/// Thrown for malformed documents: JSON syntax errors (with position),
/// structural problems, and unresolved references.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A named collection of algebras, modules and morphisms, the unit of input
 * for the command layer.  Parsed from a JSON document; see README.md for the
 * format.  Names are unique per section and references resolve within the
 * same document.
 */
struct Document {
  struct ModuleEntry {
    std::string algebraName;
    HomModule module;
  };
  struct MorphismEntry {
    std::string sourceName;
    std::string targetName;
    RMatrix matrix;
  };

  std::string schemaVersion = "1";
  std::map<std::string, HomLieAlgebra> algebras;
  std::map<std::string, ModuleEntry> modules;
  std::map<std::string, MorphismEntry> morphisms;
};

/**
 * Parses a document from JSON text.  Purely structural: shapes, name
 * uniqueness and reference resolution are enforced here (DocumentError on
 * any problem), while the mathematical axioms are checked separately by
 * validateDocument.
 */
Document parseDocument(const std::string& text);

/// One object that failed its axiom battery during document validation.
struct ObjectIssue {
  std::string object;  // "algebras.K", "modules.m", "morphisms.pi"
  ValidationReport report;
};

/// Runs validate / checkAction / checkMorphism on every object; empty result
/// means the document is mathematically valid.
std::vector<ObjectIssue> validateDocument(const Document& doc);

/// Canonical serialization; parse(serialize(doc)) reproduces doc and
/// serialize is idempotent on parsed documents byte-for-byte.
std::string serializeDocument(const Document& doc);

/// The built-in worked examples: algebras remark-4.2-L/K, example-4.6-L/K/F,
/// example-2.16-c, prop-2.9-a/b/c, abelian-3; module remark-4.2-kernel;
/// morphisms remark-4.2-pi, example-4.6-pi, example-4.6-rho.
const Document& builtinFixtures();

/// A morphism with its endpoint algebras resolved to values.
Morphism resolveMorphism(const Document& doc, const Document::MorphismEntry& entry);

}  // namespace homlie

#endif  // HOMLIE_DOCUMENT_HPP
