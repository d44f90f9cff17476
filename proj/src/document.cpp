#include "homlie/document.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <sstream>
#include <utility>

namespace homlie {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw DocumentError(path + ": " + message);
}

const json& member(const json& obj, const std::string& path, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

void rejectUnknownKeys(const json& obj, const std::string& path,
                       const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) fail(path, "unknown key \"" + it.key() + "\"");
  }
}

Index parseDim(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) fail(path, "expected a non-negative integer");
  auto v = value.get<std::uint64_t>();
  if (v > 64) fail(path, "dimension too large");
  return static_cast<Index>(v);
}

Rational parseRationalJson(const json& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a rational string \"a/b\"");
  auto parsed = parseRational(value.get<std::string>());
  if (!parsed) fail(path, "malformed rational \"" + value.get<std::string>() + "\"");
  return *parsed;
}

RVector parseVector(const json& value, const std::string& path, Index expected) {
  if (!value.is_array()) fail(path, "expected an array of rationals");
  if (static_cast<Index>(value.size()) != expected)
    fail(path, "expected " + std::to_string(expected) + " entries");
  RVector v(expected);
  for (Index i = 0; i < expected; ++i)
    v(i) = parseRationalJson(value[static_cast<std::size_t>(i)],
                             path + "[" + std::to_string(i) + "]");
  return v;
}

RMatrix parseMatrix(const json& value, const std::string& path, Index rows, Index cols) {
  if (!value.is_array()) fail(path, "expected an array of rows");
  if (static_cast<Index>(value.size()) != rows)
    fail(path, "expected " + std::to_string(rows) + " rows");
  RMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    m.row(r) = parseVector(value[static_cast<std::size_t>(r)],
                           path + "[" + std::to_string(r) + "]", cols)
                   .transpose();
  }
  return m;
}

HomLieAlgebra parseAlgebra(const json& value, const std::string& path) {
  if (!value.is_object()) fail(path, "expected an object");
  rejectUnknownKeys(value, path, {"dim", "labels", "brackets", "alpha"});
  const Index dim = parseDim(member(value, path, "dim"), path + ".dim");

  std::vector<std::string> labels;
  if (value.contains("labels")) {
    const json& raw = value["labels"];
    if (!raw.is_array() || static_cast<Index>(raw.size()) != dim)
      fail(path + ".labels", "expected " + std::to_string(dim) + " strings");
    for (const auto& l : raw) {
      if (!l.is_string()) fail(path + ".labels", "expected strings");
      labels.push_back(l.get<std::string>());
    }
  }

  std::vector<RMatrix> ad(static_cast<std::size_t>(dim), RMatrix::Zero(dim, dim));
  const json& brackets = member(value, path, "brackets");
  if (!brackets.is_array()) fail(path + ".brackets", "expected an array");
  std::set<std::pair<Index, Index>> seen;
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string bpath = path + ".brackets[" + std::to_string(b) + "]";
    const json& entry = brackets[b];
    if (!entry.is_object()) fail(bpath, "expected an object");
    rejectUnknownKeys(entry, bpath, {"i", "j", "coefficients"});
    const json& iRaw = member(entry, bpath, "i");
    const json& jRaw = member(entry, bpath, "j");
    if (!iRaw.is_number_unsigned() || !jRaw.is_number_unsigned())
      fail(bpath, "indices must be positive integers");
    const Index i = static_cast<Index>(iRaw.get<std::uint64_t>());
    const Index j = static_cast<Index>(jRaw.get<std::uint64_t>());
    if (i < 1 || i > dim || j < 1 || j > dim) fail(bpath, "index out of range");
    if (i == j) fail(bpath, "diagonal bracket [e_i, e_i] must be zero; omit it");
    RVector c = parseVector(member(entry, bpath, "coefficients"), bpath + ".coefficients", dim);
    const auto key = std::minmax(i, j);
    if (!seen.insert(key).second) fail(bpath, "duplicate bracket pair");
    // Skew-symmetric completion: the (j, i) bracket is filled automatically.
    ad[static_cast<std::size_t>(i - 1)].col(j - 1) = c;
    ad[static_cast<std::size_t>(j - 1)].col(i - 1) = -c;
  }

  RMatrix alpha = parseMatrix(member(value, path, "alpha"), path + ".alpha", dim, dim);
  return HomLieAlgebra(std::move(ad), std::move(alpha), std::move(labels));
}

}  // namespace

Document parseDocument(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("document", "top level must be an object");
  rejectUnknownKeys(root, "document", {"schema_version", "algebras", "modules", "morphisms"});

  Document doc;
  const json& version = member(root, "document", "schema_version");
  if (!version.is_string() || version.get<std::string>() != "1")
    fail("document.schema_version", "expected \"1\"");
  doc.schemaVersion = "1";

  if (root.contains("algebras")) {
    const json& algebras = root["algebras"];
    if (!algebras.is_object()) fail("document.algebras", "expected an object");
    for (auto it = algebras.begin(); it != algebras.end(); ++it) {
      doc.algebras.emplace(it.key(), parseAlgebra(it.value(), "algebras." + it.key()));
    }
  }

  if (root.contains("modules")) {
    const json& modules = root["modules"];
    if (!modules.is_object()) fail("document.modules", "expected an object");
    for (auto it = modules.begin(); it != modules.end(); ++it) {
      const std::string path = "modules." + it.key();
      if (doc.algebras.count(it.key())) fail(path, "name already used by an algebra");
      const json& value = it.value();
      if (!value.is_object()) fail(path, "expected an object");
      rejectUnknownKeys(value, path, {"algebra", "alpha_m", "action"});
      const json& algebraName = member(value, path, "algebra");
      if (!algebraName.is_string()) fail(path + ".algebra", "expected an algebra name");
      auto algebraIt = doc.algebras.find(algebraName.get<std::string>());
      if (algebraIt == doc.algebras.end())
        fail(path + ".algebra", "unresolved algebra \"" + algebraName.get<std::string>() + "\"");
      const Index n = algebraIt->second.dim();
      const json& alphaRaw = member(value, path, "alpha_m");
      if (!alphaRaw.is_array()) fail(path + ".alpha_m", "expected an array of rows");
      const Index m = static_cast<Index>(alphaRaw.size());
      RMatrix alphaM = parseMatrix(alphaRaw, path + ".alpha_m", m, m);
      const json& actionRaw = member(value, path, "action");
      if (!actionRaw.is_array() || static_cast<Index>(actionRaw.size()) != n)
        fail(path + ".action", "expected one matrix per algebra basis vector");
      std::vector<RMatrix> rho;
      rho.reserve(static_cast<std::size_t>(n));
      for (Index i = 0; i < n; ++i) {
        rho.push_back(parseMatrix(actionRaw[static_cast<std::size_t>(i)],
                                  path + ".action[" + std::to_string(i) + "]", m, m));
      }
      doc.modules.emplace(it.key(),
                          Document::ModuleEntry{algebraName.get<std::string>(),
                                                HomModule(n, std::move(alphaM), std::move(rho))});
    }
  }

  if (root.contains("morphisms")) {
    const json& morphisms = root["morphisms"];
    if (!morphisms.is_object()) fail("document.morphisms", "expected an object");
    for (auto it = morphisms.begin(); it != morphisms.end(); ++it) {
      const std::string path = "morphisms." + it.key();
      if (doc.algebras.count(it.key())) fail(path, "name already used by an algebra");
      if (doc.modules.count(it.key())) fail(path, "name already used by a module");
      const json& value = it.value();
      if (!value.is_object()) fail(path, "expected an object");
      rejectUnknownKeys(value, path, {"source", "target", "matrix"});
      const json& sourceName = member(value, path, "source");
      const json& targetName = member(value, path, "target");
      if (!sourceName.is_string()) fail(path + ".source", "expected an algebra name");
      if (!targetName.is_string()) fail(path + ".target", "expected an algebra name");
      auto sourceIt = doc.algebras.find(sourceName.get<std::string>());
      if (sourceIt == doc.algebras.end())
        fail(path + ".source", "unresolved algebra \"" + sourceName.get<std::string>() + "\"");
      auto targetIt = doc.algebras.find(targetName.get<std::string>());
      if (targetIt == doc.algebras.end())
        fail(path + ".target", "unresolved algebra \"" + targetName.get<std::string>() + "\"");
      RMatrix matrix = parseMatrix(member(value, path, "matrix"), path + ".matrix",
                                   targetIt->second.dim(), sourceIt->second.dim());
      doc.morphisms.emplace(it.key(),
                            Document::MorphismEntry{sourceName.get<std::string>(),
                                                    targetName.get<std::string>(),
                                                    std::move(matrix)});
    }
  }

  return doc;
}

std::vector<ObjectIssue> validateDocument(const Document& doc) {
  std::vector<ObjectIssue> issues;
  for (const auto& [name, algebra] : doc.algebras) {
    ValidationReport report = validate(algebra);
    if (!report.ok()) issues.push_back({"algebras." + name, std::move(report)});
  }
  for (const auto& [name, entry] : doc.modules) {
    const HomLieAlgebra& algebra = doc.algebras.at(entry.algebraName);
    ValidationReport report = checkAction(algebra, entry.module.action());
    if (!report.ok()) issues.push_back({"modules." + name, std::move(report)});
  }
  for (const auto& [name, entry] : doc.morphisms) {
    ValidationReport report = checkMorphism(resolveMorphism(doc, entry));
    if (!report.ok()) issues.push_back({"morphisms." + name, std::move(report)});
  }
  return issues;
}

Morphism resolveMorphism(const Document& doc, const Document::MorphismEntry& entry) {
  return Morphism{doc.algebras.at(entry.sourceName), doc.algebras.at(entry.targetName),
                  entry.matrix};
}

std::string serializeDocument(const Document& doc) {
  ordered_json root;
  root["schema_version"] = doc.schemaVersion;

  ordered_json algebras = ordered_json::object();
  for (const auto& [name, algebra] : doc.algebras) {
    ordered_json a;
    a["dim"] = algebra.dim();
    if (!algebra.labels().empty()) a["labels"] = algebra.labels();
    ordered_json brackets = ordered_json::array();
    for (Index i = 0; i < algebra.dim(); ++i) {
      for (Index j = i + 1; j < algebra.dim(); ++j) {
        RVector c = algebra.bracketBasis(i, j);
        if (isZeroMatrix(c)) continue;
        ordered_json entry;
        entry["i"] = i + 1;
        entry["j"] = j + 1;
        ordered_json coefficients = ordered_json::array();
        for (Index k = 0; k < algebra.dim(); ++k) coefficients.push_back(formatRational(c(k)));
        entry["coefficients"] = std::move(coefficients);
        brackets.push_back(std::move(entry));
      }
    }
    a["brackets"] = std::move(brackets);
    ordered_json alpha = ordered_json::array();
    for (Index r = 0; r < algebra.dim(); ++r) {
      ordered_json row = ordered_json::array();
      for (Index c = 0; c < algebra.dim(); ++c) row.push_back(formatRational(algebra.alpha()(r, c)));
      alpha.push_back(std::move(row));
    }
    a["alpha"] = std::move(alpha);
    algebras[name] = std::move(a);
  }
  root["algebras"] = std::move(algebras);

  ordered_json modules = ordered_json::object();
  for (const auto& [name, entry] : doc.modules) {
    ordered_json m;
    m["algebra"] = entry.algebraName;
    const Index dim = entry.module.dim();
    ordered_json alphaM = ordered_json::array();
    for (Index r = 0; r < dim; ++r) {
      ordered_json row = ordered_json::array();
      for (Index c = 0; c < dim; ++c) row.push_back(formatRational(entry.module.alphaM()(r, c)));
      alphaM.push_back(std::move(row));
    }
    m["alpha_m"] = std::move(alphaM);
    ordered_json action = ordered_json::array();
    for (Index i = 0; i < entry.module.algebraDim(); ++i) {
      ordered_json mat = ordered_json::array();
      for (Index r = 0; r < dim; ++r) {
        ordered_json row = ordered_json::array();
        for (Index c = 0; c < dim; ++c) row.push_back(formatRational(entry.module.rho(i)(r, c)));
        mat.push_back(std::move(row));
      }
      action.push_back(std::move(mat));
    }
    m["action"] = std::move(action);
    modules[name] = std::move(m);
  }
  root["modules"] = std::move(modules);

  ordered_json morphisms = ordered_json::object();
  for (const auto& [name, entry] : doc.morphisms) {
    ordered_json m;
    m["source"] = entry.sourceName;
    m["target"] = entry.targetName;
    ordered_json matrix = ordered_json::array();
    for (Index r = 0; r < entry.matrix.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (Index c = 0; c < entry.matrix.cols(); ++c)
        row.push_back(formatRational(entry.matrix(r, c)));
      matrix.push_back(std::move(row));
    }
    m["matrix"] = std::move(matrix);
    morphisms[name] = std::move(m);
  }
  root["morphisms"] = std::move(morphisms);

  return root.dump(2) + "\n";
}

namespace {

const char* const kFixtureJson = R"FIXTURES({
  "schema_version": "1",
  "algebras": {
    "remark-4.2-L": {
      "dim": 2,
      "labels": ["a1", "a2"],
      "brackets": [
        {"i": 1, "j": 2, "coefficients": ["1", "0"]}
      ],
      "alpha": [["0", "0"], ["0", "0"]]
    },
    "remark-4.2-K": {
      "dim": 3,
      "labels": ["b1", "b2", "b3"],
      "brackets": [
        {"i": 1, "j": 2, "coefficients": ["1", "0", "0"]},
        {"i": 1, "j": 3, "coefficients": ["1", "0", "0"]},
        {"i": 2, "j": 3, "coefficients": ["0", "1", "0"]}
      ],
      "alpha": [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]
    },
    "example-4.6-L": {
      "dim": 4,
      "labels": ["a1", "a2", "a3", "a4"],
      "brackets": [
        {"i": 1, "j": 3, "coefficients": ["0", "0", "0", "1"]},
        {"i": 1, "j": 4, "coefficients": ["0", "0", "1", "0"]},
        {"i": 2, "j": 3, "coefficients": ["1", "0", "0", "0"]},
        {"i": 2, "j": 4, "coefficients": ["0", "1", "0", "0"]}
      ],
      "alpha": [
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"]
      ]
    },
    "example-4.6-K": {
      "dim": 5,
      "labels": ["b1", "b2", "b3", "b4", "b5"],
      "brackets": [
        {"i": 2, "j": 3, "coefficients": ["1", "0", "0", "0", "0"]},
        {"i": 2, "j": 4, "coefficients": ["0", "0", "0", "0", "1"]},
        {"i": 2, "j": 5, "coefficients": ["0", "0", "0", "1", "0"]},
        {"i": 3, "j": 4, "coefficients": ["0", "1", "0", "0", "0"]},
        {"i": 3, "j": 5, "coefficients": ["0", "0", "1", "0", "0"]}
      ],
      "alpha": [
        ["0", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0"]
      ]
    },
    "example-4.6-F": {
      "dim": 6,
      "labels": ["e1", "e2", "e3", "e4", "e5", "e6"],
      "brackets": [
        {"i": 2, "j": 3, "coefficients": ["1", "0", "0", "0", "0", "0"]},
        {"i": 2, "j": 4, "coefficients": ["1", "0", "0", "0", "0", "0"]},
        {"i": 2, "j": 5, "coefficients": ["1", "0", "0", "0", "0", "0"]},
        {"i": 3, "j": 4, "coefficients": ["0", "1", "0", "0", "0", "0"]},
        {"i": 3, "j": 5, "coefficients": ["0", "0", "0", "0", "0", "1"]},
        {"i": 3, "j": 6, "coefficients": ["0", "0", "0", "0", "1", "0"]},
        {"i": 4, "j": 5, "coefficients": ["0", "0", "1", "0", "0", "0"]},
        {"i": 4, "j": 6, "coefficients": ["0", "0", "0", "1", "0", "0"]},
        {"i": 5, "j": 6, "coefficients": ["1", "0", "0", "0", "0", "0"]}
      ],
      "alpha": [
        ["0", "0", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "0"]
      ]
    },
    "example-2.16-c": {
      "dim": 2,
      "labels": ["e", "f"],
      "brackets": [
        {"i": 1, "j": 2, "coefficients": ["1", "0"]}
      ],
      "alpha": [["1", "1"], ["0", "1"]]
    },
    "prop-2.9-a": {
      "dim": 2,
      "labels": ["a1", "a2"],
      "brackets": [],
      "alpha": [["1", "2"], ["3", "4"]]
    },
    "prop-2.9-b": {
      "dim": 2,
      "labels": ["a1", "a2"],
      "brackets": [
        {"i": 1, "j": 2, "coefficients": ["1", "0"]}
      ],
      "alpha": [["0", "0"], ["0", "1"]]
    },
    "prop-2.9-c": {
      "dim": 2,
      "labels": ["a1", "a2"],
      "brackets": [
        {"i": 1, "j": 2, "coefficients": ["1", "0"]}
      ],
      "alpha": [["2", "3"], ["0", "1"]]
    },
    "abelian-3": {
      "dim": 3,
      "labels": ["x1", "x2", "x3"],
      "brackets": [],
      "alpha": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    }
  },
  "modules": {
    "remark-4.2-kernel": {
      "algebra": "remark-4.2-L",
      "alpha_m": [["0"]],
      "action": [[["-1"]], [["-1"]]]
    }
  },
  "morphisms": {
    "remark-4.2-pi": {
      "source": "remark-4.2-K",
      "target": "remark-4.2-L",
      "matrix": [
        ["0", "1", "0"],
        ["0", "0", "1"]
      ]
    },
    "example-4.6-pi": {
      "source": "example-4.6-K",
      "target": "example-4.6-L",
      "matrix": [
        ["0", "1", "0", "0", "0"],
        ["0", "0", "1", "0", "0"],
        ["0", "0", "0", "1", "0"],
        ["0", "0", "0", "0", "1"]
      ]
    },
    "example-4.6-rho": {
      "source": "example-4.6-F",
      "target": "example-4.6-K",
      "matrix": [
        ["0", "1", "0", "0", "0", "0"],
        ["0", "0", "1", "0", "0", "0"],
        ["0", "0", "0", "1", "0", "0"],
        ["0", "0", "0", "0", "1", "0"],
        ["0", "0", "0", "0", "0", "1"]
      ]
    }
  }
})FIXTURES";

}  // namespace

const Document& builtinFixtures() {
  static const Document fixtures = [] {
    Document doc = parseDocument(kFixtureJson);
    if (!validateDocument(doc).empty())
      throw std::logic_error("builtinFixtures: fixture document fails validation");
    return doc;
  }();
  return fixtures;
}

}  // namespace homlie
