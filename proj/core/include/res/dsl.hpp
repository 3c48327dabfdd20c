#pragma once

// Line-oriented declaration language for evidence structures.
//
//   # comment
//   structure example1
//   evidence atoms: e1, e2
//   alternatives: Al1, Al2, Al3
//   options: same_presumption_equal=true
//   arg a1: e1 => {Al1}
//   refute r1: e2 => {Al1} singletons
//   rel: pres(e12) < pres(e1)
//   rel: a1 ~ a2
//
// Relations: `<=`, `<` (strict), `~` (equal); `>` and `>=` are accepted and
// normalized by swapping sides.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "res/error.hpp"
#include "res/structure.hpp"

namespace res {

struct OptionAssignment {
  std::string key;
  std::string value;
  SourceLocation location;

  friend bool operator==(const OptionAssignment& a, const OptionAssignment& b) {
    return a.key == b.key && a.value == b.value;
  }
};

struct ArgumentStatement {
  bool refutation = false;
  std::string label;  // may be empty for refutations
  std::string formula;
  std::string conclusion;
  std::optional<RefutationPolicy> policy;
  SourceLocation location;
  std::size_t formula_column = 0;
  std::size_t conclusion_column = 0;

  friend bool operator==(const ArgumentStatement& a, const ArgumentStatement& b) {
    return a.refutation == b.refutation && a.label == b.label && a.formula == b.formula &&
           a.conclusion == b.conclusion && a.policy == b.policy;
  }
};

struct RelationSide {
  bool presumption = false;  // pres(<formula>) versus an argument label
  std::string text;
  std::size_t column = 0;

  friend bool operator==(const RelationSide& a, const RelationSide& b) {
    return a.presumption == b.presumption && a.text == b.text;
  }
};

struct RelationStatement {
  RelationSide lower;
  RelationSide upper;
  RelationKind kind = RelationKind::kLeq;
  SourceLocation location;

  friend bool operator==(const RelationStatement& a, const RelationStatement& b) {
    return a.lower == b.lower && a.upper == b.upper && a.kind == b.kind;
  }
};

struct StructureDocument {
  std::string name;
  std::vector<std::string> atoms;
  std::vector<std::string> alternatives;
  std::vector<OptionAssignment> options;
  std::vector<ArgumentStatement> arguments;
  std::vector<RelationStatement> relations;

  friend bool operator==(const StructureDocument&, const StructureDocument&) = default;
};

// Parses and semantically checks a document. Throws ParseError carrying every
// located diagnostic; never returns a partially valid document.
StructureDocument parse_structure(std::string_view text);

std::string serialize(const StructureDocument& document);

// Applies `key=value` assignments; throws DeclarationError for unknown keys
// or malformed values.
StructureOptions apply_options(StructureOptions base, const std::vector<OptionAssignment>& assignments);

// Parses a command-line style `key=value` override.
OptionAssignment parse_option_assignment(std::string_view text);

// Builds the frozen structure, with `overrides` applied after the document's
// own options. Throws ParseError with located diagnostics.
EvidenceStructure build_structure(const StructureDocument& document,
                                  const std::vector<OptionAssignment>& overrides = {});

}  // namespace res
