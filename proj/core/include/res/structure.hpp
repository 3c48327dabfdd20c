#pragma once

// Evidence structures: the argument set with its declared strength
// relationships, refutation conversion, and the optional argument-generation
// passes (conjunction rule, disjunction closure).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "res/semantics.hpp"

namespace res {

struct ArgumentId {
  std::uint32_t value = 0;

  friend auto operator<=>(const ArgumentId&, const ArgumentId&) = default;
  std::size_t index() const noexcept { return value; }
};

enum class Origin { kDeclared, kRefutationExpansion, kConjunctionRule, kDisjunctionClosure };

std::string_view to_string(Origin origin);

struct ConjunctionParents {
  ArgumentId left;
  ArgumentId right;
};

struct Argument {
  ArgumentId id;
  std::string label;
  EvidenceSentence presumption;
  std::string presumption_text;
  ConclusionSentence conclusion;
  std::vector<Origin> origins;
  // Labels of later declarations that merged into this argument.
  std::vector<std::string> aliases;
  // Set for conjunction-rule arguments (possibly several after merging).
  std::vector<ConjunctionParents> conjunction_parents;

  bool has_origin(Origin origin) const;
  // Declared or refutation-expanded: the designer-supplied argument set.
  bool is_designer_supplied() const;
};

enum class RefutationPolicy { kSingletons, kComplementSet };

std::string_view to_string(RefutationPolicy policy);

enum class RelationKind { kLeq, kStrict, kEqual };

std::string_view symbol(RelationKind kind);

struct PresumptionRef {
  EvidenceSentence sentence;
  std::string text;
};

struct RelationDeclaration {
  enum class Level { kArgument, kPresumption };

  Level level = Level::kArgument;
  RelationKind kind = RelationKind::kLeq;
  // Level::kArgument: argument labels, resolved when the structure is built.
  std::string lower_label;
  std::string upper_label;
  // Level::kPresumption: the two sentences; expands to every pair of
  // arguments carrying exactly these presumptions.
  std::optional<PresumptionRef> lower_presumption;
  std::optional<PresumptionRef> upper_presumption;

  static RelationDeclaration arguments(RelationKind kind, std::string lower, std::string upper);
  static RelationDeclaration presumptions(RelationKind kind, PresumptionRef lower,
                                          PresumptionRef upper);

  // "a1 < a2" or "pres(e12) < pres(e13)".
  std::string describe() const;
};

struct StructureOptions {
  bool same_presumption_equal = true;
  bool conjunction_arguments = false;
  bool conjunction_lifting = false;
  bool disjunction_closure = false;
  std::size_t disjunction_closure_cap = 512;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return errors.empty(); }
};

struct DisjunctionClosureResult {
  std::vector<ArgumentId> added;
  bool truncated = false;
};

struct DisjunctionAudit {
  bool satisfied = true;
  std::size_t missing = 0;
  // First few argument pairs whose disjunctive argument is absent.
  std::vector<std::pair<ArgumentId, ArgumentId>> examples;
};

class StructureBuilder;

class EvidenceStructure {
 public:
  const std::string& name() const noexcept { return name_; }
  const EvidenceFramePtr& evidence_frame() const noexcept { return evidence_frame_; }
  const ConclusionFramePtr& conclusion_frame() const noexcept { return conclusion_frame_; }
  const std::vector<Argument>& arguments() const noexcept { return arguments_; }
  const std::vector<RelationDeclaration>& declarations() const noexcept { return declarations_; }
  const StructureOptions& options() const noexcept { return options_; }
  bool disjunction_truncated() const noexcept { return disjunction_truncated_; }

  std::size_t size() const noexcept { return arguments_.size(); }
  // Throws UsageError for an unknown id.
  const Argument& argument(ArgumentId id) const;
  // Resolves labels and aliases.
  std::optional<ArgumentId> find(std::string_view label) const;
  // Semantic lookup of (presumption, conclusion).
  std::optional<ArgumentId> find(const EvidenceSentence& presumption,
                                 const ConclusionSentence& conclusion) const;
  std::vector<ArgumentId> with_presumption(const EvidenceSentence& presumption) const;

  ValidationReport validate() const;

 private:
  friend class StructureBuilder;
  EvidenceStructure() = default;

  static std::size_t key(const EvidenceSentence& e, const ConclusionSentence& p);

  std::string name_;
  EvidenceFramePtr evidence_frame_;
  ConclusionFramePtr conclusion_frame_;
  std::vector<Argument> arguments_;
  std::vector<RelationDeclaration> declarations_;
  StructureOptions options_;
  bool disjunction_truncated_ = false;
  std::unordered_map<std::string, ArgumentId> labels_;
  std::unordered_multimap<std::size_t, ArgumentId> by_content_;
};

// Reports whether every argument pair has its disjunctive counterpart
// <e1 | e2, p1 u p2> in the structure.
DisjunctionAudit audit_disjunction_constraint(const EvidenceStructure& structure);

class StructureBuilder {
 public:
  StructureBuilder(std::string name, EvidenceFramePtr evidence, ConclusionFramePtr conclusions,
                   StructureOptions options = {});

  StructureOptions& options() noexcept { return structure_.options_; }
  const EvidenceStructure& peek() const noexcept { return structure_; }

  // Adds <e, p>; an existing semantically equal argument absorbs the new one
  // and its label becomes an alias. Throws DeclarationError when e is
  // unsatisfiable, p is empty, or the label is already taken.
  ArgumentId add_support(const EvidenceSentence& presumption, const ConclusionSentence& conclusion,
                         std::string label = {}, std::string presumption_text = {});

  // Converts "e refutes p" into supports for the rest of the frame.
  std::vector<ArgumentId> add_refutation(const EvidenceSentence& presumption,
                                         const ConclusionSentence& refuted,
                                         RefutationPolicy policy = RefutationPolicy::kSingletons,
                                         std::string label = {},
                                         std::string presumption_text = {});

  void declare(RelationDeclaration declaration);

  // Single pass over designer-supplied arguments: every unordered pair with a
  // common conclusion yields <e' & e'', p>. No-op unless the option is set.
  std::vector<ArgumentId> generate_conjunction_arguments();

  // Adds <e1 | e2, p1 u p2> to a fixpoint or until the cap is reached.
  // No-op unless the option is set.
  DisjunctionClosureResult apply_disjunction_closure();

  ValidationReport validate() const { return structure_.validate(); }

  // Runs the enabled generation passes that have not run yet, validates,
  // and returns the frozen structure. Throws DeclarationError on errors.
  EvidenceStructure build() &&;
  EvidenceStructure build() const&;

 private:
  ArgumentId insert(const EvidenceSentence& presumption, const ConclusionSentence& conclusion,
                    std::string label, std::string presumption_text, Origin origin,
                    std::optional<ConjunctionParents> parents, bool* created);
  void run_pending_passes();

  EvidenceStructure structure_;
  bool conjunction_done_ = false;
  bool disjunction_done_ = false;
};

}  // namespace res
