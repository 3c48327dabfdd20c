#include "res/structure.hpp"

#include <algorithm>
#include <functional>

#include "res/error.hpp"

namespace res {

std::string_view to_string(Origin origin) {
  switch (origin) {
    case Origin::kDeclared: return "declared";
    case Origin::kRefutationExpansion: return "refutation-expansion";
    case Origin::kConjunctionRule: return "conjunction-rule";
    case Origin::kDisjunctionClosure: return "disjunction-closure";
  }
  return "unknown";
}

std::string_view to_string(RefutationPolicy policy) {
  return policy == RefutationPolicy::kSingletons ? "singletons" : "complement_set";
}

std::string_view symbol(RelationKind kind) {
  switch (kind) {
    case RelationKind::kLeq: return "<=";
    case RelationKind::kStrict: return "<";
    case RelationKind::kEqual: return "~";
  }
  return "?";
}

bool Argument::has_origin(Origin origin) const {
  return std::find(origins.begin(), origins.end(), origin) != origins.end();
}

bool Argument::is_designer_supplied() const {
  return has_origin(Origin::kDeclared) || has_origin(Origin::kRefutationExpansion);
}

RelationDeclaration RelationDeclaration::arguments(RelationKind kind, std::string lower,
                                                   std::string upper) {
  RelationDeclaration d;
  d.level = Level::kArgument;
  d.kind = kind;
  d.lower_label = std::move(lower);
  d.upper_label = std::move(upper);
  return d;
}

RelationDeclaration RelationDeclaration::presumptions(RelationKind kind, PresumptionRef lower,
                                                      PresumptionRef upper) {
  if (!same_frame(*lower.sentence.frame(), *upper.sentence.frame()))
    throw UsageError("presumption declaration mixes evidence frames");
  RelationDeclaration d;
  d.level = Level::kPresumption;
  d.kind = kind;
  if (lower.text.empty()) lower.text = to_formula(lower.sentence);
  if (upper.text.empty()) upper.text = to_formula(upper.sentence);
  d.lower_presumption = std::move(lower);
  d.upper_presumption = std::move(upper);
  return d;
}

std::string RelationDeclaration::describe() const {
  const std::string op(symbol(kind));
  if (level == Level::kArgument) return lower_label + " " + op + " " + upper_label;
  return "pres(" + lower_presumption->text + ") " + op + " pres(" + upper_presumption->text + ")";
}

// ---------------------------------------------------------------------------
// EvidenceStructure

std::size_t EvidenceStructure::key(const EvidenceSentence& e, const ConclusionSentence& p) {
  return e.hash() * 31 + std::hash<std::uint32_t>{}(p.members());
}

const Argument& EvidenceStructure::argument(ArgumentId id) const {
  if (id.index() >= arguments_.size())
    throw UsageError("unknown argument id " + std::to_string(id.value));
  return arguments_[id.index()];
}

std::optional<ArgumentId> EvidenceStructure::find(std::string_view label) const {
  auto it = labels_.find(std::string(label));
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArgumentId> EvidenceStructure::find(const EvidenceSentence& presumption,
                                                  const ConclusionSentence& conclusion) const {
  auto [first, last] = by_content_.equal_range(key(presumption, conclusion));
  for (auto it = first; it != last; ++it) {
    const Argument& a = arguments_[it->second.index()];
    if (a.presumption == presumption && a.conclusion == conclusion) return a.id;
  }
  return std::nullopt;
}

std::vector<ArgumentId> EvidenceStructure::with_presumption(
    const EvidenceSentence& presumption) const {
  std::vector<ArgumentId> out;
  for (const auto& a : arguments_)
    if (a.presumption == presumption) out.push_back(a.id);
  return out;
}

ValidationReport EvidenceStructure::validate() const {
  ValidationReport report;
  if (!evidence_frame_) report.errors.push_back("missing evidence frame");
  if (!conclusion_frame_) report.errors.push_back("missing conclusion frame");
  if (!report.ok()) return report;

  for (const auto& a : arguments_) {
    const std::string who = "argument '" + a.label + "'";
    if (!same_frame(*a.presumption.frame(), *evidence_frame_) ||
        !same_frame(*a.conclusion.frame(), *conclusion_frame_)) {
      report.errors.push_back(who + " is not over the structure's frames");
      continue;
    }
    if (!a.presumption.satisfiable()) report.errors.push_back(who + " has an unsatisfiable presumption");
    if (a.conclusion.is_empty()) report.errors.push_back(who + " supports the empty conclusion");
    if (a.conclusion.is_full())
      report.warnings.push_back(who + " supports every alternative (vacuous support)");
  }

  for (const auto& d : declarations_) {
    const std::string who = "declaration '" + d.describe() + "'";
    if (d.level == RelationDeclaration::Level::kArgument) {
      for (const auto* label : {&d.lower_label, &d.upper_label})
        if (!find(*label)) report.errors.push_back(who + " references unknown argument '" + *label + "'");
      continue;
    }
    for (const auto* ref : {&*d.lower_presumption, &*d.upper_presumption}) {
      if (!same_frame(*ref->sentence.frame(), *evidence_frame_)) {
        report.errors.push_back(who + " is not over the evidence frame");
      } else if (!ref->sentence.satisfiable()) {
        report.errors.push_back(who + " references unsatisfiable presumption '" + ref->text + "'");
      } else if (with_presumption(ref->sentence).empty()) {
        report.warnings.push_back(who + ": no argument has presumption '" + ref->text + "'");
      }
    }
  }

  if (options_.conjunction_lifting && !options_.conjunction_arguments)
    report.errors.push_back("option conjunction_lifting requires conjunction_arguments");
  if (options_.disjunction_closure_cap == 0)
    report.errors.push_back("option disjunction_closure_cap must be positive");
  if (disjunction_truncated_)
    report.warnings.push_back("disjunction closure stopped at the cap of " +
                              std::to_string(options_.disjunction_closure_cap) +
                              " generated arguments");
  return report;
}

DisjunctionAudit audit_disjunction_constraint(const EvidenceStructure& structure) {
  constexpr std::size_t kMaxExamples = 5;
  DisjunctionAudit audit;
  const auto& args = structure.arguments();
  for (std::size_t i = 0; i < args.size(); ++i) {
    for (std::size_t j = i + 1; j < args.size(); ++j) {
      const auto e = disjoin(args[i].presumption, args[j].presumption);
      const auto p = unite(args[i].conclusion, args[j].conclusion);
      if (structure.find(e, p)) continue;
      audit.satisfied = false;
      ++audit.missing;
      if (audit.examples.size() < kMaxExamples) audit.examples.emplace_back(args[i].id, args[j].id);
    }
  }
  return audit;
}

// ---------------------------------------------------------------------------
// StructureBuilder

namespace {

std::string wrap_if_disjunctive(const std::string& text) {
  return text.find('|') == std::string::npos ? text : "(" + text + ")";
}

}  // namespace

StructureBuilder::StructureBuilder(std::string name, EvidenceFramePtr evidence,
                                   ConclusionFramePtr conclusions, StructureOptions options) {
  if (!evidence || !conclusions) throw UsageError("structure needs both frames");
  structure_.name_ = std::move(name);
  structure_.evidence_frame_ = std::move(evidence);
  structure_.conclusion_frame_ = std::move(conclusions);
  structure_.options_ = options;
}

ArgumentId StructureBuilder::insert(const EvidenceSentence& presumption,
                                    const ConclusionSentence& conclusion, std::string label,
                                    std::string presumption_text, Origin origin,
                                    std::optional<ConjunctionParents> parents, bool* created) {
  if (!same_frame(*presumption.frame(), *structure_.evidence_frame_))
    throw UsageError("presumption is not over the structure's evidence frame");
  if (!same_frame(*conclusion.frame(), *structure_.conclusion_frame_))
    throw UsageError("conclusion is not over the structure's conclusion frame");
  if (!presumption.satisfiable())
    throw DeclarationError("argument presumption '" +
                           (presumption_text.empty() ? to_formula(presumption) : presumption_text) +
                           "' is unsatisfiable");
  if (conclusion.is_empty()) throw DeclarationError("argument supports the empty conclusion");
  if (!label.empty() && structure_.labels_.count(label) != 0)
    throw DeclarationError("duplicate argument label '" + label + "'");

  if (auto existing = structure_.find(presumption, conclusion)) {
    Argument& a = structure_.arguments_[existing->index()];
    if (!a.has_origin(origin)) a.origins.push_back(origin);
    if (parents) a.conjunction_parents.push_back(*parents);
    if (!label.empty()) {
      a.aliases.push_back(label);
      structure_.labels_.emplace(std::move(label), a.id);
    }
    if (created) *created = false;
    return a.id;
  }

  const ArgumentId id{static_cast<std::uint32_t>(structure_.arguments_.size())};
  if (label.empty()) {
    label = "#" + std::to_string(id.value);
    if (structure_.labels_.count(label) != 0) label += "'";
  }
  if (presumption_text.empty()) presumption_text = to_formula(presumption);
  Argument a{id,         label,    presumption, std::move(presumption_text),
             conclusion, {origin}, {},          {}};
  if (parents) a.conjunction_parents.push_back(*parents);
  structure_.labels_.emplace(a.label, id);
  structure_.by_content_.emplace(EvidenceStructure::key(presumption, conclusion), id);
  structure_.arguments_.push_back(std::move(a));
  if (created) *created = true;
  return id;
}

ArgumentId StructureBuilder::add_support(const EvidenceSentence& presumption,
                                         const ConclusionSentence& conclusion, std::string label,
                                         std::string presumption_text) {
  return insert(presumption, conclusion, std::move(label), std::move(presumption_text),
                Origin::kDeclared, std::nullopt, nullptr);
}

std::vector<ArgumentId> StructureBuilder::add_refutation(const EvidenceSentence& presumption,
                                                         const ConclusionSentence& refuted,
                                                         RefutationPolicy policy,
                                                         std::string label,
                                                         std::string presumption_text) {
  const ConclusionSentence rest = complement(refuted);
  if (rest.is_empty())
    throw DeclarationError("refutation of " + refuted.to_string() +
                           " leaves no alternative to support");
  std::vector<ArgumentId> ids;
  if (policy == RefutationPolicy::kComplementSet) {
    ids.push_back(insert(presumption, rest, std::move(label), std::move(presumption_text),
                         Origin::kRefutationExpansion, std::nullopt, nullptr));
    return ids;
  }
  const auto& alternatives = structure_.conclusion_frame_->alternatives();
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    if (!rest.contains(i)) continue;
    std::string item_label = label.empty() ? std::string{} : label + "." + alternatives[i];
    ids.push_back(insert(presumption, ConclusionSentence::singleton(rest.frame(), i),
                         std::move(item_label), presumption_text, Origin::kRefutationExpansion,
                         std::nullopt, nullptr));
  }
  return ids;
}

void StructureBuilder::declare(RelationDeclaration declaration) {
  structure_.declarations_.push_back(std::move(declaration));
}

std::vector<ArgumentId> StructureBuilder::generate_conjunction_arguments() {
  std::vector<ArgumentId> added;
  if (!structure_.options_.conjunction_arguments) return added;
  conjunction_done_ = true;

  // Snapshot: the rule ranges over the designer-supplied set only.
  std::vector<ArgumentId> base;
  for (const auto& a : structure_.arguments_)
    if (a.is_designer_supplied()) base.push_back(a.id);

  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      const Argument& left = structure_.arguments_[base[i].index()];
      const Argument& right = structure_.arguments_[base[j].index()];
      if (!(left.conclusion == right.conclusion)) continue;
      EvidenceSentence joint = conjoin(left.presumption, right.presumption);
      if (!joint.satisfiable()) continue;
      std::string label = left.label + "&" + right.label;
      if (structure_.labels_.count(label) != 0) label.clear();
      std::string text =
          wrap_if_disjunctive(left.presumption_text) + " & " + wrap_if_disjunctive(right.presumption_text);
      const ConclusionSentence conclusion = left.conclusion;
      const ConjunctionParents parents{left.id, right.id};
      bool created = false;
      const ArgumentId id = insert(joint, conclusion, std::move(label), std::move(text),
                                   Origin::kConjunctionRule, parents, &created);
      if (created) added.push_back(id);
    }
  }
  return added;
}

DisjunctionClosureResult StructureBuilder::apply_disjunction_closure() {
  DisjunctionClosureResult result;
  if (!structure_.options_.disjunction_closure) return result;
  disjunction_done_ = true;
  const std::size_t cap = structure_.options_.disjunction_closure_cap;

  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = structure_.arguments_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Argument& a = structure_.arguments_[i];
        const Argument& b = structure_.arguments_[j];
        EvidenceSentence e = disjoin(a.presumption, b.presumption);
        ConclusionSentence p = unite(a.conclusion, b.conclusion);
        if (structure_.find(e, p)) continue;
        if (result.added.size() >= cap) {
          result.truncated = true;
          structure_.disjunction_truncated_ = true;
          return result;
        }
        std::string label = a.label + "|" + b.label;
        if (structure_.labels_.count(label) != 0) label.clear();
        std::string text = a.presumption_text + " | " + b.presumption_text;
        result.added.push_back(insert(e, p, std::move(label), std::move(text),
                                      Origin::kDisjunctionClosure, std::nullopt, nullptr));
        changed = true;
      }
    }
  }
  return result;
}

void StructureBuilder::run_pending_passes() {
  if (structure_.options_.conjunction_arguments && !conjunction_done_)
    generate_conjunction_arguments();
  if (structure_.options_.disjunction_closure && !disjunction_done_) apply_disjunction_closure();
}

EvidenceStructure StructureBuilder::build() && {
  run_pending_passes();
  ValidationReport report = structure_.validate();
  if (!report.ok()) {
    std::string message = "invalid evidence structure:";
    for (const auto& e : report.errors) message += "\n  " + e;
    throw DeclarationError(message);
  }
  return std::move(structure_);
}

EvidenceStructure StructureBuilder::build() const& {
  StructureBuilder copy(*this);
  return std::move(copy).build();
}

}  // namespace res
