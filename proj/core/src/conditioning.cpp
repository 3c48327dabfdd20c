#include "res/conditioning.hpp"

#include "res/error.hpp"

namespace res {

ConditionedStructure::ConditionedStructure(const EvidenceStructure& structure,
                                           const OrderClosure& closure, EvidenceSentence given)
    : structure_(&structure),
      closure_(&closure),
      given_(std::move(given)),
      member_(structure.size()) {
  for (const auto& a : structure.arguments()) {
    if (!implies(given_, a.presumption)) continue;
    triggered_.push_back(a.id);
    member_.set(a.id.index());
  }
}

bool ConditionedStructure::is_triggered(ArgumentId id) const {
  return id.index() < member_.size() && member_.test(id.index());
}

bool ConditionedStructure::leq(ArgumentId a, ArgumentId b) const {
  return is_triggered(a) && is_triggered(b) && closure_->leq(a, b);
}

ConditionedStructure condition(const EvidenceStructure& structure, const OrderClosure& closure,
                               const EvidenceSentence& given) {
  if (closure.size() != structure.size())
    throw UsageError("closure was not built from this structure");
  if (!same_frame(*given.frame(), *structure.evidence_frame()))
    throw UsageError("given evidence is not over the structure's evidence frame");
  if (!given.satisfiable())
    throw EvidenceError("inconsistent observations: the given evidence is unsatisfiable");
  return ConditionedStructure(structure, closure, given);
}

std::vector<const Argument*> triggered_arguments(const ConditionedStructure& cond) {
  std::vector<const Argument*> out;
  out.reserve(cond.triggered().size());
  for (auto id : cond.triggered()) out.push_back(&cond.structure().argument(id));
  return out;
}

}  // namespace res
