#pragma once

// Conditioning an evidence structure on observed evidence: the arguments
// whose presumptions the evidence entails, and the closed relation
// restricted to them.

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "res/order.hpp"
#include "res/semantics.hpp"
#include "res/structure.hpp"

namespace res {

// Holds references to its structure and closure; both must outlive it.
// There is deliberately no way to condition a ConditionedStructure again:
// conditioning always starts from the original structure.
class ConditionedStructure {
 public:
  const EvidenceStructure& structure() const noexcept { return *structure_; }
  const OrderClosure& closure() const noexcept { return *closure_; }
  const EvidenceSentence& given() const noexcept { return given_; }

  // Argument-id order.
  const std::vector<ArgumentId>& triggered() const noexcept { return triggered_; }
  bool is_triggered(ArgumentId id) const;

  // The restricted relation: false unless both arguments are triggered.
  bool leq(ArgumentId a, ArgumentId b) const;

 private:
  friend ConditionedStructure condition(const EvidenceStructure&, const OrderClosure&,
                                        const EvidenceSentence&);
  ConditionedStructure(const EvidenceStructure& structure, const OrderClosure& closure,
                       EvidenceSentence given);

  const EvidenceStructure* structure_;
  const OrderClosure* closure_;
  EvidenceSentence given_;
  std::vector<ArgumentId> triggered_;
  boost::dynamic_bitset<std::uint64_t> member_;
};

// Throws EvidenceError when `given` is unsatisfiable and UsageError when it
// is over another frame or the closure belongs to another structure.
ConditionedStructure condition(const EvidenceStructure& structure, const OrderClosure& closure,
                               const EvidenceSentence& given);

std::vector<const Argument*> triggered_arguments(const ConditionedStructure& cond);

}  // namespace res
