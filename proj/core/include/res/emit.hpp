#pragma once

// Renderers for query results: aligned text tables, JSON with stable field
// names, and Graphviz DOT for diagrams. All output is deterministic.

#include <string>
#include <string_view>

#include "res/decision.hpp"
#include "res/order.hpp"

namespace res {

enum class OutputFormat { kText, kJson, kDot };

std::string_view to_string(OutputFormat format);

struct CheckResult {
  ValidationReport validation;
  ConsistencyReport consistency;
  DisjunctionAudit disjunction;
};

// "a1: <e1, {Al1}>"
std::string describe(const Argument& argument);

std::string emit_check(const EvidenceStructure& structure, const CheckResult& result,
                       OutputFormat format);
std::string emit_condition(const ConditionedStructure& cond, std::string_view given,
                           OutputFormat format);
std::string emit_compare(const ConditionedStructure& cond, std::string_view given,
                         const ExplanationTrace& trace, OutputFormat format);
std::string emit_plausible(const ConditionedStructure& cond, std::string_view given,
                           const ConclusionSentence& p, Verdict complement_vs_p, OutputFormat format);
std::string emit_rank(const ConditionedStructure& cond, std::string_view given,
                      const Ranking& ranking, OutputFormat format);
std::string emit_diagram(const ConditionedStructure& cond, std::string_view given,
                         const HasseDiagram& diagram, OutputFormat format);
std::string emit_explain(const ConditionedStructure& cond, std::string_view given,
                         const ExplanationTrace& trace, OutputFormat format);

}  // namespace res
