#include "res/query.hpp"

#include <array>
#include <utility>

#include "res/error.hpp"

namespace res {

namespace {

constexpr std::array<std::pair<std::string_view, Command>, 7> kCommands{{
    {"check", Command::kCheck},
    {"condition", Command::kCondition},
    {"compare", Command::kCompare},
    {"rank", Command::kRank},
    {"plausible", Command::kPlausible},
    {"diagram", Command::kDiagram},
    {"explain", Command::kExplain},
}};

void expect_operands(const QueryRequest& request, std::size_t count, std::string_view what) {
  if (request.operands.size() != count)
    throw UsageError(std::string(to_string(request.command)) + " expects " + std::string(what));
}

std::vector<ConclusionSentence> candidates_for(const EvidenceStructure& structure,
                                               const QueryRequest& request,
                                               CandidateMode fallback) {
  if (!request.operands.empty()) {
    std::vector<ConclusionSentence> out;
    for (const auto& text : request.operands)
      out.push_back(parse_conclusion(structure.conclusion_frame(), text));
    return out;
  }
  return candidate_set(structure.conclusion_frame(), request.candidates.value_or(fallback));
}

QueryResult execute(const StructureDocument& document, const QueryRequest& request) {
  const EvidenceStructure structure = build_structure(document, request.overrides);
  const OrderClosure closure = build_closure(structure);
  QueryResult result;

  if (request.command == Command::kCheck) {
    if (!request.operands.empty()) throw UsageError("check takes no operands");
    CheckResult check{structure.validate(), check_consistency(closure, structure),
                      audit_disjunction_constraint(structure)};
    result.output = emit_check(structure, check, request.format);
    result.exit_code = check.consistency.consistent() ? kExitOk : kExitInconsistent;
    return result;
  }

  if (!request.given)
    throw UsageError(std::string(to_string(request.command)) + " requires --given <formula>");
  const EvidenceSentence given = build_sentence(structure.evidence_frame(), *request.given);
  const ConditionedStructure cond = condition(structure, closure, given);
  const auto& frame = structure.conclusion_frame();
  const std::string_view given_text = *request.given;

  switch (request.command) {
    case Command::kCondition:
      if (!request.operands.empty()) throw UsageError("condition takes no operands");
      result.output = emit_condition(cond, given_text, request.format);
      break;
    case Command::kCompare:
    case Command::kExplain: {
      expect_operands(request, 2, "two conclusions, e.g. \"{Al1}\" \"{Al2}\"");
      const auto p1 = parse_conclusion(frame, request.operands[0]);
      const auto p2 = parse_conclusion(frame, request.operands[1]);
      const auto trace = explain(cond, p1, p2);
      result.output = request.command == Command::kCompare
                          ? emit_compare(cond, given_text, trace, request.format)
                          : emit_explain(cond, given_text, trace, request.format);
      break;
    }
    case Command::kPlausible: {
      expect_operands(request, 1, "one conclusion, e.g. \"{Al1}\"");
      const auto p = parse_conclusion(frame, request.operands[0]);
      is_plausible(cond, p);  // rejects empty and full sentences
      result.output =
          emit_plausible(cond, given_text, p, compare(cond, complement(p), p), request.format);
      break;
    }
    case Command::kRank:
      result.output = emit_rank(
          cond, given_text, rank(cond, candidates_for(structure, request, CandidateMode::kSingletons)),
          request.format);
      break;
    case Command::kDiagram:
      result.output = emit_diagram(
          cond, given_text,
          hasse(cond, candidates_for(structure, request, CandidateMode::kSingletonsAndComplements)),
          request.format);
      break;
    case Command::kCheck:
      break;
  }
  return result;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (auto [text, command] : kCommands)
    if (text == name) return command;
  return std::nullopt;
}

std::string_view to_string(Command command) {
  for (auto [text, c] : kCommands)
    if (c == command) return text;
  return "unknown";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "dot") return OutputFormat::kDot;
  return std::nullopt;
}

std::optional<CandidateMode> parse_candidate_mode(std::string_view name) {
  if (name == "singletons") return CandidateMode::kSingletons;
  if (name == "singletons+complements") return CandidateMode::kSingletonsAndComplements;
  if (name == "all") return CandidateMode::kAll;
  return std::nullopt;
}

QueryResult run_query(const StructureDocument& document, const QueryRequest& request) {
  try {
    if (request.format == OutputFormat::kDot && request.command != Command::kDiagram)
      throw UsageError("format dot is only available for diagram");
    return execute(document, request);
  } catch (const Error& e) {
    return {{}, std::string("error: ") + e.what() + "\n", kExitUsage};
  }
}

}  // namespace res
