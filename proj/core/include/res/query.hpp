#pragma once

// One-shot query execution shared by the CLI and the tests.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "res/decision.hpp"
#include "res/dsl.hpp"
#include "res/emit.hpp"

namespace res {

enum class Command { kCheck, kCondition, kCompare, kRank, kPlausible, kDiagram, kExplain };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command command);
std::optional<OutputFormat> parse_format(std::string_view name);
std::optional<CandidateMode> parse_candidate_mode(std::string_view name);

struct QueryRequest {
  Command command = Command::kCheck;
  std::optional<std::string> given;  // required for every command but check
  // compare/explain: two conclusions; plausible: one; rank/diagram: an
  // optional explicit candidate list.
  std::vector<std::string> operands;
  OutputFormat format = OutputFormat::kText;
  // Defaults: singletons for rank, singletons plus complements for diagram.
  std::optional<CandidateMode> candidates;
  std::vector<OptionAssignment> overrides;
};

struct QueryResult {
  std::string output;
  std::string diagnostics;
  int exit_code = 0;  // 0 ok, 1 usage or declaration error, 2 consistency violations
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconsistent = 2;

QueryResult run_query(const StructureDocument& document, const QueryRequest& request);

}  // namespace res
