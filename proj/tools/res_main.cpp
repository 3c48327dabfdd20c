// res: query evidence structures written in the .res declaration language.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "res/error.hpp"
#include "res/query.hpp"

namespace {

struct Invocation {
  std::string file;
  std::vector<std::string> operands;
  std::string given;
  std::string format = "text";
  std::string candidates;
  std::vector<std::string> overrides;
};

CLI::App* add_command(CLI::App& app, const char* name, const char* help, Invocation& inv,
                      bool takes_given, const char* operands_help) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("file", inv.file, "structure file (.res)")->required()->check(CLI::ExistingFile);
  if (operands_help != nullptr) sub->add_option("operands", inv.operands, operands_help);
  if (takes_given)
    sub->add_option("--given,-g", inv.given, "observed evidence formula, e.g. \"e1 & !e2\"")->required();
  sub->add_option("--format,-f", inv.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  sub->add_option("--set", inv.overrides, "override a structure option, key=value")->take_all();
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"res: qualitative evidential reasoning over argument-strength structures"};
  app.require_subcommand(1);
  Invocation inv;

  add_command(app, "check", "validate a structure and report declared-relation consistency", inv,
              false, nullptr);
  add_command(app, "condition", "list the arguments triggered by the given evidence", inv, true,
              nullptr);
  add_command(app, "compare", "compare two conclusions", inv, true, "two conclusions");
  add_command(app, "plausible", "test whether a conclusion beats its complement", inv, true,
              "one conclusion");
  add_command(app, "explain", "trace the supports behind a comparison", inv, true,
              "two conclusions");
  for (const char* name : {"rank", "diagram"}) {
    CLI::App* sub = add_command(app, name,
                                std::string(name) == "rank"
                                    ? "list the maximal candidates and the verdict matrix"
                                    : "Hasse diagram of the candidates",
                                inv, true, "explicit candidates (optional)");
    sub->add_option("--candidates", inv.candidates, "candidate set")
        ->check(CLI::IsMember({"singletons", "singletons+complements", "all"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : res::kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  res::QueryRequest request;
  request.command = *res::parse_command(chosen->get_name());
  request.format = *res::parse_format(inv.format);
  request.operands = inv.operands;
  if (request.command != res::Command::kCheck) request.given = inv.given;
  if (!inv.candidates.empty()) request.candidates = res::parse_candidate_mode(inv.candidates);

  std::ifstream in(inv.file, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();

  try {
    for (const auto& o : inv.overrides) request.overrides.push_back(res::parse_option_assignment(o));
    const res::StructureDocument document = res::parse_structure(text.str());
    const res::QueryResult result = res::run_query(document, request);
    std::cout << result.output;
    std::cerr << result.diagnostics;
    return result.exit_code;
  } catch (const res::ParseError& e) {
    for (const auto& d : e.diagnostics())
      std::cerr << inv.file << ": " << res::format_diagnostic(d) << '\n';
    return res::kExitUsage;
  } catch (const res::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return res::kExitUsage;
  }
}
