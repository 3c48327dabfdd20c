#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "res/conditioning.hpp"
#include "res/decision.hpp"
#include "res/dsl.hpp"

namespace restest {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(RES_FIXTURE_DIR) + "/" + name; }

inline res::EvidenceStructure load_fixture(const std::string& name,
                                           const std::vector<std::string>& overrides = {}) {
  std::vector<res::OptionAssignment> sets;
  for (const auto& o : overrides) sets.push_back(res::parse_option_assignment(o));
  return res::build_structure(res::parse_structure(read_file(fixture_path(name))), sets);
}

// Owns a structure and its closure so conditioned views can be taken freely.
struct Session {
  res::EvidenceStructure structure;
  res::OrderClosure closure;

  explicit Session(res::EvidenceStructure es)
      : structure(std::move(es)), closure(res::build_closure(structure)) {}

  res::ConditionedStructure given(const std::string& formula) const {
    return res::condition(structure, closure, res::build_sentence(structure.evidence_frame(), formula));
  }
  res::ConclusionSentence p(const std::string& text) const {
    return res::parse_conclusion(structure.conclusion_frame(), text);
  }
  res::Verdict compare(const std::string& given_formula, const std::string& p1, const std::string& p2) const {
    return res::compare(given(given_formula), p(p1), p(p2));
  }
};

}  // namespace restest
