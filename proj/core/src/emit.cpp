#include "res/emit.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "res/error.hpp"

namespace res {

namespace {

using Json = nlohmann::ordered_json;

// Left-aligned columns separated by two spaces, each row indented.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void render(std::ostringstream& out, std::string_view indent = "  ") const {
    std::vector<std::size_t> widths(rows_.front().size(), 0);
    for (const auto& row : rows_)
      for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    for (const auto& row : rows_) {
      std::string line(indent);
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string origins_text(const Argument& a) {
  std::string out;
  for (auto o : a.origins) {
    if (!out.empty()) out += ',';
    out += to_string(o);
  }
  return out;
}

Json argument_json(const Argument& a) {
  Json origins = Json::array();
  for (auto o : a.origins) origins.push_back(std::string(to_string(o)));
  return Json{{"id", a.id.value},
              {"label", a.label},
              {"presumption", a.presumption_text},
              {"conclusion", a.conclusion.to_string()},
              {"origins", origins}};
}

Json labels_json(const EvidenceStructure& s, const std::vector<ArgumentId>& ids) {
  Json out = Json::array();
  for (auto id : ids) out.push_back(s.argument(id).label);
  return out;
}

Json chain_json(const EvidenceStructure& s, const std::vector<ChainStep>& chain) {
  Json out = Json::array();
  for (const auto& step : chain) {
    Json j{{"lower", s.argument(step.lower).label},
           {"upper", s.argument(step.upper).label},
           {"source", std::string(to_string(step.provenance.source))},
           {"detail", describe(step.provenance, s)}};
    out.push_back(std::move(j));
  }
  return out;
}

std::string chain_text(const EvidenceStructure& s, const std::vector<ChainStep>& chain) {
  std::string out;
  for (const auto& step : chain) {
    if (!out.empty()) out += "; ";
    out += s.argument(step.lower).label + " <= " + s.argument(step.upper).label + " [" +
           describe(step.provenance, s) + "]";
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(OutputFormat format, bool dot_allowed, std::string_view command) {
  if (format == OutputFormat::kDot && !dot_allowed)
    throw UsageError("format dot is only available for diagram, not " + std::string(command));
}

Json trace_json(const EvidenceStructure& s, const DirectionTrace& t, std::string_view from,
                std::string_view to) {
  Json matches = Json::array();
  for (const auto& m : t.matches)
    matches.push_back(Json{{"support", s.argument(m.support).label},
                           {"dominator", s.argument(m.dominator).label},
                           {"provenance", chain_json(s, m.chain)}});
  return Json{{"from", from},
              {"to", to},
              {"holds", t.holds},
              {"from_supported", t.from_supported},
              {"to_supported", t.to_supported},
              {"matches", matches},
              {"unmatched", labels_json(s, t.unmatched)}};
}

void trace_text(std::ostringstream& out, const EvidenceStructure& s, const DirectionTrace& t,
                const ConclusionSentence& from, const ConclusionSentence& to) {
  out << from.to_string() << " <= " << to.to_string() << ": " << (t.holds ? "holds" : "fails")
      << '\n';
  if (!t.from_supported) {
    out << "  " << from.to_string() << " has no triggered support; "
        << (t.to_supported ? to.to_string() + " has support" : to.to_string() + " has none either")
        << '\n';
    return;
  }
  for (const auto& m : t.matches) {
    out << "  matched    " << describe(s.argument(m.support)) << "  by  "
        << describe(s.argument(m.dominator)) << '\n';
    if (!m.chain.empty()) out << "             via " << chain_text(s, m.chain) << '\n';
  }
  for (auto id : t.unmatched) out << "  unmatched  " << describe(s.argument(id)) << '\n';
}

char verdict_symbol(Verdict v) {
  switch (v) {
    case Verdict::kStrictlyLess: return '<';
    case Verdict::kStrictlyGreater: return '>';
    case Verdict::kEqual: return '=';
    case Verdict::kIncomparable: return '?';
  }
  return '?';
}

std::string dot_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::kText: return "text";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kDot: return "dot";
  }
  return "text";
}

std::string describe(const Argument& argument) {
  return argument.label + ": <" + argument.presumption_text + ", " + argument.conclusion.to_string() + ">";
}

std::string emit_check(const EvidenceStructure& structure, const CheckResult& result,
                       OutputFormat format) {
  require_format(format, false, "check");
  if (format == OutputFormat::kJson) {
    Json args = Json::array();
    for (const auto& a : structure.arguments()) args.push_back(argument_json(a));
    Json violations = Json::array();
    for (const auto& v : result.consistency.violations) {
      const auto& decl = structure.declarations()[v.declared.declaration];
      violations.push_back(Json{
          {"declaration", decl.describe()},
          {"declared", Json{{"lower", structure.argument(v.declared.lower).label},
                            {"upper", structure.argument(v.declared.upper).label},
                            {"kind", std::string(symbol(v.declared.kind))}}},
          {"counter", Json{{"lower", structure.argument(v.counter_lower).label},
                           {"upper", structure.argument(v.counter_upper).label}}},
          {"provenance", chain_json(structure, v.chain)}});
    }
    Json examples = Json::array();
    for (auto [a, b] : result.disjunction.examples)
      examples.push_back(Json::array({structure.argument(a).label, structure.argument(b).label}));
    Json j{{"structure", structure.name()},
           {"arguments", args},
           {"errors", result.validation.errors},
           {"warnings", result.validation.warnings},
           {"consistent", result.consistency.consistent()},
           {"violations", violations},
           {"disjunction_constraint", Json{{"satisfied", result.disjunction.satisfied},
                                           {"missing", result.disjunction.missing},
                                           {"examples", examples}}}};
    return dump(j);
  }

  std::ostringstream out;
  out << "structure: " << structure.name() << '\n';
  out << "arguments: " << structure.size() << '\n';
  Table table({"id", "label", "presumption", "conclusion", "origin"});
  for (const auto& a : structure.arguments())
    table.add({std::to_string(a.id.value), a.label, a.presumption_text, a.conclusion.to_string(),
               origins_text(a)});
  table.render(out);
  out << "errors: " << (result.validation.errors.empty() ? "none" : "") << '\n';
  for (const auto& e : result.validation.errors) out << "  " << e << '\n';
  out << "warnings: " << (result.validation.warnings.empty() ? "none" : "") << '\n';
  for (const auto& w : result.validation.warnings) out << "  " << w << '\n';
  if (result.consistency.consistent()) {
    out << "consistency: ok\n";
  } else {
    out << "consistency: " << result.consistency.violations.size() << " violation(s)\n";
    for (const auto& v : result.consistency.violations) {
      const auto& decl = structure.declarations()[v.declared.declaration];
      out << "  declared '" << decl.describe() << "' on " << structure.argument(v.declared.lower).label
          << ", " << structure.argument(v.declared.upper).label << " but "
          << structure.argument(v.counter_lower).label << " <= "
          << structure.argument(v.counter_upper).label << '\n';
      if (!v.chain.empty()) out << "    cycle: " << chain_text(structure, v.chain) << '\n';
    }
  }
  if (result.disjunction.satisfied) {
    out << "disjunction constraint: satisfied\n";
  } else {
    out << "disjunction constraint: not satisfied (" << result.disjunction.missing
        << " argument pair(s) lack a disjunctive argument)\n";
  }
  return out.str();
}

std::string emit_condition(const ConditionedStructure& cond, std::string_view given,
                           OutputFormat format) {
  require_format(format, false, "condition");
  const auto args = triggered_arguments(cond);
  if (format == OutputFormat::kJson) {
    Json triggered = Json::array();
    for (const auto* a : args) triggered.push_back(argument_json(*a));
    return dump(Json{{"given", given}, {"triggered", triggered}});
  }
  std::ostringstream out;
  out << "given: " << given << '\n';
  out << "triggered: " << args.size() << " of " << cond.structure().size() << " arguments\n";
  if (!args.empty()) {
    Table table({"id", "label", "presumption", "conclusion"});
    for (const auto* a : args)
      table.add({std::to_string(a->id.value), a->label, a->presumption_text, a->conclusion.to_string()});
    table.render(out);
  }
  return out.str();
}

std::string emit_compare(const ConditionedStructure& cond, std::string_view given,
                         const ExplanationTrace& trace, OutputFormat format) {
  require_format(format, false, "compare");
  const auto& s = cond.structure();
  if (format == OutputFormat::kJson) {
    return dump(Json{{"given", given},
                     {"p1", trace.p1.to_string()},
                     {"p2", trace.p2.to_string()},
                     {"verdict", std::string(to_string(trace.verdict))},
                     {"p1_leq_p2", trace.forward.holds},
                     {"p2_leq_p1", trace.backward.holds},
                     {"supports", Json{{"p1", labels_json(s, supports_of(cond, trace.p1))},
                                       {"p2", labels_json(s, supports_of(cond, trace.p2))}}}});
  }
  std::ostringstream out;
  out << "given: " << given << '\n';
  out << trace.p1.to_string() << " vs " << trace.p2.to_string() << ": " << to_string(trace.verdict)
      << '\n';
  out << "  " << trace.p1.to_string() << " <= " << trace.p2.to_string() << ": "
      << (trace.forward.holds ? "true" : "false") << '\n';
  out << "  " << trace.p2.to_string() << " <= " << trace.p1.to_string() << ": "
      << (trace.backward.holds ? "true" : "false") << '\n';
  return out.str();
}

std::string emit_plausible(const ConditionedStructure& cond, std::string_view given,
                           const ConclusionSentence& p, Verdict complement_vs_p, OutputFormat format) {
  require_format(format, false, "plausible");
  (void)cond;
  const bool plausible = complement_vs_p == Verdict::kStrictlyLess;
  const ConclusionSentence rival = complement(p);
  if (format == OutputFormat::kJson) {
    return dump(Json{{"given", given},
                     {"conclusion", p.to_string()},
                     {"complement", rival.to_string()},
                     {"verdict", std::string(to_string(complement_vs_p))},
                     {"plausible", plausible}});
  }
  std::ostringstream out;
  out << "given: " << given << '\n';
  out << p.to_string() << ": " << (plausible ? "plausible" : "not plausible") << '\n';
  out << "  complement " << rival.to_string() << " vs " << p.to_string() << ": "
      << to_string(complement_vs_p) << '\n';
  return out.str();
}

std::string emit_rank(const ConditionedStructure& cond, std::string_view given,
                      const Ranking& ranking, OutputFormat format) {
  require_format(format, false, "rank");
  (void)cond;
  const std::size_t k = ranking.candidates.size();
  if (format == OutputFormat::kJson) {
    Json candidates = Json::array();
    for (const auto& c : ranking.candidates) candidates.push_back(c.to_string());
    Json maximal = Json::array();
    for (auto i : ranking.maximal) maximal.push_back(ranking.candidates[i].to_string());
    Json matrix = Json::array();
    for (const auto& row : ranking.matrix) {
      Json r = Json::array();
      for (auto v : row) r.push_back(std::string(to_string(v)));
      matrix.push_back(std::move(r));
    }
    return dump(Json{{"given", given}, {"candidates", candidates}, {"maximal", maximal}, {"matrix", matrix}});
  }
  std::ostringstream out;
  out << "given: " << given << '\n';
  out << "maximal:";
  for (auto i : ranking.maximal) out << ' ' << ranking.candidates[i].to_string();
  out << '\n';
  out << "verdicts (row vs column; < less, > more, = equal, ? incomparable):\n";
  std::vector<std::string> header{""};
  for (const auto& c : ranking.candidates) header.push_back(c.to_string());
  Table table(header);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::string> row{ranking.candidates[i].to_string()};
    for (std::size_t j = 0; j < k; ++j) row.emplace_back(1, verdict_symbol(ranking.matrix[i][j]));
    table.add(std::move(row));
  }
  table.render(out);
  return out.str();
}

std::string emit_diagram(const ConditionedStructure& cond, std::string_view given,
                         const HasseDiagram& diagram, OutputFormat format) {
  auto members = [&](std::size_t cls) {
    std::vector<std::string> out;
    for (auto i : diagram.classes[cls]) out.push_back(diagram.candidates[i].to_string());
    return out;
  };
  if (format == OutputFormat::kJson) {
    Json nodes = Json::array();
    for (std::size_t c = 0; c < diagram.classes.size(); ++c)
      nodes.push_back(Json{{"id", c}, {"members", members(c)}});
    Json edges = Json::array();
    for (auto [lo, up] : diagram.edges) edges.push_back(Json{{"lower", lo}, {"upper", up}});
    return dump(Json{{"given", given}, {"nodes", nodes}, {"edges", edges}});
  }
  std::ostringstream out;
  if (format == OutputFormat::kDot) {
    out << "digraph \"" << dot_escape(cond.structure().name()) << "\" {\n";
    out << "  label=\"given: " << dot_escape(given) << "\";\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (std::size_t c = 0; c < diagram.classes.size(); ++c) {
      std::string label;
      for (const auto& m : members(c)) label += (label.empty() ? "" : "\\n") + dot_escape(m);
      out << "  n" << c << " [label=\"" << label << "\"];\n";
    }
    for (auto [lo, up] : diagram.edges) out << "  n" << lo << " -> n" << up << ";\n";
    out << "}\n";
    return out.str();
  }
  out << "given: " << given << '\n';
  out << "nodes:\n";
  for (std::size_t c = 0; c < diagram.classes.size(); ++c) {
    out << "  n" << c << ':';
    for (const auto& m : members(c)) out << ' ' << m;
    out << '\n';
  }
  out << "edges (lower -> upper):\n";
  for (auto [lo, up] : diagram.edges) out << "  n" << lo << " -> n" << up << '\n';
  return out.str();
}

std::string emit_explain(const ConditionedStructure& cond, std::string_view given,
                         const ExplanationTrace& trace, OutputFormat format) {
  require_format(format, false, "explain");
  const auto& s = cond.structure();
  if (format == OutputFormat::kJson) {
    return dump(Json{{"given", given},
                     {"p1", trace.p1.to_string()},
                     {"p2", trace.p2.to_string()},
                     {"verdict", std::string(to_string(trace.verdict))},
                     {"supports", Json{{"p1", labels_json(s, supports_of(cond, trace.p1))},
                                       {"p2", labels_json(s, supports_of(cond, trace.p2))}}},
                     {"directions", Json::array({trace_json(s, trace.forward, "p1", "p2"),
                                                 trace_json(s, trace.backward, "p2", "p1")})}});
  }
  std::ostringstream out;
  out << "given: " << given << '\n';
  out << "verdict: " << trace.p1.to_string() << ' ' << to_string(trace.verdict) << ' '
      << trace.p2.to_string() << '\n';
  trace_text(out, s, trace.forward, trace.p1, trace.p2);
  trace_text(out, s, trace.backward, trace.p2, trace.p1);
  return out.str();
}

}  // namespace res
