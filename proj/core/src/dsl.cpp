#include "res/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace res {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// A slice of the current line together with its 1-based starting column.
struct Span {
  std::string_view text;
  std::size_t column;

  Span trimmed() const {
    Span s = *this;
    while (!s.text.empty() && is_space(s.text.front())) {
      s.text.remove_prefix(1);
      ++s.column;
    }
    while (!s.text.empty() && is_space(s.text.back())) s.text.remove_suffix(1);
    return s;
  }
  Span from(std::size_t offset) const {
    offset = std::min(offset, text.size());
    return {text.substr(offset), column + offset};
  }
  Span prefix(std::size_t length) const { return {text.substr(0, length), column}; }
};

bool is_identifier(std::string_view s) {
  if (s.empty() || std::isalpha(static_cast<unsigned char>(s.front())) == 0) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

bool starts_with_keyword(std::string_view text, std::string_view keyword) {
  if (text.substr(0, keyword.size()) != keyword) return false;
  return text.size() == keyword.size() || is_space(text[keyword.size()]) ||
         text[keyword.size()] == ':';
}

std::vector<Span> split_list(Span list) {
  std::vector<Span> items;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = list.text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? list.text.size() : comma;
    items.push_back(Span{list.text.substr(start, end - start), list.column + start}.trimmed());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

std::optional<bool> parse_bool(std::string_view v) {
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  return std::nullopt;
}

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) : text_(text) {}

  StructureDocument parse() {
    std::size_t line_start = 0;
    std::size_t line_number = 0;
    while (line_start <= text_.size()) {
      std::size_t line_end = text_.find('\n', line_start);
      if (line_end == std::string_view::npos) line_end = text_.size();
      ++line_number;
      std::string_view line = text_.substr(line_start, line_end - line_start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line_ = line_number;
      Span span = Span{line, 1}.trimmed();
      if (!span.text.empty()) statement(span);
      if (line_end == text_.size()) break;
      line_start = line_end + 1;
    }
    if (!seen_name_) error({0, 0}, "missing 'structure <name>' header");
    if (!seen_atoms_) error({0, 0}, "missing 'evidence atoms:' declaration");
    if (!seen_alternatives_) error({0, 0}, "missing 'alternatives:' declaration");
    return std::move(doc_);
  }

  std::vector<Diagnostic>& diagnostics() { return diagnostics_; }

 private:
  void statement(Span s) {
    const SourceLocation at{line_, s.column};
    if (starts_with_keyword(s.text, "structure")) return header_name(s.from(9).trimmed(), at);
    if (s.text.substr(0, 15) == "evidence atoms:")
      return name_list(s.from(15), at, doc_.atoms, seen_atoms_, "evidence atoms");
    if (s.text.substr(0, 13) == "alternatives:")
      return name_list(s.from(13), at, doc_.alternatives, seen_alternatives_, "alternatives");
    if (s.text.substr(0, 8) == "options:") return options(s.from(8));
    if (starts_with_keyword(s.text, "arg")) return argument(s.from(3), at, false);
    if (starts_with_keyword(s.text, "refute")) return argument(s.from(6), at, true);
    if (s.text.substr(0, 4) == "rel:") return relation(s.from(4), at);
    const auto word_end = std::find_if(s.text.begin(), s.text.end(), is_space) - s.text.begin();
    error(at, "unknown statement '" + std::string(s.text.substr(0, word_end)) + "'");
  }

  void header_name(Span name, SourceLocation at) {
    if (seen_name_) return error(at, "duplicate 'structure' header");
    seen_name_ = true;
    if (name.text.empty()) return error(at, "structure name is missing");
    if (std::any_of(name.text.begin(), name.text.end(), is_space))
      return error({line_, name.column}, "structure name must be a single word");
    doc_.name = std::string(name.text);
  }

  void name_list(Span list, SourceLocation at, std::vector<std::string>& out, bool& seen,
                 const char* what) {
    if (seen) return error(at, std::string("duplicate '") + what + ":' declaration");
    seen = true;
    list = list.trimmed();
    if (list.text.empty()) return error(at, std::string(what) + " list is empty");
    for (const Span& item : split_list(list)) {
      if (!is_identifier(item.text)) {
        error({line_, item.column}, "invalid name '" + std::string(item.text) + "'");
        continue;
      }
      if (std::find(out.begin(), out.end(), item.text) != out.end()) {
        error({line_, item.column}, "duplicate name '" + std::string(item.text) + "'");
        continue;
      }
      out.emplace_back(item.text);
    }
  }

  void options(Span list) {
    list = list.trimmed();
    if (list.text.empty()) return;
    for (const Span& item : split_list(list)) {
      const auto eq = item.text.find('=');
      if (eq == std::string_view::npos) {
        error({line_, item.column}, "option must be written key=value");
        continue;
      }
      const Span key = item.prefix(eq).trimmed();
      const Span value = item.from(eq + 1).trimmed();
      OptionAssignment assignment{std::string(key.text), std::string(value.text), {line_, key.column}};
      try {
        apply_options({}, {assignment});
      } catch (const DeclarationError& e) {
        error(assignment.location, e.what());
        continue;
      }
      doc_.options.push_back(std::move(assignment));
    }
  }

  void argument(Span rest, SourceLocation at, bool refutation) {
    ArgumentStatement stmt;
    stmt.refutation = refutation;
    stmt.location = at;
    const auto colon = rest.text.find(':');
    if (colon == std::string_view::npos)
      return error(at, std::string("expected ':' after '") + (refutation ? "refute" : "arg") + "'");
    const Span label = rest.prefix(colon).trimmed();
    if (!label.text.empty() && !is_identifier(label.text))
      return error({line_, label.column}, "invalid argument label '" + std::string(label.text) + "'");
    if (label.text.empty() && !refutation) return error(at, "argument label is missing");
    stmt.label = std::string(label.text);

    const Span body = rest.from(colon + 1);
    const auto arrow = body.text.find("=>");
    if (arrow == std::string_view::npos) return error({line_, body.column}, "expected '=>'");
    const Span formula = body.prefix(arrow).trimmed();
    if (formula.text.empty()) return error({line_, body.column}, "presumption formula is missing");
    stmt.formula = std::string(formula.text);
    stmt.formula_column = formula.column;

    Span conclusion = body.from(arrow + 2).trimmed();
    const auto close = conclusion.text.rfind('}');
    if (close == std::string_view::npos)
      return error({line_, conclusion.column}, "conclusion must be written as {A, B} or !{A}");
    const Span trailing = conclusion.from(close + 1).trimmed();
    conclusion = conclusion.prefix(close + 1).trimmed();
    stmt.conclusion = std::string(conclusion.text);
    stmt.conclusion_column = conclusion.column;
    if (!trailing.text.empty()) {
      if (!refutation)
        return error({line_, trailing.column}, "unexpected '" + std::string(trailing.text) + "'");
      if (trailing.text == "singletons")
        stmt.policy = RefutationPolicy::kSingletons;
      else if (trailing.text == "complement_set")
        stmt.policy = RefutationPolicy::kComplementSet;
      else
        return error({line_, trailing.column},
                     "unknown refutation policy '" + std::string(trailing.text) + "'");
    }
    doc_.arguments.push_back(std::move(stmt));
  }

  void relation(Span rest, SourceLocation at) {
    rest = rest.trimmed();
    int depth = 0;
    std::size_t op_pos = std::string_view::npos;
    std::size_t op_len = 0;
    for (std::size_t i = 0; i < rest.text.size() && op_pos == std::string_view::npos; ++i) {
      const char c = rest.text[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth != 0) continue;
      if (c == '<' || c == '>') {
        op_pos = i;
        op_len = (i + 1 < rest.text.size() && rest.text[i + 1] == '=') ? 2 : 1;
      } else if (c == '~') {
        op_pos = i;
        op_len = 1;
      }
    }
    if (op_pos == std::string_view::npos)
      return error(at, "expected a relation operator (<=, <, ~, >, >=)");
    const std::string_view op = rest.text.substr(op_pos, op_len);

    RelationStatement stmt;
    stmt.location = at;
    auto side = [&](Span s, RelationSide& out) {
      s = s.trimmed();
      out.column = s.column;
      if (s.text.substr(0, 5) == "pres(" && s.text.back() == ')') {
        out.presumption = true;
        const Span inner = Span{s.text.substr(5, s.text.size() - 6), s.column + 5}.trimmed();
        out.text = std::string(inner.text);
        out.column = inner.column;
        if (inner.text.empty()) {
          error({line_, s.column}, "empty presumption");
          return false;
        }
        return true;
      }
      if (!is_identifier(s.text)) {
        error({line_, s.column}, "expected an argument label or pres(<formula>), got '" +
                                     std::string(s.text) + "'");
        return false;
      }
      out.text = std::string(s.text);
      return true;
    };
    RelationSide left;
    RelationSide right;
    if (!side(rest.prefix(op_pos), left) || !side(rest.from(op_pos + op_len), right)) return;
    if (left.presumption != right.presumption)
      return error(at, "a relation compares two arguments or two presumptions, not one of each");
    const bool mirrored = op[0] == '>';
    stmt.kind = op == "~" ? RelationKind::kEqual
                          : (op_len == 2 ? RelationKind::kLeq : RelationKind::kStrict);
    stmt.lower = mirrored ? right : left;
    stmt.upper = mirrored ? left : right;
    doc_.relations.push_back(std::move(stmt));
  }

  void error(SourceLocation at, std::string message) {
    diagnostics_.push_back({at, std::move(message)});
  }

  std::string_view text_;
  std::size_t line_ = 0;
  StructureDocument doc_;
  std::vector<Diagnostic> diagnostics_;
  bool seen_name_ = false;
  bool seen_atoms_ = false;
  bool seen_alternatives_ = false;
};

struct Built {
  std::optional<EvidenceStructure> structure;
  std::vector<Diagnostic> diagnostics;
};

Built build_located(const StructureDocument& doc, const std::vector<OptionAssignment>& overrides) {
  Built out;
  auto fail = [&](SourceLocation at, std::size_t column_offset, const std::string& message) {
    if (column_offset != 0) at.column = column_offset;
    out.diagnostics.push_back({at, message});
  };

  EvidenceFramePtr evidence;
  ConclusionFramePtr conclusions;
  try {
    evidence = EvidenceFrame::create(doc.atoms);
  } catch (const Error& e) {
    fail({}, 0, e.what());
  }
  try {
    conclusions = ConclusionFrame::create(doc.alternatives);
  } catch (const Error& e) {
    fail({}, 0, e.what());
  }
  StructureOptions options;
  try {
    options = apply_options(apply_options({}, doc.options), overrides);
  } catch (const Error& e) {
    fail({}, 0, e.what());
  }
  if (!evidence || !conclusions || !out.diagnostics.empty()) return out;

  StructureBuilder builder(doc.name, evidence, conclusions, options);
  std::size_t refutations = 0;
  for (const auto& stmt : doc.arguments) {
    std::optional<EvidenceSentence> presumption;
    try {
      presumption = build_sentence(evidence, stmt.formula);
    } catch (const DeclarationError& e) {
      fail(stmt.location, e.column() ? stmt.formula_column + e.column() - 1 : stmt.formula_column,
           e.what());
      continue;
    }
    std::optional<ConclusionSentence> conclusion;
    try {
      conclusion = parse_conclusion(conclusions, stmt.conclusion);
    } catch (const DeclarationError& e) {
      fail(stmt.location,
           e.column() ? stmt.conclusion_column + e.column() - 1 : stmt.conclusion_column, e.what());
      continue;
    }
    try {
      if (stmt.refutation) {
        ++refutations;
        std::string label = stmt.label.empty() ? "refute" + std::to_string(refutations) : stmt.label;
        builder.add_refutation(*presumption, *conclusion,
                               stmt.policy.value_or(RefutationPolicy::kSingletons), std::move(label),
                               stmt.formula);
      } else {
        builder.add_support(*presumption, *conclusion, stmt.label, stmt.formula);
      }
    } catch (const Error& e) {
      fail(stmt.location, 0, e.what());
    }
  }

  for (const auto& stmt : doc.relations) {
    if (!stmt.lower.presumption) {
      bool ok = true;
      for (const auto* side : {&stmt.lower, &stmt.upper}) {
        if (builder.peek().find(side->text)) continue;
        fail(stmt.location, side->column, "unknown argument '" + side->text + "'");
        ok = false;
      }
      if (ok) builder.declare(RelationDeclaration::arguments(stmt.kind, stmt.lower.text, stmt.upper.text));
      continue;
    }
    std::optional<EvidenceSentence> lower;
    std::optional<EvidenceSentence> upper;
    for (auto [side, target] : {std::pair{&stmt.lower, &lower}, std::pair{&stmt.upper, &upper}}) {
      try {
        *target = build_sentence(evidence, side->text);
        if (!(*target)->satisfiable()) {
          fail(stmt.location, side->column, "presumption '" + side->text + "' is unsatisfiable");
          target->reset();
        }
      } catch (const DeclarationError& e) {
        fail(stmt.location, e.column() ? side->column + e.column() - 1 : side->column, e.what());
      }
    }
    if (lower && upper)
      builder.declare(RelationDeclaration::presumptions(stmt.kind, {*lower, stmt.lower.text},
                                                        {*upper, stmt.upper.text}));
  }
  if (!out.diagnostics.empty()) return out;

  try {
    out.structure = std::move(builder).build();
  } catch (const Error& e) {
    fail({}, 0, e.what());
  }
  return out;
}

}  // namespace

StructureOptions apply_options(StructureOptions base, const std::vector<OptionAssignment>& assignments) {
  for (const auto& a : assignments) {
    auto flag = [&](bool& field) {
      auto value = parse_bool(a.value);
      if (!value)
        throw DeclarationError("option " + a.key + " expects true or false, got '" + a.value + "'");
      field = *value;
    };
    if (a.key == "same_presumption_equal") {
      flag(base.same_presumption_equal);
    } else if (a.key == "conjunction_arguments") {
      flag(base.conjunction_arguments);
    } else if (a.key == "conjunction_lifting") {
      flag(base.conjunction_lifting);
    } else if (a.key == "disjunction_closure") {
      flag(base.disjunction_closure);
    } else if (a.key == "disjunction_closure_cap") {
      std::size_t cap = 0;
      const auto* first = a.value.data();
      const auto* last = first + a.value.size();
      auto [ptr, ec] = std::from_chars(first, last, cap);
      if (ec != std::errc{} || ptr != last || cap == 0)
        throw DeclarationError("option disjunction_closure_cap expects a positive integer, got '" +
                               a.value + "'");
      base.disjunction_closure_cap = cap;
    } else {
      throw DeclarationError("unknown option '" + a.key + "'");
    }
  }
  return base;
}

OptionAssignment parse_option_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw DeclarationError("option must be written key=value");
  OptionAssignment a{std::string(Span{text.substr(0, eq), 1}.trimmed().text),
                     std::string(Span{text.substr(eq + 1), 1}.trimmed().text),
                     {}};
  apply_options({}, {a});
  return a;
}

StructureDocument parse_structure(std::string_view text) {
  DocumentParser parser(text);
  StructureDocument doc = parser.parse();
  auto& diagnostics = parser.diagnostics();
  if (diagnostics.empty()) {
    Built built = build_located(doc, {});
    diagnostics = std::move(built.diagnostics);
  }
  if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));
  return doc;
}

EvidenceStructure build_structure(const StructureDocument& document,
                                  const std::vector<OptionAssignment>& overrides) {
  Built built = build_located(document, overrides);
  if (!built.diagnostics.empty()) throw ParseError(std::move(built.diagnostics));
  return std::move(*built.structure);
}

std::string serialize(const StructureDocument& document) {
  auto join = [](const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
      if (!out.empty()) out += ", ";
      out += item;
    }
    return out;
  };
  std::string out = "structure " + document.name + "\n";
  out += "evidence atoms: " + join(document.atoms) + "\n";
  out += "alternatives: " + join(document.alternatives) + "\n";
  if (!document.options.empty()) {
    std::vector<std::string> items;
    for (const auto& o : document.options) items.push_back(o.key + "=" + o.value);
    out += "options: " + join(items) + "\n";
  }
  for (const auto& a : document.arguments) {
    out += a.refutation ? "refute" : "arg";
    if (!a.label.empty()) out += " " + a.label;
    out += ": " + a.formula + " => " + a.conclusion;
    if (a.policy) out += " " + std::string(to_string(*a.policy));
    out += "\n";
  }
  for (const auto& r : document.relations) {
    auto side = [](const RelationSide& s) { return s.presumption ? "pres(" + s.text + ")" : s.text; };
    out += "rel: " + side(r.lower) + " " + std::string(symbol(r.kind)) + " " + side(r.upper) + "\n";
  }
  return out;
}

}  // namespace res
