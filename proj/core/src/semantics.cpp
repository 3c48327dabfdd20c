#include "res/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <set>

#include "res/error.hpp"

namespace res {

namespace {

bool is_identifier(std::string_view name) {
  if (name.empty() || std::isalpha(static_cast<unsigned char>(name.front())) == 0) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

void check_names(const std::vector<std::string>& names, const char* what) {
  std::set<std::string_view> seen;
  for (const auto& name : names) {
    if (!is_identifier(name))
      throw DeclarationError(std::string("invalid ") + what + " name '" + name + "'");
    if (!seen.insert(name).second)
      throw DeclarationError(std::string("duplicate ") + what + " '" + name + "'");
  }
}

void require_same(const EvidenceSentence& a, const EvidenceSentence& b) {
  if (!same_frame(*a.frame(), *b.frame()))
    throw UsageError("evidence sentences belong to different frames");
}

void require_same(const ConclusionSentence& a, const ConclusionSentence& b) {
  if (!same_frame(*a.frame(), *b.frame()))
    throw UsageError("conclusion sentences belong to different frames");
}

}  // namespace

// ---------------------------------------------------------------------------
// Evidence frame and sentences

EvidenceFramePtr EvidenceFrame::create(std::vector<std::string> atoms) {
  if (atoms.empty()) throw DeclarationError("evidence frame needs at least one atom");
  if (atoms.size() > kMaxEvidenceAtoms)
    throw DeclarationError("evidence frame has " + std::to_string(atoms.size()) +
                           " atoms; at most " + std::to_string(kMaxEvidenceAtoms) +
                           " are supported");
  check_names(atoms, "atom");
  return EvidenceFramePtr(new EvidenceFrame(std::move(atoms)));
}

std::optional<std::size_t> EvidenceFrame::index_of(std::string_view atom) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

bool same_frame(const EvidenceFrame& a, const EvidenceFrame& b) noexcept {
  return &a == &b || a.atoms() == b.atoms();
}

EvidenceSentence::EvidenceSentence(EvidenceFramePtr frame, ModelSet models)
    : frame_(std::move(frame)), models_(std::move(models)) {
  if (!frame_) throw UsageError("evidence sentence without a frame");
  if (models_.size() != frame_->valuation_count())
    throw UsageError("model set size does not match the frame");
}

EvidenceSentence EvidenceSentence::tautology(EvidenceFramePtr frame) {
  ModelSet models(frame->valuation_count());
  models.set();
  return {std::move(frame), std::move(models)};
}

EvidenceSentence EvidenceSentence::contradiction(EvidenceFramePtr frame) {
  ModelSet models(frame->valuation_count());
  return {std::move(frame), std::move(models)};
}

EvidenceSentence EvidenceSentence::atom(EvidenceFramePtr frame, std::size_t index) {
  if (index >= frame->atom_count()) throw UsageError("atom index out of range");
  ModelSet models(frame->valuation_count());
  for (std::size_t v = 0; v < models.size(); ++v)
    if (EvidenceFrame::atom_value(v, index)) models.set(v);
  return {std::move(frame), std::move(models)};
}

std::size_t EvidenceSentence::hash() const noexcept {
  std::size_t h = models_.size();
  std::vector<ModelSet::block_type> blocks;
  blocks.reserve(models_.num_blocks());
  boost::to_block_range(models_, std::back_inserter(blocks));
  for (auto b : blocks) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool operator==(const EvidenceSentence& a, const EvidenceSentence& b) {
  require_same(a, b);
  return a.models_ == b.models_;
}

bool implies(const EvidenceSentence& premise, const EvidenceSentence& consequence) {
  require_same(premise, consequence);
  return premise.models().is_subset_of(consequence.models());
}

bool strictly_implies(const EvidenceSentence& premise, const EvidenceSentence& consequence) {
  require_same(premise, consequence);
  return premise.models().is_proper_subset_of(consequence.models());
}

bool equivalent(const EvidenceSentence& a, const EvidenceSentence& b) { return a == b; }

EvidenceSentence negate(const EvidenceSentence& s) { return {s.frame(), ~s.models()}; }

EvidenceSentence conjoin(const EvidenceSentence& a, const EvidenceSentence& b) {
  require_same(a, b);
  return {a.frame(), a.models() & b.models()};
}

EvidenceSentence disjoin(const EvidenceSentence& a, const EvidenceSentence& b) {
  require_same(a, b);
  return {a.frame(), a.models() | b.models()};
}

EvidenceSentence combine(Connective op, const std::vector<EvidenceSentence>& operands) {
  if (operands.empty()) throw UsageError("combine needs at least one operand");
  if (op == Connective::kNegate) {
    if (operands.size() != 1) throw UsageError("negation takes exactly one operand");
    return negate(operands.front());
  }
  EvidenceSentence result = operands.front();
  for (std::size_t i = 1; i < operands.size(); ++i)
    result = op == Connective::kConjoin ? conjoin(result, operands[i])
                                        : disjoin(result, operands[i]);
  return result;
}

std::string to_formula(const EvidenceSentence& s) {
  const auto& frame = *s.frame();
  const auto& atoms = frame.atoms();
  if (!s.satisfiable()) return atoms[0] + " & !" + atoms[0];
  if (s.is_tautology()) return atoms[0] + " | !" + atoms[0];

  // Smallest cube containing the models; exact when it has the same count.
  std::string cube;
  std::size_t free_atoms = 0;
  for (std::size_t j = 0; j < frame.atom_count(); ++j) {
    bool seen_true = false;
    bool seen_false = false;
    for (std::size_t v = 0; v < frame.valuation_count(); ++v) {
      if (!s.holds_at(v)) continue;
      (EvidenceFrame::atom_value(v, j) ? seen_true : seen_false) = true;
    }
    if (seen_true && seen_false) {
      ++free_atoms;
      continue;
    }
    if (!cube.empty()) cube += " & ";
    cube += (seen_true ? "" : "!") + atoms[j];
  }
  if (s.model_count() == (std::size_t{1} << free_atoms)) return cube;

  std::string dnf;
  for (std::size_t v = 0; v < frame.valuation_count(); ++v) {
    if (!s.holds_at(v)) continue;
    if (!dnf.empty()) dnf += " | ";
    dnf += '(';
    for (std::size_t j = 0; j < frame.atom_count(); ++j) {
      if (j != 0) dnf += " & ";
      dnf += (EvidenceFrame::atom_value(v, j) ? "" : "!") + atoms[j];
    }
    dnf += ')';
  }
  return dnf;
}

std::vector<std::string> describe_models(const EvidenceSentence& s) {
  std::vector<std::string> out;
  const std::size_t n = s.frame()->atom_count();
  for (std::size_t v = 0; v < s.models().size(); ++v) {
    if (!s.holds_at(v)) continue;
    std::string bits(n, '0');
    for (std::size_t j = 0; j < n; ++j)
      if (EvidenceFrame::atom_value(v, j)) bits[j] = '1';
    out.push_back(std::move(bits));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formula parser: recursive descent straight to model sets.

namespace {

enum class TokenKind { kAtom, kNot, kAnd, kOr, kLParen, kRParen, kEnd };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

class FormulaParser {
 public:
  FormulaParser(const EvidenceFramePtr& frame, std::string_view text)
      : frame_(frame), text_(text) {
    advance();
  }

  EvidenceSentence parse() {
    if (current_.kind == TokenKind::kEnd) fail("empty formula", current_.column);
    EvidenceSentence result = parse_or();
    if (current_.kind != TokenKind::kEnd)
      fail("unexpected '" + std::string(current_.text) + "'", current_.column);
    return result;
  }

 private:
  EvidenceSentence parse_or() {
    EvidenceSentence lhs = parse_and();
    while (current_.kind == TokenKind::kOr) {
      advance();
      lhs = disjoin(lhs, parse_and());
    }
    return lhs;
  }

  EvidenceSentence parse_and() {
    EvidenceSentence lhs = parse_unary();
    while (current_.kind == TokenKind::kAnd) {
      advance();
      lhs = conjoin(lhs, parse_unary());
    }
    return lhs;
  }

  EvidenceSentence parse_unary() {
    const Token tok = current_;
    switch (tok.kind) {
      case TokenKind::kNot:
        advance();
        return negate(parse_unary());
      case TokenKind::kLParen: {
        advance();
        EvidenceSentence inner = parse_or();
        if (current_.kind != TokenKind::kRParen) fail("expected ')'", current_.column);
        advance();
        return inner;
      }
      case TokenKind::kAtom: {
        auto index = frame_->index_of(tok.text);
        if (!index) fail("unknown atom '" + std::string(tok.text) + "'", tok.column);
        advance();
        return EvidenceSentence::atom(frame_, *index);
      }
      case TokenKind::kEnd:
        fail("unexpected end of formula", tok.column);
      default:
        fail("unexpected '" + std::string(tok.text) + "'", tok.column);
    }
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0)
      ++pos_;
    const std::size_t column = pos_ + 1;
    if (pos_ >= text_.size()) {
      current_ = {TokenKind::kEnd, {}, column};
      return;
    }
    auto starts = [&](std::string_view s) { return text_.substr(pos_, s.size()) == s; };
    auto take = [&](TokenKind kind, std::size_t len) {
      current_ = {kind, text_.substr(pos_, len), column};
      pos_ += len;
    };
    const char c = text_[pos_];
    if (c == '!' || c == '~') return take(TokenKind::kNot, 1);
    if (c == '&') return take(TokenKind::kAnd, 1);
    if (c == '|') return take(TokenKind::kOr, 1);
    if (c == '(') return take(TokenKind::kLParen, 1);
    if (c == ')') return take(TokenKind::kRParen, 1);
    if (starts("\xC2\xAC")) return take(TokenKind::kNot, 2);       // ¬
    if (starts("\xE2\x88\xA7")) return take(TokenKind::kAnd, 3);   // ∧
    if (starts("\xE2\x88\xA8")) return take(TokenKind::kOr, 3);    // ∨
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) != 0 ||
                                    text_[end] == '_'))
        ++end;
      return take(TokenKind::kAtom, end - pos_);
    }
    fail("unexpected character '" + std::string(1, c) + "'", column);
  }

  [[noreturn]] static void fail(const std::string& message, std::size_t column) {
    throw DeclarationError(message, column);
  }

  const EvidenceFramePtr& frame_;
  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{TokenKind::kEnd, {}, 1};
};

}  // namespace

EvidenceSentence build_sentence(const EvidenceFramePtr& frame, std::string_view formula) {
  if (!frame) throw UsageError("build_sentence without a frame");
  return FormulaParser(frame, formula).parse();
}

// ---------------------------------------------------------------------------
// Conclusion frame and sentences

ConclusionFramePtr ConclusionFrame::create(std::vector<std::string> alternatives) {
  if (alternatives.empty()) throw DeclarationError("conclusion frame needs at least one alternative");
  if (alternatives.size() > kMaxAlternatives)
    throw DeclarationError("conclusion frame has " + std::to_string(alternatives.size()) +
                           " alternatives; at most " + std::to_string(kMaxAlternatives) +
                           " are supported");
  check_names(alternatives, "alternative");
  return ConclusionFramePtr(new ConclusionFrame(std::move(alternatives)));
}

std::optional<std::size_t> ConclusionFrame::index_of(std::string_view name) const {
  auto it = std::find(alternatives_.begin(), alternatives_.end(), name);
  if (it == alternatives_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alternatives_.begin());
}

bool same_frame(const ConclusionFrame& a, const ConclusionFrame& b) noexcept {
  return &a == &b || a.alternatives() == b.alternatives();
}

ConclusionSentence::ConclusionSentence(ConclusionFramePtr frame, std::uint32_t members)
    : frame_(std::move(frame)), members_(members) {
  if (!frame_) throw UsageError("conclusion sentence without a frame");
  if ((members_ & ~frame_->full_mask()) != 0)
    throw UsageError("conclusion members outside the frame");
}

ConclusionSentence ConclusionSentence::full(ConclusionFramePtr frame) {
  const auto mask = frame->full_mask();
  return {std::move(frame), mask};
}

ConclusionSentence ConclusionSentence::singleton(ConclusionFramePtr frame, std::size_t index) {
  if (index >= frame->size()) throw UsageError("alternative index out of range");
  return {std::move(frame), std::uint32_t{1} << index};
}

std::size_t ConclusionSentence::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(members_));
}

std::string ConclusionSentence::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < frame_->size(); ++i) {
    if (!contains(i)) continue;
    if (!first) out += ',';
    out += frame_->alternatives()[i];
    first = false;
  }
  out += '}';
  return out;
}

bool operator==(const ConclusionSentence& a, const ConclusionSentence& b) {
  require_same(a, b);
  return a.members_ == b.members_;
}

ConclusionSentence complement(const ConclusionSentence& p) {
  return {p.frame(), p.frame()->full_mask() & ~p.members()};
}

ConclusionSentence unite(const ConclusionSentence& a, const ConclusionSentence& b) {
  require_same(a, b);
  return {a.frame(), a.members() | b.members()};
}

ConclusionSentence intersect(const ConclusionSentence& a, const ConclusionSentence& b) {
  require_same(a, b);
  return {a.frame(), a.members() & b.members()};
}

bool subset_of(const ConclusionSentence& a, const ConclusionSentence& b) {
  require_same(a, b);
  return (a.members() & ~b.members()) == 0;
}

ConclusionSentence parse_conclusion(const ConclusionFramePtr& frame, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    return s;
  };
  const std::string_view original = text;
  auto column_of = [&](std::string_view part) {
    return static_cast<std::size_t>(part.data() - original.data()) + 1;
  };

  text = trim(text);
  bool negated = false;
  if (!text.empty() && (text.front() == '!' || text.front() == '~')) {
    negated = true;
    text = trim(text.substr(1));
  }
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw DeclarationError("conclusion must be written as {A, B} or !{A}", column_of(text));

  std::uint32_t mask = 0;
  std::string_view body = text.substr(1, text.size() - 2);
  if (!trim(body).empty()) {
    while (true) {
      const auto comma = body.find(',');
      const std::string_view item = trim(body.substr(0, comma));
      if (item.empty()) throw DeclarationError("empty alternative name", column_of(body));
      auto index = frame->index_of(item);
      if (!index)
        throw DeclarationError("unknown alternative '" + std::string(item) + "'", column_of(item));
      mask |= std::uint32_t{1} << *index;
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
  }
  ConclusionSentence result(frame, mask);
  return negated ? complement(result) : result;
}

}  // namespace res
