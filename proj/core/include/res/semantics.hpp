#pragma once

// Finite propositional semantics for the evidence space and the conclusion
// space. Evidence sentences are model sets over the valuations of a frame's
// atoms; conclusion sentences are subsets of a frame's alternatives.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace res {

inline constexpr std::size_t kMaxEvidenceAtoms = 16;
inline constexpr std::size_t kMaxAlternatives = 24;

class EvidenceFrame;
class ConclusionFrame;
using EvidenceFramePtr = std::shared_ptr<const EvidenceFrame>;
using ConclusionFramePtr = std::shared_ptr<const ConclusionFrame>;

class EvidenceFrame {
 public:
  // Throws DeclarationError on duplicate/empty/ill-formed names or when the
  // atom count is outside [1, kMaxEvidenceAtoms].
  static EvidenceFramePtr create(std::vector<std::string> atoms);

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  std::size_t valuation_count() const noexcept { return std::size_t{1} << atoms_.size(); }
  std::optional<std::size_t> index_of(std::string_view atom) const;

  // Valuation i assigns atom j the value of bit j of i.
  static bool atom_value(std::size_t valuation, std::size_t atom) noexcept {
    return ((valuation >> atom) & 1U) != 0;
  }

 private:
  explicit EvidenceFrame(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {}
  std::vector<std::string> atoms_;
};

bool same_frame(const EvidenceFrame& a, const EvidenceFrame& b) noexcept;

class EvidenceSentence {
 public:
  using ModelSet = boost::dynamic_bitset<std::uint64_t>;

  EvidenceSentence(EvidenceFramePtr frame, ModelSet models);

  static EvidenceSentence tautology(EvidenceFramePtr frame);
  static EvidenceSentence contradiction(EvidenceFramePtr frame);
  static EvidenceSentence atom(EvidenceFramePtr frame, std::size_t index);

  const EvidenceFramePtr& frame() const noexcept { return frame_; }
  const ModelSet& models() const noexcept { return models_; }

  bool satisfiable() const noexcept { return models_.any(); }
  bool is_tautology() const noexcept { return models_.all(); }
  bool holds_at(std::size_t valuation) const { return models_.test(valuation); }
  std::size_t model_count() const noexcept { return models_.count(); }
  std::size_t hash() const noexcept;

  // Model-set equality; frames must match.
  friend bool operator==(const EvidenceSentence& a, const EvidenceSentence& b);

 private:
  EvidenceFramePtr frame_;
  ModelSet models_;
};

// All throw UsageError when the operands live on different frames.
bool implies(const EvidenceSentence& premise, const EvidenceSentence& consequence);
bool strictly_implies(const EvidenceSentence& premise, const EvidenceSentence& consequence);
bool equivalent(const EvidenceSentence& a, const EvidenceSentence& b);

enum class Connective { kNegate, kConjoin, kDisjoin };

EvidenceSentence negate(const EvidenceSentence& s);
EvidenceSentence conjoin(const EvidenceSentence& a, const EvidenceSentence& b);
EvidenceSentence disjoin(const EvidenceSentence& a, const EvidenceSentence& b);
// kNegate takes exactly one operand; the binary connectives fold left over
// one or more operands.
EvidenceSentence combine(Connective op, const std::vector<EvidenceSentence>& operands);

// Parses `!`, `&`, `|` and parentheses over the frame's atoms (the Unicode
// forms ¬ ∧ ∨ are accepted too). Precedence: ! > & > |.
// Throws DeclarationError naming the offending token; column() is 1-based.
EvidenceSentence build_sentence(const EvidenceFramePtr& frame, std::string_view formula);

// Renders a formula equivalent to s: a literal, a conjunction of literals,
// or a disjunction of minterms.
std::string to_formula(const EvidenceSentence& s);

// Lists the satisfying valuations as bit strings in atom order, e.g. "10".
std::vector<std::string> describe_models(const EvidenceSentence& s);

class ConclusionFrame {
 public:
  static ConclusionFramePtr create(std::vector<std::string> alternatives);

  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  std::size_t size() const noexcept { return alternatives_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::uint32_t full_mask() const noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{1} << alternatives_.size()) - 1);
  }

 private:
  explicit ConclusionFrame(std::vector<std::string> alternatives)
      : alternatives_(std::move(alternatives)) {}
  std::vector<std::string> alternatives_;
};

bool same_frame(const ConclusionFrame& a, const ConclusionFrame& b) noexcept;

class ConclusionSentence {
 public:
  ConclusionSentence(ConclusionFramePtr frame, std::uint32_t members);

  static ConclusionSentence empty(ConclusionFramePtr frame) { return {std::move(frame), 0}; }
  static ConclusionSentence full(ConclusionFramePtr frame);
  static ConclusionSentence singleton(ConclusionFramePtr frame, std::size_t index);

  const ConclusionFramePtr& frame() const noexcept { return frame_; }
  std::uint32_t members() const noexcept { return members_; }
  bool is_empty() const noexcept { return members_ == 0; }
  bool is_full() const noexcept { return members_ == frame_->full_mask(); }
  bool contains(std::size_t index) const noexcept { return ((members_ >> index) & 1U) != 0; }
  std::size_t size() const noexcept;

  // "{Al1,Al2}" with members in frame order.
  std::string to_string() const;

  friend bool operator==(const ConclusionSentence& a, const ConclusionSentence& b);

 private:
  ConclusionFramePtr frame_;
  std::uint32_t members_;
};

ConclusionSentence complement(const ConclusionSentence& p);
ConclusionSentence unite(const ConclusionSentence& a, const ConclusionSentence& b);
ConclusionSentence intersect(const ConclusionSentence& a, const ConclusionSentence& b);
bool subset_of(const ConclusionSentence& a, const ConclusionSentence& b);

// Parses `{A, B}` or `!{A}`; `{}` is the empty sentence.
ConclusionSentence parse_conclusion(const ConclusionFramePtr& frame, std::string_view text);

}  // namespace res
