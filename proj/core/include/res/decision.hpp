#pragma once

// Decisions over conclusion sentences under a conditioned structure.
//
// p1 <= p2 holds when every triggered support of p1 (an argument whose
// conclusion is a subset of p1) is matched by some support of p2 at least as
// strong. When p1 has no support at all, p1 <= p2 holds exactly when p2 has
// one. An unsupported sentence is therefore not <= itself.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "res/conditioning.hpp"

namespace res {

enum class Verdict { kStrictlyLess, kStrictlyGreater, kEqual, kIncomparable };

std::string_view to_string(Verdict verdict);
Verdict mirror(Verdict verdict);

std::vector<ArgumentId> supports_of(const ConditionedStructure& cond, const ConclusionSentence& p);

bool leq_conclusions(const ConditionedStructure& cond, const ConclusionSentence& p1,
                     const ConclusionSentence& p2);

Verdict compare(const ConditionedStructure& cond, const ConclusionSentence& p1,
                const ConclusionSentence& p2);

// True iff the complement of p is strictly less believable than p.
// Throws UsageError for the empty or the full sentence.
bool is_plausible(const ConditionedStructure& cond, const ConclusionSentence& p);

struct Ranking {
  std::vector<ConclusionSentence> candidates;
  // Indices into candidates with nothing strictly above them.
  std::vector<std::size_t> maximal;
  // matrix[i][j] = compare(candidates[i], candidates[j]).
  std::vector<std::vector<Verdict>> matrix;
};

Ranking rank(const ConditionedStructure& cond, std::vector<ConclusionSentence> candidates);

struct HasseDiagram {
  std::vector<ConclusionSentence> candidates;
  // Equivalence classes (mutual <=) as candidate indices, ordered by their
  // first member.
  std::vector<std::vector<std::size_t>> classes;
  // Covering pairs (lower class, upper class) of the strict order.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

HasseDiagram hasse(const ConditionedStructure& cond, std::vector<ConclusionSentence> candidates);

struct Match {
  ArgumentId support;
  ArgumentId dominator;
  std::vector<ChainStep> chain;  // empty when support == dominator
};

// Evidence for (or against) `from <= to`.
struct DirectionTrace {
  bool holds = false;
  bool from_supported = false;
  bool to_supported = false;
  std::vector<Match> matches;
  std::vector<ArgumentId> unmatched;
};

struct ExplanationTrace {
  ConclusionSentence p1;
  ConclusionSentence p2;
  Verdict verdict;
  DirectionTrace forward;   // p1 <= p2
  DirectionTrace backward;  // p2 <= p1
};

ExplanationTrace explain(const ConditionedStructure& cond, const ConclusionSentence& p1,
                         const ConclusionSentence& p2);

enum class CandidateMode { kSingletons, kSingletonsAndComplements, kAll };

inline constexpr std::size_t kMaxPowersetAlternatives = 5;

// Deterministic candidate lists. kAll enumerates every nonempty subset and
// throws UsageError for frames larger than kMaxPowersetAlternatives.
std::vector<ConclusionSentence> candidate_set(const ConclusionFramePtr& frame, CandidateMode mode);

}  // namespace res
