#include "res/decision.hpp"

#include <algorithm>

#include "res/error.hpp"

namespace res {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kStrictlyLess: return "StrictlyLess";
    case Verdict::kStrictlyGreater: return "StrictlyGreater";
    case Verdict::kEqual: return "Equal";
    case Verdict::kIncomparable: return "Incomparable";
  }
  return "Unknown";
}

Verdict mirror(Verdict verdict) {
  switch (verdict) {
    case Verdict::kStrictlyLess: return Verdict::kStrictlyGreater;
    case Verdict::kStrictlyGreater: return Verdict::kStrictlyLess;
    default: return verdict;
  }
}

namespace {

void require_frame(const ConditionedStructure& cond, const ConclusionSentence& p) {
  if (!same_frame(*p.frame(), *cond.structure().conclusion_frame()))
    throw UsageError("conclusion " + p.to_string() + " is not over the structure's conclusion frame");
}

bool leq_supports(const ConditionedStructure& cond, const std::vector<ArgumentId>& from,
                  const std::vector<ArgumentId>& to) {
  if (from.empty()) return !to.empty();
  return std::all_of(from.begin(), from.end(), [&](ArgumentId a) {
    return std::any_of(to.begin(), to.end(), [&](ArgumentId b) { return cond.leq(a, b); });
  });
}

Verdict classify(bool forward, bool backward) {
  if (forward && backward) return Verdict::kEqual;
  if (forward) return Verdict::kStrictlyLess;
  if (backward) return Verdict::kStrictlyGreater;
  return Verdict::kIncomparable;
}

std::vector<std::vector<Verdict>> verdict_matrix(const ConditionedStructure& cond,
                                                 const std::vector<ConclusionSentence>& candidates) {
  std::vector<std::vector<ArgumentId>> supports;
  supports.reserve(candidates.size());
  for (const auto& c : candidates) supports.push_back(supports_of(cond, c));
  const std::size_t k = candidates.size();
  std::vector<std::vector<Verdict>> matrix(k, std::vector<Verdict>(k, Verdict::kIncomparable));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const Verdict v = classify(leq_supports(cond, supports[i], supports[j]),
                                 leq_supports(cond, supports[j], supports[i]));
      matrix[i][j] = v;
      matrix[j][i] = mirror(v);
    }
  }
  return matrix;
}

}  // namespace

std::vector<ArgumentId> supports_of(const ConditionedStructure& cond, const ConclusionSentence& p) {
  require_frame(cond, p);
  std::vector<ArgumentId> out;
  for (auto id : cond.triggered())
    if (subset_of(cond.structure().argument(id).conclusion, p)) out.push_back(id);
  return out;
}

bool leq_conclusions(const ConditionedStructure& cond, const ConclusionSentence& p1,
                     const ConclusionSentence& p2) {
  return leq_supports(cond, supports_of(cond, p1), supports_of(cond, p2));
}

Verdict compare(const ConditionedStructure& cond, const ConclusionSentence& p1,
                const ConclusionSentence& p2) {
  const auto s1 = supports_of(cond, p1);
  const auto s2 = supports_of(cond, p2);
  return classify(leq_supports(cond, s1, s2), leq_supports(cond, s2, s1));
}

bool is_plausible(const ConditionedStructure& cond, const ConclusionSentence& p) {
  require_frame(cond, p);
  if (p.is_empty() || p.is_full())
    throw UsageError("plausibility needs a sentence with a genuine rival; " + p.to_string() +
                     " is " + (p.is_empty() ? "empty" : "the whole frame"));
  return compare(cond, complement(p), p) == Verdict::kStrictlyLess;
}

Ranking rank(const ConditionedStructure& cond, std::vector<ConclusionSentence> candidates) {
  if (candidates.empty()) throw UsageError("rank needs at least one candidate");
  Ranking ranking;
  ranking.matrix = verdict_matrix(cond, candidates);
  ranking.candidates = std::move(candidates);
  for (std::size_t i = 0; i < ranking.candidates.size(); ++i) {
    const auto& row = ranking.matrix[i];
    if (std::none_of(row.begin(), row.end(), [](Verdict v) { return v == Verdict::kStrictlyLess; }))
      ranking.maximal.push_back(i);
  }
  return ranking;
}

HasseDiagram hasse(const ConditionedStructure& cond, std::vector<ConclusionSentence> candidates) {
  if (candidates.empty()) throw UsageError("diagram needs at least one candidate");
  const auto matrix = verdict_matrix(cond, candidates);
  const std::size_t k = candidates.size();

  HasseDiagram diagram;
  std::vector<std::size_t> class_of(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (class_of[i] != k) continue;
    class_of[i] = diagram.classes.size();
    diagram.classes.push_back({i});
    for (std::size_t j = i + 1; j < k; ++j) {
      if (class_of[j] == k && matrix[i][j] == Verdict::kEqual) {
        class_of[j] = class_of[i];
        diagram.classes.back().push_back(j);
      }
    }
  }

  // The strict order is well defined on classes because <= is transitive.
  const std::size_t m = diagram.classes.size();
  auto below = [&](std::size_t x, std::size_t y) {
    return matrix[diagram.classes[x].front()][diagram.classes[y].front()] == Verdict::kStrictlyLess;
  };
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (!below(x, y)) continue;
      bool covered = false;
      for (std::size_t z = 0; z < m && !covered; ++z) covered = below(x, z) && below(z, y);
      if (!covered) diagram.edges.emplace_back(x, y);
    }
  }
  diagram.candidates = std::move(candidates);
  return diagram;
}

namespace {

DirectionTrace trace_direction(const ConditionedStructure& cond, const std::vector<ArgumentId>& from,
                               const std::vector<ArgumentId>& to) {
  DirectionTrace trace;
  trace.from_supported = !from.empty();
  trace.to_supported = !to.empty();
  for (auto a : from) {
    // Prefer the support itself, then the first dominator in id order.
    std::optional<ArgumentId> dominator;
    if (std::find(to.begin(), to.end(), a) != to.end()) {
      dominator = a;
    } else {
      for (auto b : to) {
        if (cond.leq(a, b)) {
          dominator = b;
          break;
        }
      }
    }
    if (dominator)
      trace.matches.push_back({a, *dominator, cond.closure().chain(a, *dominator)});
    else
      trace.unmatched.push_back(a);
  }
  trace.holds = from.empty() ? !to.empty() : trace.unmatched.empty();
  return trace;
}

}  // namespace

ExplanationTrace explain(const ConditionedStructure& cond, const ConclusionSentence& p1,
                         const ConclusionSentence& p2) {
  const auto s1 = supports_of(cond, p1);
  const auto s2 = supports_of(cond, p2);
  ExplanationTrace trace{p1, p2, Verdict::kIncomparable, trace_direction(cond, s1, s2),
                         trace_direction(cond, s2, s1)};
  trace.verdict = classify(trace.forward.holds, trace.backward.holds);
  return trace;
}

std::vector<ConclusionSentence> candidate_set(const ConclusionFramePtr& frame, CandidateMode mode) {
  std::vector<ConclusionSentence> out;
  auto add = [&](const ConclusionSentence& p) {
    if (p.is_empty()) return;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  switch (mode) {
    case CandidateMode::kSingletons:
      for (std::size_t i = 0; i < frame->size(); ++i) add(ConclusionSentence::singleton(frame, i));
      break;
    case CandidateMode::kSingletonsAndComplements:
      for (std::size_t i = 0; i < frame->size(); ++i) add(ConclusionSentence::singleton(frame, i));
      for (std::size_t i = 0; i < frame->size(); ++i)
        add(complement(ConclusionSentence::singleton(frame, i)));
      break;
    case CandidateMode::kAll:
      if (frame->size() > kMaxPowersetAlternatives)
        throw UsageError("candidate mode 'all' is limited to frames with at most " +
                         std::to_string(kMaxPowersetAlternatives) + " alternatives");
      for (std::uint32_t mask = 1; mask <= frame->full_mask(); ++mask) add(ConclusionSentence(frame, mask));
      break;
  }
  return out;
}

}  // namespace res
