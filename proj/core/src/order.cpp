#include "res/order.hpp"

#include <algorithm>
#include <deque>

#include "res/error.hpp"

namespace res {

std::string_view to_string(SeedSource source) {
  switch (source) {
    case SeedSource::kDeclaration: return "declaration";
    case SeedSource::kConstraint3: return "constraint-3";
    case SeedSource::kConstraint4: return "constraint-4";
    case SeedSource::kSamePresumption: return "same-presumption";
    case SeedSource::kConjunctionLifting: return "conjunction-lifting";
  }
  return "unknown";
}

std::string describe(const Provenance& provenance, const EvidenceStructure& structure) {
  switch (provenance.source) {
    case SeedSource::kDeclaration:
      if (provenance.declaration < structure.declarations().size())
        return "declared '" + structure.declarations()[provenance.declaration].describe() + "'";
      return "declared #" + std::to_string(provenance.declaration);
    case SeedSource::kConstraint3: return "constraint 3 (same presumption, weaker conclusion)";
    case SeedSource::kConstraint4: return "constraint 4 (more specific presumption)";
    case SeedSource::kSamePresumption: return "same-presumption equality";
    case SeedSource::kConjunctionLifting: return "conjunction lifting";
  }
  return "unknown";
}

std::vector<DeclaredPair> expand_declarations(const EvidenceStructure& structure) {
  std::vector<DeclaredPair> pairs;
  const auto& declarations = structure.declarations();
  for (std::size_t d = 0; d < declarations.size(); ++d) {
    const auto& decl = declarations[d];
    if (decl.level == RelationDeclaration::Level::kArgument) {
      auto lower = structure.find(decl.lower_label);
      auto upper = structure.find(decl.upper_label);
      if (!lower || !upper)
        throw UsageError("declaration '" + decl.describe() + "' references an unknown argument");
      pairs.push_back({d, decl.kind, *lower, *upper});
      continue;
    }
    const auto lowers = structure.with_presumption(decl.lower_presumption->sentence);
    const auto uppers = structure.with_presumption(decl.upper_presumption->sentence);
    for (auto lo : lowers)
      for (auto up : uppers) pairs.push_back({d, decl.kind, lo, up});
  }
  return pairs;
}

void OrderClosure::check(ArgumentId id) const {
  if (id.index() >= rows_.size())
    throw UsageError("unknown argument id " + std::to_string(id.value));
}

bool OrderClosure::leq(ArgumentId a, ArgumentId b) const {
  check(a);
  check(b);
  return rows_[a.index()].test(b.index());
}

bool OrderClosure::strictly_less(ArgumentId a, ArgumentId b) const { return leq(a, b) && !leq(b, a); }
bool OrderClosure::equivalent(ArgumentId a, ArgumentId b) const { return leq(a, b) && leq(b, a); }
bool OrderClosure::incomparable(ArgumentId a, ArgumentId b) const { return !leq(a, b) && !leq(b, a); }

bool OrderClosure::is_seed(ArgumentId a, ArgumentId b) const {
  return seed_provenance(a, b).has_value();
}

std::optional<Provenance> OrderClosure::seed_provenance(ArgumentId a, ArgumentId b) const {
  check(a);
  check(b);
  auto it = provenance_.find(pair_key(a.index(), b.index()));
  if (it == provenance_.end()) return std::nullopt;
  return it->second;
}

void OrderClosure::seed(std::size_t a, std::size_t b, Provenance provenance) {
  if (a == b) return;
  // The first source recorded for a pair wins; declarations are seeded first.
  if (provenance_.emplace(pair_key(a, b), provenance).second) {
    seeds_out_[a].push_back(static_cast<std::uint32_t>(b));
    rows_[a].set(b);
  }
}

std::vector<ChainStep> OrderClosure::chain(ArgumentId a, ArgumentId b) const {
  if (a == b || !leq(a, b)) return {};
  const std::size_t n = rows_.size();
  std::vector<std::int64_t> parent(n, -1);
  std::deque<std::size_t> queue{a.index()};
  parent[a.index()] = static_cast<std::int64_t>(a.index());
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == b.index()) break;
    for (auto v : seeds_out_[u]) {
      if (parent[v] != -1) continue;
      parent[v] = static_cast<std::int64_t>(u);
      queue.push_back(v);
    }
  }
  std::vector<ChainStep> steps;
  for (std::size_t v = b.index(); v != a.index(); v = static_cast<std::size_t>(parent[v])) {
    const auto u = static_cast<std::size_t>(parent[v]);
    steps.push_back({ArgumentId{static_cast<std::uint32_t>(u)},
                     ArgumentId{static_cast<std::uint32_t>(v)},
                     provenance_.at(pair_key(u, v))});
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

namespace {

// Reflexive-transitive closure of a square boolean matrix (Warshall).
void close(std::vector<boost::dynamic_bitset<std::uint64_t>>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (i != k && rows[i].test(k)) rows[i] |= rows[k];
}

// Distinct presumptions in first-appearance order, extended with `extra`.
struct PresumptionTable {
  std::vector<EvidenceSentence> sentences;
  std::vector<std::size_t> of_argument;

  std::size_t intern(const EvidenceSentence& s) {
    for (std::size_t i = 0; i < sentences.size(); ++i)
      if (sentences[i] == s) return i;
    sentences.push_back(s);
    return sentences.size() - 1;
  }
};

}  // namespace

OrderClosure build_closure(const EvidenceStructure& structure) {
  const ValidationReport report = structure.validate();
  if (!report.ok()) {
    std::string message = "cannot close an invalid evidence structure:";
    for (const auto& e : report.errors) message += "\n  " + e;
    throw DeclarationError(message);
  }

  const auto& args = structure.arguments();
  const std::size_t n = args.size();
  OrderClosure closure;
  closure.rows_.assign(n, boost::dynamic_bitset<std::uint64_t>(n));
  closure.seeds_out_.assign(n, {});

  PresumptionTable table;
  for (const auto& a : args) table.of_argument.push_back(table.intern(a.presumption));
  const std::size_t distinct = table.sentences.size();

  // (i), (ii): declarations, presumption-level ones expanded to all pairs.
  for (const auto& pair : expand_declarations(structure)) {
    const Provenance p{SeedSource::kDeclaration, pair.declaration};
    closure.seed(pair.lower.index(), pair.upper.index(), p);
    if (pair.kind == RelationKind::kEqual) closure.seed(pair.upper.index(), pair.lower.index(), p);
  }

  // (iii) constraint 3.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && table.of_argument[a] == table.of_argument[b] &&
          subset_of(args[a].conclusion, args[b].conclusion))
        closure.seed(a, b, {SeedSource::kConstraint3});

  // (iv) constraint 4: b's presumption strictly implies a's gives a <= b.
  std::vector<std::vector<bool>> strictly(distinct, std::vector<bool>(distinct, false));
  for (std::size_t x = 0; x < distinct; ++x)
    for (std::size_t y = 0; y < distinct; ++y)
      strictly[x][y] = x != y && strictly_implies(table.sentences[x], table.sentences[y]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (strictly[table.of_argument[b]][table.of_argument[a]])
        closure.seed(a, b, {SeedSource::kConstraint4});

  // (v) same-presumption equality.
  if (structure.options().same_presumption_equal)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && table.of_argument[a] == table.of_argument[b])
          closure.seed(a, b, {SeedSource::kSamePresumption});

  // (vi) conjunction lifting over the presumption-level declared relation.
  if (structure.options().conjunction_lifting) {
    PresumptionTable levels = table;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& decl : structure.declarations()) {
      if (decl.level != RelationDeclaration::Level::kPresumption) continue;
      const std::size_t lo = levels.intern(decl.lower_presumption->sentence);
      const std::size_t up = levels.intern(decl.upper_presumption->sentence);
      edges.emplace_back(lo, up);
      if (decl.kind == RelationKind::kEqual) edges.emplace_back(up, lo);
    }
    const std::size_t m = levels.sentences.size();
    std::vector<boost::dynamic_bitset<std::uint64_t>> below(m, boost::dynamic_bitset<std::uint64_t>(m));
    for (auto [lo, up] : edges) below[lo].set(up);
    close(below);
    auto pres_leq = [&](std::size_t x, std::size_t y) { return below[x].test(y); };

    // A target <z, q> decomposes as z & z, and additionally as x' & y' for
    // each conjunction it was generated from.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> shapes(n);
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t z = table.of_argument[t];
      shapes[t].emplace_back(z, z);
      for (const auto& parents : args[t].conjunction_parents)
        shapes[t].emplace_back(table.of_argument[parents.left.index()],
                               table.of_argument[parents.right.index()]);
    }
    for (std::size_t s = 0; s < n; ++s) {
      for (const auto& parents : args[s].conjunction_parents) {
        const std::size_t x = table.of_argument[parents.left.index()];
        const std::size_t y = table.of_argument[parents.right.index()];
        for (std::size_t t = 0; t < n; ++t) {
          if (s == t) continue;
          const bool lifted = std::any_of(shapes[t].begin(), shapes[t].end(), [&](auto shape) {
            auto [xp, yp] = shape;
            return (pres_leq(x, xp) && pres_leq(y, yp)) || (pres_leq(x, yp) && pres_leq(y, xp));
          });
          if (lifted) closure.seed(s, t, {SeedSource::kConjunctionLifting});
        }
      }
    }
  }

  close(closure.rows_);
  return closure;
}

ConsistencyReport check_consistency(const OrderClosure& closure, const EvidenceStructure& structure) {
  if (closure.size() != structure.size())
    throw UsageError("closure was not built from this structure");
  ConsistencyReport report;
  for (const auto& pair : expand_declarations(structure)) {
    if (pair.kind == RelationKind::kStrict) {
      if (!closure.leq(pair.upper, pair.lower)) continue;
      Violation v{pair, pair.upper, pair.lower, {}};
      if (pair.lower != pair.upper) {
        v.chain = closure.chain(pair.lower, pair.upper);
        auto back = closure.chain(pair.upper, pair.lower);
        v.chain.insert(v.chain.end(), back.begin(), back.end());
      }
      report.violations.push_back(std::move(v));
      continue;
    }
    if (pair.kind == RelationKind::kEqual) {
      if (!closure.leq(pair.lower, pair.upper))
        report.violations.push_back({pair, pair.lower, pair.upper, {}});
      if (!closure.leq(pair.upper, pair.lower))
        report.violations.push_back({pair, pair.upper, pair.lower, {}});
    }
  }
  return report;
}

}  // namespace res
