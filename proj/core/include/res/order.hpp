#pragma once

// The argument-strength preorder: seeded from declarations and the
// structural constraints, closed reflexively and transitively.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "res/structure.hpp"

namespace res {

enum class SeedSource {
  kDeclaration,         // a declared relation (argument or presumption level)
  kConstraint3,         // same presumption, conclusion subset
  kConstraint4,         // strictly more specific presumption
  kSamePresumption,     // same_presumption_equal
  kConjunctionLifting,  // conjunction_lifting
};

std::string_view to_string(SeedSource source);

struct Provenance {
  SeedSource source = SeedSource::kDeclaration;
  std::size_t declaration = 0;  // index into structure.declarations() for kDeclaration
};

// "declared 'pres(e12) < pres(e13)'", "constraint 4", ...
std::string describe(const Provenance& provenance, const EvidenceStructure& structure);

struct ChainStep {
  ArgumentId lower;
  ArgumentId upper;
  Provenance provenance;
};

// One argument pair contributed by a declaration after presumption-level
// expansion.
struct DeclaredPair {
  std::size_t declaration;
  RelationKind kind;
  ArgumentId lower;
  ArgumentId upper;
};

std::vector<DeclaredPair> expand_declarations(const EvidenceStructure& structure);

class OrderClosure {
 public:
  std::size_t size() const noexcept { return rows_.size(); }

  // All four throw UsageError for ids outside the structure.
  bool leq(ArgumentId a, ArgumentId b) const;
  bool strictly_less(ArgumentId a, ArgumentId b) const;
  bool equivalent(ArgumentId a, ArgumentId b) const;
  bool incomparable(ArgumentId a, ArgumentId b) const;

  bool is_seed(ArgumentId a, ArgumentId b) const;
  std::optional<Provenance> seed_provenance(ArgumentId a, ArgumentId b) const;
  std::size_t seed_count() const noexcept { return provenance_.size(); }

  // Shortest sequence of seeded pairs composing a <= b; empty when a == b or
  // when the pair is not in the relation.
  std::vector<ChainStep> chain(ArgumentId a, ArgumentId b) const;

 private:
  friend OrderClosure build_closure(const EvidenceStructure& structure);

  void seed(std::size_t a, std::size_t b, Provenance provenance);
  void check(ArgumentId id) const;
  std::uint64_t pair_key(std::size_t a, std::size_t b) const noexcept {
    return static_cast<std::uint64_t>(a) * rows_.size() + b;
  }

  std::vector<boost::dynamic_bitset<std::uint64_t>> rows_;
  std::vector<std::vector<std::uint32_t>> seeds_out_;
  std::unordered_map<std::uint64_t, Provenance> provenance_;
};

// Smallest reflexive-transitive relation containing every seed. Throws
// DeclarationError when the structure does not validate.
OrderClosure build_closure(const EvidenceStructure& structure);

struct Violation {
  DeclaredPair declared;
  // The pair whose presence contradicts the declaration: (upper, lower) for
  // a strict declaration, the missing direction for an equality.
  ArgumentId counter_lower;
  ArgumentId counter_upper;
  // For strict declarations: the declared step followed by the path back,
  // i.e. the cycle that symmetrizes the pair.
  std::vector<ChainStep> chain;
};

struct ConsistencyReport {
  std::vector<Violation> violations;

  bool consistent() const noexcept { return violations.empty(); }
};

ConsistencyReport check_consistency(const OrderClosure& closure, const EvidenceStructure& structure);

}  // namespace res
