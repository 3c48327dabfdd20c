#include <random>

#include "doctest.h"
#include "instance.hpp"
#include "oracle.hpp"
#include "res/error.hpp"
#include "res/order.hpp"

using namespace res;

namespace {

struct Frames {
  EvidenceFramePtr e = EvidenceFrame::create({"e1", "e2"});
  ConclusionFramePtr c = ConclusionFrame::create({"Al1", "Al2", "Al3"});
  EvidenceSentence s(const char* text) const { return build_sentence(e, text); }
  ConclusionSentence p(const char* text) const { return parse_conclusion(c, text); }
  PresumptionRef ref(const char* text) const { return {s(text), text}; }
};

ArgumentId id(std::uint32_t v) { return ArgumentId{v}; }

}  // namespace

TEST_CASE("structural constraints seed the relation") {
  Frames f;
  StructureOptions opts;
  opts.same_presumption_equal = false;
  StructureBuilder b("t", f.e, f.c, opts);
  auto narrow = b.add_support(f.s("e1"), f.p("{Al1}"), "narrow");
  auto wide = b.add_support(f.s("e1"), f.p("{Al1,Al2}"), "wide");
  auto specific = b.add_support(f.s("e1 & e2"), f.p("{Al3}"), "specific");
  auto other = b.add_support(f.s("e2"), f.p("{Al2}"), "other");
  auto es = std::move(b).build();
  auto cl = build_closure(es);

  CHECK(cl.strictly_less(narrow, wide));
  CHECK(cl.seed_provenance(narrow, wide)->source == SeedSource::kConstraint3);
  CHECK(cl.strictly_less(narrow, specific));
  CHECK(cl.seed_provenance(wide, specific)->source == SeedSource::kConstraint4);
  CHECK(cl.strictly_less(other, specific));
  CHECK(cl.incomparable(narrow, other));
  CHECK(cl.leq(narrow, narrow));
  CHECK_FALSE(cl.is_seed(narrow, narrow));
  CHECK_THROWS_AS((void)cl.leq(narrow, id(9)), UsageError);
}

TEST_CASE("same-presumption equality") {
  Frames f;
  StructureBuilder b("t", f.e, f.c);
  auto x = b.add_support(f.s("e1"), f.p("{Al1}"));
  auto y = b.add_support(f.s("e1"), f.p("{Al2}"));
  auto es = std::move(b).build();
  auto cl = build_closure(es);
  CHECK(cl.equivalent(x, y));
  CHECK(cl.seed_provenance(x, y)->source == SeedSource::kSamePresumption);
}

TEST_CASE("presumption-level declarations expand to every pair") {
  Frames f;
  StructureBuilder b("t", f.e, f.c);
  b.add_support(f.s("e1"), f.p("{Al1}"));
  b.add_support(f.s("e1"), f.p("{Al2}"));
  b.add_support(f.s("e2"), f.p("{Al3}"));
  b.declare(RelationDeclaration::presumptions(RelationKind::kStrict, f.ref("e2"), f.ref("e1")));
  auto es = std::move(b).build();
  auto pairs = expand_declarations(es);
  REQUIRE(pairs.size() == 2);
  auto cl = build_closure(es);
  CHECK(cl.strictly_less(id(2), id(0)));
  CHECK(cl.strictly_less(id(2), id(1)));
  auto prov = cl.seed_provenance(id(2), id(0));
  REQUIRE(prov);
  CHECK(prov->source == SeedSource::kDeclaration);
  CHECK(describe(*prov, es) == "declared 'pres(e2) < pres(e1)'");
  CHECK(check_consistency(cl, es).consistent());
}

TEST_CASE("chains compose seeded steps") {
  Frames f;
  StructureOptions opts;
  opts.same_presumption_equal = false;
  StructureBuilder b("t", f.e, f.c, opts);
  b.add_support(f.s("e1"), f.p("{Al1}"), "a");
  b.add_support(f.s("e2"), f.p("{Al2}"), "b");
  b.add_support(f.s("!e1"), f.p("{Al3}"), "c");
  b.declare(RelationDeclaration::arguments(RelationKind::kLeq, "a", "b"));
  b.declare(RelationDeclaration::arguments(RelationKind::kStrict, "b", "c"));
  auto es = std::move(b).build();
  auto cl = build_closure(es);
  auto steps = cl.chain(id(0), id(2));
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].lower == id(0));
  CHECK(steps[0].upper == id(1));
  CHECK(steps[1].upper == id(2));
  CHECK(steps[1].provenance.declaration == 1);
  CHECK(cl.chain(id(2), id(0)).empty());
  CHECK(cl.chain(id(1), id(1)).empty());
}

TEST_CASE("a strict declaration contradicted by the closure is reported with its cycle") {
  Frames f;
  StructureBuilder b("t", f.e, f.c);
  b.add_support(f.s("e1"), f.p("{Al1}"), "a");
  b.add_support(f.s("e2"), f.p("{Al2}"), "b");
  b.add_support(f.s("!e2"), f.p("{Al3}"), "c");
  b.declare(RelationDeclaration::arguments(RelationKind::kStrict, "a", "b"));
  b.declare(RelationDeclaration::arguments(RelationKind::kLeq, "b", "c"));
  b.declare(RelationDeclaration::arguments(RelationKind::kLeq, "c", "a"));
  auto es = std::move(b).build();
  auto cl = build_closure(es);
  auto report = check_consistency(cl, es);
  REQUIRE(report.violations.size() == 1);
  const auto& v = report.violations[0];
  CHECK(v.declared.declaration == 0);
  CHECK(v.counter_lower == id(1));
  CHECK(v.counter_upper == id(0));
  REQUIRE(v.chain.size() == 3);
  CHECK(v.chain.front().lower == id(0));
  CHECK(v.chain.back().upper == id(0));
  for (std::size_t i = 1; i < v.chain.size(); ++i) CHECK(v.chain[i].lower == v.chain[i - 1].upper);
}

TEST_CASE("constraint 4 can contradict a declaration") {
  Frames f;
  StructureBuilder b("t", f.e, f.c);
  b.add_support(f.s("e1"), f.p("{Al1}"), "general");
  b.add_support(f.s("e1 & e2"), f.p("{Al2}"), "specific");
  b.declare(RelationDeclaration::arguments(RelationKind::kStrict, "specific", "general"));
  auto es = std::move(b).build();
  auto report = check_consistency(build_closure(es), es);
  REQUIRE(report.violations.size() == 1);
  REQUIRE(report.violations[0].chain.size() == 2);
  CHECK(report.violations[0].chain[1].provenance.source == SeedSource::kConstraint4);
}

TEST_CASE("an equality declaration can only be violated by nothing, so reports stay empty") {
  Frames f;
  StructureBuilder b("t", f.e, f.c);
  b.add_support(f.s("e1"), f.p("{Al1}"), "a");
  b.add_support(f.s("e2"), f.p("{Al2}"), "b");
  b.declare(RelationDeclaration::arguments(RelationKind::kEqual, "a", "b"));
  auto es = std::move(b).build();
  auto cl = build_closure(es);
  CHECK(cl.equivalent(id(0), id(1)));
  CHECK(check_consistency(cl, es).consistent());
}

TEST_CASE("conjunction lifting orders conjunctions by their declared parts") {
  auto e = EvidenceFrame::create({"x1", "x2", "y1", "y2"});
  auto c = ConclusionFrame::create({"P", "Q"});
  StructureOptions opts;
  opts.conjunction_arguments = true;
  opts.conjunction_lifting = true;
  StructureBuilder b("t", e, c, opts);
  auto s = [&](const char* t) { return build_sentence(e, t); };
  b.add_support(s("x1"), parse_conclusion(c, "{P}"), "x1");
  b.add_support(s("y1"), parse_conclusion(c, "{P}"), "y1");
  b.add_support(s("x2"), parse_conclusion(c, "{Q}"), "x2");
  b.add_support(s("y2"), parse_conclusion(c, "{Q}"), "y2");
  b.declare(RelationDeclaration::presumptions(RelationKind::kLeq, {s("x1"), "x1"}, {s("x2"), "x2"}));
  b.declare(RelationDeclaration::presumptions(RelationKind::kLeq, {s("y1"), "y1"}, {s("y2"), "y2"}));
  auto es = std::move(b).build();
  auto cl = build_closure(es);
  auto lo = *es.find("x1&y1");
  auto hi = *es.find("x2&y2");
  CHECK(cl.leq(lo, hi));
  CHECK(cl.seed_provenance(lo, hi)->source == SeedSource::kConjunctionLifting);

  opts.conjunction_lifting = false;
  StructureBuilder plain("t", e, c, opts);
  plain.add_support(s("x1"), parse_conclusion(c, "{P}"), "x1");
  plain.add_support(s("y1"), parse_conclusion(c, "{P}"), "y1");
  plain.add_support(s("x2"), parse_conclusion(c, "{Q}"), "x2");
  plain.add_support(s("y2"), parse_conclusion(c, "{Q}"), "y2");
  auto es2 = std::move(plain).build();
  CHECK_FALSE(build_closure(es2).leq(*es2.find("x1&y1"), *es2.find("x2&y2")));
}

TEST_CASE("closure is reflexive, transitive, honours constraints 3 and 4, and is minimal") {
  std::mt19937 rng(424242);
  restest::InstanceShape shape;
  shape.max_atoms = 4;
  for (int round = 0; round < 400; ++round) {
    auto inst = restest::random_instance(rng, shape);
    auto es = restest::to_structure(inst);
    auto cl = build_closure(es);
    const auto n = es.size();
    const auto& args = es.arguments();
    for (std::uint32_t a = 0; a < n; ++a) {
      REQUIRE(cl.leq(id(a), id(a)));
      for (std::uint32_t b = 0; b < n; ++b) {
        const auto& pa = args[a].presumption;
        const auto& pb = args[b].presumption;
        if (pa == pb && subset_of(args[a].conclusion, args[b].conclusion)) REQUIRE(cl.leq(id(a), id(b)));
        if (strictly_implies(pb, pa)) REQUIRE(cl.leq(id(a), id(b)));
        if (!cl.leq(id(a), id(b))) continue;
        for (std::uint32_t c = 0; c < n; ++c)
          if (cl.leq(id(b), id(c))) REQUIRE(cl.leq(id(a), id(c)));
        // Every derived pair is witnessed by a chain of seeds.
        if (a != b) {
          auto steps = cl.chain(id(a), id(b));
          REQUIRE_FALSE(steps.empty());
          for (const auto& st : steps) REQUIRE(cl.is_seed(st.lower, st.upper));
        }
      }
    }
    // Agrees with the naive fixpoint of the oracle.
    restest::Oracle oracle(inst);
    REQUIRE(oracle.arguments().size() == n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        std::size_t oa = n, ob = n;
        for (std::size_t k = 0; k < n; ++k) {
          const auto& o = oracle.arguments()[k];
          if (o.presumption == restest::mask_of(args[a].presumption) && o.conclusion == args[a].conclusion.members()) oa = k;
          if (o.presumption == restest::mask_of(args[b].presumption) && o.conclusion == args[b].conclusion.members()) ob = k;
        }
        REQUIRE(oa < n);
        REQUIRE(ob < n);
        REQUIRE(oracle.leq(oa, ob) == cl.leq(id(a), id(b)));
      }
  }
}

TEST_CASE("closure of an invalid structure is refused") {
  Frames f;
  StructureBuilder b("t", f.e, f.c);
  b.add_support(f.s("e1"), f.p("{Al1}"), "a");
  b.declare(RelationDeclaration::arguments(RelationKind::kLeq, "a", "zz"));
  CHECK_THROWS_AS(std::move(b).build(), DeclarationError);
}
