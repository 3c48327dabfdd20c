#include "instance.hpp"

#include <functional>

#include "res/semantics.hpp"

namespace restest {

res::EvidenceFramePtr evidence_frame(std::size_t atoms) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms; ++i) names.push_back("e" + std::to_string(i + 1));
  return res::EvidenceFrame::create(names);
}

res::ConclusionFramePtr conclusion_frame(std::size_t alternatives) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < alternatives; ++i) names.push_back("A" + std::to_string(i + 1));
  return res::ConclusionFrame::create(names);
}

res::EvidenceSentence sentence(const res::EvidenceFramePtr& frame, std::uint32_t models) {
  res::EvidenceSentence::ModelSet set(frame->valuation_count());
  for (std::size_t v = 0; v < set.size(); ++v)
    if ((models >> v) & 1U) set.set(v);
  return {frame, set};
}

std::uint32_t mask_of(const res::EvidenceSentence& s) {
  std::uint32_t m = 0;
  for (std::size_t v = 0; v < s.models().size(); ++v)
    if (s.holds_at(v)) m |= 1U << v;
  return m;
}

res::EvidenceStructure to_structure(const PlainInstance& instance) {
  auto ef = evidence_frame(instance.atoms);
  auto cf = conclusion_frame(instance.alternatives);
  res::StructureBuilder builder("generated", ef, cf, instance.options);
  for (std::size_t i = 0; i < instance.arguments.size(); ++i) {
    const auto& a = instance.arguments[i];
    builder.add_support(sentence(ef, a.presumption), res::ConclusionSentence(cf, a.conclusion),
                        "a" + std::to_string(i));
  }
  for (const auto& d : instance.declarations) {
    if (d.presumption_level) {
      auto lo = sentence(ef, d.lower);
      auto up = sentence(ef, d.upper);
      builder.declare(res::RelationDeclaration::presumptions(
          d.kind, {lo, res::to_formula(lo)}, {up, res::to_formula(up)}));
    } else {
      builder.declare(res::RelationDeclaration::arguments(d.kind, "a" + std::to_string(d.lower),
                                                          "a" + std::to_string(d.upper)));
    }
  }
  return std::move(builder).build();
}

namespace {

std::uint32_t atom_mask(std::size_t atom, std::size_t atoms) {
  std::uint32_t m = 0;
  for (std::uint32_t v = 0; v < (1U << atoms); ++v)
    if ((v >> atom) & 1U) m |= 1U << v;
  return m;
}

}  // namespace

std::uint32_t random_presumption(std::mt19937& rng, std::size_t atoms) {
  const std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << (1U << atoms)) - 1);
  std::uniform_int_distribution<std::size_t> pick(0, atoms - 1);
  auto literal = [&] {
    std::uint32_t m = atom_mask(pick(rng), atoms);
    return rng() % 3 == 0 ? (~m & all) : m;
  };
  for (;;) {
    std::uint32_t m = literal();
    switch (rng() % 5) {
      case 0:
      case 1: break;
      case 2:
      case 3: m &= literal(); break;
      default: m |= literal(); break;
    }
    if (m != 0) return m;
  }
}

std::uint32_t random_satisfiable(std::mt19937& rng, std::size_t atoms) {
  const std::uint64_t all = (std::uint64_t{1} << (1U << atoms)) - 1;
  std::uniform_int_distribution<std::uint64_t> dist(1, all);
  return static_cast<std::uint32_t>(dist(rng));
}

PlainInstance random_instance(std::mt19937& rng, const InstanceShape& shape) {
  PlainInstance inst;
  inst.atoms = std::uniform_int_distribution<std::size_t>(shape.min_atoms, shape.max_atoms)(rng);
  inst.alternatives = shape.alternatives;
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, shape.max_arguments)(rng);

  // Reusing presumptions makes same-presumption effects and presumption-level
  // declarations bite.
  std::vector<std::uint32_t> pool;
  const std::size_t distinct = std::uniform_int_distribution<std::size_t>(1, count)(rng);
  for (std::size_t i = 0; i < distinct; ++i) pool.push_back(random_presumption(rng, inst.atoms));
  std::uniform_int_distribution<std::size_t> from_pool(0, pool.size() - 1);
  std::uniform_int_distribution<std::uint32_t> conclusion(1, inst.full_conclusion());
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t c = conclusion(rng);
    if (rng() % 2) c &= -c;  // favour singletons
    inst.arguments.push_back({pool[from_pool(rng)], c});
  }

  const std::size_t decls = std::uniform_int_distribution<std::size_t>(0, shape.max_declarations)(rng);
  std::uniform_int_distribution<std::uint32_t> arg(0, static_cast<std::uint32_t>(count - 1));
  for (std::size_t i = 0; i < decls; ++i) {
    PlainDeclaration d;
    d.kind = static_cast<res::RelationKind>(rng() % 3);
    d.presumption_level = shape.presumption_declarations && rng() % 2 == 0;
    if (d.presumption_level) {
      d.lower = pool[from_pool(rng)];
      d.upper = pool[from_pool(rng)];
    } else {
      d.lower = arg(rng);
      d.upper = arg(rng);
    }
    inst.declarations.push_back(d);
  }

  if (shape.vary_options) {
    inst.options.same_presumption_equal = rng() % 4 != 0;
    inst.options.conjunction_arguments = rng() % 2 == 0;
    inst.options.conjunction_lifting = inst.options.conjunction_arguments && rng() % 2 == 0;
  }
  return inst;
}

RandomFormula random_formula(std::mt19937& rng, std::size_t atoms, int depth) {
  // Build a tree first, then render and evaluate it independently.
  struct Node {
    int op;  // 0 atom, 1 not, 2 and, 3 or
    std::size_t atom = 0;
    std::vector<Node> kids;
  };
  std::function<Node(int)> grow = [&](int d) -> Node {
    const int op = d == 0 ? 0 : static_cast<int>(rng() % 4);
    Node n{op, 0, {}};
    if (op == 0) n.atom = rng() % atoms;
    if (op == 1) n.kids.push_back(grow(d - 1));
    if (op >= 2) {
      n.kids.push_back(grow(d - 1));
      n.kids.push_back(grow(d - 1));
    }
    return n;
  };
  std::function<std::string(const Node&)> render = [&](const Node& n) -> std::string {
    switch (n.op) {
      case 0: return "e" + std::to_string(n.atom + 1);
      case 1: return (rng() % 2 ? "!" : "~") + render(n.kids[0]);
      case 2: return "(" + render(n.kids[0]) + " & " + render(n.kids[1]) + ")";
      default: return "(" + render(n.kids[0]) + " | " + render(n.kids[1]) + ")";
    }
  };
  std::function<bool(const Node&, std::uint32_t)> eval = [&](const Node& n, std::uint32_t v) -> bool {
    switch (n.op) {
      case 0: return (v >> n.atom) & 1U;
      case 1: return !eval(n.kids[0], v);
      case 2: return eval(n.kids[0], v) && eval(n.kids[1], v);
      default: return eval(n.kids[0], v) || eval(n.kids[1], v);
    }
  };
  const Node root = grow(depth);
  RandomFormula f{render(root), 0};
  for (std::uint32_t v = 0; v < (1U << atoms); ++v)
    if (eval(root, v)) f.models |= 1U << v;
  return f;
}

}  // namespace restest
