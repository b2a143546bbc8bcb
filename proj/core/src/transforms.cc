#include "logicwb/transforms.h"

#include <algorithm>
#include <deque>
#include <map>

#include "logicwb/error.h"

namespace logicwb {

namespace {

void require_tree(const PointedStructure& t, const char* op) {
  if (t.points.size() != 1 || !is_tree(t)) {
    throw PreconditionError(std::string(op) + " needs a tree rooted at its point");
  }
}

}  // namespace

PointedStructure unravel(const PointedStructure& m, std::size_t depth) {
  if (m.points.size() != 1) throw PreconditionError("unravel needs exactly one point");
  const Structure& s = m.structure;
  struct PathNode {
    Node last;
    std::size_t length;
    std::string name;
  };
  std::vector<PathNode> nodes{{m.point(), 0, s.name(m.point())}};
  std::vector<NodePair> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].length == depth) continue;
    for (Node v : s.successors(kAccessibility, nodes[i].last)) {
      edges.emplace_back(static_cast<Node>(i), static_cast<Node>(nodes.size()));
      nodes.push_back({v, nodes[i].length + 1, nodes[i].name + "/" + s.name(v)});
    }
  }
  StructureBuilder b;
  for (const auto& n : nodes) b.add_node(n.name);
  for (const auto& [name, rel] : s.unary_relations()) {
    b.declare_unary(name);
    for (Node i = 0; i < nodes.size(); ++i) {
      if (rel.contains(nodes[i].last)) b.add_unary(name, i);
    }
  }
  b.declare_binary(kAccessibility);
  for (auto [x, y] : edges) b.add_binary(kAccessibility, x, y);
  return PointedStructure(b.build(), Node{0});
}

namespace {

// Canonical text of the subtree below v: label bits then sorted child codes.
std::string canonical_code(const Structure& t, Node v, const std::vector<std::string>& vocab,
                           std::vector<std::string>& memo) {
  std::vector<std::string> kids;
  for (Node c : t.successors(kAccessibility, v)) kids.push_back(canonical_code(t, c, vocab, memo));
  std::sort(kids.begin(), kids.end());
  std::string code;
  for (const auto& p : vocab) code += t.holds(p, v) ? '1' : '0';
  code += '(';
  for (const auto& k : kids) code += k;
  code += ')';
  memo[v] = code;
  return code;
}

ModalFormula char_formula_at(const Structure& t, Node v, const std::vector<std::string>& vocab,
                             const std::vector<std::string>& code) {
  std::vector<ModalFormula> parts;
  for (const auto& p : vocab) parts.push_back(t.holds(p, v) ? ml::prop(p) : ml::neg(ml::prop(p)));
  auto kids = t.successors(kAccessibility, v);
  if (kids.empty()) {
    parts.push_back(ml::neg(ml::dia(ml::top())));
    return ml::conj_all(std::move(parts));
  }
  std::map<std::string, std::pair<Node, unsigned>> classes;
  for (Node c : kids) {
    auto [it, fresh] = classes.emplace(code[c], std::make_pair(c, 0u));
    ++it->second.second;
  }
  for (const auto& [key, rep] : classes) {
    const ModalFormula psi = char_formula_at(t, rep.first, vocab, code);
    parts.push_back(ml::dia_geq(rep.second, psi));
    parts.push_back(ml::neg(ml::dia_geq(rep.second + 1, psi)));
  }
  parts.push_back(ml::neg(ml::dia_geq(static_cast<unsigned>(kids.size()) + 1, ml::top())));
  return ml::conj_all(std::move(parts));
}

}  // namespace

ModalFormula gml_char_formula(const PointedStructure& t, const Vocabulary& vocab) {
  require_tree(t, "gml_char_formula");
  for (const auto& [name, rel] : t.structure.unary_relations()) {
    if (!rel.empty() && !vocab.unary.count(name)) {
      throw PreconditionError("tree uses unary name '" + name + "' outside the vocabulary");
    }
  }
  const std::vector<std::string> letters(vocab.unary.begin(), vocab.unary.end());
  std::vector<std::string> code(t.structure.size());
  canonical_code(t.structure, t.point(), letters, code);
  return char_formula_at(t.structure, t.point(), letters, code);
}

PointedStructure add_copies(const PointedStructure& m, Node v, const PointedStructure& t, std::size_t count) {
  require_tree(m, "add_copies");
  require_tree(t, "add_copies");
  if (v >= m.structure.size()) throw PreconditionError("add_copies: attachment node outside the domain");
  if (count == 0) return m;
  const Structure& s = m.structure;
  const Structure& c = t.structure;
  StructureBuilder b;
  for (Node u = 0; u < s.size(); ++u) b.add_node(s.name(u));
  for (const auto& [name, rel] : s.unary_relations()) {
    b.declare_unary(name);
    for (Node u : rel.nodes) b.add_unary(name, u);
  }
  for (const auto& [name, rel] : s.binary_relations()) {
    b.declare_binary(name);
    for (auto [x, y] : rel.pairs) b.add_binary(name, x, y);
  }
  for (const auto& [name, rel] : c.unary_relations()) b.declare_unary(name);
  for (const auto& [name, rel] : c.binary_relations()) b.declare_binary(name);
  b.declare_binary(kAccessibility);
  for (std::size_t copy = 0; copy < count; ++copy) {
    std::vector<Node> remap(c.size());
    for (Node u = 0; u < c.size(); ++u) {
      std::string id = c.name(u) + "_" + std::to_string(copy + 1);
      while (b.find(id)) id += "'";
      remap[u] = b.add_node(std::move(id));
    }
    for (const auto& [name, rel] : c.unary_relations()) {
      for (Node u : rel.nodes) b.add_unary(name, remap[u]);
    }
    for (const auto& [name, rel] : c.binary_relations()) {
      for (auto [x, y] : rel.pairs) b.add_binary(name, remap[x], remap[y]);
    }
    b.add_binary(kAccessibility, v, remap[t.point()]);
  }
  return PointedStructure(b.build(), m.points);
}

PointedStructure subtree(const PointedStructure& t, std::string_view p) {
  if (t.points.size() != 1) throw PreconditionError("subtree needs exactly one point");
  const Structure& s = t.structure;
  std::optional<Node> root;
  for (Node v = 0; v < s.size(); ++v) {
    if (s.predecessors(kAccessibility, v).empty()) {
      if (root) throw PreconditionError("subtree needs a tree");
      root = v;
    }
  }
  if (!root || !is_tree(PointedStructure(s, *root))) throw PreconditionError("subtree needs a tree");
  const Node n = t.point();
  if (!s.holds(p, n)) throw PreconditionError("subtree: the point does not satisfy " + std::string(p));
  Node top = n;
  while (true) {
    auto parents = s.predecessors(kAccessibility, top);
    if (parents.empty() || !s.holds(p, parents[0])) break;
    top = parents[0];
  }
  std::vector<Node> keep{top};
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Node c : s.successors(kAccessibility, keep[i])) {
      if (s.holds(p, c)) keep.push_back(c);
    }
  }
  std::sort(keep.begin(), keep.end());
  Structure out = induced(s, keep);
  const Node point = out.node(s.name(n));
  return PointedStructure(std::move(out), point);
}

RaTerm ra_relativize(const RaTerm& t, const std::string& r) {
  switch (t.kind()) {
    case RaKind::kAtom:
    case RaKind::kId:
    case RaKind::kTop: {
      const RaTerm rel = ra::atom(r);
      return ra::meet(t, ra::comp(rel, ra::comp(ra::top(), ra::conv(rel))));
    }
    case RaKind::kConv: return ra::conv(ra_relativize(t.arg(), r));
    default: return RaTerm::make(t.kind(), "", {ra_relativize(t.lhs(), r), ra_relativize(t.rhs(), r)});
  }
}

namespace {

Var third(Var a, Var b) {
  for (Var v : kAllVars) {
    if (v != a && v != b) return v;
  }
  return Var::kZ;
}

FoFormula translate(const RaTerm& t, Var x, Var y) {
  switch (t.kind()) {
    case RaKind::kAtom: return fo::bin(t.name(), x, y);
    case RaKind::kId: return fo::eq(x, y);
    case RaKind::kTop: return fo::eq(x, x);
    case RaKind::kMeet: return fo::conj(translate(t.lhs(), x, y), translate(t.rhs(), x, y));
    case RaKind::kDiff: return fo::conj(translate(t.lhs(), x, y), fo::neg(translate(t.rhs(), x, y)));
    case RaKind::kConv: return translate(t.arg(), y, x);
    case RaKind::kComp: {
      const Var z = third(x, y);
      return fo::exists(z, std::nullopt, fo::conj(translate(t.lhs(), x, z), translate(t.rhs(), z, y)));
    }
  }
  return fo::eq(x, x);
}

}  // namespace

FoFormula ra_to_fo3(const RaTerm& t) { return translate(t, Var::kX, Var::kY); }

}  // namespace logicwb
