#include "logicwb/decision.h"

#include <map>
#include <memory>
#include <set>
#include <stdexcept>

#include "logicwb/error.h"
#include "logicwb/syntax.h"

namespace logicwb {

namespace {

using FormulaSet = std::set<ModalFormula>;

// Negation normal form over literals, top/bot, and/or, diamond/box.
ModalFormula nnf(const ModalFormula& f, bool negated) {
  switch (f.kind()) {
    case ModalKind::kProp: return negated ? ml::neg(f) : f;
    case ModalKind::kTop: return negated ? ml::bot() : ml::top();
    case ModalKind::kBot: return negated ? ml::top() : ml::bot();
    case ModalKind::kNot: return nnf(f.arg(), !negated);
    case ModalKind::kAnd:
    case ModalKind::kOr: {
      const bool conj = (f.kind() == ModalKind::kAnd) != negated;
      ModalFormula a = nnf(f.lhs(), negated);
      ModalFormula b = nnf(f.rhs(), negated);
      return conj ? ml::conj(std::move(a), std::move(b)) : ml::disj(std::move(a), std::move(b));
    }
    case ModalKind::kImplies: {
      ModalFormula a = nnf(f.lhs(), !negated);
      ModalFormula b = nnf(f.rhs(), negated);
      return negated ? ml::conj(std::move(a), std::move(b)) : ml::disj(std::move(a), std::move(b));
    }
    case ModalKind::kDiamond: return negated ? ml::box(nnf(f.arg(), true)) : ml::dia(nnf(f.arg(), false));
    case ModalKind::kBox: return negated ? ml::dia(nnf(f.arg(), true)) : ml::box(nnf(f.arg(), false));
    default: throw PreconditionError("the tableau handles basic modal formulas only");
  }
}

struct TableauNode {
  std::set<std::string> letters;
  std::vector<std::shared_ptr<const TableauNode>> children;
};
using TableauModel = std::shared_ptr<const TableauNode>;

class Tableau {
 public:
  // Model of the conjunction of `s`, or null when unsatisfiable.
  TableauModel solve(FormulaSet s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    TableauModel result = expand(s);
    memo_.emplace(std::move(s), result);
    return result;
  }

 private:
  // Adds f and its conjunctive consequences; false on a clash.
  static bool absorb(FormulaSet& s, const ModalFormula& f) {
    std::vector<ModalFormula> work{f};
    while (!work.empty()) {
      ModalFormula g = std::move(work.back());
      work.pop_back();
      if (g.kind() == ModalKind::kTop) continue;
      if (g.kind() == ModalKind::kBot) return false;
      if (!s.insert(g).second) continue;
      if (g.kind() == ModalKind::kAnd) {
        work.push_back(g.lhs());
        work.push_back(g.rhs());
      } else if (g.kind() == ModalKind::kProp) {
        if (s.count(ml::neg(g))) return false;
      } else if (g.kind() == ModalKind::kNot) {
        if (s.count(g.arg())) return false;
      }
    }
    return true;
  }

  TableauModel expand(const FormulaSet& initial) {
    FormulaSet s;
    for (const auto& f : initial) {
      if (!absorb(s, f)) return nullptr;
    }
    for (const auto& f : s) {
      if (f.kind() != ModalKind::kOr) continue;
      if (s.count(f.lhs()) || s.count(f.rhs())) continue;
      if (f.lhs().kind() == ModalKind::kTop || f.rhs().kind() == ModalKind::kTop) continue;
      FormulaSet left = s;
      if (absorb(left, f.lhs())) {
        if (auto m = solve(std::move(left))) return m;
      }
      FormulaSet right = s;
      if (absorb(right, f.rhs()) && absorb(right, nnf(f.lhs(), true))) return solve(std::move(right));
      return nullptr;
    }
    auto node = std::make_shared<TableauNode>();
    std::vector<ModalFormula> boxes;
    for (const auto& f : s) {
      if (f.kind() == ModalKind::kProp) node->letters.insert(f.name());
      if (f.kind() == ModalKind::kBox) boxes.push_back(f.arg());
    }
    for (const auto& f : s) {
      if (f.kind() != ModalKind::kDiamond) continue;
      FormulaSet child(boxes.begin(), boxes.end());
      child.insert(f.arg());
      auto m = solve(std::move(child));
      if (!m) return nullptr;
      node->children.push_back(std::move(m));
    }
    return node;
  }

  std::map<FormulaSet, TableauModel> memo_;
};

PointedStructure tree_of(const TableauModel& root, const std::set<std::string>& vocab) {
  StructureBuilder b;
  for (const auto& p : vocab) b.declare_unary(p);
  b.declare_binary(kAccessibility);
  std::vector<std::pair<const TableauNode*, Node>> queue{{root.get(), b.add_node("n0")}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [t, id] = queue[i];
    for (const auto& p : t->letters) b.add_unary(p, id);
    for (const auto& c : t->children) {
      const Node child = b.add_node("n" + std::to_string(b.size()));
      b.add_binary(kAccessibility, id, child);
      queue.emplace_back(c.get(), child);
    }
  }
  return PointedStructure(b.build(), Node{0});
}

ModalFormula star(const ModalFormula& f, const ModalFormula& r) {
  switch (f.kind()) {
    case ModalKind::kProp:
    case ModalKind::kTop:
    case ModalKind::kBot: return f;
    case ModalKind::kBullet: return ml::dia(ml::conj(r, star(f.arg(), r)));
    case ModalKind::kBulletDual: return ml::neg(ml::dia(ml::conj(r, ml::neg(star(f.arg(), r)))));
    default: {
      std::vector<ModalFormula> args;
      for (const auto& a : f.args()) args.push_back(star(a, r));
      return ml::rebuild(f, std::move(args));
    }
  }
}

}  // namespace

SatResult sat_basic_modal(const ModalFormula& f) {
  if (!is_basic_modal(f)) throw PreconditionError("the tableau handles basic modal formulas only");
  Tableau tableau;
  TableauModel model = tableau.solve({nnf(f, false)});
  SatResult out;
  if (!model) return out;
  out.satisfiable = true;
  out.witness = tree_of(model, vocabulary_of(f).unary);
  if (!eval_modal(*out.witness, f, SemanticsMode::kIntended)) {
    throw std::logic_error("tableau witness fails to satisfy " + to_string(f));
  }
  return out;
}

std::string fresh_letter(const ModalFormula& f) {
  const auto used = vocabulary_of(f).unary;
  if (!used.count("_r")) return "_r";
  for (std::size_t i = 0;; ++i) {
    std::string candidate = "_r" + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

ModalFormula reduce_bullet(const ModalFormula& f) {
  const ModalFeatures ft = features_of(f);
  if (ft.grades || ft.rb) throw PreconditionError("the bullet reduction takes ML-bullet formulas only");
  const ModalFormula r = ml::prop(fresh_letter(f));
  std::vector<ModalFormula> parts{star(f, r)};
  const std::size_t depth = depth_modal(f);
  for (std::size_t k = 0; k <= depth; ++k) {
    for (const auto& psi : subformulas(f)) {
      const ModalFormula s = star(psi, r);
      parts.push_back(ml::box_n(k, ml::implies(ml::conj(r, s), ml::dia(s))));
    }
  }
  return ml::conj_all(std::move(parts));
}

SatResult sat_bullet(const ModalFormula& f) {
  const ModalFormula reduced = reduce_bullet(f);
  const std::string r = fresh_letter(f);
  SatResult basic = sat_basic_modal(reduced);
  SatResult out;
  if (!basic.satisfiable) return out;
  out.satisfiable = true;

  const Structure& w = basic.witness->structure;
  StructureBuilder b;
  for (Node v = 0; v < w.size(); ++v) b.add_node(w.name(v));
  for (const auto& [name, rel] : w.unary_relations()) {
    if (name == r) continue;
    b.declare_unary(name);
    for (Node v : rel.nodes) b.add_unary(name, v);
  }
  b.declare_binary(kAccessibility);
  b.declare_binary(kBulletAccessibility);
  for (auto [x, y] : w.binary(kAccessibility)->pairs) {
    b.add_binary(kAccessibility, x, y);
    if (w.holds(r, y)) {
      b.add_binary(kBulletAccessibility, x, y);
      b.add_binary(kAccessibility, y, y);
    }
  }
  out.witness = PointedStructure(b.build(), basic.witness->points);
  if (!eval_modal(*out.witness, f, SemanticsMode::kQuasi)) {
    throw std::logic_error("reconstructed quasi-model fails to satisfy " + to_string(f));
  }
  return out;
}

bool frame_axioms_valid_on_K(const Structure& frame, std::size_t max_nodes) {
  const std::size_t n = frame.size();
  if (n > max_nodes) throw BudgetError("frame has more nodes than the allowed maximum");
  if (n > 20) throw BudgetError("valuation enumeration is limited to 20 nodes");
  for (std::uint32_t p = 0; p < (1u << n); ++p) {
    auto holds = [&](Node v) { return ((p >> v) & 1u) != 0; };
    auto dia = [&](Node v) {
      for (Node u : frame.successors(kAccessibility, v)) {
        if (holds(u)) return true;
      }
      return false;
    };
    for (Node w = 0; w < n; ++w) {
      bool bullet = false;
      bool dual = true;
      for (Node v : frame.successors(kBulletAccessibility, w)) {
        bullet = bullet || holds(v);
        dual = dual && (!holds(v) || dia(v));
      }
      if ((bullet && !dia(w)) || !dual) return false;
    }
  }
  return true;
}

}  // namespace logicwb
