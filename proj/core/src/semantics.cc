#include "logicwb/semantics.h"

#include "logicwb/error.h"
#include "logicwb/syntax.h"

namespace logicwb {

namespace {

void check_mode(const Structure& m, const ModalFormula& f, SemanticsMode mode, bool assume_frame_K) {
  if (mode == SemanticsMode::kQuasi) {
    if (!assume_frame_K && !is_frame_K(m)) {
      throw PreconditionError("quasi semantics requires a structure in the frame class K");
    }
  } else if (features_of(f).rb) {
    throw PreconditionError("Rb modalities are only meaningful under quasi semantics");
  }
}

class ModalEvaluator {
 public:
  ModalEvaluator(const Structure& m, SemanticsMode mode)
      : m_(m), mode_(mode), r_(m.binary(kAccessibility)), rb_(m.binary(kBulletAccessibility)) {}

  bool vacuous() const { return vacuous_; }

  bool eval(Node w, const ModalFormula& f) {
    switch (f.kind()) {
      case ModalKind::kProp: return m_.holds(f.name(), w);
      case ModalKind::kTop: return true;
      case ModalKind::kBot: return false;
      case ModalKind::kNot: return !eval(w, f.arg());
      case ModalKind::kAnd: return eval(w, f.lhs()) && eval(w, f.rhs());
      case ModalKind::kOr: return eval(w, f.lhs()) || eval(w, f.rhs());
      case ModalKind::kImplies: return !eval(w, f.lhs()) || eval(w, f.rhs());
      case ModalKind::kDiamond: return at_least(r_, w, f.arg(), 1, true);
      case ModalKind::kBox: return !at_least(r_, w, f.arg(), 1, false);
      case ModalKind::kDiamondGeq: return at_least(r_, w, f.arg(), f.grade(), true);
      case ModalKind::kBoxDualGeq: return !at_least(r_, w, f.arg(), f.grade(), false);
      case ModalKind::kBullet:
        if (mode_ == SemanticsMode::kIntended) {
          vacuous_ = true;
          return false;
        }
        return at_least(rb_, w, f.arg(), 1, true);
      case ModalKind::kBulletDual:
        if (mode_ == SemanticsMode::kIntended) {
          vacuous_ = true;
          return true;
        }
        return !at_least(rb_, w, f.arg(), 1, false);
      case ModalKind::kDiamondB: return at_least(rb_, w, f.arg(), 1, true);
      case ModalKind::kBoxB: return !at_least(rb_, w, f.arg(), 1, false);
    }
    return false;
  }

 private:
  // Whether at least k successors of w give `f` the truth value `want`.
  bool at_least(const BinaryRelation* rel, Node w, const ModalFormula& f, unsigned k, bool want) {
    if (k == 0) return true;
    if (rel == nullptr) return false;
    const auto& succ = rel->successors[w];
    if (succ.size() < k) return false;
    unsigned hits = 0;
    for (std::size_t i = 0; i < succ.size(); ++i) {
      if (eval(succ[i], f) == want && ++hits >= k) return true;
      if (hits + (succ.size() - i - 1) < k) return false;
    }
    return false;
  }

  const Structure& m_;
  SemanticsMode mode_;
  const BinaryRelation* r_;
  const BinaryRelation* rb_;
  bool vacuous_ = false;
};

std::vector<char> count_geq(const Structure& m, const BinaryRelation* rel, const std::vector<char>& arg,
                            unsigned k, bool want) {
  std::vector<char> out(m.size(), k == 0 ? 1 : 0);
  if (k == 0 || rel == nullptr) return out;
  for (Node w = 0; w < m.size(); ++w) {
    unsigned hits = 0;
    for (Node v : rel->successors[w]) hits += (arg[v] != 0) == want ? 1 : 0;
    out[w] = hits >= k ? 1 : 0;
  }
  return out;
}

std::vector<char> extension(const Structure& m, const ModalFormula& f, SemanticsMode mode) {
  const std::size_t n = m.size();
  const BinaryRelation* r = m.binary(kAccessibility);
  const BinaryRelation* rb = m.binary(kBulletAccessibility);
  auto negate = [](std::vector<char> v) {
    for (auto& c : v) c = c ? 0 : 1;
    return v;
  };
  switch (f.kind()) {
    case ModalKind::kProp: {
      std::vector<char> out(n, 0);
      if (const auto* u = m.unary(f.name())) out = u->member;
      return out;
    }
    case ModalKind::kTop: return std::vector<char>(n, 1);
    case ModalKind::kBot: return std::vector<char>(n, 0);
    case ModalKind::kNot: return negate(extension(m, f.arg(), mode));
    case ModalKind::kAnd:
    case ModalKind::kOr:
    case ModalKind::kImplies: {
      auto a = extension(m, f.lhs(), mode);
      auto b = extension(m, f.rhs(), mode);
      for (std::size_t i = 0; i < n; ++i) {
        if (f.kind() == ModalKind::kAnd) a[i] = a[i] && b[i];
        if (f.kind() == ModalKind::kOr) a[i] = a[i] || b[i];
        if (f.kind() == ModalKind::kImplies) a[i] = !a[i] || b[i];
      }
      return a;
    }
    case ModalKind::kDiamond: return count_geq(m, r, extension(m, f.arg(), mode), 1, true);
    case ModalKind::kBox: return negate(count_geq(m, r, extension(m, f.arg(), mode), 1, false));
    case ModalKind::kDiamondGeq: return count_geq(m, r, extension(m, f.arg(), mode), f.grade(), true);
    case ModalKind::kBoxDualGeq:
      return negate(count_geq(m, r, extension(m, f.arg(), mode), f.grade(), false));
    case ModalKind::kBullet:
      if (mode == SemanticsMode::kIntended) return std::vector<char>(n, 0);
      return count_geq(m, rb, extension(m, f.arg(), mode), 1, true);
    case ModalKind::kBulletDual:
      if (mode == SemanticsMode::kIntended) return std::vector<char>(n, 1);
      return negate(count_geq(m, rb, extension(m, f.arg(), mode), 1, false));
    case ModalKind::kDiamondB: return count_geq(m, rb, extension(m, f.arg(), mode), 1, true);
    case ModalKind::kBoxB: return negate(count_geq(m, rb, extension(m, f.arg(), mode), 1, false));
  }
  return std::vector<char>(n, 0);
}

class FoEvaluator {
 public:
  explicit FoEvaluator(const Structure& m) : m_(m) {}

  bool eval(Assignment& a, const FoFormula& f) {
    switch (f.kind()) {
      case FoKind::kBinAtom: return m_.holds(f.name(), *a.get(f.v1()), *a.get(f.v2()));
      case FoKind::kUnAtom: return m_.holds(f.name(), *a.get(f.v1()));
      case FoKind::kEq: return *a.get(f.v1()) == *a.get(f.v2());
      case FoKind::kNot: return !eval(a, f.arg());
      case FoKind::kAnd: return eval(a, f.lhs()) && eval(a, f.rhs());
      case FoKind::kOr: return eval(a, f.lhs()) || eval(a, f.rhs());
      case FoKind::kImplies: return !eval(a, f.lhs()) || eval(a, f.rhs());
      case FoKind::kExists: return quantify(a, f, true);
      case FoKind::kForall: return !quantify(a, f, false);
    }
    return false;
  }

 private:
  // Whether some witness satisfies the guard and gives the body the value
  // `want`.
  bool quantify(Assignment& a, const FoFormula& f, bool want) {
    const Var v = f.bound();
    const std::optional<Node> saved = a.get(v);
    bool found = false;
    auto attempt = [&](Node d) {
      a.set(v, d);
      if (f.guard() && !m_.holds(f.guard()->rel, *a.get(f.guard()->first), *a.get(f.guard()->second))) {
        return false;
      }
      return eval(a, f.body()) == want;
    };
    const auto& g = f.guard();
    if (g && g->first != g->second) {
      const bool v_first = g->first == v;
      const Node other = *a.get(v_first ? g->second : g->first);
      auto candidates = v_first ? m_.predecessors(g->rel, other) : m_.successors(g->rel, other);
      for (Node d : candidates) {
        if ((found = attempt(d))) break;
      }
    } else {
      for (Node d = 0; d < m_.size() && !found; ++d) found = attempt(d);
    }
    if (saved) {
      a.set(v, *saved);
    } else {
      a.clear(v);
    }
    return found;
  }

  const Structure& m_;
};

}  // namespace

ModalEvaluation evaluate_modal(const PointedStructure& m, const ModalFormula& f, SemanticsMode mode,
                               ModalEvalOptions options) {
  if (m.points.size() != 1) throw PreconditionError("modal evaluation needs exactly one point");
  check_mode(m.structure, f, mode, options.assume_frame_K);
  ModalEvaluator ev(m.structure, mode);
  ModalEvaluation out;
  out.value = ev.eval(m.point(), f);
  out.vacuous_bullet = ev.vacuous();
  if (options.trace) {
    for (const auto& sub : subformulas(f)) {
      out.trace.emplace(sub, extension(m.structure, sub, mode)[m.point()] != 0);
    }
    if (mode == SemanticsMode::kIntended && features_of(f).bullets) out.vacuous_bullet = true;
  }
  return out;
}

bool eval_modal(const PointedStructure& m, const ModalFormula& f, SemanticsMode mode) {
  return evaluate_modal(m, f, mode).value;
}

std::vector<char> modal_extension(const Structure& m, const ModalFormula& f, SemanticsMode mode,
                                  bool assume_frame_K) {
  check_mode(m, f, mode, assume_frame_K);
  return extension(m, f, mode);
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (char b : bits_) c += b ? 1 : 0;
  return c;
}

std::vector<NodePair> Relation::pairs() const {
  std::vector<NodePair> out;
  for (Node a = 0; a < n_; ++a) {
    for (Node b = 0; b < n_; ++b) {
      if (contains(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

Relation eval_ra(const Structure& m, const RaTerm& t) {
  const std::size_t n = m.size();
  Relation out(n);
  switch (t.kind()) {
    case RaKind::kAtom:
      if (const auto* rel = m.binary(t.name())) {
        for (auto [a, b] : rel->pairs) out.set(a, b);
      }
      break;
    case RaKind::kId:
      for (Node a = 0; a < n; ++a) out.set(a, a);
      break;
    case RaKind::kTop:
      for (Node a = 0; a < n; ++a) {
        for (Node b = 0; b < n; ++b) out.set(a, b);
      }
      break;
    case RaKind::kMeet:
    case RaKind::kDiff: {
      const Relation x = eval_ra(m, t.lhs());
      const Relation y = eval_ra(m, t.rhs());
      const bool meet = t.kind() == RaKind::kMeet;
      for (Node a = 0; a < n; ++a) {
        for (Node b = 0; b < n; ++b) out.set(a, b, x.contains(a, b) && (y.contains(a, b) == meet));
      }
      break;
    }
    case RaKind::kComp: {
      const Relation x = eval_ra(m, t.lhs());
      const Relation y = eval_ra(m, t.rhs());
      for (Node a = 0; a < n; ++a) {
        for (Node c = 0; c < n; ++c) {
          if (!x.contains(a, c)) continue;
          for (Node b = 0; b < n; ++b) {
            if (y.contains(c, b)) out.set(a, b);
          }
        }
      }
      break;
    }
    case RaKind::kConv: {
      const Relation x = eval_ra(m, t.arg());
      for (Node a = 0; a < n; ++a) {
        for (Node b = 0; b < n; ++b) out.set(a, b, x.contains(b, a));
      }
      break;
    }
  }
  return out;
}

bool ra_equiv_top(const Structure& m, const RaTerm& t) { return eval_ra(m, t).count() == m.size() * m.size(); }

bool eval_fo(const Structure& m, const Assignment& a, const FoFormula& f) {
  const VarSet fv = free_vars(f);
  for (Var v : kAllVars) {
    if (!(fv & var_bit(v))) continue;
    if (!a.get(v)) throw PreconditionError(std::string("free variable ") + var_name(v) + " is unassigned");
    if (*a.get(v) >= m.size()) throw PreconditionError(std::string("variable ") + var_name(v) + " is out of range");
  }
  Assignment work = a;
  return FoEvaluator(m).eval(work, f);
}

}  // namespace logicwb
