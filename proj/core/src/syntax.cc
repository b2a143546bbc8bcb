#include "logicwb/syntax.h"

#include <algorithm>

#include "logicwb/error.h"
#include "logicwb/structure.h"

namespace logicwb {

namespace {

void collect(const ModalFormula& f, Vocabulary& v) {
  if (f.kind() == ModalKind::kProp) v.unary.insert(f.name());
  for (const auto& a : f.args()) collect(a, v);
}

void collect(const RaTerm& t, Vocabulary& v) {
  if (t.kind() == RaKind::kAtom) v.binary.insert(t.name());
  for (const auto& a : t.args()) collect(a, v);
}

void collect(const FoFormula& f, Vocabulary& v) {
  if (f.kind() == FoKind::kBinAtom) v.binary.insert(f.name());
  if (f.kind() == FoKind::kUnAtom) v.unary.insert(f.name());
  if (f.guard()) v.binary.insert(f.guard()->rel);
  for (const auto& a : f.args()) collect(a, v);
}

const std::string& lookup(const std::map<std::string, std::string>& m, const std::string& name) {
  auto it = m.find(name);
  return it == m.end() ? name : it->second;
}

void check_renaming(const Vocabulary& v, const Renaming& rho) {
  for (const auto& [from, to] : rho.unary) {
    if (v.binary.count(from)) throw PreconditionError("renaming maps binary name '" + from + "' as unary");
    if (v.unary.count(from) && v.binary.count(to)) {
      throw PreconditionError("renaming target '" + to + "' is a binary name");
    }
  }
  for (const auto& [from, to] : rho.binary) {
    if (v.unary.count(from)) throw PreconditionError("renaming maps unary name '" + from + "' as binary");
    if (v.binary.count(from) && v.unary.count(to)) {
      throw PreconditionError("renaming target '" + to + "' is a unary name");
    }
  }
}

ModalFormula rename_rec(const ModalFormula& f, const Renaming& rho) {
  if (f.kind() == ModalKind::kProp) return ml::prop(lookup(rho.unary, f.name()));
  if (f.args().empty()) return f;
  std::vector<ModalFormula> args;
  for (const auto& a : f.args()) args.push_back(rename_rec(a, rho));
  return ml::rebuild(f, std::move(args));
}

RaTerm rename_rec(const RaTerm& t, const Renaming& rho) {
  if (t.kind() == RaKind::kAtom) return ra::atom(lookup(rho.binary, t.name()));
  if (t.args().empty()) return t;
  std::vector<RaTerm> args;
  for (const auto& a : t.args()) args.push_back(rename_rec(a, rho));
  return RaTerm::make(t.kind(), "", std::move(args));
}

FoFormula rename_rec(const FoFormula& f, const Renaming& rho) {
  switch (f.kind()) {
    case FoKind::kBinAtom: return fo::bin(lookup(rho.binary, f.name()), f.v1(), f.v2());
    case FoKind::kUnAtom: return fo::un(lookup(rho.unary, f.name()), f.v1());
    case FoKind::kEq: return f;
    default: break;
  }
  std::optional<GuardAtom> guard = f.guard();
  if (guard) guard->rel = lookup(rho.binary, guard->rel);
  std::vector<FoFormula> args;
  for (const auto& a : f.args()) args.push_back(rename_rec(a, rho));
  return FoFormula::make(f.kind(), f.name(), f.v1(), f.v2(), std::move(guard), std::move(args));
}

ModalFormula relativize_body(const ModalFormula& f, const ModalFormula& p) {
  auto rel = [&](std::size_t i) { return relativize_body(f.arg(i), p); };
  switch (f.kind()) {
    case ModalKind::kProp:
    case ModalKind::kTop:
    case ModalKind::kBot: return f;
    case ModalKind::kNot:
    case ModalKind::kAnd:
    case ModalKind::kOr:
    case ModalKind::kImplies: {
      std::vector<ModalFormula> args;
      for (std::size_t i = 0; i < f.args().size(); ++i) args.push_back(rel(i));
      return ml::rebuild(f, std::move(args));
    }
    case ModalKind::kDiamond:
    case ModalKind::kDiamondGeq:
    case ModalKind::kBullet:
    case ModalKind::kDiamondB: return ml::rebuild(f, {ml::conj(p, rel(0))});
    case ModalKind::kBox:
    case ModalKind::kBoxDualGeq:
    case ModalKind::kBulletDual:
    case ModalKind::kBoxB: return ml::rebuild(f, {ml::implies(p, rel(0))});
  }
  return f;
}

void collect_subformulas(const ModalFormula& f, std::set<ModalFormula>& out) {
  if (!out.insert(f).second) return;
  for (const auto& a : f.args()) collect_subformulas(a, out);
}

void collect_features(const ModalFormula& f, ModalFeatures& ft) {
  switch (f.kind()) {
    case ModalKind::kDiamondGeq:
    case ModalKind::kBoxDualGeq:
      ft.grades = true;
      ft.max_grade = std::max(ft.max_grade, f.grade());
      break;
    case ModalKind::kBullet:
    case ModalKind::kBulletDual: ft.bullets = true; break;
    case ModalKind::kDiamondB:
    case ModalKind::kBoxB: ft.rb = true; break;
    default: break;
  }
  for (const auto& a : f.args()) collect_features(a, ft);
}

bool gf_bin_rec(const FoFormula& f) {
  switch (f.kind()) {
    case FoKind::kBinAtom:
    case FoKind::kUnAtom:
    case FoKind::kEq: return true;
    case FoKind::kNot: return gf_bin_rec(f.arg());
    case FoKind::kAnd:
    case FoKind::kOr:
    case FoKind::kImplies: return gf_bin_rec(f.lhs()) && gf_bin_rec(f.rhs());
    case FoKind::kExists:
    case FoKind::kForall: {
      const auto& g = f.guard();
      if (!g || g->first == g->second) return false;
      const VarSet allowed = var_bit(g->first) | var_bit(g->second);
      if ((free_vars(f.body()) & ~allowed) != 0) return false;
      return gf_bin_rec(f.body());
    }
  }
  return false;
}

}  // namespace

Vocabulary vocabulary_of(const ModalFormula& f) {
  Vocabulary v;
  collect(f, v);
  return v;
}

Vocabulary vocabulary_of(const RaTerm& t) {
  Vocabulary v;
  collect(t, v);
  return v;
}

Vocabulary vocabulary_of(const FoFormula& f) {
  Vocabulary v;
  collect(f, v);
  return v;
}

ModalFormula rename(const ModalFormula& f, const Renaming& rho) {
  check_renaming(vocabulary_of(f), rho);
  return rename_rec(f, rho);
}

RaTerm rename(const RaTerm& t, const Renaming& rho) {
  check_renaming(vocabulary_of(t), rho);
  return rename_rec(t, rho);
}

FoFormula rename(const FoFormula& f, const Renaming& rho) {
  check_renaming(vocabulary_of(f), rho);
  return rename_rec(f, rho);
}

ModalFormula substitute(const ModalFormula& f, const std::string& p, const ModalFormula& g) {
  if (f.kind() == ModalKind::kProp) return f.name() == p ? g : f;
  if (f.args().empty()) return f;
  std::vector<ModalFormula> args;
  for (const auto& a : f.args()) args.push_back(substitute(a, p, g));
  return ml::rebuild(f, std::move(args));
}

ModalFormula relativize_modal(const ModalFormula& f, const std::string& p) {
  const ModalFormula letter = ml::prop(p);
  return ml::conj(letter, relativize_body(f, letter));
}

std::size_t depth_modal(const ModalFormula& f) {
  std::size_t d = 0;
  for (const auto& a : f.args()) d = std::max(d, depth_modal(a));
  return d + (is_modal_operator(f.kind()) ? 1 : 0);
}

std::size_t depth_gf(const FoFormula& f) {
  std::size_t d = 0;
  for (const auto& a : f.args()) d = std::max(d, depth_gf(a));
  const bool quantifier = f.kind() == FoKind::kExists || f.kind() == FoKind::kForall;
  return d + (quantifier ? 1 : 0);
}

std::set<ModalFormula> subformulas(const ModalFormula& f) {
  std::set<ModalFormula> out;
  collect_subformulas(f, out);
  return out;
}

ModalFeatures features_of(const ModalFormula& f) {
  ModalFeatures ft;
  collect_features(f, ft);
  return ft;
}

bool is_gf_bin(const FoFormula& f) { return free_vars(f) != 0 && gf_bin_rec(f); }

FoFormula standard_translation(const ModalFormula& f, Var x) {
  const Var y = x == Var::kX ? Var::kY : Var::kX;
  auto tr = [&](std::size_t i) { return standard_translation(f.arg(i), x); };
  const GuardAtom guard{std::string(kAccessibility), x, y};
  switch (f.kind()) {
    case ModalKind::kProp: return fo::un(f.name(), x);
    case ModalKind::kTop: return fo::eq(x, x);
    case ModalKind::kBot: return fo::neg(fo::eq(x, x));
    case ModalKind::kNot: return fo::neg(tr(0));
    case ModalKind::kAnd: return fo::conj(tr(0), tr(1));
    case ModalKind::kOr: return fo::disj(tr(0), tr(1));
    case ModalKind::kImplies: return fo::implies(tr(0), tr(1));
    case ModalKind::kDiamond: return fo::exists(y, guard, standard_translation(f.arg(), y));
    case ModalKind::kBox: return fo::forall(y, guard, standard_translation(f.arg(), y));
    default: throw PreconditionError("standard translation covers basic modal formulas only");
  }
}

}  // namespace logicwb
