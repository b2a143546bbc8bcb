#include "logicwb/fo.h"

#include "logicwb/error.h"
#include "logicwb/parse.h"

namespace logicwb {

char var_name(Var v) { return "xyz"[static_cast<unsigned>(v)]; }

FoFormula::FoFormula() : FoFormula(fo::eq(Var::kX, Var::kX)) {}

FoFormula FoFormula::make(FoKind kind, std::string name, Var v1, Var v2,
                          std::optional<GuardAtom> guard, std::vector<FoFormula> args) {
  std::size_t size = 1 + (guard ? 1 : 0);
  for (const auto& a : args) size += a.size();
  return FoFormula(std::make_shared<const Node>(
      Node{kind, std::move(name), v1, v2, std::move(guard), std::move(args), size}));
}

bool operator==(const FoFormula& a, const FoFormula& b) {
  return a.node_ == b.node_ || (a.size() == b.size() && (a <=> b) == std::strong_ordering::equal);
}

std::strong_ordering operator<=>(const FoFormula& a, const FoFormula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  if (auto c = a.v1() <=> b.v1(); c != 0) return c;
  if (auto c = a.v2() <=> b.v2(); c != 0) return c;
  if (auto c = a.guard() <=> b.guard(); c != 0) return c;
  const auto& x = a.node_->args;
  const auto& y = b.node_->args;
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace fo {

FoFormula bin(std::string rel, Var a, Var b) {
  if (!is_identifier(rel)) throw PreconditionError("invalid relation name '" + rel + "'");
  return FoFormula::make(FoKind::kBinAtom, std::move(rel), a, b, std::nullopt, {});
}
FoFormula un(std::string pred, Var a) {
  if (!is_identifier(pred)) throw PreconditionError("invalid predicate name '" + pred + "'");
  return FoFormula::make(FoKind::kUnAtom, std::move(pred), a, a, std::nullopt, {});
}
FoFormula eq(Var a, Var b) { return FoFormula::make(FoKind::kEq, "", a, b, std::nullopt, {}); }
FoFormula neg(FoFormula f) { return FoFormula::make(FoKind::kNot, "", Var::kX, Var::kX, std::nullopt, {std::move(f)}); }
FoFormula conj(FoFormula a, FoFormula b) {
  return FoFormula::make(FoKind::kAnd, "", Var::kX, Var::kX, std::nullopt, {std::move(a), std::move(b)});
}
FoFormula disj(FoFormula a, FoFormula b) {
  return FoFormula::make(FoKind::kOr, "", Var::kX, Var::kX, std::nullopt, {std::move(a), std::move(b)});
}
FoFormula implies(FoFormula a, FoFormula b) {
  return FoFormula::make(FoKind::kImplies, "", Var::kX, Var::kX, std::nullopt, {std::move(a), std::move(b)});
}

namespace {
FoFormula quantifier(FoKind kind, Var v, std::optional<GuardAtom> guard, FoFormula body) {
  if (guard && guard->first != v && guard->second != v) {
    throw PreconditionError(std::string("guard must mention the quantified variable ") + var_name(v));
  }
  return FoFormula::make(kind, "", v, v, std::move(guard), {std::move(body)});
}
}  // namespace

FoFormula exists(Var v, std::optional<GuardAtom> guard, FoFormula body) {
  return quantifier(FoKind::kExists, v, std::move(guard), std::move(body));
}
FoFormula forall(Var v, std::optional<GuardAtom> guard, FoFormula body) {
  return quantifier(FoKind::kForall, v, std::move(guard), std::move(body));
}

}  // namespace fo

VarSet free_vars(const FoFormula& f) {
  switch (f.kind()) {
    case FoKind::kBinAtom:
    case FoKind::kEq:
      return var_bit(f.v1()) | var_bit(f.v2());
    case FoKind::kUnAtom:
      return var_bit(f.v1());
    case FoKind::kNot:
      return free_vars(f.arg());
    case FoKind::kAnd:
    case FoKind::kOr:
    case FoKind::kImplies:
      return free_vars(f.lhs()) | free_vars(f.rhs());
    case FoKind::kExists:
    case FoKind::kForall: {
      VarSet inner = free_vars(f.body());
      if (f.guard()) inner |= var_bit(f.guard()->first) | var_bit(f.guard()->second);
      return static_cast<VarSet>(inner & ~var_bit(f.bound()));
    }
  }
  return 0;
}

VarSet all_vars(const FoFormula& f) {
  switch (f.kind()) {
    case FoKind::kBinAtom:
    case FoKind::kEq:
      return var_bit(f.v1()) | var_bit(f.v2());
    case FoKind::kUnAtom:
      return var_bit(f.v1());
    case FoKind::kNot:
      return all_vars(f.arg());
    case FoKind::kAnd:
    case FoKind::kOr:
    case FoKind::kImplies:
      return all_vars(f.lhs()) | all_vars(f.rhs());
    case FoKind::kExists:
    case FoKind::kForall: {
      VarSet inner = all_vars(f.body()) | var_bit(f.bound());
      if (f.guard()) inner |= var_bit(f.guard()->first) | var_bit(f.guard()->second);
      return inner;
    }
  }
  return 0;
}

std::ostream& operator<<(std::ostream& os, const FoFormula& f) { return os << to_string(f); }

}  // namespace logicwb
