#ifndef LOGICWB_FO_H_
#define LOGICWB_FO_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace logicwb {

// The three variables of the first-order language.
enum class Var : std::uint8_t { kX = 0, kY = 1, kZ = 2 };
inline constexpr Var kAllVars[] = {Var::kX, Var::kY, Var::kZ};

char var_name(Var v);

// Bitmask over Var: bit i set iff Var(i) is in the set.
using VarSet = std::uint8_t;
inline constexpr VarSet var_bit(Var v) { return static_cast<VarSet>(1u << static_cast<unsigned>(v)); }

struct GuardAtom {
  std::string rel;
  Var first;
  Var second;

  friend bool operator==(const GuardAtom&, const GuardAtom&) = default;
  friend auto operator<=>(const GuardAtom&, const GuardAtom&) = default;
};

enum class FoKind : std::uint8_t {
  kBinAtom,
  kUnAtom,
  kEq,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kExists,  // Exists v (guard & body)
  kForall,  // Forall v (guard -> body)
};

class FoFormula {
 public:
  FoFormula();  // x = x

  FoKind kind() const { return node_->kind; }
  // Relation name of atoms.
  const std::string& name() const { return node_->name; }
  // Atoms: argument variables (v2 unused for unary atoms). Quantifiers: v1 is
  // the bound variable.
  Var v1() const { return node_->v1; }
  Var v2() const { return node_->v2; }
  Var bound() const { return node_->v1; }
  const std::optional<GuardAtom>& guard() const { return node_->guard; }
  std::span<const FoFormula> args() const { return node_->args; }
  const FoFormula& arg(std::size_t i = 0) const { return node_->args[i]; }
  const FoFormula& lhs() const { return node_->args[0]; }
  const FoFormula& rhs() const { return node_->args[1]; }
  const FoFormula& body() const { return node_->args[0]; }
  std::size_t size() const { return node_->size; }

  static FoFormula make(FoKind kind, std::string name, Var v1, Var v2,
                        std::optional<GuardAtom> guard, std::vector<FoFormula> args);

  friend bool operator==(const FoFormula& a, const FoFormula& b);
  friend std::strong_ordering operator<=>(const FoFormula& a, const FoFormula& b);

 private:
  struct Node {
    FoKind kind;
    std::string name;
    Var v1;
    Var v2;
    std::optional<GuardAtom> guard;
    std::vector<FoFormula> args;
    std::size_t size;
  };
  explicit FoFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

namespace fo {
FoFormula bin(std::string rel, Var a, Var b);
FoFormula un(std::string pred, Var a);
FoFormula eq(Var a, Var b);
FoFormula neg(FoFormula f);
FoFormula conj(FoFormula a, FoFormula b);
FoFormula disj(FoFormula a, FoFormula b);
FoFormula implies(FoFormula a, FoFormula b);
// Throws PreconditionError when the guard does not mention `v`.
FoFormula exists(Var v, std::optional<GuardAtom> guard, FoFormula body);
FoFormula forall(Var v, std::optional<GuardAtom> guard, FoFormula body);
}  // namespace fo

VarSet free_vars(const FoFormula& f);
// Every variable occurring anywhere, bound or free.
VarSet all_vars(const FoFormula& f);

std::string to_string(const FoFormula& f);
std::ostream& operator<<(std::ostream& os, const FoFormula& f);

}  // namespace logicwb

#endif  // LOGICWB_FO_H_
