#ifndef LOGICWB_MODAL_H_
#define LOGICWB_MODAL_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace logicwb {

// Covers ML, GML, ML-bullet and the bimodal quasi-syntax (DiamondB/BoxB
// range over "Rb").
enum class ModalKind : std::uint8_t {
  kProp,
  kTop,
  kBot,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kDiamond,
  kBox,
  kDiamondGeq,  // at least k successors
  kBoxDualGeq,  // dual of kDiamondGeq: fewer than k successors refute
  kBullet,
  kBulletDual,
  kDiamondB,
  kBoxB,
};

bool is_modal_operator(ModalKind k);
bool is_binary_connective(ModalKind k);

// Immutable, structurally compared modal formula. Copies share subtrees.
class ModalFormula {
 public:
  ModalFormula();  // Top

  ModalKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  unsigned grade() const { return node_->grade; }
  std::span<const ModalFormula> args() const { return node_->args; }
  const ModalFormula& arg(std::size_t i = 0) const { return node_->args[i]; }
  const ModalFormula& lhs() const { return node_->args[0]; }
  const ModalFormula& rhs() const { return node_->args[1]; }
  // Number of AST nodes.
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }
  const void* identity() const { return node_.get(); }

  static ModalFormula make(ModalKind kind, std::string name, unsigned grade,
                           std::vector<ModalFormula> args);

  friend bool operator==(const ModalFormula& a, const ModalFormula& b);
  friend std::strong_ordering operator<=>(const ModalFormula& a, const ModalFormula& b);

 private:
  struct Node {
    ModalKind kind;
    unsigned grade;
    std::string name;
    std::vector<ModalFormula> args;
    std::size_t size;
    std::size_t hash;
  };
  explicit ModalFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ModalFormulaHash {
  std::size_t operator()(const ModalFormula& f) const { return f.hash(); }
};

namespace ml {
ModalFormula prop(std::string name);
ModalFormula top();
ModalFormula bot();
ModalFormula neg(ModalFormula f);
ModalFormula conj(ModalFormula a, ModalFormula b);
ModalFormula disj(ModalFormula a, ModalFormula b);
ModalFormula implies(ModalFormula a, ModalFormula b);
ModalFormula dia(ModalFormula f);
ModalFormula box(ModalFormula f);
ModalFormula dia_geq(unsigned k, ModalFormula f);
ModalFormula box_geq(unsigned k, ModalFormula f);
ModalFormula bullet(ModalFormula f);
ModalFormula bullet_dual(ModalFormula f);
ModalFormula dia_b(ModalFormula f);
ModalFormula box_b(ModalFormula f);
// Same-kind unary or binary node over new children.
ModalFormula rebuild(const ModalFormula& f, std::vector<ModalFormula> args);
// Right-nested conjunction; top() when empty.
ModalFormula conj_all(std::vector<ModalFormula> fs);
ModalFormula disj_all(std::vector<ModalFormula> fs);
// n-fold box prefix.
ModalFormula box_n(std::size_t n, ModalFormula f);
}  // namespace ml

enum class ModalSurface {
  kCanonical,  // Diamond prints as "<>", DiamondGeq(1, .) as "<1>"
  kGraded,     // Diamond/Box print as "<1>"/"[1]"
};

std::string to_string(const ModalFormula& f, ModalSurface surface = ModalSurface::kCanonical);
std::ostream& operator<<(std::ostream& os, const ModalFormula& f);

}  // namespace logicwb

#endif  // LOGICWB_MODAL_H_
