#include "logicwb/modal.h"

#include <functional>

#include "logicwb/error.h"
#include "logicwb/parse.h"

namespace logicwb {

bool is_modal_operator(ModalKind k) {
  switch (k) {
    case ModalKind::kDiamond:
    case ModalKind::kBox:
    case ModalKind::kDiamondGeq:
    case ModalKind::kBoxDualGeq:
    case ModalKind::kBullet:
    case ModalKind::kBulletDual:
    case ModalKind::kDiamondB:
    case ModalKind::kBoxB:
      return true;
    default:
      return false;
  }
}

bool is_binary_connective(ModalKind k) {
  return k == ModalKind::kAnd || k == ModalKind::kOr || k == ModalKind::kImplies;
}

ModalFormula::ModalFormula() : ModalFormula(ml::top()) {}

ModalFormula ModalFormula::make(ModalKind kind, std::string name, unsigned grade,
                                std::vector<ModalFormula> args) {
  std::size_t size = 1;
  std::size_t h = std::hash<std::string>{}(name) * 31 + static_cast<std::size_t>(kind) * 1000003u + grade;
  for (const auto& a : args) {
    size += a.size();
    h = h * 1099511628211ULL ^ a.hash();
  }
  return ModalFormula(std::make_shared<const Node>(
      Node{kind, grade, std::move(name), std::move(args), size, h}));
}

bool operator==(const ModalFormula& a, const ModalFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ModalFormula& a, const ModalFormula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.grade() <=> b.grade(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  const auto& x = a.node_->args;
  const auto& y = b.node_->args;
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace ml {

namespace {
ModalFormula unary(ModalKind k, ModalFormula f) { return ModalFormula::make(k, "", 0, {std::move(f)}); }
ModalFormula binary(ModalKind k, ModalFormula a, ModalFormula b) {
  return ModalFormula::make(k, "", 0, {std::move(a), std::move(b)});
}
}  // namespace

ModalFormula prop(std::string name) {
  if (!is_identifier(name) || name == "true" || name == "false") {
    throw PreconditionError("invalid proposition letter '" + name + "'");
  }
  return ModalFormula::make(ModalKind::kProp, std::move(name), 0, {});
}
ModalFormula top() {
  static const ModalFormula t = ModalFormula::make(ModalKind::kTop, "", 0, {});
  return t;
}
ModalFormula bot() {
  static const ModalFormula b = ModalFormula::make(ModalKind::kBot, "", 0, {});
  return b;
}
ModalFormula neg(ModalFormula f) { return unary(ModalKind::kNot, std::move(f)); }
ModalFormula conj(ModalFormula a, ModalFormula b) { return binary(ModalKind::kAnd, std::move(a), std::move(b)); }
ModalFormula disj(ModalFormula a, ModalFormula b) { return binary(ModalKind::kOr, std::move(a), std::move(b)); }
ModalFormula implies(ModalFormula a, ModalFormula b) {
  return binary(ModalKind::kImplies, std::move(a), std::move(b));
}
ModalFormula dia(ModalFormula f) { return unary(ModalKind::kDiamond, std::move(f)); }
ModalFormula box(ModalFormula f) { return unary(ModalKind::kBox, std::move(f)); }
ModalFormula dia_geq(unsigned k, ModalFormula f) {
  return ModalFormula::make(ModalKind::kDiamondGeq, "", k, {std::move(f)});
}
ModalFormula box_geq(unsigned k, ModalFormula f) {
  return ModalFormula::make(ModalKind::kBoxDualGeq, "", k, {std::move(f)});
}
ModalFormula bullet(ModalFormula f) { return unary(ModalKind::kBullet, std::move(f)); }
ModalFormula bullet_dual(ModalFormula f) { return unary(ModalKind::kBulletDual, std::move(f)); }
ModalFormula dia_b(ModalFormula f) { return unary(ModalKind::kDiamondB, std::move(f)); }
ModalFormula box_b(ModalFormula f) { return unary(ModalKind::kBoxB, std::move(f)); }

ModalFormula rebuild(const ModalFormula& f, std::vector<ModalFormula> args) {
  return ModalFormula::make(f.kind(), f.name(), f.grade(), std::move(args));
}

ModalFormula conj_all(std::vector<ModalFormula> fs) {
  if (fs.empty()) return top();
  ModalFormula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = conj(fs[i], acc);
  return acc;
}

ModalFormula disj_all(std::vector<ModalFormula> fs) {
  if (fs.empty()) return bot();
  ModalFormula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = disj(fs[i], acc);
  return acc;
}

ModalFormula box_n(std::size_t n, ModalFormula f) {
  for (std::size_t i = 0; i < n; ++i) f = box(std::move(f));
  return f;
}

}  // namespace ml

std::ostream& operator<<(std::ostream& os, const ModalFormula& f) { return os << to_string(f); }

}  // namespace logicwb
