#include "logicwb/ra.h"

#include "logicwb/error.h"
#include "logicwb/parse.h"

namespace logicwb {

RaTerm::RaTerm() : RaTerm(ra::top()) {}

RaTerm RaTerm::make(RaKind kind, std::string name, std::vector<RaTerm> args) {
  std::size_t size = 1;
  for (const auto& a : args) size += a.size();
  return RaTerm(std::make_shared<const Node>(Node{kind, std::move(name), std::move(args), size}));
}

bool operator==(const RaTerm& a, const RaTerm& b) {
  return a.node_ == b.node_ || (a.size() == b.size() && (a <=> b) == std::strong_ordering::equal);
}

std::strong_ordering operator<=>(const RaTerm& a, const RaTerm& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  const auto& x = a.node_->args;
  const auto& y = b.node_->args;
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace ra {
RaTerm atom(std::string name) {
  if (!is_identifier(name) || name == "id" || name == "top") {
    throw PreconditionError("invalid relation name '" + name + "'");
  }
  return RaTerm::make(RaKind::kAtom, std::move(name), {});
}
RaTerm id() { return RaTerm::make(RaKind::kId, "", {}); }
RaTerm top() { return RaTerm::make(RaKind::kTop, "", {}); }
RaTerm meet(RaTerm a, RaTerm b) { return RaTerm::make(RaKind::kMeet, "", {std::move(a), std::move(b)}); }
RaTerm diff(RaTerm a, RaTerm b) { return RaTerm::make(RaKind::kDiff, "", {std::move(a), std::move(b)}); }
RaTerm comp(RaTerm a, RaTerm b) { return RaTerm::make(RaKind::kComp, "", {std::move(a), std::move(b)}); }
RaTerm conv(RaTerm a) { return RaTerm::make(RaKind::kConv, "", {std::move(a)}); }
}  // namespace ra

std::ostream& operator<<(std::ostream& os, const RaTerm& t) { return os << to_string(t); }

}  // namespace logicwb
