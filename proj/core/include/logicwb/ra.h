#ifndef LOGICWB_RA_H_
#define LOGICWB_RA_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace logicwb {

// Relation-algebra terms: atoms, identity, total relation, intersection,
// difference, composition and converse.
enum class RaKind : std::uint8_t { kAtom, kId, kTop, kMeet, kDiff, kComp, kConv };

class RaTerm {
 public:
  RaTerm();  // Top

  RaKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  std::span<const RaTerm> args() const { return node_->args; }
  const RaTerm& arg(std::size_t i = 0) const { return node_->args[i]; }
  const RaTerm& lhs() const { return node_->args[0]; }
  const RaTerm& rhs() const { return node_->args[1]; }
  std::size_t size() const { return node_->size; }

  static RaTerm make(RaKind kind, std::string name, std::vector<RaTerm> args);

  friend bool operator==(const RaTerm& a, const RaTerm& b);
  friend std::strong_ordering operator<=>(const RaTerm& a, const RaTerm& b);

 private:
  struct Node {
    RaKind kind;
    std::string name;
    std::vector<RaTerm> args;
    std::size_t size;
  };
  explicit RaTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

namespace ra {
RaTerm atom(std::string name);
RaTerm id();
RaTerm top();
RaTerm meet(RaTerm a, RaTerm b);
RaTerm diff(RaTerm a, RaTerm b);
RaTerm comp(RaTerm a, RaTerm b);
RaTerm conv(RaTerm a);
}  // namespace ra

std::string to_string(const RaTerm& t);
std::ostream& operator<<(std::ostream& os, const RaTerm& t);

}  // namespace logicwb

#endif  // LOGICWB_RA_H_
