#ifndef LOGICWB_STRUCTURE_H_
#define LOGICWB_STRUCTURE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logicwb {

// Index of a node inside one Structure. Only meaningful together with the
// structure it came from; names are the stable identity across structures.
using Node = std::uint32_t;
using NodePair = std::pair<Node, Node>;

// Accessibility relation of Kripke models and R_diamond of quasi-models.
inline constexpr std::string_view kAccessibility = "R";
// R_bullet of quasi-models.
inline constexpr std::string_view kBulletAccessibility = "Rb";

struct UnaryRelation {
  std::vector<char> member;  // indexed by Node
  std::vector<Node> nodes;   // ascending

  bool contains(Node v) const { return member[v] != 0; }
  bool empty() const { return nodes.empty(); }
};

struct BinaryRelation {
  std::vector<NodePair> pairs;               // ascending
  std::vector<std::vector<Node>> successors;  // ascending per node
  std::vector<std::vector<Node>> predecessors;

  bool contains(Node a, Node b) const;
  bool empty() const { return pairs.empty(); }
};

class StructureBuilder;

// Finite relational structure over unary and binary relation names.
// Immutable once built; names absent from the structure denote empty
// relations.
class Structure {
 public:
  std::size_t size() const { return domain_.size(); }
  const std::vector<std::string>& domain() const { return domain_; }
  const std::string& name(Node v) const { return domain_[v]; }

  std::optional<Node> find(std::string_view id) const;
  // Throws StructureError for unknown ids.
  Node node(std::string_view id) const;

  const UnaryRelation* unary(std::string_view pred) const;
  const BinaryRelation* binary(std::string_view rel) const;

  bool holds(std::string_view pred, Node v) const;
  bool holds(std::string_view rel, Node a, Node b) const;
  std::span<const Node> successors(std::string_view rel, Node v) const;
  std::span<const Node> predecessors(std::string_view rel, Node v) const;

  std::vector<std::string> unary_names() const;
  std::vector<std::string> binary_names() const;

  const std::map<std::string, UnaryRelation, std::less<>>& unary_relations() const {
    return unary_;
  }
  const std::map<std::string, BinaryRelation, std::less<>>& binary_relations() const {
    return binary_;
  }

  friend bool operator==(const Structure& a, const Structure& b);

 private:
  friend class StructureBuilder;
  Structure() = default;

  std::vector<std::string> domain_;
  std::map<std::string, Node, std::less<>> index_;
  std::map<std::string, UnaryRelation, std::less<>> unary_;
  std::map<std::string, BinaryRelation, std::less<>> binary_;
};

// Accumulates nodes and facts, then validates every Structure invariant in
// build().
class StructureBuilder {
 public:
  Node add_node(std::string id);
  // Adds the node if missing and returns its index.
  Node ensure_node(std::string_view id);
  std::size_t size() const { return domain_.size(); }
  std::optional<Node> find(std::string_view id) const;

  void declare_unary(std::string_view pred);
  void declare_binary(std::string_view rel);
  void add_unary(std::string_view pred, Node v);
  void add_binary(std::string_view rel, Node a, Node b);
  void add_unary(std::string_view pred, std::string_view id);
  void add_binary(std::string_view rel, std::string_view a, std::string_view b);

  Structure build() const;

 private:
  Node checked(Node v) const;

  std::vector<std::string> domain_;
  std::map<std::string, Node, std::less<>> index_;
  std::map<std::string, std::vector<Node>, std::less<>> unary_;
  std::map<std::string, std::vector<NodePair>, std::less<>> binary_;
};

struct PointedStructure {
  PointedStructure(Structure s, std::vector<Node> pts);
  PointedStructure(Structure s, Node point) : PointedStructure(std::move(s), std::vector<Node>{point}) {}

  Structure structure;
  std::vector<Node> points;

  Node point() const { return points.front(); }
  friend bool operator==(const PointedStructure&, const PointedStructure&) = default;
};

// Substructure induced on `keep` (in domain order). All relation names are
// retained, possibly with empty interpretations. Throws StructureError when
// `keep` is empty.
Structure induced(const Structure& m, std::span<const Node> keep);

// Nodes reachable from `from` along `rel` in at most `max_steps` steps
// (unbounded when nullopt), in ascending order.
std::vector<Node> reachable(const Structure& m, Node from, std::string_view rel,
                            std::optional<std::size_t> max_steps = std::nullopt);

PointedStructure generated_submodel(const PointedStructure& m);
PointedStructure cut_depth(const PointedStructure& m, std::size_t k);
// Throws PreconditionError when `pred` denotes the empty set.
Structure restrict(const Structure& m, std::string_view pred);

// Copy of `m` with `pred` interpreted as exactly `members`.
Structure with_unary(const Structure& m, std::string_view pred, std::span<const Node> members);

bool is_tree(const PointedStructure& m);
bool is_frame_K(const Structure& m);

// Isomorphism-invariant fingerprint used to prune isomorphism search: equal
// fingerprints are necessary for isomorphism.
std::uint64_t isomorphism_fingerprint(const Structure& m);
bool isomorphic(const Structure& m, const Structure& n);
// Isomorphism that additionally maps the points of `m` to those of `n`
// position-wise.
bool isomorphic(const PointedStructure& m, const PointedStructure& n);

}  // namespace logicwb

#endif  // LOGICWB_STRUCTURE_H_
