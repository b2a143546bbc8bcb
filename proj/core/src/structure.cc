#include "logicwb/structure.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "logicwb/error.h"

namespace logicwb {

bool BinaryRelation::contains(Node a, Node b) const {
  if (a >= successors.size()) return false;
  const auto& s = successors[a];
  return std::binary_search(s.begin(), s.end(), b);
}

// ---------------------------------------------------------------------------
// Structure

std::optional<Node> Structure::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Node Structure::node(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw StructureError("unknown node id \"" + std::string(id) + "\"");
}

const UnaryRelation* Structure::unary(std::string_view pred) const {
  auto it = unary_.find(pred);
  return it == unary_.end() ? nullptr : &it->second;
}

const BinaryRelation* Structure::binary(std::string_view rel) const {
  auto it = binary_.find(rel);
  return it == binary_.end() ? nullptr : &it->second;
}

bool Structure::holds(std::string_view pred, Node v) const {
  const UnaryRelation* u = unary(pred);
  return u != nullptr && u->contains(v);
}

bool Structure::holds(std::string_view rel, Node a, Node b) const {
  const BinaryRelation* r = binary(rel);
  return r != nullptr && r->contains(a, b);
}

std::span<const Node> Structure::successors(std::string_view rel, Node v) const {
  const BinaryRelation* r = binary(rel);
  if (r == nullptr) return {};
  return r->successors[v];
}

std::span<const Node> Structure::predecessors(std::string_view rel, Node v) const {
  const BinaryRelation* r = binary(rel);
  if (r == nullptr) return {};
  return r->predecessors[v];
}

std::vector<std::string> Structure::unary_names() const {
  std::vector<std::string> out;
  for (const auto& [name, rel] : unary_) out.push_back(name);
  return out;
}

std::vector<std::string> Structure::binary_names() const {
  std::vector<std::string> out;
  for (const auto& [name, rel] : binary_) out.push_back(name);
  return out;
}

bool operator==(const Structure& a, const Structure& b) {
  if (a.domain_ != b.domain_) return false;
  if (a.unary_.size() != b.unary_.size() || a.binary_.size() != b.binary_.size()) return false;
  for (auto ia = a.unary_.begin(), ib = b.unary_.begin(); ia != a.unary_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.nodes != ib->second.nodes) return false;
  }
  for (auto ia = a.binary_.begin(), ib = b.binary_.begin(); ia != a.binary_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.pairs != ib->second.pairs) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// StructureBuilder

Node StructureBuilder::add_node(std::string id) {
  if (id.empty()) throw StructureError("node ids must be non-empty strings");
  if (index_.count(id) != 0) throw StructureError("duplicate node id \"" + id + "\"");
  const auto v = static_cast<Node>(domain_.size());
  index_.emplace(id, v);
  domain_.push_back(std::move(id));
  return v;
}

Node StructureBuilder::ensure_node(std::string_view id) {
  if (auto v = find(id)) return *v;
  return add_node(std::string(id));
}

std::optional<Node> StructureBuilder::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Node StructureBuilder::checked(Node v) const {
  if (v >= domain_.size()) throw StructureError("node index out of range");
  return v;
}

void StructureBuilder::declare_unary(std::string_view pred) {
  if (unary_.find(pred) == unary_.end()) unary_.emplace(std::string(pred), std::vector<Node>{});
}

void StructureBuilder::declare_binary(std::string_view rel) {
  if (binary_.find(rel) == binary_.end()) binary_.emplace(std::string(rel), std::vector<NodePair>{});
}

void StructureBuilder::add_unary(std::string_view pred, Node v) {
  declare_unary(pred);
  unary_.find(pred)->second.push_back(checked(v));
}

void StructureBuilder::add_binary(std::string_view rel, Node a, Node b) {
  declare_binary(rel);
  binary_.find(rel)->second.emplace_back(checked(a), checked(b));
}

void StructureBuilder::add_unary(std::string_view pred, std::string_view id) {
  auto v = find(id);
  if (!v) throw StructureError("undeclared id \"" + std::string(id) + "\" in unary \"" + std::string(pred) + "\"");
  add_unary(pred, *v);
}

void StructureBuilder::add_binary(std::string_view rel, std::string_view a, std::string_view b) {
  auto va = find(a);
  auto vb = find(b);
  if (!va) throw StructureError("undeclared id \"" + std::string(a) + "\" in binary \"" + std::string(rel) + "\"");
  if (!vb) throw StructureError("undeclared id \"" + std::string(b) + "\" in binary \"" + std::string(rel) + "\"");
  add_binary(rel, *va, *vb);
}

Structure StructureBuilder::build() const {
  if (domain_.empty()) throw StructureError("structures must have a non-empty domain");
  for (const auto& [name, _] : unary_) {
    if (name.empty()) throw StructureError("relation names must be non-empty");
    if (binary_.count(name) != 0) {
      throw StructureError("relation name \"" + name + "\" used as both unary and binary");
    }
  }
  for (const auto& [name, _] : binary_) {
    if (name.empty()) throw StructureError("relation names must be non-empty");
  }

  Structure s;
  s.domain_ = domain_;
  s.index_ = index_;
  const std::size_t n = domain_.size();
  for (const auto& [name, members] : unary_) {
    UnaryRelation rel;
    rel.member.assign(n, 0);
    for (Node v : members) rel.member[v] = 1;
    for (Node v = 0; v < n; ++v) {
      if (rel.member[v]) rel.nodes.push_back(v);
    }
    s.unary_.emplace(name, std::move(rel));
  }
  for (const auto& [name, pairs] : binary_) {
    BinaryRelation rel;
    rel.pairs = pairs;
    std::sort(rel.pairs.begin(), rel.pairs.end());
    rel.pairs.erase(std::unique(rel.pairs.begin(), rel.pairs.end()), rel.pairs.end());
    rel.successors.assign(n, {});
    rel.predecessors.assign(n, {});
    for (auto [a, b] : rel.pairs) {
      rel.successors[a].push_back(b);
      rel.predecessors[b].push_back(a);
    }
    for (auto& p : rel.predecessors) std::sort(p.begin(), p.end());
    s.binary_.emplace(name, std::move(rel));
  }
  return s;
}

// ---------------------------------------------------------------------------
// PointedStructure

PointedStructure::PointedStructure(Structure s, std::vector<Node> pts)
    : structure(std::move(s)), points(std::move(pts)) {
  if (points.empty()) throw StructureError("pointed structures need at least one point");
  for (Node p : points) {
    if (p >= structure.size()) throw StructureError("point outside the domain");
  }
}

// ---------------------------------------------------------------------------
// Model-level operations

Structure induced(const Structure& m, std::span<const Node> keep) {
  std::vector<char> kept(m.size(), 0);
  for (Node v : keep) kept.at(v) = 1;
  StructureBuilder b;
  std::vector<Node> remap(m.size(), 0);
  for (Node v = 0; v < m.size(); ++v) {
    if (kept[v]) remap[v] = b.add_node(m.name(v));
  }
  for (const auto& [name, rel] : m.unary_relations()) {
    b.declare_unary(name);
    for (Node v : rel.nodes) {
      if (kept[v]) b.add_unary(name, remap[v]);
    }
  }
  for (const auto& [name, rel] : m.binary_relations()) {
    b.declare_binary(name);
    for (auto [x, y] : rel.pairs) {
      if (kept[x] && kept[y]) b.add_binary(name, remap[x], remap[y]);
    }
  }
  return b.build();
}

std::vector<Node> reachable(const Structure& m, Node from, std::string_view rel,
                            std::optional<std::size_t> max_steps) {
  std::vector<std::size_t> dist(m.size(), SIZE_MAX);
  std::deque<Node> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    Node v = queue.front();
    queue.pop_front();
    if (max_steps && dist[v] >= *max_steps) continue;
    for (Node w : m.successors(rel, v)) {
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Node> out;
  for (Node v = 0; v < m.size(); ++v) {
    if (dist[v] != SIZE_MAX) out.push_back(v);
  }
  return out;
}

namespace {

PointedStructure keep_pointed(const PointedStructure& m, const std::vector<Node>& keep) {
  Structure s = induced(m.structure, keep);
  std::vector<Node> pts;
  for (Node p : m.points) pts.push_back(s.node(m.structure.name(p)));
  return PointedStructure(std::move(s), std::move(pts));
}

void require_single_point(const PointedStructure& m, const char* op) {
  if (m.points.size() != 1) {
    throw PreconditionError(std::string(op) + " expects exactly one point");
  }
}

}  // namespace

PointedStructure generated_submodel(const PointedStructure& m) {
  require_single_point(m, "generated_submodel");
  return keep_pointed(m, reachable(m.structure, m.point(), kAccessibility));
}

PointedStructure cut_depth(const PointedStructure& m, std::size_t k) {
  require_single_point(m, "cut_depth");
  return keep_pointed(m, reachable(m.structure, m.point(), kAccessibility, k));
}

Structure restrict(const Structure& m, std::string_view pred) {
  const UnaryRelation* p = m.unary(pred);
  if (p == nullptr || p->empty()) {
    throw PreconditionError("restriction to \"" + std::string(pred) + "\" would be empty");
  }
  return induced(m, p->nodes);
}

Structure with_unary(const Structure& m, std::string_view pred, std::span<const Node> members) {
  if (m.binary(pred) != nullptr) {
    throw StructureError("\"" + std::string(pred) + "\" is a binary relation name");
  }
  StructureBuilder b;
  for (const auto& id : m.domain()) b.add_node(id);
  for (const auto& [name, rel] : m.unary_relations()) {
    b.declare_unary(name);
    if (name == pred) continue;
    for (Node v : rel.nodes) b.add_unary(name, v);
  }
  b.declare_unary(pred);
  for (Node v : members) b.add_unary(pred, v);
  for (const auto& [name, rel] : m.binary_relations()) {
    b.declare_binary(name);
    for (auto [x, y] : rel.pairs) b.add_binary(name, x, y);
  }
  return b.build();
}

bool is_tree(const PointedStructure& m) {
  require_single_point(m, "is_tree");
  const Structure& s = m.structure;
  const Node root = m.point();
  for (Node v = 0; v < s.size(); ++v) {
    const std::size_t parents = s.predecessors(kAccessibility, v).size();
    if (v == root ? parents != 0 : parents != 1) return false;
  }
  // Unique parents plus a parentless root: acyclic iff every node is reachable.
  return reachable(s, root, kAccessibility).size() == s.size();
}

bool is_frame_K(const Structure& m) {
  const BinaryRelation* rb = m.binary(kBulletAccessibility);
  if (rb == nullptr) return true;
  for (auto [w, v] : rb->pairs) {
    if (!m.holds(kAccessibility, w, v) || !m.holds(kAccessibility, v, v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Names with a non-empty interpretation; empty interpretations are
// indistinguishable from absent names.
std::vector<std::string> live_unary(const Structure& m) {
  std::vector<std::string> out;
  for (const auto& [name, rel] : m.unary_relations()) {
    if (!rel.empty()) out.push_back(name);
  }
  return out;
}

std::vector<std::string> live_binary(const Structure& m) {
  std::vector<std::string> out;
  for (const auto& [name, rel] : m.binary_relations()) {
    if (!rel.empty()) out.push_back(name);
  }
  return out;
}

using Signature = std::vector<std::uint32_t>;

std::vector<Signature> node_signatures(const Structure& m, const std::vector<std::string>& unary,
                                       const std::vector<std::string>& binary) {
  std::vector<Signature> sig(m.size());
  for (Node v = 0; v < m.size(); ++v) {
    for (const auto& p : unary) sig[v].push_back(m.holds(p, v) ? 1 : 0);
    for (const auto& r : binary) {
      sig[v].push_back(static_cast<std::uint32_t>(m.successors(r, v).size()));
      sig[v].push_back(static_cast<std::uint32_t>(m.predecessors(r, v).size()));
      sig[v].push_back(m.holds(r, v, v) ? 1 : 0);
    }
  }
  return sig;
}

std::vector<std::string> merged(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

class IsoSearch {
 public:
  IsoSearch(const Structure& m, const Structure& n) : m_(m), n_(n) {
    unary_ = merged(live_unary(m), live_unary(n));
    binary_ = merged(live_binary(m), live_binary(n));
    sig_m_ = node_signatures(m, unary_, binary_);
    sig_n_ = node_signatures(n, unary_, binary_);
    for (const auto& r : binary_) {
      rel_m_.push_back(m.binary(r));
      rel_n_.push_back(n.binary(r));
    }
  }

  bool run(const std::vector<NodePair>& fixed) {
    if (m_.size() != n_.size()) return false;
    auto a = sig_m_, b = sig_n_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;

    image_.assign(m_.size(), kUnmapped);
    used_.assign(n_.size(), 0);
    order_.clear();
    for (auto [v, w] : fixed) {
      if (image_[v] != kUnmapped) {
        if (image_[v] != w) return false;
        continue;
      }
      if (used_[w] || !compatible(v, w)) return false;
      image_[v] = w;
      used_[w] = 1;
      order_.push_back(v);
    }
    std::vector<Node> rest;
    for (Node v = 0; v < m_.size(); ++v) {
      if (image_[v] == kUnmapped) rest.push_back(v);
    }
    return extend(rest, 0);
  }

 private:
  static constexpr Node kUnmapped = UINT32_MAX;

  static bool has(const BinaryRelation* r, Node a, Node b) { return r != nullptr && r->contains(a, b); }

  bool compatible(Node v, Node w) const {
    if (sig_m_[v] != sig_n_[w]) return false;
    for (std::size_t i = 0; i < binary_.size(); ++i) {
      const BinaryRelation* rm = rel_m_[i];
      const BinaryRelation* rn = rel_n_[i];
      if (has(rm, v, v) != has(rn, w, w)) return false;
      for (Node u : order_) {
        const Node fu = image_[u];
        if (has(rm, v, u) != has(rn, w, fu)) return false;
        if (has(rm, u, v) != has(rn, fu, w)) return false;
      }
    }
    return true;
  }

  bool extend(const std::vector<Node>& rest, std::size_t i) {
    if (i == rest.size()) return true;
    const Node v = rest[i];
    for (Node w = 0; w < n_.size(); ++w) {
      if (used_[w] || !compatible(v, w)) continue;
      image_[v] = w;
      used_[w] = 1;
      order_.push_back(v);
      if (extend(rest, i + 1)) return true;
      order_.pop_back();
      used_[w] = 0;
      image_[v] = kUnmapped;
    }
    return false;
  }

  const Structure& m_;
  const Structure& n_;
  std::vector<std::string> unary_, binary_;
  std::vector<Signature> sig_m_, sig_n_;
  std::vector<const BinaryRelation*> rel_m_, rel_n_;
  std::vector<Node> image_;
  std::vector<char> used_;
  std::vector<Node> order_;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

std::uint64_t isomorphism_fingerprint(const Structure& m) {
  const auto unary = live_unary(m);
  const auto binary = live_binary(m);
  auto sig = node_signatures(m, unary, binary);
  std::sort(sig.begin(), sig.end());
  std::uint64_t h = m.size();
  for (const auto& name : unary) h = mix(h, std::hash<std::string>{}(name));
  h = mix(h, 0xabcdef);
  for (const auto& name : binary) h = mix(h, std::hash<std::string>{}(name));
  for (const auto& s : sig) {
    for (auto x : s) h = mix(h, x);
    h = mix(h, 0x5555);
  }
  return h;
}

bool isomorphic(const Structure& m, const Structure& n) {
  return IsoSearch(m, n).run({});
}

bool isomorphic(const PointedStructure& m, const PointedStructure& n) {
  if (m.points.size() != n.points.size()) return false;
  std::vector<NodePair> fixed;
  for (std::size_t i = 0; i < m.points.size(); ++i) fixed.emplace_back(m.points[i], n.points[i]);
  return IsoSearch(m.structure, n.structure).run(fixed);
}

}  // namespace logicwb
