#include <algorithm>
#include <set>

#include "logicwb/error.h"
#include "logicwb/transforms.h"

namespace logicwb {

namespace {

// Distinct neighbours sharing a binary fact, per node, ascending.
std::vector<std::vector<Node>> co_guarded(const Structure& m) {
  std::vector<std::set<Node>> adj(m.size());
  for (const auto& [name, rel] : m.binary_relations()) {
    for (auto [a, b] : rel.pairs) {
      if (a == b) continue;
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }
  std::vector<std::vector<Node>> out(m.size());
  for (Node v = 0; v < m.size(); ++v) out[v].assign(adj[v].begin(), adj[v].end());
  return out;
}

}  // namespace

std::vector<std::optional<std::size_t>> guarded_distances(const Structure& m, std::span<const Node> from) {
  if (from.empty()) throw PreconditionError("guarded distance needs a non-empty tuple");
  std::vector<std::optional<std::size_t>> dist(m.size());
  std::vector<Node> queue;
  for (Node s : from) {
    if (s >= m.size()) throw PreconditionError("guarded distance: tuple element outside the domain");
    if (!dist[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  const auto adj = co_guarded(m);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Node u = queue[i];
    for (Node v : adj[u]) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> guarded_dist(const Structure& m, std::span<const Node> from, Node t) {
  if (t >= m.size()) throw PreconditionError("guarded distance: target outside the domain");
  return guarded_distances(m, from)[t];
}

PointedStructure cut_guarded(const PointedStructure& m, std::size_t n) {
  const auto dist = guarded_distances(m.structure, m.points);
  std::vector<Node> keep;
  for (Node v = 0; v < m.structure.size(); ++v) {
    if (dist[v] && *dist[v] <= n) keep.push_back(v);
  }
  Structure out = induced(m.structure, keep);
  std::vector<Node> points;
  for (Node p : m.points) points.push_back(out.node(m.structure.name(p)));
  return PointedStructure(std::move(out), std::move(points));
}

GuardedUnraveling gf_unravel_bin_with_paths(const PointedStructure& m, std::size_t depth) {
  if (m.points.empty() || m.points.size() > 2) {
    throw PreconditionError("guarded unraveling needs one or two points");
  }
  const Structure& s = m.structure;
  const auto adj = co_guarded(s);

  struct Object {
    Node element;
    std::optional<std::size_t> parent;  // object holding the previous new element
    std::size_t length;
    std::string name;
  };
  std::vector<Object> objects;
  std::vector<Node> point_objects;
  for (Node p : m.points) {
    auto it = std::find_if(objects.begin(), objects.end(), [&](const Object& o) { return o.element == p; });
    if (it == objects.end()) {
      point_objects.push_back(static_cast<Node>(objects.size()));
      objects.push_back({p, std::nullopt, 1, s.name(p)});
    } else {
      point_objects.push_back(static_cast<Node>(it - objects.begin()));
    }
  }
  const std::size_t roots = objects.size();

  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].length > depth) continue;
    // Elements of the guarded set that introduced this object.
    std::vector<Node> last{objects[i].element};
    if (objects[i].parent) {
      last.push_back(objects[*objects[i].parent].element);
    } else {
      for (std::size_t r = 0; r < roots; ++r) last.push_back(objects[r].element);
    }
    for (Node e : adj[objects[i].element]) {
      if (std::find(last.begin(), last.end(), e) != last.end()) continue;
      objects.push_back({e, i, objects[i].length + 1, objects[i].name + "/" + s.name(e)});
    }
  }

  StructureBuilder b;
  for (const auto& o : objects) b.add_node(o.name);
  for (const auto& [name, rel] : s.unary_relations()) {
    b.declare_unary(name);
    for (Node i = 0; i < objects.size(); ++i) {
      if (rel.contains(objects[i].element)) b.add_unary(name, i);
    }
  }
  for (const auto& [name, rel] : s.binary_relations()) {
    b.declare_binary(name);
    auto link = [&](Node i, Node j) {
      if (rel.contains(objects[i].element, objects[j].element)) b.add_binary(name, i, j);
    };
    for (Node i = 0; i < objects.size(); ++i) {
      link(i, i);
      if (objects[i].parent) {
        const Node p = static_cast<Node>(*objects[i].parent);
        link(i, p);
        link(p, i);
      }
    }
    for (Node i = 0; i < roots; ++i) {
      for (Node j = 0; j < roots; ++j) {
        if (i != j) link(i, j);
      }
    }
  }

  GuardedUnraveling out{PointedStructure(b.build(), point_objects), {}};
  for (const auto& o : objects) out.path_length.push_back(o.length);
  return out;
}

PointedStructure gf_unravel_bin(const PointedStructure& m, std::size_t depth) {
  return gf_unravel_bin_with_paths(m, depth).model;
}

}  // namespace logicwb
