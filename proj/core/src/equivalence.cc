#include "logicwb/equivalence.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "logicwb/error.h"

namespace logicwb {

namespace {

std::vector<std::string> union_names(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::set<std::string> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return {s.begin(), s.end()};
}

// Per-node membership vector over a fixed list of unary names.
std::vector<std::vector<char>> unary_profile(const Structure& m, const std::vector<std::string>& names) {
  std::vector<std::vector<char>> out(m.size(), std::vector<char>(names.size(), 0));
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (const auto* u = m.unary(names[i])) {
      for (Node v : u->nodes) out[v][i] = 1;
    }
  }
  return out;
}

// Checks the facts that adding (a, b) to a partial isomorphism `f` would
// have to preserve.
class IsoChecker {
 public:
  IsoChecker(const Structure& m, const Structure& n)
      : m_(m), n_(n), unary_(union_names(m.unary_names(), n.unary_names())),
        binary_(union_names(m.binary_names(), n.binary_names())),
        pm_(unary_profile(m, unary_)), pn_(unary_profile(n, unary_)) {
    for (const auto& r : binary_) {
      rel_m_.push_back(m.binary(r));
      rel_n_.push_back(n.binary(r));
    }
  }

  bool extends(const PartialMap& f, Node a, Node b) const {
    if (pm_[a] != pn_[b]) return false;
    if (!agree(a, a, b, b)) return false;
    for (auto [x, y] : f) {
      if (x == a || y == b) return x == a && y == b;
      if (!agree(a, x, b, y) || !agree(x, a, y, b)) return false;
    }
    return true;
  }

  const Structure& left() const { return m_; }
  const Structure& right() const { return n_; }

 private:
  bool agree(Node a1, Node a2, Node b1, Node b2) const {
    for (std::size_t i = 0; i < binary_.size(); ++i) {
      const bool l = rel_m_[i] != nullptr && rel_m_[i]->contains(a1, a2);
      const bool r = rel_n_[i] != nullptr && rel_n_[i]->contains(b1, b2);
      if (l != r) return false;
    }
    return true;
  }

  const Structure& m_;
  const Structure& n_;
  std::vector<std::string> unary_;
  std::vector<std::string> binary_;
  std::vector<std::vector<char>> pm_;
  std::vector<std::vector<char>> pn_;
  std::vector<const BinaryRelation*> rel_m_;
  std::vector<const BinaryRelation*> rel_n_;
};

void insert_pair(PartialMap& f, NodePair p) {
  f.insert(std::lower_bound(f.begin(), f.end(), p), p);
}

// Synchronous zig/zag refinement rounds over the product of domains, seeded by
// atomic harmony. Returns the round at which (w, v) dropped out, if it did
// within `max_rounds`.
struct BisimTable {
  std::size_t rows;
  std::size_t cols;
  std::vector<char> z;
  bool at(Node a, Node b) const { return z[a * cols + b] != 0; }
};

std::optional<std::size_t> refine_bisim(const Structure& m, const Structure& n, Node w, Node v,
                                        std::optional<std::size_t> max_rounds, BisimTable& table) {
  const auto names = union_names(m.unary_names(), n.unary_names());
  const auto pm = unary_profile(m, names);
  const auto pn = unary_profile(n, names);
  table = BisimTable{m.size(), n.size(), std::vector<char>(m.size() * n.size(), 0)};
  for (Node a = 0; a < m.size(); ++a) {
    for (Node b = 0; b < n.size(); ++b) table.z[a * n.size() + b] = pm[a] == pn[b] ? 1 : 0;
  }
  if (!table.at(w, v)) return 0;
  for (std::size_t round = 1; !max_rounds || round <= *max_rounds; ++round) {
    std::vector<char> next = table.z;
    bool changed = false;
    for (Node a = 0; a < m.size(); ++a) {
      for (Node b = 0; b < n.size(); ++b) {
        if (!table.at(a, b)) continue;
        auto sa = m.successors(kAccessibility, a);
        auto sb = n.successors(kAccessibility, b);
        bool ok = std::all_of(sa.begin(), sa.end(), [&](Node a2) {
          return std::any_of(sb.begin(), sb.end(), [&](Node b2) { return table.at(a2, b2); });
        });
        ok = ok && std::all_of(sb.begin(), sb.end(), [&](Node b2) {
          return std::any_of(sa.begin(), sa.end(), [&](Node a2) { return table.at(a2, b2); });
        });
        if (!ok) {
          next[a * n.size() + b] = 0;
          changed = true;
        }
      }
    }
    table.z = std::move(next);
    if (!table.at(w, v)) return round;
    if (!changed) break;
  }
  return std::nullopt;
}

void require_single_points(const PointedStructure& m, const PointedStructure& n) {
  if (m.points.size() != 1 || n.points.size() != 1) {
    throw PreconditionError("bisimulation games need exactly one point on each side");
  }
}

GameResult bisim_result(const BisimTable& t, std::optional<std::size_t> lost) {
  GameResult out;
  out.equivalent = !lost.has_value();
  out.distinguishing_round = lost;
  if (out.equivalent) {
    for (Node a = 0; a < t.rows; ++a) {
      for (Node b = 0; b < t.cols; ++b) {
        if (t.at(a, b)) out.family.push_back({{a, b}});
      }
    }
  }
  return out;
}

}  // namespace

bool is_partial_iso(const Structure& m, const Structure& n, const PartialMap& f) {
  IsoChecker check(m, n);
  PartialMap prefix;
  for (auto [a, b] : f) {
    if (a >= m.size() || b >= n.size()) return false;
    for (auto [x, y] : prefix) {
      if (x == a || y == b) return false;
    }
    if (!check.extends(prefix, a, b)) return false;
    insert_pair(prefix, {a, b});
  }
  return true;
}

GameResult bisimilar(const PointedStructure& m, const PointedStructure& n) {
  require_single_points(m, n);
  BisimTable t;
  auto lost = refine_bisim(m.structure, n.structure, m.point(), n.point(), std::nullopt, t);
  return bisim_result(t, lost);
}

GameResult bisimilar_depth(const PointedStructure& m, const PointedStructure& n, std::size_t k) {
  require_single_points(m, n);
  BisimTable t;
  auto lost = refine_bisim(m.structure, n.structure, m.point(), n.point(), k, t);
  return bisim_result(t, lost);
}

GameResult counting_bisimilar(const PointedStructure& m, const PointedStructure& n) {
  require_single_points(m, n);
  const Structure& sm = m.structure;
  const Structure& sn = n.structure;
  const auto names = union_names(sm.unary_names(), sn.unary_names());
  const auto pm = unary_profile(sm, names);
  const auto pn = unary_profile(sn, names);
  const std::size_t total = sm.size() + sn.size();
  auto succ = [&](std::size_t u) {
    std::vector<std::size_t> out;
    if (u < sm.size()) {
      for (Node v : sm.successors(kAccessibility, static_cast<Node>(u))) out.push_back(v);
    } else {
      for (Node v : sn.successors(kAccessibility, static_cast<Node>(u - sm.size()))) out.push_back(v + sm.size());
    }
    return out;
  };

  std::vector<std::size_t> block(total);
  {
    std::map<std::vector<char>, std::size_t> ids;
    for (std::size_t u = 0; u < total; ++u) {
      const auto& p = u < sm.size() ? pm[u] : pn[u - sm.size()];
      block[u] = ids.emplace(p, ids.size()).first->second;
    }
  }
  std::size_t blocks = 0;
  while (true) {
    std::map<std::pair<std::size_t, std::map<std::size_t, std::size_t>>, std::size_t> ids;
    std::vector<std::size_t> next(total);
    for (std::size_t u = 0; u < total; ++u) {
      std::map<std::size_t, std::size_t> counts;
      for (std::size_t v : succ(u)) ++counts[block[v]];
      next[u] = ids.emplace(std::make_pair(block[u], std::move(counts)), ids.size()).first->second;
    }
    block = std::move(next);
    if (ids.size() == blocks) break;
    blocks = ids.size();
  }

  GameResult out;
  out.equivalent = block[m.point()] == block[sm.size() + n.point()];
  if (out.equivalent) {
    for (Node a = 0; a < sm.size(); ++a) {
      for (Node b = 0; b < sn.size(); ++b) {
        if (block[a] == block[sm.size() + b]) out.family.push_back({{a, b}});
      }
    }
  }
  return out;
}

namespace {

constexpr std::size_t kMaxPebbleNodes = 16;
constexpr std::size_t kMaxPebblePositions = 4'000'000;

// Maps of at most 7 pairs over at most 16 nodes per side, one byte per pair.
std::uint64_t map_key(const PartialMap& f) {
  std::uint64_t key = 0;
  for (auto [a, b] : f) key = (key << 8) | (static_cast<std::uint64_t>(a) << 4) | b;
  return (key << 4) | f.size();
}

}  // namespace

GameResult pebble_equiv(const Structure& m, const Structure& n, std::size_t k) {
  if (k == 0) throw PreconditionError("pebble games need at least one pebble");
  if (m.size() > kMaxPebbleNodes || n.size() > kMaxPebbleNodes) {
    throw BudgetError("pebble games are limited to 16-node structures");
  }
  // No partial map can outgrow the smaller domain.
  const std::size_t cap = std::min({k, m.size(), n.size()});
  if (cap > 7) throw BudgetError("pebble games are limited to maps of at most 7 pairs");

  IsoChecker check(m, n);
  std::vector<PartialMap> maps;
  std::unordered_map<std::uint64_t, std::size_t> index;
  maps.push_back({});
  index.emplace(map_key({}), 0);
  // Canonical generation: pairs are appended in increasing left order.
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].size() >= cap) continue;
    const Node start = maps[i].empty() ? 0 : maps[i].back().first + 1;
    for (Node a = start; a < m.size(); ++a) {
      for (Node b = 0; b < n.size(); ++b) {
        if (!check.extends(maps[i], a, b)) continue;
        PartialMap g = maps[i];
        g.emplace_back(a, b);
        index.emplace(map_key(g), maps.size());
        maps.push_back(std::move(g));
        if (maps.size() > kMaxPebblePositions) throw BudgetError("pebble game position budget exceeded");
      }
    }
  }

  std::vector<char> alive(maps.size(), 1);
  auto extension = [&](const PartialMap& f, Node a, Node b) -> std::optional<std::size_t> {
    PartialMap g = f;
    insert_pair(g, {a, b});
    auto it = index.find(map_key(g));
    if (it == index.end() || !alive[it->second]) return std::nullopt;
    return it->second;
  };
  auto kill_upward = [&](std::size_t root) {
    std::deque<std::size_t> queue{root};
    alive[root] = 0;
    while (!queue.empty()) {
      const PartialMap f = maps[queue.front()];
      queue.pop_front();
      if (f.size() >= k) continue;
      for (Node a = 0; a < m.size(); ++a) {
        for (Node b = 0; b < n.size(); ++b) {
          if (auto j = extension(f, a, b)) {
            alive[*j] = 0;
            queue.push_back(*j);
          }
        }
      }
    }
  };

  bool changed = true;
  while (changed && alive[0]) {
    changed = false;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (!alive[i] || maps[i].size() >= k) continue;
      const PartialMap& f = maps[i];
      std::vector<char> used_m(m.size(), 0), used_n(n.size(), 0);
      for (auto [a, b] : f) used_m[a] = used_n[b] = 1;
      bool ok = true;
      for (Node a = 0; a < m.size() && ok; ++a) {
        if (used_m[a]) continue;
        bool found = false;
        for (Node b = 0; b < n.size() && !found; ++b) found = !used_n[b] && extension(f, a, b).has_value();
        ok = found;
      }
      for (Node b = 0; b < n.size() && ok; ++b) {
        if (used_n[b]) continue;
        bool found = false;
        for (Node a = 0; a < m.size() && !found; ++a) found = !used_m[a] && extension(f, a, b).has_value();
        ok = found;
      }
      if (!ok) {
        kill_upward(i);
        changed = true;
      }
    }
  }

  GameResult out;
  out.equivalent = alive[0] != 0;
  if (out.equivalent) {
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (alive[i]) out.family.push_back(maps[i]);
    }
  }
  return out;
}

bool potential_iso(const Structure& m, const Structure& n) { return isomorphic(m, n); }

namespace {

// Guarded subsets of size one or two, each as a sorted node list.
std::vector<std::vector<Node>> guarded_sets(const Structure& m, const std::vector<Node>& points,
                                            std::size_t& isolated) {
  std::vector<char> covered(m.size(), 0);
  std::set<std::pair<Node, Node>> pairs;
  for (const auto& [name, rel] : m.binary_relations()) {
    for (auto [a, b] : rel.pairs) {
      covered[a] = covered[b] = 1;
      if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
    }
  }
  for (Node p : points) covered[p] = covered[p] ? covered[p] : 2;
  std::vector<std::vector<Node>> out;
  isolated = 0;
  for (Node a = 0; a < m.size(); ++a) {
    if (covered[a]) {
      out.push_back({a});
    } else {
      ++isolated;
    }
  }
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

GameResult gf_bin_bisimilar(const PointedStructure& m, const PointedStructure& n) {
  if (m.points.size() != n.points.size() || m.points.empty() || m.points.size() > 2) {
    throw PreconditionError("guarded bisimulation needs point tuples of equal length 1 or 2");
  }
  const Structure& sm = m.structure;
  const Structure& sn = n.structure;
  GameResult out;

  PartialMap root;
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    const NodePair p{m.points[i], n.points[i]};
    if (std::find(root.begin(), root.end(), p) == root.end()) insert_pair(root, p);
  }
  if (!is_partial_iso(sm, sn, root)) return out;

  std::size_t isolated_m = 0;
  std::size_t isolated_n = 0;
  const auto gm = guarded_sets(sm, m.points, isolated_m);
  const auto gn = guarded_sets(sn, n.points, isolated_n);
  if (isolated_m + isolated_n > 0) {
    out.notes.push_back("isolated elements are not guarded and take no part in the game (" +
                        std::to_string(isolated_m) + " left, " + std::to_string(isolated_n) + " right)");
  }

  IsoChecker check(sm, sn);
  std::vector<PartialMap> positions;
  std::set<PartialMap> seen;
  auto add = [&](PartialMap f) {
    if (seen.insert(f).second) positions.push_back(std::move(f));
  };
  add(root);
  for (const auto& x : gm) {
    for (const auto& y : gn) {
      if (x.size() != y.size()) continue;
      if (x.size() == 1) {
        if (check.extends({}, x[0], y[0])) add({{x[0], y[0]}});
        continue;
      }
      for (int flip = 0; flip < 2; ++flip) {
        const Node b0 = flip ? y[1] : y[0];
        const Node b1 = flip ? y[0] : y[1];
        if (check.extends({}, x[0], b0) && check.extends({{x[0], b0}}, x[1], b1)) {
          add({{x[0], b0}, {x[1], b1}});
        }
      }
    }
  }

  std::vector<char> alive(positions.size(), 1);
  std::map<std::vector<Node>, std::vector<std::size_t>> by_dom, by_ran;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    std::vector<Node> dom, ran;
    for (auto [a, b] : positions[i]) {
      dom.push_back(a);
      ran.push_back(b);
    }
    std::sort(ran.begin(), ran.end());
    by_dom[dom].push_back(i);
    by_ran[ran].push_back(i);
  }
  auto image = [](const PartialMap& f, Node a) -> std::optional<Node> {
    for (auto [x, y] : f) {
      if (x == a) return y;
    }
    return std::nullopt;
  };
  auto preimage = [](const PartialMap& f, Node b) -> std::optional<Node> {
    for (auto [x, y] : f) {
      if (y == b) return x;
    }
    return std::nullopt;
  };

  bool changed = true;
  while (changed && alive[0]) {
    changed = false;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (!alive[i]) continue;
      const PartialMap& f = positions[i];
      bool ok = true;
      for (const auto& z : gm) {
        if (!ok) break;
        bool overlap = false;
        for (Node a : z) overlap = overlap || image(f, a).has_value();
        if (!overlap) continue;
        bool found = false;
        for (std::size_t j : by_dom[z]) {
          if (!alive[j]) continue;
          bool agree = true;
          for (Node a : z) {
            if (auto fa = image(f, a)) agree = agree && image(positions[j], a) == fa;
          }
          if ((found = agree)) break;
        }
        ok = found;
      }
      for (const auto& w : gn) {
        if (!ok) break;
        bool overlap = false;
        for (Node b : w) overlap = overlap || preimage(f, b).has_value();
        if (!overlap) continue;
        bool found = false;
        for (std::size_t j : by_ran[w]) {
          if (!alive[j]) continue;
          bool agree = true;
          for (Node b : w) {
            if (auto fb = preimage(f, b)) agree = agree && preimage(positions[j], b) == fb;
          }
          if ((found = agree)) break;
        }
        ok = found;
      }
      if (!ok) {
        alive[i] = 0;
        changed = true;
      }
    }
  }

  out.equivalent = alive[0] != 0;
  if (out.equivalent) {
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (alive[i]) out.family.push_back(positions[i]);
    }
  }
  return out;
}

}  // namespace logicwb
