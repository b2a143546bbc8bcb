#include "generators.h"

#include <algorithm>
#include <functional>

#include "logicwb/equivalence.h"

namespace logicwb::harness {

Rng case_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Structure random_structure(Rng& rng, const StructureSpec& spec) {
  const std::size_t n = spec.min_nodes + pick(rng, spec.max_nodes - spec.min_nodes + 1);
  StructureBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node("w" + std::to_string(i));
  for (const auto& p : spec.unary) {
    b.declare_unary(p);
    for (Node v = 0; v < n; ++v) {
      if (coin(rng, spec.unary_probability)) b.add_unary(p, v);
    }
  }
  for (const auto& r : spec.binary) {
    b.declare_binary(r);
    for (Node a = 0; a < n; ++a) {
      for (Node c = 0; c < n; ++c) {
        if (coin(rng, spec.edge_probability)) b.add_binary(r, a, c);
      }
    }
  }
  return b.build();
}

PointedStructure random_pointed(Rng& rng, const StructureSpec& spec) {
  Structure s = random_structure(rng, spec);
  const Node point = static_cast<Node>(pick(rng, s.size()));
  return PointedStructure(std::move(s), point);
}

namespace {

ModalFormula gen_modal(Rng& rng, const ModalSpec& spec, std::size_t depth, std::size_t size) {
  enum Choice { kAtom, kNeg, kAnd, kOr, kImp, kDia, kBox, kGeq, kBoxGeq, kBullet, kBulletDual };
  std::vector<Choice> options{kAtom};
  if (size >= 2) options.push_back(kNeg);
  if (size >= 3) options.insert(options.end(), {kAnd, kOr, kImp});
  if (depth > 0 && size >= 2) {
    options.insert(options.end(), {kDia, kBox});
    if (spec.max_grade > 0) options.insert(options.end(), {kGeq, kBoxGeq});
    if (spec.bullets) options.insert(options.end(), {kBullet, kBulletDual});
  }
  auto sub = [&](std::size_t d, std::size_t s) { return gen_modal(rng, spec, d, s); };
  switch (options[pick(rng, options.size())]) {
    case kAtom: {
      const std::size_t i = pick(rng, spec.letters.size() + 2);
      if (i == spec.letters.size()) return ml::top();
      if (i == spec.letters.size() + 1) return ml::bot();
      return ml::prop(spec.letters[i]);
    }
    case kNeg: return ml::neg(sub(depth, size - 1));
    case kAnd:
    case kOr:
    case kImp: {
      const std::size_t left = 1 + pick(rng, size - 2);
      ModalFormula a = sub(depth, left);
      ModalFormula b = sub(depth, size - 1 - left);
      const std::size_t which = pick(rng, 3);
      return which == 0 ? ml::conj(a, b) : which == 1 ? ml::disj(a, b) : ml::implies(a, b);
    }
    case kDia: return ml::dia(sub(depth - 1, size - 1));
    case kBox: return ml::box(sub(depth - 1, size - 1));
    case kGeq: return ml::dia_geq(static_cast<unsigned>(pick(rng, spec.max_grade + 1)), sub(depth - 1, size - 1));
    case kBoxGeq: return ml::box_geq(static_cast<unsigned>(pick(rng, spec.max_grade + 1)), sub(depth - 1, size - 1));
    case kBullet: return ml::bullet(sub(depth - 1, size - 1));
    case kBulletDual: return ml::bullet_dual(sub(depth - 1, size - 1));
  }
  return ml::top();
}

RaTerm gen_ra(Rng& rng, std::size_t size, const std::vector<std::string>& atoms) {
  if (size <= 1) {
    const std::size_t i = pick(rng, atoms.size() + 2);
    if (i == atoms.size()) return ra::id();
    if (i == atoms.size() + 1) return ra::top();
    return ra::atom(atoms[i]);
  }
  if (size == 2 || coin(rng, 0.2)) return ra::conv(gen_ra(rng, size - 1, atoms));
  const std::size_t left = 1 + pick(rng, size - 2);
  RaTerm a = gen_ra(rng, left, atoms);
  RaTerm b = gen_ra(rng, size - 1 - left, atoms);
  switch (pick(rng, 3)) {
    case 0: return ra::meet(a, b);
    case 1: return ra::diff(a, b);
    default: return ra::comp(a, b);
  }
}

FoFormula gen_gf(Rng& rng, std::size_t depth, const std::vector<Var>& avail, const std::vector<std::string>& unary,
                 const std::vector<std::string>& binary, std::size_t size) {
  auto var = [&] { return avail[pick(rng, avail.size())]; };
  enum Choice { kAtom, kNeg, kBin, kQuant };
  std::vector<Choice> options{kAtom};
  if (size >= 2) options.push_back(kNeg);
  if (size >= 3) options.push_back(kBin);
  if (depth > 0 && size >= 2) options.insert(options.end(), {kQuant, kQuant});
  switch (options[pick(rng, options.size())]) {
    case kAtom: {
      const std::size_t which = pick(rng, 3);
      if (which == 0) return fo::un(unary[pick(rng, unary.size())], var());
      if (which == 1) return fo::bin(binary[pick(rng, binary.size())], var(), var());
      return fo::eq(var(), var());
    }
    case kNeg: return fo::neg(gen_gf(rng, depth, avail, unary, binary, size - 1));
    case kBin: {
      const std::size_t left = 1 + pick(rng, size - 2);
      FoFormula a = gen_gf(rng, depth, avail, unary, binary, left);
      FoFormula b = gen_gf(rng, depth, avail, unary, binary, size - 1 - left);
      const std::size_t which = pick(rng, 3);
      return which == 0 ? fo::conj(a, b) : which == 1 ? fo::disj(a, b) : fo::implies(a, b);
    }
    case kQuant: {
      const Var anchor = var();
      std::vector<Var> others;
      for (Var v : kAllVars) {
        if (v != anchor) others.push_back(v);
      }
      const Var bound = others[pick(rng, others.size())];
      const std::string& rel = binary[pick(rng, binary.size())];
      GuardAtom guard = coin(rng, 0.5) ? GuardAtom{rel, anchor, bound} : GuardAtom{rel, bound, anchor};
      FoFormula body = gen_gf(rng, depth - 1, {anchor, bound}, unary, binary, size - 1);
      return coin(rng, 0.5) ? fo::exists(bound, guard, body) : fo::forall(bound, guard, body);
    }
  }
  return fo::eq(avail[0], avail[0]);
}

}  // namespace

ModalFormula random_modal(Rng& rng, const ModalSpec& spec) {
  const std::size_t size = 1 + pick(rng, spec.size);
  return gen_modal(rng, spec, spec.depth, size);
}

RaTerm random_ra(Rng& rng, std::size_t max_size, const std::vector<std::string>& atoms) {
  return gen_ra(rng, 1 + pick(rng, max_size), atoms);
}

FoFormula random_gf_bin(Rng& rng, std::size_t depth, const std::vector<Var>& free,
                        const std::vector<std::string>& unary, const std::vector<std::string>& binary,
                        std::size_t size) {
  return gen_gf(rng, depth, free, unary, binary, 1 + pick(rng, size));
}

namespace {

struct TreeShape {
  std::size_t size;
  unsigned label;
  std::vector<std::size_t> kids;  // indices into the pool, non-decreasing
};

void add_node(const std::vector<TreeShape>& pool, std::size_t t, std::optional<Node> parent,
              const std::vector<std::string>& letters, StructureBuilder& b) {
  const Node id = b.add_node("t" + std::to_string(b.size()));
  for (std::size_t j = 0; j < letters.size(); ++j) {
    if ((pool[t].label >> j) & 1u) b.add_unary(letters[j], id);
  }
  if (parent) b.add_binary(kAccessibility, *parent, id);
  for (std::size_t k : pool[t].kids) add_node(pool, k, id, letters, b);
}

}  // namespace

std::vector<PointedStructure> all_trees(std::size_t max_nodes, const std::vector<std::string>& letters) {
  const unsigned labels = 1u << letters.size();
  std::vector<TreeShape> pool;
  // Multisets of pool entries (non-decreasing indices) with the given total size.
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::vector<std::vector<std::size_t>>&)>
      forests = [&](std::size_t remaining, std::size_t min_index, std::vector<std::size_t>& acc,
                    std::vector<std::vector<std::size_t>>& out) {
        if (remaining == 0) {
          out.push_back(acc);
          return;
        }
        for (std::size_t i = min_index; i < pool.size(); ++i) {
          if (pool[i].size > remaining) continue;
          acc.push_back(i);
          forests(remaining - pool[i].size, i, acc, out);
          acc.pop_back();
        }
      };
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    std::vector<std::vector<std::size_t>> kid_sets;
    std::vector<std::size_t> acc;
    forests(n - 1, 0, acc, kid_sets);
    std::vector<TreeShape> fresh;
    for (const auto& kids : kid_sets) {
      for (unsigned l = 0; l < labels; ++l) fresh.push_back({n, l, kids});
    }
    pool.insert(pool.end(), fresh.begin(), fresh.end());
  }
  std::vector<PointedStructure> out;
  for (std::size_t t = 0; t < pool.size(); ++t) {
    StructureBuilder b;
    for (const auto& p : letters) b.declare_unary(p);
    b.declare_binary(kAccessibility);
    add_node(pool, t, std::nullopt, letters, b);
    out.emplace_back(b.build(), Node{0});
  }
  return out;
}

PointedStructure duplicate_node(Rng& rng, const PointedStructure& m) {
  const Structure& s = m.structure;
  const Node v = static_cast<Node>(pick(rng, s.size()));
  StructureBuilder b;
  for (Node u = 0; u < s.size(); ++u) b.add_node(s.name(u));
  std::string copy_name = s.name(v) + "_d";
  while (b.find(copy_name)) copy_name += "d";
  const Node copy = b.add_node(copy_name);
  for (const auto& [name, rel] : s.unary_relations()) {
    b.declare_unary(name);
    for (Node u : rel.nodes) b.add_unary(name, u);
    if (rel.contains(v)) b.add_unary(name, copy);
  }
  for (const auto& [name, rel] : s.binary_relations()) {
    b.declare_binary(name);
    for (auto [x, y] : rel.pairs) {
      if (x == v) b.add_binary(name, copy, y);
      if (y != v) {
        b.add_binary(name, x, y);
        continue;
      }
      // Incoming edge: keep, redirect to the copy, or both.
      const std::size_t mode = pick(rng, 3);
      if (mode != 1) b.add_binary(name, x, v);
      if (mode != 0) b.add_binary(name, x, copy);
    }
  }
  return PointedStructure(b.build(), m.points);
}

PointedStructure bisimulation_quotient(const PointedStructure& m) {
  const Structure& s = m.structure;
  GameResult self = bisimilar(m, m);
  std::vector<Node> rep(s.size());
  for (Node u = 0; u < s.size(); ++u) rep[u] = u;
  for (const auto& pair : self.family) {
    auto [a, c] = pair.front();
    rep[a] = std::min(rep[a], c);
  }
  StructureBuilder b;
  std::vector<Node> index(s.size());
  for (Node u = 0; u < s.size(); ++u) {
    if (rep[u] == u) index[u] = b.add_node(s.name(u));
  }
  for (const auto& [name, rel] : s.unary_relations()) {
    b.declare_unary(name);
    for (Node u : rel.nodes) {
      if (rep[u] == u) b.add_unary(name, index[u]);
    }
  }
  b.declare_binary(kAccessibility);
  for (auto [x, y] : s.binary(kAccessibility) ? s.binary(kAccessibility)->pairs : std::vector<NodePair>{}) {
    b.add_binary(kAccessibility, index[rep[x]], index[rep[y]]);
  }
  return PointedStructure(b.build(), index[rep[m.point()]]);
}

}  // namespace logicwb::harness
