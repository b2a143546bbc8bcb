#include "suites.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "generators.h"
#include "logicwb/decision.h"
#include "logicwb/equivalence.h"
#include "logicwb/semantics.h"
#include "logicwb/structure_io.h"
#include "logicwb/syntax.h"
#include "logicwb/transforms.h"

namespace logicwb::harness {

using nlohmann::json;

nlohmann::json CheckReport::to_json() const {
  json failures_json = json::array();
  for (const auto& f : failures) {
    failures_json.push_back(
        {{"index", f.index}, {"seed", f.seed}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  }
  return {{"suite", suite}, {"cases", cases}, {"failures", failures_json}, {"elapsed_ms", elapsed_ms}};
}

namespace {

json to_json(const PointedStructure& m) { return json::parse(dump_structure(m)); }
json to_json(const Structure& m) { return json::parse(dump_structure(m)); }

std::string node_name_pairs(const Structure& m, const Relation& r) {
  std::string out = "{";
  for (auto [a, b] : r.pairs()) out += "(" + m.name(a) + "," + m.name(b) + ")";
  return out + "}";
}

class Runner {
 public:
  Runner(const SuiteOptions& options, CheckReport& report) : options_(options), report_(report) {}

  std::size_t cases(std::size_t fallback) const { return options_.cases.value_or(fallback); }
  Rng rng(std::size_t index) const { return case_rng(options_.seed, index); }

  // The corpus entry for case `index`, or a generated structure.
  PointedStructure structure(std::size_t index, Rng& rng, const StructureSpec& spec) const {
    if (!options_.corpus.empty()) return options_.corpus[index % options_.corpus.size()];
    return random_pointed(rng, spec);
  }

  void fail(std::size_t index, json input, json expected, json got) {
    report_.failures.push_back({index, options_.seed, std::move(input), std::move(expected), std::move(got)});
  }
  void count(std::size_t n = 1) { report_.cases += n; }

 private:
  const SuiteOptions& options_;
  CheckReport& report_;
};

PointedStructure single_point(const PointedStructure& m) {
  return m.points.size() == 1 ? m : PointedStructure(m.structure, m.point());
}

void unravel_invariance(Runner& run) {
  const StructureSpec spec{1, 8, {"p", "q", "r"}, {"R"}, 0.25, 0.4};
  const ModalSpec fspec{3, 12, {"p", "q", "r"}, 3, false};
  for (std::size_t i = 0; i < run.cases(200); ++i) {
    Rng rng = run.rng(i);
    const PointedStructure m = single_point(run.structure(i, rng, spec));
    const ModalFormula f = random_modal(rng, fspec);
    const PointedStructure t = unravel(m, depth_modal(f));
    const bool before = eval_modal(m, f);
    const bool after = eval_modal(t, f);
    run.count();
    if (!is_tree(t) || before != after) {
      run.fail(i, {{"structure", to_json(m)}, {"formula", to_string(f)}}, before,
               {{"unraveled", after}, {"is_tree", is_tree(t)}});
    }
  }
}

// Fixed quasi-model pair: R-bisimilar, but only the left one has an Rb-edge.
void bullet_counterexample(Runner& run) {
  StructureBuilder a;
  a.add_node("a");
  a.add_node("b");
  a.add_binary("R", "a", "b");
  a.add_binary("R", "b", "b");
  a.add_binary("Rb", "a", "b");
  a.add_unary("p", "b");
  StructureBuilder c;
  c.add_node("a");
  c.add_node("b");
  c.add_binary("R", "a", "b");
  c.add_binary("R", "b", "b");
  c.declare_binary("Rb");
  c.add_unary("p", "b");
  const PointedStructure left(a.build(), Node{0});
  const PointedStructure right(c.build(), Node{0});
  const ModalFormula f = ml::bullet(ml::prop("p"));
  const bool bisim = bisimilar(left, right).equivalent;
  const bool l = eval_modal(left, f, SemanticsMode::kQuasi);
  const bool r = eval_modal(right, f, SemanticsMode::kQuasi);
  run.count();
  if (!bisim || l == r) {
    run.fail(0, {{"left", to_json(left)}, {"right", to_json(right)}, {"formula", to_string(f)}},
             {{"bisimilar", true}, {"values_differ", true}}, {{"bisimilar", bisim}, {"values_differ", l != r}});
  }
}

void bisim_invariance(Runner& run) {
  const StructureSpec spec{1, 6, {"p", "q"}, {"R"}, 0.3, 0.4};
  const ModalSpec fspec{3, 12, {"p", "q"}, 0, false};
  constexpr std::size_t kFormulasPerPair = 10;
  bullet_counterexample(run);
  for (std::size_t i = 0; i < run.cases(200); ++i) {
    Rng rng = run.rng(i);
    const PointedStructure m = single_point(run.structure(i, rng, spec));
    PointedStructure n = m;
    if (std::bernoulli_distribution(0.5)(rng)) {
      n = bisimulation_quotient(duplicate_node(rng, m));
    } else {
      const std::size_t copies = 1 + std::uniform_int_distribution<std::size_t>(0, 2)(rng);
      for (std::size_t c = 0; c < copies; ++c) n = duplicate_node(rng, n);
    }
    if (!bisimilar(m, n).equivalent) {
      run.fail(i, {{"left", to_json(m)}, {"right", to_json(n)}}, "bisimilar construction", "not bisimilar");
      continue;
    }
    for (std::size_t k = 0; k < kFormulasPerPair; ++k) {
      const ModalFormula f = random_modal(rng, fspec);
      const bool l = eval_modal(m, f);
      const bool r = eval_modal(n, f);
      run.count();
      if (l != r) run.fail(i, {{"left", to_json(m)}, {"right", to_json(n)}, {"formula", to_string(f)}}, l, r);
    }
  }
}

void char_formula(Runner& run) {
  const std::vector<std::string> letters{"p", "q"};
  const auto trees = all_trees(5, letters);
  const Vocabulary vocab{{letters.begin(), letters.end()}, {}};
  std::vector<std::uint64_t> fingerprint;
  for (const auto& t : trees) fingerprint.push_back(isomorphism_fingerprint(t.structure));
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const ModalFormula psi = gml_char_formula(trees[i], vocab);
    for (std::size_t j = 0; j < trees.size(); ++j) {
      const bool iso = fingerprint[i] == fingerprint[j] && isomorphic(trees[i], trees[j]);
      const bool holds = eval_modal(trees[j], psi);
      if (iso != holds) {
        run.fail(i * trees.size() + j,
                 {{"tree", to_json(trees[i])}, {"other", to_json(trees[j])}, {"formula", to_string(psi)}}, iso,
                 holds);
      }
    }
    run.count(trees.size());
  }
}

struct RaCase {
  Structure m;
  RaTerm t;
};

// Structures with non-empty dom(R) over atoms R and S, and a random term.
RaCase ra_case(Runner& run, std::size_t i) {
  Rng rng = run.rng(i);
  const StructureSpec spec{1, 5, {}, {"R", "S"}, 0.3, 0.0};
  for (std::size_t attempt = 0;; ++attempt) {
    Structure m = run.structure(i + attempt * 7919, rng, spec).structure;
    const auto* r = m.binary("R");
    if ((r != nullptr && !r->empty()) || attempt > 100) return {std::move(m), random_ra(rng, 6, {"R", "S"})};
  }
}

void ra_relativize_suite(Runner& run) {
  for (std::size_t i = 0; i < run.cases(300); ++i) {
    auto [m, t] = ra_case(run, i);
    const auto* r = m.binary("R");
    if (r == nullptr || r->empty()) continue;
    std::vector<Node> dom;
    for (auto [a, b] : r->pairs) dom.push_back(a);
    std::sort(dom.begin(), dom.end());
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    const Structure sub = induced(m, dom);
    const Relation lhs = eval_ra(m, ra_relativize(t, "R"));
    const Relation rhs = eval_ra(sub, t);
    std::set<std::pair<std::string, std::string>> a, b;
    for (auto [x, y] : lhs.pairs()) a.emplace(m.name(x), m.name(y));
    for (auto [x, y] : rhs.pairs()) b.emplace(sub.name(x), sub.name(y));
    run.count();
    if (a != b) {
      run.fail(i, {{"structure", to_json(m)}, {"term", to_string(t)}}, node_name_pairs(sub, rhs),
               node_name_pairs(m, lhs));
    }
  }
}

void ra2fo_suite(Runner& run) {
  for (std::size_t i = 0; i < run.cases(300); ++i) {
    auto [m, t] = ra_case(run, i);
    const FoFormula f = ra_to_fo3(t);
    const Relation rel = eval_ra(m, t);
    run.count();
    if ((all_vars(f) & ~(var_bit(Var::kX) | var_bit(Var::kY) | var_bit(Var::kZ))) != 0) {
      run.fail(i, {{"term", to_string(t)}}, "variables within {x,y,z}", to_string(f));
      continue;
    }
    for (Node a = 0; a < m.size(); ++a) {
      for (Node b = 0; b < m.size(); ++b) {
        const bool fo_value = eval_fo(m, {{Var::kX, a}, {Var::kY, b}}, f);
        if (fo_value != rel.contains(a, b)) {
          run.fail(i,
                   {{"structure", to_json(m)}, {"term", to_string(t)}, {"formula", to_string(f)},
                    {"pair", {m.name(a), m.name(b)}}},
                   rel.contains(a, b), fo_value);
        }
      }
    }
  }
}

// Points for the free variables x, y of a GF_bin formula.
Assignment assignment_for(const PointedStructure& m) {
  Assignment a;
  a.set(Var::kX, m.points[0]);
  a.set(Var::kY, m.points.size() > 1 ? m.points[1] : m.points[0]);
  return a;
}

PointedStructure with_tuple(Rng& rng, const Structure& s, std::size_t arity) {
  std::uniform_int_distribution<Node> node(0, static_cast<Node>(s.size() - 1));
  std::vector<Node> points{node(rng)};
  if (arity == 2) {
    // Prefer a guarded pair when one starts at the first point.
    auto succ = s.successors("R", points[0]);
    if (!succ.empty() && std::bernoulli_distribution(0.7)(rng)) {
      points.push_back(succ[std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(rng)]);
    } else {
      points.push_back(node(rng));
    }
  }
  return PointedStructure(s, points);
}

void distance_depth(Runner& run) {
  const StructureSpec spec{1, 7, {"P", "Q"}, {"R", "S"}, 0.15, 0.4};
  for (std::size_t i = 0; i < run.cases(200); ++i) {
    Rng rng = run.rng(i);
    const std::size_t arity = 1 + std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    const Structure s = run.structure(i, rng, spec).structure;
    const PointedStructure m = with_tuple(rng, s, arity);
    std::vector<Var> free{Var::kX};
    if (arity == 2) free.push_back(Var::kY);
    const FoFormula f = random_gf_bin(rng, 2, free, {"P", "Q"}, {"R", "S"}, 10);
    const PointedStructure cut = cut_guarded(m, depth_gf(f));
    const bool full = eval_fo(m.structure, assignment_for(m), f);
    const bool local = eval_fo(cut.structure, assignment_for(cut), f);
    run.count();
    if (!is_gf_bin(f) || full != local) {
      run.fail(i, {{"structure", to_json(m)}, {"formula", to_string(f)}, {"gf_bin", is_gf_bin(f)}}, full, local);
    }
  }
}

void gf_unravel(Runner& run) {
  const StructureSpec spec{1, 5, {"P", "Q"}, {"R"}, 0.25, 0.4};
  constexpr std::size_t kDepth = 3;
  constexpr std::size_t kFormulasPerStructure = 5;
  for (std::size_t i = 0; i < run.cases(100); ++i) {
    Rng rng = run.rng(i);
    const std::size_t arity = 1 + std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    const PointedStructure m = with_tuple(rng, run.structure(i, rng, spec).structure, arity);
    const GuardedUnraveling u = gf_unravel_bin_with_paths(m, kDepth);
    const auto dist = guarded_distances(u.model.structure, u.model.points);
    run.count();
    for (Node v = 0; v < u.model.structure.size(); ++v) {
      if (!dist[v] || *dist[v] + 1 != u.path_length[v]) {
        run.fail(i, {{"structure", to_json(m)}, {"node", u.model.structure.name(v)}}, u.path_length[v] - 1,
                 dist[v] ? json(*dist[v]) : json("unreachable"));
      }
    }
    std::vector<Var> free{Var::kX};
    if (arity == 2) free.push_back(Var::kY);
    for (std::size_t k = 0; k < kFormulasPerStructure; ++k) {
      const FoFormula f = random_gf_bin(rng, 2, free, {"P", "Q"}, {"R"}, 10);
      const bool source = eval_fo(m.structure, assignment_for(m), f);
      const bool unraveled = eval_fo(u.model.structure, assignment_for(u.model), f);
      run.count();
      if (source != unraveled) {
        run.fail(i, {{"structure", to_json(m)}, {"formula", to_string(f)}}, source, unraveled);
      }
    }
  }
}

void reduction_equisat(Runner& run) {
  const ModalSpec fspec{2, 10, {"p", "q"}, 0, true};
  for (std::size_t i = 0; i < run.cases(150); ++i) {
    Rng rng = run.rng(i);
    const ModalFormula f = random_modal(rng, fspec);
    const SatResult bounded = bounded_model_search(f, SemanticsMode::kQuasi, 4);
    const SatResult reduced = sat_bullet(f);
    run.count();
    if (bounded.satisfiable && !reduced.satisfiable) {
      run.fail(i, {{"formula", to_string(f)}, {"bounded_witness", to_json(*bounded.witness)}}, "sat", "unsat");
      continue;
    }
    for (const SatResult* r : {&bounded, &reduced}) {
      if (r->satisfiable && (!r->witness || !eval_modal(*r->witness, f, SemanticsMode::kQuasi))) {
        run.fail(i, {{"formula", to_string(f)}}, "verified witness", "witness fails");
      }
    }
  }
}

void axioms_k(Runner& run) {
  std::size_t k_frames = 0;
  std::size_t others = 0;
  std::size_t index = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t cells = n * n;
    for (std::uint32_t r = 0; r < (1u << cells); ++r) {
      for (std::uint32_t rb = 0; rb < (1u << cells); ++rb) {
        StructureBuilder b;
        for (std::size_t v = 0; v < n; ++v) b.add_node("w" + std::to_string(v));
        b.declare_binary("R");
        b.declare_binary("Rb");
        for (std::size_t c = 0; c < cells; ++c) {
          if ((r >> c) & 1u) b.add_binary("R", static_cast<Node>(c / n), static_cast<Node>(c % n));
          if ((rb >> c) & 1u) b.add_binary("Rb", static_cast<Node>(c / n), static_cast<Node>(c % n));
        }
        const Structure frame = b.build();
        const bool in_k = is_frame_K(frame);
        const bool valid = frame_axioms_valid_on_K(frame, 3);
        (in_k ? k_frames : others) += 1;
        run.count();
        ++index;
        if (in_k != valid) run.fail(index, {{"frame", to_json(frame)}}, in_k, valid);
      }
    }
  }
  if (k_frames == 0 || others == 0) run.fail(0, "frame enumeration", "both classes present", "one class empty");
}

Structure linear_order(std::size_t n) {
  StructureBuilder b;
  for (std::size_t v = 0; v < n; ++v) b.add_node("l" + std::to_string(v));
  b.declare_binary("R");
  for (Node a = 0; a < n; ++a) {
    for (Node c = a + 1; c < n; ++c) b.add_binary("R", a, c);
  }
  return b.build();
}

// Same facts under a shuffled domain order and fresh names.
Structure permuted(Rng& rng, const Structure& m) {
  std::vector<Node> perm(m.size());
  for (Node v = 0; v < m.size(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  StructureBuilder b;
  for (Node v = 0; v < m.size(); ++v) b.add_node("v" + std::to_string(v));
  for (const auto& [name, rel] : m.unary_relations()) {
    b.declare_unary(name);
    for (Node v : rel.nodes) b.add_unary(name, perm[v]);
  }
  for (const auto& [name, rel] : m.binary_relations()) {
    b.declare_binary(name);
    for (auto [x, y] : rel.pairs) b.add_binary(name, perm[x], perm[y]);
  }
  return b.build();
}

// One R-edge toggled.
Structure flipped(Rng& rng, const Structure& m) {
  std::uniform_int_distribution<Node> node(0, static_cast<Node>(m.size() - 1));
  const Node a = node(rng);
  const Node c = node(rng);
  StructureBuilder b;
  for (Node v = 0; v < m.size(); ++v) b.add_node(m.name(v));
  for (const auto& [name, rel] : m.unary_relations()) {
    b.declare_unary(name);
    for (Node v : rel.nodes) b.add_unary(name, v);
  }
  b.declare_binary("R");
  for (const auto& [name, rel] : m.binary_relations()) {
    b.declare_binary(name);
    for (auto [x, y] : rel.pairs) {
      if (!(name == "R" && x == a && y == c)) b.add_binary(name, x, y);
    }
  }
  if (!m.holds("R", a, c)) b.add_binary("R", a, c);
  return b.build();
}

void pebble_vs_iso(Runner& run) {
  const std::size_t n_cases = run.cases(100);
  const StructureSpec small{2, 5, {"p"}, {"R"}, 0.3, 0.3};
  for (std::size_t i = 0; i < n_cases; ++i) {
    Rng rng = run.rng(i);
    const Structure m = random_structure(rng, small);
    const Structure n = std::bernoulli_distribution(0.5)(rng) ? permuted(rng, m) : random_structure(rng, small);
    bool previous = true;
    json values = json::array();
    bool antitone = true;
    for (std::size_t k = 1; k <= 3; ++k) {
      const bool eq = pebble_equiv(m, n, k).equivalent;
      values.push_back(eq);
      if (eq && !previous) antitone = false;
      previous = eq;
    }
    const bool iso = isomorphic(m, n);
    run.count();
    if (!antitone || (iso && !previous)) {
      run.fail(i, {{"left", to_json(m)}, {"right", to_json(n)}, {"check", "antitone"}},
               {{"isomorphic", iso}, {"antitone", true}}, {{"by_k", values}});
    }
  }
  const StructureSpec sized{1, 6, {"p"}, {"R"}, 0.3, 0.3};
  for (std::size_t i = 0; i < n_cases; ++i) {
    Rng rng = run.rng(n_cases + i);
    const Structure m = random_structure(rng, sized);
    const Structure n = std::bernoulli_distribution(0.5)(rng) ? permuted(rng, m) : flipped(rng, permuted(rng, m));
    const bool iso = isomorphic(m, n);
    const bool eq = pebble_equiv(m, n, m.size()).equivalent;
    run.count();
    if (iso != eq) {
      run.fail(n_cases + i, {{"left", to_json(m)}, {"right", to_json(n)}, {"k", m.size()}}, iso, eq);
    }
  }
  const Structure lin3 = linear_order(3);
  const Structure lin4 = linear_order(4);
  const bool eq = pebble_equiv(lin3, lin4, 3).equivalent;
  run.count();
  if (eq) run.fail(2 * n_cases, {{"left", to_json(lin3)}, {"right", to_json(lin4)}, {"k", 3}}, false, true);
}

using SuiteFn = void (*)(Runner&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"unravel-invariance", unravel_invariance},
      {"bisim-invariance", bisim_invariance},
      {"char-formula", char_formula},
      {"ra-relativize", ra_relativize_suite},
      {"ra2fo", ra2fo_suite},
      {"distance-depth", distance_depth},
      {"gf-unravel", gf_unravel},
      {"reduction-equisat", reduction_equisat},
      {"axioms-K", axioms_k},
      {"pebble-vs-iso", pebble_vs_iso},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckReport run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [suite, fn] : suites()) {
    if (suite != name) continue;
    CheckReport report;
    report.suite = name;
    Runner runner(options, report);
    const auto start = std::chrono::steady_clock::now();
    fn(runner);
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace logicwb::harness
