#include <gtest/gtest.h>

#include "harness/generators.h"
#include "logicwb/equivalence.h"
#include "logicwb/error.h"
#include "logicwb/parse.h"
#include "logicwb/semantics.h"
#include "logicwb/syntax.h"
#include "logicwb/transforms.h"
#include "test_util.h"

namespace logicwb {
namespace {

using testing::at;
using testing::domain_set;
using testing::names;
using testing::NamePairs;
using testing::S;

TEST(Unravel, LoopBecomesChain) {
  PointedStructure t = unravel(at(S(R"({"domain":["w"],"unary":{"p":["w"]},"binary":{"R":[["w","w"]]}})"), "w"), 2);
  ASSERT_EQ(t.structure.size(), 3u);
  EXPECT_TRUE(is_tree(t));
  for (Node v = 0; v < 3; ++v) EXPECT_TRUE(t.structure.holds("p", v));
  EXPECT_TRUE(isomorphic(t.structure, S(R"({"domain":["a","b","c"],"unary":{"p":["a","b","c"]},
                                             "binary":{"R":[["a","b"],["b","c"]]}})")));
}

TEST(Unravel, TreeIsFixed) {
  Structure tree = S(R"({"domain":["r","a","b","c"],"unary":{"q":["b"]},"binary":{"R":[["r","a"],["r","b"],["a","c"]]}})");
  EXPECT_TRUE(isomorphic(unravel(at(tree, "r"), 2), at(tree, "r")));
  EXPECT_TRUE(isomorphic(unravel(at(tree, "r"), 5), at(tree, "r")));
}

TEST(Unravel, DepthZero) {
  PointedStructure t = unravel(at(S(R"({"domain":["w","v"],"unary":{"p":["w"]},"binary":{"R":[["w","v"]]}})"), "w"), 0);
  ASSERT_EQ(t.structure.size(), 1u);
  EXPECT_TRUE(t.structure.holds("p", 0));
}

// Counts R-paths of length <= depth from the point.
std::size_t path_count(const Structure& m, Node v, std::size_t depth) {
  if (depth == 0) return 1;
  std::size_t total = 1;
  for (Node w : m.successors("R", v)) total += path_count(m, w, depth - 1);
  return total;
}

TEST(Unravel, NodesArePaths) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = harness::case_rng(51, i);
    PointedStructure m = harness::random_pointed(rng, {1, 5, {"p"}, {"R"}, 0.4, 0.3});
    for (std::size_t d = 0; d <= 3; ++d) {
      PointedStructure t = unravel(m, d);
      EXPECT_TRUE(is_tree(t));
      EXPECT_EQ(t.structure.size(), path_count(m.structure, m.point(), d));
    }
  }
}

TEST(GmlCharFormula, SingleNode) {
  Vocabulary vocab{{"p"}, {}};
  PointedStructure leaf = at(S(R"({"domain":["a"]})"), "a");
  ModalFormula psi = gml_char_formula(leaf, vocab);
  EXPECT_EQ(psi, parse_modal("~p & ~<>true"));
}

TEST(GmlCharFormula, TwoIsomorphicLeaves) {
  Vocabulary vocab{{"p"}, {}};
  PointedStructure t = at(S(R"({"domain":["r","a","b"],"unary":{"p":["a","b"]},"binary":{"R":[["r","a"],["r","b"]]}})"), "r");
  ModalFormula psi = gml_char_formula(t, vocab);
  ModalFormula leaf = gml_char_formula(generated_submodel(at(t.structure, "a")), vocab);
  const auto subs = subformulas(psi);
  EXPECT_TRUE(subs.count(ml::dia_geq(2, leaf)));
  EXPECT_TRUE(subs.count(ml::neg(ml::dia_geq(3, leaf))));
  EXPECT_TRUE(subs.count(ml::neg(ml::dia_geq(3, ml::top()))));
  EXPECT_TRUE(eval_modal(t, psi));
}

TEST(GmlCharFormula, AgreesWithIsomorphismOnRandomTrees) {
  const auto trees = harness::all_trees(5, {"p"});
  Vocabulary vocab{{"p"}, {}};
  for (std::uint64_t i = 0; i < 60; ++i) {
    auto rng = harness::case_rng(53, i);
    std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
    const auto& t = trees[pick(rng)];
    ModalFormula psi = gml_char_formula(t, vocab);
    for (const auto& other : trees) EXPECT_EQ(eval_modal(other, psi), isomorphic(t, other));
  }
}

TEST(GmlCharFormula, Preconditions) {
  Vocabulary vocab{{"p"}, {}};
  EXPECT_THROW(gml_char_formula(at(S(R"({"domain":["a"],"binary":{"R":[["a","a"]]}})"), "a"), vocab),
               PreconditionError);
  EXPECT_THROW(gml_char_formula(at(S(R"({"domain":["a"],"unary":{"q":["a"]}})"), "a"), vocab), PreconditionError);
}

TEST(AddCopies, Examples) {
  PointedStructure one = at(S(R"({"domain":["a"]})"), "a");
  EXPECT_EQ(add_copies(one, 0, one, 0), one);
  PointedStructure fan = add_copies(one, 0, one, 3);
  EXPECT_EQ(fan.structure.size(), 4u);
  EXPECT_EQ(fan.structure.successors("R", fan.point()).size(), 3u);
  EXPECT_TRUE(is_tree(fan));
}

TEST(AddCopies, GradedTruthStableBeyondMaxGrade) {
  const auto trees = harness::all_trees(3, {"p"});
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = harness::case_rng(57, i);
    const unsigned g = 1 + i % 3;
    ModalFormula f = harness::random_modal(rng, {3, 12, {"p"}, g, false});
    const auto& base = trees[i % trees.size()];
    const auto& t = trees[(i * 7) % trees.size()];
    PointedStructure few = add_copies(base, base.point(), t, g);
    PointedStructure many = add_copies(base, base.point(), t, g + 5);
    EXPECT_EQ(eval_modal(few, f), eval_modal(many, f)) << to_string(f);
  }
}

TEST(Subtree, Examples) {
  Structure chain = S(R"({"domain":["r","a","n","c"],"unary":{"p":["a","n"]},
                          "binary":{"R":[["r","a"],["a","n"],["n","c"]]}})");
  PointedStructure s = subtree(at(chain, "n"), "p");
  EXPECT_EQ(domain_set(s.structure), (std::set<std::string>{"a", "n"}));
  EXPECT_EQ(s.structure.name(s.point()), "n");

  Structure all = S(R"({"domain":["r","a"],"unary":{"p":["r","a"]},"binary":{"R":[["r","a"]]}})");
  EXPECT_EQ(subtree(at(all, "r"), "p").structure, all);

  Structure leaf = S(R"({"domain":["r","n"],"unary":{"p":["n"]},"binary":{"R":[["r","n"]]}})");
  EXPECT_EQ(domain_set(subtree(at(leaf, "n"), "p").structure), (std::set<std::string>{"n"}));
  EXPECT_THROW(subtree(at(leaf, "r"), "p"), PreconditionError);
}

TEST(RaRelativize, Example) {
  Structure m = S(R"({"domain":["a","b","c"],"binary":{"R":[["a","b"]],"S":[["a","a"],["c","c"]]}})");
  EXPECT_EQ(names(m, eval_ra(m, ra_relativize(ra::atom("S"), "R"))), (NamePairs{{"a", "a"}}));
}

TEST(RaRelativize, RewritesLeavesOnly) {
  const RaTerm guard = parse_ra("R;(top;R~)");
  EXPECT_EQ(ra_relativize(parse_ra("S & T~"), "R"),
            ra::meet(ra::meet(ra::atom("S"), guard), ra::conv(ra::meet(ra::atom("T"), guard))));
  EXPECT_EQ(ra_relativize(ra::id(), "R"), ra::meet(ra::id(), guard));
}

TEST(RaToFo3, Examples) {
  EXPECT_EQ(ra_to_fo3(ra::atom("R")), parse_fo("R(x,y)"));
  EXPECT_EQ(ra_to_fo3(parse_ra("R;S")), parse_fo("E z . R(x,z) & S(z,y)"));
  const FoFormula f = ra_to_fo3(parse_ra("R;(S;T)"));
  EXPECT_EQ(all_vars(f) & ~(var_bit(Var::kX) | var_bit(Var::kY) | var_bit(Var::kZ)), 0u);
  EXPECT_EQ(parse_fo(to_string(f)), f);
  EXPECT_EQ(free_vars(ra_to_fo3(ra::top())) & ~(var_bit(Var::kX) | var_bit(Var::kY)), 0u);
}

TEST(GuardedDist, Examples) {
  Structure m = S(R"({"domain":["s","u","t"],"binary":{"R":[["s","u"]]}})");
  std::vector<Node> from{m.node("s")};
  EXPECT_EQ(guarded_dist(m, from, m.node("u")), 1u);
  EXPECT_EQ(guarded_dist(m, from, m.node("s")), 0u);
  EXPECT_FALSE(guarded_dist(m, from, m.node("t")).has_value());
  Structure back = S(R"({"domain":["s","u","v"],"binary":{"R":[["u","s"],["v","u"]]}})");
  std::vector<Node> from_s{back.node("s")};
  EXPECT_EQ(guarded_dist(back, from_s, back.node("v")), 2u);
}

TEST(CutGuarded, Examples) {
  Structure m = S(R"({"domain":["a","b","c","d"],"unary":{"P":["c"]},"binary":{"R":[["a","b"],["b","c"]]}})");
  PointedStructure zero = cut_guarded(at(m, "a"), 0);
  EXPECT_EQ(domain_set(zero.structure), (std::set<std::string>{"a"}));
  PointedStructure all = cut_guarded(at(m, "a"), 10);
  EXPECT_EQ(domain_set(all.structure), (std::set<std::string>{"a", "b", "c"}));
  PointedStructure pair = cut_guarded(PointedStructure(m, {m.node("a"), m.node("d")}), 0);
  EXPECT_EQ(domain_set(pair.structure), (std::set<std::string>{"a", "d"}));
}

TEST(CutGuarded, DistanceDepthOnRandomFormulas) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = harness::case_rng(59, i);
    Structure s = harness::random_structure(rng, {1, 6, {"P"}, {"R", "S"}, 0.2, 0.4});
    PointedStructure m(s, Node{0});
    FoFormula f = harness::random_gf_bin(rng, 2, {Var::kX}, {"P"}, {"R", "S"}, 10);
    PointedStructure cut = cut_guarded(m, depth_gf(f));
    EXPECT_EQ(eval_fo(s, {{Var::kX, 0}}, f), eval_fo(cut.structure, {{Var::kX, cut.point()}}, f)) << to_string(f);
  }
}

TEST(GfUnravel, TreeInputIsGuardedBisimilar) {
  Structure tree = S(R"({"domain":["r","a","b"],"unary":{"P":["b"]},"binary":{"R":[["r","a"],["a","b"]]}})");
  PointedStructure u = gf_unravel_bin(at(tree, "r"), 3);
  EXPECT_TRUE(gf_bin_bisimilar(u, at(tree, "r")).equivalent);
  EXPECT_EQ(u.structure.size(), 3u);
}

TEST(GfUnravel, PathLengthIsDistance) {
  Structure tri = S(R"({"domain":["a","b","c"],"binary":{"R":[["a","b"],["b","c"],["c","a"]]}})");
  GuardedUnraveling u = gf_unravel_bin_with_paths(at(tri, "a"), 3);
  const auto dist = guarded_distances(u.model.structure, u.model.points);
  ASSERT_GT(u.model.structure.size(), 3u);
  for (Node v = 0; v < u.model.structure.size(); ++v) {
    ASSERT_TRUE(dist[v].has_value());
    EXPECT_EQ(*dist[v] + 1, u.path_length[v]);
  }
}

TEST(GfUnravel, LoopHasNoCoGuardedNeighbour) {
  GuardedUnraveling u = gf_unravel_bin_with_paths(at(S(R"({"domain":["a"],"binary":{"R":[["a","a"]]}})"), "a"), 2);
  ASSERT_EQ(u.model.structure.size(), 1u);
  EXPECT_TRUE(u.model.structure.holds("R", 0, 0));
  EXPECT_EQ(u.path_length[0], 1u);
}

TEST(GfUnravel, PreservesShallowFormulas) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    auto rng = harness::case_rng(61, i);
    Structure s = harness::random_structure(rng, {2, 5, {"P"}, {"R"}, 0.3, 0.4});
    PointedStructure m(s, std::vector<Node>{0, 1});
    PointedStructure u = gf_unravel_bin(m, 3);
    FoFormula f = harness::random_gf_bin(rng, 2, {Var::kX, Var::kY}, {"P"}, {"R"}, 10);
    EXPECT_EQ(eval_fo(s, {{Var::kX, 0}, {Var::kY, 1}}, f),
              eval_fo(u.structure, {{Var::kX, u.points[0]}, {Var::kY, u.points[1]}}, f))
        << to_string(f);
  }
}

}  // namespace
}  // namespace logicwb
