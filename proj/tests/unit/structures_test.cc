#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <numeric>

#include "harness/generators.h"
#include "logicwb/error.h"
#include "test_util.h"

namespace logicwb {
namespace {

using testing::at;
using testing::domain_set;
using testing::S;

const char* kChain3 = R"({"domain":["a","b","c"],"unary":{"p":["c"]},"binary":{"R":[["a","b"],["b","c"]]}})";
const char* kCycle = R"({"domain":["a","b"],"binary":{"R":[["a","b"],["b","a"]]}})";

TEST(LoadStructure, MinimalModel) {
  Structure m = S(R"({"domain":["w0"],"unary":{},"binary":{}})");
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.name(0), "w0");
}

TEST(LoadStructure, UndeclaredIdIsRejected) {
  EXPECT_THROW(S(R"({"domain":["a"],"unary":{"p":["b"]},"binary":{}})"), StructureError);
  EXPECT_THROW(S(R"({"domain":["a"],"binary":{"R":[["a","z"]]}})"), StructureError);
}

TEST(LoadStructure, Malformed) {
  EXPECT_THROW(S("{"), StructureError);
  EXPECT_THROW(S(R"({"domain":[]})"), StructureError);
  EXPECT_THROW(S(R"({"domain":["a","a"]})"), StructureError);
  EXPECT_THROW(S(R"({"domain":["a"],"unary":{"p":["a"]},"binary":{"p":[["a","a"]]}})"), StructureError);
  EXPECT_THROW(S(R"({"domain":["a"],"binary":{"R":[["a"]]}})"), StructureError);
}

TEST(LoadStructure, TwoNodeChain) {
  Structure m = S(R"({"domain":["a","b"],"unary":{"p":["a"]},"binary":{"R":[["a","b"]]}})");
  EXPECT_TRUE(m.holds("p", m.node("a")));
  EXPECT_FALSE(m.holds("p", m.node("b")));
  EXPECT_TRUE(m.holds("R", m.node("a"), m.node("b")));
  EXPECT_FALSE(m.holds("R", m.node("b"), m.node("a")));
  EXPECT_FALSE(m.holds("S", 0, 0));
}

TEST(StructureIo, DumpIsStableAndRoundTrips) {
  Structure m = S(kChain3);
  const std::string text = dump_structure(m);
  EXPECT_EQ(dump_structure(S(text)), text);
  EXPECT_EQ(S(text), m);
  PointedStructure pm = at(m, "b");
  EXPECT_EQ(load_pointed_structure(dump_structure(pm)), pm);
}

// Breadth-first reachability written against the public accessors only.
std::set<std::string> reachable_names(const Structure& m, Node from) {
  std::set<Node> seen{from};
  std::deque<Node> queue{from};
  while (!queue.empty()) {
    Node v = queue.front();
    queue.pop_front();
    for (Node w = 0; w < m.size(); ++w) {
      if (m.holds("R", v, w) && seen.insert(w).second) queue.push_back(w);
    }
  }
  std::set<std::string> out;
  for (Node v : seen) out.insert(m.name(v));
  return out;
}

TEST(GeneratedSubmodel, Examples) {
  Structure two = S(R"({"domain":["a","b"]})");
  EXPECT_EQ(domain_set(generated_submodel(at(two, "a")).structure), (std::set<std::string>{"a"}));
  Structure cycle = S(kCycle);
  EXPECT_EQ(generated_submodel(at(cycle, "a")).structure, cycle);
  PointedStructure g = generated_submodel(at(S(kChain3), "b"));
  EXPECT_EQ(domain_set(g.structure), (std::set<std::string>{"b", "c"}));
  EXPECT_TRUE(g.structure.holds("p", g.structure.node("c")));
  EXPECT_EQ(g.structure.name(g.point()), "b");
}

TEST(GeneratedSubmodel, MatchesBfsOracle) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = harness::case_rng(7, i);
    PointedStructure m = harness::random_pointed(rng, {1, 7, {"p"}, {"R"}, 0.2, 0.3});
    PointedStructure g = generated_submodel(m);
    EXPECT_EQ(domain_set(g.structure), reachable_names(m.structure, m.point()));
  }
}

TEST(CutDepth, Examples) {
  Structure chain = S(kChain3);
  EXPECT_EQ(domain_set(cut_depth(at(chain, "a"), 1).structure), (std::set<std::string>{"a", "b"}));
  Structure cycle = S(kCycle);
  EXPECT_EQ(cut_depth(at(cycle, "a"), 5).structure, cycle);

  Structure loop = S(R"({"domain":["w","v"],"unary":{"p":["w"]},"binary":{"R":[["w","w"],["w","v"]]}})");
  PointedStructure zero = cut_depth(at(loop, "w"), 0);
  ASSERT_EQ(zero.structure.size(), 1u);
  EXPECT_TRUE(zero.structure.holds("p", 0));
  EXPECT_TRUE(zero.structure.holds("R", 0, 0));
  PointedStructure no_loop = cut_depth(at(chain, "c"), 0);
  EXPECT_TRUE(no_loop.structure.holds("p", 0));
  EXPECT_FALSE(no_loop.structure.holds("R", 0, 0));
}

TEST(Restrict, Examples) {
  Structure a = restrict(S(R"({"domain":["a","b"],"unary":{"p":["a"]},"binary":{"R":[["a","b"]]}})"), "p");
  EXPECT_EQ(domain_set(a), (std::set<std::string>{"a"}));
  EXPECT_TRUE(a.binary("R") == nullptr || a.binary("R")->empty());

  Structure everywhere = S(R"({"domain":["a","b"],"unary":{"p":["a","b"]},"binary":{"R":[["a","b"]]}})");
  EXPECT_EQ(restrict(everywhere, "p"), everywhere);

  Structure c = restrict(
      S(R"({"domain":["a","b","c"],"unary":{"p":["a","c"]},"binary":{"R":[["a","b"],["b","c"],["a","c"]]}})"), "p");
  EXPECT_EQ(domain_set(c), (std::set<std::string>{"a", "c"}));
  ASSERT_NE(c.binary("R"), nullptr);
  ASSERT_EQ(c.binary("R")->pairs.size(), 1u);
  EXPECT_TRUE(c.holds("R", c.node("a"), c.node("c")));
}

TEST(Restrict, EmptyPredicateIsAnError) {
  EXPECT_THROW(restrict(S(kCycle), "p"), PreconditionError);
}

TEST(IsTree, Examples) {
  EXPECT_TRUE(is_tree(at(S(kChain3), "a")));
  EXPECT_FALSE(is_tree(at(S(kCycle), "a")));
  Structure dag = S(R"({"domain":["a","b","c"],"binary":{"R":[["a","b"],["a","c"],["b","c"]]}})");
  EXPECT_FALSE(is_tree(at(dag, "a")));
  EXPECT_FALSE(is_tree(at(S(kChain3), "b")));
}

TEST(IsFrameK, Examples) {
  EXPECT_TRUE(is_frame_K(S(R"({"domain":["a","b"],"binary":{"R":[["a","b"],["b","b"]],"Rb":[["a","b"]]}})")));
  EXPECT_FALSE(is_frame_K(S(R"({"domain":["a","b"],"binary":{"R":[["a","b"]],"Rb":[["a","b"]]}})")));
  EXPECT_TRUE(is_frame_K(S(kCycle)));
  EXPECT_TRUE(is_frame_K(S(R"({"domain":["a","b"],"binary":{"R":[["a","b"]],"Rb":[]}})")));
}

TEST(Isomorphic, Examples) {
  Structure chain = S(kChain3);
  EXPECT_TRUE(isomorphic(chain, chain));
  EXPECT_FALSE(isomorphic(S(R"({"domain":["a"],"unary":{"p":["a"]}})"), S(R"({"domain":["a"]})")));
  EXPECT_TRUE(isomorphic(S(R"({"domain":["a","b"],"binary":{"R":[["a","b"]]}})"),
                         S(R"({"domain":["c","d"],"binary":{"R":[["c","d"]]}})")));
}

// Tries every bijection.
bool brute_isomorphic(const Structure& m, const Structure& n) {
  if (m.size() != n.size()) return false;
  std::vector<Node> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto names = [](const Structure& s) {
    std::set<std::string> out;
    for (const auto& [k, r] : s.unary_relations()) if (!r.empty()) out.insert("u:" + k);
    for (const auto& [k, r] : s.binary_relations()) if (!r.empty()) out.insert("b:" + k);
    return out;
  };
  if (names(m) != names(n)) return false;
  do {
    bool ok = true;
    for (const auto& [k, r] : m.unary_relations()) {
      for (Node v = 0; v < m.size() && ok; ++v) ok = r.contains(v) == n.holds(k, perm[v]);
    }
    for (const auto& [k, r] : m.binary_relations()) {
      for (Node a = 0; a < m.size() && ok; ++a) {
        for (Node b = 0; b < m.size() && ok; ++b) ok = r.contains(a, b) == n.holds(k, perm[a], perm[b]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Structure shuffled(harness::Rng& rng, const Structure& m) {
  std::vector<Node> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  StructureBuilder b;
  for (Node v = 0; v < m.size(); ++v) b.add_node("n" + std::to_string(v));
  for (const auto& [k, r] : m.unary_relations()) {
    b.declare_unary(k);
    for (Node v : r.nodes) b.add_unary(k, perm[v]);
  }
  for (const auto& [k, r] : m.binary_relations()) {
    b.declare_binary(k);
    for (auto [x, y] : r.pairs) b.add_binary(k, perm[x], perm[y]);
  }
  return b.build();
}

TEST(Isomorphic, MatchesPermutationOracle) {
  std::size_t positives = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = harness::case_rng(11, i);
    harness::StructureSpec spec{3, 5, {"p"}, {"R"}, 0.3, 0.3};
    Structure m = harness::random_structure(rng, spec);
    Structure n = i % 3 == 0 ? shuffled(rng, m) : harness::random_structure(rng, spec);
    const bool expected = brute_isomorphic(m, n);
    positives += expected;
    EXPECT_EQ(isomorphic(m, n), expected) << dump_structure(m) << dump_structure(n);
    EXPECT_TRUE(isomorphic(m, m));
  }
  EXPECT_GT(positives, 0u);
}

TEST(Builder, RejectsDuplicateNodesAndArityClash) {
  StructureBuilder b;
  b.add_node("a");
  EXPECT_THROW(b.add_node("a"), StructureError);
  b.add_unary("p", "a");
  b.add_binary("p", "a", "a");
  EXPECT_THROW(b.build(), StructureError);
}

TEST(Induced, KeepsNamesAndFacts) {
  Structure m = S(kChain3);
  std::vector<Node> keep{m.node("b"), m.node("c")};
  Structure sub = induced(m, keep);
  EXPECT_EQ(domain_set(sub), (std::set<std::string>{"b", "c"}));
  EXPECT_TRUE(sub.holds("R", sub.node("b"), sub.node("c")));
  EXPECT_THROW(induced(m, std::vector<Node>{}), StructureError);
}

}  // namespace
}  // namespace logicwb
