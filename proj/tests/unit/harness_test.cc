#include <gtest/gtest.h>

#include "harness/generators.h"
#include "harness/suites.h"
#include "logicwb/equivalence.h"
#include "logicwb/parse.h"
#include "logicwb/structure_io.h"
#include "logicwb/syntax.h"

namespace logicwb::harness {
namespace {

TEST(Generators, ReplayablePerCase) {
  auto a = case_rng(5, 17);
  auto b = case_rng(5, 17);
  auto c = case_rng(5, 18);
  EXPECT_EQ(a(), b());
  EXPECT_NE(case_rng(5, 17)(), c());
  auto r1 = case_rng(1, 2);
  auto r2 = case_rng(1, 2);
  EXPECT_EQ(dump_structure(random_pointed(r1, {})), dump_structure(random_pointed(r2, {})));
}

TEST(Generators, ModalRespectsSpec) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = case_rng(2, i);
    ModalFormula f = random_modal(rng, {2, 10, {"p", "q"}, 3, false});
    EXPECT_LE(depth_modal(f), 2u);
    EXPECT_LE(features_of(f).max_grade, 3u);
    EXPECT_FALSE(features_of(f).bullets);
    for (const auto& p : vocabulary_of(f).unary) EXPECT_TRUE(p == "p" || p == "q");
  }
}

TEST(Generators, GfBinFormulasAreGuarded) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = case_rng(3, i);
    FoFormula f = random_gf_bin(rng, 2, {Var::kX, Var::kY}, {"P"}, {"R"}, 10);
    EXPECT_TRUE(is_gf_bin(f)) << to_string(f);
    EXPECT_LE(depth_gf(f), 2u);
    EXPECT_EQ(free_vars(f) & ~(var_bit(Var::kX) | var_bit(Var::kY)), 0u);
  }
}

// Rooted unordered trees with n nodes and c node colours, by the Euler
// transform of the count sequence.
std::vector<std::uint64_t> tree_counts(std::size_t max_nodes, std::uint64_t colours) {
  std::vector<std::uint64_t> t(max_nodes + 1, 0);
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    // forests[m] = number of multisets of trees with total m nodes, using sizes < n.
    std::vector<std::uint64_t> forest(n, 0);
    forest[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
      // Multiply by (1 - x^k)^{-t[k]}.
      for (std::uint64_t copy = 0; copy < t[k]; ++copy) {
        for (std::size_t m = k; m < n; ++m) forest[m] += forest[m - k];
      }
    }
    t[n] = colours * forest[n - 1];
  }
  return t;
}

TEST(Generators, AllTreesCountsMatchEulerTransform) {
  const auto counts = tree_counts(5, 4);
  std::uint64_t expected = 0;
  for (std::size_t n = 1; n <= 5; ++n) expected += counts[n];
  const auto trees = all_trees(5, {"p", "q"});
  EXPECT_EQ(trees.size(), expected);
  for (std::size_t i = 0; i < trees.size(); i += 97) {
    EXPECT_TRUE(is_tree(trees[i]));
    for (std::size_t j = i + 1; j < trees.size(); j += 89) EXPECT_FALSE(isomorphic(trees[i], trees[j]));
  }
}

TEST(Generators, DuplicateAndQuotientAreBisimilar) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = case_rng(4, i);
    PointedStructure m = random_pointed(rng, {1, 6, {"p"}, {"R"}, 0.3, 0.4});
    PointedStructure d = duplicate_node(rng, m);
    EXPECT_EQ(d.structure.size(), m.structure.size() + 1);
    EXPECT_TRUE(bisimilar(m, d).equivalent);
    PointedStructure q = bisimulation_quotient(d);
    EXPECT_LE(q.structure.size(), m.structure.size());
    EXPECT_TRUE(bisimilar(q, m).equivalent);
  }
}

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(suite_names().size(), 10u);
  EXPECT_TRUE(is_suite("axioms-K"));
  EXPECT_FALSE(is_suite("nope"));
  EXPECT_THROW(run_suite("nope", {}), std::invalid_argument);
}

TEST(Suites, SmallRunsAreDeterministic) {
  SuiteOptions options;
  options.seed = 9;
  options.cases = 20;
  for (const char* name : {"unravel-invariance", "ra2fo", "distance-depth"}) {
    CheckReport a = run_suite(name, options);
    CheckReport b = run_suite(name, options);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(a.cases, b.cases);
    auto ja = a.to_json(), jb = b.to_json();
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    EXPECT_EQ(ja, jb);
  }
}

TEST(Suites, ReportSchema) {
  CheckReport r;
  r.suite = "s";
  r.cases = 2;
  r.failures.push_back({1, 7, "in", true, false});
  auto j = r.to_json();
  EXPECT_EQ(j["suite"], "s");
  EXPECT_EQ(j["cases"], 2);
  EXPECT_EQ(j["failures"][0]["index"], 1);
  EXPECT_EQ(j["failures"][0]["seed"], 7);
  EXPECT_TRUE(j.contains("elapsed_ms"));
  EXPECT_FALSE(r.passed());
}

TEST(Suites, CorpusDrivesStructures) {
  SuiteOptions options;
  options.cases = 5;
  options.corpus.push_back(load_pointed_structure(R"({"domain":["a","b"],"unary":{"p":["b"]},
      "binary":{"R":[["a","b"],["b","a"]]},"points":["a"]})"));
  EXPECT_TRUE(run_suite("unravel-invariance", options).passed());
  EXPECT_TRUE(run_suite("bisim-invariance", options).passed());
}

}  // namespace
}  // namespace logicwb::harness
