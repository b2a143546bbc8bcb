#include <gtest/gtest.h>

#include "harness/generators.h"
#include "logicwb/decision.h"
#include "logicwb/error.h"
#include "logicwb/parse.h"
#include "logicwb/semantics.h"
#include "logicwb/syntax.h"
#include "test_util.h"

namespace logicwb {
namespace {

using testing::at;
using testing::S;

// Any pointed model with at most max_nodes nodes over the formula's letters.
bool brute_sat(const ModalFormula& f, std::size_t max_nodes) {
  const auto letters = vocabulary_of(f).unary;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    const std::size_t edge_bits = n * n;
    const std::size_t label_bits = n * letters.size();
    for (std::uint64_t e = 0; e < (1ull << edge_bits); ++e) {
      for (std::uint64_t l = 0; l < (1ull << label_bits); ++l) {
        StructureBuilder b;
        for (std::size_t v = 0; v < n; ++v) b.add_node("v" + std::to_string(v));
        b.declare_binary("R");
        for (std::size_t c = 0; c < edge_bits; ++c)
          if ((e >> c) & 1) b.add_binary("R", static_cast<Node>(c / n), static_cast<Node>(c % n));
        std::size_t bit = 0;
        for (const auto& p : letters) {
          b.declare_unary(p);
          for (Node v = 0; v < n; ++v, ++bit)
            if ((l >> bit) & 1) b.add_unary(p, v);
        }
        if (eval_modal(PointedStructure(b.build(), Node{0}), f)) return true;
      }
    }
  }
  return false;
}

TEST(SatBasicModal, Examples) {
  EXPECT_FALSE(sat_basic_modal(parse_modal("p & ~p")).satisfiable);
  EXPECT_FALSE(sat_basic_modal(parse_modal("<>p & []~p")).satisfiable);
  SatResult r = sat_basic_modal(parse_modal("<>p & <>~p & [](q -> p)"));
  ASSERT_TRUE(r.satisfiable);
  EXPECT_EQ(r.witness->structure.size(), 3u);
  EXPECT_TRUE(eval_modal(*r.witness, parse_modal("<>p & <>~p & [](q -> p)")));
  EXPECT_THROW(sat_basic_modal(parse_modal("*p")), PreconditionError);
}

TEST(SatBasicModal, TrueDisjunctsTerminate) {
  EXPECT_TRUE(sat_basic_modal(parse_modal("(p | true) & <>(q | true)")).satisfiable);
  EXPECT_FALSE(sat_basic_modal(parse_modal("(p | true) & false")).satisfiable);
}

TEST(SatBasicModal, AgreesWithSmallModelEnumeration) {
  // Depth <= 1 formulas over one letter have small models when satisfiable.
  for (std::uint64_t i = 0; i < 120; ++i) {
    auto rng = harness::case_rng(71, i);
    ModalFormula f = harness::random_modal(rng, {1, 10, {"p"}, 0, false});
    SatResult r = sat_basic_modal(f);
    const bool brute = brute_sat(f, 3);
    EXPECT_EQ(r.satisfiable, brute) << to_string(f);
    if (r.satisfiable) EXPECT_TRUE(eval_modal(*r.witness, f));
  }
}

TEST(SatBasicModal, WitnessesModelCheck) {
  std::size_t unsat = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = harness::case_rng(73, i);
    ModalFormula f = harness::random_modal(rng, {3, 16, {"p", "q"}, 0, false});
    SatResult r = sat_basic_modal(f);
    if (r.satisfiable) {
      EXPECT_TRUE(eval_modal(*r.witness, f));
    } else {
      ++unsat;
      EXPECT_FALSE(bounded_model_search(f, SemanticsMode::kIntended, 3).satisfiable) << to_string(f);
    }
  }
  EXPECT_GT(unsat, 0u);
}

TEST(ReduceBullet, BulletFree) {
  ModalFormula f = parse_modal("p");
  ModalFormula g = reduce_bullet(f);
  const std::string r = fresh_letter(f);
  EXPECT_EQ(g, ml::conj(ml::prop("p"), ml::implies(ml::conj(ml::prop(r), ml::prop("p")), ml::dia(ml::prop("p")))));
}

TEST(ReduceBullet, TranslatesBulletAndUsesFreshLetter) {
  ModalFormula f = parse_modal("*p");
  ModalFormula g = reduce_bullet(f);
  const std::string r = fresh_letter(f);
  EXPECT_FALSE(vocabulary_of(f).unary.count(r));
  EXPECT_TRUE(vocabulary_of(g).unary.count(r));
  EXPECT_TRUE(subformulas(g).count(ml::dia(ml::conj(ml::prop(r), ml::prop("p")))));
  EXPECT_TRUE(is_basic_modal(g));
  EXPECT_NE(fresh_letter(parse_modal("_r & p")), "_r");
}

TEST(SatBullet, Examples) {
  EXPECT_FALSE(sat_bullet(parse_modal("*p & ~<>p")).satisfiable);
  EXPECT_FALSE(sat_bullet(parse_modal("p & ~p")).satisfiable);
  SatResult r = sat_bullet(parse_modal("*p"));
  ASSERT_TRUE(r.satisfiable);
  EXPECT_TRUE(is_frame_K(r.witness->structure));
  EXPECT_TRUE(eval_modal(*r.witness, parse_modal("*p"), SemanticsMode::kQuasi));
  Structure expected = S(R"({"domain":["a","b"],"unary":{"p":["b"]},"binary":{"R":[["a","b"],["b","b"]],"Rb":[["a","b"]]}})");
  EXPECT_TRUE(eval_modal(at(expected, "a"), parse_modal("*p"), SemanticsMode::kQuasi));
}

TEST(BoundedModelSearch, Examples) {
  EXPECT_TRUE(bounded_model_search(parse_modal("<>p"), SemanticsMode::kIntended, 2).satisfiable);
  SatResult quasi = bounded_model_search(parse_modal("*p"), SemanticsMode::kQuasi, 2);
  ASSERT_TRUE(quasi.satisfiable);
  EXPECT_LE(quasi.witness->structure.size(), 2u);
  EXPECT_TRUE(eval_modal(*quasi.witness, parse_modal("*p"), SemanticsMode::kQuasi));
  EXPECT_FALSE(bounded_model_search(parse_modal("*p"), SemanticsMode::kIntended, 5).satisfiable);
  EXPECT_THROW(bounded_model_search(parse_modal("p"), SemanticsMode::kIntended, 6), BudgetError);
}

TEST(BoundedModelSearch, AgreesWithEnumeration) {
  for (std::uint64_t i = 0; i < 80; ++i) {
    auto rng = harness::case_rng(79, i);
    ModalFormula f = harness::random_modal(rng, {2, 10, {"p"}, 2, false});
    SatResult r = bounded_model_search(f, SemanticsMode::kIntended, 2);
    EXPECT_EQ(r.satisfiable, brute_sat(f, 2)) << to_string(f);
    if (r.satisfiable) EXPECT_TRUE(eval_modal(*r.witness, f));
  }
}

TEST(FrameAxioms, Examples) {
  EXPECT_TRUE(frame_axioms_valid_on_K(S(R"({"domain":["a","b"],"binary":{"R":[["a","b"],["b","b"]],"Rb":[["a","b"]]}})"), 4));
  EXPECT_FALSE(frame_axioms_valid_on_K(S(R"({"domain":["a","b"],"binary":{"R":[["a","b"]],"Rb":[["a","b"]]}})"), 4));
  EXPECT_TRUE(frame_axioms_valid_on_K(S(R"({"domain":["a","b"],"binary":{"R":[["a","b"]]}})"), 4));
  EXPECT_THROW(frame_axioms_valid_on_K(S(R"({"domain":["a","b","c"]})"), 2), BudgetError);
}

TEST(FrameAxioms, EveryFourNodeKFrameSampled) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = harness::case_rng(83, i);
    Structure r = harness::random_structure(rng, {4, 4, {}, {"R"}, 0.4, 0.0});
    StructureBuilder b;
    for (Node v = 0; v < 4; ++v) b.add_node(r.name(v));
    b.declare_binary("Rb");
    for (auto [x, y] : r.binary("R")->pairs) {
      b.add_binary("R", x, y);
      if (r.holds("R", y, y) && ((x * 4 + y + i) % 3 == 0)) b.add_binary("Rb", x, y);
    }
    Structure k = b.build();
    ASSERT_TRUE(is_frame_K(k));
    EXPECT_TRUE(frame_axioms_valid_on_K(k, 4));
  }
}

}  // namespace
}  // namespace logicwb
