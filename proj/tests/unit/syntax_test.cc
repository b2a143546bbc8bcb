#include <gtest/gtest.h>

#include "harness/generators.h"
#include "logicwb/error.h"
#include "logicwb/parse.h"
#include "logicwb/syntax.h"

namespace logicwb {
namespace {

using ml::prop;

TEST(Parse, ModalExamples) {
  EXPECT_EQ(parse_modal("<> p"), ml::dia(prop("p")));
  EXPECT_EQ(parse_modal("p -> q -> r"), ml::implies(prop("p"), ml::implies(prop("q"), prop("r"))));
  EXPECT_EQ(parse_modal("~p & q | r"), ml::disj(ml::conj(ml::neg(prop("p")), prop("q")), prop("r")));
  EXPECT_EQ(parse_modal("<2>[3]*#<.>[.]p"),
            ml::dia_geq(2, ml::box_geq(3, ml::bullet(ml::bullet_dual(ml::dia_b(ml::box_b(prop("p"))))))));
  EXPECT_EQ(parse_modal("[](true | false)"), ml::box(ml::disj(ml::top(), ml::bot())));
}

TEST(Parse, RaExamples) {
  EXPECT_EQ(parse_ra("(R ; S)~"), ra::conv(ra::comp(ra::atom("R"), ra::atom("S"))));
  EXPECT_EQ(parse_ra("R & S ; T~"), ra::meet(ra::atom("R"), ra::comp(ra::atom("S"), ra::conv(ra::atom("T")))));
  EXPECT_EQ(parse_ra("R - S - T"), ra::diff(ra::diff(ra::atom("R"), ra::atom("S")), ra::atom("T")));
  EXPECT_EQ(parse_ra("id ; top"), ra::comp(ra::id(), ra::top()));
}

TEST(Parse, FoExamples) {
  EXPECT_EQ(parse_fo("E y : R(x,y) . P(y)"),
            fo::exists(Var::kY, GuardAtom{"R", Var::kX, Var::kY}, fo::un("P", Var::kY)));
  EXPECT_EQ(parse_fo("A z . x = z | P(z)"),
            fo::forall(Var::kZ, std::nullopt, fo::disj(fo::eq(Var::kX, Var::kZ), fo::un("P", Var::kZ))));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_modal("p &"), ParseError);
  EXPECT_THROW(parse_modal("<>"), ParseError);
  EXPECT_THROW(parse_modal("(p"), ParseError);
  EXPECT_THROW(parse_modal("p q"), ParseError);
  EXPECT_THROW(parse_ra("R ;"), ParseError);
  EXPECT_THROW(parse_fo("E w . P(w)"), ParseError);
  EXPECT_THROW(parse_fo("E y : R(x,z) . P(y)"), ParseError);
  try {
    parse_modal("p & & q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Print, RoundTripsRandomFormulas) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = harness::case_rng(3, i);
    ModalFormula f = harness::random_modal(rng, {3, 14, {"p", "q"}, 3, true});
    ASSERT_EQ(parse_modal(to_string(f)), f) << to_string(f);
    RaTerm t = harness::random_ra(rng, 8, {"R", "S"});
    ASSERT_EQ(parse_ra(to_string(t)), t) << to_string(t);
    FoFormula g = harness::random_gf_bin(rng, 2, {Var::kX, Var::kY}, {"P"}, {"R", "S"}, 10);
    ASSERT_EQ(parse_fo(to_string(g)), g) << to_string(g);
  }
}

TEST(Print, RoundTripsCorpusStrings) {
  for (const char* s : {"<>p & [](q -> ~r)", "(p -> q) -> r", "~(p | q)", "<3>(p & *q)", "#p | [.]<.>p"}) {
    EXPECT_EQ(parse_modal(to_string(parse_modal(s))), parse_modal(s)) << s;
  }
  for (const char* s : {"R;S~", "(R & S);T", "R - (S - T)", "(R;S)~ & id"}) {
    EXPECT_EQ(parse_ra(to_string(parse_ra(s))), parse_ra(s)) << s;
  }
  for (const char* s : {"E y : R(x,y) . P(y) & ~Q(x)", "(A y : R(y,x) . P(y)) | x = x",
                        "E y : R(x,y) . E x : R(y,x) . P(x)"}) {
    EXPECT_EQ(parse_fo(to_string(parse_fo(s))), parse_fo(s)) << s;
  }
}

TEST(Print, GradedSurface) {
  EXPECT_EQ(to_string(ml::dia(prop("p")), ModalSurface::kGraded), "<1>p");
  EXPECT_EQ(to_string(ml::box(prop("p")), ModalSurface::kGraded), "[1]p");
}

TEST(Builders, RejectBadNames) {
  EXPECT_THROW(prop("true"), PreconditionError);
  EXPECT_THROW(prop("1p"), PreconditionError);
  EXPECT_THROW(ra::atom("id"), PreconditionError);
  EXPECT_THROW(fo::un("P Q", Var::kX), PreconditionError);
  EXPECT_THROW(fo::exists(Var::kY, GuardAtom{"R", Var::kX, Var::kZ}, fo::un("P", Var::kY)), PreconditionError);
}

TEST(Vocabulary, Examples) {
  EXPECT_EQ(vocabulary_of(parse_modal("<>p & ~q")).unary, (std::set<std::string>{"p", "q"}));
  EXPECT_EQ(vocabulary_of(parse_ra("R;S")).binary, (std::set<std::string>{"R", "S"}));
  EXPECT_EQ(vocabulary_of(ra::top()), Vocabulary{});
  Vocabulary v = vocabulary_of(parse_fo("E y : R(x,y) . P(y)"));
  EXPECT_EQ(v.unary, (std::set<std::string>{"P"}));
  EXPECT_EQ(v.binary, (std::set<std::string>{"R"}));
}

TEST(Rename, Examples) {
  Renaming pq;
  pq.unary = {{"p", "q"}};
  EXPECT_EQ(rename(parse_modal("<>p"), pq), parse_modal("<>q"));
  EXPECT_EQ(rename(parse_modal("<>p & r"), Renaming{}), parse_modal("<>p & r"));
  Renaming swap;
  swap.binary = {{"R", "S"}, {"S", "R"}};
  EXPECT_EQ(rename(parse_ra("R & S~"), swap), parse_ra("S & R~"));
}

TEST(Rename, ArityMismatchIsRejected) {
  Renaming bad;
  bad.binary = {{"p", "R"}};
  EXPECT_THROW(rename(parse_fo("P(x) & p(x)"), bad), PreconditionError);
}

TEST(Rename, BijectionInverts) {
  Renaming rho;
  rho.unary = {{"p", "q"}, {"q", "p"}};
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = harness::case_rng(5, i);
    ModalFormula f = harness::random_modal(rng, {3, 12, {"p", "q"}, 2, true});
    EXPECT_EQ(rename(rename(f, rho), rho), f);
  }
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(parse_modal("<>p"), "p", parse_modal("q & r")), parse_modal("<>(q & r)"));
  EXPECT_EQ(substitute(parse_modal("<>q"), "p", parse_modal("r")), parse_modal("<>q"));
  EXPECT_EQ(substitute(parse_modal("p & <>p"), "p", parse_modal("~p")), parse_modal("~p & <>~p"));
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = harness::case_rng(9, i);
    ModalFormula f = harness::random_modal(rng, {3, 12, {"p", "q"}, 2, true});
    EXPECT_EQ(substitute(f, "p", prop("p")), f);
  }
}

TEST(RelativizeModal, Examples) {
  EXPECT_EQ(relativize_modal(parse_modal("<>q"), "p"), parse_modal("p & <>(p & q)"));
  EXPECT_EQ(relativize_modal(parse_modal("q"), "p"), parse_modal("p & q"));
  EXPECT_EQ(relativize_modal(parse_modal("[]q"), "p"), parse_modal("p & [](p -> q)"));
  EXPECT_EQ(relativize_modal(parse_modal("*q"), "p"), parse_modal("p & *(p & q)"));
}

TEST(RelativizeModal, PreservesVocabularyAndDepth) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = harness::case_rng(13, i);
    ModalFormula f = harness::random_modal(rng, {3, 12, {"q", "r"}, 2, true});
    ModalFormula g = relativize_modal(f, "p");
    auto expected = vocabulary_of(f).unary;
    expected.insert("p");
    EXPECT_EQ(vocabulary_of(g).unary, expected);
    EXPECT_EQ(depth_modal(g), depth_modal(f));
  }
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth_modal(parse_modal("p & q")), 0u);
  EXPECT_EQ(depth_modal(parse_modal("<>*p")), 2u);
  EXPECT_EQ(depth_modal(parse_modal("<>p | [][]q")), 2u);
  EXPECT_EQ(depth_gf(parse_fo("E y : R(x,y) . E x : R(y,x) . P(x)")), 2u);
  EXPECT_EQ(depth_gf(parse_fo("P(x) & R(x,y)")), 0u);
}

TEST(Subformulas, Examples) {
  EXPECT_EQ(subformulas(parse_modal("<>p")), (std::set<ModalFormula>{parse_modal("<>p"), prop("p")}));
  EXPECT_EQ(subformulas(parse_modal("p & p")), (std::set<ModalFormula>{parse_modal("p & p"), prop("p")}));
  EXPECT_EQ(subformulas(parse_modal("*(p | q)")),
            (std::set<ModalFormula>{parse_modal("*(p | q)"), parse_modal("p | q"), prop("p"), prop("q")}));
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = harness::case_rng(17, i);
    ModalFormula f = harness::random_modal(rng, {3, 14, {"p", "q"}, 2, true});
    EXPECT_LE(subformulas(f).size(), f.size());
  }
}

TEST(IsGfBin, Examples) {
  EXPECT_TRUE(is_gf_bin(parse_fo("E y : R(x,y) . P(y)")));
  EXPECT_FALSE(is_gf_bin(parse_fo("E y . y = y & P(y)")));
  EXPECT_FALSE(is_gf_bin(parse_fo("E x . E y : R(x,y) . P(x)")));
  EXPECT_FALSE(is_gf_bin(parse_fo("E y : R(y,y) . P(y)")));
  EXPECT_FALSE(is_gf_bin(parse_fo("E y : R(x,y) . E z : R(y,z) . P(x)")));
  EXPECT_TRUE(is_gf_bin(parse_fo("P(x) & x = y")));
}

TEST(StandardTranslation, BasicModal) {
  EXPECT_EQ(standard_translation(parse_modal("<>p")), parse_fo("E y : R(x,y) . p(y)"));
  EXPECT_EQ(standard_translation(parse_modal("[]<>p")), parse_fo("A y : R(x,y) . E x : R(y,x) . p(x)"));
  EXPECT_THROW(standard_translation(parse_modal("*p")), PreconditionError);
}

}  // namespace
}  // namespace logicwb
