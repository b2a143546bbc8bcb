#include "logicwb/parse.h"

#include <charconv>
#include <optional>

#include "lexer.h"
#include "logicwb/error.h"

namespace logicwb {

using detail::Tok;
using detail::TokenStream;

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s[0])) return false;
  for (char c : s) {
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

namespace {

unsigned parse_grade(TokenStream& ts) {
  const auto& tok = ts.expect(Tok::kNat, "for a grade");
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{}) throw ParseError("grade out of range", tok.pos);
  return value;
}

// ---------------------------------------------------------------------------
// Modal

class ModalParser {
 public:
  explicit ModalParser(std::string_view text) : ts_(text) {}

  ModalFormula run() {
    ModalFormula f = implication();
    ts_.expect_end();
    return f;
  }

 private:
  ModalFormula implication() {
    ModalFormula lhs = disjunction();
    if (ts_.accept(Tok::kArrow)) return ml::implies(lhs, implication());
    return lhs;
  }

  ModalFormula disjunction() {
    ModalFormula lhs = conjunction();
    if (ts_.accept(Tok::kBar)) return ml::disj(lhs, disjunction());
    return lhs;
  }

  ModalFormula conjunction() {
    ModalFormula lhs = unary();
    if (ts_.accept(Tok::kAmp)) return ml::conj(lhs, conjunction());
    return lhs;
  }

  ModalFormula unary() {
    if (ts_.accept(Tok::kTilde)) return ml::neg(unary());
    if (ts_.accept(Tok::kDiamond)) return ml::dia(unary());
    if (ts_.accept(Tok::kBox)) return ml::box(unary());
    if (ts_.accept(Tok::kStar)) return ml::bullet(unary());
    if (ts_.accept(Tok::kHash)) return ml::bullet_dual(unary());
    if (ts_.accept(Tok::kDiamondB)) return ml::dia_b(unary());
    if (ts_.accept(Tok::kBoxB)) return ml::box_b(unary());
    if (ts_.accept(Tok::kLAngle)) {
      unsigned k = parse_grade(ts_);
      ts_.expect(Tok::kRAngle, "to close a graded diamond");
      return ml::dia_geq(k, unary());
    }
    if (ts_.accept(Tok::kLBracket)) {
      unsigned k = parse_grade(ts_);
      ts_.expect(Tok::kRBracket, "to close a graded box");
      return ml::box_geq(k, unary());
    }
    return atom();
  }

  ModalFormula atom() {
    if (ts_.accept(Tok::kLParen)) {
      ModalFormula f = implication();
      ts_.expect(Tok::kRParen, "to close '('");
      return f;
    }
    if (ts_.at(Tok::kIdent)) {
      const std::string& name = ts_.next().text;
      if (name == "true") return ml::top();
      if (name == "false") return ml::bot();
      return ml::prop(name);
    }
    ts_.fail("expected a modal formula");
  }

  TokenStream ts_;
};

// ---------------------------------------------------------------------------
// Relation algebra

class RaParser {
 public:
  explicit RaParser(std::string_view text) : ts_(text) {}

  RaTerm run() {
    RaTerm t = term();
    ts_.expect_end();
    return t;
  }

 private:
  RaTerm term() {
    RaTerm acc = composition();
    while (true) {
      if (ts_.accept(Tok::kAmp)) {
        acc = ra::meet(acc, composition());
      } else if (ts_.accept(Tok::kMinus)) {
        acc = ra::diff(acc, composition());
      } else {
        return acc;
      }
    }
  }

  RaTerm composition() {
    RaTerm acc = postfix();
    while (ts_.accept(Tok::kSemi)) acc = ra::comp(acc, postfix());
    return acc;
  }

  RaTerm postfix() {
    RaTerm t = primary();
    while (ts_.accept(Tok::kTilde)) t = ra::conv(t);
    return t;
  }

  RaTerm primary() {
    if (ts_.accept(Tok::kLParen)) {
      RaTerm t = term();
      ts_.expect(Tok::kRParen, "to close '('");
      return t;
    }
    if (ts_.at(Tok::kIdent)) {
      const std::string& name = ts_.next().text;
      if (name == "id") return ra::id();
      if (name == "top") return ra::top();
      return ra::atom(name);
    }
    ts_.fail("expected a relation-algebra term");
  }

  TokenStream ts_;
};

// ---------------------------------------------------------------------------
// First order

std::optional<Var> as_var(const detail::Token& t) {
  if (t.kind != Tok::kIdent || t.text.size() != 1) return std::nullopt;
  switch (t.text[0]) {
    case 'x': return Var::kX;
    case 'y': return Var::kY;
    case 'z': return Var::kZ;
    default: return std::nullopt;
  }
}

class FoParser {
 public:
  explicit FoParser(std::string_view text) : ts_(text) {}

  FoFormula run() {
    FoFormula f = implication();
    ts_.expect_end();
    return f;
  }

 private:
  FoFormula implication() {
    FoFormula lhs = disjunction();
    if (ts_.accept(Tok::kArrow)) return fo::implies(lhs, implication());
    return lhs;
  }

  FoFormula disjunction() {
    FoFormula lhs = conjunction();
    if (ts_.accept(Tok::kBar)) return fo::disj(lhs, disjunction());
    return lhs;
  }

  FoFormula conjunction() {
    FoFormula lhs = unary();
    if (ts_.accept(Tok::kAmp)) return fo::conj(lhs, conjunction());
    return lhs;
  }

  Var variable() {
    if (auto v = as_var(ts_.peek())) {
      ts_.next();
      return *v;
    }
    ts_.fail("expected a variable (x, y or z)");
  }

  bool at_quantifier() const {
    const auto& t = ts_.peek();
    return t.kind == Tok::kIdent && (t.text == "E" || t.text == "A") && as_var(ts_.peek(1)).has_value();
  }

  FoFormula unary() {
    if (ts_.accept(Tok::kTilde)) return fo::neg(unary());
    if (at_quantifier()) {
      const bool is_exists = ts_.next().text == "E";
      const std::size_t where = ts_.peek().pos;
      const Var v = variable();
      std::optional<GuardAtom> guard;
      if (ts_.accept(Tok::kColon)) {
        const std::size_t guard_pos = ts_.peek().pos;
        FoFormula g = atom();
        if (g.kind() != FoKind::kBinAtom) throw ParseError("guards must be binary atoms", guard_pos);
        guard = GuardAtom{g.name(), g.v1(), g.v2()};
        if (guard->first != v && guard->second != v) {
          throw ParseError("guard does not mention the quantified variable", guard_pos);
        }
      }
      ts_.expect(Tok::kDot, "after quantifier prefix");
      (void)where;
      FoFormula body = implication();
      return is_exists ? fo::exists(v, guard, body) : fo::forall(v, guard, body);
    }
    return atom();
  }

  FoFormula atom() {
    if (ts_.accept(Tok::kLParen)) {
      FoFormula f = implication();
      ts_.expect(Tok::kRParen, "to close '('");
      return f;
    }
    if (as_var(ts_.peek()) && ts_.peek(1).kind == Tok::kEquals) {
      const Var a = variable();
      ts_.next();
      return fo::eq(a, variable());
    }
    if (ts_.at(Tok::kIdent) && ts_.peek(1).kind == Tok::kLParen) {
      std::string name = ts_.next().text;
      ts_.next();
      const Var a = variable();
      if (ts_.accept(Tok::kComma)) {
        const Var b = variable();
        ts_.expect(Tok::kRParen, "to close an atom");
        return fo::bin(std::move(name), a, b);
      }
      ts_.expect(Tok::kRParen, "to close an atom");
      return fo::un(std::move(name), a);
    }
    ts_.fail("expected a first-order formula");
  }

  TokenStream ts_;
};

}  // namespace

ModalFormula parse_modal(std::string_view text) { return ModalParser(text).run(); }
RaTerm parse_ra(std::string_view text) { return RaParser(text).run(); }
FoFormula parse_fo(std::string_view text) { return FoParser(text).run(); }

}  // namespace logicwb
