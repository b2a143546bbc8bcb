#include <string>

#include "logicwb/fo.h"
#include "logicwb/modal.h"
#include "logicwb/ra.h"

namespace logicwb {

namespace {

// Binding strength; higher binds tighter.
int modal_prec(ModalKind k) {
  switch (k) {
    case ModalKind::kImplies: return 1;
    case ModalKind::kOr: return 2;
    case ModalKind::kAnd: return 3;
    case ModalKind::kProp:
    case ModalKind::kTop:
    case ModalKind::kBot: return 5;
    default: return 4;
  }
}

void print_modal(const ModalFormula& f, ModalSurface surface, int min_prec, std::string& out) {
  const int prec = modal_prec(f.kind());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  auto prefix = [&](const std::string& op) {
    out += op;
    print_modal(f.arg(), surface, 4, out);
  };
  auto infix = [&](const char* op) {
    print_modal(f.lhs(), surface, prec + 1, out);
    out += op;
    print_modal(f.rhs(), surface, prec, out);
  };
  switch (f.kind()) {
    case ModalKind::kProp: out += f.name(); break;
    case ModalKind::kTop: out += "true"; break;
    case ModalKind::kBot: out += "false"; break;
    case ModalKind::kNot: prefix("~"); break;
    case ModalKind::kAnd: infix(" & "); break;
    case ModalKind::kOr: infix(" | "); break;
    case ModalKind::kImplies: infix(" -> "); break;
    case ModalKind::kDiamond: prefix(surface == ModalSurface::kGraded ? "<1>" : "<>"); break;
    case ModalKind::kBox: prefix(surface == ModalSurface::kGraded ? "[1]" : "[]"); break;
    case ModalKind::kDiamondGeq: prefix("<" + std::to_string(f.grade()) + ">"); break;
    case ModalKind::kBoxDualGeq: prefix("[" + std::to_string(f.grade()) + "]"); break;
    case ModalKind::kBullet: prefix("*"); break;
    case ModalKind::kBulletDual: prefix("#"); break;
    case ModalKind::kDiamondB: prefix("<.>"); break;
    case ModalKind::kBoxB: prefix("[.]"); break;
  }
  if (parens) out += ')';
}

int ra_prec(RaKind k) {
  switch (k) {
    case RaKind::kMeet:
    case RaKind::kDiff: return 1;
    case RaKind::kComp: return 2;
    case RaKind::kConv: return 3;
    default: return 4;
  }
}

void print_ra(const RaTerm& t, int min_prec, std::string& out) {
  const int prec = ra_prec(t.kind());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  auto infix = [&](const char* op) {
    print_ra(t.lhs(), prec, out);
    out += op;
    print_ra(t.rhs(), prec + 1, out);
  };
  switch (t.kind()) {
    case RaKind::kAtom: out += t.name(); break;
    case RaKind::kId: out += "id"; break;
    case RaKind::kTop: out += "top"; break;
    case RaKind::kMeet: infix(" & "); break;
    case RaKind::kDiff: infix(" - "); break;
    case RaKind::kComp: infix(" ; "); break;
    case RaKind::kConv:
      print_ra(t.arg(), 3, out);
      out += '~';
      break;
  }
  if (parens) out += ')';
}

int fo_prec(FoKind k) {
  switch (k) {
    case FoKind::kImplies: return 1;
    case FoKind::kOr: return 2;
    case FoKind::kAnd: return 3;
    case FoKind::kNot: return 4;
    case FoKind::kExists:
    case FoKind::kForall: return 0;
    default: return 5;
  }
}

// Quantifier bodies extend as far right as possible, so a quantifier is only
// left bare at the top level or directly under another quantifier.
void print_fo(const FoFormula& f, int min_prec, std::string& out) {
  const int prec = fo_prec(f.kind());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  auto infix = [&](const char* op) {
    print_fo(f.lhs(), prec + 1, out);
    out += op;
    print_fo(f.rhs(), prec, out);
  };
  switch (f.kind()) {
    case FoKind::kBinAtom:
      out += f.name() + "(" + var_name(f.v1()) + "," + var_name(f.v2()) + ")";
      break;
    case FoKind::kUnAtom:
      out += f.name() + "(" + var_name(f.v1()) + ")";
      break;
    case FoKind::kEq:
      out += std::string(1, var_name(f.v1())) + " = " + var_name(f.v2());
      break;
    case FoKind::kNot:
      out += '~';
      print_fo(f.arg(), 4, out);
      break;
    case FoKind::kAnd: infix(" & "); break;
    case FoKind::kOr: infix(" | "); break;
    case FoKind::kImplies: infix(" -> "); break;
    case FoKind::kExists:
    case FoKind::kForall:
      out += f.kind() == FoKind::kExists ? "E " : "A ";
      out += var_name(f.bound());
      if (const auto& g = f.guard()) {
        out += " : " + g->rel + "(" + var_name(g->first) + "," + var_name(g->second) + ")";
      }
      out += " . ";
      print_fo(f.body(), 0, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const ModalFormula& f, ModalSurface surface) {
  std::string out;
  print_modal(f, surface, 0, out);
  return out;
}

std::string to_string(const RaTerm& t) {
  std::string out;
  print_ra(t, 0, out);
  return out;
}

std::string to_string(const FoFormula& f) {
  std::string out;
  print_fo(f, 0, out);
  return out;
}

}  // namespace logicwb
