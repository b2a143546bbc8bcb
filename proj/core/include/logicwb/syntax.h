#ifndef LOGICWB_SYNTAX_H_
#define LOGICWB_SYNTAX_H_

#include <map>
#include <set>
#include <string>

#include "logicwb/fo.h"
#include "logicwb/modal.h"
#include "logicwb/ra.h"

namespace logicwb {

struct Vocabulary {
  std::set<std::string> unary;
  std::set<std::string> binary;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

// Modal formulas only name unary predicates; the accessibility relations are
// implicit and not reported.
Vocabulary vocabulary_of(const ModalFormula& f);
Vocabulary vocabulary_of(const RaTerm& t);
Vocabulary vocabulary_of(const FoFormula& f);

// Arity-preserving renaming. Names missing from the maps are unchanged.
struct Renaming {
  std::map<std::string, std::string> unary;
  std::map<std::string, std::string> binary;
};

// Throw PreconditionError when a name is renamed at an arity it does not have
// in the formula, or when a target collides with a name of the other arity.
ModalFormula rename(const ModalFormula& f, const Renaming& rho);
RaTerm rename(const RaTerm& t, const Renaming& rho);
FoFormula rename(const FoFormula& f, const Renaming& rho);

// Replaces every occurrence of the letter `p` by `g`.
ModalFormula substitute(const ModalFormula& f, const std::string& p, const ModalFormula& g);

// p & f', where f' guards every modality: existential ones with "p &",
// universal ones with "p ->".
ModalFormula relativize_modal(const ModalFormula& f, const std::string& p);

std::size_t depth_modal(const ModalFormula& f);
// Atoms 0; connectives take the maximum; each quantifier adds 1.
std::size_t depth_gf(const FoFormula& f);

std::set<ModalFormula> subformulas(const ModalFormula& f);

struct ModalFeatures {
  bool grades = false;   // DiamondGeq / BoxDualGeq
  bool bullets = false;  // Bullet / BulletDual
  bool rb = false;       // DiamondB / BoxB
  unsigned max_grade = 0;
};
ModalFeatures features_of(const ModalFormula& f);
inline bool is_basic_modal(const ModalFormula& f) {
  auto ft = features_of(f);
  return !ft.grades && !ft.bullets && !ft.rb;
}

bool is_gf_bin(const FoFormula& f);

// First-order translation of a basic modal formula with free variable `x`,
// alternating x and y and guarding quantifiers by R.
FoFormula standard_translation(const ModalFormula& f, Var x = Var::kX);

}  // namespace logicwb

#endif  // LOGICWB_SYNTAX_H_
