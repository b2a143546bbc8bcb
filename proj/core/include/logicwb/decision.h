#ifndef LOGICWB_DECISION_H_
#define LOGICWB_DECISION_H_

#include <optional>

#include "logicwb/modal.h"
#include "logicwb/semantics.h"
#include "logicwb/structure.h"

namespace logicwb {

struct SatResult {
  bool satisfiable = false;
  // Verified model of the query whenever satisfiable.
  std::optional<PointedStructure> witness;
};

// Tableau for basic modal logic. Throws PreconditionError on grades, bullets
// or Rb modalities; throws std::logic_error if a witness fails verification.
SatResult sat_basic_modal(const ModalFormula& f);

// First letter among "_r", "_r0", "_r1", ... that does not occur in f.
std::string fresh_letter(const ModalFormula& f);

// Basic modal formula equisatisfiable with the bullet formula f over the
// frame class K. Throws PreconditionError on grades or Rb modalities.
ModalFormula reduce_bullet(const ModalFormula& f);

// Satisfiability over K; the witness is a quasi-model verified in kQuasi
// mode.
SatResult sat_bullet(const ModalFormula& f);

// Exhaustive search over structures of at most max_size nodes (K-frames in
// kQuasi mode), pruning by node-signature symmetry. Throws BudgetError when
// max_size exceeds 5, when the formula has more than 16 letters, or when the
// frame space of a quasi search is too large.
SatResult bounded_model_search(const ModalFormula& f, SemanticsMode mode, std::size_t max_size);

// Whether "*p -> <>p" and "#(p -> <>p)" hold at every node under every
// valuation of p. Accepts any bimodal frame. Throws BudgetError when the
// domain exceeds max_nodes.
bool frame_axioms_valid_on_K(const Structure& frame, std::size_t max_nodes);

}  // namespace logicwb

#endif  // LOGICWB_DECISION_H_
