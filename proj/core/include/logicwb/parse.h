#ifndef LOGICWB_PARSE_H_
#define LOGICWB_PARSE_H_

#include <string_view>

#include "logicwb/fo.h"
#include "logicwb/modal.h"
#include "logicwb/ra.h"

namespace logicwb {

// Modal grammar, tightest first: "~" and the modal prefixes
// ("<>", "[]", "<k>", "[k]", "*", "#", "<.>", "[.]"), then "&", "|", "->";
// binary connectives are right-associative.
ModalFormula parse_modal(std::string_view text);

// Relation-algebra grammar: postfix "~" binds tightest, then ";", then
// "&" and "-" (left-associative). "id" and "top" are constants.
RaTerm parse_ra(std::string_view text);

// First-order grammar over x, y, z: atoms P(v), R(v,w), v = w; "~", "&",
// "|", "->"; quantifiers "E v [: R(v,w)] . body" and "A v [: ...] . body"
// whose bodies extend as far right as possible.
FoFormula parse_fo(std::string_view text);

// [A-Za-z_][A-Za-z0-9_]*
bool is_identifier(std::string_view s);

}  // namespace logicwb

#endif  // LOGICWB_PARSE_H_
