#ifndef LOGICWB_STRUCTURE_IO_H_
#define LOGICWB_STRUCTURE_IO_H_

#include <string>
#include <string_view>

#include "logicwb/structure.h"

namespace logicwb {

// JSON documents of the form
//   {"domain": [ids], "unary": {name: [ids]}, "binary": {name: [[id, id]]}}
// with an optional "points": [ids] for pointed structures. Throws
// StructureError on malformed documents or invariant violations.
Structure load_structure(std::string_view json_text);
PointedStructure load_pointed_structure(std::string_view json_text);

// Byte-stable rendering: domain in structure order, relation names sorted,
// members and pairs in domain order, two-space indentation, trailing newline.
std::string dump_structure(const Structure& m);
std::string dump_structure(const PointedStructure& m);

}  // namespace logicwb

#endif  // LOGICWB_STRUCTURE_IO_H_
