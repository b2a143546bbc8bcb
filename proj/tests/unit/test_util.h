#ifndef LOGICWB_TESTS_TEST_UTIL_H_
#define LOGICWB_TESTS_TEST_UTIL_H_

#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "logicwb/semantics.h"
#include "logicwb/structure.h"
#include "logicwb/structure_io.h"

namespace logicwb::testing {

inline Structure S(std::string_view json) { return load_structure(json); }
inline PointedStructure P(std::string_view json) { return load_pointed_structure(json); }
inline PointedStructure at(const Structure& m, std::string_view point) {
  return PointedStructure(m, m.node(point));
}

using NamePairs = std::set<std::pair<std::string, std::string>>;

inline NamePairs names(const Structure& m, const Relation& r) {
  NamePairs out;
  for (auto [a, b] : r.pairs()) out.emplace(m.name(a), m.name(b));
  return out;
}

inline std::set<std::string> domain_set(const Structure& m) {
  return {m.domain().begin(), m.domain().end()};
}

}  // namespace logicwb::testing

#endif  // LOGICWB_TESTS_TEST_UTIL_H_
