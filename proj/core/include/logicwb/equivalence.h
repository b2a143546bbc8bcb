#ifndef LOGICWB_EQUIVALENCE_H_
#define LOGICWB_EQUIVALENCE_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logicwb/structure.h"

namespace logicwb {

// Injective map from nodes of a left structure to nodes of a right one,
// stored as (left, right) pairs sorted by left node.
using PartialMap = std::vector<NodePair>;

// Whether `f` is a partial isomorphism between `m` and `n`: injective and
// preserving and reflecting every unary and binary fact among its domain over
// the union of both structures' names.
bool is_partial_iso(const Structure& m, const Structure& n, const PartialMap& f);

struct GameResult {
  bool equivalent = false;
  // Surviving positions (for bisimulations: the pairs of the relation as
  // singleton maps); empty when not equivalent.
  std::vector<PartialMap> family;
  // Bounded games: the first round count at which the duplicator loses.
  std::optional<std::size_t> distinguishing_round;
  std::vector<std::string> notes;
};

GameResult bisimilar(const PointedStructure& m, const PointedStructure& n);
GameResult bisimilar_depth(const PointedStructure& m, const PointedStructure& n, std::size_t k);
GameResult counting_bisimilar(const PointedStructure& m, const PointedStructure& n);
// Throws PreconditionError for k = 0 and BudgetError when k exceeds 4 or a
// domain exceeds 16 nodes.
GameResult pebble_equiv(const Structure& m, const Structure& n, std::size_t k);
bool potential_iso(const Structure& m, const Structure& n);
// Point tuples must have equal length 1 or 2, else PreconditionError.
GameResult gf_bin_bisimilar(const PointedStructure& m, const PointedStructure& n);

}  // namespace logicwb

#endif  // LOGICWB_EQUIVALENCE_H_
