#ifndef LOGICWB_TRANSFORMS_H_
#define LOGICWB_TRANSFORMS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logicwb/fo.h"
#include "logicwb/modal.h"
#include "logicwb/ra.h"
#include "logicwb/structure.h"
#include "logicwb/syntax.h"

namespace logicwb {

// Tree of R-paths from the point with at most `depth` edges. Nodes are named
// by their paths ("w0/w1/w2") and listed breadth-first.
PointedStructure unravel(const PointedStructure& m, std::size_t depth);

// Graded characteristic formula of a finite pointed tree relative to the
// unary names in `vocab`. Throws PreconditionError for non-trees and for
// trees using unary names outside `vocab`.
ModalFormula gml_char_formula(const PointedStructure& t, const Vocabulary& vocab);

// Attaches `count` fresh copies of the tree `t` below node `v` of the tree
// `m`.
PointedStructure add_copies(const PointedStructure& m, Node v, const PointedStructure& t, std::size_t count);

// Largest subtree containing the point whose nodes all satisfy `p`; the
// point need not be its root. `t` is an R-tree rooted anywhere.
PointedStructure subtree(const PointedStructure& t, std::string_view p);

// Replaces every leaf b (atom, id, top) by b & (r ; top ; r~).
RaTerm ra_relativize(const RaTerm& t, const std::string& r);

// Three-variable translation with free variables x (source) and y (target).
FoFormula ra_to_fo3(const RaTerm& t);

// Breadth-first distances from the tuple `from` over pairs of distinct nodes
// that share a binary fact; nullopt for unreachable nodes.
std::vector<std::optional<std::size_t>> guarded_distances(const Structure& m, std::span<const Node> from);
std::optional<std::size_t> guarded_dist(const Structure& m, std::span<const Node> from, Node t);

// Induced substructure on the nodes within guarded distance n of the points.
PointedStructure cut_guarded(const PointedStructure& m, std::size_t n);

struct GuardedUnraveling {
  PointedStructure model;
  // Number of guarded sets in the path that introduced each node (1 for
  // the root tuple).
  std::vector<std::size_t> path_length;
};

// Binary guarded unraveling truncated at paths of depth + 1 guarded sets.
// Each step adds one element co-guarded with the previous new element and
// absent from the previous set. Nodes are named "s/e2/e3".
GuardedUnraveling gf_unravel_bin_with_paths(const PointedStructure& m, std::size_t depth);
PointedStructure gf_unravel_bin(const PointedStructure& m, std::size_t depth);

}  // namespace logicwb

#endif  // LOGICWB_TRANSFORMS_H_
