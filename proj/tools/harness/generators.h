#ifndef LOGICWB_TOOLS_GENERATORS_H_
#define LOGICWB_TOOLS_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "logicwb/fo.h"
#include "logicwb/modal.h"
#include "logicwb/ra.h"
#include "logicwb/structure.h"

namespace logicwb::harness {

using Rng = std::mt19937_64;

// Independent stream per (seed, case index), so any failing case can be
// replayed alone.
Rng case_rng(std::uint64_t seed, std::uint64_t index);

struct StructureSpec {
  std::size_t min_nodes = 1;
  std::size_t max_nodes = 5;
  std::vector<std::string> unary = {"p", "q"};
  std::vector<std::string> binary = {"R"};
  double edge_probability = 0.3;
  double unary_probability = 0.4;
};

// Nodes are named "w0", "w1", ...; every listed name is declared.
Structure random_structure(Rng& rng, const StructureSpec& spec);
PointedStructure random_pointed(Rng& rng, const StructureSpec& spec);

struct ModalSpec {
  std::size_t depth = 2;
  std::size_t size = 10;  // rough node budget
  std::vector<std::string> letters = {"p", "q"};
  unsigned max_grade = 0;  // 0 disables graded modalities
  bool bullets = false;
};

// Uniform choice among the productions the remaining depth and size allow.
ModalFormula random_modal(Rng& rng, const ModalSpec& spec);

RaTerm random_ra(Rng& rng, std::size_t max_size, const std::vector<std::string>& atoms);

// GF_bin formula whose free variables lie in `free` (one or two variables).
FoFormula random_gf_bin(Rng& rng, std::size_t depth, const std::vector<Var>& free,
                        const std::vector<std::string>& unary, const std::vector<std::string>& binary,
                        std::size_t size = 8);

// One representative per isomorphism class of rooted unordered trees with
// at most max_nodes nodes, labelled by subsets of `letters`.
std::vector<PointedStructure> all_trees(std::size_t max_nodes, const std::vector<std::string>& letters);

// Copy of `m` with one node duplicated: the copy keeps the node's labels and
// successors and takes over a random share of its incoming edges.
PointedStructure duplicate_node(Rng& rng, const PointedStructure& m);

// Quotient of `m` by its largest bisimulation.
PointedStructure bisimulation_quotient(const PointedStructure& m);

}  // namespace logicwb::harness

#endif  // LOGICWB_TOOLS_GENERATORS_H_
