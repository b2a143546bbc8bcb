#ifndef LOGICWB_SEMANTICS_H_
#define LOGICWB_SEMANTICS_H_

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "logicwb/fo.h"
#include "logicwb/modal.h"
#include "logicwb/ra.h"
#include "logicwb/structure.h"

namespace logicwb {

// kIntended: Bullet needs infinitely many reflexive successors, so it is false
// on every finite structure. kQuasi: Bullet is the diamond of "Rb" and the
// structure must satisfy is_frame_K.
enum class SemanticsMode { kIntended, kQuasi };

struct ModalEvaluation {
  bool value = false;
  // Set when an Intended-mode bullet was decided by finiteness alone.
  bool vacuous_bullet = false;
  // Subformula -> truth at the evaluation point; filled on request.
  std::map<ModalFormula, bool> trace;
};

struct ModalEvalOptions {
  bool trace = false;
  // Skip the is_frame_K check in Quasi mode.
  bool assume_frame_K = false;
};

// Throws PreconditionError when Quasi mode meets a non-K structure or
// Intended mode meets a DiamondB/BoxB modality.
ModalEvaluation evaluate_modal(const PointedStructure& m, const ModalFormula& f, SemanticsMode mode,
                               ModalEvalOptions options = {});
bool eval_modal(const PointedStructure& m, const ModalFormula& f,
                SemanticsMode mode = SemanticsMode::kIntended);

// Truth set of `f` over every node, computed bottom-up. Same preconditions as
// evaluate_modal.
std::vector<char> modal_extension(const Structure& m, const ModalFormula& f,
                                  SemanticsMode mode = SemanticsMode::kIntended,
                                  bool assume_frame_K = false);

// Dense boolean matrix over one structure's domain.
class Relation {
 public:
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool contains(Node a, Node b) const { return bits_[a * n_ + b] != 0; }
  void set(Node a, Node b, bool value = true) { bits_[a * n_ + b] = value ? 1 : 0; }
  std::size_t count() const;
  std::vector<NodePair> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

Relation eval_ra(const Structure& m, const RaTerm& t);
bool ra_equiv_top(const Structure& m, const RaTerm& t);

class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<Var, Node>> init) {
    for (auto [v, n] : init) set(v, n);
  }

  const std::optional<Node>& get(Var v) const { return slots_[static_cast<unsigned>(v)]; }
  void set(Var v, Node n) { slots_[static_cast<unsigned>(v)] = n; }
  void clear(Var v) { slots_[static_cast<unsigned>(v)].reset(); }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::array<std::optional<Node>, 3> slots_;
};

// Throws PreconditionError when a free variable of `f` is unassigned or
// assigned outside the domain.
bool eval_fo(const Structure& m, const Assignment& a, const FoFormula& f);

}  // namespace logicwb

#endif  // LOGICWB_SEMANTICS_H_
