#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>

#include "logicwb/decision.h"
#include "logicwb/error.h"
#include "logicwb/syntax.h"

namespace logicwb {

namespace {

constexpr std::size_t kMaxSearchSize = 5;
constexpr std::size_t kMaxValuationBits = 20;
constexpr std::size_t kMaxQuasiSize = 4;

// Adjacency bitmasks: bit a*n+b set iff (a, b) is in the relation.
struct Frame {
  std::uint32_t r;
  std::uint32_t rb;
};

bool edge(std::uint32_t rel, std::size_t n, std::size_t a, std::size_t b) { return (rel >> (a * n + b)) & 1u; }

// Isomorphism-invariant per-node summary; frames whose node summaries are
// not sorted are skipped, which keeps at least one frame of every
// isomorphism class.
std::uint64_t node_signature(const Frame& f, std::size_t n, std::size_t v) {
  std::uint64_t out_r = 0, in_r = 0, out_b = 0, in_b = 0;
  for (std::size_t u = 0; u < n; ++u) {
    out_r += edge(f.r, n, v, u);
    in_r += edge(f.r, n, u, v);
    out_b += edge(f.rb, n, v, u);
    in_b += edge(f.rb, n, u, v);
  }
  return (static_cast<std::uint64_t>(edge(f.r, n, v, v)) << 40) |
         (static_cast<std::uint64_t>(edge(f.rb, n, v, v)) << 32) |
         (out_r << 24) | (in_r << 16) | (out_b << 8) | in_b;
}

bool canonical(const Frame& f, std::size_t n) {
  std::uint64_t prev = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t s = node_signature(f, n, v);
    if (v > 0 && s < prev) return false;
    prev = s;
  }
  return true;
}

std::vector<Frame> enumerate_plain(std::size_t n) {
  std::vector<Frame> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t r = 0; r < total; ++r) {
    const Frame f{static_cast<std::uint32_t>(r), 0};
    if (canonical(f, n)) out.push_back(f);
  }
  return out;
}

// K-frames: choose the R-reflexive nodes, then per ordered pair whether it is
// absent, in R only, or in R and Rb (the last only towards reflexive nodes).
std::vector<Frame> enumerate_quasi(std::size_t n) {
  std::vector<Frame> out;
  for (std::uint32_t refl = 0; refl < (1u << n); ++refl) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<int> radix;
    Frame base{0, 0};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const bool target_refl = (refl >> b) & 1u;
        if (a == b) {
          if (target_refl) {
            base.r |= 1u << (a * n + b);
            slots.emplace_back(a, b);
            radix.push_back(2);  // Rb loop or not
          }
          continue;
        }
        slots.emplace_back(a, b);
        radix.push_back(target_refl ? 3 : 2);
      }
    }
    std::vector<int> digit(slots.size(), 0);
    while (true) {
      Frame f = base;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        const auto [a, b] = slots[i];
        const std::uint32_t bit = 1u << (a * n + b);
        if (a == b) {
          if (digit[i] == 1) f.rb |= bit;
        } else {
          if (digit[i] >= 1) f.r |= bit;
          if (digit[i] == 2) f.rb |= bit;
        }
      }
      if (canonical(f, n)) out.push_back(f);
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == radix[i]) digit[i++] = 0;
      if (i == digit.size()) break;
    }
  }
  return out;
}

// Frame lists are built once per (size, kind) and only read afterwards.
const std::vector<Frame>& frames(std::size_t n, bool quasi) {
  static std::array<std::array<std::vector<Frame>, 2>, kMaxSearchSize + 1> cache;
  static std::array<std::array<std::once_flag, 2>, kMaxSearchSize + 1> once;
  std::call_once(once[n][quasi], [&] { cache[n][quasi] = quasi ? enumerate_quasi(n) : enumerate_plain(n); });
  return cache[n][quasi];
}

ModalFormula fold_intended(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalKind::kBullet: return ml::bot();
    case ModalKind::kBulletDual: return ml::top();
    default: break;
  }
  if (f.args().empty()) return f;
  std::vector<ModalFormula> args;
  for (const auto& a : f.args()) args.push_back(fold_intended(a));
  return ml::rebuild(f, std::move(args));
}

// Post-order program over the distinct subformulas.
struct Op {
  ModalKind kind;
  unsigned grade;
  int letter;  // kProp
  int a = -1;
  int b = -1;
};

struct Program {
  std::vector<Op> ops;
  std::vector<std::string> letters;
};

int compile(const ModalFormula& f, Program& p, std::map<ModalFormula, int>& seen) {
  if (auto it = seen.find(f); it != seen.end()) return it->second;
  Op op{f.kind(), f.grade(), -1};
  if (f.kind() == ModalKind::kProp) {
    op.letter = static_cast<int>(std::find(p.letters.begin(), p.letters.end(), f.name()) - p.letters.begin());
  }
  if (!f.args().empty()) op.a = compile(f.arg(0), p, seen);
  if (f.args().size() > 1) op.b = compile(f.arg(1), p, seen);
  p.ops.push_back(op);
  seen.emplace(f, static_cast<int>(p.ops.size() - 1));
  return static_cast<int>(p.ops.size() - 1);
}

// Bit-parallel evaluation over every valuation of the letters on n nodes:
// valuation index i gives letter j at node v the bit v*L + j of i.
class Evaluator {
 public:
  Evaluator(const Program& p, std::size_t n)
      : p_(p), n_(n), words_(std::max<std::size_t>(1, (std::size_t{1} << (n * p.letters.size())) / 64)),
        ext_(p.ops.size() * n * words_), tmp_(words_), acc_((kMaxGrade + 2) * words_) {
    const std::size_t bits = n * p.letters.size();
    const std::uint64_t used = bits >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::size_t{1} << bits)) - 1);
    full_.assign(words_, used);
    literal_.assign(bits * words_, 0);
    for (std::size_t b = 0; b < bits; ++b) {
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = 0;
        if (b < 6) {
          for (std::size_t i = 0; i < 64; ++i) word |= static_cast<std::uint64_t>((i >> b) & 1u) << i;
        } else {
          word = ((w >> (b - 6)) & 1u) ? ~std::uint64_t{0} : 0;
        }
        literal_[b * words_ + w] = word & used;
      }
    }
  }

  static constexpr unsigned kMaxGrade = 64;

  std::size_t words() const { return words_; }

  // Truth of the last op at each node, one bitset per node.
  const std::uint64_t* run(const Frame& f) {
    const std::size_t L = p_.letters.size();
    for (std::size_t i = 0; i < p_.ops.size(); ++i) {
      const Op& op = p_.ops[i];
      for (std::size_t v = 0; v < n_; ++v) {
        std::uint64_t* out = slot(i, v);
        switch (op.kind) {
          case ModalKind::kProp: copy(out, &literal_[(v * L + op.letter) * words_]); break;
          case ModalKind::kTop: copy(out, full_.data()); break;
          case ModalKind::kBot: std::fill(out, out + words_, 0); break;
          case ModalKind::kNot:
            for (std::size_t w = 0; w < words_; ++w) out[w] = ~slot(op.a, v)[w] & full_[w];
            break;
          case ModalKind::kAnd:
            for (std::size_t w = 0; w < words_; ++w) out[w] = slot(op.a, v)[w] & slot(op.b, v)[w];
            break;
          case ModalKind::kOr:
            for (std::size_t w = 0; w < words_; ++w) out[w] = slot(op.a, v)[w] | slot(op.b, v)[w];
            break;
          case ModalKind::kImplies:
            for (std::size_t w = 0; w < words_; ++w) out[w] = (~slot(op.a, v)[w] | slot(op.b, v)[w]) & full_[w];
            break;
          case ModalKind::kDiamond:
          case ModalKind::kBullet:
          case ModalKind::kDiamondB:
            at_least(op.kind == ModalKind::kDiamond ? f.r : f.rb, v, op.a, 1, true, out);
            break;
          case ModalKind::kBox:
          case ModalKind::kBulletDual:
          case ModalKind::kBoxB:
            at_least(op.kind == ModalKind::kBox ? f.r : f.rb, v, op.a, 1, false, out);
            negate(out);
            break;
          case ModalKind::kDiamondGeq: at_least(f.r, v, op.a, op.grade, true, out); break;
          case ModalKind::kBoxDualGeq:
            at_least(f.r, v, op.a, op.grade, false, out);
            negate(out);
            break;
        }
      }
    }
    return slot(p_.ops.size() - 1, 0);
  }

 private:
  std::uint64_t* slot(std::size_t op, std::size_t v) { return &ext_[(op * n_ + v) * words_]; }
  void copy(std::uint64_t* out, const std::uint64_t* in) { std::copy(in, in + words_, out); }
  void negate(std::uint64_t* out) {
    for (std::size_t w = 0; w < words_; ++w) out[w] = ~out[w] & full_[w];
  }

  // Valuations under which at least k successors of v have `arg` == want.
  void at_least(std::uint32_t rel, std::size_t v, int arg, unsigned k, bool want, std::uint64_t* out) {
    if (k == 0) {
      copy(out, full_.data());
      return;
    }
    std::vector<std::size_t> succ;
    for (std::size_t u = 0; u < n_; ++u) {
      if (edge(rel, n_, v, u)) succ.push_back(u);
    }
    if (succ.size() < k) {
      std::fill(out, out + words_, 0);
      return;
    }
    // acc[c] = at least c hits so far.
    std::fill(acc_.begin(), acc_.begin() + (k + 1) * words_, 0);
    std::copy(full_.begin(), full_.end(), acc_.begin());
    for (std::size_t u : succ) {
      const std::uint64_t* s = slot(arg, u);
      for (std::size_t w = 0; w < words_; ++w) tmp_[w] = want ? s[w] : (~s[w] & full_[w]);
      for (unsigned c = k; c >= 1; --c) {
        for (std::size_t w = 0; w < words_; ++w) acc_[c * words_ + w] |= acc_[(c - 1) * words_ + w] & tmp_[w];
      }
    }
    std::copy(acc_.begin() + k * words_, acc_.begin() + (k + 1) * words_, out);
  }

  const Program& p_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> ext_;
  std::vector<std::uint64_t> tmp_;
  std::vector<std::uint64_t> acc_;
  std::vector<std::uint64_t> full_;
  std::vector<std::uint64_t> literal_;
};

PointedStructure build_witness(const Frame& f, std::size_t n, const std::vector<std::string>& letters,
                               std::uint64_t valuation, std::size_t point, bool quasi) {
  StructureBuilder b;
  for (std::size_t v = 0; v < n; ++v) b.add_node("w" + std::to_string(v));
  for (std::size_t j = 0; j < letters.size(); ++j) {
    b.declare_unary(letters[j]);
    for (std::size_t v = 0; v < n; ++v) {
      if ((valuation >> (v * letters.size() + j)) & 1u) b.add_unary(letters[j], static_cast<Node>(v));
    }
  }
  b.declare_binary(kAccessibility);
  if (quasi) b.declare_binary(kBulletAccessibility);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      if (edge(f.r, n, a, c)) b.add_binary(kAccessibility, static_cast<Node>(a), static_cast<Node>(c));
      if (edge(f.rb, n, a, c)) b.add_binary(kBulletAccessibility, static_cast<Node>(a), static_cast<Node>(c));
    }
  }
  return PointedStructure(b.build(), static_cast<Node>(point));
}

}  // namespace

SatResult bounded_model_search(const ModalFormula& f, SemanticsMode mode, std::size_t max_size) {
  if (max_size > kMaxSearchSize) throw BudgetError("bounded model search is limited to 5 nodes");
  const ModalFeatures ft = features_of(f);
  if (mode == SemanticsMode::kIntended && ft.rb) {
    throw PreconditionError("Rb modalities are only meaningful under quasi semantics");
  }
  if (ft.max_grade > Evaluator::kMaxGrade) throw BudgetError("grades above 64 are not searched");
  const ModalFormula query = mode == SemanticsMode::kIntended ? fold_intended(f) : f;
  const bool quasi = mode == SemanticsMode::kQuasi && (ft.bullets || ft.rb);

  Program program;
  const auto vocab = vocabulary_of(query).unary;
  program.letters.assign(vocab.begin(), vocab.end());
  if (program.letters.size() * max_size > kMaxValuationBits) {
    throw BudgetError("too many letters for exhaustive valuation search");
  }
  if (quasi && max_size > kMaxQuasiSize) throw BudgetError("quasi-model search is limited to 4 nodes");
  std::map<ModalFormula, int> seen;
  compile(query, program, seen);

  SatResult out;
  if (query.kind() == ModalKind::kBot) return out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    Evaluator ev(program, n);
    for (const Frame& frame : frames(n, quasi)) {
      // Per-node results of the last op are contiguous.
      const std::uint64_t* result = ev.run(frame);
      for (std::size_t v = 0; v < n; ++v) {
        const std::uint64_t* bits = result + v * ev.words();
        for (std::size_t w = 0; w < ev.words(); ++w) {
          if (!bits[w]) continue;
          const std::uint64_t valuation = w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(bits[w]));
          out.satisfiable = true;
          out.witness = build_witness(frame, n, program.letters, valuation, v, mode == SemanticsMode::kQuasi);
          if (!eval_modal(*out.witness, f, mode)) {
            throw std::logic_error("bounded search witness fails to satisfy " + to_string(f));
          }
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace logicwb
