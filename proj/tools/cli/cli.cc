#include "cli.h"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "harness/suites.h"
#include "logicwb/decision.h"
#include "logicwb/equivalence.h"
#include "logicwb/error.h"
#include "logicwb/parse.h"
#include "logicwb/semantics.h"
#include "logicwb/structure_io.h"
#include "logicwb/syntax.h"
#include "logicwb/transforms.h"

namespace logicwb::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

// Structure plus the points named in the file, if any.
struct Loaded {
  Structure structure;
  std::vector<Node> file_points;
};

Loaded load(const std::string& path) {
  const std::string text = read_file(path);
  Structure s = load_structure(text);
  std::vector<Node> points;
  const json doc = json::parse(text, nullptr, false);
  if (doc.is_object() && doc.contains("points")) points = load_pointed_structure(text).points;
  return {std::move(s), std::move(points)};
}

std::vector<Node> resolve(const Structure& s, const std::vector<std::string>& names) {
  std::vector<Node> out;
  for (const auto& n : names) out.push_back(s.node(n));
  return out;
}

PointedStructure pointed(const Loaded& m, const std::vector<std::string>& names) {
  std::vector<Node> pts = names.empty() ? m.file_points : resolve(m.structure, names);
  if (pts.empty() && m.structure.size() == 1) pts.push_back(0);
  if (pts.empty()) throw UsageError("a point is required (--point, --points or \"points\" in the model)");
  return PointedStructure(m.structure, std::move(pts));
}

PointedStructure single(const PointedStructure& m) {
  if (m.points.size() != 1) throw UsageError("this operation needs exactly one point");
  return m;
}

// "file.json", "file.json:w" or "file.json:a,b".
PointedStructure load_side(const std::string& spec, bool need_points) {
  std::string path = spec;
  std::vector<std::string> names;
  const auto colon = spec.rfind(':');
  if (colon != std::string::npos && !fs::exists(spec)) {
    path = spec.substr(0, colon);
    names = split(spec.substr(colon + 1), ',');
  }
  Loaded m = load(path);
  if (!need_points) {
    std::vector<Node> pts = names.empty() ? m.file_points : resolve(m.structure, names);
    if (pts.empty()) pts.push_back(0);
    return PointedStructure(m.structure, std::move(pts));
  }
  return pointed(m, names);
}

std::string formula_text(const std::string& inline_text, const std::string& file) {
  if (!inline_text.empty() && !file.empty()) throw UsageError("--formula and --formula-file are exclusive");
  if (!file.empty()) {
    std::string text = read_file(file);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
  }
  if (inline_text.empty()) throw UsageError("--formula or --formula-file is required");
  return inline_text;
}

// Parses and checks membership in the requested modal logic.
ModalFormula modal_in(const std::string& logic, const std::string& text) {
  ModalFormula f = parse_modal(text);
  const ModalFeatures ft = features_of(f);
  if (logic == "ml" && !is_basic_modal(f)) throw ParseError("formula is not basic modal", 0);
  if (logic == "gml" && (ft.bullets || ft.rb)) throw ParseError("formula is not graded modal", 0);
  if (logic == "mlb" && ft.grades) throw ParseError("graded modalities are not part of ML-bullet", 0);
  return f;
}

bool color_enabled() {
  const char* env = std::getenv("LOGICWB_COLOR");
  const std::string mode = env == nullptr ? "auto" : env;
  if (mode == "always") return true;
  if (mode == "never") return false;
  if (mode == "auto") return isatty(STDOUT_FILENO) != 0;
  throw UsageError("LOGICWB_COLOR must be auto, always or never");
}

std::string paint(const std::string& word, bool good, bool color) {
  if (!color) return word;
  return (good ? "\x1b[32m" : "\x1b[31m") + word + "\x1b[0m";
}

json pairs_json(const Structure& m, const std::vector<NodePair>& pairs) {
  json out = json::array();
  for (auto [a, b] : pairs) out.push_back({m.name(a), m.name(b)});
  return out;
}

struct EvalFlags {
  std::string logic, model, formula, formula_file, mode;
  std::vector<std::string> points;
  bool explain = false, relation = false;
};

int cmd_eval(const EvalFlags& fl, std::ostream& out) {
  const std::string text = formula_text(fl.formula, fl.formula_file);
  if (!fl.mode.empty() && fl.logic != "mlb") throw UsageError("--mode applies to --logic mlb only");
  if (fl.relation && fl.logic != "ra") throw UsageError("--relation applies to --logic ra only");
  const Loaded m = load(fl.model);
  const bool color = color_enabled();
  auto verdict = [&](bool v) { out << paint(v ? "true" : "false", v, color) << '\n'; };

  if (fl.logic == "ra") {
    const RaTerm t = parse_ra(text);
    const Relation r = eval_ra(m.structure, t);
    verdict(ra_equiv_top(m.structure, t));
    if (fl.relation) out << pairs_json(m.structure, r.pairs()).dump() << '\n';
    return kOk;
  }
  if (fl.logic == "fo") {
    const FoFormula f = parse_fo(text);
    const std::vector<Node> pts = fl.points.empty() ? m.file_points : resolve(m.structure, fl.points);
    if (pts.size() > 3) throw UsageError("at most three points (x, y, z)");
    Assignment a;
    for (std::size_t i = 0; i < pts.size(); ++i) a.set(static_cast<Var>(i), pts[i]);
    verdict(eval_fo(m.structure, a, f));
    return kOk;
  }
  const ModalFormula f = modal_in(fl.logic, text);
  const SemanticsMode mode = fl.mode == "quasi" ? SemanticsMode::kQuasi : SemanticsMode::kIntended;
  const PointedStructure pm = single(pointed(m, fl.points));
  ModalEvalOptions options;
  options.trace = fl.explain;
  const ModalEvaluation ev = evaluate_modal(pm, f, mode, options);
  verdict(ev.value);
  if (fl.explain) {
    for (const auto& [sub, value] : ev.trace) out << "  " << to_string(sub) << " : " << (value ? "true" : "false") << '\n';
    if (ev.vacuous_bullet) out << "  note: a bullet was evaluated vacuously\n";
  }
  return kOk;
}

struct SatFlags {
  std::string logic, formula, formula_file, witness;
};

int cmd_sat(const SatFlags& fl, std::ostream& out) {
  const ModalFormula f = modal_in(fl.logic, formula_text(fl.formula, fl.formula_file));
  const SatResult r = fl.logic == "ml" ? sat_basic_modal(f) : sat_bullet(f);
  const bool color = color_enabled();
  out << paint(r.satisfiable ? "sat" : "unsat", r.satisfiable, color) << '\n';
  if (r.satisfiable && !fl.witness.empty()) write_file(fl.witness, dump_structure(*r.witness));
  return r.satisfiable ? kOk : kNegative;
}

struct EquivFlags {
  std::string kind, left, right, witness;
  std::optional<std::size_t> k;
};

json game_json(const GameResult& g, const Structure& m, const Structure& n) {
  json family = json::array();
  for (const auto& map : g.family) {
    json entry = json::array();
    for (auto [a, b] : map) entry.push_back({m.name(a), n.name(b)});
    family.push_back(std::move(entry));
  }
  json doc = {{"equivalent", g.equivalent}, {"family", family}, {"notes", g.notes}};
  doc["distinguishing_round"] = g.distinguishing_round ? json(*g.distinguishing_round) : json(nullptr);
  return doc;
}

int cmd_equiv(const EquivFlags& fl, std::ostream& out) {
  const bool bounded = fl.kind == "bisim-k" || fl.kind == "pebble";
  if (bounded && !fl.k) throw UsageError("--k is required for --kind " + fl.kind);
  if (!bounded && fl.k) throw UsageError("--k applies to bisim-k and pebble only");
  const bool pointed_kind = fl.kind != "pebble" && fl.kind != "piso";
  const PointedStructure m = load_side(fl.left, pointed_kind);
  const PointedStructure n = load_side(fl.right, pointed_kind);
  if (pointed_kind && m.points.size() != n.points.size()) throw UsageError("point tuples differ in arity");
  if (pointed_kind && fl.kind != "gfbin" && m.points.size() != 1) throw UsageError("--kind " + fl.kind + " needs single points");
  if (fl.kind == "gfbin" && m.points.size() > 2) throw UsageError("gfbin takes at most two points");

  GameResult g;
  if (fl.kind == "bisim") {
    g = bisimilar(m, n);
  } else if (fl.kind == "bisim-k") {
    g = bisimilar_depth(m, n, *fl.k);
  } else if (fl.kind == "counting") {
    g = counting_bisimilar(m, n);
  } else if (fl.kind == "pebble") {
    g = pebble_equiv(m.structure, n.structure, *fl.k);
  } else if (fl.kind == "piso") {
    g.equivalent = potential_iso(m.structure, n.structure);
  } else {
    g = gf_bin_bisimilar(m, n);
  }
  out << paint(g.equivalent ? "equivalent" : "distinguishable", g.equivalent, color_enabled()) << '\n';
  if (!fl.witness.empty()) write_file(fl.witness, game_json(g, m.structure, n.structure).dump(2) + "\n");
  return kOk;
}

struct TransformFlags {
  std::string op, model, formula, formula_file, pred, vocab, out, tree, node;
  std::vector<std::string> points;
  std::optional<std::size_t> depth, count;
};

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required for this --op");
  return *v;
}

const std::string& need(const std::string& v, const char* flag) {
  if (v.empty()) throw UsageError(std::string(flag) + " is required for this --op");
  return v;
}

int cmd_transform(const TransformFlags& fl, std::ostream& out) {
  static const std::vector<std::string> formula_ops{"ra-relativize", "ra2fo", "relativize-ml"};
  const bool formula_op = std::find(formula_ops.begin(), formula_ops.end(), fl.op) != formula_ops.end();
  std::string result;
  if (formula_op) {
    const std::string text = formula_text(fl.formula, fl.formula_file);
    if (fl.op == "ra-relativize") {
      result = to_string(ra_relativize(parse_ra(text), need(fl.pred, "--pred"))) + "\n";
    } else if (fl.op == "ra2fo") {
      result = to_string(ra_to_fo3(parse_ra(text))) + "\n";
    } else {
      result = to_string(relativize_modal(parse_modal(text), need(fl.pred, "--pred"))) + "\n";
    }
  } else {
    const Loaded m = load(need(fl.model, "--model"));
    auto pm = [&] { return pointed(m, fl.points); };
    if (fl.op == "unravel") {
      result = dump_structure(unravel(single(pm()), need(fl.depth, "--depth")));
    } else if (fl.op == "cut") {
      result = dump_structure(cut_depth(single(pm()), need(fl.depth, "--depth")));
    } else if (fl.op == "gensub") {
      result = dump_structure(generated_submodel(single(pm())));
    } else if (fl.op == "restrict") {
      result = dump_structure(restrict(m.structure, need(fl.pred, "--pred")));
    } else if (fl.op == "subtree") {
      result = dump_structure(subtree(single(pm()), need(fl.pred, "--pred")));
    } else if (fl.op == "gf-unravel") {
      result = dump_structure(gf_unravel_bin(pm(), need(fl.depth, "--depth")));
    } else if (fl.op == "guarded-cut") {
      result = dump_structure(cut_guarded(pm(), need(fl.depth, "--depth")));
    } else if (fl.op == "add-copies") {
      const PointedStructure t = single(load_side(need(fl.tree, "--tree"), true));
      const Node v = m.structure.node(need(fl.node, "--node"));
      PointedStructure base = m.file_points.empty() && fl.points.empty() ? PointedStructure(m.structure, v) : pm();
      result = dump_structure(add_copies(base, v, t, need(fl.count, "--count")));
    } else if (fl.op == "char-formula") {
      const PointedStructure t = single(pm());
      Vocabulary vocab;
      if (fl.vocab.empty()) {
        for (const auto& name : t.structure.unary_names()) vocab.unary.insert(name);
      } else {
        for (const auto& name : split(fl.vocab, ',')) vocab.unary.insert(name);
      }
      result = to_string(gml_char_formula(t, vocab)) + "\n";
    } else {
      throw UsageError("unknown --op " + fl.op);
    }
  }
  if (fl.out.empty()) {
    out << result;
  } else {
    write_file(fl.out, result);
  }
  return kOk;
}

struct CheckFlags {
  std::vector<std::string> suites;
  std::string corpus, report;
  std::uint64_t seed = 1;
  std::optional<std::size_t> cases;
};

std::vector<PointedStructure> load_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError("corpus directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("corpus is empty: " + dir);
  std::vector<PointedStructure> out;
  for (const auto& f : files) {
    Loaded m = load(f.string());
    std::vector<Node> pts = m.file_points;
    if (pts.empty()) pts.push_back(0);
    out.emplace_back(std::move(m.structure), std::move(pts));
  }
  return out;
}

int cmd_check(const CheckFlags& fl, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names = fl.suites;
  if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) {
    names = harness::suite_names();
  }
  harness::SuiteOptions options;
  options.seed = fl.seed;
  options.cases = fl.cases;
  if (!fl.corpus.empty()) options.corpus = load_corpus(fl.corpus);
  const bool color = color_enabled();
  json reports = json::array();
  bool ok = true;
  for (const auto& name : names) {
    const harness::CheckReport r = harness::run_suite(name, options);
    ok = ok && r.passed();
    out << name << ": " << r.cases << " cases, " << r.failures.size() << " failures "
        << paint(r.passed() ? "PASS" : "FAIL", r.passed(), color) << '\n';
    err << name << ": " << r.elapsed_ms << " ms\n";
    reports.push_back(r.to_json());
  }
  if (!fl.report.empty()) write_file(fl.report, (reports.size() == 1 ? reports[0] : reports).dump(2) + "\n");
  return ok ? kOk : kNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"logicwb: model checking, games and transformations for modal and guarded logics", "logicwb"};
  app.require_subcommand(1);

  EvalFlags ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula on a structure");
  eval->add_option("--logic", ev.logic)->required()->check(CLI::IsMember({"ml", "gml", "mlb", "ra", "fo"}));
  eval->add_option("--model", ev.model)->required();
  eval->add_option("--point", ev.points, "Point name");
  eval->add_option("--points", ev.points, "Comma-separated point names")->delimiter(',');
  eval->add_option("--formula", ev.formula);
  eval->add_option("--formula-file", ev.formula_file);
  eval->add_option("--mode", ev.mode)->check(CLI::IsMember({"intended", "quasi"}));
  eval->add_flag("--explain", ev.explain);
  eval->add_flag("--relation", ev.relation);

  SatFlags sf;
  auto* sat = app.add_subcommand("sat", "Decide satisfiability");
  sat->add_option("--logic", sf.logic)->required()->check(CLI::IsMember({"ml", "mlb"}));
  sat->add_option("--formula", sf.formula);
  sat->add_option("--formula-file", sf.formula_file);
  sat->add_option("--witness", sf.witness, "Write a witness structure here when satisfiable");

  EquivFlags eq;
  auto* equiv = app.add_subcommand("equiv", "Compare two structures");
  equiv->add_option("--kind", eq.kind)
      ->required()
      ->check(CLI::IsMember({"bisim", "bisim-k", "counting", "pebble", "piso", "gfbin"}));
  equiv->add_option("--left", eq.left, "file.json[:point[,point]]")->required();
  equiv->add_option("--right", eq.right, "file.json[:point[,point]]")->required();
  equiv->add_option("--k", eq.k);
  equiv->add_option("--witness", eq.witness, "Write the game result as JSON here");

  TransformFlags tf;
  auto* transform = app.add_subcommand("transform", "Transform a structure or formula");
  transform->add_option("--op", tf.op)
      ->required()
      ->check(CLI::IsMember({"unravel", "cut", "gensub", "restrict", "subtree", "gf-unravel", "guarded-cut",
                             "add-copies", "char-formula", "ra-relativize", "ra2fo", "relativize-ml"}));
  transform->add_option("--model", tf.model);
  transform->add_option("--point", tf.points);
  transform->add_option("--points", tf.points)->delimiter(',');
  transform->add_option("--formula", tf.formula);
  transform->add_option("--formula-file", tf.formula_file);
  transform->add_option("--depth", tf.depth);
  transform->add_option("--pred", tf.pred);
  transform->add_option("--count", tf.count);
  transform->add_option("--vocab", tf.vocab, "Comma-separated letters");
  transform->add_option("--tree", tf.tree, "add-copies: tree file[:root]");
  transform->add_option("--node", tf.node, "add-copies: node receiving the copies");
  transform->add_option("--out", tf.out);

  CheckFlags cf;
  auto* check = app.add_subcommand("check", "Run property suites");
  std::vector<std::string> allowed = harness::suite_names();
  allowed.push_back("all");
  check->add_option("--suite", cf.suites)->check(CLI::IsMember(allowed));
  check->add_option("--corpus", cf.corpus);
  check->add_option("--seed", cf.seed);
  check->add_option("--cases", cf.cases);
  check->add_option("--report", cf.report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(ev, out);
    if (*sat) return cmd_sat(sf, out);
    if (*equiv) return cmd_equiv(eq, out);
    if (*transform) return cmd_transform(tf, out);
    return cmd_check(cf, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kNoInput;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kDataError;
  } catch (const StructureError& e) {
    err << "structure error: " << e.what() << '\n';
    return kDataError;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace logicwb::cli
