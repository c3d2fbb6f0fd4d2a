// Command-line driver: graph construction, brute-force homology, symbolic
// formula prediction, formula-vs-homology verification, and table rendering.
//
// Exit codes: 0 success / all MATCH; 1 usage or input error; 2 MISMATCH or
// torsion found; 3 resource budget exceeded.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "myc/cache.hpp"
#include "myc/complex.hpp"
#include "myc/errors.hpp"
#include "myc/formulas.hpp"
#include "myc/graph.hpp"
#include "myc/homology.hpp"
#include "myc/homotopy.hpp"
#include "myc/sphere_wedge.hpp"
#include "myc/verify.hpp"

namespace {

using myc::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResource = 3;

// --- shared family plumbing ---------------------------------------------------

struct FamilyOpts {
  std::string family;  // path | cycle | complete | knkm | grid | file
  int n = 0;
  int m = 0;
  std::string file;
};

const std::vector<std::string> kFamilies = {"path", "cycle", "complete",
                                            "knkm", "grid", "file"};

Graph build_family(const FamilyOpts& fo, std::string& params_out) {
  std::ostringstream params;
  Graph g;
  if (fo.family == "path") {
    g = myc::path(fo.n);
    params << "n=" << fo.n;
  } else if (fo.family == "cycle") {
    g = myc::cycle(fo.n);
    params << "n=" << fo.n;
  } else if (fo.family == "complete") {
    g = myc::complete(fo.n);
    params << "n=" << fo.n;
  } else if (fo.family == "knkm") {
    g = myc::categorical_product(myc::complete(fo.n), myc::complete(fo.m));
    params << "n=" << fo.n << " m=" << fo.m;
  } else if (fo.family == "grid") {
    g = myc::grid(fo.n, fo.m);
    params << "n=" << fo.n << " m=" << fo.m;
  } else if (fo.family == "file") {
    std::ifstream in(fo.file);
    if (!in) throw myc::error("cannot open edge-list file: " + fo.file);
    g = myc::read_edge_list(in);
    params << "file=" << fo.file;
  } else {
    throw myc::error("unknown family: " + fo.family);
  }
  params_out = params.str();
  return g;
}

void add_family_options(CLI::App* cmd, FamilyOpts& fo, bool as_flag) {
  if (as_flag) {
    cmd->add_option("--family", fo.family, "graph family")
        ->check(CLI::IsMember(kFamilies));
  } else {
    cmd->add_option("family", fo.family, "graph family")
        ->required()
        ->check(CLI::IsMember(kFamilies));
  }
  cmd->add_option("--n", fo.n, "primary size parameter");
  cmd->add_option("--m", fo.m, "secondary size parameter (knkm, grid)");
  cmd->add_option("--file", fo.file, "edge-list file (family=file)");
}

// Post-construction operators shared by `graph` and `homology`.
struct BuildOps {
  long long l = -1;  // mycielskian level; -1 = none
  long long r = 1;   // iterations
  bool cover = false;
};

Graph apply_ops(Graph g, const BuildOps& ops, std::string& params) {
  if (ops.r != 1 && ops.l < 0)
    throw myc::error("--r requires --l (mycielskian level)");
  if (ops.l >= 0) {
    if (ops.r < 0) throw myc::error("--r must be >= 0");
    g = myc::iterated_mycielskian(g, static_cast<int>(ops.l),
                                  static_cast<int>(ops.r));
    params += " l=" + std::to_string(ops.l);
    if (ops.r != 1) params += " r=" + std::to_string(ops.r);
  }
  if (ops.cover) {
    g = myc::kronecker_cover(g);
    params += " cover";
  }
  return g;
}

// --- variant flags --------------------------------------------------------------

myc::formulas::CoverVariant parse_cover_variant(const std::string& s) {
  return s == "printed" ? myc::formulas::CoverVariant::Printed
                        : myc::formulas::CoverVariant::Derived;
}

myc::formulas::CnVariant parse_cn_variant(const std::string& s) {
  return s == "printed" ? myc::formulas::CnVariant::Printed
                        : myc::formulas::CnVariant::Derived;
}

myc::formulas::PnVariant parse_pn_variant(const std::string& s) {
  return s == "printed" ? myc::formulas::PnVariant::Printed
                        : myc::formulas::PnVariant::Derived;
}

myc::formulas::ClosedReading parse_reading(const std::string& s) {
  if (s == "printed-outer") return myc::formulas::ClosedReading::PrintedTimesFPlusOne;
  if (s == "printed-inner")
    return myc::formulas::ClosedReading::PrintedTimesFPlusOneInside;
  return myc::formulas::ClosedReading::Derived;
}

int verdict_exit_code(myc::Verdict v) {
  switch (v) {
    case myc::Verdict::Match: return kExitOk;
    case myc::Verdict::Mismatch:
    case myc::Verdict::TorsionFound: return kExitMismatch;
    case myc::Verdict::ResourceExceeded: return kExitResource;
  }
  return kExitUsage;
}

// --- subcommand: graph ----------------------------------------------------------

struct GraphArgs {
  FamilyOpts fo;
  BuildOps ops;
  std::string out;
};

int run_graph(const GraphArgs& a) {
  std::string params;
  Graph g = apply_ops(build_family(a.fo, params), a.ops, params);
  if (a.out.empty()) {
    myc::write_edge_list(g, std::cout);
  } else {
    std::ofstream out(a.out);
    if (!out) throw myc::error("cannot open output file: " + a.out);
    myc::write_edge_list(g, out);
  }
  return kExitOk;
}

// --- subcommand: homology -------------------------------------------------------

struct HomologyArgs {
  std::string positional_file;
  FamilyOpts fo;
  BuildOps ops;
  bool no_fold = false;
  long long max_faces = myc::kDefaultFaceBudget;
  bool as_json = false;
  bool ascii = false;
  bool verbose = false;
};

int run_homology(const HomologyArgs& a) {
  FamilyOpts fo = a.fo;
  if (!a.positional_file.empty()) {
    if (!fo.family.empty())
      throw myc::error("give either an edge-list file or --family, not both");
    fo.family = "file";
    fo.file = a.positional_file;
  }
  if (fo.family.empty())
    throw myc::error("no input graph: give an edge-list file or --family");

  std::string params;
  Graph g = apply_ops(build_family(fo, params), a.ops, params);

  myc::VerifyOptions opts;
  opts.max_faces = a.max_faces;
  opts.fold = !a.no_fold;
  opts.cache_dir = myc::ResultCache::from_env().dir();
  myc::ResultCache cache(opts.cache_dir);

  const auto t0 = std::chrono::steady_clock::now();
  myc::ComputedHomology got = myc::brute_homology(g, opts, cache);
  const long long millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();

  if (a.verbose) {
    std::cerr << "cache: " << cache.hits() << " hits, " << cache.misses()
              << " misses; fold removed " << got.fold_removed << " vertices; "
              << millis << " ms\n";
  }

  if (a.as_json) {
    json j;
    j["instance"] = json{{"family", fo.family},
                         {"params", params},
                         {"n_vertices", g.n},
                         {"n_edges", g.edge_count()},
                         {"graph_hash", myc::canonical_hash(g)}};
    j["computed"] = got.profile.to_string(true);
    j["fold_removed"] = got.fold_removed;
    j["millis"] = millis;
    j["cache_hit"] = got.cache_hit;
    std::cout << j.dump(2) << '\n';
  } else if (got.profile.trivial()) {
    std::cout << "contractible\n";
  } else {
    std::cout << got.profile.to_string(a.ascii) << '\n';
  }
  return got.profile.torsion_free() ? kExitOk : kExitMismatch;
}

// --- subcommand: predict --------------------------------------------------------

struct PredictArgs {
  std::string formula;
  long long n = -1, m = -1, l = -1, r = -1;
  std::vector<std::string> binds;
  std::string variant = "derived";
  std::string reading = "derived";
  bool closed = false;
  bool as_json = false;
  bool ascii = false;
};

long long require_param(long long v, const char* name) {
  if (v < 0) throw myc::error(std::string("missing required parameter --") + name);
  return v;
}

int run_predict(const PredictArgs& a) {
  auto id = myc::formulas::formula_from_name(a.formula);
  if (!id) throw myc::error("unknown formula id: " + a.formula);

  using myc::formulas::FormulaId;
  std::optional<myc::SphereWedge> wedge;
  myc::ExprPtr expr;

  switch (*id) {
    case FormulaId::Kn:
      wedge = myc::formulas::kn_formula(require_param(a.n, "n"),
                                        require_param(a.l, "l"));
      break;
    case FormulaId::Knkm:
      wedge = myc::formulas::knkm_formula(require_param(a.n, "n"),
                                          require_param(a.m, "m"),
                                          require_param(a.l, "l"));
      break;
    case FormulaId::Cn:
      wedge = myc::formulas::cn_formula(require_param(a.n, "n"),
                                        require_param(a.l, "l"),
                                        parse_cn_variant(a.variant));
      break;
    case FormulaId::Pn:
      wedge = myc::formulas::pn_formula(require_param(a.n, "n"),
                                        require_param(a.l, "l"),
                                        parse_pn_variant(a.variant));
      break;
    case FormulaId::MainMu:
      expr = myc::formulas::mycielskian_expr(require_param(a.l, "l"));
      break;
    case FormulaId::CoverMu:
      expr = myc::formulas::cover_mycielskian_expr(require_param(a.l, "l"),
                                                   parse_cover_variant(a.variant));
      break;
    case FormulaId::Iter:
      expr = myc::formulas::iterated_expr(require_param(a.l, "l"),
                                          require_param(a.r, "r"),
                                          parse_cover_variant(a.variant));
      break;
    case FormulaId::IterClosed:
      expr = myc::formulas::iterated_closed_expr(require_param(a.l, "l"),
                                                 require_param(a.r, "r"),
                                                 parse_reading(a.reading));
      break;
    case FormulaId::IterCover:
      if (a.closed) {
        expr = myc::formulas::iterated_cover_closed_expr(
            require_param(a.l, "l"), require_param(a.r, "r"),
            parse_cover_variant(a.variant));
      } else {
        expr = myc::formulas::iterated_cover_expr(require_param(a.l, "l"),
                                                  require_param(a.r, "r"),
                                                  parse_cover_variant(a.variant));
      }
      break;
    case FormulaId::Mu01: {
      const long long l = require_param(a.l, "l");
      const long long r = require_param(a.r, "r");
      if (l == 0) {
        expr = myc::formulas::mu0_iterated_expr(r);
      } else if (l == 1) {
        expr = myc::formulas::mu1_iterated_expr(r);
      } else {
        throw myc::error("formula mu01 is defined for l = 0 and l = 1 only");
      }
      break;
    }
    case FormulaId::Bipartite:
      expr = myc::formulas::bipartite_expr(require_param(a.l, "l"));
      break;
  }

  std::map<std::string, myc::SphereWedge> bindings;
  for (const std::string& b : a.binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0)
      throw myc::error("malformed --bind (expected NAME=EXPR): " + b);
    bindings[b.substr(0, eq)] = myc::evaluate(myc::parse_expr(b.substr(eq + 1)));
  }

  std::string expr_str;
  if (expr) {
    expr = myc::simplify(expr);
    expr_str = myc::expr_to_string(expr);
    if (!bindings.empty() || myc::is_closed(expr))
      wedge = myc::evaluate(expr, bindings);
  }

  if (a.as_json) {
    json j;
    j["formula"] = a.formula;
    json params = json::object();
    if (a.n >= 0) params["n"] = a.n;
    if (a.m >= 0) params["m"] = a.m;
    if (a.l >= 0) params["l"] = a.l;
    if (a.r >= 0) params["r"] = a.r;
    j["params"] = params;
    j["expression"] = expr ? json(expr_str) : json(nullptr);
    j["wedge"] = wedge ? json(wedge->to_string(true)) : json(nullptr);
    j["profile"] = wedge
                       ? json(myc::profile_of_sphere_wedge(*wedge).to_string(true))
                       : json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else if (wedge) {
    std::cout << wedge->to_string(a.ascii) << '\n';
  } else {
    std::cout << expr_str << '\n';
  }
  return kExitOk;
}

// --- subcommand: verify ---------------------------------------------------------

struct VerifyArgs {
  FamilyOpts fo;
  long long l = -1;
  long long r = -1;
  bool cover = false;
  bool no_fold = false;
  long long max_faces = myc::kDefaultFaceBudget;
  std::string variant = "derived";
  std::string reading = "derived";
  bool as_json = false;
  bool ascii = false;
  bool verbose = false;
};

int run_verify(const VerifyArgs& a) {
  if (a.fo.family.empty())
    throw myc::error("--family is required");
  if (a.cover && a.r >= 0)
    throw myc::error("--cover cannot be combined with --r");

  std::string params;
  Graph base = build_family(a.fo, params);

  myc::VerifyOptions opts;
  opts.max_faces = a.max_faces;
  opts.fold = !a.no_fold;
  opts.cache_dir = myc::ResultCache::from_env().dir();

  myc::InstanceLabel label;
  label.family = a.fo.family + (a.cover ? "-cover" : "");
  label.params = params;

  myc::VerificationReport rep;
  const long long l = require_param(a.l, "l");
  if (a.cover) {
    rep = myc::verify_cover(base, l, opts, label, parse_cover_variant(a.variant));
  } else if (a.r >= 0) {
    rep = myc::verify_iterated(base, l, a.r, opts, label,
                               parse_cover_variant(a.variant),
                               parse_reading(a.reading));
  } else {
    rep = myc::verify_mycielskian(base, l, opts, label);
  }

  if (a.verbose)
    std::cerr << "wall " << rep.millis << " ms; cache_hit="
              << (rep.cache_hit ? "true" : "false") << "; fold removed "
              << rep.fold_removed << " vertices\n";

  if (a.as_json) {
    std::cout << rep.to_json() << '\n';
  } else {
    std::cout << rep.to_text(a.ascii) << '\n';
  }
  return verdict_exit_code(rep.verdict);
}

// --- subcommand: table ----------------------------------------------------------

struct TableArgs {
  std::string name = "cn";
  std::string n_range;
  std::string l_range;
  std::string variant = "printed";
  bool no_fold = false;
  long long max_faces = myc::kDefaultFaceBudget;
  bool as_json = false;
  bool ascii = false;
};

std::pair<long long, long long> parse_range(const std::string& text,
                                            const char* flag) {
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    try {
      const long long a = std::stoll(text.substr(0, dots));
      const long long b = std::stoll(text.substr(dots + 2));
      if (a <= b) return {a, b};
    } catch (const std::exception&) {
    }
  } else {
    try {
      const long long a = std::stoll(text);
      return {a, a};
    } catch (const std::exception&) {
    }
  }
  throw myc::error(std::string("malformed range for ") + flag + ": '" + text +
                   "' (expected a..b with a <= b)");
}

int run_table(const TableArgs& a) {
  const auto [n_lo, n_hi] = parse_range(a.n_range, "--n-range");
  const auto [l_lo, l_hi] = parse_range(a.l_range, "--l-range");

  myc::VerifyOptions opts;
  opts.max_faces = a.max_faces;
  opts.fold = !a.no_fold;
  opts.cache_dir = myc::ResultCache::from_env().dir();
  myc::ResultCache cache(opts.cache_dir);

  struct Cell {
    long long n = 0, l = 0;
    std::string predicted;  // wedge string for the selected variant
    std::string computed;   // profile string, "-" if unavailable
    myc::Verdict verdict = myc::Verdict::ResourceExceeded;
    bool divergent = false;  // printed and derived variants disagree here
    std::string other_variant;  // the unselected variant's wedge string
  };
  std::vector<Cell> cells;

  auto formula_at = [&](long long n, long long l, bool printed) {
    if (a.name == "cn")
      return myc::formulas::cn_formula(n, l,
                                       printed ? myc::formulas::CnVariant::Printed
                                               : myc::formulas::CnVariant::Derived);
    return myc::formulas::pn_formula(n, l,
                                     printed ? myc::formulas::PnVariant::Printed
                                             : myc::formulas::PnVariant::Derived);
  };

  bool any_mismatch = false, any_resource = false;
  for (long long n = n_lo; n <= n_hi; ++n) {
    for (long long l = l_lo; l <= l_hi; ++l) {
      Cell c;
      c.n = n;
      c.l = l;
      const bool want_printed = a.variant == "printed";
      const myc::SphereWedge selected = formula_at(n, l, want_printed);
      const myc::SphereWedge other = formula_at(n, l, !want_printed);
      c.predicted = selected.to_string(a.ascii);
      c.divergent = !(selected == other);
      if (c.divergent) c.other_variant = other.to_string(a.ascii);

      Graph base = a.name == "cn" ? myc::cycle(static_cast<int>(n))
                                  : myc::path(static_cast<int>(n));
      try {
        myc::ComputedHomology got = myc::brute_homology(
            myc::mycielskian(base, static_cast<int>(l)), opts, cache);
        c.computed = got.profile.to_string(a.ascii);
        if (!got.profile.torsion_free()) {
          c.verdict = myc::Verdict::TorsionFound;
        } else if (got.profile == myc::profile_of_sphere_wedge(selected)) {
          c.verdict = myc::Verdict::Match;
        } else {
          c.verdict = myc::Verdict::Mismatch;
        }
      } catch (const myc::resource_error&) {
        c.computed = "-";
        c.verdict = myc::Verdict::ResourceExceeded;
      }
      if (c.verdict == myc::Verdict::Mismatch ||
          c.verdict == myc::Verdict::TorsionFound)
        any_mismatch = true;
      if (c.verdict == myc::Verdict::ResourceExceeded) any_resource = true;
      cells.push_back(std::move(c));
    }
  }

  if (a.as_json) {
    json arr = json::array();
    for (const Cell& c : cells) {
      json j;
      j["family"] = a.name == "cn" ? "cycle" : "path";
      j["n"] = c.n;
      j["l"] = c.l;
      j["predicted"] = c.predicted;
      j["computed"] = c.computed;
      j["verdict"] = myc::verdict_name(c.verdict);
      j["variant"] = a.variant;
      j["known_divergence"] = c.divergent;
      if (c.divergent) j["other_variant"] = c.other_variant;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    auto mark = [&](myc::Verdict v) {
      switch (v) {
        case myc::Verdict::Match: return a.ascii ? "OK" : "✓";
        case myc::Verdict::Mismatch: return a.ascii ? "X" : "✗";
        case myc::Verdict::TorsionFound: return "T";
        case myc::Verdict::ResourceExceeded: return "R";
      }
      return "?";
    };
    const long long n_cols = l_hi - l_lo + 1;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{a.name == "cn" ? "n \\ l" : "n \\ l"};
    for (long long l = l_lo; l <= l_hi; ++l)
      header.push_back("l=" + std::to_string(l));
    rows.push_back(header);
    for (long long n = n_lo; n <= n_hi; ++n) {
      std::vector<std::string> row{"n=" + std::to_string(n)};
      for (long long l = l_lo; l <= l_hi; ++l) {
        const Cell& c = cells[static_cast<std::size_t>((n - n_lo) * n_cols +
                                                       (l - l_lo))];
        row.push_back(c.predicted + " " + mark(c.verdict) +
                      (c.divergent ? "*" : ""));
      }
      rows.push_back(row);
    }
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::cout << row[i];
        if (i + 1 < row.size())
          std::cout << std::string(width[i] - row[i].size() + 2, ' ');
      }
      std::cout << '\n';
    }
    bool legend = false;
    for (const Cell& c : cells) {
      if (!c.divergent) continue;
      if (!legend) {
        std::cout << "* printed and derived variants disagree:\n";
        legend = true;
      }
      std::cout << "  n=" << c.n << " l=" << c.l << ": selected(" << a.variant
                << ") " << c.predicted << ", other " << c.other_variant
                << ", computed " << c.computed << '\n';
    }
  }

  if (any_mismatch) return kExitMismatch;
  if (any_resource) return kExitResource;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Independence-complex toolkit: generalized mycielskian constructions, "
      "brute-force integral homology, and closed-form predictions"};
  app.require_subcommand(1);

  GraphArgs ga;
  CLI::App* graph_cmd =
      app.add_subcommand("graph", "construct a graph and emit its edge list");
  add_family_options(graph_cmd, ga.fo, /*as_flag=*/false);
  graph_cmd->add_option("--l", ga.ops.l, "mycielskian level to apply");
  graph_cmd->add_option("--r", ga.ops.r, "mycielskian iterations (default 1)");
  graph_cmd->add_flag("--cover", ga.ops.cover,
                      "take the bipartite double cover last");
  graph_cmd->add_option("--out", ga.out, "output file (default stdout)");

  HomologyArgs ha;
  CLI::App* hom_cmd = app.add_subcommand(
      "homology", "reduced homology of a graph's independence complex");
  hom_cmd->add_option("input", ha.positional_file, "edge-list file");
  add_family_options(hom_cmd, ha.fo, /*as_flag=*/true);
  hom_cmd->add_option("--l", ha.ops.l, "mycielskian level to apply");
  hom_cmd->add_option("--r", ha.ops.r, "mycielskian iterations (default 1)");
  hom_cmd->add_flag("--cover", ha.ops.cover,
                    "take the bipartite double cover last");
  hom_cmd->add_flag("--no-fold", ha.no_fold, "disable fold preprocessing");
  hom_cmd->add_option("--max-faces", ha.max_faces, "face budget");
  hom_cmd->add_flag("--json", ha.as_json, "JSON output");
  hom_cmd->add_flag("--ascii", ha.ascii, "ASCII-only output");
  hom_cmd->add_flag("-v,--verbose", ha.verbose, "timing and cache counters");

  PredictArgs pa;
  CLI::App* pred_cmd = app.add_subcommand(
      "predict", "evaluate a closed-form prediction symbolically");
  pred_cmd->add_option("--formula", pa.formula, "formula id")
      ->required()
      ->check(CLI::IsMember({"main-mu", "cover-mu", "iter", "iter-closed",
                             "iter-cover", "mu01", "bipartite", "kn", "knkm",
                             "cn", "pn"}));
  pred_cmd->add_option("--n", pa.n, "n parameter");
  pred_cmd->add_option("--m", pa.m, "m parameter");
  pred_cmd->add_option("--l", pa.l, "mycielskian level");
  pred_cmd->add_option("--r", pa.r, "iteration count");
  pred_cmd->add_option("--bind", pa.binds,
                       "atom binding NAME=EXPR (repeatable)");
  pred_cmd->add_option("--variant", pa.variant, "printed | derived")
      ->check(CLI::IsMember({"printed", "derived"}));
  pred_cmd
      ->add_option("--reading", pa.reading,
                   "printed-outer | printed-inner | derived")
      ->check(CLI::IsMember({"printed-outer", "printed-inner", "derived"}));
  pred_cmd->add_flag("--closed", pa.closed,
                     "closed form instead of recursion (iter-cover)");
  pred_cmd->add_flag("--json", pa.as_json, "JSON output");
  pred_cmd->add_flag("--ascii", pa.ascii, "ASCII-only output");

  VerifyArgs va;
  CLI::App* ver_cmd = app.add_subcommand(
      "verify", "compare a formula prediction against brute-force homology");
  add_family_options(ver_cmd, va.fo, /*as_flag=*/true);
  ver_cmd->add_option("--l", va.l, "mycielskian level")->required();
  ver_cmd->add_option("--r", va.r, "iterations (selects the iterated check)");
  ver_cmd->add_flag("--cover", va.cover, "verify the cover statement instead");
  ver_cmd->add_flag("--no-fold", va.no_fold, "disable fold preprocessing");
  ver_cmd->add_option("--max-faces", va.max_faces, "face budget");
  ver_cmd->add_option("--variant", va.variant, "printed | derived")
      ->check(CLI::IsMember({"printed", "derived"}));
  ver_cmd
      ->add_option("--reading", va.reading,
                   "printed-outer | printed-inner | derived")
      ->check(CLI::IsMember({"printed-outer", "printed-inner", "derived"}));
  ver_cmd->add_flag("--json", va.as_json, "JSON output");
  ver_cmd->add_flag("--ascii", va.ascii, "ASCII-only output");
  ver_cmd->add_flag("-v,--verbose", va.verbose, "timing and cache counters");

  TableArgs ta;
  CLI::App* tab_cmd = app.add_subcommand(
      "table", "render a formula-family table with a verdict per cell");
  tab_cmd->add_option("--name", ta.name, "table family: cn | pn")
      ->check(CLI::IsMember({"cn", "pn"}));
  tab_cmd->add_option("--n-range", ta.n_range, "rows, e.g. 3..7")->required();
  tab_cmd->add_option("--l-range", ta.l_range, "columns, e.g. 1..3")->required();
  tab_cmd->add_option("--variant", ta.variant,
                      "which variant the verdict compares: printed | derived")
      ->check(CLI::IsMember({"printed", "derived"}));
  tab_cmd->add_flag("--no-fold", ta.no_fold, "disable fold preprocessing");
  tab_cmd->add_option("--max-faces", ta.max_faces, "face budget");
  tab_cmd->add_flag("--json", ta.as_json, "JSON output");
  tab_cmd->add_flag("--ascii", ta.ascii, "ASCII-only output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (graph_cmd->parsed()) return run_graph(ga);
    if (hom_cmd->parsed()) return run_homology(ha);
    if (pred_cmd->parsed()) return run_predict(pa);
    if (ver_cmd->parsed()) return run_verify(va);
    if (tab_cmd->parsed()) return run_table(ta);
  } catch (const myc::resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const myc::torsion_error& e) {
    std::cerr << "error: " << e.what() << " (profile: " << e.profile << ")\n";
    return kExitMismatch;
  } catch (const myc::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
