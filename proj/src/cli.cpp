#include "wiener/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <vector>

#include "wiener/blocks.hpp"
#include "wiener/canonical.hpp"
#include "wiener/families.hpp"
#include "wiener/fixtures.hpp"
#include "wiener/formulas.hpp"
#include "wiener/graph_io.hpp"
#include "wiener/report_json.hpp"
#include "wiener/search.hpp"
#include "wiener/verify.hpp"

namespace wiener::cli {

namespace {

/// A usage problem detected after CLI11 parsing (conflicting flags, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  // compute
  std::string input;
  std::string file;
  std::string g6;
  // family / formula / check-lemma
  std::string spec;
  std::string formula_name;
  std::vector<std::int64_t> formula_args;
  bool list = false;
  std::string lemma;
  // search / verify
  int n = 0;
  std::optional<int> pendants;
  std::optional<int> cuts;
  std::string graph_class = "connected";
  std::string objective = "max";
  std::string theorem;
  bool json = false;
  bool audit = false;
  int threads = 0;
};

int default_threads() {
  if (const char* env = std::getenv("WIENER_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return 0;
}

std::string optional_text(const std::optional<int>& value) {
  return value ? std::to_string(*value) : "-";
}

Graph load_graph(const Options& o) {
  const int sources = !o.input.empty() + !o.file.empty() + !o.g6.empty();
  if (sources != 1) {
    throw UsageError("compute needs exactly one input: a path, a graph6 string, --file or --g6");
  }
  if (!o.file.empty()) return read_edge_list_file(o.file);
  if (!o.g6.empty()) return from_graph6(o.g6);
  std::error_code ec;
  if (std::filesystem::is_regular_file(o.input, ec)) return read_edge_list_file(o.input);
  return from_graph6(o.input);
}

std::string canonical_text(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    return "(not computed for n > " + std::to_string(kMaxCanonicalOrder) + ")";
  }
  return to_graph6(canonical_graph(g));
}

int do_compute(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const std::int64_t w = wiener(g);
  const BlockDecomposition blocks = block_decomposition(g);
  std::vector<int> sizes;
  for (VertexSet b : blocks.blocks) sizes.push_back(set_size(b));
  std::sort(sizes.rbegin(), sizes.rend());

  out << "n: " << g.order() << "\n";
  out << "m: " << g.size() << "\n";
  out << "W: " << w << "\n";
  out << "pendant vertices: " << set_size(pendant_vertices(g)) << "\n";
  out << "cut vertices: " << set_size(cut_vertices(g)) << "\n";
  out << "blocks: " << sizes.size() << " (sizes";
  for (int s : sizes) out << " " << s;
  int complete = 0;
  for (int b = 0; b < static_cast<int>(blocks.blocks.size()); ++b) {
    complete += blocks.is_complete_block(g, b) ? 1 : 0;
  }
  out << "; " << complete << " complete)\n";
  out << "graph6: " << to_graph6(g) << "\n";
  out << "canonical: " << canonical_text(g) << "\n";
  return kExitOk;
}

int do_family(const Options& o, std::ostream& out) {
  const FamilySpec spec = parse_family(o.spec);
  const Graph g = build(spec);
  out << "# family: " << to_string(spec) << "\n";
  out << "# graph6: " << to_graph6(g) << "\n";
  out << "# canonical: " << canonical_text(g) << "\n";
  out << "# W: " << wiener(g) << "\n";
  write_edge_list(out, g);
  return kExitOk;
}

int do_formula(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const formulas::FormulaInfo& info : formulas::catalog()) {
      out << info.name << " " << info.params << "\n";
    }
    return kExitOk;
  }
  if (o.formula_name.empty()) {
    throw UsageError("formula needs a name (see 'formula --list')");
  }
  out << formulas::evaluate(o.formula_name, o.formula_args) << "\n";
  return kExitOk;
}

void print_fixture(const LemmaFixture& f, std::ostream& out) {
  out << f.id << ": " << f.description << "\n";
  out << "  " << f.quantity << " before: " << f.before << "\n";
  out << "  " << f.quantity << " after:  " << f.after << "\n";
  out << "  expected: after " << to_string(f.expected) << " before -> "
      << (f.holds() ? "holds" : "VIOLATED") << "\n";
}

int do_check_lemma(const Options& o, std::ostream& out) {
  if (o.lemma == "all") {
    bool all = true;
    for (std::string_view id : lemma_ids()) {
      const LemmaFixture f = *run_lemma_fixture(id);
      print_fixture(f, out);
      all = all && f.holds();
    }
    return all ? kExitOk : kExitNegative;
  }
  const std::optional<LemmaFixture> f = run_lemma_fixture(o.lemma);
  if (!f) {
    std::string known;
    for (std::string_view id : lemma_ids()) known += " " + std::string(id);
    throw UsageError("unknown lemma id '" + o.lemma + "'; known ids: all" + known);
  }
  print_fixture(*f, out);
  return f->holds() ? kExitOk : kExitNegative;
}

void print_report(const SearchReport& r, std::ostream& out) {
  out << "constraint: n=" << r.constraint.n << " class=" << to_string(r.constraint.graph_class)
      << " pendants=" << optional_text(r.constraint.pendant_k)
      << " cuts=" << optional_text(r.constraint.cut_s) << "\n";
  out << "objective: " << to_string(r.objective) << "\n";
  if (r.empty_class()) {
    out << "extremal W: none (empty class)\n";
  } else {
    out << "extremal W: " << *r.extremal_value << "\n";
  }
  out << "witness classes: " << r.witness_classes << "\n";
  for (const Graph& w : r.witnesses) out << "  " << to_graph6(w) << "\n";
  out << "scanned: " << r.scanned << "\n";
  out << "matching: " << r.matching << "\n";
  out << "elapsed_ms: " << r.elapsed_ms << "\n";
}

SearchOptions search_options(const Options& o) {
  if (o.threads < 0) throw UsageError("--threads must be positive");
  return {o.threads > 0 ? o.threads : default_threads()};
}

int do_search(const Options& o, std::ostream& out) {
  SearchConstraint c;
  c.n = o.n;
  const std::optional<GraphClass> cls = parse_graph_class(o.graph_class);
  if (!cls) throw UsageError("unknown class '" + o.graph_class + "' (connected, trees, unicyclic)");
  c.graph_class = *cls;
  const std::optional<Objective> objective = parse_objective(o.objective);
  if (!objective) throw UsageError("unknown objective '" + o.objective + "' (min, max)");
  c.pendant_k = o.pendants;
  c.cut_s = o.cuts;
  const SearchReport r = extremal_search(c, *objective, search_options(o));
  if (o.json) {
    out << to_json(r) << "\n";
  } else {
    print_report(r, out);
  }
  return r.empty_class() ? kExitNegative : kExitOk;
}

/// Parameter values to sweep when a theorem's count is not given.
std::vector<int> sweep(TheoremId id, int n) {
  std::vector<int> values;
  auto range = [&](int lo, int hi) {
    for (int v = lo; v <= hi; ++v) values.push_back(v);
  };
  switch (id) {
    case TheoremId::MaxPendantI:
    case TheoremId::MinTree:
      range(2, n - 2);
      break;
    case TheoremId::MinPendantI:
    case TheoremId::MinCut:
      range(0, n - 3);
      break;
    case TheoremId::TreeCutMax:
      range(1, n - 2);
      break;
    case TheoremId::TreeCutMin:
      range(2, n - 2);
      break;
    default:
      break;
  }
  return values;
}

bool takes_pendants(TheoremId id) {
  return id == TheoremId::MaxPendantI || id == TheoremId::MinPendantI || id == TheoremId::MinTree;
}

bool takes_cuts(TheoremId id) {
  return id == TheoremId::MinCut || id == TheoremId::TreeCutMax || id == TheoremId::TreeCutMin;
}

void print_verdict(const TheoremVerdict& v, std::ostream& out) {
  out << "theorem: " << to_string(v.theorem) << " n=" << v.params.n;
  if (v.params.k) out << " k=" << *v.params.k;
  if (v.params.s) out << " s=" << *v.params.s;
  out << "\n";
  out << "predicted W: " << v.predicted_value << " (";
  for (std::size_t i = 0; i < v.predicted_families.size(); ++i) {
    out << (i ? ", " : "") << to_string(v.predicted_families[i]);
  }
  out << ")\n";
  out << "observed W: "
      << (v.observed.extremal_value ? std::to_string(*v.observed.extremal_value) : "none")
      << " (" << v.observed.witness_classes << " class"
      << (v.observed.witness_classes == 1 ? "" : "es") << ")\n";
  out << "value match: " << (v.value_match ? "yes" : "no")
      << ", witness match: " << (v.witness_match ? "yes" : "no")
      << ", unique: " << (v.unique ? "yes" : "no") << "\n";
  out << "verdict: " << (v.passed() ? "VERIFIED" : "FAILED") << "\n";
}

int do_verify(const Options& o, std::ostream& out) {
  const std::optional<TheoremId> id = parse_theorem(o.theorem);
  if (!id) {
    std::string known;
    for (TheoremId t : all_theorems()) known += " " + std::string(to_string(t));
    throw UsageError("unknown theorem '" + o.theorem + "'; known:" + known);
  }
  if (o.pendants && !takes_pendants(*id)) {
    throw UsageError(std::string(to_string(*id)) + " takes no --pendants");
  }
  if (o.cuts && !takes_cuts(*id)) {
    throw UsageError(std::string(to_string(*id)) + " takes no --cuts");
  }
  if (o.audit && *id != TheoremId::MinCut) {
    throw UsageError("--audit applies to min_cut only");
  }

  std::vector<TheoremParams> runs;
  const std::optional<int> given = takes_pendants(*id) ? o.pendants : o.cuts;
  if (!takes_pendants(*id) && !takes_cuts(*id)) {
    runs.push_back({o.n, std::nullopt, std::nullopt});
  } else {
    const std::vector<int> values = given ? std::vector<int>{*given} : sweep(*id, o.n);
    for (int v : values) {
      TheoremParams p{o.n, std::nullopt, std::nullopt};
      (takes_pendants(*id) ? p.k : p.s) = v;
      runs.push_back(p);
    }
  }
  if (runs.empty()) throw UsageError("no valid parameters for this n");

  const SearchOptions options = search_options(o);
  bool all = true;
  std::vector<std::string> json_items;
  for (const TheoremParams& p : runs) {
    const TheoremVerdict v = verify_theorem(*id, p, options);
    bool ok = v.passed();
    std::optional<AuditRecord> audit;
    if (o.audit) {
      audit = minimizer_structure_audit(v.observed);
      ok = ok && audit->passed();
    }
    all = all && ok;
    if (o.json) {
      std::string item = to_json(v);
      if (audit) {
        // Splice the audit in as a sibling of the verdict fields.
        item.pop_back();
        while (!item.empty() && (item.back() == '\n' || item.back() == ' ')) item.pop_back();
        item += ",\n  \"audit\": " + to_json(*audit, -1) + "\n}";
      }
      json_items.push_back(std::move(item));
    } else {
      print_verdict(v, out);
      if (audit) {
        out << "structure audit: " << audit->audited << " witness(es), "
            << (audit->passed() ? "all properties hold" : "VIOLATIONS") << "\n";
        for (const AuditViolation& viol : audit->violations) {
          out << "  witness " << viol.witness << ": " << viol.property << "\n";
        }
      }
      if (runs.size() > 1) out << "\n";
    }
  }
  if (o.json) {
    if (json_items.size() == 1) {
      out << json_items.front() << "\n";
    } else {
      out << "[\n";
      for (std::size_t i = 0; i < json_items.size(); ++i) {
        out << json_items[i] << (i + 1 < json_items.size() ? ",\n" : "\n");
      }
      out << "]\n";
    }
  }
  return all ? kExitOk : kExitNegative;
}

int do_selftest(std::ostream& out) {
  const GridCheck grid = formula_grid();
  out << "formula grid: " << grid.checked << " checks, " << grid.mismatches.size()
      << " mismatches\n";
  for (const std::string& m : grid.mismatches) out << "  " << m << "\n";
  std::size_t held = 0;
  for (std::string_view id : lemma_ids()) {
    const LemmaFixture f = *run_lemma_fixture(id);
    if (f.holds()) {
      ++held;
    } else {
      out << "  lemma fixture " << f.id << " violated: before " << f.before << ", after "
          << f.after << "\n";
    }
  }
  out << "lemma fixtures: " << held << "/" << lemma_ids().size() << " hold\n";
  const bool ok = grid.passed() && held == lemma_ids().size();
  out << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wiener index toolkit: families, closed forms, surgeries and extremal searches",
               "wiener"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "Invariants of a graph (edge-list file or graph6)");
  compute->add_option("input", o.input, "Edge-list path or graph6 string");
  compute->add_option("--file", o.file, "Edge-list file");
  compute->add_option("--g6", o.g6, "graph6 string");

  auto* family = app.add_subcommand("family", "Build a named family, e.g. 'T(2,3,4)' or 'C(3,3;7)'");
  family->add_option("spec", o.spec, "Family text")->required();

  auto* formula = app.add_subcommand("formula", "Evaluate a closed form exactly");
  formula->add_option("name", o.formula_name, "Formula name");
  formula->add_option("params", o.formula_args, "Integer parameters");
  formula->add_flag("--list", o.list, "List formulas and their parameters");

  auto* lemma = app.add_subcommand("check-lemma", "Run a surgery fixture and compare W before/after");
  lemma->add_option("id", o.lemma, "Fixture id, or 'all'")->required();

  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Vertex count")->required();
    cmd->add_option("--pendants,--k", o.pendants, "Number of pendant vertices");
    cmd->add_option("--cuts,--s", o.cuts, "Number of cut vertices");
    cmd->add_flag("--json", o.json, "Machine-readable output");
    cmd->add_option("--threads", o.threads, "Worker threads (default: WIENER_THREADS or all cores)");
  };
  auto* search = app.add_subcommand("search", "Exhaustive extremal search");
  add_search_flags(search);
  search->add_option("--class", o.graph_class, "connected | trees | unicyclic");
  search->add_option("--objective", o.objective, "min | max");

  auto* verify = app.add_subcommand("verify", "Check an extremal theorem by exhaustive search");
  add_search_flags(verify);
  verify->add_option("--theorem", o.theorem, "Theorem id, e.g. max_pendant_i")->required();
  verify->add_flag("--audit", o.audit, "Also audit minimizer block structure (min_cut)");

  auto* selftest = app.add_subcommand("selftest", "Formula grid and lemma fixtures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return do_compute(o, out);
    if (family->parsed()) return do_family(o, out);
    if (formula->parsed()) return do_formula(o, out);
    if (lemma->parsed()) return do_check_lemma(o, out);
    if (search->parsed()) return do_search(o, out);
    if (verify->parsed()) return do_verify(o, out);
    if (selftest->parsed()) return do_selftest(out);
  } catch (const ParseError& e) {
    err << "error: unparsable graph input: " << e.what() << "\n";
  } catch (const FamilyParameterError& e) {
    err << "error: invalid family: " << e.what() << "\n";
  } catch (const formulas::FormulaDomainError& e) {
    err << "error: formula domain: " << e.what() << "\n";
  } catch (const SearchRangeError& e) {
    err << "error: unsupported search size: " << e.what() << "\n";
  } catch (const UnsupportedSizeError& e) {
    err << "error: unsupported graph size: " << e.what() << "\n";
  } catch (const DisconnectedGraphError& e) {
    err << "error: graph is disconnected: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace wiener::cli
