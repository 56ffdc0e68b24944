#include <CLI11.hpp>
#include <fmt/core.h>

#include <fstream>
#include <iostream>
#include <optional>

#include "json.hpp"
#include "zxr/derived.hpp"
#include "zxr/graphstate.hpp"
#include "zxr/rules.hpp"
#include "zxr/semantics.hpp"
#include "zxr/sweep.hpp"
#include "zxr/verify.hpp"
#include "zxr/zxd.hpp"

using namespace zxr;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kResource = 3 };

// Exhaustive graph sweeps above this size are refused; use --random instead.
constexpr int kExhaustiveCap = 6;

struct Globals {
  int model_n = 1;
  double tol = 1e-9;
  bool enable_euler = false;
  int max_vertices = 5;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::string json_path;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

void write_report(const Globals& g, const json& report) {
  if (!g.json_path.empty()) emit(g.json_path, report.dump(2) + "\n");
}

std::string fmt_complex(cd z) { return fmt::format("{:.6g}{:+.6g}i", z.real(), z.imag()); }

int cmd_check_equal(const Globals& g, const std::string& a, const std::string& b) {
  const Diagram da = read_zxd_file(a);
  const Diagram db = read_zxd_file(b);
  const auto fit = fit_scalar(evaluate(da, {g.model_n}), evaluate(db, {g.model_n}), g.tol);
  fmt::print("model n={}\nequal: {}\nlambda: {}\nresidual: {:.3g}\n", g.model_n, fit.equal ? "yes" : "no",
             fmt_complex(fit.lambda), fit.opt_residual);
  write_report(g, {{"suite", "check-equal"},
                   {"passed", fit.equal},
                   {"model_n", g.model_n},
                   {"lambda", {fit.lambda.real(), fit.lambda.imag()}},
                   {"max_residual", fit.opt_residual}});
  return fit.equal ? kOk : kFail;
}

struct RewriteArgs {
  std::string input;
  std::string rule;
  std::vector<std::string> at;
  std::string phase;
  std::string colour;
  std::string script;
  std::string output;
  bool check = false;
};

int cmd_rewrite(const Globals& g, const RewriteArgs& a) {
  const RewriteConfig cfg{g.enable_euler};
  if (!a.script.empty()) {
    const ProofScript s = read_script_file(a.script);
    std::optional<Diagram> start;
    if (!a.input.empty()) start = read_zxd_file(a.input);
    else if (s.start) start = *s.start;
    else throw UsageError("script has no start diagram; give an input file");
    ReplayOptions opt;
    opt.cfg = cfg;
    opt.check = a.check;
    opt.tol = g.tol;
    try {
      const Diagram out = replay(s, *start, opt);
      emit(a.output, serialize_zxd(out));
      std::cerr << fmt::format("{}: {} steps replayed\n", s.name.empty() ? a.script : s.name, s.steps.size());
    } catch (const ReplayError& e) {
      std::cerr << fmt::format("step {} ({}): {}\n", e.step, e.rule, e.what());
      return kFail;
    }
    return kOk;
  }
  if (a.rule.empty()) throw UsageError("give --rule with --at, or --script");
  if (a.input.empty()) throw UsageError("--rule needs an input diagram");
  const auto rule = rule_from_name(a.rule);
  if (!rule) throw UsageError("unknown rule '" + a.rule + "'");
  RuleParams p;
  if (!a.phase.empty()) p.phase = Phase::parse(a.phase);
  if (!a.colour.empty()) {
    if (a.colour == "z") p.colour = Kind::Z;
    else if (a.colour == "x") p.colour = Kind::X;
    else throw UsageError("--colour must be z or x");
  }
  const Diagram in = read_zxd_file(a.input);
  Diagram out;
  try {
    out = apply(*rule, in, a.at, cfg, p);
  } catch (const MatchError& e) {
    std::cerr << "step 1 (" << a.rule << "): " << e.what() << "\n";
    return kFail;
  } catch (const GateError& e) {
    std::cerr << "step 1 (" << a.rule << "): " << e.what() << "\n";
    return kFail;
  }
  if (a.check && !equal_up_to_scalar(evaluate(in, {g.model_n}), evaluate(out, {g.model_n}), g.tol)) {
    std::cerr << fmt::format("step 1 ({}): semantics changed at n={}\n", a.rule, g.model_n);
    return kFail;
  }
  emit(a.output, serialize_zxd(out));
  return kOk;
}

SimpleGraph read_graph(const std::string& path) { return parse_edges(read_text_file(path)); }

int cmd_graph_state(const std::string& graph, const std::string& output) {
  emit(output, serialize_zxd(graph_state(read_graph(graph))));
  return kOk;
}

int cmd_local_comp(const std::string& graph, const std::string& vertex, const std::string& output) {
  const SimpleGraph gr = read_graph(graph);
  try {
    gr.index_of(vertex);
  } catch (const std::out_of_range&) {
    throw UsageError("unknown vertex '" + vertex + "'");
  }
  emit(output, serialize_edges(local_complement(gr, vertex)));
  return kOk;
}

int cmd_render(const std::string& input, const std::string& output) {
  emit(output, to_dot(read_zxd_file(input)));
  return kOk;
}

int cmd_sites(const std::string& input, const std::string& rule) {
  const Diagram d = read_zxd_file(input);
  std::vector<RuleId> rules;
  if (rule.empty()) {
    rules = all_rules();
  } else {
    const auto r = rule_from_name(rule);
    if (!r) throw UsageError("unknown rule '" + rule + "'");
    rules.push_back(*r);
  }
  for (RuleId r : rules)
    for (const auto& at : match_sites(r, d)) {
      std::string ids;
      for (const auto& id : at) ids += (ids.empty() ? "" : ",") + id;
      fmt::print("{} {}\n", rule_name(r), ids);
    }
  return kOk;
}

json rows_json(const std::vector<IndependenceRow>& rows) { return to_json(rows); }

int verify_axioms(const Globals& g, bool model_given) {
  const std::vector<int> models = model_given ? std::vector<int>{g.model_n} : std::vector<int>{1, 2, 3};
  std::vector<IndependenceRow> rows;
  bool ok = true;
  for (int n : models)
    for (RuleId r : all_rules()) {
      if (is_euler(r)) continue;
      const auto res = check_axiom(r, {n}, g.tol);
      rows.push_back({n, r, res.holds, res.max_residual, true});
      ok = ok && res.holds;
      fmt::print("n={} {:<14} {} residual {:.3g}\n", n, rule_name(r), res.holds ? "holds" : "FAILS",
                 res.max_residual);
    }
  write_report(g, {{"suite", "axioms"}, {"passed", ok}, {"rows", rows_json(rows)}});
  return ok ? kOk : kFail;
}

int verify_independence(const Globals& g) {
  const auto rows = independence_report({1, 2, 3});
  const bool ok = independence_as_expected(rows);
  for (const auto& r : rows) {
    const char* note = !r.expected ? "" : (*r.expected == r.holds ? "" : "  UNEXPECTED");
    fmt::print("n={} {:<14} {} residual {:.3g}{}\n", r.model_n, rule_name(r.axiom), r.holds ? "holds" : "fails",
               r.max_residual, note);
  }
  fmt::print("independence: {}\n", ok ? "as expected" : "NOT as expected");
  write_report(g, {{"suite", "independence"}, {"passed", ok}, {"rows", rows_json(rows)}});
  return ok ? kOk : kFail;
}

int verify_graphs(const Globals& g, GraphProperty p) {
  if (g.max_vertices < 1) throw UsageError("--max-vertices must be positive");
  if (g.max_vertices > kExhaustiveCap) {
    std::cerr << fmt::format("exhaustive sweep above {} vertices refused; use --random\n", kExhaustiveCap);
    return kResource;
  }
  std::vector<SimpleGraph> graphs;
  for (int n = 1; n <= g.max_vertices; ++n) {
    auto gs = all_graphs(n);
    graphs.insert(graphs.end(), gs.begin(), gs.end());
  }
  if (g.random > 0) {
    auto gs = random_graphs(g.random, g.max_vertices + 1, g.max_vertices + 2, g.seed);
    graphs.insert(graphs.end(), gs.begin(), gs.end());
  }
  const auto res = sweep_graphs(p, graphs, g.tol);
  const char* name = p == GraphProperty::Fixpoint ? "fixpoint" : "vdn";
  fmt::print("{}: {} graphs, {} checks, {} failures\n", name, res.graphs, res.checks, res.failures.size());
  json fails = json::array();
  for (const auto& f : res.failures) {
    fmt::print("  fails at {} in\n{}", f.vertex, serialize_edges(f.graph));
    fails.push_back({{"vertex", f.vertex}, {"graph", serialize_edges(f.graph)}});
  }
  write_report(g, {{"suite", name},
                   {"passed", res.passed()},
                   {"graphs", res.graphs},
                   {"checks", res.checks},
                   {"failures", fails}});
  return res.passed() ? kOk : kFail;
}

int cmd_verify(const Globals& g, const std::string& suite, bool model_given) {
  if (suite == "axioms") return verify_axioms(g, model_given);
  if (suite == "independence") return verify_independence(g);
  if (suite == "fixpoint") return verify_graphs(g, GraphProperty::Fixpoint);
  if (suite == "vdn") return verify_graphs(g, GraphProperty::Vdn);
  throw UsageError("unknown suite '" + suite + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rewrite, evaluate and verify ZX diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* model_opt = app.add_option("--model-n,--model", g.model_n, "Interpretation index n")
                        ->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "Tolerance for equality up to scalar");
  app.add_flag("--enable-euler", g.enable_euler, "Allow the euler and euler-inv rules");
  app.add_option("--max-vertices", g.max_vertices, "Largest graph size swept exhaustively");
  app.add_option("--random", g.random, "Extra random graphs one or two vertices above --max-vertices");
  app.add_option("--seed", g.seed, "Seed for random sweeps");
  app.add_option("--json", g.json_path, "Write a JSON report here");

  std::function<int()> run;

  auto* ce = app.add_subcommand("check-equal", "Compare two diagrams up to a scalar");
  std::string ce_a, ce_b;
  ce->add_option("a", ce_a)->required();
  ce->add_option("b", ce_b)->required();
  ce->callback([&] { run = [&] { return cmd_check_equal(g, ce_a, ce_b); }; });

  auto* rw = app.add_subcommand("rewrite", "Apply one rule or replay a proof script");
  RewriteArgs ra;
  rw->add_option("input", ra.input, "Input diagram; defaults to the script's start");
  rw->add_option("--rule", ra.rule);
  rw->add_option("--at", ra.at, "Anchor ids, comma separated")->delimiter(',');
  rw->add_option("--phase", ra.phase, "spider-split: phase moved to the new spider");
  rw->add_option("--colour", ra.colour, "id-insert: z or x");
  rw->add_option("--script", ra.script);
  rw->add_option("-o,--output", ra.output);
  rw->add_flag("--check", ra.check, "Check semantics after every step");
  rw->callback([&] { run = [&] { return cmd_rewrite(g, ra); }; });

  auto* gs = app.add_subcommand("graph-state", "Graph state diagram of an .edges file");
  std::string gs_in, gs_out;
  gs->add_option("graph", gs_in)->required();
  gs->add_option("-o,--output", gs_out);
  gs->callback([&] { run = [&] { return cmd_graph_state(gs_in, gs_out); }; });

  auto* lc = app.add_subcommand("local-comp", "Local complementation of an .edges file");
  std::string lc_in, lc_v, lc_out;
  lc->add_option("graph", lc_in)->required();
  lc->add_option("vertex", lc_v)->required();
  lc->add_option("-o,--output", lc_out);
  lc->callback([&] { run = [&] { return cmd_local_comp(lc_in, lc_v, lc_out); }; });

  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  vf->add_option("suite", suite)->required()->check(CLI::IsMember({"axioms", "fixpoint", "vdn", "independence"}));
  vf->callback([&] { run = [&] { return cmd_verify(g, suite, model_opt->count() > 0); }; });

  auto* rd = app.add_subcommand("render", "Graphviz DOT of a diagram");
  std::string rd_in, rd_out;
  rd->add_option("input", rd_in)->required();
  rd->add_option("-o,--output", rd_out);
  rd->callback([&] { run = [&] { return cmd_render(rd_in, rd_out); }; });

  auto* st = app.add_subcommand("sites", "List rule match sites");
  std::string st_in, st_rule;
  st->add_option("input", st_in)->required();
  st->add_option("--rule", st_rule);
  st->callback([&] { run = [&] { return cmd_sites(st_in, st_rule); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const CapExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const MatchError& e) {
    std::cerr << "no match: " << e.what() << "\n";
    return kFail;
  } catch (const GateError& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
