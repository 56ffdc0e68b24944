#include <filesystem>
#include <functional>
#include <set>

#include "doctest.h"
#include "zxr/derived.hpp"
#include "zxr/graphstate.hpp"
#include "zxr/rules.hpp"
#include "zxr/semantics.hpp"
#include "zxr/zxd.hpp"

using namespace zxr;

namespace {

Anchor ids(const std::string& prefix, int n) {
  Anchor a;
  for (int k = 1; k <= n; ++k) a.push_back(prefix + std::to_string(k));
  return a;
}

bool same_semantics(const Diagram& a, const Diagram& b, int n = 1) {
  return equal_up_to_scalar(evaluate(a, {n}), evaluate(b, {n}));
}

// Number of distinct simple cycles of the given length among spiders.
int spider_cycles(const Diagram& d, std::size_t len) {
  std::vector<NodeId> sp;
  for (const auto& id : d.node_ids())
    if (d.is_spider(id)) sp.push_back(id);
  std::set<std::set<std::pair<NodeId, NodeId>>> found;
  std::vector<NodeId> path;
  std::function<void(const NodeId&)> walk = [&](const NodeId& v) {
    if (path.size() == len) {
      if (d.edge_count(v, path.front()) == 0) return;
      std::set<std::pair<NodeId, NodeId>> es;
      for (std::size_t i = 0; i < len; ++i) es.insert(std::minmax(path[i], path[(i + 1) % len]));
      found.insert(es);
      return;
    }
    for (const auto& w : d.neighbours(v)) {
      if (!d.is_spider(w) || std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      walk(w);
      path.pop_back();
    }
  };
  for (const auto& s : sp) {
    path = {s};
    walk(s);
  }
  return static_cast<int>(found.size());
}

std::pair<int, int> spider_counts(const Diagram& d) {
  int nodes = 0, edges = 0;
  for (const auto& id : d.node_ids())
    if (d.is_spider(id)) ++nodes;
  for (const auto& [a, b] : d.edges())
    if (d.is_spider(a) && d.is_spider(b)) ++edges;
  return {nodes, edges};
}

const ShippedScript& shipped(const std::string& file) {
  static const auto all = shipped_scripts();
  for (const auto& s : all)
    if (s.file == file) return s;
  throw std::out_of_range(file);
}

}  // namespace

TEST_CASE("empty script replays to its start") {
  const Diagram d = hopf_lhs();
  CHECK(iso_equal(replay(ProofScript{}, d), d));
}

TEST_CASE("hopf derivation") {
  const Diagram out = replay(hopf_script());
  CHECK(iso_equal(out, hopf_rhs()));
}

TEST_CASE("complete bipartite reductions") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const Diagram k = knm_diagram(m, n);
      const auto der = reduce_complete_bipartite(k, ids("r", m), ids("g", n));
      CHECK(iso_equal(der.result, p2_diagram(m, n)));
      CHECK(same_semantics(der.result, k, 1));
      CHECK(same_semantics(der.result, k, 2));
      CHECK(iso_equal(replay(der.script, k), der.result));
    }
  // The 2 x 2 case is one bialgebra step.
  const auto k22 = reduce_complete_bipartite(knm_diagram(2, 2), ids("r", 2), ids("g", 2));
  REQUIRE(k22.script.steps.size() == 1);
  CHECK(k22.script.steps[0].rule == "bialgebra");
  CHECK_THROWS_AS(reduce_complete_bipartite(cycle_diagram(6), {"x1", "x2", "x3"}, {"y1", "y2", "y3"}),
                  std::invalid_argument);
}

TEST_CASE("even cycle reductions") {
  const auto c4 = reduce_even_cycle(cycle_diagram(4), cycle_order(4));
  REQUIRE(c4.script.steps.size() == 1);
  CHECK(c4.script.steps[0].rule == "bialgebra");
  CHECK(is_bipartite_form(c4.result));

  const auto c6 = reduce_even_cycle(cycle_diagram(6), cycle_order(6));
  CHECK(c6.script.steps.empty());
  CHECK(iso_equal(c6.result, cycle_diagram(6)));

  const auto c8 = reduce_even_cycle(cycle_diagram(8), cycle_order(8));
  CHECK(same_semantics(c8.result, cycle_diagram(8)));
  CHECK(same_semantics(c8.result, c8_hexagon_form()));
  CHECK(same_semantics(c8.result, c8_hexagon_form(), 2));
  for (const Diagram& d : {c8.result, c8_hexagon_form()}) {
    CHECK(spider_counts(d) == std::make_pair(10, 11));
    CHECK(spider_cycles(d, 6) == 2);
  }
  CHECK(iso_equal(replay(c8.script, cycle_diagram(8)), c8.result));

  CHECK_THROWS_AS(reduce_even_cycle(cycle_diagram(6), {"x1", "x2", "y1", "y2", "x3", "y3"}), std::invalid_argument);
  CHECK_THROWS_AS(reduce_even_cycle(cycle_diagram(4), {"x1", "y1", "x2"}), std::invalid_argument);
}

TEST_CASE("fixpoint scripts on stars") {
  const auto s1 = fixpoint_script(1);
  REQUIRE(s1.steps.size() == 1);
  CHECK(s1.steps[0].rule == "pi-state");
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const ProofScript s = fixpoint_script(n);
    REQUIRE(s.start);
    CHECK(iso_equal(*s.start, fixpoint_lhs(star_graph(n), "c")));
    CHECK(iso_equal(replay(s), graph_state(star_graph(n))));
  }
}

TEST_CASE("euler consequences need the gate") {
  CHECK_THROWS_AS(euler_nonuniqueness_check(RewriteConfig{false}), GateError);
  CHECK_THROWS_AS(pi2_colour_change_check(RewriteConfig{false}), GateError);
  CHECK(euler_nonuniqueness_check(RewriteConfig{true}));
  CHECK(pi2_colour_change_check(RewriteConfig{true}));
  CHECK_THROWS_AS(replay(euler_nonunique_script()), GateError);
}

TEST_CASE("euler consequence end states") {
  ReplayOptions on;
  on.cfg.euler_axiom = true;
  CHECK(same_semantics(replay(euler_nonunique_script(), on), euler_chain(Kind::X)));
  CHECK(same_semantics(h_diagram(), euler_chain(Kind::X)));
  CHECK_FALSE(same_semantics(h_diagram(), euler_chain(Kind::X), 2));
  CHECK(same_semantics(pi2_colour_lhs(), pi2_colour_rhs()));
  CHECK(same_semantics(replay(pi2_colour_script(), on), pi2_colour_rhs()));
}

TEST_CASE("triangle local complementation script") {
  ReplayOptions on;
  on.cfg.euler_axiom = true;
  const ProofScript s = triangle_lc_script();
  CHECK(iso_equal(replay(s, on), triangle_lc_rhs()));
  CHECK(same_semantics(triangle_lc_rhs(), graph_state(triangle_graph())));
  CHECK_FALSE(same_semantics(triangle_lc_rhs(), graph_state(triangle_graph()), 2));
}

TEST_CASE("local complementation implies the H decomposition") {
  const ProofScript s = derive_euler_from_lc_script();
  REQUIRE_FALSE(s.hypotheses.empty());
  CHECK_FALSE(s.uses_euler());
  const Diagram out = strip_scalars(replay(s), true);
  CHECK(iso_equal(out, euler_chain(Kind::Z)));
  CHECK(iso_equal(replay(euler3_to_h_script()), h_diagram()));
}

TEST_CASE("the hypothesis step breaks model 2") {
  const ProofScript s = derive_euler_from_lc_script();
  Diagram cur = *s.start;
  bool saw = false;
  for (const auto& st : s.steps) {
    const Hypothesis* h = find_hypothesis(st.rule);
    if (!h) {
      cur = apply(*rule_from_name(st.rule), cur, st.anchor, {}, st.params);
      continue;
    }
    const Diagram next = h->apply(cur, st.anchor);
    CHECK(same_semantics(cur, next, 1));
    if (st.rule == "lc-triangle") {
      CHECK_FALSE(same_semantics(cur, next, 2));
      saw = true;
    }
    cur = next;
  }
  CHECK(saw);
  CHECK(find_hypothesis("spider-fuse") == nullptr);
  CHECK_FALSE(rule_from_name("lc-triangle").has_value());
}

TEST_CASE("replay reports the failing step") {
  ProofScript s = fixpoint_script(3);
  s.steps[2].anchor = {"nope"};
  try {
    replay(s);
    FAIL("expected a replay error");
  } catch (const ReplayError& e) {
    CHECK(e.step == 3);
    CHECK_FALSE(e.drift);
  }
  try {
    replay(triangle_lc_script(), [] {
      ReplayOptions o;
      o.cfg.euler_axiom = true;
      o.models = {2};
      return o;
    }());
    FAIL("expected drift at n=2");
  } catch (const ReplayError& e) {
    CHECK(e.drift);
  }
}

TEST_CASE("script json lines round trip") {
  for (const auto& sh : shipped_scripts()) {
    const std::string text = to_jsonl(sh.script);
    const ProofScript back = parse_jsonl(text);
    CHECK(to_jsonl(back) == text);
    CHECK(back.steps.size() == sh.script.steps.size());
  }
  CHECK_THROWS(parse_jsonl("{\"rule\": 3}\n"));
  CHECK_THROWS(parse_jsonl("not json\n"));
}

TEST_CASE("shipped scripts replay to their expected end states") {
  for (const auto& sh : shipped_scripts()) {
    CAPTURE(sh.file);
    ReplayOptions opt;
    opt.cfg.euler_axiom = sh.needs_euler;
    const Diagram out = replay(sh.script, opt);
    if (sh.expected) CHECK(iso_equal(strip_scalars(out, true), strip_scalars(*sh.expected, true)));
  }
  CHECK(shipped("knm-3x4.json").expected.has_value());
}

TEST_CASE("proof files on disk match the generator") {
  const std::filesystem::path dir = std::filesystem::path(ZXR_SOURCE_DIR) / "proofs";
  std::size_t count = 0;
  for (const auto& sh : shipped_scripts()) {
    CAPTURE(sh.file);
    CHECK(read_text_file((dir / sh.file).string()) == to_jsonl(sh.script));
    ++count;
  }
  std::size_t on_disk = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") ++on_disk;
  CHECK(on_disk == count);
}
