#include "zxr/derived.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zxr/graphstate.hpp"
#include "zxr/semantics.hpp"
#include "zxr/zxd.hpp"

namespace zxr {

using nlohmann::json;

namespace {

const Phase kHalf{1, 2};
const Phase kMinusHalf{-1, 2};

bool is_colour(const Diagram& d, const NodeId& id, Kind k) {
  return d.has_node(id) && d.kind(id).kind == k;
}

// The unique neighbour of `id` satisfying `pred`.
template <class Pred>
NodeId neighbour_where(const Diagram& d, const NodeId& id, Pred pred) {
  for (const auto& w : d.neighbours(id))
    if (pred(w)) return w;
  throw std::logic_error("no matching neighbour of '" + id + "'");
}

std::vector<NodeId> outside_legs(const Diagram& d, const NodeId& id, const std::set<NodeId>& inside) {
  std::vector<NodeId> out;
  for (const auto& w : d.neighbours(id))
    if (!inside.count(w)) out.push_back(w);
  return out;
}

// Applies steps to a working diagram and records them.
class Scripter {
 public:
  Scripter(Diagram start, std::string name, std::string ref, bool euler = false)
      : cur_(std::move(start)) {
    script_.name = std::move(name);
    script_.ref = std::move(ref);
    script_.start = cur_;
    cfg_.euler_axiom = euler;
  }

  void declare(const std::string& hyp) { script_.hypotheses.push_back(hyp); }

  // Returns the ids created by the step, oldest first.
  std::vector<NodeId> step(RuleId r, Anchor at, RuleParams p = {}) {
    Diagram next = apply(r, cur_, at, cfg_, p);
    script_.steps.push_back({rule_name(r), std::move(at), p});
    return advance(std::move(next));
  }

  std::vector<NodeId> hyp(const std::string& name, Anchor at) {
    const Hypothesis* h = find_hypothesis(name);
    if (auto e = h->check(cur_, at); !e.empty()) throw MatchError(name + ": " + e);
    Diagram next = h->apply(cur_, at);
    script_.steps.push_back({name, std::move(at), {}});
    return advance(std::move(next));
  }

  const Diagram& cur() const { return cur_; }
  ProofScript& script() { return script_; }

 private:
  std::vector<NodeId> advance(Diagram next) {
    std::vector<NodeId> added;
    for (const auto& id : next.node_ids())
      if (!cur_.has_node(id)) added.push_back(id);
    cur_ = std::move(next);
    return added;
  }

  Diagram cur_;
  ProofScript script_;
  RewriteConfig cfg_;
};

RuleParams with_phase(Phase p) {
  RuleParams r;
  r.phase = p;
  return r;
}

RuleParams with_colour(Kind k) {
  RuleParams r;
  r.colour = k;
  return r;
}

NodeId new_of_kind(const Diagram& d, const std::vector<NodeId>& ids, Kind k) {
  for (const auto& id : ids)
    if (is_colour(d, id, k)) return id;
  throw std::logic_error("expected a new node of kind " + std::string(kind_name(k)));
}

NodeId new_next_to(const Diagram& d, const std::vector<NodeId>& ids, const NodeId& other) {
  for (const auto& id : ids)
    if (d.has_node(id) && d.edge_count(id, other) > 0) return id;
  throw std::logic_error("expected a new node next to '" + other + "'");
}

// ------------------------------------------------------------ hypotheses

std::string check_lc_triangle(const Diagram& d, const Anchor& at) {
  if (at.size() != 6) return "anchor must list u v w huv huw hvw";
  for (const auto& id : at)
    if (!d.has_node(id)) return "unknown node '" + id + "'";
  for (int i = 0; i < 3; ++i) {
    const auto& s = at[i];
    if (!is_colour(d, s, Kind::Z) || !d.kind(s).phase.is_zero()) return "'" + s + "' must be a phase-0 Z spider";
    if (d.degree(s) != 3 || d.self_loops(s) != 0) return "'" + s + "' must have three legs";
  }
  const std::pair<int, int> ends[] = {{0, 1}, {0, 2}, {1, 2}};
  for (int k = 0; k < 3; ++k) {
    const auto& h = at[3 + k];
    if (!is_colour(d, h, Kind::H)) return "'" + h + "' must be an H-box";
    if (d.edge_count(h, at[ends[k].first]) != 1 || d.edge_count(h, at[ends[k].second]) != 1)
      return "'" + h + "' does not join the expected pair";
  }
  return {};
}

void insert_on_leg(Diagram& d, const NodeId& s, const NodeId& w, NodeKind k) {
  d.remove_edge(s, w);
  const NodeId n = d.add_node(k);
  d.add_edge(s, n);
  d.add_edge(n, w);
}

Diagram apply_lc_triangle(const Diagram& d, const Anchor& at) {
  Diagram r = d;
  const std::set<NodeId> inside(at.begin(), at.end());
  std::vector<NodeId> third;
  for (int i = 0; i < 3; ++i) third.push_back(outside_legs(d, at[i], inside).front());
  r.remove_node(at[5]);
  insert_on_leg(r, at[0], third[0], NodeKind::x(kHalf));
  insert_on_leg(r, at[1], third[1], NodeKind::z(kMinusHalf));
  insert_on_leg(r, at[2], third[2], NodeKind::z(kMinusHalf));
  r.validate();
  return r;
}

std::string check_lc_h_form(const Diagram& d, const Anchor& at) {
  if (at.size() != 1) return "anchor must list one H-box";
  if (!is_colour(d, at[0], Kind::H)) return "'" + at[0] + "' must be an H-box";
  return {};
}

Diagram apply_lc_h_form(const Diagram& d, const Anchor& at) {
  Diagram r = d;
  const auto nb = d.neighbours(at[0]);
  r.remove_node(at[0]);
  const NodeId x1 = r.add_node(NodeKind::x(kMinusHalf));
  const NodeId z = r.add_node(NodeKind::z());
  const NodeId x2 = r.add_node(NodeKind::x(kMinusHalf));
  const NodeId st = r.add_node(NodeKind::x(kHalf));
  r.add_edge(nb[0], x1);
  r.add_edge(x1, z);
  r.add_edge(z, x2);
  r.add_edge(x2, nb[1]);
  r.add_edge(z, st);
  r.validate();
  return r;
}

// ------------------------------------------------------------ K_{m,n}

struct P2 {
  NodeId a;  // colour of the first set, carrying the second set's legs
  NodeId b;
};

P2 knm(Scripter& s, const std::vector<NodeId>& A, const std::vector<NodeId>& B) {
  if (A.size() == 1) {
    const NodeId a = A.front();
    const std::set<NodeId> bs(B.begin(), B.end());
    const NodeId ext = outside_legs(s.cur(), a, bs).front();
    const Kind kb = s.cur().kind(B.front()).kind;
    for (const auto& b : B) s.step(RuleId::IdentityRemove, {b});
    const auto nw = s.step(RuleId::IdentityInsert, {a, ext}, with_colour(kb));
    return {a, nw.front()};
  }
  if (B.size() == 1) {
    const P2 r = knm(s, B, A);
    return {r.b, r.a};
  }
  if (A.size() == 2 && B.size() == 2) {
    const Kind ka = s.cur().kind(A[0]).kind;
    const auto nw = s.step(RuleId::Bialgebra, {A[0], A[1], B[0], B[1]});
    return {new_of_kind(s.cur(), nw, ka), new_of_kind(s.cur(), nw, opposite(ka))};
  }
  if (B.size() == 2) {
    const P2 r = knm(s, B, A);
    return {r.b, r.a};
  }
  // Pull K_{|A|,|B|-1} out of A, reduce it, then reduce the K_{|A|,2} that remains.
  std::vector<NodeId> split;
  for (const auto& a : A) {
    Anchor at{a};
    at.insert(at.end(), B.begin() + 1, B.end());
    split.push_back(s.step(RuleId::SpiderSplit, at).front());
  }
  const P2 first = knm(s, split, std::vector<NodeId>(B.begin() + 1, B.end()));
  const P2 second = knm(s, A, {B.front(), first.b});
  s.step(RuleId::SpiderFuse, {second.a, first.a});
  return second;
}

// ------------------------------------------------------------ small builders

struct Builder {
  Diagram d;
  Builder& node(const NodeId& id, NodeKind k) {
    d.add_node(id, k);
    return *this;
  }
  Builder& in(const NodeId& id) {
    d.add_input(id);
    return *this;
  }
  Builder& out(const NodeId& id) {
    d.add_output(id);
    return *this;
  }
  Builder& edge(const NodeId& a, const NodeId& b) {
    d.add_edge(a, b);
    return *this;
  }
  Diagram done() {
    d.validate();
    return d;
  }
};

std::string idx(const char* prefix, int k) { return prefix + std::to_string(k); }

}  // namespace

// ------------------------------------------------------------ scripts and files

bool ProofScript::uses_euler() const {
  for (const auto& st : steps) {
    const auto r = rule_from_name(st.rule);
    if (r && is_euler(*r)) return true;
  }
  return false;
}

std::string to_jsonl(const ProofScript& s) {
  std::ostringstream os;
  json head = {{"name", s.name}, {"ref", s.ref}};
  if (s.start) head["start"] = serialize_zxd(*s.start);
  if (!s.hypotheses.empty()) head["hypotheses"] = s.hypotheses;
  os << head.dump() << '\n';
  for (const auto& st : s.steps) {
    json j = {{"rule", st.rule}, {"anchor", st.anchor}};
    if (st.params.phase) j["phase"] = st.params.phase->str();
    if (st.params.colour) j["colour"] = *st.params.colour == Kind::X ? "x" : "z";
    os << j.dump() << '\n';
  }
  return os.str();
}

ProofScript parse_jsonl(std::string_view text) {
  ProofScript s;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool seen_step = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("script line " + std::to_string(lineno) + ": " + why);
    };
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(e.what());
    }
    if (!j.is_object()) fail("expected a JSON object");
    try {
      if (!j.contains("rule")) {
        if (seen_step) fail("header must come before the steps");
        s.name = j.value("name", "");
        s.ref = j.value("ref", "");
        if (j.contains("start")) s.start = parse_zxd(j.at("start").get<std::string>());
        if (j.contains("hypotheses")) s.hypotheses = j.at("hypotheses").get<std::vector<std::string>>();
        continue;
      }
      seen_step = true;
      ProofStep st;
      st.rule = j.at("rule").get<std::string>();
      st.anchor = j.at("anchor").get<std::vector<std::string>>();
      if (j.contains("phase")) st.params.phase = Phase::parse(j.at("phase").get<std::string>());
      if (j.contains("colour")) {
        const auto c = j.at("colour").get<std::string>();
        if (c != "z" && c != "x") fail("colour must be z or x");
        st.params.colour = c == "x" ? Kind::X : Kind::Z;
      }
      s.steps.push_back(std::move(st));
    } catch (const json::exception& e) {
      fail(e.what());
    } catch (const ParseError& e) {
      fail("start diagram: " + std::string(e.what()));
    }
  }
  return s;
}

ProofScript read_script_file(const std::string& path) { return parse_jsonl(read_text_file(path)); }

const std::vector<Hypothesis>& hypotheses() {
  static const std::vector<Hypothesis> v = {
      {"lc-triangle",
       "local complementation of a triangle at u: drop the v-w edge, X(pi/2) on u, Z(-pi/2) on v and w",
       check_lc_triangle, apply_lc_triangle},
      {"lc-h-form", "H equals X(-pi/2) then Z carrying an X(pi/2) state then X(-pi/2)", check_lc_h_form,
       apply_lc_h_form},
  };
  return v;
}

const Hypothesis* find_hypothesis(std::string_view name) {
  for (const auto& h : hypotheses())
    if (h.name == name) return &h;
  return nullptr;
}

ReplayError::ReplayError(std::size_t s, std::string r, const std::string& what, bool d)
    : std::runtime_error("step " + std::to_string(s) + " (" + r + "): " + what),
      step(s),
      rule(std::move(r)),
      drift(d) {}

Diagram replay(const ProofScript& s, const Diagram& start, const ReplayOptions& opt) {
  std::vector<int> models = opt.models;
  if (models.empty()) {
    models.push_back(1);
    if (!s.uses_euler() && s.hypotheses.empty()) models.push_back(2);
  }
  Diagram cur = start;
  std::vector<CMatrix> before;
  if (opt.check)
    for (int n : models) before.push_back(evaluate(cur, {n}));
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& st = s.steps[i];
    Diagram next;
    try {
      if (auto r = rule_from_name(st.rule)) {
        next = apply(*r, cur, st.anchor, opt.cfg, st.params);
      } else if (std::find(s.hypotheses.begin(), s.hypotheses.end(), st.rule) != s.hypotheses.end()) {
        const Hypothesis* h = find_hypothesis(st.rule);
        if (!h) throw MatchError("no such hypothesis");
        if (auto e = h->check(cur, st.anchor); !e.empty()) throw MatchError(e);
        next = h->apply(cur, st.anchor);
      } else {
        throw MatchError("unknown rule or undeclared hypothesis");
      }
    } catch (const GateError&) {
      throw;
    } catch (const std::exception& e) {
      throw ReplayError(i + 1, st.rule, e.what());
    }
    if (opt.check) {
      for (std::size_t k = 0; k < models.size(); ++k) {
        CMatrix after = evaluate(next, {models[k]});
        if (!equal_up_to_scalar(before[k], after, opt.tol))
          throw ReplayError(i + 1, st.rule, "semantics changed in model n=" + std::to_string(models[k]),
                            true);
        before[k] = std::move(after);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Diagram replay(const ProofScript& s, const ReplayOptions& opt) {
  if (!s.start) throw std::invalid_argument("script '" + s.name + "' has no start diagram");
  return replay(s, *s.start, opt);
}

// ------------------------------------------------------------ bipartite graphs and cycles

Derivation reduce_complete_bipartite(const Diagram& d, const Anchor& reds, const Anchor& greens) {
  auto bad = [](const std::string& why) {
    return std::invalid_argument("not a complete bipartite anchor: " + why);
  };
  if (reds.empty() || greens.empty()) throw bad("both sides must be non-empty");
  std::set<NodeId> all(reds.begin(), reds.end());
  all.insert(greens.begin(), greens.end());
  if (all.size() != reds.size() + greens.size()) throw bad("ids repeat");
  for (const auto& id : all) {
    if (!d.has_node(id)) throw bad("unknown node '" + id + "'");
    if (!d.is_spider(id) || !d.kind(id).phase.is_zero()) throw bad("'" + id + "' is not a phase-0 spider");
    if (outside_legs(d, id, all).size() != 1) throw bad("'" + id + "' needs exactly one outside leg");
  }
  for (const auto& r : reds)
    if (!is_colour(d, r, Kind::X)) throw bad("'" + r + "' is not red");
  for (const auto& g : greens)
    if (!is_colour(d, g, Kind::Z)) throw bad("'" + g + "' is not green");
  for (const auto& r : reds) {
    for (const auto& g : greens)
      if (d.edge_count(r, g) != 1) throw bad(r + " and " + g + " must share one edge");
    for (const auto& r2 : reds)
      if (r != r2 && d.edge_count(r, r2) != 0) throw bad("two reds are adjacent");
  }
  for (const auto& g : greens)
    for (const auto& g2 : greens)
      if (g != g2 && d.edge_count(g, g2) != 0) throw bad("two greens are adjacent");

  Scripter s(d, "knm-" + std::to_string(reds.size()) + "x" + std::to_string(greens.size()),
             "K_{m,n} reduces to P_2");
  knm(s, reds, greens);
  return {s.cur(), s.script()};
}

Derivation reduce_even_cycle(const Diagram& d, const Anchor& cycle) {
  auto bad = [](const std::string& why) {
    return std::invalid_argument("not an alternating even cycle: " + why);
  };
  const std::size_t L = cycle.size();
  if (L < 4 || L % 2) throw bad("length must be even and at least 4");
  const std::set<NodeId> all(cycle.begin(), cycle.end());
  if (all.size() != L) throw bad("ids repeat");
  for (std::size_t i = 0; i < L; ++i) {
    const auto &a = cycle[i], &b = cycle[(i + 1) % L];
    if (!d.has_node(a)) throw bad("unknown node '" + a + "'");
    if (!d.is_spider(a) || !d.kind(a).phase.is_zero()) throw bad("'" + a + "' is not a phase-0 spider");
    if (d.degree(a) != 3 || outside_legs(d, a, all).size() != 1)
      throw bad("'" + a + "' needs two cycle legs and one outside leg");
    if (!d.has_node(b) || !d.is_spider(b) || d.kind(a).kind == d.kind(b).kind)
      throw bad("colours must alternate");
    if (d.edge_count(a, b) != 1) throw bad(a + " and " + b + " must share one edge");
  }

  Scripter s(d, "cycle-" + std::to_string(L), "even cycles into hexagons");
  std::vector<NodeId> c(cycle.begin(), cycle.end());
  while (c.size() > 6) {
    const std::size_t n = c.size();
    const NodeId last = c[n - 1];
    const auto nw = s.step(RuleId::BialgebraInverse, {c[0], c[1]});
    const NodeId rb = new_next_to(s.cur(), nw, c[2]);
    const NodeId gb = new_next_to(s.cur(), nw, last);
    s.step(RuleId::SpiderFuse, {c[2], rb});
    s.step(RuleId::SpiderFuse, {last, gb});
    const NodeId head = s.step(RuleId::SpiderSplit, {c[2], c[3], last}).front();
    const NodeId tail = s.step(RuleId::SpiderSplit, {last, c[n - 2], head}).front();
    std::vector<NodeId> next{head};
    next.insert(next.end(), c.begin() + 3, c.end() - 1);
    next.push_back(tail);
    c = std::move(next);
  }
  if (c.size() == 4) s.step(RuleId::Bialgebra, {c[0], c[2], c[1], c[3]});
  return {s.cur(), s.script()};
}

// ------------------------------------------------------------ fixpoint on stars

ProofScript fixpoint_script(int n) {
  if (n < 1) throw std::invalid_argument("fixpoint_script: n must be positive");
  Scripter s(fixpoint_lhs(star_graph(n), "c"), "fixpoint-s" + std::to_string(n),
             "fixpoint property on the star S_n");
  if (n == 1) {
    s.step(RuleId::PiState, {"r:c", "c"});
    return s.script();
  }
  for (int i = 1; i < n; ++i) s.step(RuleId::SpiderFuse, {idx("l", i), idx("r:l", i)});
  NodeId centre = "c", pi = "r:c";
  std::vector<NodeId> chain{"c"};
  for (int i = 1; i < n; ++i) {
    const NodeId h = idx("h:c:l", i);
    NodeId rest;
    if (i < n - 1) {
      Anchor at{centre};
      for (int j = i + 1; j < n; ++j) at.push_back(idx("h:c:l", j));
      rest = s.step(RuleId::SpiderSplit, at).front();
    }
    const auto nw = s.step(RuleId::PiCommute, {pi, centre});
    const NodeId on_h = new_next_to(s.cur(), nw, h);
    s.step(RuleId::HPhaseSlide, {on_h, h});
    s.step(RuleId::SpiderFuse, {idx("l", i), on_h});
    if (!rest.empty()) {
      pi = new_next_to(s.cur(), nw, rest);
      centre = rest;
      chain.push_back(rest);
    }
  }
  for (std::size_t k = 1; k < chain.size(); ++k) s.step(RuleId::SpiderFuse, {"c", chain[k]});
  return s.script();
}

// ------------------------------------------------------------ Hopf law from the axioms

ProofScript hopf_script() {
  Scripter s(hopf_lhs(), "hopf", "Hopf law from bialgebra, copy and the spider law");
  const NodeId g = s.step(RuleId::IdentityInsert, {"z", "x"}, with_colour(Kind::Z)).front();
  const NodeId r = s.step(RuleId::IdentityInsert, {"z", g}, with_colour(Kind::X)).front();
  const NodeId gl = s.step(RuleId::SpiderSplit, {g}).front();
  const NodeId rl = s.step(RuleId::SpiderSplit, {r}).front();
  const auto nw = s.step(RuleId::Bialgebra, {"z", g, "x", r});
  const NodeId red = new_of_kind(s.cur(), nw, Kind::X);
  const NodeId green = new_of_kind(s.cur(), nw, Kind::Z);
  const auto copies = s.step(RuleId::Copy, {gl, red});
  s.step(RuleId::SpiderFuse, {green, new_next_to(s.cur(), copies, green)});
  s.step(RuleId::Copy, {rl, green});
  return s.script();
}

// ------------------------------------------------------------ Euler consequences

ProofScript euler_nonunique_script() {
  Scripter s(h_diagram(), "euler-nonunique", "the H decomposition is not unique", true);
  const NodeId x1 = s.step(RuleId::IdentityInsert, {"i0", "h"}, with_colour(Kind::X)).front();
  const NodeId x2 = s.step(RuleId::SpiderSplit, {x1, "h"}, with_phase(kHalf)).front();
  s.step(RuleId::HPhaseSlide, {x2, "h"});
  s.step(RuleId::EulerH, {"h"});
  const NodeId z = neighbour_where(s.cur(), x2, [&](const NodeId& w) { return s.cur().is_spider(w); });
  s.step(RuleId::SpiderFuse, {z, x2});
  s.step(RuleId::IdentityRemove, {z});
  return s.script();
}

ProofScript pi2_colour_script() {
  Scripter s(pi2_colour_lhs(), "pi2-colour", "a pi/2 rotation in terms of the other colour", true);
  const NodeId leaf = s.step(RuleId::SpiderSplit, {"x"}, with_phase(kHalf)).front();
  const NodeId h = s.step(RuleId::HColour, {leaf}).front();
  s.step(RuleId::EulerH, {h});
  const NodeId zl = s.cur().neighbours(leaf).front();
  s.step(RuleId::SpiderFuse, {leaf, zl});
  const NodeId xm = s.cur().neighbours(leaf).front();
  const NodeId zf = neighbour_where(s.cur(), xm, [&](const NodeId& w) { return w != leaf; });
  const auto nw = s.step(RuleId::Copy, {leaf, xm});
  s.step(RuleId::SpiderFuse, {zf, nw.front()});
  return s.script();
}

bool euler_nonuniqueness_check(const RewriteConfig& cfg) {
  if (!cfg.euler_axiom) throw GateError("the non-uniqueness check needs the Euler axiom");
  ProofScript s = euler_nonunique_script();
  const Diagram end = replay(s, ReplayOptions{cfg, true, 1e-9, {1}});
  return iso_equal(end, euler_chain(Kind::X)) &&
         equal_up_to_scalar(evaluate(h_diagram()), evaluate(euler_chain(Kind::X)));
}

bool pi2_colour_change_check(const RewriteConfig& cfg) {
  if (!cfg.euler_axiom) throw GateError("the colour change check needs the Euler axiom");
  ProofScript s = pi2_colour_script();
  const Diagram end = replay(s, ReplayOptions{cfg, true, 1e-9, {1}});
  return iso_equal(end, pi2_colour_rhs()) &&
         equal_up_to_scalar(evaluate(pi2_colour_lhs()), evaluate(pi2_colour_rhs()));
}

// ------------------------------------------------------------ local complementation and Euler

ProofScript triangle_lc_script() {
  Scripter s(graph_state(triangle_graph()), "lc-triangle",
             "local complementation of the triangle", true);
  s.step(RuleId::HColour, {"u"});
  const auto e = s.step(RuleId::EulerH, {"h:v:w"});
  const NodeId za = new_next_to(s.cur(), e, "v");
  const NodeId zb = new_next_to(s.cur(), e, "w");
  const NodeId xm = new_of_kind(s.cur(), e, Kind::X);
  s.step(RuleId::SpiderFuse, {"v", za});
  s.step(RuleId::SpiderFuse, {"w", zb});
  s.step(RuleId::SpiderSplit, {"v", "o:v"}, with_phase(kMinusHalf));
  s.step(RuleId::SpiderSplit, {"w", "o:w"}, with_phase(kMinusHalf));
  const NodeId xs = s.step(RuleId::SpiderSplit, {xm}, with_phase(kMinusHalf)).front();
  const auto b = s.step(RuleId::Bialgebra, {"v", "w", "u", xm});
  const NodeId xp = new_of_kind(s.cur(), b, Kind::X);
  const NodeId zp = new_of_kind(s.cur(), b, Kind::Z);
  s.step(RuleId::HColour, {xp});
  const NodeId hs = s.step(RuleId::HColour, {xs}).front();
  const auto e2 = s.step(RuleId::EulerH, {hs});
  const NodeId zlast = new_next_to(s.cur(), e2, xs);
  const NodeId zfirst = new_next_to(s.cur(), e2, zp);
  const NodeId xmid = new_of_kind(s.cur(), e2, Kind::X);
  s.step(RuleId::SpiderFuse, {xs, zlast});
  const auto c = s.step(RuleId::Copy, {xs, xmid});
  s.step(RuleId::SpiderFuse, {zfirst, c.front()});
  s.step(RuleId::SpiderFuse, {zp, zfirst});
  s.step(RuleId::HColour, {zp});
  return s.script();
}

ProofScript euler3_to_h_script() {
  Scripter s(euler3_diagram(), "euler3-to-h", "the capped triangle equals H");
  const auto c = s.step(RuleId::Copy, {"k", "u"});
  for (const auto& st : c) {
    const NodeId h = s.cur().neighbours(st).front();
    const NodeId spider = neighbour_where(s.cur(), h, [&](const NodeId& w) { return w != st; });
    s.step(RuleId::HState, {h, st});
    s.step(RuleId::SpiderFuse, {spider, st});
  }
  s.step(RuleId::IdentityRemove, {"v"});
  s.step(RuleId::IdentityRemove, {"w"});
  return s.script();
}

ProofScript derive_euler_from_lc_script() {
  Scripter s(euler3_diagram(), "lc-implies-euler", "local complementation implies the H decomposition");
  s.declare("lc-triangle");
  s.declare("lc-h-form");
  const auto t = s.hyp("lc-triangle", {"u", "v", "w", "h:u:v", "h:u:w", "h:v:w"});
  const NodeId xu = new_of_kind(s.cur(), t, Kind::X);
  const NodeId zv = new_next_to(s.cur(), t, "v");
  const NodeId zw = new_next_to(s.cur(), t, "w");
  s.step(RuleId::SpiderFuse, {"k", xu});
  s.step(RuleId::HColour, {"u"});
  const NodeId hk = neighbour_where(s.cur(), "k", [](const NodeId&) { return true; });
  s.step(RuleId::HState, {hk, "k"});
  s.step(RuleId::SpiderFuse, {"v", zv});
  s.step(RuleId::SpiderFuse, {"w", zw});
  const NodeId hs = s.step(RuleId::HColour, {"k"}).front();
  const auto f = s.hyp("lc-h-form", {hs});
  const NodeId zc = new_of_kind(s.cur(), f, Kind::Z);
  const NodeId xnear = new_next_to(s.cur(), f, "u");
  const NodeId xfar = new_next_to(s.cur(), f, "k");
  const NodeId st = neighbour_where(s.cur(), zc, [&](const NodeId& w) { return s.cur().degree(w) == 1; });
  s.step(RuleId::SpiderFuse, {"k", xfar});
  const auto c = s.step(RuleId::Copy, {"k", zc});
  s.step(RuleId::SpiderFuse, {st, new_next_to(s.cur(), c, st)});
  s.step(RuleId::SpiderFuse, {xnear, new_next_to(s.cur(), c, xnear)});
  s.step(RuleId::SpiderFuse, {"u", xnear});
  return s.script();
}

// ------------------------------------------------------------ diagrams

Diagram knm_diagram(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("knm_diagram: sizes must be positive");
  Builder b;
  for (int j = 1; j <= m; ++j) b.node(idx("r", j), NodeKind::x()).in(idx("i", j)).edge(idx("i", j), idx("r", j));
  for (int i = 1; i <= n; ++i) b.node(idx("g", i), NodeKind::z()).out(idx("o", i)).edge(idx("g", i), idx("o", i));
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= n; ++i) b.edge(idx("r", j), idx("g", i));
  return b.done();
}

Diagram p2_diagram(int m, int n) {
  Builder b;
  b.node("G", NodeKind::z()).node("R", NodeKind::x()).edge("G", "R");
  for (int j = 1; j <= m; ++j) b.in(idx("i", j)).edge(idx("i", j), "G");
  for (int i = 1; i <= n; ++i) b.out(idx("o", i)).edge("R", idx("o", i));
  return b.done();
}

Anchor cycle_order(int len) {
  Anchor a;
  for (int k = 1; k <= len / 2; ++k) {
    a.push_back(idx("x", k));
    a.push_back(idx("y", k));
  }
  return a;
}

Diagram cycle_diagram(int len) {
  if (len < 4 || len % 2) throw std::invalid_argument("cycle_diagram: length must be even and >= 4");
  Builder b;
  const int n = len / 2;
  for (int k = 1; k <= n; ++k) {
    b.node(idx("x", k), NodeKind::x()).in(idx("i", k)).edge(idx("i", k), idx("x", k));
    b.node(idx("y", k), NodeKind::z()).out(idx("o", k)).edge(idx("y", k), idx("o", k));
  }
  const auto c = cycle_order(len);
  for (int i = 0; i < len; ++i) b.edge(c[i], c[(i + 1) % len]);
  return b.done();
}

Diagram c8_hexagon_form() {
  // Reds A B f g h, greens c d e i j; hexagons A-c-f-i-g-d and B-d-g-j-h-e.
  // cycle_diagram(8) lists x1 y1 x2 y2 x3 y3 x4 y4, which are the picture's
  // top/bottom spiders R1 G1 R2 G3 R4 G4 R3 G2.
  Builder b;
  for (const char* r : {"A", "B", "f", "g", "h"}) b.node(r, NodeKind::x());
  for (const char* g : {"c", "d", "e", "i", "j"}) b.node(g, NodeKind::z());
  for (int k = 1; k <= 4; ++k) b.in(idx("i", k));
  for (int k = 1; k <= 4; ++k) b.out(idx("o", k));
  b.edge("A", "c").edge("c", "f").edge("f", "i").edge("i", "g").edge("g", "d").edge("d", "A");
  b.edge("B", "d").edge("g", "j").edge("j", "h").edge("h", "e").edge("e", "B");
  b.edge("i1", "c").edge("i2", "A").edge("i3", "e").edge("i4", "B");
  b.edge("o1", "f").edge("o2", "j").edge("o3", "h").edge("o4", "i");
  return b.done();
}

Diagram hopf_lhs() {
  return Builder{}
      .node("z", NodeKind::z())
      .node("x", NodeKind::x())
      .in("i0")
      .out("o0")
      .edge("i0", "z")
      .edge("z", "x")
      .edge("z", "x")
      .edge("x", "o0")
      .done();
}

Diagram hopf_rhs() {
  return Builder{}.node("z", NodeKind::z()).node("x", NodeKind::x()).in("i0").out("o0").edge("i0", "z").edge("x", "o0").done();
}

Diagram h_diagram() {
  return Builder{}.node("h", NodeKind::h()).in("i0").out("o0").edge("i0", "h").edge("h", "o0").done();
}

Diagram euler_chain(Kind outer) {
  const Kind inner = opposite(outer);
  return Builder{}
      .node("a", {outer, kMinusHalf})
      .node("b", {inner, kMinusHalf})
      .node("c", {outer, kMinusHalf})
      .in("i0")
      .out("o0")
      .edge("i0", "a")
      .edge("a", "b")
      .edge("b", "c")
      .edge("c", "o0")
      .done();
}

Diagram pi2_colour_lhs() {
  return Builder{}.node("x", NodeKind::x(kHalf)).in("i0").out("o0").edge("i0", "x").edge("x", "o0").done();
}

Diagram pi2_colour_rhs() {
  return Builder{}
      .node("x", NodeKind::x())
      .node("z", NodeKind::z(kMinusHalf))
      .in("i0")
      .out("o0")
      .edge("i0", "x")
      .edge("x", "o0")
      .edge("x", "z")
      .done();
}

Diagram triangle_lc_rhs() {
  return Builder{}
      .node("u", NodeKind::z())
      .node("v", NodeKind::z(kMinusHalf))
      .node("w", NodeKind::z(kMinusHalf))
      .node("r", NodeKind::x(kHalf))
      .node("huv", NodeKind::h())
      .node("huw", NodeKind::h())
      .out("o:u")
      .out("o:v")
      .out("o:w")
      .edge("o:u", "r")
      .edge("r", "u")
      .edge("u", "huv")
      .edge("huv", "v")
      .edge("u", "huw")
      .edge("huw", "w")
      .edge("v", "o:v")
      .edge("w", "o:w")
      .done();
}

Diagram euler3_diagram() {
  Builder b;
  for (const char* s : {"u", "v", "w"}) b.node(s, NodeKind::z());
  for (const char* h : {"h:u:v", "h:u:w", "h:v:w"}) b.node(h, NodeKind::h());
  b.node("k", NodeKind::x()).in("i0").out("o0");
  b.edge("u", "h:u:v").edge("h:u:v", "v").edge("u", "h:u:w").edge("h:u:w", "w").edge("v", "h:v:w").edge("h:v:w", "w");
  b.edge("k", "u").edge("i0", "v").edge("w", "o0");
  return b.done();
}

std::vector<ShippedScript> shipped_scripts() {
  std::vector<ShippedScript> out;
  for (int n = 1; n <= 6; ++n)
    out.push_back({"fixpoint-s" + std::to_string(n) + ".json", fixpoint_script(n), graph_state(star_graph(n)), false});
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      Anchor reds, greens;
      for (int j = 1; j <= m; ++j) reds.push_back(idx("r", j));
      for (int i = 1; i <= n; ++i) greens.push_back(idx("g", i));
      auto dv = reduce_complete_bipartite(knm_diagram(m, n), reds, greens);
      out.push_back({"knm-" + std::to_string(m) + "x" + std::to_string(n) + ".json", dv.script, p2_diagram(m, n), false});
    }
  for (int len : {4, 6, 8}) {
    auto dv = reduce_even_cycle(cycle_diagram(len), cycle_order(len));
    out.push_back({"cycle-" + std::to_string(len) + ".json", dv.script, std::nullopt, false});
  }
  out.push_back({"hopf.json", hopf_script(), hopf_rhs(), false});
  out.push_back({"euler-nonunique.json", euler_nonunique_script(), euler_chain(Kind::X), true});
  out.push_back({"pi2-colour.json", pi2_colour_script(), pi2_colour_rhs(), true});
  out.push_back({"lc-triangle.json", triangle_lc_script(), triangle_lc_rhs(), true});
  out.push_back({"euler3-to-h.json", euler3_to_h_script(), h_diagram(), false});
  out.push_back({"lc-implies-euler.json", derive_euler_from_lc_script(), std::nullopt, false});
  return out;
}

}  // namespace zxr
