#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "zxr/rules.hpp"
#include "zxr/semantics.hpp"
#include "zxr/sweep.hpp"
#include "zxr/zxd.hpp"

using namespace zxr;

namespace {

Diagram d(const char* text) { return parse_zxd(text); }

Diagram rewrite(RuleId r, const char* text, Anchor at, RuleParams p = {}) {
  return apply(r, d(text), at, RewriteConfig{true}, p);
}

const char* kHopfLhs = "node a z\nnode b x\nin i\nout o\nedge i a\nedge a b\nedge a b\nedge b o\n";

}  // namespace

TEST_CASE("rule names round trip") {
  for (RuleId r : all_rules()) CHECK(rule_from_name(rule_name(r)) == r);
  CHECK(rule_name(RuleId::HPhaseSlide) == "h-phase");
  CHECK(rule_name(RuleId::IdentityRemove) == "id-remove");
  CHECK(rule_name(RuleId::EulerHInverse) == "euler-inv");
  CHECK_FALSE(rule_from_name("fuse").has_value());
  CHECK(is_euler(RuleId::EulerH));
  CHECK_FALSE(is_euler(RuleId::Hopf));
}

TEST_CASE("match_sites examples") {
  CHECK(match_sites(RuleId::Hopf, d(kHopfLhs)).size() == 1);
  const char* pp = "node a z 1/3\nnode b z 1/4\nin i\nout o\nedge i a\nedge a b\nedge b o\n";
  CHECK(match_sites(RuleId::SpiderFuse, d(pp)).size() == 1);
  CHECK(match_sites(RuleId::HCancel, d("node h h\nin i\nout o\nedge i h\nedge h o\n")).empty());
  // Sorted and duplicate-free.
  const auto sites = match_sites(RuleId::SpiderFuse, d("node a z\nnode b z\nnode c z\nout o\nedge a b\nedge b c\nedge c a\nedge a o\n"));
  CHECK(sites.size() == 3);
  CHECK(std::is_sorted(sites.begin(), sites.end(), [](const Anchor& x, const Anchor& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), IdLess{});
  }));
}

TEST_CASE("spider-fuse adds phases") {
  const Diagram out = rewrite(RuleId::SpiderFuse, "node a z 1/2\nnode b z 1/2\nin i\nout o\nedge i a\nedge a b\nedge b o\n", {"a", "b"});
  CHECK(iso_equal(out, d("node s z 1\nin i\nout o\nedge i s\nedge s o\n")));
}

TEST_CASE("spider-fuse drops the loops from parallel edges") {
  const Diagram out = rewrite(RuleId::SpiderFuse, "node a z\nnode b z\nin i\nout o\nedge i a\nedge a b\nedge a b\nedge a b\nedge b o\n", {"a", "b"});
  CHECK(iso_equal(out, d("node s z\nin i\nout o\nedge i s\nedge s o\n")));
}

TEST_CASE("spider-split moves legs and phase") {
  RuleParams p;
  p.phase = Phase(1, 4);
  const Diagram out =
      rewrite(RuleId::SpiderSplit, "node a z 1/2\nin i\nout o1 o2\nedge i a\nedge a o1\nedge a o2\n", {"a", "o1", "o2"}, p);
  CHECK(iso_equal(out, d("node a z 1/4\nnode b z 1/4\nin i\nout o1 o2\nedge i a\nedge a b\nedge b o1\nedge b o2\n")));
}

TEST_CASE("identity rules") {
  CHECK(iso_equal(rewrite(RuleId::IdentityRemove, "node a x\nin i\nout o\nedge i a\nedge a o\n", {"a"}),
                  d("in i\nout o\nedge i o\n")));
  RuleParams p;
  p.colour = Kind::X;
  CHECK(iso_equal(rewrite(RuleId::IdentityInsert, "in i\nout o\nedge i o\n", {"i", "o"}, p),
                  d("node a x\nin i\nout o\nedge i a\nedge a o\n")));
  CHECK_FALSE(check_anchor(RuleId::IdentityRemove, d("node a x 1\nin i\nout o\nedge i a\nedge a o\n"), {"a"}).empty());
}

TEST_CASE("self-loop drop") {
  CHECK(iso_equal(rewrite(RuleId::SelfLoopDrop, "node a z 1/2\nin i\nout o\nedge i a\nedge a a\nedge a o\n", {"a"}),
                  d("node a z 1/2\nin i\nout o\nedge i a\nedge a o\n")));
}

TEST_CASE("copy") {
  // A red phase-0 state copied through a green spider with two other legs.
  const Diagram out = rewrite(RuleId::Copy, "node s x\nnode t z 1/3\nout o1 o2\nedge s t\nedge t o1\nedge t o2\n", {"s", "t"});
  CHECK(iso_equal(out, d("node p x\nnode q x\nout o1 o2\nedge p o1\nedge q o2\n")));
  // A pi state copies to pi states.
  const Diagram pi = rewrite(RuleId::Copy, "node s z 1\nnode t x\nout o1 o2\nedge s t\nedge t o1\nedge t o2\n", {"s", "t"});
  CHECK(iso_equal(pi, d("node p z 1\nnode q z 1\nout o1 o2\nedge p o1\nedge q o2\n")));
}

TEST_CASE("bialgebra turns K22 into a path") {
  const char* lhs =
      "node a1 z\nnode a2 z\nnode b1 x\nnode b2 x\nin i1 i2\nout o1 o2\n"
      "edge i1 a1\nedge i2 a2\nedge a1 b1\nedge a1 b2\nedge a2 b1\nedge a2 b2\nedge b1 o1\nedge b2 o2\n";
  const Diagram out = rewrite(RuleId::Bialgebra, lhs, {"a1", "a2", "b1", "b2"});
  CHECK(iso_equal(out, d("node p x\nnode q z\nin i1 i2\nout o1 o2\nedge i1 p\nedge i2 p\nedge p q\nedge q o1\nedge q o2\n")));
  CHECK(equal_up_to_scalar(evaluate(d(lhs)), evaluate(out)));
  // And back.
  const Diagram back = apply(RuleId::BialgebraInverse, out, match_sites(RuleId::BialgebraInverse, out).at(0));
  CHECK(iso_equal(back, d(lhs)));
}

TEST_CASE("pi rules") {
  const Diagram out = rewrite(RuleId::PiCommute, "node p x 1\nnode t z\nin i\nout o1 o2\nedge i p\nedge p t\nedge t o1\nedge t o2\n", {"p", "t"});
  CHECK(iso_equal(out, d("node t z\nnode p1 x 1\nnode p2 x 1\nin i\nout o1 o2\nedge i t\nedge t p1\nedge t p2\nedge p1 o1\nedge p2 o2\n")));
  const Diagram st = rewrite(RuleId::PiState, "node p x 1\nnode t z\nout o\nedge t p\nedge p o\n", {"p", "t"});
  CHECK(iso_equal(st, d("node t z\nout o\nedge t o\n")));
}

TEST_CASE("hopf disconnects") {
  CHECK(iso_equal(rewrite(RuleId::Hopf, kHopfLhs, {"a", "b"}), d("node a z\nnode b x\nin i\nout o\nedge i a\nedge b o\n")));
}

TEST_CASE("H rules") {
  CHECK(iso_equal(rewrite(RuleId::HCancel, "node g h\nnode k h\nin i\nout o\nedge i g\nedge g k\nedge k o\n", {"g", "k"}),
                  d("in i\nout o\nedge i o\n")));
  CHECK(iso_equal(rewrite(RuleId::HColour, "node s z 1/2\nin i\nout o1 o2\nedge i s\nedge s o1\nedge s o2\n", {"s"}),
                  d("node s x 1/2\nnode h1 h\nnode h2 h\nnode h3 h\nin i\nout o1 o2\nedge i h1\nedge h1 s\nedge s h2\nedge h2 o1\nedge s h3\nedge h3 o2\n")));
  CHECK(iso_equal(rewrite(RuleId::HPhaseSlide, "node p x 1/3\nnode g h\nin i\nout o\nedge i p\nedge p g\nedge g o\n", {"p", "g"}),
                  d("node g h\nnode p z 1/3\nin i\nout o\nedge i g\nedge g p\nedge p o\n")));
  CHECK(iso_equal(rewrite(RuleId::HState, "node g h\nnode s x\nout o\nedge s g\nedge g o\n", {"g", "s"}),
                  d("node s z\nout o\nedge s o\n")));
}

TEST_CASE("euler gate") {
  const Diagram h = d("node g h\nin i\nout o\nedge i g\nedge g o\n");
  CHECK_THROWS_AS(apply(RuleId::EulerH, h, {"g"}), GateError);
  const Diagram out = apply(RuleId::EulerH, h, {"g"}, RewriteConfig{true});
  CHECK(iso_equal(out, d("node a z -1/2\nnode b x -1/2\nnode c z -1/2\nin i\nout o\nedge i a\nedge a b\nedge b c\nedge c o\n")));
  CHECK(equal_up_to_scalar(evaluate(h, {1}), evaluate(out, {1})));
  CHECK_FALSE(equal_up_to_scalar(evaluate(h, {2}), evaluate(out, {2})));
  const auto sites = match_sites(RuleId::EulerHInverse, out);
  REQUIRE(sites.size() == 1);
  CHECK(iso_equal(apply(RuleId::EulerHInverse, out, sites[0], RewriteConfig{true}), h));
}

TEST_CASE("mismatched anchors are rejected") {
  const Diagram h = d(kHopfLhs);
  CHECK_THROWS_AS(apply(RuleId::SpiderFuse, h, {"a", "b"}), MatchError);
  CHECK_THROWS_AS(apply(RuleId::Hopf, h, {"a"}), MatchError);
  CHECK_THROWS_AS(apply(RuleId::Hopf, h, {"a", "zz"}), MatchError);
}

TEST_CASE("normalize examples") {
  CHECK(iso_equal(normalize(d("node a z 1/4\nnode b z 1/2\nnode c z 1/4\nin i\nout o\nedge i a\nedge a b\nedge b c\nedge c o\n")),
                  d("node s z 1\nin i\nout o\nedge i s\nedge s o\n")));
  CHECK(iso_equal(normalize(d(kHopfLhs)), d("node a z\nnode b x\nin i\nout o\nedge i a\nedge b o\n")));
  const Diagram w = d("in i\nout o\nedge i o\n");
  CHECK(iso_equal(normalize(w), w));
}

TEST_CASE("normalize strictly shrinks the diagram") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const Diagram x = random_diagram(rng);
    std::vector<NormalizeStep> trace;
    normalize(x, &trace);
    Diagram cur = x;
    for (const auto& st : trace) {
      const Diagram next = apply(st.rule, cur, st.anchor);
      const auto before = std::make_pair(cur.node_count(), cur.edge_count());
      const auto after = std::make_pair(next.node_count(), next.edge_count());
      CHECK(after < before);
      cur = next;
    }
  }
}

TEST_CASE("normalize results agree semantically") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 100; ++k) {
    const Diagram x = random_diagram(rng);
    const Diagram a = normalize(x);
    const Diagram b = normalize(parse_zxd(serialize_zxd(x)));
    CHECK(equal_up_to_scalar(evaluate(a), evaluate(b)));
  }
}

TEST_CASE("bipartite form") {
  CHECK(is_bipartite_form(normalize(d("node a z\nnode b z\nnode c x\nin i\nout o\nedge i a\nedge a b\nedge b c\nedge c o\n"))));
  CHECK_FALSE(is_bipartite_form(d("node a z\nnode b z\nin i\nout o\nedge i a\nedge a b\nedge b o\n")));
  CHECK(is_bipartite_form(d("node a z\nout o\nedge a o\n")));
  CHECK_THROWS(is_bipartite_form(d("node g h\nin i\nout o\nedge i g\nedge g o\n")));
}

TEST_CASE("rules are sound in models 1 to 3 on random diagrams") {
  const auto res = sweep_rewrites(150, 77, {1, 2, 3});
  CHECK(res.rewrites > 1000);
  CHECK(res.failures.empty());
}

TEST_CASE("random diagrams reach every base rule") {
  std::mt19937_64 rng(7);
  std::map<RuleId, int> hits;
  for (int k = 0; k < 300; ++k) {
    const Diagram x = random_diagram(rng);
    for (RuleId r : all_rules())
      if (!is_euler(r)) hits[r] += static_cast<int>(match_sites(r, x).size());
  }
  for (RuleId r : all_rules())
    if (!is_euler(r)) CHECK_MESSAGE(hits[r] > 0, rule_name(r));
}
