#include <string>

#include "zxr/rules.hpp"

namespace zxr {

namespace {

// Small builder over explicit ids.
struct B {
  Diagram d;
  B& node(const NodeId& id, NodeKind k) {
    d.add_node(id, k);
    return *this;
  }
  B& in(const NodeId& id, const NodeId& to) {
    d.add_input(id);
    d.add_edge(id, to);
    return *this;
  }
  B& out(const NodeId& id, const NodeId& to) {
    d.add_output(id);
    d.add_edge(to, id);
    return *this;
  }
  B& edge(const NodeId& a, const NodeId& b, int times = 1) {
    for (int i = 0; i < times; ++i) d.add_edge(a, b);
    return *this;
  }
};

NodeKind spider(Kind k, Phase p = {}) { return {k, p}; }

std::string tag(Kind k) { return k == Kind::Z ? "z" : "x"; }

}  // namespace

const std::vector<Phase>& phase_grid() {
  static const std::vector<Phase> g = {Phase(0), Phase(1, 2), Phase(1), Phase(3, 2), Phase(1, 3),
                                       Phase(2, 5)};
  return g;
}

std::vector<AxiomInstance> axiom_instances(RuleId rule) {
  std::vector<AxiomInstance> out;
  const auto& grid = phase_grid();
  const Kind colours[] = {Kind::Z, Kind::X};
  const Phase pi(1);
  auto add = [&](std::string label, Diagram d, Anchor a, RuleParams p = {}) {
    d.validate();
    out.push_back({std::move(label), std::move(d), std::move(a), p});
  };
  switch (rule) {
    case RuleId::SpiderFuse:
      for (Kind c : colours)
        for (const auto& a : grid)
          for (const auto& b : grid)
            for (int k = 1; k <= 2; ++k) {
              B x;
              x.node("s", spider(c, a)).node("t", spider(c, b));
              x.in("i0", "s").in("i1", "s").edge("s", "t", k).out("o0", "t").out("o1", "t");
              add(tag(c) + " " + a.str() + "+" + b.str(), x.d, {"s", "t"});
            }
      break;
    case RuleId::SpiderSplit:
      for (Kind c : colours)
        for (const auto& a : grid)
          for (const auto& m : grid) {
            B x;
            x.node("s", spider(c, a)).in("i0", "s").in("i1", "s").out("o0", "s");
            for (const Anchor& at : {Anchor{"s"}, Anchor{"s", "o0"}, Anchor{"s", "i0", "o0"}})
              add(tag(c) + " split " + a.str() + " moving " + m.str(), x.d, at, {m, {}});
          }
      break;
    case RuleId::IdentityRemove:
      for (Kind c : colours) {
        B x;
        x.node("s", spider(c)).in("i0", "s").out("o0", "s");
        add(tag(c) + " wire", x.d, {"s"});
        for (const auto& a : grid) {
          B y;
          y.node("s", spider(c)).node("t", spider(opposite(c), a)).node("h", NodeKind::h());
          y.in("i0", "h").edge("h", "s").edge("s", "t").out("o0", "t").out("o1", "t");
          add(tag(c) + " between H and spider " + a.str(), y.d, {"s"});
        }
      }
      break;
    case RuleId::IdentityInsert:
      for (Kind c : colours) {
        Diagram w;
        w.add_input("i0");
        w.add_output("o0");
        w.add_edge("i0", "o0");
        add(tag(c) + " on a wire", w, {"i0", "o0"}, {{}, c});
        for (const auto& a : grid) {
          B y;
          y.node("s", spider(Kind::Z, a)).node("t", spider(Kind::X, a));
          y.in("i0", "s").edge("s", "t").out("o0", "t").out("o1", "s");
          add(tag(c) + " between spiders " + a.str(), y.d, {"s", "t"}, {{}, c});
        }
      }
      break;
    case RuleId::SelfLoopDrop:
      for (Kind c : colours)
        for (const auto& a : grid)
          for (int k = 1; k <= 2; ++k) {
            B x;
            x.node("s", spider(c, a)).in("i0", "s").out("o0", "s").edge("s", "s", k);
            add(tag(c) + " loops " + std::to_string(k) + " at " + a.str(), x.d, {"s"});
          }
      break;
    case RuleId::Copy:
      for (Kind c : colours)
        for (const Phase& sp : {Phase(0), pi})
          for (const auto& a : grid)
            for (int legs = 0; legs <= 3; ++legs) {
              B x;
              x.node("s", spider(opposite(c), sp)).node("t", spider(c, a)).edge("s", "t");
              for (int i = 0; i < legs; ++i) x.out("o" + std::to_string(i), "t");
              add(tag(opposite(c)) + " state " + sp.str() + " into " + tag(c) + " " + a.str(), x.d,
                  {"s", "t"});
            }
      break;
    case RuleId::Bialgebra:
      for (Kind c : colours) {
        B x;
        x.node("a0", spider(c)).node("a1", spider(c));
        x.node("b0", spider(opposite(c))).node("b1", spider(opposite(c)));
        x.in("i0", "a0").in("i1", "a1").out("o0", "b0").out("o1", "b1");
        for (const char* a : {"a0", "a1"})
          for (const char* b : {"b0", "b1"}) x.edge(a, b);
        Anchor at = c == Kind::Z ? Anchor{"a0", "a1", "b0", "b1"} : Anchor{"b0", "b1", "a0", "a1"};
        add(tag(c) + " pair on inputs", x.d, at);
      }
      break;
    case RuleId::BialgebraInverse:
      for (Kind c : colours) {
        B x;
        x.node("a", spider(c)).node("b", spider(opposite(c)));
        x.in("i0", "a").in("i1", "a").edge("a", "b").out("o0", "b").out("o1", "b");
        add(tag(c) + " on inputs", x.d, c == Kind::Z ? Anchor{"a", "b"} : Anchor{"b", "a"});
      }
      break;
    case RuleId::PiCommute:
      for (Kind c : colours)
        for (int legs = 1; legs <= 3; ++legs) {
          B x;
          x.node("p", spider(c, pi)).node("t", spider(opposite(c)));
          x.in("i0", "p").edge("p", "t");
          for (int i = 0; i < legs; ++i) x.out("o" + std::to_string(i), "t");
          add(tag(c) + " pi through degree " + std::to_string(legs + 1), x.d, {"p", "t"});
        }
      break;
    case RuleId::PiState:
      for (Kind c : colours) {
        B x;
        x.node("p", spider(c, pi)).node("t", spider(opposite(c))).edge("p", "t").out("o0", "p");
        add(tag(c) + " pi on state", x.d, {"p", "t"});
      }
      break;
    case RuleId::Hopf:
      for (Kind c : colours)
        for (const auto& a : grid)
          for (const auto& b : grid)
            for (int k = 2; k <= 3; ++k) {
              B x;
              x.node("s", spider(c, a)).node("t", spider(opposite(c), b));
              x.in("i0", "s").edge("s", "t", k).out("o0", "t");
              add(tag(c) + " " + a.str() + "/" + b.str() + " x" + std::to_string(k), x.d, {"s", "t"});
            }
      break;
    case RuleId::HCancel: {
      B x;
      x.node("h0", NodeKind::h()).node("h1", NodeKind::h());
      x.in("i0", "h0").edge("h0", "h1").out("o0", "h1");
      add("wire", x.d, {"h0", "h1"});
      for (const auto& a : grid) {
        B y;
        y.node("s", spider(Kind::Z, a)).node("t", spider(Kind::X, a));
        y.node("h0", NodeKind::h()).node("h1", NodeKind::h());
        y.in("i0", "s").edge("s", "h0").edge("h0", "h1").edge("h1", "t").out("o0", "t");
        add("between spiders " + a.str(), y.d, {"h0", "h1"});
      }
      break;
    }
    case RuleId::HColour:
      for (Kind c : colours)
        for (const auto& a : grid)
          for (int legs = 1; legs <= 3; ++legs) {
            B x;
            x.node("s", spider(c, a)).node("h", NodeKind::h());
            x.in("i0", "h").edge("h", "s");
            for (int i = 1; i < legs; ++i) x.out("o" + std::to_string(i), "s");
            add(tag(c) + " " + a.str() + " degree " + std::to_string(legs), x.d, {"s"});
          }
      break;
    case RuleId::HPhaseSlide:
      for (Kind c : colours)
        for (const auto& a : grid) {
          B x;
          x.node("p", spider(c, a)).node("h", NodeKind::h());
          x.in("i0", "p").edge("p", "h").out("o0", "h");
          add(tag(c) + " " + a.str(), x.d, {"p", "h"});
        }
      break;
    case RuleId::HState:
      for (Kind c : colours)
        for (const auto& a : grid) {
          B x;
          x.node("s", spider(c, a)).node("h", NodeKind::h()).edge("s", "h").out("o0", "h");
          add(tag(c) + " " + a.str(), x.d, {"h", "s"});
        }
      break;
    case RuleId::EulerH: {
      B x;
      x.node("h", NodeKind::h()).in("i0", "h").out("o0", "h");
      add("H", x.d, {"h"});
      break;
    }
    case RuleId::EulerHInverse: {
      const Phase m(3, 2);
      B x;
      x.node("z0", spider(Kind::Z, m)).node("x", spider(Kind::X, m)).node("z1", spider(Kind::Z, m));
      x.in("i0", "z0").edge("z0", "x").edge("x", "z1").out("o0", "z1");
      add("chain", x.d, {"z0", "x", "z1"});
      break;
    }
  }
  return out;
}

}  // namespace zxr
