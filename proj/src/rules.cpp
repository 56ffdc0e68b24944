#include "zxr/rules.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace zxr {

namespace {

struct RuleInfo {
  RuleId id;
  const char* name;
};

constexpr RuleInfo kRules[] = {
    {RuleId::SpiderFuse, "spider-fuse"},   {RuleId::SpiderSplit, "spider-split"},
    {RuleId::IdentityRemove, "id-remove"}, {RuleId::IdentityInsert, "id-insert"},
    {RuleId::SelfLoopDrop, "self-loop"},   {RuleId::Copy, "copy"},
    {RuleId::Bialgebra, "bialgebra"},      {RuleId::BialgebraInverse, "bialgebra-inv"},
    {RuleId::PiCommute, "pi-commute"},     {RuleId::PiState, "pi-state"},
    {RuleId::Hopf, "hopf"},                {RuleId::HCancel, "h-cancel"},
    {RuleId::HColour, "h-colour"},         {RuleId::HPhaseSlide, "h-phase"},
    {RuleId::HState, "h-state"},           {RuleId::EulerH, "euler"},
    {RuleId::EulerHInverse, "euler-inv"},
};

const Phase kPi{1, 1};
const Phase kMinusHalfPi{3, 2};

bool id_less(const NodeId& a, const NodeId& b) { return IdLess{}(a, b); }

bool anchor_less(const Anchor& a, const Anchor& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), id_less);
}

std::vector<NodeId> sorted(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end(), id_less);
  return v;
}

std::vector<NodeId> unique_neighbours(const Diagram& d, const NodeId& id) {
  auto v = sorted(d.neighbours(id));
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// The neighbour list of `id` with one occurrence of `skip` removed.
std::vector<NodeId> other_legs(const Diagram& d, const NodeId& id, const NodeId& skip) {
  auto v = d.neighbours(id);
  auto it = std::find(v.begin(), v.end(), skip);
  if (it != v.end()) v.erase(it);
  return v;
}

NodeId other_end(const Diagram& d, const NodeId& two_legged, const NodeId& from) {
  return other_legs(d, two_legged, from).front();
}

bool spider(const Diagram& d, const NodeId& id) { return d.has_node(id) && d.is_spider(id); }
bool hbox(const Diagram& d, const NodeId& id) {
  return d.has_node(id) && d.kind(id).kind == Kind::H;
}
Kind colour(const Diagram& d, const NodeId& id) { return d.kind(id).kind; }

std::string need(std::size_t size, const Anchor& at) {
  if (at.size() != size) return "anchor must list " + std::to_string(size) + " node ids";
  return {};
}

std::string all_present(const Diagram& d, const Anchor& at) {
  for (const auto& id : at)
    if (!d.has_node(id)) return "unknown node '" + id + "'";
  return {};
}

// ---------------------------------------------------------------- checks

std::string check_fuse(const Diagram& d, const Anchor& at) {
  if (auto e = need(2, at); !e.empty()) return e;
  const auto &s = at[0], &t = at[1];
  if (s == t) return "spider-fuse needs two distinct spiders";
  if (!spider(d, s) || !spider(d, t)) return "spider-fuse needs two spiders";
  if (colour(d, s) != colour(d, t)) return "spiders differ in colour";
  if (d.edge_count(s, t) == 0) return "spiders are not adjacent";
  return {};
}

std::string check_split(const Diagram& d, const Anchor& at) {
  if (at.empty()) return "spider-split needs a spider id";
  if (!spider(d, at[0])) return "first anchor id must be a spider";
  if (d.self_loops(at[0]) != 0) return "cannot split a spider carrying a self-loop";
  std::map<NodeId, std::size_t> want;
  for (std::size_t i = 1; i < at.size(); ++i) ++want[at[i]];
  for (const auto& [w, c] : want)
    if (w == at[0] || d.edge_count(at[0], w) < c) return "'" + w + "' is not a neighbour leg";
  return {};
}

std::string check_id_remove(const Diagram& d, const Anchor& at) {
  if (auto e = need(1, at); !e.empty()) return e;
  const auto& s = at[0];
  if (!spider(d, s)) return "id-remove needs a spider";
  if (!d.kind(s).phase.is_zero()) return "spider has a nonzero phase";
  if (d.degree(s) != 2 || d.self_loops(s) != 0) return "spider must have two distinct legs";
  const auto& nb = d.neighbours(s);
  if (nb[0] == nb[1] && hbox(d, nb[0])) return "removal would leave an H-box self-loop";
  return {};
}

std::string check_id_insert(const Diagram& d, const Anchor& at) {
  if (auto e = need(2, at); !e.empty()) return e;
  if (auto e = all_present(d, at); !e.empty()) return e;
  if (d.edge_count(at[0], at[1]) == 0) return "no edge between the anchor ids";
  return {};
}

std::string check_self_loop(const Diagram& d, const Anchor& at) {
  if (auto e = need(1, at); !e.empty()) return e;
  if (!spider(d, at[0])) return "self-loop needs a spider";
  if (d.self_loops(at[0]) == 0) return "spider has no self-loop";
  return {};
}

bool zero_or_pi(const Phase& p) { return p.is_zero() || p.is_pi(); }

std::string check_copy(const Diagram& d, const Anchor& at) {
  if (auto e = need(2, at); !e.empty()) return e;
  const auto &s = at[0], &t = at[1];
  if (!spider(d, s) || !spider(d, t) || s == t) return "copy needs two spiders";
  if (colour(d, s) == colour(d, t)) return "copy needs opposite colours";
  if (d.degree(s) != 1 || d.edge_count(s, t) != 1) return "state must be a single leg on the target";
  if (!zero_or_pi(d.kind(s).phase)) return "copied state must have phase 0 or pi";
  if (d.self_loops(t) != 0) return "target carries a self-loop";
  return {};
}

std::string check_bialgebra(const Diagram& d, const Anchor& at) {
  if (auto e = need(4, at); !e.empty()) return e;
  if (auto e = all_present(d, at); !e.empty()) return e;
  if (std::set<NodeId>(at.begin(), at.end()).size() != 4) return "anchor ids must be distinct";
  for (const auto& id : at) {
    if (!spider(d, id)) return "bialgebra needs four spiders";
    if (!d.kind(id).phase.is_zero()) return "bialgebra spiders must have phase 0";
    if (d.degree(id) != 3 || d.self_loops(id) != 0) return "bialgebra spiders must have degree 3";
  }
  const Kind ka = colour(d, at[0]);
  if (colour(d, at[1]) != ka || colour(d, at[2]) == ka || colour(d, at[3]) == ka)
    return "anchor must list two spiders of one colour then two of the other";
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j)
      if (d.edge_count(at[i], at[j]) != 1) return "the four spiders do not form a K_{2,2}";
  if (d.edge_count(at[0], at[1]) != 0 || d.edge_count(at[2], at[3]) != 0)
    return "same-colour pair is adjacent";
  return {};
}

std::string check_bialgebra_inv(const Diagram& d, const Anchor& at) {
  if (auto e = need(2, at); !e.empty()) return e;
  const auto &a = at[0], &b = at[1];
  if (!spider(d, a) || !spider(d, b) || a == b) return "bialgebra-inv needs two spiders";
  if (colour(d, a) == colour(d, b)) return "bialgebra-inv needs opposite colours";
  for (const auto& id : at) {
    if (!d.kind(id).phase.is_zero()) return "spiders must have phase 0";
    if (d.degree(id) != 3 || d.self_loops(id) != 0) return "spiders must have degree 3";
  }
  if (d.edge_count(a, b) != 1) return "spiders must share exactly one edge";
  return {};
}

std::string check_pi_commute(const Diagram& d, const Anchor& at) {
  if (auto e = need(2, at); !e.empty()) return e;
  const auto &p = at[0], &t = at[1];
  if (!spider(d, p) || !spider(d, t) || p == t) return "pi-commute needs two spiders";
  if (colour(d, p) == colour(d, t)) return "pi-commute needs opposite colours";
  if (!d.kind(p).phase.is_pi() || d.degree(p) != 2) return "first id must be a two-legged pi spider";
  if (d.edge_count(p, t) != 1) return "pi spider must meet the target by one edge";
  if (!d.kind(t).phase.is_zero()) return "target spider must have phase 0";
  if (d.degree(t) < 2 || d.self_loops(t) != 0) return "target needs at least two legs and no self-loop";
  return {};
}

std::string check_pi_state(const Diagram& d, const Anchor& at) {
  if (auto e = need(2, at); !e.empty()) return e;
  const auto &p = at[0], &t = at[1];
  if (!spider(d, p) || !spider(d, t) || p == t) return "pi-state needs two spiders";
  if (colour(d, p) == colour(d, t)) return "pi-state needs opposite colours";
  if (!d.kind(p).phase.is_pi() || d.degree(p) != 2) return "first id must be a two-legged pi spider";
  if (d.degree(t) != 1 || d.edge_count(p, t) != 1) return "second id must be a state on the pi spider";
  if (!d.kind(t).phase.is_zero()) return "state must have phase 0";
  return {};
}

std::string check_hopf(const Diagram& d, const Anchor& at) {
  if (auto e = need(2, at); !e.empty()) return e;
  const auto &a = at[0], &b = at[1];
  if (!spider(d, a) || !spider(d, b) || a == b) return "hopf needs two spiders";
  if (colour(d, a) == colour(d, b)) return "hopf needs opposite colours";
  if (d.edge_count(a, b) < 2) return "hopf needs at least two parallel edges";
  return {};
}

std::string check_h_cancel(const Diagram& d, const Anchor& at) {
  if (auto e = need(2, at); !e.empty()) return e;
  const auto &a = at[0], &b = at[1];
  if (!hbox(d, a) || !hbox(d, b) || a == b) return "h-cancel needs two H-boxes";
  const auto n = d.edge_count(a, b);
  if (n == 0) return "H-boxes are not adjacent";
  if (n == 1) {
    const auto x = other_end(d, a, b), y = other_end(d, b, a);
    if (x == y && hbox(d, x)) return "cancelling would leave an H-box self-loop";
  }
  return {};
}

std::string check_h_colour(const Diagram& d, const Anchor& at) {
  if (auto e = need(1, at); !e.empty()) return e;
  const auto& s = at[0];
  if (!spider(d, s)) return "h-colour needs a spider";
  if (d.self_loops(s) != 0) return "spider carries a self-loop";
  for (const auto& w : d.neighbours(s))
    if (hbox(d, w) && d.edge_count(s, w) == 2) return "spider carries an H-box loop";
  return {};
}

std::string check_h_phase(const Diagram& d, const Anchor& at) {
  if (auto e = need(2, at); !e.empty()) return e;
  const auto &p = at[0], &h = at[1];
  if (!spider(d, p) || !hbox(d, h)) return "h-phase needs a spider then an H-box";
  if (d.degree(p) != 2 || d.self_loops(p) != 0) return "spider must have two legs";
  if (d.edge_count(p, h) != 1) return "spider and H-box must share exactly one edge";
  return {};
}

std::string check_h_state(const Diagram& d, const Anchor& at) {
  if (auto e = need(2, at); !e.empty()) return e;
  const auto &h = at[0], &s = at[1];
  if (!hbox(d, h) || !spider(d, s)) return "h-state needs an H-box then a spider";
  if (d.degree(s) != 1 || d.edge_count(h, s) != 1) return "spider must be a state on the H-box";
  return {};
}

std::string check_euler(const Diagram& d, const Anchor& at) {
  if (auto e = need(1, at); !e.empty()) return e;
  if (!hbox(d, at[0])) return "euler needs an H-box";
  return {};
}

std::string check_euler_inv(const Diagram& d, const Anchor& at) {
  if (auto e = need(3, at); !e.empty()) return e;
  if (auto e = all_present(d, at); !e.empty()) return e;
  const auto &z1 = at[0], &x = at[1], &z2 = at[2];
  if (z1 == z2) return "chain ends must differ";
  for (const auto& id : at) {
    if (!spider(d, id)) return "euler-inv needs three spiders";
    if (d.kind(id).phase != kMinusHalfPi) return "chain spiders must have phase -pi/2";
    if (d.degree(id) != 2 || d.self_loops(id) != 0) return "chain spiders must have two legs";
  }
  if (colour(d, z1) != Kind::Z || colour(d, x) != Kind::X || colour(d, z2) != Kind::Z)
    return "chain must read Z, X, Z";
  if (d.edge_count(z1, x) != 1 || d.edge_count(x, z2) != 1) return "spiders do not form a chain";
  const auto a = other_end(d, z1, x), b = other_end(d, z2, x);
  if (a == x || a == z2 || b == x || b == z1) return "chain closes on itself";
  if (a == b && hbox(d, a)) return "result would leave an H-box self-loop";
  return {};
}

// ---------------------------------------------------------------- rewrites

void do_fuse(Diagram& d, const Anchor& at) {
  const auto &s = at[0], &t = at[1];
  NodeKind ks = d.kind(s);
  ks.phase = ks.phase + d.kind(t).phase;
  d.set_kind(s, ks);
  const auto nb = d.neighbours(t);
  d.remove_node(t);
  std::size_t loops = 0;
  for (const auto& w : nb) {
    if (w == s) continue;
    if (w == t) {
      ++loops;
      continue;
    }
    d.add_edge(s, w);
  }
  for (std::size_t i = 0; i < loops / 2; ++i) d.add_edge(s, s);
}

void do_split(Diagram& d, const Anchor& at, const RuleParams& p) {
  const auto& s = at[0];
  NodeKind ks = d.kind(s);
  const Phase moved = p.phase.value_or(Phase{});
  NodeKind kn{ks.kind, moved};
  ks.phase = ks.phase - moved;
  d.set_kind(s, ks);
  const NodeId n = d.add_node(kn);
  for (std::size_t i = 1; i < at.size(); ++i) {
    d.remove_edge(s, at[i]);
    d.add_edge(n, at[i]);
  }
  d.add_edge(s, n);
}

void do_id_remove(Diagram& d, const Anchor& at) {
  const auto nb = d.neighbours(at[0]);
  d.remove_node(at[0]);
  d.add_edge(nb[0], nb[1]);
}

void do_id_insert(Diagram& d, const Anchor& at, const RuleParams& p) {
  const Kind k = p.colour.value_or(Kind::Z);
  if (k != Kind::Z && k != Kind::X) throw MatchError("id-insert colour must be z or x");
  d.remove_edge(at[0], at[1]);
  const NodeId s = d.add_node({k, Phase{}});
  d.add_edge(at[0], s);
  d.add_edge(s, at[1]);
}

void do_self_loop(Diagram& d, const Anchor& at) {
  while (d.self_loops(at[0]) > 0) d.remove_edge(at[0], at[0]);
}

void do_copy(Diagram& d, const Anchor& at) {
  const auto &s = at[0], &t = at[1];
  const NodeKind ks = d.kind(s);
  const auto legs = other_legs(d, t, s);
  d.remove_node(s);
  d.remove_node(t);
  for (const auto& w : legs) {
    const NodeId c = d.add_node(ks);
    d.add_edge(c, w);
  }
}

void do_bialgebra(Diagram& d, const Anchor& at) {
  const std::set<NodeId> inside(at.begin(), at.end());
  auto external = [&](const NodeId& id) {
    for (const auto& w : d.neighbours(id))
      if (!inside.count(w)) return w;
    throw MatchError("bialgebra spider has no external leg");
  };
  const Kind ka = colour(d, at[0]), kb = colour(d, at[2]);
  const NodeId ea0 = external(at[0]), ea1 = external(at[1]);
  const NodeId eb0 = external(at[2]), eb1 = external(at[3]);
  if (inside.count(ea0) || inside.count(ea1) || inside.count(eb0) || inside.count(eb1))
    throw MatchError("bialgebra external leg stays inside the pattern");
  for (const auto& id : at) d.remove_node(id);
  // The spider on the first pair's legs takes the second pair's colour, and vice versa.
  const NodeId na = d.add_node({kb, Phase{}});
  const NodeId nb = d.add_node({ka, Phase{}});
  d.add_edge(na, ea0);
  d.add_edge(na, ea1);
  d.add_edge(nb, eb0);
  d.add_edge(nb, eb1);
  d.add_edge(na, nb);
}

void do_bialgebra_inv(Diagram& d, const Anchor& at) {
  const auto &a = at[0], &b = at[1];
  const Kind ka = colour(d, a), kb = colour(d, b);
  const auto ea = other_legs(d, a, b), eb = other_legs(d, b, a);
  d.remove_node(a);
  d.remove_node(b);
  // Legs of `a` land on spiders of b's colour, legs of `b` on spiders of a's colour.
  std::vector<NodeId> na, nb;
  for (const auto& w : ea) {
    na.push_back(d.add_node({kb, Phase{}}));
    d.add_edge(na.back(), w);
  }
  for (const auto& w : eb) {
    nb.push_back(d.add_node({ka, Phase{}}));
    d.add_edge(nb.back(), w);
  }
  for (const auto& x : na)
    for (const auto& y : nb) d.add_edge(x, y);
}

void do_pi_commute(Diagram& d, const Anchor& at) {
  const auto &p = at[0], &t = at[1];
  const NodeKind kp = d.kind(p);
  const NodeId q = other_end(d, p, t);
  const auto legs = other_legs(d, t, p);
  d.remove_node(p);
  for (const auto& w : legs) {
    d.remove_edge(t, w);
    const NodeId c = d.add_node(kp);
    d.add_edge(t, c);
    d.add_edge(c, w);
  }
  d.add_edge(t, q);
}

void do_pi_state(Diagram& d, const Anchor& at) {
  const auto &p = at[0], &t = at[1];
  const NodeId q = other_end(d, p, t);
  d.remove_node(p);
  d.add_edge(t, q);
}

void do_hopf(Diagram& d, const Anchor& at) {
  d.remove_edge(at[0], at[1]);
  d.remove_edge(at[0], at[1]);
}

void do_h_cancel(Diagram& d, const Anchor& at) {
  const auto &a = at[0], &b = at[1];
  if (d.edge_count(a, b) == 2) {
    d.remove_node(a);
    d.remove_node(b);
    return;
  }
  const NodeId x = other_end(d, a, b), y = other_end(d, b, a);
  d.remove_node(a);
  d.remove_node(b);
  d.add_edge(x, y);
}

void do_h_colour(Diagram& d, const Anchor& at) {
  const auto& s = at[0];
  const auto legs = d.neighbours(s);
  for (const auto& w : legs) {
    if (hbox(d, w)) {
      const NodeId y = other_end(d, w, s);
      d.remove_node(w);
      d.add_edge(s, y);
    } else {
      d.remove_edge(s, w);
      const NodeId h = d.add_node(NodeKind::h());
      d.add_edge(s, h);
      d.add_edge(h, w);
    }
  }
  NodeKind k = d.kind(s);
  k.kind = opposite(k.kind);
  d.set_kind(s, k);
}

void do_h_phase(Diagram& d, const Anchor& at) {
  const auto &p = at[0], &h = at[1];
  const NodeId a = other_end(d, p, h), b = other_end(d, h, p);
  d.remove_edge(a, p);
  d.remove_edge(p, h);
  d.remove_edge(h, b);
  d.add_edge(a, h);
  d.add_edge(h, p);
  d.add_edge(p, b);
  NodeKind k = d.kind(p);
  k.kind = opposite(k.kind);
  d.set_kind(p, k);
}

void do_h_state(Diagram& d, const Anchor& at) {
  const auto &h = at[0], &s = at[1];
  const NodeId b = other_end(d, h, s);
  d.remove_node(h);
  NodeKind k = d.kind(s);
  k.kind = opposite(k.kind);
  d.set_kind(s, k);
  d.add_edge(s, b);
}

void do_euler(Diagram& d, const Anchor& at) {
  const auto nb = d.neighbours(at[0]);
  d.remove_node(at[0]);
  const NodeId z1 = d.add_node(NodeKind::z(kMinusHalfPi));
  const NodeId x = d.add_node(NodeKind::x(kMinusHalfPi));
  const NodeId z2 = d.add_node(NodeKind::z(kMinusHalfPi));
  d.add_edge(nb[0], z1);
  d.add_edge(z1, x);
  d.add_edge(x, z2);
  d.add_edge(z2, nb[1]);
}

void do_euler_inv(Diagram& d, const Anchor& at) {
  const NodeId a = other_end(d, at[0], at[1]), b = other_end(d, at[2], at[1]);
  for (const auto& id : at) d.remove_node(id);
  const NodeId h = d.add_node(NodeKind::h());
  d.add_edge(a, h);
  d.add_edge(h, b);
}

// ---------------------------------------------------------------- enumeration

void sub_multisets(const std::vector<NodeId>& items, std::size_t i, Anchor& cur,
                   std::vector<Anchor>& out, const NodeId& head) {
  if (i == items.size()) {
    Anchor a{head};
    a.insert(a.end(), cur.begin(), cur.end());
    out.push_back(std::move(a));
    return;
  }
  std::size_t j = i;
  while (j < items.size() && items[j] == items[i]) ++j;
  for (std::size_t take = 0; take <= j - i; ++take) {
    for (std::size_t k = 0; k < take; ++k) cur.push_back(items[i]);
    sub_multisets(items, j, cur, out, head);
    for (std::size_t k = 0; k < take; ++k) cur.pop_back();
  }
}

std::vector<Anchor> candidates(RuleId rule, const Diagram& d) {
  std::vector<Anchor> out;
  const auto ids = d.node_ids();
  auto pairs_of_neighbours = [&](auto&& keep) {
    for (const auto& a : ids)
      for (const auto& b : unique_neighbours(d, a))
        if (a != b && keep(a, b)) out.push_back({a, b});
  };
  switch (rule) {
    case RuleId::SpiderFuse:
    case RuleId::Hopf:
    case RuleId::HCancel:
      pairs_of_neighbours([](const NodeId& a, const NodeId& b) { return id_less(a, b); });
      break;
    case RuleId::Copy:
    case RuleId::BialgebraInverse:
    case RuleId::PiCommute:
    case RuleId::PiState:
    case RuleId::HPhaseSlide:
    case RuleId::HState:
      pairs_of_neighbours([&](const NodeId& a, const NodeId&) {
        return rule != RuleId::BialgebraInverse || colour(d, a) == Kind::Z;
      });
      break;
    case RuleId::IdentityInsert:
      for (const auto& [a, b] : d.edges()) out.push_back({a, b});
      break;
    case RuleId::SpiderSplit:
      for (const auto& s : ids) {
        if (!spider(d, s) || d.self_loops(s) != 0) continue;
        Anchor cur;
        sub_multisets(sorted(d.neighbours(s)), 0, cur, out, s);
      }
      break;
    case RuleId::Bialgebra:
      for (const auto& a0 : ids) {
        if (!spider(d, a0) || colour(d, a0) != Kind::Z) continue;
        std::set<NodeId, IdLess> seconds;
        for (const auto& b : unique_neighbours(d, a0))
          for (const auto& a1 : unique_neighbours(d, b))
            if (id_less(a0, a1)) seconds.insert(a1);
        for (const auto& a1 : seconds) {
          std::vector<NodeId> common;
          for (const auto& b : unique_neighbours(d, a0))
            if (d.edge_count(a1, b) > 0) common.push_back(b);
          for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
              out.push_back({a0, a1, common[i], common[j]});
        }
      }
      break;
    case RuleId::EulerHInverse:
      for (const auto& x : ids) {
        if (!spider(d, x) || colour(d, x) != Kind::X || d.degree(x) != 2) continue;
        const auto& nb = d.neighbours(x);
        if (nb[0] == nb[1]) continue;
        auto s = sorted(nb);
        out.push_back({s[0], x, s[1]});
      }
      break;
    default:
      for (const auto& a : ids) out.push_back({a});
      break;
  }
  return out;
}

}  // namespace

const std::vector<RuleId>& all_rules() {
  static const std::vector<RuleId> v = [] {
    std::vector<RuleId> r;
    for (const auto& info : kRules) r.push_back(info.id);
    return r;
  }();
  return v;
}

std::string rule_name(RuleId r) {
  for (const auto& info : kRules)
    if (info.id == r) return info.name;
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& info : kRules)
    if (name == info.name) return info.id;
  return std::nullopt;
}

bool is_euler(RuleId r) { return r == RuleId::EulerH || r == RuleId::EulerHInverse; }

std::string check_anchor(RuleId rule, const Diagram& d, const Anchor& at) {
  if (auto e = all_present(d, at); !e.empty()) return e;
  switch (rule) {
    case RuleId::SpiderFuse: return check_fuse(d, at);
    case RuleId::SpiderSplit: return check_split(d, at);
    case RuleId::IdentityRemove: return check_id_remove(d, at);
    case RuleId::IdentityInsert: return check_id_insert(d, at);
    case RuleId::SelfLoopDrop: return check_self_loop(d, at);
    case RuleId::Copy: return check_copy(d, at);
    case RuleId::Bialgebra: return check_bialgebra(d, at);
    case RuleId::BialgebraInverse: return check_bialgebra_inv(d, at);
    case RuleId::PiCommute: return check_pi_commute(d, at);
    case RuleId::PiState: return check_pi_state(d, at);
    case RuleId::Hopf: return check_hopf(d, at);
    case RuleId::HCancel: return check_h_cancel(d, at);
    case RuleId::HColour: return check_h_colour(d, at);
    case RuleId::HPhaseSlide: return check_h_phase(d, at);
    case RuleId::HState: return check_h_state(d, at);
    case RuleId::EulerH: return check_euler(d, at);
    case RuleId::EulerHInverse: return check_euler_inv(d, at);
  }
  return "unknown rule";
}

std::vector<Anchor> match_sites(RuleId rule, const Diagram& d) {
  std::vector<Anchor> out;
  for (auto& a : candidates(rule, d))
    if (check_anchor(rule, d, a).empty()) out.push_back(std::move(a));
  std::sort(out.begin(), out.end(), anchor_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Diagram apply(RuleId rule, const Diagram& d, const Anchor& at, const RewriteConfig& cfg,
              const RuleParams& params) {
  if (is_euler(rule) && !cfg.euler_axiom)
    throw GateError(rule_name(rule) + " is disabled (enable the Euler axiom)");
  if (auto e = check_anchor(rule, d, at); !e.empty())
    throw MatchError(rule_name(rule) + ": " + e);
  Diagram r = d;
  switch (rule) {
    case RuleId::SpiderFuse: do_fuse(r, at); break;
    case RuleId::SpiderSplit: do_split(r, at, params); break;
    case RuleId::IdentityRemove: do_id_remove(r, at); break;
    case RuleId::IdentityInsert: do_id_insert(r, at, params); break;
    case RuleId::SelfLoopDrop: do_self_loop(r, at); break;
    case RuleId::Copy: do_copy(r, at); break;
    case RuleId::Bialgebra: do_bialgebra(r, at); break;
    case RuleId::BialgebraInverse: do_bialgebra_inv(r, at); break;
    case RuleId::PiCommute: do_pi_commute(r, at); break;
    case RuleId::PiState: do_pi_state(r, at); break;
    case RuleId::Hopf: do_hopf(r, at); break;
    case RuleId::HCancel: do_h_cancel(r, at); break;
    case RuleId::HColour: do_h_colour(r, at); break;
    case RuleId::HPhaseSlide: do_h_phase(r, at); break;
    case RuleId::HState: do_h_state(r, at); break;
    case RuleId::EulerH: do_euler(r, at); break;
    case RuleId::EulerHInverse: do_euler_inv(r, at); break;
  }
  r.validate();
  return r;
}

std::vector<Anchor> normalize_sites(RuleId rule, const Diagram& d) {
  auto sites = match_sites(rule, d);
  if (rule == RuleId::IdentityRemove)
    std::erase_if(sites, [&](const Anchor& at) {
      const auto& nb = d.neighbours(at[0]);
      return std::any_of(nb.begin(), nb.end(), [&](const NodeId& w) { return hbox(d, w); });
    });
  return sites;
}

Diagram normalize(const Diagram& d, std::vector<NormalizeStep>* trace) {
  static constexpr RuleId kOrder[] = {RuleId::SpiderFuse, RuleId::SelfLoopDrop,
                                      RuleId::IdentityRemove, RuleId::Hopf};
  Diagram cur = d;
  for (;;) {
    bool stepped = false;
    for (RuleId r : kOrder) {
      const auto sites = normalize_sites(r, cur);
      if (sites.empty()) continue;
      Diagram next = apply(r, cur, sites.front());
      const auto before = std::make_pair(cur.node_count(), cur.edge_count());
      const auto after = std::make_pair(next.node_count(), next.edge_count());
      if (!(after < before)) throw std::logic_error("normalize step did not decrease the measure");
      if (trace) trace->push_back({r, sites.front()});
      cur = std::move(next);
      stepped = true;
      break;
    }
    if (!stepped) return cur;
  }
}

bool is_bipartite_form(const Diagram& d) {
  for (const auto& id : d.node_ids())
    if (d.kind(id).kind == Kind::H) throw std::invalid_argument("is_bipartite_form: diagram has an H-box");
  for (const auto& [a, b] : d.edges())
    if (d.is_spider(a) && d.is_spider(b) && d.kind(a).kind == d.kind(b).kind) return false;
  return true;
}

}  // namespace zxr
