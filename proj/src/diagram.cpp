#include "zxr/diagram.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace zxr {

Kind opposite(Kind k) {
  if (k == Kind::Z) return Kind::X;
  if (k == Kind::X) return Kind::Z;
  return k;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Z: return "z";
    case Kind::X: return "x";
    case Kind::H: return "h";
    case Kind::Boundary: return "boundary";
  }
  return "?";
}

NodeId Diagram::fresh_id() {
  for (;;) {
    NodeId id = "v" + std::to_string(++counter_);
    if (!used_.count(id)) return id;
  }
}

NodeId Diagram::add_node(NodeKind k) {
  NodeId id = fresh_id();
  add_node(id, k);
  return id;
}

void Diagram::add_node(const NodeId& id, NodeKind k) {
  if (id.empty()) throw InvariantError("empty node id");
  if (used_.count(id)) throw InvariantError("node id '" + id + "' already used");
  used_.insert(id);
  nodes_.emplace(id, k);
  adj_[id];
}

NodeId Diagram::add_input() {
  NodeId id = add_node(NodeKind::boundary());
  in_.push_back(id);
  return id;
}

NodeId Diagram::add_output() {
  NodeId id = add_node(NodeKind::boundary());
  out_.push_back(id);
  return id;
}

void Diagram::add_input(const NodeId& id) {
  add_node(id, NodeKind::boundary());
  in_.push_back(id);
}

void Diagram::add_output(const NodeId& id) {
  add_node(id, NodeKind::boundary());
  out_.push_back(id);
}

void Diagram::add_edge(const NodeId& a, const NodeId& b) {
  auto ia = adj_.find(a);
  auto ib = adj_.find(b);
  if (ia == adj_.end() || ib == adj_.end())
    throw InvariantError("edge endpoint not declared: " + a + " " + b);
  ia->second.push_back(b);
  ib->second.push_back(a);
}

void Diagram::remove_edge(const NodeId& a, const NodeId& b) {
  auto drop = [&](const NodeId& from, const NodeId& to) {
    auto& v = adj_.at(from);
    auto it = std::find(v.begin(), v.end(), to);
    if (it == v.end()) throw InvariantError("no edge " + a + " " + b);
    v.erase(it);
  };
  drop(a, b);
  drop(b, a);
}

void Diagram::remove_node(const NodeId& id) {
  auto it = adj_.find(id);
  if (it == adj_.end()) throw InvariantError("no node " + id);
  std::vector<NodeId> nb = it->second;
  for (const auto& w : nb) {
    if (w == id) continue;
    auto& v = adj_.at(w);
    v.erase(std::find(v.begin(), v.end(), id));
  }
  adj_.erase(it);
  nodes_.erase(id);
  std::erase(in_, id);
  std::erase(out_, id);
}

void Diagram::set_kind(const NodeId& id, NodeKind k) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw InvariantError("no node " + id);
  it->second = k;
}

const NodeKind& Diagram::kind(const NodeId& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw InvariantError("no node " + id);
  return it->second;
}

const std::vector<NodeId>& Diagram::neighbours(const NodeId& id) const {
  auto it = adj_.find(id);
  if (it == adj_.end()) throw InvariantError("no node " + id);
  return it->second;
}

std::size_t Diagram::edge_count(const NodeId& a, const NodeId& b) const {
  const auto& v = neighbours(a);
  const auto c = static_cast<std::size_t>(std::count(v.begin(), v.end(), b));
  return a == b ? c / 2 : c;
}

std::vector<NodeId> Diagram::node_ids() const {
  std::vector<NodeId> ids;
  ids.reserve(nodes_.size());
  for (const auto& [id, k] : nodes_) ids.push_back(id);
  return ids;
}

std::vector<Edge> Diagram::edges() const {
  std::vector<Edge> out;
  IdLess less;
  for (const auto& [a, nb] : adj_) {
    std::size_t loops = 0;
    for (const auto& b : nb) {
      if (b == a)
        ++loops;
      else if (less(a, b))
        out.emplace_back(a, b);
    }
    for (std::size_t i = 0; i < loops / 2; ++i) out.emplace_back(a, a);
  }
  std::sort(out.begin(), out.end(), [&](const Edge& x, const Edge& y) {
    if (x.first != y.first) return less(x.first, y.first);
    return less(x.second, y.second);
  });
  return out;
}

std::size_t Diagram::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [a, nb] : adj_) twice += nb.size();
  return twice / 2;
}

void Diagram::validate() const {
  std::set<NodeId> seen;
  auto check_list = [&](const std::vector<NodeId>& l, const char* name) {
    for (const auto& id : l) {
      if (!has_node(id)) throw InvariantError(std::string(name) + " lists unknown node " + id);
      if (kind(id).kind != Kind::Boundary)
        throw InvariantError(std::string(name) + " lists non-boundary node " + id);
      if (!seen.insert(id).second) throw InvariantError("boundary " + id + " listed twice");
    }
  };
  check_list(in_, "inputs");
  check_list(out_, "outputs");
  for (const auto& [id, k] : nodes_) {
    const auto deg = degree(id);
    switch (k.kind) {
      case Kind::Boundary:
        if (deg != 1) throw InvariantError("boundary " + id + " must have degree 1");
        if (!seen.count(id)) throw InvariantError("boundary " + id + " is not an input or output");
        break;
      case Kind::H:
        if (deg != 2) throw InvariantError("H-box " + id + " must have degree 2");
        if (self_loops(id) != 0) throw InvariantError("H-box " + id + " has a self-loop");
        if (!k.phase.is_zero()) throw InvariantError("H-box " + id + " carries a phase");
        break;
      default:
        break;
    }
  }
}

// ---------------------------------------------------------------------------

Diagram generator(Generator g, std::optional<Phase> phase) {
  const bool phased = g == Generator::PZ || g == Generator::PX;
  if (phase && !phased) throw std::invalid_argument("phase supplied for a phase-free generator");
  Diagram d;
  if (g == Generator::Wire) {
    d.add_input("i0");
    d.add_output("o0");
    d.add_edge("i0", "o0");
    return d;
  }
  int n_in = 1, n_out = 1;
  NodeKind k = NodeKind::h();
  switch (g) {
    case Generator::DeltaZ: n_out = 2; k = NodeKind::z(); break;
    case Generator::DeltaZDag: n_in = 2; k = NodeKind::z(); break;
    case Generator::EpsZ: n_out = 0; k = NodeKind::z(); break;
    case Generator::EpsZDag: n_in = 0; k = NodeKind::z(); break;
    case Generator::PZ: k = NodeKind::z(phase.value_or(Phase{})); break;
    case Generator::DeltaX: n_out = 2; k = NodeKind::x(); break;
    case Generator::DeltaXDag: n_in = 2; k = NodeKind::x(); break;
    case Generator::EpsX: n_out = 0; k = NodeKind::x(); break;
    case Generator::EpsXDag: n_in = 0; k = NodeKind::x(); break;
    case Generator::PX: k = NodeKind::x(phase.value_or(Phase{})); break;
    default: break;
  }
  for (int i = 0; i < n_in; ++i) d.add_input("i" + std::to_string(i));
  for (int i = 0; i < n_out; ++i) d.add_output("o" + std::to_string(i));
  d.add_node("s", k);
  for (const auto& b : d.inputs()) d.add_edge(b, "s");
  for (const auto& b : d.outputs()) d.add_edge("s", b);
  return d;
}

namespace {

// Copies src into dst, renaming ids that collide. Returns the rename map.
std::map<NodeId, NodeId> absorb(Diagram& dst, const Diagram& src, const std::set<NodeId>& taken) {
  std::map<NodeId, NodeId> ren;
  std::set<NodeId> local(taken.begin(), taken.end());
  for (const auto& id : src.node_ids()) {
    NodeId nid = id;
    if (local.count(id) || dst.has_node(id)) {
      do {
        nid = dst.fresh_id();
      } while (local.count(nid));
    }
    local.insert(nid);
    ren[id] = nid;
    dst.add_node(nid, src.kind(id));
  }
  for (const auto& [a, b] : src.edges()) dst.add_edge(ren.at(a), ren.at(b));
  return ren;
}

std::set<NodeId> ids_of(const Diagram& d) {
  auto v = d.node_ids();
  return {v.begin(), v.end()};
}

}  // namespace

Diagram compose(const Diagram& f, const Diagram& g) {
  if (g.outputs().size() != f.inputs().size())
    throw std::invalid_argument("compose: arity mismatch (" + std::to_string(g.outputs().size()) +
                                " outputs vs " + std::to_string(f.inputs().size()) + " inputs)");
  Diagram d;
  auto rg = absorb(d, g, {});
  auto rf = absorb(d, f, ids_of(g));
  std::vector<NodeId> glued;
  for (std::size_t i = 0; i < f.inputs().size(); ++i) {
    const auto& a = rg.at(g.outputs()[i]);
    const auto& b = rf.at(f.inputs()[i]);
    d.add_edge(a, b);
    glued.push_back(a);
    glued.push_back(b);
  }
  std::vector<NodeId> ins, outs;
  for (const auto& id : g.inputs()) ins.push_back(rg.at(id));
  for (const auto& id : f.outputs()) outs.push_back(rf.at(id));
  d.set_inputs(ins);
  d.set_outputs(outs);
  // Splice out each glued boundary; a loop of glued boundaries is a closed wire.
  for (const auto& b : glued) {
    if (!d.has_node(b)) continue;
    auto nb = d.neighbours(b);
    if (nb.size() == 2 && nb[0] != b && nb[1] != b) {
      d.remove_node(b);
      if (nb[0] == nb[1] && d.kind(nb[0]).kind == Kind::H)
        throw std::invalid_argument("compose: gluing closes a loop through an H-box");
      d.add_edge(nb[0], nb[1]);
    } else {
      d.remove_node(b);
    }
  }
  d.validate();
  return d;
}

Diagram tensor(const Diagram& f, const Diagram& g) {
  Diagram d;
  auto rf = absorb(d, f, {});
  auto rg = absorb(d, g, ids_of(f));
  std::vector<NodeId> ins, outs;
  for (const auto& id : f.inputs()) ins.push_back(rf.at(id));
  for (const auto& id : g.inputs()) ins.push_back(rg.at(id));
  for (const auto& id : f.outputs()) outs.push_back(rf.at(id));
  for (const auto& id : g.outputs()) outs.push_back(rg.at(id));
  d.set_inputs(ins);
  d.set_outputs(outs);
  return d;
}

Diagram dagger(const Diagram& f) {
  Diagram d = f;
  for (const auto& id : f.node_ids()) {
    NodeKind k = f.kind(id);
    if (k.is_spider()) {
      k.phase = -k.phase;
      d.set_kind(id, k);
    }
  }
  d.set_inputs(f.outputs());
  d.set_outputs(f.inputs());
  return d;
}

bool iso_equal(const Diagram& f, const Diagram& g) {
  if (f.node_count() != g.node_count() || f.edge_count() != g.edge_count()) return false;
  if (f.inputs().size() != g.inputs().size() || f.outputs().size() != g.outputs().size())
    return false;
  std::map<NodeId, NodeId> fwd, back;
  auto bind = [&](const NodeId& a, const NodeId& b) {
    fwd[a] = b;
    back[b] = a;
  };
  auto compatible = [&](const NodeId& a, const NodeId& b) {
    if (!(f.kind(a) == g.kind(b)) || f.degree(a) != g.degree(b)) return false;
    if (f.self_loops(a) != g.self_loops(b)) return false;
    for (const auto& x : f.neighbours(a)) {
      auto it = fwd.find(x);
      if (it == fwd.end()) continue;
      if (f.edge_count(a, x) != g.edge_count(b, it->second)) return false;
    }
    for (const auto& y : g.neighbours(b)) {
      auto it = back.find(y);
      if (it == back.end()) continue;
      if (g.edge_count(b, y) != f.edge_count(a, it->second)) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < f.inputs().size(); ++i) {
    if (fwd.count(f.inputs()[i])) return false;
    bind(f.inputs()[i], g.inputs()[i]);
  }
  for (std::size_t i = 0; i < f.outputs().size(); ++i) bind(f.outputs()[i], g.outputs()[i]);
  // Boundary-to-boundary consistency is checked once the neighbours are mapped.
  std::vector<NodeId> order;
  {
    std::set<NodeId> queued;
    std::vector<NodeId> frontier;
    for (const auto& [a, b] : fwd) frontier.push_back(a), queued.insert(a);
    auto bfs = [&](std::vector<NodeId> fr) {
      while (!fr.empty()) {
        std::vector<NodeId> next;
        for (const auto& a : fr)
          for (const auto& x : f.neighbours(a))
            if (queued.insert(x).second) {
              order.push_back(x);
              next.push_back(x);
            }
        fr = std::move(next);
      }
    };
    bfs(frontier);
    for (const auto& id : f.node_ids())
      if (queued.insert(id).second) {
        order.push_back(id);
        bfs({id});
      }
  }
  for (const auto& [a, b] : std::map<NodeId, NodeId>(fwd))
    if (!compatible(a, b)) return false;
  const auto g_ids = g.node_ids();
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    const auto& a = order[i];
    for (const auto& b : g_ids) {
      if (back.count(b) || !compatible(a, b)) continue;
      bind(a, b);
      if (search(i + 1)) return true;
      fwd.erase(a);
      back.erase(b);
    }
    return false;
  };
  return search(0);
}

Diagram strip_scalars(const Diagram& d, bool any_nonzero) {
  Diagram out = d;
  for (const auto& id : d.node_ids()) {
    const auto& k = d.kind(id);
    if (!k.is_spider() || d.degree(id) != 0) continue;
    if (k.phase.is_zero() || (any_nonzero && !k.phase.is_pi())) out.remove_node(id);
  }
  return out;
}

}  // namespace zxr
