#include "zxr/graphstate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "zxr/semantics.hpp"

namespace zxr {

SimpleGraph::SimpleGraph(std::vector<std::string> vertices) {
  for (auto& v : vertices) add_vertex(v);
}

void SimpleGraph::add_vertex(const std::string& v) {
  if (std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end())
    throw std::invalid_argument("duplicate vertex '" + v + "'");
  vertices_.push_back(v);
}

std::size_t SimpleGraph::index_of(const std::string& v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw std::out_of_range("unknown vertex '" + v + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

void SimpleGraph::add_edge(const std::string& a, const std::string& b) {
  const auto i = index_of(a), j = index_of(b);
  if (i == j) throw std::invalid_argument("self-loop on vertex '" + a + "'");
  if (!edges_.insert(std::minmax(i, j)).second)
    throw std::invalid_argument("duplicate edge " + a + " " + b);
}

void SimpleGraph::toggle_edge(std::size_t i, std::size_t j) {
  const auto e = std::minmax(i, j);
  if (!edges_.erase(e)) edges_.insert(e);
}

bool SimpleGraph::has_edge(std::size_t i, std::size_t j) const {
  return edges_.count(std::minmax(i, j)) != 0;
}

std::vector<std::size_t> SimpleGraph::neighbours(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < vertices_.size(); ++j)
    if (j != i && has_edge(i, j)) out.push_back(j);
  return out;
}

bool SimpleGraph::operator<(const SimpleGraph& o) const {
  return std::tie(vertices_, edges_) < std::tie(o.vertices_, o.edges_);
}

SimpleGraph parse_edges(std::string_view text) {
  SimpleGraph g;
  bool have_vertices = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
    };
    try {
      if (!have_vertices) {
        if (toks[0] != "vertices") fail("first line must be 'vertices ...'");
        for (std::size_t i = 1; i < toks.size(); ++i) g.add_vertex(toks[i]);
        have_vertices = true;
      } else if (toks[0] == "edge") {
        if (toks.size() != 3) fail("edge needs two vertices");
        g.add_edge(toks[1], toks[2]);
      } else {
        fail("unknown directive '" + toks[0] + "'");
      }
    } catch (const std::out_of_range& e) {
      fail(e.what());
    } catch (const std::invalid_argument& e) {
      const std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      fail(msg);
    }
  }
  if (!have_vertices) throw std::invalid_argument("missing 'vertices' line");
  return g;
}

std::string serialize_edges(const SimpleGraph& g) {
  std::ostringstream os;
  os << "vertices";
  for (const auto& v : g.vertices()) os << ' ' << v;
  os << '\n';
  for (const auto& [i, j] : g.edges()) os << "edge " << g.vertices()[i] << ' ' << g.vertices()[j] << '\n';
  return os.str();
}

SimpleGraph star_graph(int n) {
  SimpleGraph g;
  g.add_vertex("c");
  for (int i = 1; i < n; ++i) {
    g.add_vertex("l" + std::to_string(i));
    g.add_edge("c", "l" + std::to_string(i));
  }
  return g;
}

SimpleGraph triangle_graph() {
  SimpleGraph g({"u", "v", "w"});
  g.add_edge("u", "v");
  g.add_edge("u", "w");
  g.add_edge("v", "w");
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g;
  for (int i = 1; i <= n; ++i) g.add_vertex("k" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge("k" + std::to_string(i), "k" + std::to_string(j));
  return g;
}

SimpleGraph graph_from_mask(int n, unsigned long long mask) {
  SimpleGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("g" + std::to_string(i));
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1ULL) g.add_edge("g" + std::to_string(i), "g" + std::to_string(j));
  return g;
}

Diagram cz_diagram() {
  Diagram d;
  d.add_node("a", NodeKind::z());
  d.add_node("b", NodeKind::z());
  d.add_node("h", NodeKind::h());
  d.add_input("i0");
  d.add_input("i1");
  d.add_output("o0");
  d.add_output("o1");
  d.add_edge("i0", "a");
  d.add_edge("i1", "b");
  d.add_edge("a", "o0");
  d.add_edge("b", "o1");
  d.add_edge("a", "h");
  d.add_edge("h", "b");
  return d;
}

namespace {

// Spider ids are the vertex names; boundaries "o:<v>", H-boxes "h:<a>:<b>".
Diagram graph_state_ids(const SimpleGraph& g) {
  Diagram d;
  const auto& vs = g.vertices();
  for (const auto& v : vs) d.add_node(v, NodeKind::z());
  for (const auto& [i, j] : g.edges()) {
    const NodeId h = "h:" + vs[i] + ":" + vs[j];
    d.add_node(h, NodeKind::h());
    d.add_edge(vs[i], h);
    d.add_edge(h, vs[j]);
  }
  for (const auto& v : vs) {
    d.add_output("o:" + v);
    d.add_edge(v, "o:" + v);
  }
  return d;
}

// Puts a one-in one-out spider on the output wire of vertex v.
void on_wire(Diagram& d, const std::string& v, NodeKind k, const std::string& prefix) {
  const NodeId b = "o:" + v;
  const NodeId s = prefix + ":" + v;
  d.remove_edge(v, b);
  d.add_node(s, k);
  d.add_edge(v, s);
  d.add_edge(s, b);
}

}  // namespace

Diagram graph_state(const SimpleGraph& g) { return graph_state_ids(g); }

SimpleGraph local_complement(const SimpleGraph& g, const std::string& u) {
  const auto iu = g.index_of(u);
  SimpleGraph r = g;
  const auto nb = g.neighbours(iu);
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b) r.toggle_edge(nb[a], nb[b]);
  return r;
}

Diagram fixpoint_lhs(const SimpleGraph& g, const std::string& u) {
  const auto iu = g.index_of(u);
  Diagram d = graph_state_ids(g);
  on_wire(d, u, NodeKind::x(Phase(1)), "r");
  for (auto j : g.neighbours(iu)) on_wire(d, g.vertices()[j], NodeKind::z(Phase(1)), "r");
  return d;
}

Diagram vdn_lhs_signed(const SimpleGraph& g, const std::string& u, const Phase& on_u,
                       const Phase& on_neighbours) {
  const auto iu = g.index_of(u);
  Diagram d = graph_state_ids(g);
  on_wire(d, u, NodeKind::x(on_u), "r");
  for (auto j : g.neighbours(iu)) on_wire(d, g.vertices()[j], NodeKind::z(on_neighbours), "r");
  return d;
}

Diagram vdn_lhs(const SimpleGraph& g, const std::string& u) {
  // Sign pair fixed by the triangle calibration test: +pi/2 (X) on u, -pi/2 (Z) on N(u).
  return vdn_lhs_signed(g, u, Phase(1, 2), Phase(-1, 2));
}

bool check_fixpoint(const SimpleGraph& g, const std::string& u, double tol) {
  return equal_up_to_scalar(evaluate(fixpoint_lhs(g, u)), evaluate(graph_state(g)), tol);
}

bool check_vdn(const SimpleGraph& g, const std::string& u, double tol) {
  return equal_up_to_scalar(evaluate(vdn_lhs(g, u)), evaluate(graph_state(local_complement(g, u))),
                            tol);
}

std::vector<SimpleGraph> lc_orbit(const SimpleGraph& g, std::size_t cap) {
  if (g.vertices().size() > cap)
    throw CapExceeded("lc_orbit: " + std::to_string(g.vertices().size()) +
                      " vertices exceeds the cap of " + std::to_string(cap));
  std::set<SimpleGraph> seen{g};
  std::deque<SimpleGraph> todo{g};
  while (!todo.empty()) {
    const SimpleGraph cur = todo.front();
    todo.pop_front();
    for (const auto& v : cur.vertices()) {
      SimpleGraph next = local_complement(cur, v);
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace zxr
