#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zxr/diagram.hpp"

namespace zxr {

// Simple undirected graph with vertices kept in declaration order.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> vertices);

  void add_vertex(const std::string& v);
  void add_edge(const std::string& a, const std::string& b);
  void toggle_edge(std::size_t i, std::size_t j);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t index_of(const std::string& v) const;  // throws std::out_of_range
  bool has_edge(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> neighbours(std::size_t i) const;

  bool operator==(const SimpleGraph&) const = default;
  bool operator<(const SimpleGraph& o) const;

 private:
  std::vector<std::string> vertices_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;  // (i, j) with i < j
};

SimpleGraph parse_edges(std::string_view text);
std::string serialize_edges(const SimpleGraph& g);

SimpleGraph star_graph(int n);      // centre "c", leaves "l1".."l<n-1>"
SimpleGraph triangle_graph();       // u, v, w
SimpleGraph complete_graph(int n);  // "k1".."k<n>"
// The labelled graph on n vertices "g0".."g<n-1>" whose edge set is the bitmask over index pairs.
SimpleGraph graph_from_mask(int n, unsigned long long mask);

Diagram cz_diagram();
Diagram graph_state(const SimpleGraph& g);
SimpleGraph local_complement(const SimpleGraph& g, const std::string& u);
Diagram fixpoint_lhs(const SimpleGraph& g, const std::string& u);
Diagram vdn_lhs(const SimpleGraph& g, const std::string& u);
// vdn_lhs with an explicit sign pair; used by the calibration test.
Diagram vdn_lhs_signed(const SimpleGraph& g, const std::string& u, const Phase& on_u,
                       const Phase& on_neighbours);
bool check_fixpoint(const SimpleGraph& g, const std::string& u, double tol = 1e-9);
bool check_vdn(const SimpleGraph& g, const std::string& u, double tol = 1e-9);

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
std::vector<SimpleGraph> lc_orbit(const SimpleGraph& g, std::size_t cap = 8);

}  // namespace zxr
