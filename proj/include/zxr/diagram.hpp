#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zxr/phase.hpp"

namespace zxr {

enum class Kind { Z, X, H, Boundary };

struct NodeKind {
  Kind kind = Kind::Z;
  Phase phase;

  static NodeKind z(Phase p = {}) { return {Kind::Z, p}; }
  static NodeKind x(Phase p = {}) { return {Kind::X, p}; }
  static NodeKind h() { return {Kind::H, {}}; }
  static NodeKind boundary() { return {Kind::Boundary, {}}; }

  bool is_spider() const { return kind == Kind::Z || kind == Kind::X; }
  bool operator==(const NodeKind&) const = default;
};

Kind opposite(Kind k);
const char* kind_name(Kind k);

using NodeId = std::string;

// Natural order: shorter ids first, then lexicographic, so v2 < v10.
struct IdLess {
  bool operator()(const NodeId& a, const NodeId& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Anchor = std::vector<NodeId>;
using Edge = std::pair<NodeId, NodeId>;

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Open undirected multigraph. Self-loops appear twice in a node's neighbour list.
class Diagram {
 public:
  NodeId add_node(NodeKind k);
  void add_node(const NodeId& id, NodeKind k);
  NodeId add_input();
  NodeId add_output();
  void add_input(const NodeId& id);
  void add_output(const NodeId& id);

  void add_edge(const NodeId& a, const NodeId& b);
  void remove_edge(const NodeId& a, const NodeId& b);  // one copy
  void remove_node(const NodeId& id);                   // with all incident edges
  void set_kind(const NodeId& id, NodeKind k);

  bool has_node(const NodeId& id) const { return nodes_.count(id) != 0; }
  const NodeKind& kind(const NodeId& id) const;
  const std::vector<NodeId>& neighbours(const NodeId& id) const;
  std::size_t degree(const NodeId& id) const { return neighbours(id).size(); }
  std::size_t edge_count(const NodeId& a, const NodeId& b) const;
  std::size_t self_loops(const NodeId& id) const { return edge_count(id, id); }
  bool is_spider(const NodeId& id) const { return kind(id).is_spider(); }

  std::vector<NodeId> node_ids() const;
  std::vector<Edge> edges() const;  // sorted, endpoints ordered
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const;

  const std::vector<NodeId>& inputs() const { return in_; }
  const std::vector<NodeId>& outputs() const { return out_; }
  void set_inputs(std::vector<NodeId> v) { in_ = std::move(v); }
  void set_outputs(std::vector<NodeId> v) { out_ = std::move(v); }

  NodeId fresh_id();
  void validate() const;  // throws InvariantError

 private:
  std::map<NodeId, NodeKind, IdLess> nodes_;
  std::map<NodeId, std::vector<NodeId>, IdLess> adj_;
  std::vector<NodeId> in_, out_;
  std::set<NodeId> used_;
  std::uint64_t counter_ = 0;
};

enum class Generator {
  DeltaZ, DeltaZDag, EpsZ, EpsZDag, PZ,
  DeltaX, DeltaXDag, EpsX, EpsXDag, PX,
  H, Wire
};

Diagram generator(Generator g, std::optional<Phase> phase = std::nullopt);

// f after g: outputs of g glued to inputs of f.
Diagram compose(const Diagram& f, const Diagram& g);
Diagram tensor(const Diagram& f, const Diagram& g);
Diagram dagger(const Diagram& f);
bool iso_equal(const Diagram& f, const Diagram& g);

// Drops isolated spiders whose scalar value 1 + e^{ia} is nonzero in every model (a = 0),
// or, when any_nonzero is set, every isolated spider with a != pi.
Diagram strip_scalars(const Diagram& d, bool any_nonzero = false);

}  // namespace zxr
