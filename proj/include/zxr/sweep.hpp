#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zxr/diagram.hpp"
#include "zxr/graphstate.hpp"
#include "zxr/rules.hpp"

namespace zxr {

// Every labelled graph on vertices g0..g<n-1>.
std::vector<SimpleGraph> all_graphs(int n);
// Graphs with a vertex count drawn uniformly from [min_v, max_v] and edge probability 1/2.
std::vector<SimpleGraph> random_graphs(std::size_t count, int min_v, int max_v, std::uint64_t seed);

enum class GraphProperty { Fixpoint, Vdn };

struct GraphFailure {
  SimpleGraph graph;
  std::string vertex;
};

struct GraphSweep {
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::vector<GraphFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Checks the property at every vertex of every graph, spread over a worker pool.
GraphSweep sweep_graphs(GraphProperty p, const std::vector<SimpleGraph>& graphs, double tol = 1e-9,
                        unsigned threads = 0);

// A random valid diagram with at most max_nodes nodes, boundaries included.
Diagram random_diagram(std::mt19937_64& rng, int max_nodes = 10);

struct RewriteSweep {
  std::size_t diagrams = 0;
  std::size_t rewrites = 0;
  std::vector<std::string> failures;  // "diagram <k>: <rule> at <ids>, n=<n>"
};

// Applies every non-Euler rule at every matching anchor and compares semantics.
RewriteSweep sweep_rewrites(std::size_t count, std::uint64_t seed, const std::vector<int>& models,
                            double tol = 1e-9, unsigned threads = 0);

struct NormalizeSweep {
  std::size_t diagrams = 0;
  std::size_t steps = 0;
  std::vector<std::string> failures;
};

// Normalizes each random diagram and checks the normal-form conditions and semantics.
NormalizeSweep sweep_normalize(std::size_t count, std::uint64_t seed, const std::vector<int>& models,
                               double tol = 1e-9, unsigned threads = 0);

// Reasons d is not in normal form; empty when it is.
std::vector<std::string> normal_form_violations(const Diagram& d);

}  // namespace zxr
