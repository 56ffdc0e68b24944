#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zxr/diagram.hpp"
#include "zxr/rules.hpp"

namespace zxr {

// One step names either a rule or a hypothesis declared by the script.
struct ProofStep {
  std::string rule;
  Anchor anchor;
  RuleParams params;
};

struct ProofScript {
  std::string name;
  std::string ref;
  std::optional<Diagram> start;
  std::vector<std::string> hypotheses;
  std::vector<ProofStep> steps;

  bool uses_euler() const;
};

// JSON lines: an optional header object followed by one object per step.
std::string to_jsonl(const ProofScript& s);
ProofScript parse_jsonl(std::string_view text);
ProofScript read_script_file(const std::string& path);

// Rewrites assumed inside a single script. They are not part of the rule set.
struct Hypothesis {
  std::string name;
  std::string statement;
  std::function<std::string(const Diagram&, const Anchor&)> check;
  std::function<Diagram(const Diagram&, const Anchor&)> apply;
};
const std::vector<Hypothesis>& hypotheses();
const Hypothesis* find_hypothesis(std::string_view name);

struct ReplayError : std::runtime_error {
  std::size_t step;  // 1-based
  std::string rule;
  bool drift;  // true when the step matched but changed the semantics
  ReplayError(std::size_t s, std::string r, const std::string& what, bool d = false);
};

struct ReplayOptions {
  RewriteConfig cfg{};
  bool check = true;
  double tol = 1e-9;
  // Models checked after each step. Empty means n = 1, plus n = 2 for scripts
  // that use neither the Euler rules nor hypotheses.
  std::vector<int> models;
};

Diagram replay(const ProofScript& s, const Diagram& start, const ReplayOptions& opt = {});
Diagram replay(const ProofScript& s, const ReplayOptions& opt = {});

struct Derivation {
  Diagram result;
  ProofScript script;
};

// K_{m,n} between the red ids and the green ids, each spider with one outside leg.
Derivation reduce_complete_bipartite(const Diagram& d, const Anchor& reds, const Anchor& greens);
// Alternating cycle listed in order, each spider with one outside leg.
Derivation reduce_even_cycle(const Diagram& d, const Anchor& cycle);

ProofScript fixpoint_script(int n);
ProofScript hopf_script();
ProofScript euler_nonunique_script();
ProofScript pi2_colour_script();
ProofScript triangle_lc_script();
ProofScript derive_euler_from_lc_script();
ProofScript euler3_to_h_script();

bool euler_nonuniqueness_check(const RewriteConfig& cfg);
bool pi2_colour_change_check(const RewriteConfig& cfg);

// Test and script start diagrams.
Diagram knm_diagram(int m, int n);   // reds r1..rm on inputs, greens g1..gn on outputs
Diagram p2_diagram(int m, int n);    // green on the reds' legs, red on the greens' legs
Diagram cycle_diagram(int len);      // x1 y1 x2 y2 ... with x red on inputs, y green on outputs
Anchor cycle_order(int len);
Diagram c8_hexagon_form();           // the two-hexagon picture with cycle_diagram(8)'s boundaries
Diagram hopf_lhs();
Diagram hopf_rhs();
Diagram h_diagram();
Diagram euler_chain(Kind outer);     // outer(-pi/2) inner(-pi/2) outer(-pi/2) on one wire
Diagram pi2_colour_lhs();            // X(pi/2) on one wire
Diagram pi2_colour_rhs();
Diagram triangle_lc_rhs();
Diagram euler3_diagram();

struct ShippedScript {
  std::string file;
  ProofScript script;
  std::optional<Diagram> expected;  // final diagram up to isomorphism, when the result is fixed
  bool needs_euler = false;
};
std::vector<ShippedScript> shipped_scripts();

}  // namespace zxr
