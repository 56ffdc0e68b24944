#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zxr/diagram.hpp"

namespace zxr {

enum class RuleId {
  SpiderFuse,
  SpiderSplit,
  IdentityRemove,
  IdentityInsert,
  SelfLoopDrop,
  Copy,
  Bialgebra,
  BialgebraInverse,
  PiCommute,
  PiState,
  Hopf,
  HCancel,
  HColour,
  HPhaseSlide,
  HState,
  EulerH,
  EulerHInverse,
};

const std::vector<RuleId>& all_rules();
std::string rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);
bool is_euler(RuleId r);

struct RewriteConfig {
  bool euler_axiom = false;
};

// Extra choices a rule cannot read off its anchor.
struct RuleParams {
  std::optional<Phase> phase;   // SpiderSplit: phase moved onto the new spider
  std::optional<Kind> colour;   // IdentityInsert: colour of the inserted spider
};

struct MatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Empty string when the anchor matches, otherwise the reason it does not.
std::string check_anchor(RuleId rule, const Diagram& d, const Anchor& at);
std::vector<Anchor> match_sites(RuleId rule, const Diagram& d);
Diagram apply(RuleId rule, const Diagram& d, const Anchor& at, const RewriteConfig& cfg = {},
              const RuleParams& params = {});

struct NormalizeStep {
  RuleId rule;
  Anchor anchor;
};

// Sites normalize acts on: match_sites, except that identity spiders next to an H-box are kept
// so that graph states are already normal.
std::vector<Anchor> normalize_sites(RuleId rule, const Diagram& d);
Diagram normalize(const Diagram& d, std::vector<NormalizeStep>* trace = nullptr);
bool is_bipartite_form(const Diagram& d);

// Left-hand sides used to check a rule schema against a model.
struct AxiomInstance {
  std::string label;
  Diagram lhs;
  Anchor anchor;
  RuleParams params;
};
std::vector<AxiomInstance> axiom_instances(RuleId rule);
const std::vector<Phase>& phase_grid();

}  // namespace zxr
