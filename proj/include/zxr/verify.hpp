#pragma once

#include "json.hpp"
#include <optional>
#include <string>
#include <vector>

#include "zxr/rules.hpp"
#include "zxr/semantics.hpp"

namespace zxr {

struct AxiomResult {
  RuleId rule = RuleId::SpiderFuse;
  int model_n = 1;
  bool holds = true;
  double max_residual = 0;  // after the least-squares scalar fit
  std::size_t instances = 0;
  std::string first_failure;
};

AxiomResult check_axiom(RuleId rule, ModelN model, double tol = 1e-9);
bool verify_axiom(RuleId rule, ModelN model);

struct IndependenceRow {
  int model_n;
  RuleId axiom;
  bool holds;
  double max_residual;
  std::optional<bool> expected;  // nullopt when no outcome is claimed
};

std::vector<IndependenceRow> independence_report(const std::vector<int>& models = {1, 2, 3});
bool independence_as_expected(const std::vector<IndependenceRow>& rows);
nlohmann::json to_json(const std::vector<IndependenceRow>& rows);

}  // namespace zxr
