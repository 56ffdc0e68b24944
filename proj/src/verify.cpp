#include "zxr/verify.hpp"

#include <algorithm>

namespace zxr {

AxiomResult check_axiom(RuleId rule, ModelN model, double tol) {
  AxiomResult res;
  res.rule = rule;
  res.model_n = model.n;
  const RewriteConfig cfg{true};
  for (const auto& inst : axiom_instances(rule)) {
    const Diagram rhs = apply(rule, inst.lhs, inst.anchor, cfg, inst.params);
    const auto fit = fit_scalar(evaluate(inst.lhs, model), evaluate(rhs, model), tol);
    ++res.instances;
    res.max_residual = std::max(res.max_residual, fit.opt_residual);
    if (!fit.equal && res.holds) {
      res.holds = false;
      res.first_failure = inst.label;
    }
  }
  return res;
}

bool verify_axiom(RuleId rule, ModelN model) { return check_axiom(rule, model).holds; }

std::vector<IndependenceRow> independence_report(const std::vector<int>& models) {
  std::vector<IndependenceRow> rows;
  for (int n : models)
    for (RuleId r : all_rules()) {
      if (r == RuleId::EulerHInverse) continue;
      const auto res = check_axiom(r, {n});
      std::optional<bool> expected = true;
      if (r == RuleId::EulerH) {
        if (n == 1) expected = true;
        else if (n == 2) expected = false;
        else expected = std::nullopt;
      }
      rows.push_back({n, r, res.holds, res.max_residual, expected});
    }
  return rows;
}

bool independence_as_expected(const std::vector<IndependenceRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const IndependenceRow& r) {
    return !r.expected || *r.expected == r.holds;
  });
}

nlohmann::json to_json(const std::vector<IndependenceRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"model_n", r.model_n},
                   {"axiom", rule_name(r.axiom)},
                   {"holds", r.holds},
                   {"max_residual", r.max_residual}});
  return arr;
}

}  // namespace zxr
