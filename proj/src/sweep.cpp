#include "zxr/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "zxr/semantics.hpp"

namespace zxr {

namespace {

// Runs job(i) for i in [0, n) on a small pool; job must be thread-safe.
template <class Job>
void parallel_for(std::size_t n, unsigned threads, Job job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) job(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

std::string join_ids(const Anchor& a) {
  std::string s;
  for (const auto& id : a) s += (s.empty() ? "" : " ") + id;
  return s;
}

std::vector<RuleParams> param_variants(RuleId r) {
  std::vector<RuleParams> v(1);
  if (r == RuleId::SpiderSplit) {
    RuleParams p;
    p.phase = Phase(1, 3);
    v.push_back(p);
  } else if (r == RuleId::IdentityInsert) {
    RuleParams p;
    p.colour = Kind::X;
    v.push_back(p);
  }
  return v;
}

std::vector<Diagram> random_diagrams(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Diagram> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_diagram(rng));
  return out;
}

}  // namespace

std::vector<SimpleGraph> all_graphs(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<SimpleGraph> out;
  out.reserve(std::size_t{1} << pairs);
  for (unsigned long long mask = 0; mask < (1ULL << pairs); ++mask) out.push_back(graph_from_mask(n, mask));
  return out;
}

std::vector<SimpleGraph> random_graphs(std::size_t count, int min_v, int max_v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(min_v, max_v);
  std::vector<SimpleGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = size(rng);
    const int pairs = n * (n - 1) / 2;
    const unsigned long long mask = rng() & ((1ULL << pairs) - 1);
    out.push_back(graph_from_mask(n, mask));
  }
  return out;
}

GraphSweep sweep_graphs(GraphProperty p, const std::vector<SimpleGraph>& graphs, double tol,
                        unsigned threads) {
  GraphSweep res;
  res.graphs = graphs.size();
  std::vector<std::vector<GraphFailure>> fails(graphs.size());
  std::atomic<std::size_t> checks{0};
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    for (const auto& v : graphs[i].vertices()) {
      const bool ok = p == GraphProperty::Fixpoint ? check_fixpoint(graphs[i], v, tol)
                                                   : check_vdn(graphs[i], v, tol);
      ++checks;
      if (!ok) fails[i].push_back({graphs[i], v});
    }
  });
  res.checks = checks;
  for (auto& f : fails) res.failures.insert(res.failures.end(), f.begin(), f.end());
  return res;
}

Diagram random_diagram(std::mt19937_64& rng, int max_nodes) {
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  static const Phase kPhases[] = {Phase(0), Phase(0), Phase(0), Phase(1, 2), Phase(1), Phase(3, 2), Phase(1, 4)};

  const int total = uni(2, std::max(2, max_nodes));
  Diagram d;
  std::vector<NodeId> open;     // spiders that take random legs
  std::vector<NodeId> pending;  // motif spiders owed exactly one more leg
  int used = 0;

  // Planted motifs so that the larger left-hand sides occur regularly.
  const int motif = uni(0, 4);
  if (motif == 0 && total >= 5) {
    const Kind a = coin(0.5) ? Kind::Z : Kind::X;
    std::vector<NodeId> as, bs;
    for (int k = 0; k < 2; ++k) as.push_back(d.add_node({a, Phase{}}));
    for (int k = 0; k < 2; ++k) bs.push_back(d.add_node({opposite(a), Phase{}}));
    for (const auto& x : as)
      for (const auto& y : bs) d.add_edge(x, y);
    pending = {as[0], as[1], bs[0], bs[1]};
    used = 4;
  } else if (motif == 1 && total >= 3) {
    const Kind a = coin(0.5) ? Kind::Z : Kind::X;
    const NodeId p = d.add_node({a, Phase(1)});
    const NodeId t = d.add_node({opposite(a), Phase{}});
    d.add_edge(p, t);
    pending.push_back(p);
    open.push_back(t);
    used = 2;
  }

  const int rest = total - used;
  int n_in = uni(0, 2), n_out = uni(0, 2);
  while (n_in + n_out > 0 && rest - n_in - n_out < 1) (n_in > 0 ? n_in : n_out)--;
  const int internal = rest - n_in - n_out;

  std::vector<NodeId> hs;
  for (int k = 0; k < internal; ++k) {
    const int roll = uni(0, 9);
    const Phase ph = kPhases[uni(0, 6)];
    if (roll < 4 || (k == internal - 1 && open.empty()))
      open.push_back(d.add_node(NodeKind::z(ph)));
    else if (roll < 8)
      open.push_back(d.add_node(NodeKind::x(ph)));
    else
      hs.push_back(d.add_node(NodeKind::h()));
  }
  if (open.empty()) open.push_back(d.add_node(NodeKind::z()));
  auto any_open = [&] { return open[uni(0, static_cast<int>(open.size()) - 1)]; };

  std::vector<int> free(hs.size(), 2);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    while (free[i] > 0) {
      std::vector<std::size_t> others;
      for (std::size_t j = 0; j < hs.size(); ++j)
        if (j != i && free[j] > 0) others.push_back(j);
      if (!others.empty() && coin(0.3)) {
        const auto j = others[uni(0, static_cast<int>(others.size()) - 1)];
        d.add_edge(hs[i], hs[j]);
        --free[j];
      } else {
        d.add_edge(hs[i], any_open());
      }
      --free[i];
    }
  }
  auto leg_owner = [&] {
    if (pending.empty()) return any_open();
    const NodeId p = pending.back();
    pending.pop_back();
    return p;
  };
  for (int k = 0; k < n_in; ++k) {
    const NodeId b = d.add_input();
    d.add_edge(b, leg_owner());
  }
  for (int k = 0; k < n_out; ++k) {
    const NodeId b = d.add_output();
    d.add_edge(leg_owner(), b);
  }
  for (const auto& p : pending) d.add_edge(p, any_open());
  const int extra = uni(0, static_cast<int>(open.size()) + 2);
  for (int k = 0; k < extra; ++k) {
    const NodeId a = any_open();
    const NodeId b = coin(0.1) ? a : any_open();
    d.add_edge(a, b);
  }
  d.validate();
  return d;
}

RewriteSweep sweep_rewrites(std::size_t count, std::uint64_t seed, const std::vector<int>& models,
                            double tol, unsigned threads) {
  const auto diagrams = random_diagrams(count, seed);
  RewriteSweep res;
  res.diagrams = diagrams.size();
  std::vector<std::vector<std::string>> fails(diagrams.size());
  std::atomic<std::size_t> rewrites{0};
  parallel_for(diagrams.size(), threads, [&](std::size_t i) {
    const Diagram& d = diagrams[i];
    std::vector<CMatrix> base;
    for (int n : models) base.push_back(evaluate(d, {n}));
    for (RuleId r : all_rules()) {
      if (is_euler(r)) continue;
      for (const auto& at : match_sites(r, d)) {
        for (const auto& p : param_variants(r)) {
          const Diagram out = apply(r, d, at, {}, p);
          ++rewrites;
          for (std::size_t k = 0; k < models.size(); ++k) {
            if (equal_up_to_scalar(base[k], evaluate(out, {models[k]}), tol)) continue;
            std::ostringstream os;
            os << "diagram " << i << ": " << rule_name(r) << " at [" << join_ids(at) << "]";
            if (p.phase) os << " phase " << p.phase->str();
            os << ", n=" << models[k];
            fails[i].push_back(os.str());
          }
        }
      }
    }
  });
  res.rewrites = rewrites;
  for (auto& f : fails) res.failures.insert(res.failures.end(), f.begin(), f.end());
  return res;
}

std::vector<std::string> normal_form_violations(const Diagram& d) {
  std::vector<std::string> out;
  if (!match_sites(RuleId::SpiderFuse, d).empty()) out.push_back("fusable pair");
  if (!normalize_sites(RuleId::IdentityRemove, d).empty()) out.push_back("removable identity");
  for (const auto& id : d.node_ids()) {
    if (!d.is_spider(id)) continue;
    if (d.self_loops(id) != 0) out.push_back("self-loop on " + id);
  }
  for (const auto& at : match_sites(RuleId::Hopf, d))
    out.push_back("parallel edges between " + at[0] + " and " + at[1]);
  return out;
}

NormalizeSweep sweep_normalize(std::size_t count, std::uint64_t seed, const std::vector<int>& models,
                               double tol, unsigned threads) {
  const auto diagrams = random_diagrams(count, seed);
  NormalizeSweep res;
  res.diagrams = diagrams.size();
  std::vector<std::vector<std::string>> fails(diagrams.size());
  std::atomic<std::size_t> steps{0};
  parallel_for(diagrams.size(), threads, [&](std::size_t i) {
    const Diagram& d = diagrams[i];
    std::vector<NormalizeStep> trace;
    Diagram nf;
    try {
      nf = normalize(d, &trace);
    } catch (const std::exception& e) {
      fails[i].push_back("diagram " + std::to_string(i) + ": " + e.what());
      return;
    }
    steps += trace.size();
    for (const auto& v : normal_form_violations(nf)) fails[i].push_back("diagram " + std::to_string(i) + ": " + v);
    for (int n : models)
      if (!equal_up_to_scalar(evaluate(d, {n}), evaluate(nf, {n}), tol))
        fails[i].push_back("diagram " + std::to_string(i) + ": semantics changed at n=" + std::to_string(n));
  });
  res.steps = steps;
  for (auto& f : fails) res.failures.insert(res.failures.end(), f.begin(), f.end());
  return res;
}

}  // namespace zxr
