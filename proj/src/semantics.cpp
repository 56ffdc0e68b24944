#include "zxr/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace zxr {

namespace {

// Dense tensor; labels[0] is the most significant bit of the flat index.
struct Tensor {
  std::vector<int> labels;
  std::vector<cd> data;
};

std::size_t checked_size(std::size_t rank) {
  if (rank >= 63 || (std::size_t{1} << rank) > kMaxTensorEntries)
    throw ResourceLimit("tensor of rank " + std::to_string(rank) + " exceeds the 2^26 entry cap");
  return std::size_t{1} << rank;
}

Tensor spider_tensor(Kind k, double theta, std::vector<int> labels) {
  const std::size_t r = labels.size();
  Tensor t{std::move(labels), std::vector<cd>(checked_size(r))};
  const cd e = std::polar(1.0, theta);
  if (k == Kind::Z) {
    t.data[0] += 1.0;
    t.data[t.data.size() - 1] += e;
  } else {
    const double norm = std::pow(std::numbers::sqrt2, -static_cast<double>(r));
    for (std::size_t x = 0; x < t.data.size(); ++x) {
      const double sign = (std::popcount(x) % 2) ? -1.0 : 1.0;
      t.data[x] = (1.0 + e * sign) * norm;
    }
  }
  return t;
}

// Contracts two equal labels of one tensor (a self-loop).
Tensor trace_pair(const Tensor& t, int label) {
  std::vector<int> pos;
  for (std::size_t i = 0; i < t.labels.size(); ++i)
    if (t.labels[i] == label) pos.push_back(static_cast<int>(i));
  const int r = static_cast<int>(t.labels.size());
  Tensor out;
  for (int i = 0; i < r; ++i)
    if (i != pos[0] && i != pos[1]) out.labels.push_back(t.labels[i]);
  out.data.assign(std::size_t{1} << out.labels.size(), cd{0, 0});
  const int b0 = r - 1 - pos[0], b1 = r - 1 - pos[1];
  for (std::size_t x = 0; x < t.data.size(); ++x) {
    if (((x >> b0) & 1) != ((x >> b1) & 1)) continue;
    std::size_t y = 0;
    for (int i = 0; i < r; ++i) {
      if (i == pos[0] || i == pos[1]) continue;
      y = (y << 1) | ((x >> (r - 1 - i)) & 1);
    }
    out.data[y] += t.data[x];
  }
  return out;
}

// Builds lookup tables giving the partial flat index contributed by a sub-assignment.
std::vector<std::size_t> scatter(const std::vector<int>& sub, const std::vector<int>& full) {
  const int r = static_cast<int>(full.size());
  std::vector<int> shifts;
  for (int l : sub) {
    const auto it = std::find(full.begin(), full.end(), l);
    shifts.push_back(it == full.end() ? -1 : r - 1 - static_cast<int>(it - full.begin()));
  }
  const int k = static_cast<int>(sub.size());
  std::vector<std::size_t> table(std::size_t{1} << k, 0);
  for (std::size_t v = 0; v < table.size(); ++v) {
    std::size_t idx = 0;
    for (int i = 0; i < k; ++i) {
      if (shifts[i] < 0) continue;
      if ((v >> (k - 1 - i)) & 1) idx |= std::size_t{1} << shifts[i];
    }
    table[v] = idx;
  }
  return table;
}

Tensor contract(const Tensor& a, const Tensor& b) {
  std::vector<int> shared, rest;
  for (int l : a.labels)
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end())
      shared.push_back(l);
    else
      rest.push_back(l);
  for (int l : b.labels)
    if (std::find(shared.begin(), shared.end(), l) == shared.end()) rest.push_back(l);
  Tensor out{rest, std::vector<cd>(checked_size(rest.size()), cd{0, 0})};
  const auto ra = scatter(rest, a.labels), rb = scatter(rest, b.labels);
  const auto sa = scatter(shared, a.labels), sb = scatter(shared, b.labels);
  for (std::size_t r = 0; r < out.data.size(); ++r) {
    cd acc{0, 0};
    for (std::size_t s = 0; s < sa.size(); ++s) acc += a.data[ra[r] | sa[s]] * b.data[rb[r] | sb[s]];
    out.data[r] = acc;
  }
  return out;
}

Tensor permute(const Tensor& t, const std::vector<int>& order) {
  Tensor out{order, std::vector<cd>(t.data.size())};
  const auto tab = scatter(order, t.labels);
  for (std::size_t v = 0; v < out.data.size(); ++v) out.data[v] = t.data[tab[v]];
  return out;
}

std::size_t result_rank(const Tensor& a, const Tensor& b) {
  std::size_t shared = 0;
  for (int l : a.labels)
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) ++shared;
  return a.labels.size() + b.labels.size() - 2 * shared;
}

bool touches(const Tensor& a, const Tensor& b) {
  for (int l : a.labels)
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) return true;
  return false;
}

}  // namespace

CMatrix evaluate(const Diagram& d, ModelN model) {
  d.validate();
  std::map<NodeId, std::vector<int>, IdLess> legs;
  std::map<NodeId, int, IdLess> open;
  int next = 0;
  std::vector<Tensor> net;
  for (const auto& [a, b] : d.edges()) {
    const bool ba = d.kind(a).kind == Kind::Boundary, bb = d.kind(b).kind == Kind::Boundary;
    const int l = next++;
    if (ba && bb) {
      const int l2 = next++;
      open[a] = l;
      open[b] = l2;
      net.push_back({{l, l2}, {1, 0, 0, 1}});
      continue;
    }
    if (ba) open[a] = l; else legs[a].push_back(l);
    if (bb) open[b] = l; else legs[b].push_back(l);
  }
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (const auto& id : d.node_ids()) {
    const auto& k = d.kind(id);
    if (k.kind == Kind::Boundary) continue;
    std::vector<int> ls = legs[id];
    Tensor t;
    if (k.kind == Kind::H) {
      t = {ls, {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2}};
    } else {
      // A self-loop contributes its label twice; give the second end its own label and trace.
      std::vector<int> seen, loops;
      for (auto& l : ls) {
        if (std::find(seen.begin(), seen.end(), l) != seen.end()) {
          loops.push_back(l);
          l = next++;
          loops.push_back(l);
        } else {
          seen.push_back(l);
        }
      }
      t = spider_tensor(k.kind, k.phase.scaled(model.n).radians(), ls);
      for (std::size_t i = 0; i < loops.size(); i += 2) {
        for (auto& l : t.labels)
          if (l == loops[i + 1]) l = loops[i];
        t = trace_pair(t, loops[i]);
      }
    }
    net.push_back(std::move(t));
  }

  while (net.size() > 1) {
    std::size_t bi = 0, bj = 0, best = std::numeric_limits<std::size_t>::max();
    bool connected = false;
    for (std::size_t i = 0; i < net.size(); ++i)
      for (std::size_t j = i + 1; j < net.size(); ++j) {
        const bool c = touches(net[i], net[j]);
        if (connected && !c) continue;
        const std::size_t r = result_rank(net[i], net[j]);
        if ((c && !connected) || r < best) {
          best = r;
          bi = i;
          bj = j;
          connected = connected || c;
        }
      }
    Tensor t = contract(net[bi], net[bj]);
    net.erase(net.begin() + static_cast<std::ptrdiff_t>(bj));
    net[bi] = std::move(t);
  }

  std::vector<int> order;
  for (const auto& id : d.outputs()) order.push_back(open.at(id));
  for (const auto& id : d.inputs()) order.push_back(open.at(id));
  Tensor fin = net.empty() ? Tensor{{}, {cd{1, 0}}} : permute(net.front(), order);
  const std::size_t rows = std::size_t{1} << d.outputs().size();
  const std::size_t cols = std::size_t{1} << d.inputs().size();
  CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = fin.data[r * cols + c];
  return m;
}

ScalarFit fit_scalar(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("equal_up_to_scalar: shape mismatch");
  ScalarFit fit;
  const double ma = a.cwiseAbs().maxCoeff(), mb = b.cwiseAbs().maxCoeff();
  const bool za = ma <= tol, zb = mb <= tol;
  if (za && zb) {
    fit.equal = true;
    return fit;
  }
  if (za || zb) {
    fit.residual = fit.opt_residual = 1.0;
    return fit;
  }
  const CMatrix an = a / ma, bn = b / mb;
  Eigen::Index r = 0, c = 0;
  bn.cwiseAbs().maxCoeff(&r, &c);
  const cd lam = an(r, c) / bn(r, c);
  fit.residual = (an - lam * bn).cwiseAbs().maxCoeff();
  const cd opt = bn.cwiseProduct(an.conjugate()).sum() == cd{0, 0}
                     ? cd{0, 0}
                     : std::conj(bn.cwiseProduct(an.conjugate()).sum()) / bn.squaredNorm();
  fit.opt_residual = (an - opt * bn).cwiseAbs().maxCoeff();
  fit.lambda = lam * ma / mb;
  fit.equal = fit.residual <= tol;
  return fit;
}

bool equal_up_to_scalar(const CMatrix& a, const CMatrix& b, double tol) {
  return fit_scalar(a, b, tol).equal;
}

CMatrix table_matrix(Generator g, double alpha) {
  const double s = 1.0 / std::numbers::sqrt2;
  const cd i{0, 1};
  CMatrix m;
  switch (g) {
    case Generator::EpsZDag: m.resize(2, 1); m << s, s; break;
    case Generator::EpsXDag: m.resize(2, 1); m << 1, 0; break;
    case Generator::EpsZ: m = table_matrix(Generator::EpsZDag).adjoint(); break;
    case Generator::EpsX: m = table_matrix(Generator::EpsXDag).adjoint(); break;
    case Generator::DeltaZDag: m.resize(2, 4); m << 1, 0, 0, 0, 0, 0, 0, 1; break;
    case Generator::DeltaXDag: m.resize(2, 4); m << s, 0, 0, s, 0, s, s, 0; break;
    case Generator::DeltaZ: m = table_matrix(Generator::DeltaZDag).adjoint(); break;
    case Generator::DeltaX: m = table_matrix(Generator::DeltaXDag).adjoint(); break;
    case Generator::PZ: m.resize(2, 2); m << 1, 0, 0, std::exp(i * alpha); break;
    case Generator::PX: {
      const cd c = std::cos(alpha / 2), sn = i * std::sin(alpha / 2);
      m.resize(2, 2);
      m << c, sn, sn, c;
      m *= std::exp(-i * alpha / 2.0);
      break;
    }
    case Generator::H: m.resize(2, 2); m << s, s, s, -s; break;
    case Generator::Wire: m = CMatrix::Identity(2, 2); break;
  }
  return m;
}

}  // namespace zxr
