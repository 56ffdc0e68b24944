#pragma once
// Hand-written matrices used as independent oracles. Nothing here calls the library's evaluator.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

using M = Eigen::MatrixXcd;
using cd = std::complex<double>;
inline const cd I{0, 1};

inline M kron(const M& a, const M& b) {
  M r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

inline M id(int n = 2) { return M::Identity(n, n); }

inline M had() {
  M h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::numbers::sqrt2;
}

// diag(1, e^{i a}) for a in units of pi.
inline M zrot(double a_pi) {
  M m = M::Zero(2, 2);
  m(0, 0) = 1;
  m(1, 1) = std::exp(I * (a_pi * std::numbers::pi));
  return m;
}

// X rotation as the Hadamard conjugate of the Z rotation.
inline M xrot(double a_pi) { return had() * zrot(a_pi) * had(); }

inline M plus() {
  M v(2, 1);
  v << 1, 1;
  return v / std::numbers::sqrt2;
}

inline M ket(int bit) {
  M v = M::Zero(2, 1);
  v(bit, 0) = 1;
  return v;
}

// Controlled-Z between qubits i and j of an n-qubit register, big-endian.
inline M cz(int n, int i, int j) {
  const int dim = 1 << n;
  M m = M::Identity(dim, dim);
  for (int x = 0; x < dim; ++x) {
    const int bi = (x >> (n - 1 - i)) & 1, bj = (x >> (n - 1 - j)) & 1;
    if (bi && bj) m(x, x) = -1;
  }
  return m;
}

// Single-qubit gate g on wire k of n.
inline M on_wire(int n, int k, const M& g) {
  M r = M::Identity(1, 1);
  for (int w = 0; w < n; ++w) r = kron(r, w == k ? g : id());
  return r;
}

// True when a = lambda * b for some nonzero lambda, within tol after scaling both to max-abs 1.
inline bool proportional(const M& a, const M& b, double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double na = a.cwiseAbs().maxCoeff(), nb = b.cwiseAbs().maxCoeff();
  if (na < tol || nb < tol) return na < tol && nb < tol;
  const M x = a / na, y = b / nb;
  Eigen::Index r, c;
  y.cwiseAbs().maxCoeff(&r, &c);
  const cd lambda = x(r, c) / y(r, c);
  return (x - lambda * y).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace oracle
