#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <stdexcept>

#include "zxr/diagram.hpp"

namespace zxr {

using CMatrix = Eigen::MatrixXcd;
using cd = std::complex<double>;

struct ModelN {
  int n = 1;
};

// Largest intermediate tensor the contraction may allocate.
inline constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 26;

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rows index outputs, columns index inputs, both big-endian.
CMatrix evaluate(const Diagram& d, ModelN model = {});

struct ScalarFit {
  bool equal = false;
  cd lambda{0, 0};        // A ~ lambda * B
  double residual = 0;    // max |A' - lambda' B'| with both sides scaled to max-abs 1
  double opt_residual = 0;  // same, with the least-squares lambda'
};

ScalarFit fit_scalar(const CMatrix& a, const CMatrix& b, double tol = 1e-9);
bool equal_up_to_scalar(const CMatrix& a, const CMatrix& b, double tol = 1e-9);

// Generator matrices as printed in the interpretation table (n = 1).
CMatrix table_matrix(Generator g, double alpha = 0.0);

}  // namespace zxr
