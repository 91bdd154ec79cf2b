#pragma once

#include <stdexcept>

#include "atomsep/operators.hpp"

namespace atomsep {

// Numerical failure of a solve or propagation; maps to a distinct exit code
// in the command line tools.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The steady-state solve found a (near-)degenerate kernel.
struct DegenerateKernelError : NumericError {
  using NumericError::NumericError;
};

// Generator of the collective master equation in column-stacked form,
//   L(rho) = -i [H, rho]
//            - sum_ij gamma_ij (S_i+ S_j- rho - 2 S_j- rho S_i+ + rho S_i+ S_j-)
// with gamma_11 = gamma_22 = gamma and gamma_12 = gamma_21 the incoherent
// cross-damping of the configuration. Under this convention a single atom's
// excited population decays at rate 2 gamma.
struct LiouvillianMatrix {
  SuperOp matrix;
  SystemConfig config;
};

LiouvillianMatrix build_liouvillian(const SystemConfig& config);

// Applies L to a 4x4 operator (convenience wrapper over the matrix form).
Operator4 apply(const LiouvillianMatrix& liouvillian, const Operator4& rho);

// Steady state: the unique rho with L(rho) = 0 and Tr rho = 1, from a dense
// partial-pivot LU solve of L with one row replaced by the vectorized trace
// constraint. Throws DegenerateKernelError if the replaced system is
// singular or the residual exceeds 1e-10. Warns on stderr when the solve is
// conditioned worse than 1e12.
DensityMatrix steady_state(const LiouvillianMatrix& liouvillian);

// Density-matrix diagnostics used by tests and internal sanity checks.
double hermiticity_error(const Eigen::Matrix4cd& m);
double min_eigenvalue(const Eigen::Matrix4cd& hermitian);

}  // namespace atomsep
