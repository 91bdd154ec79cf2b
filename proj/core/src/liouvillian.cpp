#include "atomsep/liouvillian.hpp"

#include <iostream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "atomsep/couplings.hpp"

namespace atomsep {

LiouvillianMatrix build_liouvillian(const SystemConfig& config) {
  const Operator4 h = build_hamiltonian(config);
  const CouplingValues c = couplings_for(config);
  const double rates[2][2] = {{config.gamma, c.gamma12}, {c.gamma12, config.gamma}};

  const Complex i_unit(0.0, 1.0);
  SuperOp l = -i_unit * (left_mul(h) - right_mul(h));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Operator4& sp = sigma_plus(i + 1);
      const Operator4& sm = sigma_minus(j + 1);
      const Operator4 spsm = sp * sm;
      l -= rates[i][j] * (left_mul(spsm) - 2.0 * sandwich(sm, sp) + right_mul(spsm));
    }
  }
  return {l, config};
}

Operator4 apply(const LiouvillianMatrix& liouvillian, const Operator4& rho) {
  return unvectorize(liouvillian.matrix * vectorize(rho));
}

DensityMatrix steady_state(const LiouvillianMatrix& liouvillian) {
  SuperOp a = liouvillian.matrix;
  // Trace constraint replaces row 0; the diagonal of rho sits at vec
  // indices 0, 5, 10, 15.
  a.row(0).setZero();
  a(0, 0) = a(0, 5) = a(0, 10) = a(0, 15) = 1.0;
  Vec16 b = Vec16::Zero();
  b(0) = 1.0;

  Eigen::PartialPivLU<SuperOp> lu(a);
  const double rcond = lu.rcond();
  if (rcond < 1e-12) {
    std::cerr << "atomsep: steady-state solve condition number above 1e12 "
              << "(rcond = " << rcond << ")\n";
  }
  const Vec16 x = lu.solve(b);
  if (!x.allFinite()) {
    throw DegenerateKernelError("steady_state: singular replaced system");
  }

  DensityMatrix rho = unvectorize(x);
  rho = 0.5 * (rho + rho.adjoint().eval());
  rho /= rho.trace().real();

  const double residual = (liouvillian.matrix * vectorize(rho)).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-10)) {
    throw DegenerateKernelError(
        "steady_state: residual " + std::to_string(residual) +
        " exceeds 1e-10 (z1=" + std::to_string(liouvillian.config.z1) +
        ", z12=" + std::to_string(liouvillian.config.z12) +
        ", rabi=" + std::to_string(liouvillian.config.rabi) + ")");
  }
  return rho;
}

double hermiticity_error(const Eigen::Matrix4cd& m) {
  return (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Eigen::Matrix4cd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(hermitian);
  return solver.eigenvalues().minCoeff();
}

}  // namespace atomsep
