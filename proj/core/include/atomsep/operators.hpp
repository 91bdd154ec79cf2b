#pragma once

#include <complex>

#include <Eigen/Dense>

#include "atomsep/config.hpp"

namespace atomsep {

using Complex = std::complex<double>;
using Operator4 = Eigen::Matrix4cd;
using DensityMatrix = Eigen::Matrix4cd;
using SuperOp = Eigen::Matrix<Complex, 16, 16>;
using Vec16 = Eigen::Matrix<Complex, 16, 1>;

// Two-atom product basis, ordered {|gg>, |ge>, |eg>, |ee>} with the first
// label belonging to atom 1. All 4x4 operators below use this ordering, and
// all 16x16 superoperators act on column-stacked density matrices:
// vec(rho)[4*c + r] = rho(r, c).

// Lowering operator S_i^- of atom i (1 or 2).
const Operator4& sigma_minus(int atom);
// Raising operator S_i^+ = (S_i^-)^dagger.
const Operator4& sigma_plus(int atom);
// Excitation number S_i^+ S_i^- of atom i.
Operator4 excitation_number(int atom);

Vec16 vectorize(const Operator4& m);
Operator4 unvectorize(const Vec16& v);

// Kronecker product a (x) b of two 4x4 matrices.
SuperOp kron(const Operator4& a, const Operator4& b);
// vec(A rho) = left_mul(A) vec(rho)
SuperOp left_mul(const Operator4& a);
// vec(rho B) = right_mul(B) vec(rho)
SuperOp right_mul(const Operator4& b);
// vec(A rho B) = sandwich(A, B) vec(rho)
SuperOp sandwich(const Operator4& a, const Operator4& b);

// Rotating-frame two-atom Hamiltonian (units of hbar = 1, rates in gamma):
//   H = -Delta (n1 + n2) + Omega12 (S1+ S2- + S2+ S1-)
//       + (1/2) sum_i Omega_i (S_i+ + S_i-)
// with Omega_i the local drive strengths and Omega12 the coherent
// dipole-dipole coupling of the configuration.
Operator4 build_hamiltonian(const SystemConfig& config);

}  // namespace atomsep
