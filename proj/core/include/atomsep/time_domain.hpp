#pragma once

#include <cstdint>
#include <vector>

#include "atomsep/spectrum.hpp"

namespace atomsep {

// Step-size instability detected during propagation.
struct StepSizeError : NumericError {
  using NumericError::NumericError;
};

// Fixed-step propagation grid (time in 1/gamma units).
struct TimeGrid {
  double dt = 1e-3;
  std::int64_t steps = 40000;

  double total() const { return dt * steps; }
  // dt <= dt_safety / max(gamma, |Omega_i|, |Omega12|, |Delta|) and
  // total * 2 gamma >= min_decay_spans.
  static TimeGrid for_config(const SystemConfig& config, double dt_safety = 0.01,
                             double min_decay_spans = 40.0);
  void validate() const;
};

// Classical 4th-order Runge-Kutta propagation of rho under the collective
// master equation. Throws StepSizeError when the trace drifts by more than
// 1e-8 or the state leaves the density-matrix cone.
DensityMatrix evolve(const SystemConfig& config, const DensityMatrix& rho0,
                     const TimeGrid& grid);
DensityMatrix evolve(const LiouvillianMatrix& liouvillian, const DensityMatrix& rho0,
                     const TimeGrid& grid);

// Steady-state two-time correlation via the regression rule,
//   C_ij(tau_k) = Tr[S_j- e^{L tau_k}(rho_ss S_i+)] - <S_i+><S_j->,
// with the operator rho_ss S_i+ propagated by the same integrator as
// evolve. Returned with steps + 1 samples including tau = 0.
std::vector<Complex> correlation(const SystemConfig& config, int i, int j,
                                 const TimeGrid& grid);

// Half-line Fourier transform (trapezoid) of the phase-weighted correlation
// sum, sampled onto fgrid. Independent cross-check of the resolvent path;
// adds an accuracy note when the correlation tail has not decayed to 1e-4
// of its initial value.
SpectrumTrace spectrum_fft(const SystemConfig& config, const TimeGrid& grid,
                           const FrequencyGrid& fgrid);

}  // namespace atomsep
