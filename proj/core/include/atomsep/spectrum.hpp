#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atomsep/liouvillian.hpp"

namespace atomsep {

// Frequency grid of offsets delta = omega - omega_L (gamma units). The base
// span is sampled uniformly; optional refinement windows are merged in for
// locally denser sampling (splitting measurements).
struct FrequencyGrid {
  struct Window {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
  };

  double start = -100.0;
  double stop = 100.0;
  int count = 4001;
  std::vector<Window> refinements;

  void validate() const;  // throws std::domain_error
  // Sorted, de-duplicated samples of the base span plus refinements.
  std::vector<double> samples() const;

  static FrequencyGrid spanning(double half_width, int count = 4001);
};

// Sampled incoherent emission spectrum. Values carry an arbitrary overall
// scale; analysis works with relative heights only. The coherent
// delta-peak weights <S_i+><S_j-> e^{i phi_ij} are reported separately and
// never rasterized onto the grid.
struct SpectrumTrace {
  std::vector<double> delta;
  std::vector<double> values;
  Eigen::Matrix2cd elastic_weight = Eigen::Matrix2cd::Zero();
  std::optional<SystemConfig> config;
  std::string engine = "resolvent";
  double resolution = 0.0;  // Lorentzian smoothing half-width; 0 = native
  std::vector<std::string> notes;
};

// Resolvent evaluator sharing one steady-state solve across grid samples.
// point() is const and safe to call concurrently.
class SpectrumSolver {
 public:
  explicit SpectrumSolver(const SystemConfig& config);

  // Incoherent spectrum at offset delta:
  //   S(delta) = Re sum_ij e^{i 2 pi z_ij cos theta} Tr[S_j- Y_i],
  //   (L + (i delta - w) Id) Y_i = -X_i,
  //   X_i = rho_ss S_i+ - <S_i+> rho_ss.
  // A resolution w > 0 smooths with a unit-area Lorentzian of half-width w
  // (spectral shift), useful for coarse surveys of narrow features.
  double point(double delta, double resolution = 0.0) const;

  const DensityMatrix& steady_state_matrix() const { return rho_ss_; }
  Eigen::Matrix2cd elastic_weights() const { return elastic_; }
  const SystemConfig& config() const { return liouvillian_.config; }

 private:
  LiouvillianMatrix liouvillian_;
  DensityMatrix rho_ss_;
  Eigen::Matrix<Complex, 16, 2> sources_;  // -X_i, column per atom
  Operator4 lowering_[2];
  Complex pair_phase_[2][2];
  Eigen::Matrix2cd elastic_;
};

double spectrum_point(const SystemConfig& config, double delta);

SpectrumTrace compute_spectrum(const SystemConfig& config, const FrequencyGrid& grid,
                               double resolution = 0.0);

// Classical positional smearing of the separation coordinate.
struct MotionModel {
  enum class Distribution { turning_point_arcsine, gaussian };

  double amplitude = 0.005;  // oscillation amplitude (lambda units)
  Distribution distribution = Distribution::turning_point_arcsine;
  int node_count = 32;  // quadrature order

  // eta ~ k * amplitude / 2 = pi * amplitude in lambda units.
  double lamb_dicke() const { return pi * amplitude; }
};

// Quadrature nodes as (z12 offset, weight) pairs. Arcsine weighting uses
// Chebyshev-Gauss nodes amplitude*cos(u_k) with equal weights (the dwell
// distribution of a harmonic oscillation sampled at random phase); the
// gaussian model uses Gauss-Hermite nodes with rms amplitude/sqrt(2).
std::vector<std::pair<double, double>> motion_quadrature(const MotionModel& model);

// Average of compute_spectrum over the separation distribution, holding z1
// fixed. Throws std::domain_error when amplitude >= z12.
SpectrumTrace motion_averaged_spectrum(const SystemConfig& config, const MotionModel& motion,
                                       const FrequencyGrid& grid, double resolution = 0.0);

// Two-pass sweep: sample the base grid, then re-sample with refinement
// windows of refine_factor x local density around each detected peak.
SpectrumTrace compute_spectrum_refined(const SystemConfig& config, const FrequencyGrid& grid,
                                       double refine_factor = 10.0,
                                       double window_half_width = 6.0,
                                       double min_prominence_rel = 0.005);

}  // namespace atomsep
