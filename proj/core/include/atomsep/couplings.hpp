#pragma once

#include <vector>

#include "atomsep/config.hpp"

namespace atomsep {

// Coherent and incoherent dipole-dipole couplings plus the local drive
// strengths for one scenario. All rates in gamma units.
struct CouplingValues {
  double omega12 = 0.0;
  double gamma12 = 0.0;
  double rabi1 = 0.0;
  double rabi2 = 0.0;
  double interference_phase = 0.0;  // k * z12 * cos(theta), radians
};

// Coherent dipole-dipole coupling for separation z12 (lambda units):
//   (3/2) * [-cos x / x + sin x / x^2 + cos x / x^3],  x = 2 pi z12.
// Strictly decreasing on (0, 1/2]; diverges as z12^-3 at short range.
double omega12(double z12);

// Incoherent cross-damping for separation z12 (lambda units):
//   (3/2) * [sin x / x + cos x / x^2 - sin x / x^3],  x = 2 pi z12.
// Tends to 1 (the single-atom rate) as z12 -> 0.
double gamma12(double z12);

// Short-range approximation of omega12: 3 / (2 x^3).
double omega12_near(double z12);

// Local drive strength Omega * sin(2 pi z + phi) of an atom at z, or the
// uniform value Omega when the drive mode says so.
double rabi_at(double z, const SystemConfig& config);

CouplingValues couplings_for(const SystemConfig& config);

// Unique z12 in (0, 1/2] with omega12(z12) == target, by bracketed
// bisection to |dz| <= 1e-8. Throws std::out_of_range for targets below
// omega12(1/2) or non-finite.
double invert_omega12(double target);

struct DistanceEstimate {
  double value = 0.0;  // from the full coupling formula
  double sigma = 0.0;
  double near_field_value = 0.0;  // closed form (3/(2 Omega12))^(1/3) / (2 pi)
  double near_field_sigma = 0.0;  // value * dOmega / (3 Omega)
};

// Separation and its uncertainty from a measured coupling. The central
// value inverts the full formula; the uncertainty is the half-spread of the
// inversions at omega12_meas -+ delta_omega12. The small-distance closed
// form is reported alongside for comparison.
DistanceEstimate distance_with_uncertainty(double omega12_meas, double delta_omega12);

// Candidate positions (lambda units, reduced to [0, 1)) of an atom whose
// local drive magnitude was read as rabi_meas:
//   { (asin(r) - phi) / 2pi, (pi - asin(r) - phi) / 2pi },  r = rabi_meas / Omega.
// Throws std::out_of_range unless 0 <= rabi_meas <= Omega. Sorted ascending;
// coincident candidates are merged.
std::vector<double> positions_from_rabi(double rabi_meas, const SystemConfig& config);

}  // namespace atomsep
