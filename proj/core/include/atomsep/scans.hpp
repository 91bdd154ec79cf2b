#pragma once

#include <vector>

#include "atomsep/peaks.hpp"

namespace atomsep {

// Sweep policies share the base scenario (z1, phase, theta, drive mode);
// the swept quantity overrides the relevant field.
struct ScanOptions {
  double phase = 0.0;
  double theta = 0.5 * pi;
  DriveMode drive_mode = DriveMode::standing;
  int points = 2001;                // samples per windowed trace
  double min_prominence_rel = 0.01; // peak filter within the window
};

// Deviation delta = nu_p - Omega12 of the outermost sideband peak from the
// coherent coupling, for closely spaced atoms. Split sidebands emit one row
// per branch.
struct SmallDeviationPoint {
  double z12 = 0.0;
  double nu_p = 0.0;
  double deviation = 0.0;
  int branch = 0;  // 0 below, 1 above, for split sidebands; 0 for singlets
};

std::vector<SmallDeviationPoint> deviation_scan_small(double z1, double rabi,
                                                      const std::vector<double>& z12_values,
                                                      const ScanOptions& options = {});

// Deviation of the strong-field doublet splitting sigma_p from twice the
// coherent coupling, per drive strength.
struct DoubletDeviationPoint {
  double rabi = 0.0;
  double sigma_p = 0.0;    // mean splitting of the resolved doublets
  double deviation = 0.0;  // sigma_p - 2 Omega12
  int resolved_groups = 0;
};

std::vector<DoubletDeviationPoint> deviation_scan_doublet(double z1, double z12,
                                                          const std::vector<double>& rabi_values,
                                                          const ScanOptions& options = {});

// Smallest drive in the scanned range at which the sideband near Omega12
// resolves into two peaks (separation above two grid steps, both
// prominences above threshold), bisection-refined to +-1 gamma.
struct BranchingResult {
  bool reached = false;
  double rabi_b = 0.0;
};

BranchingResult branching_scan(double z1, double z12, const std::vector<double>& rabi_values,
                               const ScanOptions& options = {});

// Uniformly spaced values lo..hi inclusive; helper for range flags.
std::vector<double> linear_range(double lo, double hi, int n);

}  // namespace atomsep
