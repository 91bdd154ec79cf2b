#pragma once

#include <optional>
#include <span>
#include <vector>

#include "atomsep/spectrum.hpp"

namespace atomsep {

// Local spectral maximum with parabola-refined position.
struct Peak {
  double position = 0.0;
  double height = 0.0;
  double prominence = 0.0;
  double width_estimate = 0.0;
};

// Local maxima with prominence at least min_prominence_rel of the global
// maximum, positions refined by 3-point parabolic interpolation, sorted by
// position. Fewer than 3 samples give an empty result.
std::vector<Peak> find_peaks(std::span<const double> x, std::span<const double> y,
                             double min_prominence_rel = 0.01);
std::vector<Peak> find_peaks(const SpectrumTrace& trace, double min_prominence_rel = 0.01);

// One sideband structure: a singlet or a doublet of peaks symmetric about
// delta = 0, reported on the positive half-axis.
struct SidebandGroup {
  int id = 0;
  double center = 0.0;     // mean member position
  double splitting = 0.0;  // sigma_p: spread of member positions (0 for singlets)
  double prominence = 0.0; // largest member prominence
  double height = 0.0;     // largest member height
  std::vector<Peak> members;  // positive-side members, position ascending
};

struct DoubletSet {
  std::vector<SidebandGroup> groups;  // center ascending
  std::optional<Peak> central;
  std::vector<Peak> unpaired;  // peaks without a mirror partner
};

// Groups peaks of a symmetric (resonant-drive) trace into sideband
// structures: peaks at +nu and -nu are matched within tolerance, and
// adjacent matched sidebands closer than 25% of their distance from zero
// merge into one doublet.
DoubletSet pair_sidebands(const std::vector<Peak>& peaks, double tolerance = 1.0);

// Same grouping applied to one-sided (positive axis) peak lists, used for
// windowed sweeps that never sample delta < 0.
std::vector<SidebandGroup> group_adjacent(const std::vector<Peak>& positive_peaks);

}  // namespace atomsep
