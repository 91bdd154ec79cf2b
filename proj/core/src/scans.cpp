#include "atomsep/scans.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "atomsep/couplings.hpp"

namespace atomsep {

namespace {

SystemConfig scan_config(double z1, double z12, double rabi, const ScanOptions& options) {
  SystemConfig config;
  config.z1 = z1;
  config.z12 = z12;
  config.rabi = rabi;
  config.phase = options.phase;
  config.theta = options.theta;
  config.drive_mode = options.drive_mode;
  return config;
}

// One-sided window around the dipole-dipole sideband, wide enough to keep
// drive-split branches in view.
FrequencyGrid sideband_window(double coupling, double rabi, int points) {
  FrequencyGrid grid;
  const double margin = std::max({0.6 * coupling, 2.5 * rabi, 25.0});
  grid.start = std::max(0.35 * coupling, coupling - margin);
  grid.stop = coupling + margin;
  grid.count = points;
  return grid;
}

// Peaks of the windowed trace grouped into sideband structures; returns the
// group nearest the expected coupling (the outermost structure dominates
// these windows).
std::vector<SidebandGroup> window_groups(const SystemConfig& config, const FrequencyGrid& grid,
                                         double min_prominence_rel) {
  const SpectrumTrace trace = compute_spectrum(config, grid);
  const auto peaks = find_peaks(trace, min_prominence_rel);
  return group_adjacent(peaks);
}

const SidebandGroup* nearest_group(const std::vector<SidebandGroup>& groups, double target) {
  const SidebandGroup* best = nullptr;
  double best_distance = 0.0;
  for (const SidebandGroup& g : groups) {
    const double d = std::abs(g.center - target);
    if (!best || d < best_distance) {
      best = &g;
      best_distance = d;
    }
  }
  return best;
}

}  // namespace

std::vector<double> linear_range(double lo, double hi, int n) {
  if (n < 1) throw std::domain_error("range needs at least one sample");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    out.push_back(lo);
    return out;
  }
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    out.push_back(i + 1 == n ? hi : lo + step * i);
  }
  return out;
}

std::vector<SmallDeviationPoint> deviation_scan_small(double z1, double rabi,
                                                      const std::vector<double>& z12_values,
                                                      const ScanOptions& options) {
  std::vector<SmallDeviationPoint> out;
  for (double z12 : z12_values) {
    const double coupling = omega12(z12);
    const SystemConfig config = scan_config(z1, z12, rabi, options);
    const FrequencyGrid grid = sideband_window(coupling, rabi, options.points);
    const auto groups = window_groups(config, grid, options.min_prominence_rel);
    const SidebandGroup* g = nearest_group(groups, coupling);
    if (!g) continue;
    if (g->members.size() >= 2) {
      out.push_back({z12, g->members.front().position,
                     g->members.front().position - coupling, 0});
      out.push_back({z12, g->members.back().position,
                     g->members.back().position - coupling, 1});
    } else {
      out.push_back({z12, g->center, g->center - coupling, 0});
    }
  }
  return out;
}

std::vector<DoubletDeviationPoint> deviation_scan_doublet(double z1, double z12,
                                                          const std::vector<double>& rabi_values,
                                                          const ScanOptions& options) {
  const double coupling = omega12(z12);
  std::vector<DoubletDeviationPoint> out;
  for (double rabi : rabi_values) {
    const SystemConfig config = scan_config(z1, z12, rabi, options);
    FrequencyGrid grid = FrequencyGrid::spanning(1.3 * (rabi + 2.0 * coupling) + 20.0,
                                                 std::max(options.points, 4001));
    const SpectrumTrace trace =
        compute_spectrum_refined(config, grid, 10.0, std::max(4.0, 0.5 * coupling),
                                 options.min_prominence_rel);
    const DoubletSet set = pair_sidebands(find_peaks(trace, options.min_prominence_rel));
    DoubletDeviationPoint point;
    point.rabi = rabi;
    double weight = 0.0;
    for (const SidebandGroup& g : set.groups) {
      if (g.members.size() == 2) {
        point.sigma_p += g.prominence * g.splitting;
        weight += g.prominence;
        ++point.resolved_groups;
      }
    }
    if (weight > 0.0) {
      point.sigma_p /= weight;
      point.deviation = point.sigma_p - 2.0 * coupling;
      out.push_back(point);
    }
  }
  return out;
}

namespace {

bool sideband_is_split(double z1, double z12, double rabi, double coupling,
                       const ScanOptions& options) {
  const SystemConfig config = scan_config(z1, z12, rabi, options);
  const FrequencyGrid grid = sideband_window(coupling, rabi, options.points);
  const double step = (grid.stop - grid.start) / (grid.count - 1);
  const auto groups = window_groups(config, grid, options.min_prominence_rel);
  const SidebandGroup* g = nearest_group(groups, coupling);
  if (!g || g->members.size() < 2) return false;
  return g->splitting > 2.0 * step;
}

}  // namespace

BranchingResult branching_scan(double z1, double z12, const std::vector<double>& rabi_values,
                               const ScanOptions& options) {
  if (rabi_values.empty()) {
    throw std::domain_error("branching_scan: empty drive range");
  }
  std::vector<double> rabis = rabi_values;
  std::sort(rabis.begin(), rabis.end());
  const double coupling = omega12(z12);

  double lo = 0.0;  // largest known-unsplit drive
  double hi = -1.0; // smallest known-split drive
  for (double rabi : rabis) {
    if (sideband_is_split(z1, z12, rabi, coupling, options)) {
      hi = rabi;
      break;
    }
    lo = rabi;
  }
  if (hi < 0.0) {
    return {false, 0.0};
  }
  if (lo == 0.0) {
    lo = 0.5 * hi;  // first scanned drive already split; bracket below it
    while (hi - lo > 1.0 && sideband_is_split(z1, z12, lo, coupling, options)) {
      hi = lo;
      lo *= 0.5;
    }
  }
  while (hi - lo > 1.0) {
    const double mid = 0.5 * (lo + hi);
    if (sideband_is_split(z1, z12, mid, coupling, options)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {true, 0.5 * (lo + hi)};
}

}  // namespace atomsep
