#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "atomsep/peaks.hpp"
#include "atomsep/scans.hpp"

namespace atomsep {

enum class Regime { large, intermediate, small, inconclusive };
std::string to_string(Regime regime);

struct ValueWithSigma {
  double value = 0.0;
  double sigma = 0.0;
};

// Knobs an experimenter can turn between readouts.
struct ApparatusControls {
  double rabi = 0.0;
  double phase = 0.0;
  DriveMode drive_mode = DriveMode::standing;
};

// Readout-only interface the estimators are written against. Nothing about
// the true geometry is reachable through it.
class Apparatus {
 public:
  virtual ~Apparatus() = default;
  virtual SpectrumTrace measure(const ApparatusControls& controls, const FrequencyGrid& grid,
                                double resolution = 0.0) const = 0;
};

// Simulated measurement apparatus around a hidden true configuration.
// Returned traces carry no configuration block. Optional multiplicative
// noise is seeded deterministically per (seed, readout index).
class VirtualApparatus final : public Apparatus {
 public:
  struct Options {
    double motion_amplitude = 0.0;
    MotionModel::Distribution motion_distribution =
        MotionModel::Distribution::turning_point_arcsine;
    double noise = 0.0;  // relative amplitude of multiplicative noise
    std::uint64_t seed = 0;
  };

  explicit VirtualApparatus(const SystemConfig& truth, Options options = {});

  SpectrumTrace measure(const ApparatusControls& controls, const FrequencyGrid& grid,
                        double resolution = 0.0) const override;

 private:
  SystemConfig truth_;
  Options options_;
  mutable std::uint64_t readouts_ = 0;
};

// One logged readout: the controls and grid used plus the extracted
// sideband structures.
struct EvidenceEntry {
  std::string label;
  ApparatusControls controls;
  double grid_start = 0.0;
  double grid_stop = 0.0;
  int grid_count = 0;
  double resolution = 0.0;
  std::vector<SidebandGroup> features;
};

struct MeasurementReport {
  Regime regime = Regime::inconclusive;
  std::optional<ValueWithSigma> z12;
  std::optional<ValueWithSigma> z1;
  std::optional<ValueWithSigma> z2;
  std::vector<EvidenceEntry> evidence;
  std::vector<std::string> notes;
  bool success = false;
  std::string error;
};

struct ProtocolOptions {
  double probe_rabi = 5.0;        // weak classification probe (<= 5)
  double work_rabi = 150.0;       // drive for the well-separated readout
  double rabi_cap = 700.0;        // escalation ceiling
  double read_error = 0.1;        // relative read-off uncertainty to propagate
  double phase_step = 0.3;        // radians between disambiguation phases
  double match_tolerance = 0.005; // lambda, for candidate-position matching
  double search_max_delta = 1.3e6;
  bool estimate_positions_small = false;  // run the branching fit after a
                                          // small-separation estimate
  std::vector<double> small_rabi_list = {3.0, 6.0, 12.0};
};

// Thrown when candidate intersection leaves no unique geometry; the
// survivors are listed in what().
struct AmbiguousResultError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Regime from a weak-probe trace: dominated by a feature far beyond the
// probe drive -> small; clean singlet sidebands at or below the probe
// drive -> large; anything structured in between -> intermediate;
// featureless -> inconclusive.
Regime classify_regime(const SpectrumTrace& probe_trace, double probe_rabi);

// Well-separated atoms: sideband positions at two (or three) standing-wave
// phases, candidate positions intersected across phases, and the remaining
// two-separation ambiguity resolved against simulated candidate traces.
MeasurementReport estimate_large(const Apparatus& apparatus, double work_rabi, double phase_a,
                                 double phase_b, const ProtocolOptions& options = {});

// Intermediate separations: drive raised until each sideband resolves into
// a doublet; the splitting gives the coupling (hence z12), the doublet
// centers give the positions.
MeasurementReport estimate_intermediate(const Apparatus& apparatus, double strong_rabi,
                                        const ProtocolOptions& options = {});

// Small separations: sideband position read at several weak drives and
// extrapolated to zero drive power; the coupling then inverts to z12.
// Motion-split sidebands are detected and averaged over the turning points.
MeasurementReport estimate_small(const Apparatus& apparatus,
                                 std::vector<double> rabi_list = {3.0, 6.0, 12.0},
                                 const ProtocolOptions& options = {});

// Position of the atom pair relative to the field nodes, from the drive
// strength at which the sideband branches: the measured branching drive is
// matched against simulated branching drives over candidate z1.
struct PositionFitResult {
  bool estimable = false;
  double z1 = 0.0;
  double rabi_b_measured = 0.0;
  bool flat_fit = false;
  std::vector<std::string> notes;
};

PositionFitResult estimate_z1_small(const Apparatus& apparatus, ValueWithSigma z12_est,
                                    const ProtocolOptions& options = {});

// Full measurement sequence: weak probe, regime classification, dispatch to
// the regime estimator with automatic drive escalation and phase shifts.
// Stage failures produce a partial report rather than a throw.
MeasurementReport run_protocol(const Apparatus& apparatus, const ProtocolOptions& options = {});

}  // namespace atomsep
