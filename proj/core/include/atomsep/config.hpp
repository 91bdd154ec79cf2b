#pragma once

#include <numbers>
#include <string>

namespace atomsep {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

enum class DriveMode { standing, uniform };

std::string to_string(DriveMode mode);
DriveMode drive_mode_from_string(const std::string& name);

// Full physical scenario for a pair of identical two-level atoms on the z
// axis inside a standing-wave drive.
//
// Unit system: all lengths are in units of the drive wavelength lambda and
// all rates/frequencies in units of the single-atom decay constant gamma.
// gamma is kept as a field for clarity but is fixed to 1 internally; use
// SiScale to convert results for display.
struct SystemConfig {
  double z1 = 0.05;       // position of atom 1 (lambda units)
  double z12 = 0.1;       // separation z2 - z1, > 0 (lambda units)
  double rabi = 0.0;      // peak Rabi frequency Omega (gamma units)
  double phase = 0.0;     // standing-wave phase phi (radians)
  double detuning = 0.0;  // Delta = omega_L - omega_0 (gamma units)
  double theta = 0.5 * pi;  // observation angle (radians)
  DriveMode drive_mode = DriveMode::standing;
  double gamma = 1.0;

  double z2() const { return z1 + z12; }

  // Throws std::domain_error on invalid fields. Simulation accepts any
  // z12 > 0; estimation additionally requires z12 <= 1/2.
  void validate() const;
  void validate_for_estimation() const;
};

// Conversion helper for presenting internal (gamma, lambda) units in SI.
// Example: SiScale{1e7, 780e-9}.rate_hz(10.5) is a rate of 10.5 gamma for a
// gamma of 10 MHz.
struct SiScale {
  double gamma_hz = 1.0;   // decay constant in Hz
  double lambda_m = 1.0;   // wavelength in metres

  double rate_hz(double in_gamma_units) const { return in_gamma_units * gamma_hz; }
  double length_m(double in_lambda_units) const { return in_lambda_units * lambda_m; }
};

}  // namespace atomsep
