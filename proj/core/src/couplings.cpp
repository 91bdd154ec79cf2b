#include "atomsep/couplings.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace atomsep {

namespace {

void require_positive_separation(double z12) {
  if (!(z12 > 0.0)) {
    throw std::domain_error("separation z12 must be positive");
  }
}

}  // namespace

std::string to_string(DriveMode mode) {
  return mode == DriveMode::standing ? "standing" : "uniform";
}

DriveMode drive_mode_from_string(const std::string& name) {
  if (name == "standing") return DriveMode::standing;
  if (name == "uniform") return DriveMode::uniform;
  throw std::domain_error("unknown drive mode: " + name);
}

void SystemConfig::validate() const {
  if (!(z12 > 0.0) || !std::isfinite(z12)) {
    throw std::domain_error("config: z12 must be positive and finite");
  }
  if (!std::isfinite(z1)) {
    throw std::domain_error("config: z1 must be finite");
  }
  if (!(rabi >= 0.0) || !std::isfinite(rabi)) {
    throw std::domain_error("config: rabi must be non-negative and finite");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::domain_error("config: gamma must be positive");
  }
  if (!(theta >= 0.0 && theta <= pi)) {
    throw std::domain_error("config: theta must lie in [0, pi]");
  }
  if (!std::isfinite(phase) || !std::isfinite(detuning)) {
    throw std::domain_error("config: phase and detuning must be finite");
  }
}

void SystemConfig::validate_for_estimation() const {
  validate();
  if (z12 > 0.5) {
    throw std::domain_error("config: estimation requires z12 <= lambda/2");
  }
}

double omega12(double z12) {
  require_positive_separation(z12);
  const double x = two_pi * z12;
  const double c = std::cos(x);
  const double s = std::sin(x);
  return 1.5 * (-c / x + s / (x * x) + c / (x * x * x));
}

double gamma12(double z12) {
  require_positive_separation(z12);
  const double x = two_pi * z12;
  if (x < 0.05) {
    // Series expansion; the direct form loses ~1/x^2 digits to cancellation.
    const double x2 = x * x;
    return 1.0 + x2 * (-1.0 / 5.0 + x2 * (3.0 / 280.0 + x2 * (-1.0 / 3780.0)));
  }
  const double c = std::cos(x);
  const double s = std::sin(x);
  return 1.5 * (s / x + c / (x * x) - s / (x * x * x));
}

double omega12_near(double z12) {
  require_positive_separation(z12);
  const double x = two_pi * z12;
  return 1.5 / (x * x * x);
}

double rabi_at(double z, const SystemConfig& config) {
  if (config.drive_mode == DriveMode::uniform) {
    return config.rabi;
  }
  return config.rabi * std::sin(two_pi * z + config.phase);
}

CouplingValues couplings_for(const SystemConfig& config) {
  config.validate();
  CouplingValues out;
  out.omega12 = omega12(config.z12) * config.gamma;
  out.gamma12 = gamma12(config.z12) * config.gamma;
  out.rabi1 = rabi_at(config.z1, config);
  out.rabi2 = rabi_at(config.z2(), config);
  out.interference_phase = two_pi * config.z12 * std::cos(config.theta);
  return out;
}

double invert_omega12(double target) {
  if (!std::isfinite(target)) {
    throw std::out_of_range("invert_omega12: target must be finite");
  }
  const double endpoint = omega12(0.5);
  if (target < endpoint) {
    throw std::out_of_range("invert_omega12: target below the half-wavelength value");
  }
  if (target == endpoint) {
    return 0.5;
  }
  // omega12 is strictly decreasing on (0, 1/2]; bracket from the left.
  double lo = 0.25;
  while (omega12(lo) < target) {
    lo *= 0.5;
    if (lo < 1e-15) {
      throw std::out_of_range("invert_omega12: target too large to bracket");
    }
  }
  double hi = 0.5;
  for (int it = 0; it < 200 && (hi - lo) > 1e-9; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (omega12(mid) >= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DistanceEstimate distance_with_uncertainty(double omega12_meas, double delta_omega12) {
  if (!(omega12_meas > 0.0)) {
    throw std::out_of_range("distance_with_uncertainty: coupling must be positive");
  }
  if (!(delta_omega12 >= 0.0)) {
    throw std::out_of_range("distance_with_uncertainty: uncertainty must be non-negative");
  }
  DistanceEstimate est;
  est.value = invert_omega12(omega12_meas);
  if (delta_omega12 > 0.0) {
    const double endpoint = omega12(0.5);
    const double low_target = std::max(omega12_meas - delta_omega12, endpoint);
    const double z_plus = invert_omega12(low_target);
    const double z_minus = invert_omega12(omega12_meas + delta_omega12);
    est.sigma = 0.5 * std::abs(z_plus - z_minus);
  }
  est.near_field_value = std::cbrt(1.5 / omega12_meas) / two_pi;
  est.near_field_sigma = est.near_field_value * delta_omega12 / (3.0 * omega12_meas);
  return est;
}

std::vector<double> positions_from_rabi(double rabi_meas, const SystemConfig& config) {
  if (!(config.rabi > 0.0)) {
    throw std::out_of_range("positions_from_rabi: config.rabi must be positive");
  }
  if (!(rabi_meas >= 0.0) || rabi_meas > config.rabi) {
    throw std::out_of_range("positions_from_rabi: reading outside [0, Omega]");
  }
  const double r = rabi_meas / config.rabi;
  const double alpha = std::asin(std::min(r, 1.0));
  auto wrap_unit = [](double v) {
    double w = v - std::floor(v);
    if (w >= 1.0) w -= 1.0;
    return w;
  };
  const double c1 = wrap_unit((alpha - config.phase) / two_pi);
  const double c2 = wrap_unit((pi - alpha - config.phase) / two_pi);
  std::vector<double> out{c1, c2};
  std::sort(out.begin(), out.end());
  if (out.size() == 2 && std::abs(out[1] - out[0]) < 1e-12) {
    out.pop_back();
  }
  return out;
}

}  // namespace atomsep
