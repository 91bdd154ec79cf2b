#include "atomsep/time_domain.hpp"

#include <cmath>
#include <stdexcept>

#include "atomsep/couplings.hpp"
#include "atomsep/parallel.hpp"

namespace atomsep {

namespace {

// RK4 on the vectorized state; on_step(k, v) sees the state after step k.
template <typename Callback>
Vec16 propagate(const SuperOp& l, Vec16 v, double dt, std::int64_t steps,
                Callback&& on_step) {
  Vec16 k1, k2, k3, k4;
  for (std::int64_t s = 0; s < steps; ++s) {
    k1 = l * v;
    k2 = l * (v + 0.5 * dt * k1);
    k3 = l * (v + 0.5 * dt * k2);
    k4 = l * (v + dt * k3);
    v += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    on_step(s, v);
  }
  return v;
}

double trace_of(const Vec16& v) {
  return (v(0) + v(5) + v(10) + v(15)).real();
}

}  // namespace

TimeGrid TimeGrid::for_config(const SystemConfig& config, double dt_safety,
                              double min_decay_spans) {
  const CouplingValues c = couplings_for(config);
  const double scale = std::max({config.gamma, std::abs(c.rabi1), std::abs(c.rabi2),
                                 std::abs(c.omega12), std::abs(config.detuning)});
  TimeGrid grid;
  grid.dt = dt_safety / scale;
  const double total = min_decay_spans / (2.0 * config.gamma);
  grid.steps = static_cast<std::int64_t>(std::ceil(total / grid.dt));
  return grid;
}

void TimeGrid::validate() const {
  if (!(dt > 0.0) || steps < 1) {
    throw std::domain_error("time grid needs dt > 0 and steps >= 1");
  }
}

DensityMatrix evolve(const LiouvillianMatrix& liouvillian, const DensityMatrix& rho0,
                     const TimeGrid& grid) {
  grid.validate();
  const double trace0 = rho0.trace().real();
  Vec16 v = vectorize(rho0);
  const std::int64_t check_every = std::max<std::int64_t>(1, grid.steps / 64);
  v = propagate(liouvillian.matrix, v, grid.dt, grid.steps,
                [&](std::int64_t s, const Vec16& state) {
                  if ((s + 1) % check_every == 0 || s + 1 == grid.steps) {
                    if (!state.allFinite() ||
                        std::abs(trace_of(state) - trace0) > 1e-8) {
                      throw StepSizeError(
                          "evolve: trace drift detected, reduce the time step");
                    }
                  }
                });
  return unvectorize(v);
}

DensityMatrix evolve(const SystemConfig& config, const DensityMatrix& rho0,
                     const TimeGrid& grid) {
  return evolve(build_liouvillian(config), rho0, grid);
}

namespace {

struct CorrelationSet {
  // series[2*i + j] holds C_ij(tau_k), k = 0..steps.
  std::vector<Complex> series[4];
  double dt = 0.0;
};

CorrelationSet correlate_all(const SystemConfig& config, const TimeGrid& grid) {
  grid.validate();
  const LiouvillianMatrix liouvillian = build_liouvillian(config);
  const DensityMatrix rho_ss = steady_state(liouvillian);

  CorrelationSet out;
  out.dt = grid.dt;
  const std::int64_t n = grid.steps + 1;
  for (auto& s : out.series) s.resize(n);

  for (int i = 0; i < 2; ++i) {
    const Operator4& sp = sigma_plus(i + 1);
    const Complex dipole = (rho_ss * sp).trace();
    // Coherent part subtracted up front so the tail decays to zero.
    const Operator4 source = rho_ss * sp - dipole * rho_ss;
    Vec16 v = vectorize(source);
    for (int j = 0; j < 2; ++j) {
      out.series[2 * i + j][0] = (sigma_minus(j + 1) * source).trace();
    }
    propagate(liouvillian.matrix, v, grid.dt, grid.steps,
              [&](std::int64_t s, const Vec16& state) {
                const Operator4 m = unvectorize(state);
                if (!state.allFinite()) {
                  throw StepSizeError("correlation: propagation diverged");
                }
                for (int j = 0; j < 2; ++j) {
                  out.series[2 * i + j][s + 1] = (sigma_minus(j + 1) * m).trace();
                }
              });
  }
  return out;
}

}  // namespace

std::vector<Complex> correlation(const SystemConfig& config, int i, int j,
                                 const TimeGrid& grid) {
  if (i < 1 || i > 2 || j < 1 || j > 2) {
    throw std::domain_error("correlation: atom indices must be 1 or 2");
  }
  return correlate_all(config, grid).series[2 * (i - 1) + (j - 1)];
}

SpectrumTrace spectrum_fft(const SystemConfig& config, const TimeGrid& grid,
                           const FrequencyGrid& fgrid) {
  const CorrelationSet c = correlate_all(config, grid);
  const double cos_theta = std::cos(config.theta);
  const double z[2] = {config.z1, config.z2()};
  const Complex i_unit(0.0, 1.0);

  // Phase-weighted sum g(tau) = sum_ij e^{i 2 pi z_ij cos theta} C_ij(tau).
  const std::size_t n = c.series[0].size();
  std::vector<Complex> g(n, Complex(0.0, 0.0));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Complex phase = std::exp(i_unit * (two_pi * (z[i] - z[j]) * cos_theta));
      const auto& series = c.series[2 * i + j];
      for (std::size_t k = 0; k < n; ++k) {
        g[k] += phase * series[k];
      }
    }
  }

  SpectrumTrace trace;
  trace.delta = fgrid.samples();
  trace.values.resize(trace.delta.size());
  trace.config = config;
  trace.engine = "time-domain";

  const double g0 = std::abs(g.front());
  if (g0 > 0.0 && std::abs(g.back()) > 1e-4 * g0) {
    trace.notes.push_back("correlation tail above 1e-4 of C(0); increase the span");
  }

  const double dt = c.dt;
  parallel_for(trace.delta.size(), [&](std::size_t m) {
    const double delta = trace.delta[m];
    const Complex rot = std::polar(1.0, delta * dt);
    Complex phase(1.0, 0.0);
    Complex acc = 0.5 * g.front();
    for (std::size_t k = 1; k + 1 < n; ++k) {
      phase *= rot;
      acc += phase * g[k];
    }
    phase *= rot;
    acc += 0.5 * phase * g.back();
    trace.values[m] = (acc * dt).real();
  });

  // Elastic weights from a fresh steady-state solve (same definition as the
  // resolvent path).
  const SpectrumSolver solver(config);
  trace.elastic_weight = solver.elastic_weights();
  return trace;
}

}  // namespace atomsep
