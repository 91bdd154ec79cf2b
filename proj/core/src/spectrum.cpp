#include "atomsep/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "atomsep/couplings.hpp"
#include "atomsep/parallel.hpp"
#include "atomsep/peaks.hpp"

namespace atomsep {

void FrequencyGrid::validate() const {
  if (count < 2) {
    throw std::domain_error("frequency grid needs at least 2 samples");
  }
  if (!(stop > start)) {
    throw std::domain_error("frequency grid must be increasing");
  }
  for (const Window& w : refinements) {
    if (w.count < 2 || !(w.stop > w.start)) {
      throw std::domain_error("refinement window must be increasing with >= 2 samples");
    }
  }
}

std::vector<double> FrequencyGrid::samples() const {
  validate();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) {
    out.push_back(i + 1 == count ? stop : start + step * i);
  }
  for (const Window& w : refinements) {
    const double wstep = (w.stop - w.start) / (w.count - 1);
    for (int i = 0; i < w.count; ++i) {
      out.push_back(i + 1 == w.count ? w.stop : w.start + wstep * i);
    }
  }
  std::sort(out.begin(), out.end());
  const double merge_eps = 1e-12 * std::max(std::abs(start), std::abs(stop)) + 1e-300;
  out.erase(std::unique(out.begin(), out.end(),
                        [merge_eps](double a, double b) { return std::abs(a - b) <= merge_eps; }),
            out.end());
  return out;
}

FrequencyGrid FrequencyGrid::spanning(double half_width, int count) {
  FrequencyGrid g;
  g.start = -half_width;
  g.stop = half_width;
  g.count = count;
  return g;
}

SpectrumSolver::SpectrumSolver(const SystemConfig& config)
    : liouvillian_(build_liouvillian(config)), rho_ss_(steady_state(liouvillian_)) {
  const Complex i_unit(0.0, 1.0);
  const double cos_theta = std::cos(config.theta);
  const double z[2] = {config.z1, config.z2()};
  Complex dipole[2];
  for (int i = 0; i < 2; ++i) {
    const Operator4& sp = sigma_plus(i + 1);
    dipole[i] = (rho_ss_ * sp).trace();
    const Operator4 source = rho_ss_ * sp - dipole[i] * rho_ss_;
    sources_.col(i) = -vectorize(source);
    lowering_[i] = sigma_minus(i + 1);
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      pair_phase_[i][j] = std::exp(i_unit * (two_pi * (z[i] - z[j]) * cos_theta));
      elastic_(i, j) = dipole[i] * std::conj(dipole[j]) * pair_phase_[i][j];
    }
  }
}

double SpectrumSolver::point(double delta, double resolution) const {
  SuperOp shifted = liouvillian_.matrix;
  shifted.diagonal().array() += Complex(-resolution, delta);
  Eigen::PartialPivLU<SuperOp> lu(shifted);
  const Eigen::Matrix<Complex, 16, 2> y = lu.solve(sources_);
  const double residual = (shifted * y - sources_).cwiseAbs().maxCoeff();
  const double scale = sources_.cwiseAbs().maxCoeff();
  if (!y.allFinite() || !(residual <= 1e-8 * std::max(scale, 1e-30))) {
    throw NumericError("spectrum: resolvent solve failed at delta = " + std::to_string(delta));
  }
  Complex total = 0.0;
  for (int i = 0; i < 2; ++i) {
    const Operator4 yi = unvectorize(y.col(i));
    for (int j = 0; j < 2; ++j) {
      total += pair_phase_[i][j] * (lowering_[j] * yi).trace();
    }
  }
  return total.real();
}

double spectrum_point(const SystemConfig& config, double delta) {
  return SpectrumSolver(config).point(delta);
}

SpectrumTrace compute_spectrum(const SystemConfig& config, const FrequencyGrid& grid,
                               double resolution) {
  const SpectrumSolver solver(config);
  SpectrumTrace trace;
  trace.delta = grid.samples();
  trace.values.resize(trace.delta.size());
  trace.elastic_weight = solver.elastic_weights();
  trace.config = config;
  trace.resolution = resolution;
  parallel_for(trace.delta.size(), [&](std::size_t i) {
    trace.values[i] = solver.point(trace.delta[i], resolution);
  });
  return trace;
}

std::vector<std::pair<double, double>> motion_quadrature(const MotionModel& model) {
  if (!(model.amplitude >= 0.0)) {
    throw std::domain_error("motion amplitude must be non-negative");
  }
  if (model.node_count < 1) {
    throw std::domain_error("motion node count must be positive");
  }
  std::vector<std::pair<double, double>> nodes;
  if (model.amplitude == 0.0) {
    nodes.emplace_back(0.0, 1.0);
    return nodes;
  }
  const int n = model.node_count;
  if (model.distribution == MotionModel::Distribution::turning_point_arcsine) {
    for (int k = 1; k <= n; ++k) {
      const double u = (2.0 * k - 1.0) * pi / (2.0 * n);
      nodes.emplace_back(model.amplitude * std::cos(u), 1.0 / n);
    }
  } else {
    // Golub-Welsch on the Hermite recursion; rms = amplitude / sqrt(2), so
    // the node offsets are amplitude * x_k with weights w_k / sqrt(pi).
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
      const double b = std::sqrt(k / 2.0);
      jacobi(k, k - 1) = b;
      jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
    const double sqrt_pi = std::sqrt(pi);
    for (int k = 0; k < n; ++k) {
      const double x = eig.eigenvalues()(k);
      const double w = sqrt_pi * eig.eigenvectors()(0, k) * eig.eigenvectors()(0, k);
      nodes.emplace_back(model.amplitude * x, w / sqrt_pi);
    }
  }
  return nodes;
}

SpectrumTrace motion_averaged_spectrum(const SystemConfig& config, const MotionModel& motion,
                                       const FrequencyGrid& grid, double resolution) {
  config.validate();
  if (!(motion.amplitude < config.z12)) {
    throw std::domain_error("motion amplitude must be smaller than z12");
  }
  if (motion.amplitude == 0.0) {
    return compute_spectrum(config, grid, resolution);
  }

  auto nodes = motion_quadrature(motion);
  // Gauss-Hermite tails can still cross z12 = 0; drop those nodes and
  // renormalize.
  double kept_weight = 0.0;
  std::vector<std::pair<double, double>> usable;
  for (auto& [offset, weight] : nodes) {
    if (config.z12 + offset > 1e-9) {
      usable.emplace_back(offset, weight);
      kept_weight += weight;
    }
  }
  if (usable.empty()) {
    throw std::domain_error("motion model leaves no physical separations");
  }

  SpectrumTrace total;
  total.delta = grid.samples();
  total.values.assign(total.delta.size(), 0.0);
  total.config = config;
  total.resolution = resolution;
  for (const auto& [offset, weight] : usable) {
    SystemConfig node_config = config;
    node_config.z12 = config.z12 + offset;
    const SpectrumTrace node_trace = compute_spectrum(node_config, grid, resolution);
    const double w = weight / kept_weight;
    for (std::size_t i = 0; i < total.values.size(); ++i) {
      total.values[i] += w * node_trace.values[i];
    }
    total.elastic_weight += w * node_trace.elastic_weight;
  }
  if (usable.size() != nodes.size()) {
    total.notes.push_back("motion quadrature dropped nodes crossing z12 = 0");
  }
  total.notes.push_back("motion averaged, amplitude " + std::to_string(motion.amplitude));
  return total;
}

SpectrumTrace compute_spectrum_refined(const SystemConfig& config, const FrequencyGrid& grid,
                                       double refine_factor, double window_half_width,
                                       double min_prominence_rel) {
  const SpectrumSolver solver(config);
  auto sample = [&](const FrequencyGrid& g) {
    SpectrumTrace trace;
    trace.delta = g.samples();
    trace.values.resize(trace.delta.size());
    trace.elastic_weight = solver.elastic_weights();
    trace.config = config;
    parallel_for(trace.delta.size(), [&](std::size_t i) {
      trace.values[i] = solver.point(trace.delta[i]);
    });
    return trace;
  };

  const SpectrumTrace coarse = sample(grid);
  const auto peaks = find_peaks(coarse, min_prominence_rel);
  if (peaks.empty()) {
    return coarse;
  }
  const double coarse_step = (grid.stop - grid.start) / (grid.count - 1);
  FrequencyGrid refined = grid;
  for (const Peak& p : peaks) {
    FrequencyGrid::Window w;
    w.start = p.position - window_half_width;
    w.stop = p.position + window_half_width;
    w.count = std::max(5, static_cast<int>(std::lround(
                              refine_factor * (w.stop - w.start) / coarse_step)));
    refined.refinements.push_back(w);
  }
  return sample(refined);
}

}  // namespace atomsep
