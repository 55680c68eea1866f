#include "viscomem/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace viscomem {

namespace {

void require_index(bool ok, const char* what, std::size_t index, std::size_t last) {
  if (ok) return;
  std::ostringstream msg;
  msg << what << " index " << index << " out of range for a history with last index " << last;
  throw std::out_of_range(msg.str());
}

}  // namespace

double discrete_energy(const SimulationHistory& history, const DiscreteOperators& ops,
                       std::size_t n) {
  const std::size_t last = history.last();
  if (n == 0) {
    return 0.5 * mass_norm_sq(ops, history.u1h) +
           0.5 * stiffness_norm_sq(ops, history.states[0]);
  }
  require_index(n < last, "energy", n, last);
  const Vector velocity = (history.states[n + 1] - history.states[n - 1]) / (2.0 * history.tau);
  return 0.5 * mass_norm_sq(ops, velocity) + 0.5 * stiffness_norm_sq(ops, history.states[n]);
}

double a_norm(const SimulationHistory& history, const DiscreteOperators& ops, double mu0,
              std::size_t m) {
  const std::size_t last = history.last();
  require_index(m < last, "A-norm", m, last);
  const Vector diff = (history.states[m + 1] - history.states[m]) / history.tau;
  const double value = mass_norm_sq(ops, diff) +
                       0.5 * mu0 *
                           (stiffness_norm_sq(ops, history.states[m + 1]) +
                            stiffness_norm_sq(ops, history.states[m]));
  return std::sqrt(std::max(value, 0.0));
}

double self_error_time(const Vector& coarse_step_state, const Vector& fine_step_state,
                       const Mesh& mesh) {
  if (coarse_step_state.size() != fine_step_state.size() ||
      static_cast<std::size_t>(coarse_step_state.size()) != mesh.n_interior())
    throw std::invalid_argument("self_error_time: states do not live on the same mesh");
  const auto a = gradient_samples(mesh, coarse_step_state);
  const auto b = gradient_samples(mesh, fine_step_state);
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += (a[k] - b[k]) * (a[k] - b[k]);
  const double h = mesh.h();
  return mesh.dim() == 1 ? std::sqrt(h * sum) : h * std::sqrt(sum);
}

double self_error_space(const Vector& coarse_state, const Mesh& coarse_mesh,
                        const Vector& fine_state, const Mesh& fine_mesh) {
  if (coarse_mesh.dim() != fine_mesh.dim() ||
      fine_mesh.subdivisions() != 2 * coarse_mesh.subdivisions()) {
    std::ostringstream msg;
    msg << "self_error_space: fine mesh must have twice the subdivisions of the coarse mesh, got "
        << coarse_mesh.subdivisions() << " and " << fine_mesh.subdivisions();
    throw std::invalid_argument(msg.str());
  }
  if (static_cast<std::size_t>(coarse_state.size()) != coarse_mesh.n_interior() ||
      static_cast<std::size_t>(fine_state.size()) != fine_mesh.n_interior())
    throw std::invalid_argument("self_error_space: state sizes do not match their meshes");

  const int m = coarse_mesh.subdivisions();
  const double h = coarse_mesh.h();
  double sum = 0.0;
  if (coarse_mesh.dim() == 1) {
    for (int j = 1; j < m; ++j) {
      const double d = gradient_sample(coarse_mesh, coarse_state, j) -
                       gradient_sample(fine_mesh, fine_state, 2 * j);
      sum += d * d;
    }
    return std::sqrt(h * sum);
  }
  for (int j = 1; j < m; ++j) {
    for (int i = 1; i < m; ++i) {
      const double d = gradient_sample(coarse_mesh, coarse_state, i, j) -
                       gradient_sample(fine_mesh, fine_state, 2 * i, 2 * j);
      sum += d * d;
    }
  }
  return h * std::sqrt(sum);
}

double rate(double e_coarse, double e_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) {
    std::ostringstream msg;
    msg << "convergence rate needs positive errors, got " << e_coarse << " and " << e_fine;
    throw std::domain_error(msg.str());
  }
  return std::log2(e_coarse / e_fine);
}

DiagnosticsRecord make_record(const SimulationHistory& history, const Mesh& mesh,
                              const DiscreteOperators& ops, const Problem& problem,
                              std::size_t n_last, double final_time, std::string run_id) {
  if (history.last() < n_last + 1) {
    std::ostringstream msg;
    msg << "diagnostics up to step " << n_last << " need U^" << n_last + 1
        << ", history ends at U^" << history.last();
    throw std::out_of_range(msg.str());
  }
  DiagnosticsRecord r;
  r.run_id = std::move(run_id);
  r.dim = mesh.dim();
  r.M = mesh.subdivisions();
  r.N = n_last;
  r.T = final_time;
  r.tau = history.tau;
  if (const auto& spec = problem.kernel.spec()) {
    r.alpha = spec->alpha;
    r.sigma = spec->sigma;
    r.gamma = spec->gamma;
  }
  r.damping = to_string(problem.damping.kind);
  r.mu1 = problem.damping.mu1;
  r.mu2 = problem.damping.mu2;
  const double mu0 = problem.kernel.mu0();
  r.energy.reserve(n_last + 1);
  r.a_norm.reserve(n_last + 1);
  for (std::size_t n = 0; n <= n_last; ++n) {
    r.energy.push_back(discrete_energy(history, ops, n));
    r.a_norm.push_back(a_norm(history, ops, mu0, n));
  }
  r.terminal_gradient = gradient_samples(mesh, history.states[n_last]);
  return r;
}

}  // namespace viscomem
