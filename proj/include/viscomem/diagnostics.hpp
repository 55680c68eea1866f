#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "viscomem/fem.hpp"
#include "viscomem/time_stepper.hpp"

namespace viscomem {

/// E^n = |dbar U^n|^2 / 2 + |grad U^n|^2 / 2 for 1 <= n < last, and
/// E^0 = |u1h|^2 / 2 + |grad U^0|^2 / 2.
double discrete_energy(const SimulationHistory& history, const DiscreteOperators& ops,
                       std::size_t n);

/// ||U^m||_A = sqrt(|delta U^{m+1}|^2 + mu0/2 (|grad U^{m+1}|^2 + |grad U^m|^2)), m < last.
double a_norm(const SimulationHistory& history, const DiscreteOperators& ops, double mu0,
              std::size_t m);

/// Gradient self-difference between two terminal states on the same mesh:
/// 1D sqrt(h sum_j |V_j - V'_j|^2), 2D h sqrt(sum_ij |W_ij - W'_ij|^2).
double self_error_time(const Vector& coarse_step_state, const Vector& fine_step_state,
                       const Mesh& mesh);

/// Gradient self-difference between a state on mesh M and one on mesh 2M,
/// comparing coarse node j with fine node 2j; h is the coarse width.
double self_error_space(const Vector& coarse_state, const Mesh& coarse_mesh,
                        const Vector& fine_state, const Mesh& fine_mesh);

/// log2(e_coarse / e_fine); both arguments must be positive.
double rate(double e_coarse, double e_fine);

struct DiagnosticsRecord {
  std::string run_id;
  int dim = 1;
  int M = 0;
  std::size_t N = 0;
  double T = 0.0;
  double tau = 0.0;
  double alpha = 0.0;
  double sigma = 0.0;
  double gamma = 0.0;
  std::string damping;
  double mu1 = 0.0;
  double mu2 = 0.0;
  std::vector<double> energy;  ///< E^n, n = 0..N
  std::vector<double> a_norm;  ///< ||U^n||_A, n = 0..N
  std::vector<double> terminal_gradient;
};

/// Energy and A-norm for n = 0..n_last together with the gradient samples of
/// U^n_last. The history must hold at least U^{n_last + 1}.
DiagnosticsRecord make_record(const SimulationHistory& history, const Mesh& mesh,
                              const DiscreteOperators& ops, const Problem& problem,
                              std::size_t n_last, double final_time, std::string run_id);

}  // namespace viscomem
