#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

#include "viscomem/fem.hpp"
#include "viscomem/memory_quadrature.hpp"
#include "viscomem/problem.hpp"
#include "viscomem/types.hpp"

namespace viscomem {

/// Trajectory U^0..U^n of the fully discrete scheme together with the cached
/// vectors A * dbar U^p used by the memory sum (dbar U^0 = u1h).
struct SimulationHistory {
  double tau = 0.0;
  std::vector<Vector> states;
  std::vector<Vector> stiffness_diffs;
  std::vector<double> damping;  ///< q_n used at step n (q_0 from the start)
  Vector u1h;
  Vector u2h;

  std::size_t last() const { return states.size() - 1; }
  double time(std::size_t n) const { return static_cast<double>(n) * tau; }
};

/// G(mu1 U^T M U + mu2 U^T A U).
double damping_value(const DampingSpec& spec, const DiscreteOperators& ops, const Vector& u);

struct TaylorStart {
  Vector u0h;
  Vector u1;  ///< U^1
  Vector u1h;
  Vector u2h;
  double q0;
};

/// U^0 = I u0, u1h = I u1, M u2h = -q(0) M u1h - A U^0 + (f(0), .) and
/// U^1 = U^0 + tau u1h + tau^2/2 u2h.
TaylorStart taylor_start(const DiscreteOperators& ops, const Mesh& mesh, const Problem& problem,
                         double tau);

/// Linearly implicit centred scheme. Each step solves
///   [(1/tau^2 + q_n/(2 tau)) M + (mu0/2 + kappa_nn/(2 tau)) A] U^{n+1} = b_n
/// with q_n frozen at U^n. 1D systems use a sparse LDL^T factorization, 2D
/// systems diagonally preconditioned CG (relative tolerance 1e-11).
class TimeStepper {
 public:
  TimeStepper(const Mesh& mesh, Problem problem, WeightTable table);
  TimeStepper(const Mesh& mesh, DiscreteOperators ops, Problem problem, WeightTable table);

  const Mesh& mesh() const { return mesh_; }
  const DiscreteOperators& operators() const { return ops_; }
  const WeightTable& weights() const { return table_; }
  const Problem& problem() const { return problem_; }

  /// History holding U^0 and U^1 from the Taylor start.
  SimulationHistory start() const;

  /// Computes U^{n+1} from a history holding exactly U^0..U^n (n >= 1),
  /// appends it and caches A dbar U^n. Throws InvariantViolation when the
  /// stiffness coefficient mu0/2 + kappa_nn/(2 tau) is not positive and
  /// NumericalError when the linear solve fails.
  const Vector& step(SimulationHistory& history, std::size_t n);

  /// Advances until the history holds U^0..U^n_steps.
  void advance(SimulationHistory& history, std::size_t n_steps);

 private:
  Vector solve(const SparseMatrix& system, const Vector& rhs, const Vector& guess);

  Mesh mesh_;
  DiscreteOperators ops_;
  Problem problem_;
  WeightTable table_;

  Eigen::SimplicialLDLT<SparseMatrix> direct_;
  bool direct_analyzed_ = false;
  Eigen::ConjugateGradient<SparseMatrix, Eigen::Lower | Eigen::Upper,
                           Eigen::DiagonalPreconditioner<double>>
      iterative_;
};

/// Taylor start followed by steps until U^n_steps; n_steps = 1 returns the
/// start values only.
SimulationHistory run(const Problem& problem, const Mesh& mesh, double tau, std::size_t n_steps,
                      MassMatrix mass = MassMatrix::consistent);

}  // namespace viscomem
