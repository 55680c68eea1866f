#include "viscomem/time_stepper.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace viscomem {

namespace {

constexpr double kSolverTolerance = 1e-11;

}  // namespace

double damping_value(const DampingSpec& spec, const DiscreteOperators& ops, const Vector& u) {
  if (spec.kind == DampingKind::constant) return spec.constant;
  const double z = spec.mu1 * mass_norm_sq(ops, u) + spec.mu2 * stiffness_norm_sq(ops, u);
  return spec.evaluate(z);
}

TaylorStart taylor_start(const DiscreteOperators& ops, const Mesh& mesh, const Problem& problem,
                         double tau) {
  TaylorStart s;
  s.u0h = interpolate(mesh, problem.u0);
  s.u1h = interpolate(mesh, problem.u1);
  s.q0 = damping_value(problem.damping, ops, s.u0h);

  const Vector rhs =
      -s.q0 * (ops.mass * s.u1h) - ops.stiffness * s.u0h + load_vector(mesh, problem.f, 0.0);
  if (mesh.dim() == 1) {
    Eigen::SimplicialLDLT<SparseMatrix> mass_solver(ops.mass);
    if (mass_solver.info() != Eigen::Success)
      throw NumericalError("mass matrix factorization failed in the Taylor start");
    s.u2h = mass_solver.solve(rhs);
  } else {
    // The mass matrix is well conditioned independently of h.
    Eigen::ConjugateGradient<SparseMatrix, Eigen::Lower | Eigen::Upper,
                             Eigen::DiagonalPreconditioner<double>>
        mass_solver;
    mass_solver.setTolerance(kSolverTolerance);
    mass_solver.compute(ops.mass);
    s.u2h = mass_solver.solve(rhs);
    if (mass_solver.info() != Eigen::Success)
      throw NumericalError("mass matrix solve failed in the Taylor start");
  }

  s.u1 = s.u0h + tau * s.u1h + 0.5 * tau * tau * s.u2h;
  return s;
}

TimeStepper::TimeStepper(const Mesh& mesh, Problem problem, WeightTable table)
    : TimeStepper(mesh, assemble(mesh), std::move(problem), std::move(table)) {}

TimeStepper::TimeStepper(const Mesh& mesh, DiscreteOperators ops, Problem problem,
                         WeightTable table)
    : mesh_(mesh), ops_(std::move(ops)), problem_(std::move(problem)), table_(std::move(table)) {
  problem_.damping.validate();
  iterative_.setTolerance(kSolverTolerance);
}

SimulationHistory TimeStepper::start() const {
  const double tau = table_.tau();
  TaylorStart s = taylor_start(ops_, mesh_, problem_, tau);
  SimulationHistory h;
  h.tau = tau;
  h.states = {s.u0h, s.u1};
  h.stiffness_diffs = {ops_.stiffness * s.u1h};
  h.damping = {s.q0};
  h.u1h = std::move(s.u1h);
  h.u2h = std::move(s.u2h);
  return h;
}

Vector TimeStepper::solve(const SparseMatrix& system, const Vector& rhs, const Vector& guess) {
  if (mesh_.dim() == 1) {
    if (!direct_analyzed_) {
      direct_.analyzePattern(system);
      direct_analyzed_ = true;
    }
    direct_.factorize(system);
    if (direct_.info() != Eigen::Success)
      throw NumericalError("LDL^T factorization of the step matrix failed");
    return direct_.solve(rhs);
  }
  iterative_.compute(system);
  if (iterative_.info() != Eigen::Success)
    throw NumericalError("incomplete Cholesky preconditioner setup failed");
  Vector x = iterative_.solveWithGuess(rhs, guess);
  if (iterative_.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "conjugate gradient did not converge: " << iterative_.iterations()
        << " iterations, relative residual " << iterative_.error();
    throw NumericalError(msg.str());
  }
  return x;
}

const Vector& TimeStepper::step(SimulationHistory& history, std::size_t n) {
  if (n < 1 || history.states.size() != n + 1 || history.stiffness_diffs.size() != n) {
    std::ostringstream msg;
    msg << "step " << n << " needs a history holding U^0..U^" << n << ", got "
        << history.states.size() << " states";
    throw std::invalid_argument(msg.str());
  }
  if (n > table_.n_max()) {
    std::ostringstream msg;
    msg << "step " << n << " exceeds the weight table range n_max = " << table_.n_max();
    throw std::out_of_range(msg.str());
  }

  const double tau = history.tau;
  const double mu0 = problem_.kernel.mu0();
  const double kappa_nn = table_.weight(n, n);
  const double stiff_coeff = 0.5 * mu0 + kappa_nn / (2.0 * tau);
  if (!(stiff_coeff > 0.0)) {
    std::ostringstream msg;
    msg << "step " << n << ": mu0/2 + kappa_nn/(2 tau) = " << stiff_coeff
        << " is not positive (mu0 = " << mu0 << ", kappa_nn = " << kappa_nn << ", tau = " << tau
        << ")";
    throw InvariantViolation(msg.str());
  }

  const Vector& un = history.states[n];
  const Vector& uprev = history.states[n - 1];
  const double q = damping_value(problem_.damping, ops_, un);
  const double inv_tau2 = 1.0 / (tau * tau);
  const double mass_coeff = inv_tau2 + q / (2.0 * tau);

  Vector rhs = ops_.mass * ((2.0 * inv_tau2) * un - (inv_tau2 - q / (2.0 * tau)) * uprev);
  rhs.noalias() -= (0.5 * mu0 - kappa_nn / (2.0 * tau)) * (ops_.stiffness * uprev);
  for (std::size_t p = 0; p < n; ++p)
    rhs.noalias() -= table_.weight(n, p) * history.stiffness_diffs[p];
  rhs += load_vector(mesh_, problem_.f, history.time(n));
  const double k_now = problem_.kernel(history.time(n));
  // (K(t_n) Laplacian u0, psi) = -K(t_n) (grad u0, grad psi)
  if (k_now != 0.0) rhs -= k_now * (ops_.stiffness * history.states[0]);

  const SparseMatrix system = mass_coeff * ops_.mass + stiff_coeff * ops_.stiffness;
  const Vector guess = 2.0 * un - uprev;
  Vector next = solve(system, rhs, guess);

  history.stiffness_diffs.push_back(ops_.stiffness * ((next - uprev) / (2.0 * tau)));
  history.damping.push_back(q);
  history.states.push_back(std::move(next));
  return history.states.back();
}

void TimeStepper::advance(SimulationHistory& history, std::size_t n_steps) {
  history.states.reserve(n_steps + 1);
  history.stiffness_diffs.reserve(n_steps);
  while (history.last() < n_steps) step(history, history.last());
}

SimulationHistory run(const Problem& problem, const Mesh& mesh, double tau, std::size_t n_steps,
                      MassMatrix mass) {
  if (n_steps < 1) throw std::invalid_argument("run needs n_steps >= 1");
  WeightTable table = build_weight_table(problem.kernel, tau, std::max<std::size_t>(n_steps - 1, 1));
  TimeStepper stepper(mesh, assemble(mesh, mass), problem, std::move(table));
  SimulationHistory history = stepper.start();
  stepper.advance(history, n_steps);
  return history;
}

}  // namespace viscomem
