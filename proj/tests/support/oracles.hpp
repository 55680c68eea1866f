#pragma once

// Reference computations used only by the test suites. Nothing here calls
// the library's quadrature or stepping code paths.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <Eigen/Dense>

namespace viscomem::oracle {

/// erfc for Re(w) >= 0: Maclaurin series of erf for small |w|, the Laplace
/// continued fraction otherwise.
inline std::complex<double> erfc_complex(std::complex<double> w) {
  using C = std::complex<double>;
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  if (std::abs(w) < 2.5) {
    C term = w;
    C sum = w;
    const C w2 = w * w;
    for (int n = 1; n < 200; ++n) {
      term *= -w2 / static_cast<double>(n);
      const C add = term / static_cast<double>(2 * n + 1);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return 1.0 - 2.0 / sqrt_pi * sum;
  }
  // erfc(w) = exp(-w^2)/sqrt(pi) * 1/(w + (1/2)/(w + 1/(w + (3/2)/(w + ...))))
  C tail = w;
  for (int k = 2000; k >= 1; --k) tail = w + (0.5 * k) / tail;
  return std::exp(-w * w) / sqrt_pi / tail;
}

/// K(t) for alpha = 1/2 via int_t^inf s^(-1/2) e^(-z s) ds = sqrt(pi/z) erfc(sqrt(z t)), z = sigma - i gamma.
inline double kernel_half_erfc(double sigma, double gamma, double t) {
  const std::complex<double> z(sigma, -gamma);
  const std::complex<double> rz = std::sqrt(z);
  return std::real(erfc_complex(std::sqrt(z * t)) / rz);
}

/// K(t) for alpha = 1 in closed form, written out independently.
inline double kernel_one_closed(double sigma, double gamma, double t) {
  const std::complex<double> z(sigma, -gamma);
  return std::real(std::exp(-z * t) / z);
}

/// kappa(n, p) by tanh-sinh quadrature of K(t_n - s) max(1 - |s - t_p| / tau, 0)
/// over [0, t_n], split at the hat's kinks.
template <class K>
double flat_weight(const K& kernel, double tau, int n, int p) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double tn = n * tau;
  const double tp = p * tau;
  auto integrand = [&](double s) {
    const double hat = std::max(1.0 - std::abs(s - tp) / tau, 0.0);
    return kernel(std::max(tn - s, 0.0)) * hat;
  };
  double total = 0.0;
  const double lo = std::max(0.0, tp - tau);
  const double hi = std::min(tn, tp + tau);
  if (lo < tp) total += ts.integrate(integrand, lo, std::min(tp, hi));
  if (tp < hi) total += ts.integrate(integrand, tp, hi);
  return total;
}

/// Dense centred scheme for u'' + c u' - u_xx = 0 on (0,1) with linear
/// elements, started with the same Taylor expansion. Stencils are written out
/// from the element integrals.
inline std::vector<Eigen::VectorXd> damped_wave_reference(int M, double c, double tau, int steps,
                                                          const Eigen::VectorXd& u0,
                                                          const Eigen::VectorXd& u1) {
  const int n = M - 1;
  const double h = 1.0 / M;
  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd stiff = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    mass(i, i) = 2.0 * h / 3.0;
    stiff(i, i) = 2.0 / h;
    if (i + 1 < n) {
      mass(i, i + 1) = mass(i + 1, i) = h / 6.0;
      stiff(i, i + 1) = stiff(i + 1, i) = -1.0 / h;
    }
  }
  const Eigen::VectorXd acc = mass.ldlt().solve(-c * mass * u1 - stiff * u0);
  std::vector<Eigen::VectorXd> out = {u0, u0 + tau * u1 + 0.5 * tau * tau * acc};
  const Eigen::MatrixXd lhs = (1.0 / (tau * tau) + c / (2.0 * tau)) * mass + 0.5 * stiff;
  const auto lu = lhs.partialPivLu();
  for (int k = 1; k < steps; ++k) {
    const Eigen::VectorXd& a = out[k];
    const Eigen::VectorXd& b = out[k - 1];
    const Eigen::VectorXd rhs = (2.0 / (tau * tau)) * mass * a -
                                (1.0 / (tau * tau) - c / (2.0 * tau)) * mass * b - 0.5 * stiff * b;
    out.push_back(lu.solve(rhs));
  }
  return out;
}

/// Mode-by-mode reference for the full scheme when the data are sums of
/// discrete eigenvectors. Nodal sin(k pi x) vectors diagonalize the 1D mass
/// and stiffness stencils on a uniform mesh, and tensor products of them do
/// the same in 2D, so each modal amplitude obeys a scalar recurrence coupled
/// only through the damping coefficient.
struct Mode {
  double mass = 0.0;       ///< eigenvalue of the mass matrix
  double stiffness = 0.0;  ///< eigenvalue of the stiffness matrix
  double norm_sq = 0.0;    ///< squared Euclidean norm of the eigenvector
  double c0 = 0.0;         ///< amplitude of u0
  double c1 = 0.0;         ///< amplitude of u1
  double forcing = 0.0;    ///< load vector amplitude per unit forcing time factor
};

/// Eigenvalues of the 1D stencils for sin(k pi x) on M cells.
inline Mode mode_1d(int M, int k, bool lumped = false) {
  const double h = 1.0 / M;
  const double c = std::cos(k * std::numbers::pi * h);
  Mode m;
  m.mass = lumped ? h : h * (4.0 + 2.0 * c) / 6.0;
  m.stiffness = (2.0 - 2.0 * c) / h;
  m.norm_sq = M / 2.0;
  return m;
}

/// Same for sin(k pi x) sin(k pi y) on the tensor-product mesh.
inline Mode mode_2d(int M, int k, bool lumped = false) {
  const Mode a = mode_1d(M, k, lumped);
  Mode m;
  m.mass = a.mass * a.mass;
  m.stiffness = 2.0 * a.stiffness * a.mass;
  m.norm_sq = a.norm_sq * a.norm_sq;
  return m;
}

/// Exact hat moments of sin(k pi x): integral of sin(k pi x) psi_j = coeff * sin(k pi x_j).
inline double sine_moment(int M, int k) {
  const double h = 1.0 / M;
  const double w = k * std::numbers::pi;
  return (2.0 - 2.0 * std::cos(w * h)) / (w * w * h);
}

struct DampingLaw {
  int kind = 0;  ///< 0: 1 + z, 1: sqrt(1 + z), 2: constant
  double constant = 1.0;
  double mu1 = 1.0;
  double mu2 = 1.0;
  double operator()(double l2_sq, double grad_sq) const {
    const double z = mu1 * l2_sq + mu2 * grad_sq;
    return kind == 0 ? 1.0 + z : kind == 1 ? std::sqrt(1.0 + z) : constant;
  }
};

/// Modal amplitudes c_k^n, n = 0..steps. kappa(n, p) and K are supplied by
/// the caller; g(t) multiplies each mode's forcing amplitude.
template <class Kernel, class Weights, class Forcing>
std::vector<std::vector<double>> modal_reference(const std::vector<Mode>& modes, const Kernel& K,
                                                 const Weights& kappa, const Forcing& g,
                                                 const DampingLaw& damping, double tau, int steps) {
  const std::size_t nm = modes.size();
  auto norms = [&](const std::vector<double>& c) {
    double l2 = 0.0, grad = 0.0;
    for (std::size_t k = 0; k < nm; ++k) {
      l2 += modes[k].mass * modes[k].norm_sq * c[k] * c[k];
      grad += modes[k].stiffness * modes[k].norm_sq * c[k] * c[k];
    }
    return std::pair<double, double>(l2, grad);
  };
  const double k0 = K(0.0);
  const double mu0 = 1.0 - k0;
  std::vector<std::vector<double>> c(steps + 1, std::vector<double>(nm));
  std::vector<std::vector<double>> vel(steps + 1, std::vector<double>(nm));
  const auto [l2, gr] = norms([&] {
    std::vector<double> v(nm);
    for (std::size_t k = 0; k < nm; ++k) v[k] = modes[k].c0;
    return v;
  }());
  const double q0 = damping(l2, gr);
  for (std::size_t k = 0; k < nm; ++k) {
    const Mode& m = modes[k];
    const double acc = (-q0 * m.mass * m.c1 - m.stiffness * m.c0 + m.forcing * g(0.0)) / m.mass;
    c[0][k] = m.c0;
    c[1][k] = m.c0 + tau * m.c1 + 0.5 * tau * tau * acc;
    vel[0][k] = m.c1;
  }
  for (int n = 1; n < steps; ++n) {
    const auto [a, b] = norms(c[n]);
    const double q = damping(a, b);
    const double tn = n * tau;
    const double knn = kappa(n, n);
    for (std::size_t k = 0; k < nm; ++k) {
      const Mode& m = modes[k];
      double memory = 0.0;
      for (int p = 0; p < n; ++p) memory += kappa(n, p) * vel[p][k];
      const double lhs = (1.0 / (tau * tau) + q / (2.0 * tau)) * m.mass +
                         (0.5 * mu0 + knn / (2.0 * tau)) * m.stiffness;
      const double rhs = (2.0 / (tau * tau)) * m.mass * c[n][k] -
                         (1.0 / (tau * tau) - q / (2.0 * tau)) * m.mass * c[n - 1][k] -
                         (0.5 * mu0 - knn / (2.0 * tau)) * m.stiffness * c[n - 1][k] -
                         m.stiffness * memory + m.forcing * g(tn) - K(tn) * m.stiffness * c[0][k];
      c[n + 1][k] = rhs / lhs;
      vel[n][k] = (c[n + 1][k] - c[n - 1][k]) / (2.0 * tau);
    }
  }
  return c;
}

// Exact H1-seminorm distance between the piecewise-linear function with
// interior nodal values u (zero boundary values) on M cells and a field with
// derivative du, by 5-point Gauss per cell.
template <class Derivative>
double h1_distance_1d(const Eigen::VectorXd& u, int M, const Derivative& du) {
  static const double xg[5] = {0.046910077030668, 0.230765344947158, 0.5, 0.769234655052842,
                               0.953089922969332};
  static const double wg[5] = {0.118463442528095, 0.239314335249683, 0.284444444444444,
                               0.239314335249683, 0.118463442528095};
  const double h = 1.0 / M;
  double sum = 0.0;
  for (int c = 0; c < M; ++c) {
    const double a = c == 0 ? 0.0 : u[c - 1];
    const double b = c + 1 == M ? 0.0 : u[c];
    const double slope = (b - a) / h;
    for (int q = 0; q < 5; ++q) {
      const double d = du(h * (c + xg[q])) - slope;
      sum += wg[q] * h * d * d;
    }
  }
  return std::sqrt(sum);
}

}  // namespace viscomem::oracle
