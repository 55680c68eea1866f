#include "viscomem/memory_quadrature.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "viscomem/quadrature.hpp"

namespace viscomem {

namespace {

// Integrals of K over the lag interval [t_{i-1}, t_i] against the rising
// weight (u - t_{i-1}) / tau and the falling weight (t_i - u) / tau.
std::array<double, 2> lag_interval_moments(const MemoryKernel& kernel, double tau, std::size_t i) {
  const double start = static_cast<double>(i - 1) * tau;
  if (start >= kernel.support()) return {0.0, 0.0};

  const double tol = 0.1 * kKernelTolerance / tau;
  if (i == 1 && kernel.weakly_singular()) {
    // u = tau y^2 so the sqrt(u) behaviour of K at the origin becomes smooth.
    auto f = [&](double y) -> std::array<double, 2> {
      const double x = y * y;
      const double k = kernel(tau * x) * 2.0 * y;
      return {k * x, k * (1.0 - x)};
    };
    auto r = quadrature::integrate(f, 0.0, 1.0, tol);
    return {tau * r.value[0], tau * r.value[1]};
  }
  auto f = [&](double x) -> std::array<double, 2> {
    const double k = kernel(start + tau * x);
    return {k * x, k * (1.0 - x)};
  };
  auto r = quadrature::integrate(f, 0.0, 1.0, tol);
  return {tau * r.value[0], tau * r.value[1]};
}

}  // namespace

double WeightTable::weight(std::size_t n, std::size_t p) const {
  if (n < 1 || n > n_max_ || p > n) {
    std::ostringstream msg;
    msg << "weight index (n = " << n << ", p = " << p << ") outside 1 <= n <= " << n_max_
        << ", 0 <= p <= n";
    throw std::out_of_range(msg.str());
  }
  if (p == 0) return edge_left_[n];
  if (p == n) return edge_right_[n];
  return body_[n - p];
}

WeightTable build_weight_table(const MemoryKernel& kernel, double tau, std::size_t n_max) {
  if (!(tau > 0.0)) throw std::invalid_argument("weight table requires tau > 0");
  if (n_max < 1) throw std::invalid_argument("weight table requires n_max >= 1");

  std::vector<double> rise(n_max + 2, 0.0);
  std::vector<double> fall(n_max + 2, 0.0);
  for (std::size_t i = 1; i <= n_max + 1; ++i) {
    try {
      const auto m = lag_interval_moments(kernel, tau, i);
      rise[i] = m[0];
      fall[i] = m[1];
    } catch (const NumericalError& e) {
      std::ostringstream msg;
      msg << "weight quadrature failed on lag interval " << i << " (kappa(n, p) with n - p = "
          << i - 1 << " or " << i << "): " << e.what();
      throw NumericalError(msg.str());
    }
  }

  WeightTable table;
  table.tau_ = tau;
  table.n_max_ = n_max;
  table.body_.assign(n_max + 1, 0.0);
  table.edge_left_.assign(n_max + 1, 0.0);
  table.edge_right_.assign(n_max + 1, 0.0);
  table.left_edge_prefix_.assign(n_max + 1, 0.0);
  for (std::size_t j = 1; j <= n_max; ++j) {
    table.body_[j] = rise[j] + fall[j + 1];
    table.edge_left_[j] = rise[j];
    table.edge_right_[j] = fall[1];
    table.left_edge_prefix_[j] = table.left_edge_prefix_[j - 1] + rise[j];
  }
  return table;
}

Vector convolve(const WeightTable& table, std::size_t n, std::span<const Vector> samples) {
  if (samples.size() != n + 1) {
    std::ostringstream msg;
    msg << "convolve at step " << n << " needs " << n + 1 << " samples, got " << samples.size();
    throw std::invalid_argument(msg.str());
  }
  Vector out = Vector::Zero(samples[0].size());
  for (std::size_t p = 0; p <= n; ++p) {
    if (samples[p].size() != out.size())
      throw std::invalid_argument("convolve samples have inconsistent sizes");
    out.noalias() += table.weight(n, p) * samples[p];
  }
  return out;
}

}  // namespace viscomem
