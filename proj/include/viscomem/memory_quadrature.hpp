#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "viscomem/kernel.hpp"
#include "viscomem/types.hpp"

namespace viscomem {

/// Weights kappa(n, p) of the interpolating quadrature
///   Q_n(phi) = sum_{p=0}^{n} kappa(n, p) phi(t_p)  ~  int_0^{t_n} K(t_n - s) phi(s) ds,
/// obtained by integrating K(t_n - s) against the piecewise-linear hat at t_p
/// restricted to [0, t_n]. On a uniform grid interior weights depend only on
/// the lag n - p, so the table stores one value per lag plus the two edges.
class WeightTable {
 public:
  WeightTable() = default;

  double tau() const { return tau_; }
  std::size_t n_max() const { return n_max_; }

  /// kappa(n, p) for 1 <= n <= n_max, 0 <= p <= n.
  double weight(std::size_t n, std::size_t p) const;

  /// Full interior hat at lag j, 1 <= j <= n_max.
  double body(std::size_t j) const { return body_.at(j); }
  /// Half hat at p = 0 seen from step n.
  double edge_left(std::size_t n) const { return edge_left_.at(n); }
  /// Half hat at p = n; independent of n on a uniform grid.
  double edge_right(std::size_t n) const { return edge_right_.at(n); }

  /// sum_{n=1}^{m} kappa(n, 0).
  double left_edge_sum(std::size_t m) const { return left_edge_prefix_.at(m); }

  /// Whether kappa(n, n) > 0; the stepper refuses to run otherwise.
  bool diagonal_positive() const { return edge_right_.size() > 1 && edge_right_[1] > 0.0; }

  friend WeightTable build_weight_table(const MemoryKernel& kernel, double tau, std::size_t n_max);

 private:
  double tau_ = 0.0;
  std::size_t n_max_ = 0;
  // Index 0 is unused in all three so indices match the step numbering.
  std::vector<double> body_;
  std::vector<double> edge_left_;
  std::vector<double> edge_right_;
  std::vector<double> left_edge_prefix_;
};

/// Throws std::invalid_argument for tau <= 0 or n_max < 1 and NumericalError
/// (naming the offending lag interval) if a weight integral fails to converge.
WeightTable build_weight_table(const MemoryKernel& kernel, double tau, std::size_t n_max);

/// Q_n over vector-valued samples phi(t_0), ..., phi(t_n).
Vector convolve(const WeightTable& table, std::size_t n, std::span<const Vector> samples);

}  // namespace viscomem
