#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace viscomem {

using Vector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

// Scalar field on the spatial domain. In 1D the second coordinate is ignored.
using SpaceField = std::function<double(double x, double y)>;
using SpaceTimeField = std::function<double(double x, double y, double t)>;

// Raised when a numerical procedure (quadrature, linear solve) fails to reach
// its target accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computed quantity violates a mathematical invariant the
// implementation relies on (e.g. K(0) outside (0, 1)).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace viscomem
