#include "viscomem/kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "viscomem/quadrature.hpp"
#include "viscomem/types.hpp"

namespace viscomem {

namespace {

// Split between the truncated integral and the discarded tail.
constexpr double kTailTolerance = 1e-14;
constexpr double kIntegralTolerance = 1e-14;

double tail_bound(const KernelSpec& spec, double T) {
  if (spec.alpha == 1.0) return std::exp(-spec.sigma * T) / spec.sigma;
  return std::exp(-spec.sigma * T) / (spec.sigma * std::sqrt(std::numbers::pi * T));
}

}  // namespace

bool KernelSpec::in_range() const {
  if (alpha == 1.0) return gamma <= sigma;
  return gamma <= std::sqrt(3.0) * sigma * (1.0 + 1e-15);
}

void KernelSpec::validate() const {
  std::ostringstream msg;
  if (alpha != 1.0 && alpha != 0.5) {
    msg << "kernel alpha must be 1 or 0.5, got " << alpha;
  } else if (!(sigma > 1.0)) {
    msg << "kernel sigma must exceed 1, got " << sigma;
  } else if (!(gamma >= 0.0)) {
    msg << "kernel gamma must be nonnegative, got " << gamma;
  } else if (!enforce_range) {
    return;
  } else if (alpha == 1.0 && gamma > sigma) {
    msg << "kernel with alpha = 1 requires gamma <= sigma, got gamma = " << gamma
        << ", sigma = " << sigma;
  } else if (alpha == 0.5 && !in_range()) {
    msg << "kernel with alpha = 1/2 requires gamma <= sqrt(3) sigma, got gamma = " << gamma
        << ", sigma = " << sigma;
  } else {
    return;
  }
  throw std::invalid_argument(msg.str());
}

double beta(const KernelSpec& spec, double t) {
  spec.validate();
  if (t < 0.0 || (t == 0.0 && spec.weakly_singular())) {
    std::ostringstream msg;
    msg << "beta(t) is undefined at t = " << t << " for alpha = " << spec.alpha;
    throw std::domain_error(msg.str());
  }
  const double decay = std::exp(-spec.sigma * t) * std::cos(spec.gamma * t);
  if (spec.alpha == 1.0) return decay;
  return decay / (std::sqrt(t) * std::sqrt(std::numbers::pi));
}

double kernel_transform_closed_form(const KernelSpec& spec, double t) {
  spec.validate();
  if (spec.alpha != 1.0) throw std::invalid_argument("closed-form K requires alpha = 1");
  if (t < 0.0) throw std::domain_error("K(t) requires t >= 0");
  const double s = spec.sigma;
  const double g = spec.gamma;
  return std::exp(-s * t) * (s * std::cos(g * t) - g * std::sin(g * t)) / (s * s + g * g);
}

double kernel_tail_cutoff(const KernelSpec& spec, double tol) {
  spec.validate();
  // Fixed-point iteration on sigma T = log(1 / (sigma sqrt(pi T) tol)); the
  // map is a contraction for the admissible sigma > 1.
  double T = std::log(1.0 / (spec.sigma * tol)) / spec.sigma;
  if (spec.weakly_singular()) {
    for (int it = 0; it < 50; ++it) {
      const double next =
          std::log(1.0 / (spec.sigma * std::sqrt(std::numbers::pi * T) * tol)) / spec.sigma;
      if (std::abs(next - T) < 1e-14 * T) break;
      T = next;
    }
  }
  while (tail_bound(spec, T) > tol) T *= 1.0 + 1e-12;
  return T;
}

double kernel_transform_quadrature(const KernelSpec& spec, double t) {
  spec.validate();
  if (t < 0.0) throw std::domain_error("K(t) requires t >= 0");
  const double cutoff = kernel_tail_cutoff(spec, kTailTolerance);
  if (t >= cutoff) return 0.0;

  const double s = spec.sigma;
  const double g = spec.gamma;
  if (spec.alpha == 1.0) {
    auto f = [s, g](double x) { return std::exp(-s * x) * std::cos(g * x); };
    return quadrature::integrate(f, t, cutoff, kIntegralTolerance).value;
  }
  // s = r^2: integral of s^(-1/2) h(s) ds over [t, T] = 2 * integral of h(r^2) dr over [sqrt t, sqrt T].
  auto f = [s, g](double r) {
    const double r2 = r * r;
    return std::exp(-s * r2) * std::cos(g * r2);
  };
  const double scale = 2.0 / std::sqrt(std::numbers::pi);
  return scale *
         quadrature::integrate(f, std::sqrt(t), std::sqrt(cutoff), kIntegralTolerance / scale)
             .value;
}

double kernel_transform(const KernelSpec& spec, double t) {
  if (spec.alpha == 1.0) return kernel_transform_closed_form(spec, t);
  return kernel_transform_quadrature(spec, t);
}

KernelZero k_zero(const KernelSpec& spec) {
  const double k0 = kernel_transform(spec, 0.0);
  if (!(k0 > 0.0 && k0 < 1.0)) {
    std::ostringstream msg;
    msg << "K(0) = " << k0 << " lies outside (0, 1) for alpha = " << spec.alpha
        << ", sigma = " << spec.sigma << ", gamma = " << spec.gamma;
    throw InvariantViolation(msg.str());
  }
  return {k0, 1.0 - k0};
}

MemoryKernel MemoryKernel::from_spec(const KernelSpec& spec) {
  MemoryKernel k;
  k.spec_ = spec;
  k.k0_ = k_zero(spec).k0;
  k.support_ = kernel_tail_cutoff(spec, kTailTolerance);
  return k;
}

MemoryKernel MemoryKernel::constant(double value) {
  MemoryKernel k;
  k.constant_ = value;
  k.k0_ = value;
  k.support_ = value == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return k;
}

double MemoryKernel::operator()(double t) const {
  if (!spec_) return constant_;
  if (t >= support_) return 0.0;
  return kernel_transform(*spec_, t);
}

std::optional<double> MemoryKernel::constant_value() const {
  if (spec_) return std::nullopt;
  return constant_;
}

}  // namespace viscomem
