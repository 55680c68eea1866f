#pragma once

#include <optional>

namespace viscomem {

/// Parameters of the tempered, sign-changing memory kernel
///   beta(t) = exp(-sigma t) t^(alpha-1) cos(gamma t) / Gamma(alpha).
/// Admissible sets: alpha = 1 with 0 <= gamma <= sigma, or alpha = 1/2 with
/// 0 <= gamma <= sqrt(3) sigma; sigma > 1 in both cases.
struct KernelSpec {
  double alpha = 1.0;
  double sigma = 2.0;
  double gamma = 0.0;
  /// When false only alpha in {1, 1/2}, sigma > 1 and gamma >= 0 are checked.
  /// Used for the alpha = 1 energy study at gamma > sigma, where K(0) stays in
  /// (0, 1) but K is no longer of positive type.
  bool enforce_range = true;

  bool weakly_singular() const { return alpha == 0.5; }

  /// Whether gamma lies in the admissible range for this alpha.
  bool in_range() const;
  /// Throws std::invalid_argument naming the violated condition.
  void validate() const;
};

/// Absolute accuracy target for kernel values and everything derived from them.
inline constexpr double kKernelTolerance = 1e-12;

double beta(const KernelSpec& spec, double t);

/// K(t) = integral of beta over [t, inf). Dispatches to the closed form for
/// alpha = 1 and to adaptive quadrature for alpha = 1/2.
double kernel_transform(const KernelSpec& spec, double t);

/// Closed form exp(-sigma t)(sigma cos(gamma t) - gamma sin(gamma t)) / (sigma^2 + gamma^2).
/// Only defined for alpha = 1.
double kernel_transform_closed_form(const KernelSpec& spec, double t);

/// Adaptive quadrature of beta on [t, T_cut] plus a tail below the tolerance.
/// For alpha = 1/2 the substitution s = r^2 removes the s^(-1/2) singularity.
double kernel_transform_quadrature(const KernelSpec& spec, double t);

/// Smallest T with the analytic tail bound of the integral of |beta| over
/// [T, inf) below tol.
double kernel_tail_cutoff(const KernelSpec& spec, double tol);

struct KernelZero {
  double k0;   ///< K(0), guaranteed in (0, 1)
  double mu0;  ///< 1 - K(0)
};

/// Throws InvariantViolation if the computed K(0) falls outside (0, 1).
KernelZero k_zero(const KernelSpec& spec);

/// The transformed kernel K as consumed by the weight table and stepper.
/// Either the parametric family above or a constant K (K = 0 switches the
/// memory term off; K = 1 is a quadrature test hook).
class MemoryKernel {
 public:
  static MemoryKernel from_spec(const KernelSpec& spec);
  static MemoryKernel constant(double value);

  double operator()(double t) const;

  double k0() const { return k0_; }
  double mu0() const { return 1.0 - k0_; }

  /// True when K behaves like K(0) - c sqrt(t) near the origin.
  bool weakly_singular() const { return spec_ && spec_->weakly_singular(); }

  /// Lags beyond support() have |K| below the kernel tolerance and are treated as 0.
  double support() const { return support_; }

  const std::optional<KernelSpec>& spec() const { return spec_; }
  std::optional<double> constant_value() const;

 private:
  std::optional<KernelSpec> spec_;
  double constant_ = 0.0;
  double k0_ = 0.0;
  double support_ = 0.0;
};

}  // namespace viscomem
