#pragma once

#include <string>

#include "viscomem/kernel.hpp"
#include "viscomem/types.hpp"

namespace viscomem {

enum class DampingKind { affine, sqrt, constant };

/// Damping coefficient q = G(mu1 ||u||^2 + mu2 ||grad u||^2) with G one of
/// 1 + z, sqrt(1 + z) or a positive constant. G >= g0 and 0 <= G' <= lipschitz
/// on z >= 0.
struct DampingSpec {
  DampingKind kind = DampingKind::sqrt;
  double constant = 1.0;  ///< value of G for DampingKind::constant
  double mu1 = 1.0;
  double mu2 = 1.0;

  static DampingSpec affine(double mu1, double mu2) { return {DampingKind::affine, 1.0, mu1, mu2}; }
  static DampingSpec square_root(double mu1, double mu2) {
    return {DampingKind::sqrt, 1.0, mu1, mu2};
  }
  static DampingSpec constant_value(double c) { return {DampingKind::constant, c, 1.0, 1.0}; }

  double evaluate(double z) const;
  double g0() const;
  double lipschitz() const;

  void validate() const;
};

const char* to_string(DampingKind kind);
DampingKind damping_kind_from_string(const std::string& name);

/// Initial displacement and velocity, forcing, kernel and damping of one
/// initial-boundary value problem on the unit interval or square.
struct Problem {
  std::string name;
  SpaceField u0;
  SpaceField u1;
  SpaceTimeField f;
  MemoryKernel kernel;
  DampingSpec damping;
};

/// u0 = sin(pi x), u1 = sin(2 pi x), G = sqrt(1 + z), mu1 = mu2 = 1 and
/// f = t^alpha exp(-sigma t) cos(gamma t) sin(pi x) (f = 0 when with_forcing is false).
Problem paper_1d_problem(const KernelSpec& kernel, bool with_forcing = true);

/// u0 = sin(pi x) sin(pi y), u1 = sin(2 pi x) sin(2 pi y), f = 0, G = sqrt(1 + z), mu1 = mu2 = 1.
Problem paper_2d_problem(const KernelSpec& kernel);

/// Memory-free damped wave u'' + c u' - u_xx = f with exact solution
/// u = exp(-t) sin(pi x), hence f = (1 - c + pi^2) exp(-t) sin(pi x).
Problem manufactured_problem(double damping_constant = 1.0);
double manufactured_solution(double x, double t);
double manufactured_gradient(double x, double t);

/// All data zero; the kernel is still the given one.
Problem zero_problem(const MemoryKernel& kernel, const DampingSpec& damping);

}  // namespace viscomem
