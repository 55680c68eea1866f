#include "viscomem/problem.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace viscomem {

using std::numbers::pi;

double DampingSpec::evaluate(double z) const {
  switch (kind) {
    case DampingKind::affine:
      return 1.0 + z;
    case DampingKind::sqrt:
      return std::sqrt(1.0 + z);
    case DampingKind::constant:
      return constant;
  }
  return constant;
}

double DampingSpec::g0() const { return kind == DampingKind::constant ? constant : 1.0; }

double DampingSpec::lipschitz() const {
  switch (kind) {
    case DampingKind::affine:
      return 1.0;
    case DampingKind::sqrt:
      return 0.5;
    case DampingKind::constant:
      return 0.0;
  }
  return 0.0;
}

void DampingSpec::validate() const {
  std::ostringstream msg;
  if (!(mu1 >= 0.0) || !(mu2 >= 0.0)) {
    msg << "damping weights must be nonnegative, got mu1 = " << mu1 << ", mu2 = " << mu2;
  } else if (mu1 * mu1 + mu2 * mu2 <= 0.0) {
    msg << "damping weights mu1 and mu2 must not both vanish";
  } else if (kind == DampingKind::constant && !(constant > 0.0)) {
    msg << "constant damping must be positive, got " << constant;
  } else {
    return;
  }
  throw std::invalid_argument(msg.str());
}

const char* to_string(DampingKind kind) {
  switch (kind) {
    case DampingKind::affine:
      return "affine";
    case DampingKind::sqrt:
      return "sqrt";
    case DampingKind::constant:
      return "constant";
  }
  return "unknown";
}

DampingKind damping_kind_from_string(const std::string& name) {
  if (name == "affine") return DampingKind::affine;
  if (name == "sqrt") return DampingKind::sqrt;
  if (name == "constant") return DampingKind::constant;
  throw std::invalid_argument("unknown damping function '" + name +
                              "' (expected affine, sqrt or constant)");
}

Problem paper_1d_problem(const KernelSpec& kernel, bool with_forcing) {
  Problem p;
  p.name = with_forcing ? "paper_1d" : "paper_1d_unforced";
  p.u0 = [](double x, double) { return std::sin(pi * x); };
  p.u1 = [](double x, double) { return std::sin(2.0 * pi * x); };
  if (with_forcing) {
    const KernelSpec k = kernel;
    p.f = [k](double x, double, double t) {
      return std::pow(t, k.alpha) * std::exp(-k.sigma * t) * std::cos(k.gamma * t) *
             std::sin(pi * x);
    };
  } else {
    p.f = [](double, double, double) { return 0.0; };
  }
  p.kernel = MemoryKernel::from_spec(kernel);
  p.damping = DampingSpec::square_root(1.0, 1.0);
  return p;
}

Problem paper_2d_problem(const KernelSpec& kernel) {
  Problem p;
  p.name = "paper_2d";
  p.u0 = [](double x, double y) { return std::sin(pi * x) * std::sin(pi * y); };
  p.u1 = [](double x, double y) { return std::sin(2.0 * pi * x) * std::sin(2.0 * pi * y); };
  p.f = [](double, double, double) { return 0.0; };
  p.kernel = MemoryKernel::from_spec(kernel);
  p.damping = DampingSpec::square_root(1.0, 1.0);
  return p;
}

double manufactured_solution(double x, double t) { return std::exp(-t) * std::sin(pi * x); }
double manufactured_gradient(double x, double t) { return pi * std::exp(-t) * std::cos(pi * x); }

Problem manufactured_problem(double damping_constant) {
  Problem p;
  p.name = "manufactured";
  p.u0 = [](double x, double) { return std::sin(pi * x); };
  p.u1 = [](double x, double) { return -std::sin(pi * x); };
  const double c = damping_constant;
  p.f = [c](double x, double, double t) {
    return (1.0 - c + pi * pi) * std::exp(-t) * std::sin(pi * x);
  };
  p.kernel = MemoryKernel::constant(0.0);
  p.damping = DampingSpec::constant_value(c);
  return p;
}

Problem zero_problem(const MemoryKernel& kernel, const DampingSpec& damping) {
  Problem p;
  p.name = "zero";
  p.u0 = [](double, double) { return 0.0; };
  p.u1 = [](double, double) { return 0.0; };
  p.f = [](double, double, double) { return 0.0; };
  p.kernel = kernel;
  p.damping = damping;
  return p;
}

}  // namespace viscomem
