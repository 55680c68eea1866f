#include <cmath>
#include <limits>
#include <numbers>

#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "viscomem/kernel.hpp"

using namespace viscomem;

namespace {
const double kRoot3 = std::sqrt(3.0);
}

TEST_CASE("beta point values") {
  CHECK(beta({1.0, 3.0, 3.0 * kRoot3, false}, 0.0) == 1.0);
  CHECK(std::abs(beta({1.0, 2.0, 2.0}, std::numbers::pi / 4.0)) < 1e-16);
  // exp(-3) / sqrt(pi), written out.
  CHECK(beta({0.5, 3.0, 0.0}, 1.0) ==
        doctest::Approx(0.02808934536852883).epsilon(1e-13));
  CHECK(beta({1.0, 2.0, 1.0}, 0.5) == doctest::Approx(std::exp(-1.0) * std::cos(0.5)));
}

TEST_CASE("beta domain errors") {
  CHECK_THROWS_AS(beta({0.5, 2.0, 1.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(beta({0.5, 2.0, 1.0}, -1.0), std::domain_error);
  CHECK_THROWS_AS(beta({1.0, 2.0, 1.0}, -1e-3), std::domain_error);
}

TEST_CASE("spec validation") {
  CHECK_NOTHROW((KernelSpec{1.0, 2.0, 2.0}.validate()));
  CHECK_NOTHROW((KernelSpec{0.5, 3.0, 3.0 * kRoot3}.validate()));
  CHECK_THROWS_AS((KernelSpec{1.0, 3.0, 3.0 * kRoot3}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((KernelSpec{0.5, 2.0, 3.5}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((KernelSpec{0.75, 2.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((KernelSpec{1.0, 1.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((KernelSpec{1.0, 2.0, -0.1}.validate()), std::invalid_argument);
  // Relaxed range still rejects structural errors.
  CHECK_NOTHROW((KernelSpec{1.0, 3.0, 3.0 * kRoot3, false}.validate()));
  CHECK_THROWS_AS((KernelSpec{1.0, 0.5, 0.0, false}.validate()), std::invalid_argument);
  CHECK_FALSE((KernelSpec{1.0, 3.0, 3.0 * kRoot3, false}.in_range()));
}

TEST_CASE("closed-form kernel values") {
  CHECK(kernel_transform({1.0, 3.0, 3.0 * kRoot3, false}, 0.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  for (double t : {0.0, 0.3, 2.0}) {
    for (double s : {1.5, 2.0, 4.0})
      CHECK(kernel_transform({1.0, s, 0.0}, t) == doctest::Approx(std::exp(-s * t) / s).epsilon(1e-14));
  }
  CHECK_THROWS_AS(kernel_transform_closed_form({0.5, 2.0, 1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(kernel_transform({1.0, 2.0, 1.0}, -0.5), std::domain_error);
}

TEST_CASE("quadrature path agrees with the closed form for alpha = 1") {
  for (const KernelSpec& s :
       {KernelSpec{1.0, 3.0, 3.0 * kRoot3, false}, KernelSpec{1.0, 2.0, 2.0}, KernelSpec{1.0, 1.1, 0.5}}) {
    for (double t : {0.0, 0.1, 1.0, 10.0}) {
      CHECK(std::abs(kernel_transform_quadrature(s, t) - kernel_transform_closed_form(s, t)) < 1e-10);
      CHECK(std::abs(kernel_transform_closed_form(s, t) - oracle::kernel_one_closed(s.sigma, s.gamma, t)) <
            1e-15);
    }
  }
}

TEST_CASE("alpha = 1/2 quadrature matches the complementary error function identity") {
  gen::Source src(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    KernelSpec s = src.kernel();
    s.alpha = 0.5;
    s.gamma = std::min(s.gamma, kRoot3 * s.sigma);
    const double t = trial % 4 == 0 ? 0.0 : src.uniform(0.0, 6.0);
    CHECK(std::abs(kernel_transform(s, t) - oracle::kernel_half_erfc(s.sigma, s.gamma, t)) < 1e-12);
  }
  // K(0) = Re(z^(-1/2)), z = 3 - 3 sqrt(3) i = 6 exp(-i pi/3): cos(pi/6)/sqrt(6) = 1/(2 sqrt 2).
  CHECK(kernel_transform({0.5, 3.0, 3.0 * kRoot3}, 0.0) ==
        doctest::Approx(1.0 / (2.0 * std::numbers::sqrt2)).epsilon(1e-13));
  // gamma = 0: K(t) = erfc(sqrt(sigma t)) / sqrt(sigma).
  CHECK(kernel_transform({0.5, 2.0, 0.0}, 0.7) ==
        doctest::Approx(std::erfc(std::sqrt(1.4)) / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("k_zero bounds and values") {
  CHECK(k_zero({1.0, 2.0, 0.0}).k0 == doctest::Approx(0.5));
  CHECK(k_zero({1.0, 2.0, 0.0}).mu0 == doctest::Approx(0.5));
  const KernelZero z = k_zero({1.0, 3.0, 3.0 * kRoot3, false});
  CHECK(z.k0 == doctest::Approx(1.0 / 12.0));
  CHECK(z.mu0 == doctest::Approx(11.0 / 12.0));
  for (const KernelSpec& s : gen::shipped_kernels()) {
    const KernelZero k = k_zero(s);
    CHECK(k.k0 > 0.0);
    CHECK(k.k0 < 1.0);
    CHECK(k.mu0 == doctest::Approx(1.0 - k.k0));
  }
  gen::Source src(7);
  for (int trial = 0; trial < 50; ++trial) {
    const KernelZero k = k_zero(src.kernel());
    CHECK((k.k0 > 0.0 && k.k0 < 1.0));
  }
}

TEST_CASE("|K(t)| is bounded by sigma^(-alpha) and decays") {
  gen::Source src(11);
  for (int trial = 0; trial < 30; ++trial) {
    const KernelSpec s = src.kernel();
    const double bound = std::pow(s.sigma, -s.alpha);
    for (int i = 0; i <= 40; ++i) {
      const double t = 0.1 * i * i;
      CHECK(std::abs(kernel_transform(s, t)) <= bound * (1.0 + 1e-14));
    }
    CHECK(std::abs(kernel_transform(s, 10.0 / s.sigma * 20.0)) < 1e-6);
  }
}

TEST_CASE("discrete positive-type quadratic form") {
  gen::Source src(99);
  for (int trial = 0; trial < 12; ++trial) {
    const KernelSpec s = src.kernel();
    const int m = src.integer(2, 64);
    const double tau = src.uniform(0.005, 0.5);
    std::vector<double> k(m);
    for (int d = 0; d < m; ++d) k[d] = kernel_transform(s, d * tau);
    for (int draw = 0; draw < 5; ++draw) {
      const Vector v = src.vector(m);
      double form = 0.0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) form += k[std::abs(a - b)] * v[a] * v[b];
      CHECK(form * tau * tau >= -1e-8);
    }
  }
}

TEST_CASE("tail cutoff bounds the discarded integral") {
  for (const KernelSpec& s : gen::shipped_kernels()) {
    const double T = kernel_tail_cutoff(s, 1e-14);
    CHECK(T > 0.0);
    // The true tail is below the bound, which is below the tolerance.
    const double tail = s.alpha == 1.0 ? std::abs(oracle::kernel_one_closed(s.sigma, s.gamma, T))
                                       : std::abs(oracle::kernel_half_erfc(s.sigma, s.gamma, T));
    CHECK(tail <= 1e-14);
  }
}

TEST_CASE("memory kernel wrapper") {
  const MemoryKernel k = MemoryKernel::from_spec({0.5, 2.0, 1.0});
  CHECK(k.weakly_singular());
  CHECK(k(0.0) == doctest::Approx(k.k0()));
  CHECK(k(k.support() * 2.0) == 0.0);
  CHECK(k.mu0() == doctest::Approx(1.0 - k.k0()));
  CHECK_FALSE(k.constant_value().has_value());

  const MemoryKernel zero = MemoryKernel::constant(0.0);
  CHECK(zero(3.0) == 0.0);
  CHECK(zero.mu0() == 1.0);
  CHECK(zero.support() == 0.0);
  const MemoryKernel one = MemoryKernel::constant(1.0);
  CHECK(one(100.0) == 1.0);
  CHECK(one.support() == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(MemoryKernel::from_spec({1.0, 3.0, 3.0 * kRoot3}), std::invalid_argument);
}
