#pragma once

// Globally adaptive 7/15-point Gauss-Kronrod quadrature with an absolute
// error target. Integrands may be scalar or return std::array<double, N>
// (all components share the sample points and the error budget).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <sstream>
#include <type_traits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "viscomem/types.hpp"

namespace viscomem::quadrature {

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }

template <std::size_t N>
double magnitude(const std::array<double, N>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

template <class T>
T zero() {
  if constexpr (std::is_same_v<T, double>) {
    return 0.0;
  } else {
    T z;
    z.fill(0.0);
    return z;
  }
}

template <class T>
void axpy(T& acc, double w, const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    acc += w * v;
  } else {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * v[i];
  }
}

template <class T>
T difference(const T& a, const T& b) {
  T d = a;
  axpy(d, -1.0, b);
  return d;
}

template <class T>
struct Segment {
  double a;
  double b;
  T value;
  double error;
  friend bool operator<(const Segment& l, const Segment& r) { return l.error < r.error; }
};

template <class T, class F>
Segment<T> kronrod15(F& f, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  using G = boost::math::quadrature::gauss<double, 7>;
  static const auto& xk = GK::abscissa();
  static const auto& wk = GK::weights();
  static const auto& wg = G::weights();

  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  T kron = zero<T>();
  T gauss = zero<T>();

  const T fc = f(c);
  axpy(kron, wk[0], fc);
  axpy(gauss, wg[0], fc);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const T fl = f(c - r * xk[i]);
    const T fr = f(c + r * xk[i]);
    axpy(kron, wk[i], fl);
    axpy(kron, wk[i], fr);
    // Gauss nodes coincide with the even Kronrod abscissae.
    if (i % 2 == 0) {
      axpy(gauss, wg[i / 2], fl);
      axpy(gauss, wg[i / 2], fr);
    }
  }
  T value = zero<T>();
  axpy(value, r, kron);
  T coarse = zero<T>();
  axpy(coarse, r, gauss);
  return {a, b, value, magnitude(difference(value, coarse))};
}

}  // namespace detail

// Integrates f over [a, b] until the summed Kronrod-Gauss error estimate is
// below abs_tol. Throws NumericalError when max_segments is exhausted.
template <class F>
auto integrate(F&& f, double a, double b, double abs_tol, std::size_t max_segments = 4000)
    -> Result<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  Result<T> out;
  out.value = detail::zero<T>();
  if (a == b) return out;

  std::priority_queue<detail::Segment<T>> heap;
  heap.push(detail::kronrod15<T>(f, a, b));
  out.evaluations = 15;
  double total_error = heap.top().error;

  // Errors below a few ulps of the segment magnitude cannot be resolved by
  // bisection; treat them as converged.
  auto floor_of = [](const detail::Segment<T>& s) {
    return 50.0 * std::numeric_limits<double>::epsilon() * detail::magnitude(s.value);
  };

  while (total_error > abs_tol && heap.top().error > floor_of(heap.top())) {
    if (heap.size() >= max_segments) {
      std::ostringstream msg;
      msg << "adaptive quadrature on [" << a << ", " << b << "] did not converge: error estimate "
          << total_error << " > " << abs_tol;
      throw NumericalError(msg.str());
    }
    detail::Segment<T> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::kronrod15<T>(f, worst.a, mid);
    auto right = detail::kronrod15<T>(f, mid, worst.b);
    out.evaluations += 30;
    total_error += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
  }

  // Sum in interval order so the result does not depend on heap layout.
  std::vector<detail::Segment<T>> segments;
  segments.reserve(heap.size());
  while (!heap.empty()) {
    segments.push_back(heap.top());
    heap.pop();
  }
  std::sort(segments.begin(), segments.end(),
            [](const auto& l, const auto& r) { return l.a < r.a; });
  out.error = 0.0;
  for (const auto& s : segments) {
    detail::axpy(out.value, 1.0, s.value);
    out.error += s.error;
  }
  return out;
}

}  // namespace viscomem::quadrature
