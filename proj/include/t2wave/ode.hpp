#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace t2w {

// Classical fixed-step RK4 on std::array states. Steps from x to x+n*h.
template <int N, class F>
std::array<double, N> rk4_steps(const F& f, double x, std::array<double, N> y, double h, long n) {
  std::array<double, N> k1, k2, k3, k4, tmp;
  for (long s = 0; s < n; ++s) {
    k1 = f(x, y);
    for (int i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    k2 = f(x + 0.5 * h, tmp);
    for (int i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    k3 = f(x + 0.5 * h, tmp);
    for (int i = 0; i < N; ++i) tmp[i] = y[i] + h * k3[i];
    k4 = f(x + h, tmp);
    for (int i = 0; i < N; ++i) y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    x += h;
  }
  return y;
}

// Integrate from a to b with a fixed step count chosen from hmax.
template <int N, class F>
std::array<double, N> rk4_span(const F& f, double a, double b, std::array<double, N> y,
                               double hmax) {
  if (a == b) return y;
  long n = std::max(1L, (long)std::ceil(std::abs(b - a) / hmax));
  double h = (b - a) / n;
  return rk4_steps<N>(f, a, y, h, n);
}

// Dormand-Prince RK45 with adaptive step; deterministic given (f, a, b, y0, tol).
template <int N, class F>
std::array<double, N> rk45_span(const F& f, double a, double b, std::array<double, N> y,
                                double rtol = 1e-11, double atol = 1e-13,
                                double h_init = 0.0, long max_steps = 40'000'000L) {
  if (a == b) return y;
  const double dir = (b > a) ? 1.0 : -1.0;
  double x = a;
  double h = (h_init != 0.0) ? std::abs(h_init) : std::abs(b - a) / 100.0;
  h = std::min(h, std::abs(b - a));

  static const double c2 = 1. / 5, c3 = 3. / 10, c4 = 4. / 5, c5 = 8. / 9;
  static const double a21 = 1. / 5;
  static const double a31 = 3. / 40, a32 = 9. / 40;
  static const double a41 = 44. / 45, a42 = -56. / 15, a43 = 32. / 9;
  static const double a51 = 19372. / 6561, a52 = -25360. / 2187, a53 = 64448. / 6561,
                      a54 = -212. / 729;
  static const double a61 = 9017. / 3168, a62 = -355. / 33, a63 = 46732. / 5247,
                      a64 = 49. / 176, a65 = -5103. / 18656;
  static const double b1 = 35. / 384, b3 = 500. / 1113, b4 = 125. / 192, b5 = -2187. / 6784,
                      b6 = 11. / 84;
  static const double e1 = 71. / 57600, e3 = -71. / 16695, e4 = 71. / 1920,
                      e5 = -17253. / 339200, e6 = 22. / 525, e7 = -1. / 40;

  std::array<double, N> k1, k2, k3, k4, k5, k6, k7, tmp, ynew;
  k1 = f(x, y);
  for (long steps = 0; steps < max_steps; ++steps) {
    if (std::abs(x - b) < 1e-300) break;
    double hs = dir * std::min(h, std::abs(b - x));
    for (int i = 0; i < N; ++i) tmp[i] = y[i] + hs * a21 * k1[i];
    k2 = f(x + c2 * hs, tmp);
    for (int i = 0; i < N; ++i) tmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
    k3 = f(x + c3 * hs, tmp);
    for (int i = 0; i < N; ++i) tmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = f(x + c4 * hs, tmp);
    for (int i = 0; i < N; ++i)
      tmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = f(x + c5 * hs, tmp);
    for (int i = 0; i < N; ++i)
      tmp[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    k6 = f(x + hs, tmp);
    for (int i = 0; i < N; ++i)
      ynew[i] = y[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    k7 = f(x + hs, ynew);

    double err = 0;
    for (int i = 0; i < N; ++i) {
      double ei = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                        e7 * k7[i]);
      double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (ei / sc) * (ei / sc);
    }
    err = std::sqrt(err / N);
    if (err <= 1.0) {
      x += hs;
      y = ynew;
      k1 = k7;  // FSAL
      if (std::abs(x - b) < 1e-300 || (dir > 0 ? x >= b : x <= b)) break;
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    fac = std::min(5.0, std::max(0.2, fac));
    h = std::abs(hs) * fac;
    if (h < std::abs(b - a) * 1e-15)
      throw std::runtime_error("rk45_span: step size underflow (stiffness?) at x=" +
                               std::to_string(x));
  }
  return y;
}

}  // namespace t2w
