#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace t2w {

// 16-point Gauss-Legendre nodes/weights on [-1,1].
inline const std::array<double, 8>& gl16_nodes() {
  static const std::array<double, 8> x = {
      0.09501250983763744019, 0.28160355077925891323, 0.45801677765722738634,
      0.61787624440264374845, 0.75540440835500303390, 0.86563120238783174388,
      0.94457502307323257608, 0.98940093499164993260};
  return x;
}
inline const std::array<double, 8>& gl16_weights() {
  static const std::array<double, 8> w = {
      0.18945061045506849629, 0.18260341504492358887, 0.16915651939500253819,
      0.14959598881657673208, 0.12462897125553387205, 0.09515851168249278481,
      0.06225352393864789286, 0.02715245941175409485};
  return w;
}

template <class F>
double gl16(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0;
  const auto& xs = gl16_nodes();
  const auto& ws = gl16_weights();
  for (int i = 0; i < 8; ++i) s += ws[i] * (f(c - h * xs[i]) + f(c + h * xs[i]));
  return s * h;
}

namespace detail {
template <class F>
double adapt_rec(const F& f, double a, double b, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = gl16(f, a, m), right = gl16(f, m, b);
  const double err = std::abs(left + right - whole);
  if (err < tol || depth <= 0) return left + right;
  return adapt_rec(f, a, m, left, 0.5 * tol, depth - 1) +
         adapt_rec(f, m, b, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

// Adaptive Gauss-Legendre; tol is absolute.
template <class F>
double adaptive_quad(const F& f, double a, double b, double tol = 1e-12, int depth = 28) {
  if (a == b) return 0.0;
  return detail::adapt_rec(f, a, b, gl16(f, a, b), tol, depth);
}

}  // namespace t2w
