#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace t2w {

using Vec = std::vector<double>;
using CVec = std::vector<std::complex<double>>;

inline double sq(double x) { return x * x; }
inline double cube(double x) { return x * x * x; }

// Japanese bracket <y> = sqrt(1+y^2)
inline double jbr(double y) { return std::sqrt(1.0 + y * y); }

inline Vec linspace(double a, double b, int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

inline Vec logspace(double a, double b, int n) {
  Vec v(n);
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i) v[i] = std::exp(la + (lb - la) * i / (n - 1));
  v.front() = a;
  v.back() = b;
  return v;
}

// Composite Simpson weights for a uniform grid of n nodes (n odd).
// For even n the last interval falls back to trapezoid.
inline Vec simpson_weights(int n, double h) {
  if (n < 2) throw std::invalid_argument("simpson_weights: n < 2");
  Vec w(n, 0.0);
  int m = (n % 2 == 1) ? n : n - 1;
  for (int i = 0; i + 2 < m + 1; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (n % 2 == 0) {
    w[n - 2] += h / 2.0;
    w[n - 1] += h / 2.0;
  }
  return w;
}

struct LinFit {
  double slope = 0, intercept = 0, r2 = 0;
};

inline LinFit linear_fit(const Vec& x, const Vec& y) {
  const int n = static_cast<int>(x.size());
  if (n < 2 || y.size() != x.size()) throw std::invalid_argument("linear_fit: bad sizes");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  LinFit f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  double ssres = 0, sstot = 0, ym = sy / n;
  for (int i = 0; i < n; ++i) {
    ssres += sq(y[i] - (f.intercept + f.slope * x[i]));
    sstot += sq(y[i] - ym);
  }
  f.r2 = (sstot > 0) ? 1.0 - ssres / sstot : 1.0;
  return f;
}

inline double linf_norm(const Vec& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace t2w
